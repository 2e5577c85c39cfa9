// Test-only brute-force Laurent polynomials over int64. Deliberately
// independent of the library's arithmetic: plain maps, no reduction logic.
#pragma once

#include "qspinor/ratq.hpp"

#include <map>
#include <stdexcept>

namespace oracle {

using Laurent = std::map<int, long long>;

inline void add_term(Laurent& p, int e, long long c) {
    if (c == 0) return;
    auto [it, fresh] = p.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

inline Laurent mul(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) add_term(r, ea + eb, ca * cb);
    return r;
}

inline Laurent add(const Laurent& a, const Laurent& b) {
    Laurent r = a;
    for (const auto& [e, c] : b) add_term(r, e, c);
    return r;
}

inline Laurent qint(int n) {
    Laurent r;
    if (n == 0) return r;
    const int sign = n > 0 ? 1 : -1;
    const int m = n * sign;
    for (int e = m - 1; e >= 1 - m; e -= 2) add_term(r, e, sign);
    return r;
}

// conversion for comparison; requires a Laurent-polynomial RatQ
inline Laurent from_ratq(const qspinor::RatQ& a) {
    if (!a.is_laurent()) throw std::logic_error("oracle: RatQ has a denominator");
    Laurent r;
    const auto& dense = a.num().dense();
    for (std::size_t e = 0; e < dense.size(); ++e)
        if (dense[e] != 0) add_term(r, static_cast<int>(e) + a.shift(), dense[e].convert_to<long long>());
    return r;
}

}  // namespace oracle
