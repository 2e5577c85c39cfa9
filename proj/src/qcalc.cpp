#include "qspinor/qcalc.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace qspinor {

namespace {

RatQ quantum_int_build(int n) {
    // q^{n-1} + q^{n-3} + ... + q^{1-n}
    QPoly p;
    for (int i = 0; i < n; ++i) p.add_term(2 * i, 1);
    return RatQ(std::move(p), QPoly(1), 1 - n);
}

}  // namespace

RatQ quantum_int(int n) {
    if (n == 0) return RatQ();
    if (n < 0) return -quantum_int(-n);
    static const std::vector<RatQ> small = [] {
        std::vector<RatQ> t;
        for (int i = 1; i <= 64; ++i) t.push_back(quantum_int_build(i));
        return t;
    }();
    if (n <= 64) return small[n - 1];
    return quantum_int_build(n);
}

RatQ quantum_int_base(int n, int base) { return quantum_int(n).subs_q_power(base); }

RatQ quantum_factorial(int n) {
    if (n < 0) throw std::domain_error("quantum_factorial: negative argument");
    RatQ r(1);
    for (int m = 2; m <= n; ++m) r *= quantum_int(m);
    return r;
}

RatQ quantum_binomial(int n, int m) {
    if (m < 0 || m > n) return RatQ();
    return quantum_factorial(n) / (quantum_factorial(m) * quantum_factorial(n - m));
}

RatQ quantum_binomial_base(int n, int m, int base) {
    return quantum_binomial(n, m).subs_q_power(base);
}

RatQ quantum_odd_double_factorial(int b) {
    if (b < 0) throw std::domain_error("quantum_odd_double_factorial: negative argument");
    RatQ r(1);
    for (int l = 1; l <= b; ++l) r *= quantum_int(2 * l + 1);
    return r;
}

// ---------------- UniPoly ----------------

UniPoly UniPoly::monomial(int exp, const RatQ& c) {
    UniPoly p;
    p.add_term(exp, c);
    return p;
}

void UniPoly::add_term(int exp, const RatQ& c) {
    if (c.is_zero()) return;
    if (exp < 0) throw std::logic_error("UniPoly: negative exponent");
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

UniPoly UniPoly::scale_argument(const RatQ& s) const {
    UniPoly r;
    RatQ p(1);
    int prev = 0;
    for (const auto& [e, c] : terms_) {
        for (int i = prev; i < e; ++i) p *= s;
        prev = e;
        r.add_term(e, c * p);
    }
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

UniPoly operator*(const UniPoly& a, const RatQ& c) {
    UniPoly r;
    for (const auto& [e, ca] : a.terms_) r.add_term(e, ca * c);
    return r;
}

std::string UniPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        os << "(" << it->second.to_string() << ")";
        if (it->first > 0) {
            os << "*x";
            if (it->first != 1) os << "^" << it->first;
        }
        first = false;
    }
    return os.str();
}

// ---------------- divided differences ----------------

namespace {

UniPoly divided_difference_once(const UniPoly& phi) {
    // on x^m the quotient (q^{2m} - 1)/(q^2 - 1) survives at x^{m-1}
    const RatQ qq = RatQ::q_power(2) - RatQ(1);
    UniPoly r;
    for (const auto& [m, c] : phi.terms()) {
        if (m == 0) continue;
        RatQ factor = (RatQ::q_power(2 * m) - RatQ(1)) / qq;
        r.add_term(m - 1, c * factor);
    }
    return r;
}

}  // namespace

UniPoly divided_difference(const UniPoly& phi, int order) {
    if (order < 0) throw std::domain_error("divided_difference: negative order");
    UniPoly r = phi;
    for (int i = 0; i < order; ++i) r = divided_difference_once(r);
    return r;
}

bool check_twisted_leibniz(const UniPoly& phi, const UniPoly& psi) {
    const UniPoly lhs = divided_difference(phi * psi, 1);
    const UniPoly rhs =
        phi.scale_argument(RatQ::q_power(2)) * divided_difference(psi, 1) + divided_difference(phi, 1) * psi;
    return lhs == rhs;
}

bool check_q_binomial_theorem(int n) {
    if (n < 0) throw std::domain_error("check_q_binomial_theorem: negative argument");
    UniPoly lhs{RatQ(1)};
    for (int l = 1; l <= n; ++l) {
        UniPoly f{RatQ(1)};
        f.add_term(1, RatQ::q_power(2 * l));
        lhs = lhs * f;
    }
    UniPoly rhs;
    for (int l = 0; l <= n; ++l)
        rhs.add_term(l, quantum_binomial(n, l) * RatQ::q_power((n + 1) * l));
    return lhs == rhs;
}

bool check_alternating_binomial_identity(int N, int n, int j) {
    if (!(N >= n && n >= 1 && 0 <= j && j < n))
        throw std::domain_error("check_alternating_binomial_identity: need N >= n >= 1 and 0 <= j < n");
    RatQ sum;
    for (int l = 0; l <= n; ++l) {
        RatQ term = quantum_binomial(n, l) * quantum_binomial(N + l, j) * RatQ::q_power(l * (j - (n - 1)));
        if (l % 2 == 1) term = -term;
        sum += term;
    }
    return sum.is_zero();
}

}  // namespace qspinor
