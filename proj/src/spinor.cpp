#include "qspinor/spinor.hpp"

#include <sstream>
#include <stdexcept>

namespace qspinor {

std::string SpinorKey::to_string() const {
    std::ostringstream os;
    bool first = true;
    const std::pair<const char*, int> parts[] = {{"x1", a}, {"x2", b}, {"y", c}};
    for (const auto& [name, e] : parts) {
        if (e == 0) continue;
        if (!first) os << " ";
        os << name;
        if (e != 1) os << "^" << e;
        first = false;
    }
    if (first) return "1";
    return os.str();
}

SpinorVector SpinorVector::monomial(int a, int b, int c, const RatQ& coeff) {
    if (a < 0 || b < 0 || c < 0) throw std::domain_error("spinor monomial: negative exponent");
    SpinorVector v;
    v.add_term({a, b, c}, coeff);
    return v;
}

RatQ SpinorVector::coeff(const SpinorKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? RatQ() : it->second;
}

void SpinorVector::add_term(const SpinorKey& k, const RatQ& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::optional<int> SpinorVector::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    const int d = terms_.begin()->first.degree();
    for (const auto& [k, c] : terms_)
        if (k.degree() != d) return std::nullopt;
    return d;
}

int SpinorVector::degree() const {
    auto d = homogeneous_degree();
    if (!d) throw std::domain_error("spinor vector is not homogeneous");
    return *d;
}

SpinorVector SpinorVector::degree_component(int d) const {
    SpinorVector r;
    for (const auto& [k, c] : terms_)
        if (k.degree() == d) r.terms_.emplace(k, c);
    return r;
}

SpinorVector SpinorVector::weight_component(int e) const {
    SpinorVector r;
    for (const auto& [k, c] : terms_)
        if (k.weight_exponent() == e) r.terms_.emplace(k, c);
    return r;
}

SpinorVector SpinorVector::parity_component(Parity p) const {
    SpinorVector r;
    const int want = p == Parity::plus ? 0 : 1;
    for (const auto& [k, c] : terms_)
        if (k.c % 2 == want) r.terms_.emplace(k, c);
    return r;
}

SpinorVector& SpinorVector::operator+=(const SpinorVector& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

SpinorVector& SpinorVector::operator-=(const SpinorVector& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

SpinorVector& SpinorVector::operator*=(const RatQ& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

SpinorVector operator-(const SpinorVector& a) {
    SpinorVector r = a;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

std::string SpinorVector::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [k, c] = *it;
        const bool neg = c.is_negative();
        const RatQ mag = neg ? -c : c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        const bool composite = mag.num().term_count() > 1 || !mag.den().is_one();
        std::string cs = mag.to_string();
        if (composite) cs = "(" + cs + ")";
        if (k == SpinorKey{}) {
            os << cs;
        } else if (mag.is_one()) {
            os << k.to_string();
        } else {
            os << cs << " " << k.to_string();
        }
        first = false;
    }
    return os.str();
}

namespace {

// product [n]_q [n-1]_q ... [n-count+1]_q; zero when the range hits [0]_q
RatQ falling_bracket(int n, int count) {
    if (count > n) return RatQ();
    RatQ r(1);
    for (int i = 0; i < count; ++i) r *= quantum_int(n - i);
    return r;
}

}  // namespace

SpinorVector apply(const AlgebraElement& op, const SpinorVector& v) {
    SpinorVector out;
    for (const auto& [m, coeff] : op.terms()) {
        for (const auto& [k, vc] : v.terms()) {
            // derivatives
            if (k.a < m.d1 || k.b < m.d2 || k.c < m.nab) continue;
            RatQ c = falling_bracket(k.a, m.d1) * falling_bracket(k.b, m.d2) * falling_bracket(k.c, m.nab);
            if (c.is_zero()) continue;
            const int a1 = k.a - m.d1, b1 = k.b - m.d2, c1 = k.c - m.nab;
            // degree operators
            const int qexp = m.g1 * a1 + m.g2 * b1 + m.w * c1;
            c *= RatQ::q_power(qexp) * coeff * vc;
            // multiplication operators
            out.add_term({a1 + m.m1, b1 + m.m2, c1 + m.nu}, c);
        }
    }
    return out;
}

SpinorVector apply_power(const AlgebraElement& op, int n, const SpinorVector& v) {
    if (n < 0) throw std::domain_error("apply_power: negative power");
    SpinorVector r = v;
    for (int i = 0; i < n && !r.is_zero(); ++i) r = apply(op, r);
    return r;
}

}  // namespace qspinor
