#include "qspinor/weyl.hpp"

#include <sstream>
#include <stdexcept>
#include <tuple>

namespace qspinor {

namespace {

const RatQ& q_commutator_unit() {
    // 1/(q - q^-1)
    static const RatQ v = (RatQ::q_power(1) - RatQ::q_power(-1)).inv();
    return v;
}

}  // namespace

const char* gen_name(Gen g) {
    switch (g) {
        case Gen::mu1: return "mu1";
        case Gen::mu2: return "mu2";
        case Gen::nu: return "nu";
        case Gen::g1: return "g1";
        case Gen::g2: return "g2";
        case Gen::w: return "w";
        case Gen::d1: return "d1";
        case Gen::d2: return "d2";
        case Gen::nab: return "nab";
    }
    return "?";
}

bool gen_invertible(Gen g) { return g == Gen::g1 || g == Gen::g2 || g == Gen::w; }

// ---------------- NormalMonomial ----------------

bool NormalMonomial::is_identity() const {
    return m1 == 0 && m2 == 0 && nu == 0 && g1 == 0 && g2 == 0 && w == 0 && d1 == 0 && d2 == 0 && nab == 0;
}

bool NormalMonomial::is_group_like() const {
    return m1 == 0 && m2 == 0 && nu == 0 && d1 == 0 && d2 == 0 && nab == 0;
}

NormalMonomial NormalMonomial::inverse() const {
    if (!is_group_like()) throw std::domain_error("monomial is not invertible");
    NormalMonomial r;
    r.g1 = -g1;
    r.g2 = -g2;
    r.w = -w;
    return r;
}

std::string NormalMonomial::to_string() const {
    const std::pair<const char*, int> parts[] = {
        {"mu1", m1}, {"mu2", m2}, {"nu", nu}, {"g1", g1}, {"g2", g2},
        {"w", w},    {"d1", d1},  {"d2", d2}, {"nab", nab},
    };
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, e] : parts) {
        if (e == 0) continue;
        if (!first) os << "*";
        os << name;
        if (e != 1) os << "^" << e;
        first = false;
    }
    if (first) return "1";
    return os.str();
}

// ---------------- AlgebraElement basics ----------------

AlgebraElement AlgebraElement::generator(Gen g, int power) {
    if (power == 0) return AlgebraElement(1);
    if (power < 0 && !gen_invertible(g))
        throw std::domain_error(std::string(gen_name(g)) + " is not invertible");
    NormalMonomial m;
    switch (g) {
        case Gen::mu1: m.m1 = power; break;
        case Gen::mu2: m.m2 = power; break;
        case Gen::nu: m.nu = power; break;
        case Gen::g1: m.g1 = power; break;
        case Gen::g2: m.g2 = power; break;
        case Gen::w: m.w = power; break;
        case Gen::d1: m.d1 = power; break;
        case Gen::d2: m.d2 = power; break;
        case Gen::nab: m.nab = power; break;
    }
    return monomial(m);
}

AlgebraElement AlgebraElement::monomial(const NormalMonomial& m, const RatQ& c) {
    AlgebraElement e;
    e.add_term(m, c);
    return e;
}

bool AlgebraElement::is_scalar() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.is_identity();
}

RatQ AlgebraElement::scalar_value() const {
    if (terms_.empty()) return RatQ();
    if (!is_scalar()) throw std::logic_error("AlgebraElement: not a scalar");
    return terms_.begin()->second;
}

void AlgebraElement::add_term(const NormalMonomial& m, const RatQ& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(const RatQ& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

AlgebraElement operator-(const AlgebraElement& a) {
    AlgebraElement r = a;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

// ---------------- the rewriting engine ----------------

namespace {

// exponents of one rank-one factor: mul^a grp^g der^b
struct FactorExp {
    int mul = 0, grp = 0, der = 0;
};

using FactorTerms = std::map<std::tuple<int, int, int>, RatQ>;  // (mul, grp, der) -> coeff

void factor_add(FactorTerms& acc, int a, int g, int b, const RatQ& c) {
    if (c.is_zero()) return;
    auto key = std::make_tuple(a, g, b);
    auto it = acc.find(key);
    if (it == acc.end()) {
        acc.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

// normal form of der^b mul^p as terms mul^{p'} grp^{-t} der^{s};
// one left multiplication by der per step:
//   der (mul^p grp^-t der^s) = q^{p-t} mul^p grp^-t der^{s+1}
//                              + [p]_q mul^{p-1} grp^{-(t+1)} der^s
FactorTerms exchange(int b, int p) {
    FactorTerms cur;
    cur.emplace(std::make_tuple(p, 0, 0), RatQ(1));
    for (int step = 0; step < b; ++step) {
        FactorTerms next;
        for (const auto& [key, c] : cur) {
            const auto [pp, mt, s] = key;  // mt stores -t (grp exponent), kept negative or 0
            factor_add(next, pp, mt, s + 1, c * RatQ::q_power(pp + mt));
            if (pp >= 1) factor_add(next, pp - 1, mt - 1, s, c * quantum_int(pp));
        }
        cur = std::move(next);
    }
    return cur;
}

// reduce mul^A grp^G der^B to canonical terms with min(mul, der) = 0 via
// mul grp^G der = q^{-G} (grp^{G+1} - grp^{G-1})/(q - q^-1)
void collapse(int A, int G, int B, const RatQ& c, FactorTerms& acc) {
    if (A == 0 || B == 0) {
        factor_add(acc, A, G, B, c);
        return;
    }
    const RatQ c2 = c * RatQ::q_power(-G) * q_commutator_unit();
    collapse(A - 1, G + 1, B - 1, c2, acc);
    collapse(A - 1, G - 1, B - 1, -c2, acc);
}

FactorTerms factor_mul(const FactorExp& L, const FactorExp& R) {
    FactorTerms acc;
    for (const auto& [key, c] : exchange(L.der, R.mul)) {
        const auto [p, mt, s] = key;
        const RatQ coeff = c * RatQ::q_power(L.grp * p + s * R.grp);
        collapse(L.mul + p, L.grp + mt + R.grp, s + R.der, coeff, acc);
    }
    return acc;
}

void mono_mul_into(const NormalMonomial& M, const NormalMonomial& N, const RatQ& scale, AlgebraElement& out) {
    const FactorTerms f1 = factor_mul({M.m1, M.g1, M.d1}, {N.m1, N.g1, N.d1});
    const FactorTerms f2 = factor_mul({M.m2, M.g2, M.d2}, {N.m2, N.g2, N.d2});
    const FactorTerms fc = factor_mul({M.nu, M.w, M.nab}, {N.nu, N.w, N.nab});
    for (const auto& [k1, c1] : f1)
        for (const auto& [k2, c2] : f2) {
            const RatQ c12 = scale * c1 * c2;
            for (const auto& [kc, cc] : fc) {
                NormalMonomial m;
                std::tie(m.m1, m.g1, m.d1) = k1;
                std::tie(m.m2, m.g2, m.d2) = k2;
                std::tie(m.nu, m.w, m.nab) = kc;
                out.add_term(m, c12 * cc);
            }
        }
}

}  // namespace

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement out;
    for (const auto& [M, cM] : a.terms_)
        for (const auto& [N, cN] : b.terms_) mono_mul_into(M, N, cM * cN, out);
    return out;
}

std::string AlgebraElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
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
        if (m.is_identity()) {
            os << cs;
        } else if (mag.is_one()) {
            os << m.to_string();
        } else {
            os << cs << "*" << m.to_string();
        }
        first = false;
    }
    return os.str();
}

// ---------------- derived constructions ----------------

AlgebraElement invert(const AlgebraElement& a) {
    if (!a.single_term()) throw std::domain_error("inverse requires a single invertible term");
    const auto& [m, c] = *a.terms().begin();
    return AlgebraElement::monomial(m.inverse(), c.inv());
}

AlgebraElement power(const AlgebraElement& a, int n) {
    if (n < 0) return power(invert(a), -n);
    AlgebraElement r(1);
    for (int i = 0; i < n; ++i) r = r * a;
    return r;
}

AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) { return a * b - b * a; }

AlgebraElement twisted_commutator(const AlgebraElement& a, const AlgebraElement& b, const RatQ& v) {
    return a * b - v * (b * a);
}

AlgebraElement brace(const AlgebraElement& a, int base) {
    if (!a.single_term()) throw std::domain_error("brace requires a single invertible term");
    const AlgebraElement inv_a = invert(a);
    const RatQ denom = RatQ::q_power(base) - RatQ::q_power(-base);
    return (a - inv_a) * denom.inv();
}

AlgebraElement shifted_derivative(int j, int m) {
    if (j != 1 && j != 2) throw std::domain_error("shifted_derivative: direction must be 1 or 2");
    if (m < 1) throw std::domain_error("shifted_derivative: shift must be >= 1");
    const RatQ scale = quantum_int(m).inv();
    AlgebraElement out;
    for (int k = m - 1; k >= 1 - m; k -= 2) {
        NormalMonomial mono;
        if (j == 1) {
            mono.g1 = k;
            mono.d1 = 1;
        } else {
            mono.g2 = k;
            mono.d2 = 1;
        }
        out.add_term(mono, scale * RatQ::q_power(k));
    }
    return out;
}

// ---------------- identity suite ----------------

namespace {

AlgebraElement mu(int j) { return AlgebraElement::generator(j == 1 ? Gen::mu1 : Gen::mu2); }
AlgebraElement dd(int j) { return AlgebraElement::generator(j == 1 ? Gen::d1 : Gen::d2); }
AlgebraElement gam(int j, int k) { return AlgebraElement::generator(j == 1 ? Gen::g1 : Gen::g2, k); }

std::string params_j(int j, int s) {
    std::ostringstream os;
    os << "j=" << j << ", sign=" << (s > 0 ? "+" : "-");
    return os.str();
}

std::string params_ijm(int i, int j, int m) {
    std::ostringstream os;
    os << "i=" << i << ", j=" << j << ", m=" << m;
    return os.str();
}

std::string params_ijs(int i, int j, int s) {
    std::ostringstream os;
    os << "i=" << i << ", j=" << j << ", sign=" << (s > 0 ? "+" : "-");
    return os.str();
}

}  // namespace

Report check_weyl_identities(int m_max) {
    Report rep;
    const RatQ two = quantum_int(2);

    for (int j = 1; j <= 2; ++j)
        for (int s : {1, -1}) {
            // [d_j, mu_j^2]_{q^{±2}} = q^{±1} [2]_q g_j^{∓1} mu_j
            AlgebraElement res = twisted_commutator(dd(j), power(mu(j), 2), RatQ::q_power(2 * s)) -
                                 RatQ::q_power(s) * two * (gam(j, -s) * mu(j));
            rep.add("weyl.deriv_vs_mu_sq", params_j(j, s), res.is_zero(), res.to_string());

            // [d_j^2, mu_j]_{q^{±2}} = [2]_q g_j^{∓1} d_j
            res = twisted_commutator(power(dd(j), 2), mu(j), RatQ::q_power(2 * s)) - two * (gam(j, -s) * dd(j));
            rep.add("weyl.deriv_sq_vs_mu", params_j(j, s), res.is_zero(), res.to_string());
        }

    for (int j = 1; j <= 2; ++j)
        for (int m = 1; m <= m_max; ++m)
            for (int s : {1, -1}) {
                // [d_{j,q^m}, mu_j]_{q^{±m}} = g_j^{∓m}
                AlgebraElement res =
                    twisted_commutator(shifted_derivative(j, m), mu(j), RatQ::q_power(s * m)) - gam(j, -s * m);
                std::ostringstream ps;
                ps << "j=" << j << ", m=" << m << ", sign=" << (s > 0 ? "+" : "-");
                rep.add("weyl.shifted_deriv_vs_mu", ps.str(), res.is_zero(), res.to_string());
            }

    for (int m = 1; m <= m_max; ++m)
        for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 1}}) {
            // [mu_i d_{j,q^m}, mu_j d_{i,q^m}] = {(g_i g_j^-1)^m}_{q^m}
            AlgebraElement res = commutator(mu(i) * shifted_derivative(j, m), mu(j) * shifted_derivative(i, m)) -
                                 brace(gam(i, m) * gam(j, -m), m);
            rep.add("weyl.cross_raising_pair", params_ijm(i, j, m), res.is_zero(), res.to_string());

            // [d_{i,q^m} d_{j,q^m}, mu_i mu_j] = {(q g_i g_j)^m}_{q^m}
            res = commutator(shifted_derivative(i, m) * shifted_derivative(j, m), mu(i) * mu(j)) -
                  brace(RatQ::q_power(m) * (gam(i, m) * gam(j, m)), m);
            rep.add("weyl.deriv_pair_vs_mu_pair", params_ijm(i, j, m), res.is_zero(), res.to_string());
        }

    const RatQ unit = (RatQ::q_power(1) - RatQ::q_power(-1)).inv();
    for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 1}})
        for (int s : {1, -1}) {
            const RatQ pm = RatQ(s) * unit;
            // [mu_i d_j, mu_j d_{i,q^2}]_{q^{±1}}
            AlgebraElement rhs = pm * (RatQ::q_power(s) * (gam(i, 2 * s) * gam(j, -s)) -
                                       RatQ::q_power(2 * s) / two * (gam(i, 2 * s) * gam(j, s)) -
                                       RatQ(1) / two * (gam(i, -2 * s) * gam(j, s)));
            AlgebraElement res =
                twisted_commutator(mu(i) * dd(j), mu(j) * shifted_derivative(i, 2), RatQ::q_power(s)) - rhs;
            rep.add("weyl.mixed_mu_deriv", params_ijs(i, j, s), res.is_zero(), res.to_string());

            // [d_{i,q^2} d_j, mu_i mu_j]_{q^{±1}}  (last factor read as g_j^{∓1})
            rhs = pm * (RatQ::q_power(2 * s) / two * (gam(i, 2 * s) * gam(j, s)) +
                        RatQ(1) / two * (gam(i, -2 * s) * gam(j, s)) -
                        RatQ::q_power(-s) * (gam(i, -2 * s) * gam(j, -s)));
            res = twisted_commutator(shifted_derivative(i, 2) * dd(j), mu(i) * mu(j), RatQ::q_power(s)) - rhs;
            rep.add("weyl.mixed_deriv_mu_pair", params_ijs(i, j, s), res.is_zero(), res.to_string());
        }

    return rep;
}

}  // namespace qspinor
