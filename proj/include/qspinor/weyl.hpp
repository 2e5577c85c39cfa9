/**
 * @file weyl.hpp
 * @brief The operator algebra of two q-Weyl directions tensored with one
 *        symplectic Clifford direction, as canonically normal-ordered sums.
 *
 * Generators, in normal order:
 *   mu1 mu2 nu | g1 g2 w | d1 d2 nab
 * (multiplication operators, then invertible degree operators, then
 * q-derivatives; nu/w/nab are the Clifford copies of mu/g/d).
 *
 * Same-index defining relations, per rank-one factor (the other pairings
 * q-commute or commute):
 *   g mu = q mu g,   g d = q^-1 d g,
 *   d mu = q mu d + g^-1,   mu d = (g - g^-1)/(q - q^-1).
 * The last relation makes monomials carrying both a mu- and a d-power in the
 * same direction reducible; canonical monomials have min(mul, der) = 0 in
 * each factor, which is what makes normal forms unique.
 */
#pragma once

#include "qspinor/qcalc.hpp"
#include "qspinor/report.hpp"

#include <map>
#include <string>
#include <vector>

namespace qspinor {

enum class Gen { mu1, mu2, nu, g1, g2, w, d1, d2, nab };

const char* gen_name(Gen g);
bool gen_invertible(Gen g);  // true for g1, g2, w

struct NormalMonomial {
    int m1 = 0, m2 = 0, nu = 0;   // multiplication exponents, >= 0
    int g1 = 0, g2 = 0, w = 0;    // degree-operator exponents, any sign
    int d1 = 0, d2 = 0, nab = 0;  // derivative exponents, >= 0

    bool is_identity() const;
    bool is_group_like() const;  // only g1/g2/w possibly nonzero
    // P2-degree shift of the induced action
    int degree_shift() const { return m1 + m2 - d1 - d2; }

    NormalMonomial inverse() const;  // requires group_like

    auto key() const { return std::tie(m1, m2, nu, g1, g2, w, d1, d2, nab); }
    friend bool operator<(const NormalMonomial& a, const NormalMonomial& b) { return a.key() < b.key(); }
    friend bool operator==(const NormalMonomial& a, const NormalMonomial& b) { return a.key() == b.key(); }

    std::string to_string() const;  // "mu1*g1^-1*d2"; identity -> "1"
};

class AlgebraElement {
public:
    AlgebraElement() = default;
    AlgebraElement(int c) { add_term(NormalMonomial{}, RatQ(c)); }
    AlgebraElement(const RatQ& c) { add_term(NormalMonomial{}, c); }

    static AlgebraElement generator(Gen g, int power = 1);
    static AlgebraElement monomial(const NormalMonomial& m, const RatQ& c = RatQ(1));

    bool is_zero() const { return terms_.empty(); }
    bool is_scalar() const;  // zero or a multiple of the identity monomial
    RatQ scalar_value() const;
    bool single_term() const { return terms_.size() == 1; }

    const std::map<NormalMonomial, RatQ>& terms() const { return terms_; }
    void add_term(const NormalMonomial& m, const RatQ& c);

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    AlgebraElement& operator*=(const RatQ& c);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator-(const AlgebraElement& a);
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator*(AlgebraElement a, const RatQ& c) { return a *= c; }
    friend AlgebraElement operator*(const RatQ& c, AlgebraElement a) { return a *= c; }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

    std::string to_string() const;

private:
    std::map<NormalMonomial, RatQ> terms_;  // canonical: no zero coefficients
};

// inverse of a single invertible term (scalar times group-like monomial)
AlgebraElement invert(const AlgebraElement& a);

// a^n; negative n through invert
AlgebraElement power(const AlgebraElement& a, int n);

AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b);
// AB - v BA
AlgebraElement twisted_commutator(const AlgebraElement& a, const AlgebraElement& b, const RatQ& v);

// (a - a^-1)/(q^base - q^-base) for an invertible single term
AlgebraElement brace(const AlgebraElement& a, int base = 1);

// shifted q-derivative in direction j (1 or 2): d_j [m]_{g_j} / [m]_q, m >= 1
AlgebraElement shifted_derivative(int j, int m);

// the seven commutation identities of the rank-two algebra, both signs,
// shift parameter up to m_max
Report check_weyl_identities(int m_max);

}  // namespace qspinor
