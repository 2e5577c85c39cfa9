/**
 * @file spinor.hpp
 * @brief Polynomial symplectic spinors: finitely supported exact vectors
 *        x1^a x2^b y^c and the action of algebra elements on them.
 */
#pragma once

#include "qspinor/weyl.hpp"

#include <map>
#include <optional>

namespace qspinor {

struct SpinorKey {
    int a = 0, b = 0, c = 0;  // x1^a x2^b y^c, all >= 0

    int degree() const { return a + b; }
    // exponent e of the diagonal weight q^e; always odd
    int weight_exponent() const { return 2 * (a - b + c) + 1; }

    auto key() const { return std::tie(a, b, c); }
    friend bool operator<(const SpinorKey& x, const SpinorKey& y) { return x.key() < y.key(); }
    friend bool operator==(const SpinorKey& x, const SpinorKey& y) { return x.key() == y.key(); }

    std::string to_string() const;  // "x1^a x2^b y^c"; empty -> "1"
};

enum class Parity { plus, minus };  // plus: even y-power, minus: odd

class SpinorVector {
public:
    SpinorVector() = default;

    static SpinorVector monomial(int a, int b, int c, const RatQ& coeff = RatQ(1));

    bool is_zero() const { return terms_.empty(); }
    const std::map<SpinorKey, RatQ>& terms() const { return terms_; }
    RatQ coeff(const SpinorKey& k) const;
    void add_term(const SpinorKey& k, const RatQ& c);

    // homogeneous polynomial degree, if defined (zero vector has none)
    std::optional<int> homogeneous_degree() const;
    // degree of a homogeneous nonzero vector; throws otherwise
    int degree() const;

    SpinorVector degree_component(int d) const;
    SpinorVector weight_component(int e) const;
    SpinorVector parity_component(Parity p) const;

    SpinorVector& operator+=(const SpinorVector& o);
    SpinorVector& operator-=(const SpinorVector& o);
    SpinorVector& operator*=(const RatQ& c);
    friend SpinorVector operator+(SpinorVector a, const SpinorVector& b) { return a += b; }
    friend SpinorVector operator-(SpinorVector a, const SpinorVector& b) { return a -= b; }
    friend SpinorVector operator*(SpinorVector a, const RatQ& c) { return a *= c; }
    friend SpinorVector operator*(const RatQ& c, SpinorVector a) { return a *= c; }
    friend SpinorVector operator-(const SpinorVector& a);

    friend bool operator==(const SpinorVector& a, const SpinorVector& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const SpinorVector& a, const SpinorVector& b) { return !(a == b); }

    std::string to_string() const;

private:
    std::map<SpinorKey, RatQ> terms_;  // no zero coefficients
};

// action of a normal-ordered element: per monomial, derivatives first,
// then degree operators, then multiplication operators
SpinorVector apply(const AlgebraElement& op, const SpinorVector& v);

// op applied n times
SpinorVector apply_power(const AlgebraElement& op, int n, const SpinorVector& v);

}  // namespace qspinor
