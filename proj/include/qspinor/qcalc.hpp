/**
 * @file qcalc.hpp
 * @brief Quantum integers, factorials, binomials and the divided-difference
 *        calculus on one-variable polynomials over Q(q).
 */
#pragma once

#include "qspinor/ratq.hpp"

#include <map>

namespace qspinor {

// [n]_q = (q^n - q^-n)/(q - q^-1); antisymmetric in n
RatQ quantum_int(int n);
// [n]_{q^m}
RatQ quantum_int_base(int n, int base);
// [n]_q!; n >= 0
RatQ quantum_factorial(int n);
// [n over m]_q; 0 outside 0 <= m <= n
RatQ quantum_binomial(int n, int m);
RatQ quantum_binomial_base(int n, int m, int base);
// [2b+1]_q!! = [1]_q [3]_q ... [2b+1]_q; b >= 0
RatQ quantum_odd_double_factorial(int b);

// Polynomial in one commuting variable x with RatQ coefficients.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(const RatQ& c) { add_term(0, c); }

    static UniPoly monomial(int exp, const RatQ& c = RatQ(1));

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, RatQ>& terms() const { return terms_; }

    void add_term(int exp, const RatQ& c);

    // x -> s*x, coefficientwise c_m *= s^m
    UniPoly scale_argument(const RatQ& s) const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const RatQ& c);

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    std::string to_string() const;

private:
    std::map<int, RatQ> terms_;  // x-exponent -> coefficient, no zeros
};

// iterated divided difference (f(q^2 x) - f(x)) / (q^2 x - x)
UniPoly divided_difference(const UniPoly& phi, int order);

// delta_q(phi psi) == phi(q^2 x) delta_q(psi) + delta_q(phi) psi, exactly
bool check_twisted_leibniz(const UniPoly& phi, const UniPoly& psi);

// prod_{l=1..n} (1 + q^{2l} x) == sum_l [n over l]_q q^{(n+1)l} x^l, exactly
bool check_q_binomial_theorem(int n);

// sum_{l=0..n} (-1)^l [n over l]_q [N+l over j]_q q^{l(j-(n-1))} == 0;
// requires N >= n >= 1 and 0 <= j < n
bool check_alternating_binomial_identity(int N, int n, int j);

}  // namespace qspinor
