/**
 * @file ratq.hpp
 * @brief Exact arithmetic in the field Q(q) of rational functions in q.
 *
 * QPoly is a sparse integer-coefficient polynomial in q. RatQ is the field
 * element q^shift * num/den with num, den coprime integer polynomials whose
 * constant terms are nonzero (all pure q-powers live in the shift) and den
 * has positive leading coefficient. This makes equality structural.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace qspinor {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

class QPoly {
public:
    QPoly() = default;
    QPoly(int c) { add_term(0, Int(c)); }
    QPoly(const Int& c) { add_term(0, c); }

    static QPoly monomial(int exp, const Int& c = Int(1));

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;

    // degree/trailing_degree require a nonzero polynomial
    int degree() const;
    int trailing_degree() const;

    // dense coefficients, index = q-exponent; interior zeros possible,
    // leading entry nonzero
    const std::vector<Int>& dense() const { return c_; }
    std::size_t term_count() const;
    Int coeff(int exp) const;
    Int leading_coeff() const;
    Int constant_term() const { return coeff(0); }
    Int content() const;  // gcd of coefficients, nonnegative; 0 for zero

    void add_term(int exp, const Int& c);

    QPoly shifted(int k) const;      // multiply by q^k; requires trailing_degree() >= -k
    QPoly primitive_part() const;    // divide out content (sign of leading coeff kept)
    QPoly subs_q_power(int m) const; // q -> q^m, m >= 1

    Rat eval(const Rat& x) const;

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator-(const QPoly& a);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const Int& c);

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    std::string to_string() const;  // descending powers, e.g. "q^4 + q^2 + 1"

private:
    void trim();

    std::vector<Int> c_;  // c_[e] = coefficient of q^e; trimmed so back() != 0
};

QPoly gcd(const QPoly& a, const QPoly& b);       // positive leading coefficient
QPoly divexact(const QPoly& a, const QPoly& b);  // throws std::logic_error if not exact

class RatQ {
public:
    RatQ() : den_(1) {}
    RatQ(int n) : num_(n), den_(1) { canonicalize(); }
    RatQ(const Int& n) : num_(n), den_(1) { canonicalize(); }
    RatQ(const Rat& r);
    RatQ(QPoly num, QPoly den, int shift = 0);

    static RatQ q_power(int k);                       // q^k
    static RatQ laurent_term(const Int& c, int exp);  // c * q^exp

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return shift_ == 0 && num_.is_one() && den_.is_one(); }
    bool is_laurent() const { return den_.is_one(); }
    // true when the value is a plain integer constant (no q dependence)
    bool is_integer() const;
    Int integer_value() const;  // requires is_integer()

    int shift() const { return shift_; }
    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    RatQ inv() const;  // throws std::domain_error on zero
    RatQ subs_q_power(int m) const;

    // exact evaluation at a rational point; throws std::domain_error for
    // q0 = 0 or when the (reduced) denominator vanishes at q0
    Rat eval(const Rat& q0) const;

    RatQ& operator+=(const RatQ& o);
    RatQ& operator-=(const RatQ& o);
    RatQ& operator*=(const RatQ& o);
    RatQ& operator/=(const RatQ& o);
    friend RatQ operator+(RatQ a, const RatQ& b) { return a += b; }
    friend RatQ operator-(RatQ a, const RatQ& b) { return a -= b; }
    friend RatQ operator*(RatQ a, const RatQ& b) { return a *= b; }
    friend RatQ operator/(RatQ a, const RatQ& b) { return a /= b; }
    friend RatQ operator-(const RatQ& a);

    friend bool operator==(const RatQ& a, const RatQ& b) {
        return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatQ& a, const RatQ& b) { return !(a == b); }

    // leading sign of the numerator (canonical sign lives there)
    bool is_negative() const;

    // canonical text: Laurent rendering when den == 1, otherwise "num/(den)"
    std::string to_string() const;

private:
    void canonicalize();
    void normalize_sign_and_shift();  // cheap part: trailing powers + den sign

    int shift_ = 0;
    QPoly num_;  // zero, or nonzero constant term
    QPoly den_;  // nonzero constant term, positive leading coefficient
};

std::ostream& operator<<(std::ostream& os, const RatQ& a);

}  // namespace qspinor
