#include "qspinor/ratq.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

namespace qspinor {

namespace {

Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

Int gcd_int(const Int& a, const Int& b) {
    Int g = boost::multiprecision::gcd(a, b);
    return abs_int(g);
}

}  // namespace

// ---------------- QPoly ----------------

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::monomial(int exp, const Int& c) {
    QPoly p;
    p.add_term(exp, c);
    return p;
}

bool QPoly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

int QPoly::degree() const {
    if (is_zero()) throw std::logic_error("QPoly: degree of zero polynomial");
    return static_cast<int>(c_.size()) - 1;
}

int QPoly::trailing_degree() const {
    if (is_zero()) throw std::logic_error("QPoly: trailing degree of zero polynomial");
    for (std::size_t e = 0; e < c_.size(); ++e)
        if (c_[e] != 0) return static_cast<int>(e);
    return 0;
}

std::size_t QPoly::term_count() const {
    std::size_t n = 0;
    for (const Int& c : c_)
        if (c != 0) ++n;
    return n;
}

Int QPoly::coeff(int exp) const {
    if (exp < 0 || exp >= static_cast<int>(c_.size())) return Int(0);
    return c_[exp];
}

Int QPoly::leading_coeff() const {
    if (is_zero()) return Int(0);
    return c_.back();
}

Int QPoly::content() const {
    Int g = 0;
    for (const Int& c : c_) {
        if (c == 0) continue;
        g = gcd_int(g, c);
        if (g == 1) break;
    }
    return g;
}

void QPoly::add_term(int exp, const Int& c) {
    if (c == 0) return;
    if (exp < 0) throw std::logic_error("QPoly: negative exponent");
    if (exp >= static_cast<int>(c_.size())) c_.resize(exp + 1);
    c_[exp] += c;
    trim();
}

QPoly QPoly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    QPoly r;
    if (k > 0) {
        r.c_.resize(c_.size() + k);
        std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
    } else {
        if (trailing_degree() < -k) throw std::logic_error("QPoly: shift below q^0");
        r.c_.assign(c_.begin() - k, c_.end());
    }
    return r;
}

QPoly QPoly::primitive_part() const {
    if (is_zero()) return QPoly();
    Int ct = content();
    if (ct == 1) return *this;
    QPoly r;
    r.c_.reserve(c_.size());
    for (const Int& c : c_) r.c_.push_back(c / ct);
    return r;
}

QPoly QPoly::subs_q_power(int m) const {
    if (m < 1) throw std::logic_error("QPoly: substitution power must be >= 1");
    QPoly r;
    if (is_zero()) return r;
    r.c_.resize((c_.size() - 1) * m + 1);
    for (std::size_t e = 0; e < c_.size(); ++e) r.c_[e * m] = c_[e];
    return r;
}

Rat QPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        if (*it != 0) acc += Rat(*it);
    }
    return acc;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t e = 0; e < o.c_.size(); ++e) c_[e] += o.c_[e];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t e = 0; e < o.c_.size(); ++e) c_[e] -= o.c_[e];
    trim();
    return *this;
}

QPoly operator-(const QPoly& a) {
    QPoly r;
    r.c_.reserve(a.c_.size());
    for (const Int& c : a.c_) r.c_.push_back(-c);
    return r;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.resize(a.c_.size() + b.c_.size() - 1);
    for (std::size_t ea = 0; ea < a.c_.size(); ++ea) {
        if (a.c_[ea] == 0) continue;
        for (std::size_t eb = 0; eb < b.c_.size(); ++eb) {
            if (b.c_[eb] == 0) continue;
            r.c_[ea + eb] += a.c_[ea] * b.c_[eb];
        }
    }
    r.trim();
    return r;
}

QPoly operator*(const QPoly& a, const Int& c) {
    QPoly r;
    if (c == 0) return r;
    r.c_.reserve(a.c_.size());
    for (const Int& ca : a.c_) r.c_.push_back(ca * c);
    return r;
}

std::string QPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = static_cast<int>(c_.size()) - 1; e >= 0; --e) {
        const Int& c = c_[e];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Int mag = abs_int(c);
        if (e == 0) {
            os << mag;
        } else {
            if (mag != 1) os << mag << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

namespace {

// pseudo-remainder of a by b (leading coefficients never divided); the
// implicit lc(b)^k factor is irrelevant because callers take primitive parts
QPoly prem(QPoly r, const QPoly& b) {
    const int db = b.degree();
    const Int lcb = b.leading_coeff();
    while (!r.is_zero() && r.degree() >= db) {
        const int dr = r.degree();
        const Int lcr = r.leading_coeff();
        r = r * lcb - b.shifted(dr - db) * lcr;
    }
    return r;
}

}  // namespace

QPoly gcd(const QPoly& a, const QPoly& b) {
    if (a.is_zero() && b.is_zero()) return QPoly();
    if (a.is_zero()) return b.leading_coeff() < 0 ? -b : b;
    if (b.is_zero()) return a.leading_coeff() < 0 ? -a : a;
    Int c = gcd_int(a.content(), b.content());
    if (a.degree() == 0 || b.degree() == 0) return QPoly(c);
    QPoly x = a.primitive_part();
    QPoly y = b.primitive_part();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero() && y.degree() > 0) {
        QPoly r = prem(x, y).primitive_part();
        x = std::move(y);
        y = std::move(r);
    }
    if (!y.is_zero()) return QPoly(c);  // degree-0 remainder: coprime up to content
    if (x.leading_coeff() < 0) x = -x;
    return x * c;
}

QPoly divexact(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw std::logic_error("QPoly: division by zero");
    if (a.is_zero()) return QPoly();
    QPoly r = a;
    QPoly quo;
    const int db = b.degree();
    const Int lcb = b.leading_coeff();
    while (!r.is_zero() && r.degree() >= db) {
        const Int lcr = r.leading_coeff();
        if (lcr % lcb != 0) throw std::logic_error("QPoly: inexact division");
        const Int t = lcr / lcb;
        const int e = r.degree() - db;
        quo.add_term(e, t);
        r -= b.shifted(e) * t;
    }
    if (!r.is_zero()) throw std::logic_error("QPoly: inexact division");
    return quo;
}

// ---------------- RatQ ----------------

RatQ::RatQ(const Rat& r) : den_(Int(boost::multiprecision::denominator(r))) {
    num_ = QPoly(Int(boost::multiprecision::numerator(r)));
    canonicalize();
}

RatQ::RatQ(QPoly num, QPoly den, int shift) : shift_(shift), num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("division by zero in Q(q)");
    canonicalize();
}

RatQ RatQ::q_power(int k) {
    RatQ r(1);
    r.shift_ = k;
    return r;
}

RatQ RatQ::laurent_term(const Int& c, int exp) {
    RatQ r{c};
    if (!r.is_zero()) r.shift_ = exp;
    return r;
}

bool RatQ::is_integer() const {
    if (is_zero()) return true;
    return shift_ == 0 && den_.is_one() && num_.degree() == 0;
}

Int RatQ::integer_value() const {
    if (!is_integer()) throw std::logic_error("RatQ: not an integer constant");
    return num_.constant_term();
}

void RatQ::normalize_sign_and_shift() {
    if (num_.is_zero()) {
        shift_ = 0;
        den_ = QPoly(1);
        return;
    }
    const int tn = num_.trailing_degree();
    const int td = den_.trailing_degree();
    if (tn != 0) num_ = num_.shifted(-tn);
    if (td != 0) den_ = den_.shifted(-td);
    shift_ += tn - td;
    if (den_.leading_coeff() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

void RatQ::canonicalize() {
    normalize_sign_and_shift();
    if (num_.is_zero() || den_.is_one()) return;
    QPoly g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = divexact(num_, g);
        den_ = divexact(den_, g);
    }
    if (den_.leading_coeff() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatQ RatQ::inv() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(q)");
    RatQ r;
    r.shift_ = -shift_;
    r.num_ = den_;
    r.den_ = num_;
    r.normalize_sign_and_shift();  // already coprime
    return r;
}

RatQ RatQ::subs_q_power(int m) const {
    RatQ r;
    r.shift_ = shift_ * m;
    r.num_ = num_.subs_q_power(m);
    r.den_ = den_.subs_q_power(m);
    return r;
}

Rat RatQ::eval(const Rat& q0) const {
    if (q0 == 0) throw std::domain_error("pole at specialization");
    Rat d = den_.eval(q0);
    if (d == 0) throw std::domain_error("pole at specialization");
    Rat n = num_.eval(q0);
    Rat s = 1;
    const int k = shift_ >= 0 ? shift_ : -shift_;
    for (int i = 0; i < k; ++i) s *= q0;
    if (shift_ < 0) s = Rat(1) / s;
    return n / d * s;
}

RatQ& RatQ::operator+=(const RatQ& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    const int s = std::min(shift_, o.shift_);
    QPoly na = num_.shifted(shift_ - s);
    QPoly nb = o.num_.shifted(o.shift_ - s);
    if (den_ == o.den_) {
        num_ = na + nb;
    } else {
        num_ = na * o.den_ + nb * den_;
        den_ = den_ * o.den_;
    }
    shift_ = s;
    canonicalize();
    return *this;
}

RatQ& RatQ::operator-=(const RatQ& o) { return *this += -o; }

RatQ operator-(const RatQ& a) {
    RatQ r = a;
    r.num_ = -r.num_;
    return r;
}

RatQ& RatQ::operator*=(const RatQ& o) {
    if (is_zero() || o.is_zero()) {
        *this = RatQ();
        return *this;
    }
    // cross-reduction keeps the product coprime without a second gcd pass
    const QPoly g1 = o.den_.is_one() ? QPoly(1) : gcd(num_, o.den_);
    const QPoly g2 = den_.is_one() ? QPoly(1) : gcd(o.num_, den_);
    num_ = (g1.is_one() ? num_ : divexact(num_, g1)) * (g2.is_one() ? o.num_ : divexact(o.num_, g2));
    den_ = (g2.is_one() ? den_ : divexact(den_, g2)) * (g1.is_one() ? o.den_ : divexact(o.den_, g1));
    shift_ += o.shift_;
    normalize_sign_and_shift();
    return *this;
}

RatQ& RatQ::operator/=(const RatQ& o) { return *this *= o.inv(); }

bool RatQ::is_negative() const {
    if (is_zero()) return false;
    return num_.leading_coeff() < 0;
}

namespace {

// Laurent rendering of num * q^shift, descending exponents
std::string laurent_string(const QPoly& num, int shift) {
    std::ostringstream os;
    bool first = true;
    for (int e = num.degree(); e >= 0; --e) {
        const Int c = num.coeff(e);
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Int mag = c < 0 ? Int(-c) : c;
        const int exp = e + shift;
        if (exp == 0) {
            os << mag;
        } else {
            if (mag != 1) os << mag << "*";
            os << "q";
            if (exp != 1) os << "^" << exp;
        }
        first = false;
    }
    return os.str();
}

}  // namespace

std::string RatQ::to_string() const {
    if (is_zero()) return "0";
    if (den_.is_one()) return laurent_string(num_, shift_);
    std::string n = laurent_string(num_, shift_);
    if (num_.term_count() > 1) n = "(" + n + ")";
    return n + "/(" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatQ& a) { return os << a.to_string(); }

}  // namespace qspinor
