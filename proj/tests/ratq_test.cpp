#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "laurent_oracle.hpp"
#include "qspinor/ratq.hpp"

using namespace qspinor;

namespace {

RatQ qpow(int k) { return RatQ::q_power(k); }

}  // namespace

TEST_CASE("canonical form invariants") {
    // (q^2 - 1)/(q - 1) reduces to q + 1
    RatQ a(QPoly::monomial(2) - QPoly(1), QPoly::monomial(1) - QPoly(1));
    RatQ b = qpow(1) + RatQ(1);
    CHECK(a == b);
    CHECK(a.is_laurent());

    // pure q powers live in the shift, denominators keep a constant term
    RatQ c(QPoly::monomial(3, Int(2)), QPoly::monomial(1));
    CHECK(c.shift() == 2);
    CHECK(c.num().constant_term() == 2);
    CHECK(c.den().is_one());

    // denominator sign is normalized to a positive leading coefficient
    RatQ d(QPoly(1), QPoly(-2) - QPoly::monomial(1));
    CHECK(d.den().leading_coeff() > 0);
    CHECK(d.num().constant_term() < 0);
}

TEST_CASE("field operation examples") {
    const RatQ two_q = qpow(1) + qpow(-1);           // [2]_q
    const RatQ comm = qpow(1) - qpow(-1);            // q - q^-1
    const RatQ four = qpow(2) - qpow(-2);            // q^2 - q^-2
    const RatQ lhs = two_q * comm.inv() * four;

    oracle::Laurent expect = oracle::mul(oracle::qint(2), oracle::qint(2));
    CHECK(oracle::from_ratq(lhs) == expect);

    RatQ a(QPoly::monomial(2, Int(3)) + QPoly(5), QPoly::monomial(1) + QPoly(7), -4);
    CHECK((a + (-a)).is_zero());
    CHECK(RatQ(1) * a == a);
    CHECK((a * a.inv()).is_one());
    CHECK_THROWS_AS(RatQ().inv(), std::domain_error);
}

TEST_CASE("equality is decided by the canonical form") {
    // same value assembled along two routes
    const RatQ x = (qpow(2) - qpow(-2)) / (qpow(1) - qpow(-1));
    const RatQ y = qpow(1) + qpow(-1);
    CHECK(x == y);
    // structural equality matches cross multiplication
    auto cross_equal = [](const RatQ& a, const RatQ& b) {
        const RatQ lhs(a.num() * b.den(), QPoly(1), a.shift());
        const RatQ rhs(b.num() * a.den(), QPoly(1), b.shift());
        return lhs == rhs;
    };
    const RatQ z = qpow(1) - qpow(-1);
    CHECK(cross_equal(x, y));
    CHECK_FALSE(cross_equal(x, z));
    CHECK(x != z);
}

TEST_CASE("evaluation at rational points") {
    const RatQ three = qpow(2) + RatQ(1) + qpow(-2);  // [3]_q
    CHECK(three.eval(Rat(2)) == Rat(21, 4));
    CHECK(three.eval(Rat(1)) == Rat(3));

    const RatQ pole(QPoly(1), QPoly::monomial(1) - QPoly(1));  // 1/(q-1)
    CHECK_THROWS_AS(pole.eval(Rat(1)), std::domain_error);
    CHECK_THROWS_AS(three.eval(Rat(0)), std::domain_error);
}

TEST_CASE("substitution q -> q^m") {
    const RatQ two = qpow(1) + qpow(-1);
    const RatQ two_sq = two.subs_q_power(2);
    CHECK(two_sq == qpow(2) + qpow(-2));
    const RatQ half = two.inv();
    CHECK(half.subs_q_power(3) * two.subs_q_power(3) == RatQ(1));
}

TEST_CASE("canonical text rendering") {
    CHECK((qpow(2) + RatQ(1) + qpow(-2)).to_string() == "q^2 + 1 + q^-2");
    CHECK((-(qpow(1) + qpow(-1))).to_string() == "-q - q^-1");
    CHECK(RatQ().to_string() == "0");
    CHECK(RatQ(Int(-7)).to_string() == "-7");
    CHECK(RatQ::laurent_term(Int(3), -2).to_string() == "3*q^-2");
    // denominators are printed parenthesized with the shift folded into the numerator
    const RatQ inv3 = (qpow(2) + RatQ(1) + qpow(-2)).inv();
    CHECK(inv3.to_string() == "q^2/(q^4 + q^2 + 1)");
}

TEST_CASE("big coefficients stay exact") {
    RatQ big(1);
    for (int i = 0; i < 40; ++i) big *= RatQ(Int(1) << 20);
    RatQ back = big;
    for (int i = 0; i < 40; ++i) back /= RatQ(Int(1) << 20);
    CHECK(back.is_one());
    CHECK(big.num().constant_term() == Int(1) << 800);
}
