#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qspinor/duality.hpp"
#include "qspinor/expr.hpp"
#include "qspinor/verify.hpp"

using namespace qspinor;

namespace {

AlgebraElement gen(Gen g, int p = 1) { return AlgebraElement::generator(g, p); }

}  // namespace

TEST_CASE("operator expressions") {
    CHECK(parse_operator("mu1") == gen(Gen::mu1));
    CHECK(parse_operator("g1^-3") == gen(Gen::g1, -3));
    CHECK(parse_operator("q^2*mu1*d2") == RatQ::q_power(2) * (gen(Gen::mu1) * gen(Gen::d2)));
    CHECK(parse_operator("2 + q - q^-1") ==
          AlgebraElement(RatQ(2) + RatQ::q_power(1) - RatQ::q_power(-1)));
    CHECK(parse_operator("(mu1 + nu)^2") == power(gen(Gen::mu1) + gen(Gen::nu), 2));
    CHECK(parse_operator("-nab^2") == -power(gen(Gen::nab), 2));
    CHECK(parse_operator("qint(3)") == AlgebraElement(quantum_int(3)));
    CHECK(parse_operator("qbinom(4,2)") == AlgebraElement(quantum_binomial(4, 2)));

    // named operators match the triple builders
    CHECK(parse_operator("F") == sigma_dual().F);
    CHECK(parse_operator("Ed") == sigma_diagonal().E);
    CHECK(parse_operator("Kw") == sigma_weyl().K);
    CHECK(parse_operator("Z1") == build_Z1());
    CHECK(parse_operator("dq2_1") == shifted_derivative(1, 2));

    // wrappers
    CHECK(parse_operator("tcomm(d1, mu1^2, q^2)") ==
          RatQ::q_power(1) * quantum_int(2) * (gen(Gen::g1, -1) * gen(Gen::mu1)));
    CHECK(parse_operator("comm(mu1, mu2)").is_zero());
    CHECK(parse_operator("brace(g1)") == gen(Gen::mu1) * gen(Gen::d1));
    CHECK(parse_operator("mu1/qint(2)") == quantum_int(2).inv() * gen(Gen::mu1));
}

TEST_CASE("operator parse errors") {
    CHECK_THROWS_AS(parse_operator("mu1^-1"), ParseError);
    CHECK_THROWS_AS(parse_operator("bogus"), ParseError);
    CHECK_THROWS_AS(parse_operator("mu1 +"), ParseError);
    CHECK_THROWS_AS(parse_operator("comm(mu1)"), ParseError);
    CHECK_THROWS_AS(parse_operator("mu1/d1"), ParseError);
    CHECK_THROWS_AS(parse_operator("tcomm(d1, mu1, nu)"), ParseError);
    CHECK_THROWS_AS(parse_operator("1/0"), ParseError);
    try {
        parse_operator("mu1 * bogus");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position == 6);
    }
}

TEST_CASE("print then parse is the identity on operators") {
    const AlgebraElement samples[] = {
        gen(Gen::mu1),
        gen(Gen::g2, -2) * shifted_derivative(1, 2),
        sigma_dual().E,
        sigma_dual().F,
        sigma_diagonal().E,
        sigma_diagonal().F,
        sigma_diagonal().K,
        build_Z1(),
        build_Z2(),
        AlgebraElement(RatQ(-3)),
        AlgebraElement(),
        quantum_int(5).inv() * (gen(Gen::mu2) - gen(Gen::nu) * gen(Gen::w, -1)),
    };
    for (const auto& a : samples) CHECK(parse_operator(a.to_string()) == a);
}

TEST_CASE("spinor expressions") {
    CHECK(parse_spinor("x2^3") == SpinorVector::monomial(0, 3, 0));
    CHECK(parse_spinor("x1 y + (1/(q^4 + q^2 + 1)) x2 y^3") == p_minus(1));
    CHECK(parse_spinor("3*q^-1 x1^2 x2 y^4") ==
          SpinorVector::monomial(2, 1, 4, RatQ::laurent_term(Int(3), -1)));
    CHECK(parse_spinor("x1*x2*y") == SpinorVector::monomial(1, 1, 1));
    CHECK(parse_spinor("x1 x1 y^2") == SpinorVector::monomial(2, 0, 2));
    CHECK(parse_spinor("-x1 + x1").is_zero());
    CHECK(parse_spinor("qint(2) y") == SpinorVector::monomial(0, 0, 1, quantum_int(2)));

    CHECK_THROWS_AS(parse_spinor("x1^-1"), ParseError);
    CHECK_THROWS_AS(parse_spinor("mu1 x1"), ParseError);
    CHECK_THROWS_AS(parse_spinor(""), ParseError);
}

TEST_CASE("print then parse is the identity on spinors") {
    TestRng rng(99);
    for (int d = 0; d <= 4; ++d)
        for (int i = 0; i < 5; ++i) {
            const SpinorVector v = random_homogeneous(rng, d, 5);
            CHECK(parse_spinor(v.to_string()) == v);
        }
    CHECK(parse_spinor(SpinorVector().to_string()).is_zero());
    CHECK(parse_spinor(p_minus(3).to_string()) == p_minus(3));
}

TEST_CASE("scalar round trips") {
    const RatQ samples[] = {
        quantum_int(7),          -quantum_int(4),          quantum_int(5).inv(),
        projection_coefficient(3, 2), RatQ::laurent_term(Int(-6), 3), RatQ(),
        quantum_binomial(6, 3) / quantum_odd_double_factorial(2),
    };
    for (const auto& a : samples) CHECK(parse_ratq(a.to_string()) == a);
    CHECK_THROWS_AS(parse_ratq("mu1"), ParseError);
}

TEST_CASE("rationals") {
    CHECK(parse_rational("3/4") == Rat(3, 4));
    CHECK(parse_rational("-5") == Rat(-5));
    CHECK(parse_rational("21/4") == Rat(21, 4));
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
}

TEST_CASE("composition through the parser matches composition of actions") {
    const SpinorVector v = SpinorVector::monomial(2, 1, 2);
    const SpinorVector lhs = apply(parse_operator("Ed*F"), v);
    const SpinorVector rhs = apply(parse_operator("Ed"), apply(parse_operator("F"), v));
    CHECK(lhs == rhs);
}
