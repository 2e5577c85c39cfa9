#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qspinor/spinor.hpp"

using namespace qspinor;

namespace {

AlgebraElement gen(Gen g, int p = 1) { return AlgebraElement::generator(g, p); }

}  // namespace

TEST_CASE("monomial actions") {
    // d1 on x1^2 x2 -> [2]_q x1 x2
    CHECK(apply(gen(Gen::d1), SpinorVector::monomial(2, 1, 0)) ==
          quantum_int(2) * SpinorVector::monomial(1, 1, 0));
    // g1 scales by q^a
    CHECK(apply(gen(Gen::g1), SpinorVector::monomial(3, 1, 2)) ==
          RatQ::q_power(3) * SpinorVector::monomial(3, 1, 2));
    CHECK(apply(gen(Gen::g1, -2), SpinorVector::monomial(3, 1, 2)) ==
          RatQ::q_power(-6) * SpinorVector::monomial(3, 1, 2));
    // derivatives kill absent variables
    CHECK(apply(gen(Gen::d1), SpinorVector::monomial(0, 1, 1)).is_zero());
    // the Clifford derivative acts on y
    CHECK(apply(gen(Gen::nab), SpinorVector::monomial(0, 0, 3)) ==
          quantum_int(3) * SpinorVector::monomial(0, 0, 2));
    // multiplication operators shift exponents
    CHECK(apply(gen(Gen::mu2) * gen(Gen::nu), SpinorVector::monomial(1, 0, 0)) ==
          SpinorVector::monomial(1, 1, 1));
}

TEST_CASE("normal-ordered factors act right to left") {
    // mu1 g1 d1 on x1^a: derivative first, then the degree operator
    const AlgebraElement op = gen(Gen::mu1) * gen(Gen::g1) * gen(Gen::d1);
    const SpinorVector v = SpinorVector::monomial(3, 0, 0);
    CHECK(apply(op, v) == RatQ::q_power(2) * quantum_int(3) * v);
}

TEST_CASE("gradings") {
    SpinorVector v;
    v.add_term({1, 0, 1}, RatQ(1));  // x1 y, degree 1
    v.add_term({1, 1, 0}, RatQ(1));  // x1 x2, degree 2
    CHECK(v.degree_component(2) == SpinorVector::monomial(1, 1, 0));
    CHECK(v.degree_component(0).is_zero());
    CHECK_FALSE(v.homogeneous_degree().has_value());
    CHECK_THROWS_AS(v.degree(), std::domain_error);
    CHECK(v.degree_component(1).degree() == 1);

    // weights: 2(a - b + c) + 1
    CHECK(SpinorKey{1, 0, 1}.weight_exponent() == 5);
    CHECK(v.weight_component(5) == SpinorVector::monomial(1, 0, 1));
    CHECK(v.weight_component(4).is_zero());  // even weights are empty

    // parity splits on the spinor exponent
    const SpinorVector even = SpinorVector::monomial(1, 0, 2);
    CHECK(even.parity_component(Parity::plus) == even);
    CHECK(even.parity_component(Parity::minus).is_zero());
    SpinorVector mixed = even;
    mixed.add_term({0, 1, 3}, RatQ(2));
    CHECK(mixed.parity_component(Parity::plus) + mixed.parity_component(Parity::minus) == mixed);
}

TEST_CASE("weight spaces of a homogeneous degree") {
    // degree d at weight 1-2d is spanned by x2^d alone
    const int d = 4;
    for (int a = 0; a <= d; ++a)
        for (int c = 0; c <= 5; ++c) {
            const SpinorKey k{a, d - a, c};
            if (k.weight_exponent() == 1 - 2 * d) CHECK((a == 0 && c == 0));
        }
    // degree d at weight 3+2d is spanned by x1^{d-b} x2^b y^{2b+1}
    for (int a = 0; a <= d; ++a)
        for (int c = 0; c <= 2 * d + 1; ++c) {
            const SpinorKey k{a, d - a, c};
            if (k.weight_exponent() == 3 + 2 * d) CHECK(c == 2 * (d - a) + 1);
        }
}

TEST_CASE("action respects products") {
    const AlgebraElement a = gen(Gen::g2, -1) * gen(Gen::d1) * gen(Gen::nu);
    const AlgebraElement b = gen(Gen::mu1) * gen(Gen::nab) * gen(Gen::w);
    const SpinorVector v = SpinorVector::monomial(2, 1, 3, RatQ::q_power(-1));
    CHECK(apply(a * b, v) == apply(a, apply(b, v)));
    CHECK(apply(gen(Gen::g1) * gen(Gen::g1, -1), v) == v);
}

TEST_CASE("degree bookkeeping under the algebra") {
    const SpinorVector v = SpinorVector::monomial(1, 2, 1);
    CHECK(apply(gen(Gen::mu1), v).degree() == 4);
    CHECK(apply(gen(Gen::d2), v).degree() == 2);
    CHECK(apply(gen(Gen::nu), v).degree() == 3);   // spinor factor leaves degree alone
    CHECK(apply(gen(Gen::nab), v).degree() == 3);
}

TEST_CASE("rendering") {
    SpinorVector v;
    v.add_term({1, 0, 1}, RatQ(1));
    v.add_term({0, 1, 3}, (RatQ::q_power(4) + RatQ::q_power(2) + RatQ(1)).inv());
    CHECK(v.to_string() == "x1 y + (1/(q^4 + q^2 + 1)) x2 y^3");
    CHECK(SpinorVector().to_string() == "0");
    CHECK(SpinorVector::monomial(0, 0, 0, RatQ(-2)).to_string() == "-2");
    CHECK(SpinorVector::monomial(2, 0, 1, RatQ::q_power(-2)).to_string() == "q^-2 x1^2 y");
}
