#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qspinor/weyl.hpp"

using namespace qspinor;

namespace {

AlgebraElement gen(Gen g, int p = 1) { return AlgebraElement::generator(g, p); }
RatQ qpow(int k) { return RatQ::q_power(k); }

}  // namespace

TEST_CASE("generators") {
    CHECK(gen(Gen::g1) * gen(Gen::g1, -1) == AlgebraElement(1));
    const AlgebraElement m = gen(Gen::mu1);
    REQUIRE(m.single_term());
    CHECK(m.terms().begin()->first == NormalMonomial{.m1 = 1});
    const AlgebraElement winv = gen(Gen::w, -1);
    CHECK(winv.terms().begin()->first.w == -1);
    CHECK_THROWS_AS(gen(Gen::mu1, -1), std::domain_error);
    CHECK_THROWS_AS(gen(Gen::nab, -2), std::domain_error);
}

TEST_CASE("defining relations in normal form") {
    // d1 mu1 = q mu1 d1 + g1^-1, and the lower-sign variant forced equal
    const AlgebraElement lhs = gen(Gen::d1) * gen(Gen::mu1);
    CHECK(lhs == qpow(1) * (gen(Gen::mu1) * gen(Gen::d1)) + gen(Gen::g1, -1));
    CHECK(lhs == qpow(-1) * (gen(Gen::mu1) * gen(Gen::d1)) + gen(Gen::g1));

    CHECK(gen(Gen::g1) * gen(Gen::mu1) == qpow(1) * (gen(Gen::mu1) * gen(Gen::g1)));
    CHECK(gen(Gen::nab) * gen(Gen::nu) ==
          qpow(1) * (gen(Gen::nu) * gen(Gen::nab)) + gen(Gen::w, -1));
    // distinct directions commute on the nose
    CHECK(commutator(gen(Gen::d1), gen(Gen::mu2)).is_zero());
    CHECK(commutator(gen(Gen::mu1), gen(Gen::mu2)).is_zero());
}

TEST_CASE("commutators") {
    // [d1, mu1^2]_{q^2} = q [2]_q g1^-1 mu1
    const AlgebraElement lhs = twisted_commutator(gen(Gen::d1), power(gen(Gen::mu1), 2), qpow(2));
    const AlgebraElement rhs = qpow(1) * quantum_int(2) * (gen(Gen::g1, -1) * gen(Gen::mu1));
    CHECK(lhs == rhs);

    const AlgebraElement a = gen(Gen::mu1) * gen(Gen::d2) * gen(Gen::w);
    CHECK(commutator(a, a).is_zero());
}

TEST_CASE("brace") {
    const AlgebraElement b = brace(qpow(1) * gen(Gen::g1));
    const RatQ unit = (qpow(1) - qpow(-1)).inv();
    CHECK(b == unit * (qpow(1) * gen(Gen::g1) - qpow(-1) * gen(Gen::g1, -1)));

    CHECK(gen(Gen::mu1) * gen(Gen::d1) == brace(gen(Gen::g1)));
    CHECK(brace(AlgebraElement(1)).is_zero());
    CHECK_THROWS_AS(brace(gen(Gen::mu1)), std::domain_error);
    CHECK_THROWS_AS(brace(gen(Gen::g1) + gen(Gen::g2)), std::domain_error);
}

TEST_CASE("shifted derivatives") {
    CHECK(shifted_derivative(1, 1) == gen(Gen::d1));
    const AlgebraElement expect =
        quantum_int(2).inv() * (gen(Gen::d1) * (gen(Gen::g1) + gen(Gen::g1, -1)));
    CHECK(shifted_derivative(1, 2) == expect);

    CHECK(twisted_commutator(shifted_derivative(1, 2), gen(Gen::mu1), qpow(2)) == gen(Gen::g1, -2));
    CHECK_THROWS_AS(shifted_derivative(1, 0), std::domain_error);
    CHECK_THROWS_AS(shifted_derivative(3, 1), std::domain_error);
}

TEST_CASE("commutation identity suite") {
    const Report rep = check_weyl_identities(3);
    CHECK(rep.all_pass());
    CHECK(rep.checks.size() == 40);

    // [mu1 d_{2,q}, mu2 d_{1,q}] = brace(g1 g2^-1)
    const AlgebraElement lhs =
        commutator(gen(Gen::mu1) * shifted_derivative(2, 1), gen(Gen::mu2) * shifted_derivative(1, 1));
    CHECK(lhs == brace(gen(Gen::g1) * gen(Gen::g2, -1)));
}

TEST_CASE("powers and inverses") {
    CHECK(power(gen(Gen::mu1) + gen(Gen::d2), 0) == AlgebraElement(1));
    const AlgebraElement k = qpow(2) * (gen(Gen::g1, 2) * gen(Gen::g2, 2));
    CHECK(k * invert(k) == AlgebraElement(1));
    CHECK(power(k, -2) == invert(k) * invert(k));
    CHECK_THROWS_AS(invert(gen(Gen::mu1) * gen(Gen::d1)), std::domain_error);
}

TEST_CASE("rendering") {
    const AlgebraElement e =
        (qpow(1) + qpow(-1)) * (gen(Gen::mu1) * gen(Gen::g1, -1) * gen(Gen::d2));
    CHECK(e.to_string() == "(q + q^-1)*mu1*g1^-1*d2");
    CHECK(AlgebraElement().to_string() == "0");
    CHECK((gen(Gen::mu2) - gen(Gen::nu)).to_string() == "mu2 - nu");
    CHECK(AlgebraElement(RatQ(3)).to_string() == "3");
}
