#include "qspinor/verify.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace qspinor {

// ---------------- deterministic randomness ----------------

std::uint64_t TestRng::next() {
    // splitmix64; fixed across platforms so seeds are reproducible
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

int TestRng::range(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

RatQ random_coefficient(TestRng& rng) {
    int c = 0;
    while (c == 0) c = rng.range(-3, 3);
    return RatQ::laurent_term(Int(c), rng.range(-2, 2));
}

SpinorVector random_homogeneous(TestRng& rng, int degree, int c_max) {
    SpinorVector v;
    const int n = rng.range(2, 5);
    for (int i = 0; i < n; ++i) {
        const int a = rng.range(0, degree);
        const int c = rng.range(0, c_max);
        v.add_term({a, degree - a, c}, random_coefficient(rng));
    }
    if (v.is_zero()) v.add_term({0, degree, 0}, RatQ(1));
    return v;
}

AlgebraElement random_word(TestRng& rng, int max_len) {
    static const Gen all[] = {Gen::mu1, Gen::mu2, Gen::nu, Gen::g1, Gen::g2,
                              Gen::w,   Gen::d1,  Gen::d2, Gen::nab};
    const int len = rng.range(1, max_len);
    AlgebraElement a(1);
    for (int i = 0; i < len; ++i) {
        const Gen g = all[rng.range(0, 8)];
        const int e = gen_invertible(g) && rng.range(0, 1) == 0 ? -1 : 1;
        a = a * AlgebraElement::generator(g, e);
    }
    return a;
}

namespace {

AlgebraElement gen(Gen g, int p = 1) { return AlgebraElement::generator(g, p); }

// aggregate a family of residual checks into one report line
struct Family {
    bool ok = true;
    std::string witness;

    void expect_zero(const AlgebraElement& res, const std::string& where) {
        if (ok && !res.is_zero()) {
            ok = false;
            witness = where + ": " + res.to_string();
        }
    }
    void expect_zero(const SpinorVector& res, const std::string& where) {
        if (ok && !res.is_zero()) {
            ok = false;
            witness = where + ": " + res.to_string();
        }
    }
    void expect(bool cond, const std::string& where) {
        if (ok && !cond) {
            ok = false;
            witness = where;
        }
    }
};

}  // namespace

// ---------------- q-calculus ----------------

Report verify_qcalculus(const VerifyOptions& opts) {
    Report rep;
    TestRng rng(opts.seed);

    auto random_ratq = [&rng]() {
        QPoly num, den;
        for (int e = 0; e <= 2; ++e) num.add_term(e, Int(rng.range(-3, 3)));
        while (den.is_zero() || den.constant_term() == 0) {
            den = QPoly();
            for (int e = 0; e <= 2; ++e) den.add_term(e, Int(rng.range(-2, 2)));
        }
        return RatQ(num, den, rng.range(-2, 2));
    };

    {
        Family f;
        for (int i = 0; i < 40 && f.ok; ++i) {
            const RatQ a = random_ratq(), b = random_ratq(), c = random_ratq();
            const std::string tag = "triple " + std::to_string(i);
            f.expect((a + b) + c == a + (b + c), tag + ": + assoc");
            f.expect((a * b) * c == a * (b * c), tag + ": * assoc");
            f.expect(a * (b + c) == a * b + a * c, tag + ": distributivity");
            f.expect((a + (-a)).is_zero(), tag + ": additive inverse");
            if (!a.is_zero()) f.expect((a * a.inv()).is_one(), tag + ": multiplicative inverse");
        }
        rep.add("qcalc.field_laws", "40 random triples", f.ok, f.witness);
    }
    {
        Family f;
        const RatQ unit = RatQ::q_power(1) - RatQ::q_power(-1);
        for (int n = -50; n <= 50 && f.ok; ++n) {
            const RatQ lhs = quantum_int(n) * unit;
            const RatQ rhs = RatQ::q_power(n) - RatQ::q_power(-n);
            f.expect(lhs == rhs, "n=" + std::to_string(n));
        }
        rep.add("qcalc.bracket_identity", "|n| <= 50", f.ok, f.witness);
    }
    {
        Family f;
        for (int n = 0; n <= 20 && f.ok; ++n)
            for (int m = 0; m <= n && f.ok; ++m)
                f.expect(quantum_binomial(n, m) == quantum_binomial(n, n - m),
                         "n=" + std::to_string(n) + ", m=" + std::to_string(m));
        rep.add("qcalc.binomial_symmetry", "n <= 20", f.ok, f.witness);
    }
    {
        Family f;
        for (int n = 0; n <= 12 && f.ok; ++n)
            f.expect(check_q_binomial_theorem(n), "n=" + std::to_string(n));
        rep.add("qcalc.binomial_theorem", "n <= 12", f.ok, f.witness);
    }
    {
        Family f;
        for (int N = 1; N <= 10 && f.ok; ++N)
            for (int n = 1; n <= N && f.ok; ++n)
                for (int j = 0; j < n && f.ok; ++j)
                    f.expect(check_alternating_binomial_identity(N, n, j),
                             "N=" + std::to_string(N) + ", n=" + std::to_string(n) + ", j=" + std::to_string(j));
        rep.add("qcalc.alternating_binomial_sum", "1 <= n <= N <= 10, 0 <= j < n", f.ok, f.witness);
    }
    {
        Family f;
        for (int m = 0; m <= 12 && f.ok; ++m)
            for (int j = 0; j <= m && f.ok; ++j) {
                const UniPoly lhs = divided_difference(UniPoly::monomial(m), j);
                UniPoly rhs = UniPoly::monomial(
                    m - j, RatQ::q_power(m * j - j * (j + 1) / 2) * quantum_factorial(m) /
                               quantum_factorial(m - j));
                f.expect(lhs == rhs, "m=" + std::to_string(m) + ", j=" + std::to_string(j));
            }
        // one more iterate must vanish
        f.expect(divided_difference(UniPoly::monomial(3), 4).is_zero(), "m=3, j=4");
        rep.add("qcalc.divided_difference_closed_form", "m <= 12, j <= m", f.ok, f.witness);
    }
    {
        Family f;
        for (int i = 0; i < 10 && f.ok; ++i) {
            UniPoly phi, psi;
            for (int e = 0; e <= 5; ++e) {
                if (rng.range(0, 1)) phi.add_term(e, random_coefficient(rng));
                if (rng.range(0, 1)) psi.add_term(e, random_coefficient(rng));
            }
            f.expect(check_twisted_leibniz(phi, psi), "pair " + std::to_string(i));
        }
        rep.add("qcalc.twisted_leibniz", "10 random pairs, degree <= 5", f.ok, f.witness);
    }
    {
        Family f;
        f.expect(quantum_int(3).eval(Rat(2)) == Rat(21, 4), "[3] at q=2");
        f.expect(quantum_binomial(4, 2).eval(Rat(2)) != 0, "[4 over 2] at q=2 defined");
        rep.add("qcalc.specialization", "", f.ok, f.witness);
    }
    {
        Family f;
        for (int n = -20; n <= 20 && f.ok; ++n)
            f.expect(quantum_int(n).eval(Rat(1)) == Rat(n), "[n] at q=1, n=" + std::to_string(n));
        long long fact = 1;
        for (int n = 0; n <= 8 && f.ok; ++n) {
            if (n > 0) fact *= n;
            f.expect(quantum_factorial(n).eval(Rat(1)) == Rat(fact), "n! at q=1, n=" + std::to_string(n));
        }
        for (int n = 0; n <= 10 && f.ok; ++n) {
            long long ch = 1;
            for (int m = 0; m <= n && f.ok; ++m) {
                f.expect(quantum_binomial(n, m).eval(Rat(1)) == Rat(ch),
                         "binom at q=1, n=" + std::to_string(n) + ", m=" + std::to_string(m));
                ch = ch * (n - m) / (m + 1);
            }
        }
        f.expect(projection_coefficient(1, 1).eval(Rat(1)) == Rat(1, 2), "projection coefficient d=1");
        rep.add("qcalc.classical_limit", "q = 1", f.ok, f.witness);
    }
    return rep;
}

// ---------------- operator algebra ----------------

Report verify_weyl(const VerifyOptions& opts) {
    Report rep;
    TestRng rng(opts.seed);

    {
        Family f;
        for (int j = 1; j <= 2; ++j) {
            const AlgebraElement m = gen(j == 1 ? Gen::mu1 : Gen::mu2);
            const AlgebraElement d = gen(j == 1 ? Gen::d1 : Gen::d2);
            const AlgebraElement g = gen(j == 1 ? Gen::g1 : Gen::g2);
            f.expect_zero(d * m - RatQ::q_power(1) * (m * d) - invert(g), "upper sign, j=" + std::to_string(j));
            f.expect_zero(d * m - RatQ::q_power(-1) * (m * d) - g, "lower sign, j=" + std::to_string(j));
            f.expect_zero(m * d - brace(g), "mu d = brace(g), j=" + std::to_string(j));
        }
        f.expect_zero(gen(Gen::nab) * gen(Gen::nu) - RatQ::q_power(1) * (gen(Gen::nu) * gen(Gen::nab)) -
                          invert(gen(Gen::w)),
                      "upper sign, clifford");
        f.expect_zero(gen(Gen::nab) * gen(Gen::nu) - RatQ::q_power(-1) * (gen(Gen::nu) * gen(Gen::nab)) -
                          gen(Gen::w),
                      "lower sign, clifford");
        f.expect_zero(gen(Gen::nu) * gen(Gen::nab) - brace(gen(Gen::w)), "nu nab = brace(w)");
        rep.add("weyl.sign_variants_agree", "both orientations per direction", f.ok, f.witness);
    }
    {
        Family f;
        const AlgebraElement weyl_gens[] = {gen(Gen::mu1), gen(Gen::mu2), gen(Gen::g1), gen(Gen::g1, -1),
                                            gen(Gen::g2),  gen(Gen::g2, -1), gen(Gen::d1), gen(Gen::d2)};
        const AlgebraElement cliff_gens[] = {gen(Gen::nu), gen(Gen::w), gen(Gen::w, -1), gen(Gen::nab)};
        int i = 0;
        for (const auto& a : weyl_gens) {
            int j = 0;
            for (const auto& b : cliff_gens) {
                f.expect_zero(commutator(a, b), "pair " + std::to_string(i) + "," + std::to_string(j));
                ++j;
            }
            ++i;
        }
        rep.add("weyl.tensor_factor_commutativity", "8 x 4 generator pairs", f.ok, f.witness);
    }

    rep.merge(check_weyl_identities(opts.m_max));

    {
        Family f;
        for (int i = 0; i < 30 && f.ok; ++i) {
            const AlgebraElement a = random_word(rng, 3);
            const AlgebraElement b = random_word(rng, 3);
            const AlgebraElement c = random_word(rng, 3);
            f.expect((a * b) * c == a * (b * c), "triple " + std::to_string(i));
        }
        rep.add("weyl.associativity", "30 random word triples", f.ok, f.witness);
    }
    {
        Family f;
        static const Gen all[] = {Gen::mu1, Gen::mu2, Gen::nu, Gen::g1, Gen::g2,
                                  Gen::w,   Gen::d1,  Gen::d2, Gen::nab};
        for (int i = 0; i < 30 && f.ok; ++i) {
            const int len = rng.range(2, 6);
            std::vector<AlgebraElement> letters;
            for (int k = 0; k < len; ++k) {
                const Gen g = all[rng.range(0, 8)];
                const int e = gen_invertible(g) && rng.range(0, 1) == 0 ? -1 : 1;
                letters.push_back(gen(g, e));
            }
            AlgebraElement left(1), right(1);
            for (const auto& x : letters) left = left * x;
            for (auto it = letters.rbegin(); it != letters.rend(); ++it) right = *it * right;
            f.expect(left == right, "word " + std::to_string(i));
        }
        rep.add("weyl.normal_form_confluence", "30 random words, length <= 6", f.ok, f.witness);
    }
    {
        Family f;
        for (int i = 0; i < 200 && f.ok; ++i) {
            const AlgebraElement a = random_word(rng, 4);
            const AlgebraElement b = random_word(rng, 4);
            const SpinorVector v =
                SpinorVector::monomial(rng.range(0, 4), rng.range(0, 4), rng.range(0, 4));
            f.expect(apply(a * b, v) == apply(a, apply(b, v)), "triple " + std::to_string(i));
        }
        rep.add("weyl.action_consistency", "200 random (A, B, v) triples", f.ok, f.witness);
    }
    return rep;
}

// ---------------- sl2 triples ----------------

Report verify_sl2(const VerifyOptions& opts) {
    (void)opts;
    Report rep;
    rep.merge(check_sl2_relations(sigma_weyl(), "sl2.natural"));
    rep.merge(check_sl2_relations(sigma_spinor(), "sl2.oscillator"));
    rep.merge(check_sl2_relations(sigma_diagonal(), "sl2.diagonal"));
    rep.merge(check_sl2_relations(sigma_dual(), "sl2.dual"));
    rep.merge(check_sl2_relations(Sl2Triple{AlgebraElement(), AlgebraElement(), AlgebraElement(1), 1},
                                  "sl2.trivial"));

    std::vector<SpinorVector> probes;
    for (int d : {0, 1, 2})
        for (const auto& v : monogenic_spanning_set(d, 1)) probes.push_back(v);
    for (int d = 1; d <= 3; ++d)
        for (int r = 0; r <= d; ++r) rep.merge(check_fe_power_lemma(d, r, probes));
    return rep;
}

Report verify_pair(const VerifyOptions& opts) {
    (void)opts;
    return check_commuting_pair();
}

// ---------------- adjoint machinery ----------------

Report verify_adjoint(const VerifyOptions& opts) {
    (void)opts;
    Report rep;
    rep.merge(check_adjoint_table());

    const Sl2Triple t = sigma_dual();
    const auto powers = ad_f_powers_of_mu1();
    {
        const AlgebraElement expected = gen(Gen::g1, 2) * gen(Gen::nu);
        AlgebraElement res = powers[0] - expected;
        rep.add("adjoint.ad_f_mu1", "", res.is_zero(), res.to_string());
    }
    {
        const RatQ scale = RatQ::q_power(1) * (RatQ::q_power(1) - RatQ::q_power(-1));
        const AlgebraElement expected =
            scale * (gen(Gen::g1, 2) * shifted_derivative(1, 2) * power(gen(Gen::nu), 2)) -
            gen(Gen::w, 2) * shifted_derivative(2, 2);
        AlgebraElement res = powers[1] - expected;
        rep.add("adjoint.ad_f_sq_mu1", "", res.is_zero(), res.to_string());
    }
    rep.add("adjoint.ad_f_cube_mu1", "", powers[2].is_zero(), powers[2].to_string());

    {
        // F mu1 agrees with ad_F(mu1) on ker F
        Family f;
        const AlgebraElement op = t.F * gen(Gen::mu1) - powers[0];
        for (int d = 0; d <= 3 && f.ok; ++d) {
            int idx = 0;
            for (const auto& m : monogenic_spanning_set(d, 2)) {
                f.expect_zero(apply(op, m), "d=" + std::to_string(d) + ", probe=" + std::to_string(idx++));
                if (!f.ok) break;
            }
        }
        rep.add("adjoint.left_ideal_on_kernel", "F mu1 vs ad_F(mu1), d <= 3", f.ok, f.witness);
    }
    {
        // expanded form of the second raising symmetry
        const RatQ two = quantum_int(2);
        const AlgebraElement seed = gen(Gen::g1, 2) * gen(Gen::mu2);
        const AlgebraElement a1 = adjoint(AdGen::f, t, seed);
        const AlgebraElement a2 = adjoint(AdGen::f, t, a1);
        const AlgebraElement brace_k = brace(t.K, 1);
        const AlgebraElement brace_qk = brace(RatQ::q_power(-1) * t.K, 1);
        const AlgebraElement expanded =
            two * (seed * brace_k * brace_qk) + two * (t.E * a1 * brace_qk) + power(t.E, 2) * a2;
        AlgebraElement res = build_Z2() - expanded;
        rep.add("adjoint.z2_expansion", "", res.is_zero(), res.to_string());
    }
    {
        // Z1 acts on degree-d monogenics as the scaled projected multiplication
        Family f;
        const AlgebraElement z1 = build_Z1();
        const AlgebraElement mu1 = gen(Gen::mu1);
        const RatQ two = quantum_int(2);
        for (int d = 0; d <= 3 && f.ok; ++d) {
            const RatQ scale = two * quantum_int(2 * d + 2) * quantum_int(2 * d + 1);
            int idx = 0;
            for (const auto& m : monogenic_spanning_set(d, 2)) {
                const SpinorVector lhs = apply(z1, m);
                const SpinorVector rhs = scale * project(d + 1, apply(mu1, m));
                f.expect(lhs == rhs, "d=" + std::to_string(d) + ", probe=" + std::to_string(idx++));
                if (!f.ok) break;
            }
        }
        rep.add("adjoint.z1_scaled_projection", "d <= 3", f.ok, f.witness);
    }
    return rep;
}

// ---------------- projection ----------------

Report verify_projector(const VerifyOptions& opts) {
    Report rep;
    TestRng rng(opts.seed);
    const Sl2Triple t = sigma_dual();
    const Sl2Triple diag = sigma_diagonal();

    for (int d = 0; d <= opts.d_max; ++d) {
        const auto probes = monogenic_spanning_set(d, opts.n_max);
        {
            Family f;
            int idx = 0;
            for (const auto& m : probes) {
                f.expect(project(d, m) == m, "probe " + std::to_string(idx++));
                if (!f.ok) break;
            }
            std::ostringstream ps;
            ps << "d=" << d << ", probes=" << probes.size();
            rep.add("projector.fixes_monogenics", ps.str(), f.ok, f.witness);
        }
        {
            Family f;
            for (int j = 1; j <= d && f.ok; ++j) {
                int idx = 0;
                for (const auto& m : monogenic_spanning_set(d - j, opts.n_max)) {
                    f.expect_zero(project(d, apply_power(t.E, j, m)),
                                  "j=" + std::to_string(j) + ", probe=" + std::to_string(idx++));
                    if (!f.ok) break;
                }
            }
            std::ostringstream ps;
            ps << "d=" << d << ", 1 <= j <= d";
            rep.add("projector.kills_raised_monogenics", ps.str(), f.ok, f.witness);
        }
        {
            Family f;
            for (int i = 0; i < 20 && f.ok; ++i) {
                const SpinorVector v = random_homogeneous(rng, d, 6);
                const SpinorVector pv = project(d, v);
                f.expect(project(d, pv) == pv, "vector " + std::to_string(i));
            }
            std::ostringstream ps;
            ps << "d=" << d << ", 20 random vectors";
            rep.add("projector.idempotent", ps.str(), f.ok, f.witness);
        }
    }
    {
        Family f;
        const std::pair<const char*, const AlgebraElement*> xs[] = {
            {"E_diag", &diag.E}, {"F_diag", &diag.F}, {"K_diag", &diag.K}};
        for (int d = 0; d <= std::min(opts.d_max, 5) && f.ok; ++d)
            for (int i = 0; i < 5 && f.ok; ++i) {
                const SpinorVector v = random_homogeneous(rng, d, 5);
                for (const auto& [name, x] : xs) {
                    f.expect(project(d, apply(*x, v)) == apply(*x, project(d, v)),
                             std::string(name) + ", d=" + std::to_string(d) + ", vector " + std::to_string(i));
                    if (!f.ok) break;
                }
            }
        rep.add("projector.equivariance", "diagonal action, 5 vectors per degree", f.ok, f.witness);
    }
    return rep;
}

// ---------------- monogenics and the triangular decomposition ----------------

Report verify_fischer(const VerifyOptions& opts) {
    Report rep;
    TestRng rng(opts.seed);
    const AlgebraElement f_dual = sigma_dual().F;
    const AlgebraElement f_diag = sigma_diagonal().F;

    {
        Family f;
        for (int d = 0; d <= 10 && f.ok; ++d) {
            f.expect_zero(apply(f_dual, p_plus(d)), "F p_plus(" + std::to_string(d) + ")");
            f.expect_zero(apply(f_dual, p_minus(d)), "F p_minus(" + std::to_string(d) + ")");
            f.expect_zero(apply(f_diag, p_plus(d)), "F_diag p_plus(" + std::to_string(d) + ")");
            f.expect_zero(apply(f_diag, p_minus(d)), "F_diag p_minus(" + std::to_string(d) + ")");
        }
        rep.add("fischer.generators_in_kernel", "d <= 10", f.ok, f.witness);
    }
    {
        Family f;
        for (int d = 0; d <= 10 && f.ok; ++d) {
            const SpinorVector pm = p_minus(d);
            for (int b = 1; b <= d && f.ok; ++b) {
                const RatQ cb = pm.coeff({d - b, b, 2 * b + 1});
                const RatQ cprev = pm.coeff({d - b + 1, b - 1, 2 * b - 1});
                const RatQ expected = quantum_int_base(d - b + 1, 2) /
                                      (quantum_int_base(b, 2) * quantum_int(2 * b + 1)) *
                                      RatQ::q_power(2 * d - 4 * b) * cprev;
                f.expect(cb == expected, "d=" + std::to_string(d) + ", b=" + std::to_string(b));
            }
        }
        rep.add("fischer.p_minus_recurrence", "d <= 10", f.ok, f.witness);
    }

    for (int d = 1; d <= opts.d_max; ++d) {
        Family f;
        for (int i = 0; i < 20 && f.ok; ++i) {
            const SpinorVector v = random_homogeneous(rng, d, 6);
            FischerComponents fc;
            try {
                fc = fischer_decompose(v);
            } catch (const std::exception& ex) {
                f.expect(false, std::string("vector ") + std::to_string(i) + ": " + ex.what());
                break;
            }
            f.expect(static_cast<int>(fc.components.size()) == d + 1,
                     "vector " + std::to_string(i) + ": component count");
            for (const auto& m : fc.components) f.expect_zero(apply(f_dual, m), "vector " + std::to_string(i));
            f.expect(reconstruct(fc) == v, "vector " + std::to_string(i) + ": reconstruction");
        }
        std::ostringstream ps;
        ps << "d=" << d << ", 20 random vectors, spinor degree <= 6";
        rep.add("fischer.round_trip", ps.str(), f.ok, f.witness);
    }

    for (int d = 0; d <= opts.d_max; ++d)
        rep.merge(check_weight_multiplicities(d, -2 * d - 7, 2 * d + 9));
    return rep;
}

// ---------------- generalized symmetries ----------------

Report verify_symmetries(const VerifyOptions& opts) {
    Report rep;
    rep.merge(check_symmetries(opts.d_max, opts.n_max));
    {
        Family f;
        const AlgebraElement lower = shifted_derivative(2, 2);
        for (int d = 1; d <= opts.d_max && f.ok; ++d) {
            const SpinorVector lhs = apply(lower, p_plus(d));
            const SpinorVector rhs = quantum_int_base(d, 2) * p_plus(d - 1);
            f.expect(lhs == rhs, "d=" + std::to_string(d));
        }
        rep.add("symmetry.lowering_on_p_plus", "d <= d_max", f.ok, f.witness);
    }
    return rep;
}

// ---------------- dispatch ----------------

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = {"qcalculus", "weyl",    "sl2",        "pair",
                                                   "adjoint",   "projector", "fischer", "symmetries",
                                                   "all"};
    return names;
}

Report verify_suite(const std::string& name, const VerifyOptions& opts) {
    using Fn = Report (*)(const VerifyOptions&);
    static const std::map<std::string, Fn> table = {
        {"qcalculus", verify_qcalculus}, {"weyl", verify_weyl},
        {"sl2", verify_sl2},             {"pair", verify_pair},
        {"adjoint", verify_adjoint},     {"projector", verify_projector},
        {"fischer", verify_fischer},     {"symmetries", verify_symmetries},
    };
    if (name == "all") {
        Report rep;
        for (const auto& n : verify_suite_names())
            if (n != "all") rep.merge(table.at(n)(opts));
        return rep;
    }
    auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown verify suite '" + name + "'");
    return it->second(opts);
}

}  // namespace qspinor
