// Acceptance suite: every release-gating property of the library, each run
// at its stated bound and printed as a single pass/fail line. All checks are
// exact; there are no tolerances anywhere.
#include "qspinor/duality.hpp"
#include "qspinor/verify.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

using namespace qspinor;

namespace {

constexpr std::uint64_t kSeed = 20251;

bool c1_qcalculus(std::string& why) {
    for (int n = 0; n <= 12; ++n)
        if (!check_q_binomial_theorem(n)) {
            why = "binomial theorem fails at n=" + std::to_string(n);
            return false;
        }
    for (int N = 1; N <= 10; ++N)
        for (int n = 1; n <= N; ++n)
            for (int j = 0; j < n; ++j)
                if (!check_alternating_binomial_identity(N, n, j)) {
                    why = "alternating sum fails at N=" + std::to_string(N) + ", n=" + std::to_string(n) +
                          ", j=" + std::to_string(j);
                    return false;
                }
    return true;
}

bool c2_weyl(std::string& why) {
    const Report rep = check_weyl_identities(3);
    if (!rep.all_pass()) {
        for (const auto& c : rep.checks)
            if (!c.pass) {
                why = c.name + " [" + c.params + "]";
                return false;
            }
    }
    return true;
}

bool report_criterion(const Report& rep, std::string& why) {
    for (const auto& c : rep.checks)
        if (!c.pass) {
            why = c.name + " [" + c.params + "]";
            return false;
        }
    return true;
}

bool c3_representations(std::string& why) {
    Report rep;
    rep.merge(check_sl2_relations(sigma_weyl(), "natural"));
    rep.merge(check_sl2_relations(sigma_spinor(), "oscillator"));
    rep.merge(check_sl2_relations(sigma_diagonal(), "diagonal"));
    rep.merge(check_sl2_relations(sigma_dual(), "dual"));
    return report_criterion(rep, why);
}

bool c4_commuting_pair(std::string& why) { return report_criterion(check_commuting_pair(), why); }

bool c5_monogenic_generators(std::string& why) {
    const AlgebraElement f_dual = sigma_dual().F;
    const AlgebraElement f_diag = sigma_diagonal().F;
    for (int d = 0; d <= 10; ++d) {
        for (const SpinorVector& p : {p_plus(d), p_minus(d)}) {
            if (!apply(f_dual, p).is_zero() || !apply(f_diag, p).is_zero()) {
                why = "generator escapes the kernel at d=" + std::to_string(d);
                return false;
            }
        }
        const SpinorVector pm = p_minus(d);
        for (int b = 1; b <= d; ++b) {
            const RatQ expected = quantum_int_base(d - b + 1, 2) /
                                  (quantum_int_base(b, 2) * quantum_int(2 * b + 1)) *
                                  RatQ::q_power(2 * d - 4 * b) * pm.coeff({d - b + 1, b - 1, 2 * b - 1});
            if (pm.coeff({d - b, b, 2 * b + 1}) != expected) {
                why = "recurrence fails at d=" + std::to_string(d) + ", b=" + std::to_string(b);
                return false;
            }
        }
    }
    return true;
}

bool c6_projection(std::string& why) {
    TestRng rng(kSeed);
    const AlgebraElement e_dual = sigma_dual().E;
    for (int d = 0; d <= 6; ++d) {
        int idx = 0;
        for (const auto& m : monogenic_spanning_set(d, 4)) {
            if (project(d, m) != m) {
                why = "projection moves a monogenic, d=" + std::to_string(d) + ", probe=" + std::to_string(idx);
                return false;
            }
            ++idx;
        }
        for (int j = 1; j <= d; ++j)
            for (const auto& m : monogenic_spanning_set(d - j, 4))
                if (!project(d, apply_power(e_dual, j, m)).is_zero()) {
                    why = "projection misses a raised monogenic, d=" + std::to_string(d) +
                          ", j=" + std::to_string(j);
                    return false;
                }
        for (int i = 0; i < 20; ++i) {
            const SpinorVector v = random_homogeneous(rng, d, 6);
            const SpinorVector pv = project(d, v);
            if (project(d, pv) != pv) {
                why = "projection is not idempotent, d=" + std::to_string(d) + ", vector=" + std::to_string(i);
                return false;
            }
        }
    }
    return true;
}

bool c7_fischer(std::string& why) {
    TestRng rng(kSeed);
    const AlgebraElement f_dual = sigma_dual().F;
    for (int d = 1; d <= 5; ++d)
        for (int i = 0; i < 20; ++i) {
            const SpinorVector v = random_homogeneous(rng, d, 6);
            FischerComponents fc;
            try {
                fc = fischer_decompose(v);
            } catch (const std::exception& ex) {
                why = std::string("decomposition failed at d=") + std::to_string(d) + ": " + ex.what();
                return false;
            }
            for (const auto& m : fc.components)
                if (!apply(f_dual, m).is_zero()) {
                    why = "component escapes the kernel at d=" + std::to_string(d);
                    return false;
                }
            if (reconstruct(fc) != v) {
                why = "reconstruction differs at d=" + std::to_string(d) + ", vector=" + std::to_string(i);
                return false;
            }
        }
    return true;
}

bool c8_symmetries(std::string& why) {
    if (!ad_f_powers_of_mu1()[2].is_zero()) {
        why = "third iterated lowering of mu1 is nonzero";
        return false;
    }
    if (!report_criterion(check_adjoint_table(), why)) return false;
    return report_criterion(check_symmetries(6, 4), why);
}

bool c9_action_consistency(std::string& why) {
    TestRng rng(kSeed);
    for (int i = 0; i < 200; ++i) {
        const AlgebraElement a = random_word(rng, 4);
        const AlgebraElement b = random_word(rng, 4);
        const SpinorVector v = SpinorVector::monomial(rng.range(0, 4), rng.range(0, 4), rng.range(0, 4));
        if (apply(a * b, v) != apply(a, apply(b, v))) {
            why = "triple " + std::to_string(i);
            return false;
        }
    }
    return true;
}

bool c10_classical_limit(std::string& why) {
    for (int n = -20; n <= 20; ++n)
        if (quantum_int(n).eval(Rat(1)) != Rat(n)) {
            why = "[n] at q=1, n=" + std::to_string(n);
            return false;
        }
    long long fact = 1;
    for (int n = 0; n <= 8; ++n) {
        if (n > 0) fact *= n;
        if (quantum_factorial(n).eval(Rat(1)) != Rat(fact)) {
            why = "n! at q=1, n=" + std::to_string(n);
            return false;
        }
    }
    for (int n = 0; n <= 10; ++n) {
        long long ch = 1;
        for (int m = 0; m <= n; ++m) {
            if (quantum_binomial(n, m).eval(Rat(1)) != Rat(ch)) {
                why = "binomial at q=1, n=" + std::to_string(n) + ", m=" + std::to_string(m);
                return false;
            }
            ch = ch * (n - m) / (m + 1);
        }
    }
    if (projection_coefficient(1, 1).eval(Rat(1)) != Rat(1, 2)) {
        why = "degree-1 projection coefficient at q=1";
        return false;
    }
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        std::string label;
        std::function<bool(std::string&)> run;
    };
    const std::vector<Criterion> criteria = {
        {"q-calculus suite: binomial theorem n <= 12, alternating sums N <= 10", c1_qcalculus},
        {"commutation identities, both signs, shifts m <= 3", c2_weyl},
        {"quantum sl2 relations for all four representations", c3_representations},
        {"diagonal and dual actions commute", c4_commuting_pair},
        {"kernel generators and their recurrence, d <= 10", c5_monogenic_generators},
        {"projection fixes, annihilates and is idempotent, d <= 6", c6_projection},
        {"triangular decomposition round trip, d <= 5", c7_fischer},
        {"generalized symmetries and the adjoint table, d <= 6", c8_symmetries},
        {"algebra/action consistency on 200 random triples", c9_action_consistency},
        {"classical specialization at q = 1", c10_classical_limit},
    };

    int failures = 0;
    int index = 0;
    for (const auto& c : criteria) {
        ++index;
        std::string why;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(why);
        } catch (const std::exception& ex) {
            why = ex.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (ok ? "PASS" : "FAIL") << "  " << index << ". " << c.label << "  ("
                  << std::fixed << std::setprecision(2) << secs << " s)";
        if (!ok) std::cout << "  -- " << why;
        std::cout << "\n";
        if (!ok) ++failures;
    }
    if (failures == 0) {
        std::cout << "all " << criteria.size() << " acceptance criteria passed\n";
        return 0;
    }
    std::cout << failures << " acceptance criteria FAILED\n";
    return 1;
}
