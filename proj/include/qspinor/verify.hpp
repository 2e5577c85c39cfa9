/**
 * @file verify.hpp
 * @brief Named verification suites driving the exact identity checkers.
 */
#pragma once

#include "qspinor/duality.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qspinor {

struct VerifyOptions {
    int d_max = 6;
    int n_max = 4;
    int m_max = 3;
    std::uint64_t seed = 20251;
};

Report verify_qcalculus(const VerifyOptions& opts);
Report verify_weyl(const VerifyOptions& opts);
Report verify_sl2(const VerifyOptions& opts);
Report verify_pair(const VerifyOptions& opts);
Report verify_adjoint(const VerifyOptions& opts);
Report verify_projector(const VerifyOptions& opts);
Report verify_fischer(const VerifyOptions& opts);
Report verify_symmetries(const VerifyOptions& opts);

const std::vector<std::string>& verify_suite_names();  // includes "all"
Report verify_suite(const std::string& name, const VerifyOptions& opts);

// deterministic generators used by the randomized checks
class TestRng {
public:
    explicit TestRng(std::uint64_t seed) : state_(seed ? seed : 1) {}
    std::uint64_t next();
    int range(int lo, int hi);  // inclusive

private:
    std::uint64_t state_;
};

RatQ random_coefficient(TestRng& rng);
SpinorVector random_homogeneous(TestRng& rng, int degree, int c_max);
AlgebraElement random_word(TestRng& rng, int max_len);

}  // namespace qspinor
