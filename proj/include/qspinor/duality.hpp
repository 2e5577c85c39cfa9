/**
 * @file duality.hpp
 * @brief The two commuting quantum sl2 actions on polynomial symplectic
 *        spinors and everything built on them: relation checkers, the
 *        monogenic generators, the equivariant projection, the exact
 *        triangular decomposition and the generalized symmetries of the
 *        lowering operator F.
 */
#pragma once

#include "qspinor/spinor.hpp"

#include <array>
#include <span>
#include <vector>

namespace qspinor {

/// A quantum sl2 triple inside the operator algebra. The relations hold
/// with deformation parameter q^param_exponent.
struct Sl2Triple {
    AlgebraElement E, F, K;
    int param_exponent = 1;
};

// the natural action on two-variable polynomials (parameter q^2)
Sl2Triple sigma_weyl();
// the oscillator action on the spinor factor (parameter q^2)
Sl2Triple sigma_spinor();
// the tensor-product action of the two above (parameter q^2)
Sl2Triple sigma_diagonal();
// the dual partner containing the Dirac-type lowering operator F (parameter q)
Sl2Triple sigma_dual();

// K K^-1 = 1, K E K^-1 = q^{2p} E, K F K^-1 = q^{-2p} F,
// [E, F] = (K - K^-1)/(q^p - q^-p), all as exact normal forms
Report check_sl2_relations(const Sl2Triple& t, const std::string& label);

// every generator of the diagonal triple commutes with every generator of
// the dual triple
Report check_commuting_pair();

// [E^d, F] = [d]_q E^{d-1} {q^{d-1} K}_q as elements, and
// F^r E^d = (-1)^r ([d]_q!/[d-r]_q!) E^{d-r} prod_{l=1..r}{q^{d-l}K}_q on
// vectors annihilated by F
Report check_fe_power_lemma(int d, int r, std::span<const SpinorVector> probes);

// lowest-weight generators of the degree-d monogenics
SpinorVector p_plus(int d);
SpinorVector p_minus(int d);

// {E_diag^n p_±(d) : 0 <= n <= n_max}, each verified to lie in ker F
std::vector<SpinorVector> monogenic_spanning_set(int d, int n_max);

// the equivariant projection of the degree-d component onto ker F,
// sum_j [2d-j]_q!/([j]_q![2d]_q!) E^j F^j applied as an operator pipeline
SpinorVector project(int d, const SpinorVector& v);
// its scalar coefficients
RatQ projection_coefficient(int d, int j);

struct FischerComponents {
    int degree = 0;
    // components[k] is the ker-F part m_{degree-k}; the input is
    // sum_k E^k components[k]
    std::vector<SpinorVector> components;
};

FischerComponents fischer_decompose(const SpinorVector& v);
SpinorVector reconstruct(const FischerComponents& fc);

// exact solve of E u = r on the candidate support; throws
// std::runtime_error("decomposition failure") when inconsistent
SpinorVector e_preimage(const SpinorVector& r);

enum class AdGen { e, f, k, k_inv };

// left adjoint action through the triple: ad_e(a) = E a K^-1 - a E K^-1,
// ad_f(a) = F a - K^-1 a K F, ad_k(a) = K a K^-1
AlgebraElement adjoint(AdGen x, const Sl2Triple& t, const AlgebraElement& a);

// the twelve diagonal-adjoint entries on span{mu1, g1^2 mu2} and
// span{d_{2,q^2}, g2^-2 d_{1,q^2}}
Report check_adjoint_table();

// ad_F(mu1), ad_{F^2}(mu1), ad_{F^3}(mu1) for the dual triple; the last is 0
std::array<AlgebraElement, 3> ad_f_powers_of_mu1();

// degree-raising generalized symmetries of F
AlgebraElement build_Z1();
AlgebraElement build_Z2();

// F (T probe) = 0 and degree shift for the two raising and two lowering
// symmetries, over monogenic_spanning_set(d, n_max) for d <= d_max
Report check_symmetries(int d_max, int n_max);

// lattice count of each odd weight e in [e_lo, e_hi] per parity against the
// lowest-weight prediction for the degree-d component
Report check_weight_multiplicities(int d, int e_lo, int e_hi);

}  // namespace qspinor
