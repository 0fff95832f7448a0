#ifndef QTOP_INVARIANTS_HPP
#define QTOP_INVARIANTS_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "qtop/modular.hpp"

namespace qtop {

// Standard-type (p,q) torus knot in S^2 x S^1, colored by a level label.
// p >= 1; p and q coprime when both are nonzero.
struct TorusKnotSpec {
    std::int64_t p = 1;
    std::int64_t q = 0;
    Weight color;
};

void validate(const RootSystem& rs, const TorusKnotSpec& spec);

enum class Normalization { raw_s00, bracket };

struct InvariantValue {
    std::complex<double> value;
    Normalization normalization = Normalization::bracket;
};

// Partition function of a fiber link in Sigma_g x S^1: the generalized
// Verlinde sum over labels of prod_i S_{l mu_i}/S_{l 0} times S_{l 0}^{2-2g}.
InvariantValue z_fiber_link(const LevelData& ld, int genus, const std::vector<Weight>& colors);

// Verlinde dimension sum over labels of S_{l 0}^{2-2g}, rounded; throws
// std::logic_error when the rounding residual exceeds 1e-6.
std::int64_t verlinde_dim(const LevelData& ld, int genus);

// <T_{p,q}> in S^2 x S^1: S_00^2 times the double label sum of the signed
// multiplicity terms with quantum dimensions and fractional twists. The twist
// of the second label is taken at the unfolded affine image.
InvariantValue bracket_torus_knot_s2s1(const LevelData& ld, const TorusKnotSpec& spec);

// Same with an extra fiber loop colored alpha, replacing S_00 d_{eta_2}
// by S_{alpha eta_2}; alpha = 0 reduces to the plain bracket.
InvariantValue bracket_torus_knot_with_fiber(const LevelData& ld, const TorusKnotSpec& spec,
                                             const Weight& alpha);

// Rosso-Jones value of the surgered torus knot in S^3:
// S_00 sum_mu c^mu_{lambda,p} d_mu theta_mu^{q/p} over the exact finite
// support of the coefficients (dominant mu possibly outside Lambda_+^k).
InvariantValue z_s3_torus_knot(const LevelData& ld, const TorusKnotSpec& spec);

struct SurgeryCheck {
    std::complex<double> surgery_sum;  // sum_alpha S_{alpha 0} <T_{p,q}, C_alpha>
    std::complex<double> rosso_jones;  // z_s3_torus_knot
    double residual = 0;
    bool support_in_level = false;  // Rosso-Jones support fits below the level wall
};

// Witten surgery cross-check. residual < 1e-7 is the pass criterion when
// support_in_level holds; otherwise it is reported but not comparable.
SurgeryCheck surgery_check(const LevelData& ld, const TorusKnotSpec& spec);

}  // namespace qtop

#endif
