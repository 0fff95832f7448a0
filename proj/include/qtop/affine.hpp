#ifndef QTOP_AFFINE_HPP
#define QTOP_AFFINE_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "qtop/multiplicity.hpp"
#include "qtop/root_system.hpp"

namespace qtop {

// Element of the affine Weyl group as (finite part, coroot translation),
// acting on t by b -> w b + y.
struct AffineElement {
    WeylElement weyl_part;
    Weight translation;  // must lie in the coroot lattice

    int sign() const { return weyl_part.sign; }
};

// Level-k shifted action: tau * b = k (tau . (b + rho)/k) - rho.
// For a pure translation by y this is b + k y; for w in W it is
// w b + w rho - rho.
Weight star_action(const RootSystem& rs, std::int64_t k, const AffineElement& tau, const Weight& b);

struct SignedMultTerm {
    std::int64_t value;    // (-1)^tau m_lambda((eta1 - tau*eta2)/p)
    Weight tau_star_eta2;  // unfolded image, input to fractional twist powers
};

struct SignedMultSum {
    std::vector<SignedMultTerm> terms;
    std::int64_t total = 0;
};

// Enumerate the finitely many affine Weyl elements contributing to
// sum_tau (-1)^tau m_lambda((eta1 - tau*eta2)/p). Each nu in the support of
// m_lambda proposes the unique candidate tau*eta2 = eta1 - p nu, accepted
// when it folds onto eta2 (freeness of the alcove action). Requires
// eta2 + rho off every affine wall; throws qtop::rejected otherwise.
SignedMultSum signed_mult(const RootSystem& rs, std::int64_t k, const MultiplicityTable& lambda_table,
                          std::int64_t p, const Weight& eta1, const Weight& eta2);

// c^mu_{lambda,p} = sum_{w in W} (-1)^w m_lambda((mu - w rho + rho)/p),
// the coefficients of the Rosso-Jones formula. Identical to the classical
// Adams-operation coefficients of plethysm_coeffs.
std::int64_t rosso_jones_coeff(const RootSystem& rs, const std::vector<WeylElement>& weyl,
                               const MultiplicityTable& lambda_table, std::int64_t p,
                               const Weight& mu);
std::int64_t rosso_jones_coeff(const RootSystem& rs, const Weight& lambda, std::int64_t p,
                               const Weight& mu, std::size_t weyl_cap = kDefaultWeylCap);

// All dominant mu with nonzero c^mu_{lambda,p}; the support is finite.
std::map<Weight, std::int64_t> rosso_jones_coeffs(const RootSystem& rs, const Weight& lambda,
                                                  std::int64_t p,
                                                  std::size_t weyl_cap = kDefaultWeylCap);

}  // namespace qtop

#endif
