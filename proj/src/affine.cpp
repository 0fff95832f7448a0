#include "qtop/affine.hpp"

#include <set>
#include <stdexcept>

namespace qtop {

Weight star_action(const RootSystem& rs, std::int64_t k, const AffineElement& tau, const Weight& b) {
    if (k <= 0) throw std::invalid_argument("star_action requires k > 0");
    Weight shifted = tau.weyl_part.apply(b + rs.rho()) + Rat(k) * tau.translation;
    return shifted - rs.rho();
}

SignedMultSum signed_mult(const RootSystem& rs, std::int64_t k, const MultiplicityTable& lambda_table,
                          std::int64_t p, const Weight& eta1, const Weight& eta2) {
    if (p == 0) throw std::invalid_argument("signed_mult requires p != 0");
    if (fold_to_alcove(rs, k, eta2).on_boundary)
        throw rejected("signed_mult: " + eta2.str() + " + rho lies on an affine wall at level " +
                       std::to_string(k));

    SignedMultSum out;
    for (const auto& [nu, m] : lambda_table.entries) {
        Weight candidate = eta1 - Rat(p) * nu;  // would-be tau * eta2
        FoldResult fold = fold_to_alcove(rs, k, candidate);
        if (fold.on_boundary) continue;  // wall orbits never reach an interior point
        if (fold.folded != eta2) continue;
        out.terms.push_back({fold.sign * m, candidate});
        out.total += fold.sign * m;
    }
    return out;
}

std::int64_t rosso_jones_coeff(const RootSystem& rs, const std::vector<WeylElement>& weyl,
                               const MultiplicityTable& lambda_table, std::int64_t p,
                               const Weight& mu) {
    if (p == 0) throw std::invalid_argument("rosso_jones_coeff requires p != 0");
    std::int64_t c = 0;
    const Rat inv_p(1, p);
    for (const auto& w : weyl) {
        Weight arg = inv_p * (mu - w.apply(rs.rho()) + rs.rho());
        c += w.sign * lambda_table.mult(rs, arg);
    }
    return c;
}

std::int64_t rosso_jones_coeff(const RootSystem& rs, const Weight& lambda, std::int64_t p,
                               const Weight& mu, std::size_t weyl_cap) {
    if (!rs.is_dominant_integral(mu))
        throw std::invalid_argument("rosso_jones_coeff: mu must be dominant integral");
    return rosso_jones_coeff(rs, weyl_group(rs, weyl_cap), *cached_multiplicities(rs, lambda), p, mu);
}

std::map<Weight, std::int64_t> rosso_jones_coeffs(const RootSystem& rs, const Weight& lambda,
                                                  std::int64_t p, std::size_t weyl_cap) {
    auto weyl = weyl_group(rs, weyl_cap);
    auto table = cached_multiplicities(rs, lambda);

    // nonzero terms need (mu - w rho + rho)/p in supp(m_lambda):
    // candidates mu = p nu + w rho - rho over the support and W
    std::set<Weight> candidates;
    for (const auto& [nu, m] : table->entries)
        for (const auto& w : weyl) {
            Weight mu = Rat(p) * nu + w.apply(rs.rho()) - rs.rho();
            if (rs.is_dominant_integral(mu)) candidates.insert(mu);
        }

    std::map<Weight, std::int64_t> coeffs;
    for (const auto& mu : candidates) {
        std::int64_t c = rosso_jones_coeff(rs, weyl, *table, p, mu);
        if (c != 0) coeffs[mu] = c;
    }
    return coeffs;
}

}  // namespace qtop
