#ifndef QTOP_MULTIPLICITY_HPP
#define QTOP_MULTIPLICITY_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <memory>

#include "qtop/root_system.hpp"

namespace qtop {

// Weight multiplicities of the irreducible representation with a given
// highest weight. `entries` is the full (Weyl-invariant) support;
// `dominant_entries` the dominant slice used for folded lookups.
struct MultiplicityTable {
    Weight highest_weight;
    std::map<Weight, std::int64_t> entries;
    std::map<Weight, std::int64_t> dominant_entries;
    std::int64_t dim = 0;

    // multiplicity of an arbitrary point of t: zero off the weight lattice
    std::int64_t mult(const RootSystem& rs, const Weight& b) const {
        if (!rs.in_weight_lattice(b)) return 0;
        auto it = dominant_entries.find(rs.dominant_rep(b));
        return it == dominant_entries.end() ? 0 : it->second;
    }
};

// Freudenthal recursion. Exact; verifies the Weyl dimension formula on the
// result and throws std::logic_error on any internal inconsistency.
MultiplicityTable weight_multiplicities(const RootSystem& rs, const Weight& lambda);

// Same result through a process-wide thread-safe cache; tables are immutable
// once built, so sharing is sound. Heavy users (plethysm, fusion matrices,
// state sums) route through this.
std::shared_ptr<const MultiplicityTable> cached_multiplicities(const RootSystem& rs,
                                                               const Weight& lambda);

// Formal character evaluated at b: sum of m(w) exp(2 pi i <w, b>).
std::complex<double> character_eval(const RootSystem& rs, const MultiplicityTable& table,
                                    const Weight& b);
std::complex<double> character_eval(const RootSystem& rs, const Weight& lambda, const Weight& b);

// Coefficients of the Adams operation: char_lambda(x^p) = sum_mu c^mu char_mu(x),
// computed by scaling the weight system by p and repeatedly splitting off the
// maximal dominant leader. Serves as the classical oracle for the
// Rosso-Jones coefficients.
std::map<Weight, std::int64_t> plethysm_coeffs(const RootSystem& rs, const Weight& lambda,
                                               std::int64_t p);

}  // namespace qtop

#endif
