#ifndef QTOP_ROOT_SYSTEM_HPP
#define QTOP_ROOT_SYSTEM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qtop/errors.hpp"
#include "qtop/weight.hpp"

namespace qtop {

enum class Series { A, B, C, D, E, F, G };

std::string series_name(Series s);

// Parse "A1", "B2", "E6", ... into (series, rank).
std::pair<Series, int> parse_group_name(const std::string& name);

// An element of the finite Weyl group: reduced-ish word in simple
// reflections, exact orthogonal matrix on the ambient space, and its
// determinant (-1)^length.
struct WeylElement {
    std::vector<int> word;                  // simple reflection indices
    std::vector<std::vector<Rat>> matrix;   // ambient_dim x ambient_dim
    int sign = 1;

    Weight apply(const Weight& w) const;
};

// Root data of a simple simply-connected compact group in exact rational
// ambient coordinates. The stored invariant form is the euclidean dot
// product times form_scale, normalized so that long roots have squared
// length 2 (equivalently, short coroots have squared length 2).
//
// Realizations (all standard orthonormal ones):
//   A_n  in R^{n+1}: a_i = e_i - e_{i+1}
//   B_n  in R^n:     a_i = e_i - e_{i+1}, a_n = e_n
//   C_n  in R^n:     a_i = e_i - e_{i+1}, a_n = 2 e_n        (scale 1/2)
//   D_n  in R^n:     a_i = e_i - e_{i+1}, a_n = e_{n-1}+e_n
//   E6/7/8 in R^8:   Bourbaki numbering
//   F4   in R^4:     e2-e3, e3-e4, e4, (e1-e2-e3-e4)/2
//   G2   in R^3:     e1-e2, -2e1+e2+e3                        (scale 1/3)
class RootSystem {
public:
    static RootSystem build(Series series, int rank);

    Series series() const { return series_; }
    int rank() const { return rank_; }
    int ambient_dim() const { return ambient_; }
    std::string name() const { return series_name(series_) + std::to_string(rank_); }

    const std::vector<Weight>& simple_roots() const { return simple_roots_; }
    const std::vector<Weight>& positive_roots() const { return positive_roots_; }
    const std::vector<Weight>& fundamental_weights() const { return fundamental_weights_; }
    const Weight& rho() const { return rho_; }
    const Weight& highest_root() const { return theta_; }
    int dual_coxeter() const { return dual_coxeter_; }
    // determinant of the Cartan matrix
    std::int64_t cartan_det() const { return cartan_det_; }
    // index |Lambda/Gamma| of the coroot lattice in its dual under the
    // normalized form (the Gram determinant of the simple coroots); equals
    // cartan_det exactly in the simply-laced series
    std::int64_t lattice_index() const { return lattice_index_; }
    Rat form_scale() const { return form_scale_; }

    // normalized invariant form
    Rat inner(const Weight& a, const Weight& b) const { return form_scale_ * dot(a, b); }

    // coroot of a root under the normalized form
    Weight coroot(const Weight& root) const;

    // <x, coroot(root)>; integral exactly when x is in the weight lattice
    Rat pair_coroot(const Weight& x, const Weight& root) const;

    Weight simple_reflect(int i, const Weight& x) const;
    // reflection in the root hyperplane through the origin
    Weight reflect(const Weight& root, const Weight& x) const;

    bool in_weight_lattice(const Weight& x) const;
    bool in_coroot_lattice(const Weight& x) const;
    bool is_dominant(const Weight& x) const;
    bool is_dominant_integral(const Weight& x) const {
        return in_weight_lattice(x) && is_dominant(x);
    }

    // sum of c[i] * fundamental_weight[i]
    Weight weight_from_fw_coords(const std::vector<std::int64_t>& c) const;
    // coordinates <x, coroot(a_i)> in the fundamental-weight basis
    std::vector<Rat> fw_coords(const Weight& x) const;
    // coordinates of x in the simple-root basis (exact solve)
    std::vector<Rat> simple_root_coords(const Weight& x) const;
    // coordinates of x in the simple-coroot basis
    std::vector<Rat> coroot_coords(const Weight& x) const;

    // dominant representative of the W-orbit of x
    Weight dominant_rep(const Weight& x) const;

    // Weyl dimension formula, exact
    std::int64_t weyl_dim(const Weight& lambda) const;

private:
    Series series_;
    int rank_ = 0;
    int ambient_ = 0;
    std::vector<Weight> simple_roots_;
    std::vector<Weight> positive_roots_;
    std::vector<Weight> fundamental_weights_;
    std::vector<Weight> simple_coroots_;
    std::vector<Weight> span_complement_;  // exact basis of the root-span complement
    Weight rho_;
    Weight theta_;
    int dual_coxeter_ = 0;
    std::int64_t cartan_det_ = 0;
    std::int64_t lattice_index_ = 0;
    Rat form_scale_ = Rat(1);
};

inline constexpr std::size_t kDefaultWeylCap = 51840;  // |W(E6)|

// Full enumeration by breadth-first closure over simple reflections.
// Throws qtop::rejected with the reached lower bound once cap is exceeded.
std::vector<WeylElement> weyl_group(const RootSystem& rs, std::size_t cap = kDefaultWeylCap);

// The level-k labels: dominant integral weights with <lambda+rho, theta> < k,
// in graded-lex order on fundamental-weight coordinates. Requires k > cg.
std::vector<Weight> dominant_weights_at_level(const RootSystem& rs, std::int64_t k);

struct FoldResult {
    Weight folded;     // dominant-side representative, (folded + rho) in closure(k P)
    int sign = 1;      // product of reflection signs; meaningless on a wall
    bool on_boundary = false;
};

// Fold x + rho into the closure of k times the fundamental alcove by the
// level-k affine Weyl action. on_boundary is set when x + rho lies on an
// affine wall (<x+rho, alpha> in kZ for some root), where the fold is not
// free and the sign carries no information.
FoldResult fold_to_alcove(const RootSystem& rs, std::int64_t k, const Weight& x);

}  // namespace qtop

#endif
