#ifndef QTOP_LINKMODEL_HPP
#define QTOP_LINKMODEL_HPP

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qtop/modular.hpp"

namespace qtop {

inline constexpr const char* kOuterFace = "outer";

// One simple loop of a double-point-free diagram on a closed oriented
// surface: parent in the nesting forest, S^1 winding number, color, and
// which side (inner or outer) induces the loop's own orientation.
struct LoopSpec {
    std::string id;
    std::string parent = kOuterFace;  // enclosing loop id, or "outer"
    std::int64_t winding = 0;
    Weight color;
    bool inner_is_plus = true;
};

// Genus-g surface with pairwise disjoint null-homotopic colored loops,
// encoded by their containment forest. genus_face names the complementary
// region carrying the genus handle (default: the outer face).
struct SurfaceLink {
    int genus = 0;
    std::vector<LoopSpec> loops;
    std::string genus_face = kOuterFace;
};

struct Face {
    std::string id;  // owning loop id, or "outer"
    std::int64_t chi = 0;
    std::int64_t gleam = 0;
    std::vector<int> adjacent_loops;
};

struct FaceData {
    std::vector<Face> faces;     // one per loop, then the outer face
    std::vector<int> y_plus;     // per loop: face on the positively oriented side
    std::vector<int> y_minus;    // per loop: face on the other side
    int outer_face = -1;

    std::int64_t chi_total() const;
    std::int64_t gleam_total() const;
};

// Complementary regions of the diagram with Euler characteristics, gleams
// and the oriented-side faces of every loop. Rejects dangling parents,
// containment cycles and unknown genus_face ids.
FaceData faces(const SurfaceLink& link);

// Turaev shadow state sum |L| for the double-point-free diagram: over all
// face colorings by Lambda_+^k, the product of fusion coefficients
// N^{eta(Y+)}_{lambda eta(Y-)} per loop and d^chi theta^gleam per face.
// Fusion factors are exact integers from the quantum Racah formula.
// Term count n_labels^n_faces is estimated up front and rejected beyond
// term_budget.
std::complex<double> shadow_invariant(const LevelData& ld, const SurfaceLink& link,
                                      double term_budget = 5e6, int threads = 1);

// |L| normalized by the empty diagram on the same surface, <L> convention.
std::complex<double> normalized_shadow(const LevelData& ld, const SurfaceLink& link,
                                       double term_budget = 5e6, int threads = 1);

// Text format, one record per line:
//   genus=<int>
//   genus_face=<id|outer>            (optional)
//   loop <id> parent=<id|outer> winding=<int> color=<c1,c2,...> plus=<inner|outer>
// Colors are fundamental-weight coordinates. Unknown keys are rejected.
SurfaceLink parse_link_file(const RootSystem& rs, std::istream& in);
SurfaceLink load_link_file(const RootSystem& rs, const std::string& path);

}  // namespace qtop

#endif
