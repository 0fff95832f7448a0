#include "qtop/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qtop {

std::string series_name(Series s) {
    switch (s) {
        case Series::A: return "A";
        case Series::B: return "B";
        case Series::C: return "C";
        case Series::D: return "D";
        case Series::E: return "E";
        case Series::F: return "F";
        case Series::G: return "G";
    }
    return "?";
}

std::pair<Series, int> parse_group_name(const std::string& name) {
    if (name.size() < 2) throw std::invalid_argument("group name '" + name + "': expected <letter><rank>, e.g. A1");
    Series s;
    switch (std::toupper(name[0])) {
        case 'A': s = Series::A; break;
        case 'B': s = Series::B; break;
        case 'C': s = Series::C; break;
        case 'D': s = Series::D; break;
        case 'E': s = Series::E; break;
        case 'F': s = Series::F; break;
        case 'G': s = Series::G; break;
        default: throw std::invalid_argument("group name '" + name + "': unknown series letter");
    }
    for (std::size_t i = 1; i < name.size(); ++i)
        if (!std::isdigit(name[i]))
            throw std::invalid_argument("group name '" + name + "': rank must be numeric");
    return {s, std::stoi(name.substr(1))};
}

Weight WeylElement::apply(const Weight& w) const {
    Weight r(w.dim());
    for (std::size_t i = 0; i < matrix.size(); ++i) {
        Rat s;
        for (std::size_t j = 0; j < matrix[i].size(); ++j) s += matrix[i][j] * w.coords[j];
        r.coords[i] = s;
    }
    return r;
}

namespace {

Weight make_weight(std::size_t dim, std::vector<std::pair<int, Rat>> entries) {
    Weight w(dim);
    for (auto& [i, v] : entries) w.coords[i] = v;
    return w;
}

// Gaussian elimination over Rat; A is n x n, b is n x m (columns are rhs).
// Returns X with A X = b. Throws std::logic_error on singular A.
std::vector<std::vector<Rat>> solve_rational(std::vector<std::vector<Rat>> a,
                                             std::vector<std::vector<Rat>> b) {
    const std::size_t n = a.size(), m = b[0].size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw std::logic_error("singular system in root-space solve");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        Rat inv = Rat(1) / a[col][col];
        for (std::size_t j = 0; j < n; ++j) a[col][j] *= inv;
        for (std::size_t j = 0; j < m; ++j) b[col][j] *= inv;
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col].is_zero()) continue;
            Rat f = a[row][col];
            for (std::size_t j = 0; j < n; ++j) a[row][j] -= f * a[col][j];
            for (std::size_t j = 0; j < m; ++j) b[row][j] -= f * b[col][j];
        }
    }
    return b;
}

Rat det_rational(std::vector<std::vector<Rat>> a) {
    const std::size_t n = a.size();
    Rat det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) { std::swap(a[piv], a[col]); det = -det; }
        det *= a[col][col];
        Rat inv = Rat(1) / a[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (a[row][col].is_zero()) continue;
            Rat f = a[row][col] * inv;
            for (std::size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
        }
    }
    return det;
}

std::vector<Weight> series_simple_roots(Series s, int n, int& ambient) {
    std::vector<Weight> roots;
    const Rat h(1, 2);
    switch (s) {
        case Series::A: {
            if (n < 1) throw std::invalid_argument("A_n requires n >= 1");
            ambient = n + 1;
            for (int i = 0; i < n; ++i)
                roots.push_back(make_weight(ambient, {{i, Rat(1)}, {i + 1, Rat(-1)}}));
            break;
        }
        case Series::B: {
            if (n < 2) throw std::invalid_argument("B_n requires n >= 2");
            ambient = n;
            for (int i = 0; i + 1 < n; ++i)
                roots.push_back(make_weight(ambient, {{i, Rat(1)}, {i + 1, Rat(-1)}}));
            roots.push_back(make_weight(ambient, {{n - 1, Rat(1)}}));
            break;
        }
        case Series::C: {
            if (n < 3) throw std::invalid_argument("C_n requires n >= 3");
            ambient = n;
            for (int i = 0; i + 1 < n; ++i)
                roots.push_back(make_weight(ambient, {{i, Rat(1)}, {i + 1, Rat(-1)}}));
            roots.push_back(make_weight(ambient, {{n - 1, Rat(2)}}));
            break;
        }
        case Series::D: {
            if (n < 4) throw std::invalid_argument("D_n requires n >= 4");
            ambient = n;
            for (int i = 0; i + 1 < n; ++i)
                roots.push_back(make_weight(ambient, {{i, Rat(1)}, {i + 1, Rat(-1)}}));
            roots.push_back(make_weight(ambient, {{n - 2, Rat(1)}, {n - 1, Rat(1)}}));
            break;
        }
        case Series::E: {
            if (n < 6 || n > 8) throw std::invalid_argument("E_n requires n in {6,7,8}");
            ambient = 8;
            Weight a1(8);
            a1.coords[0] = h;
            a1.coords[7] = h;
            for (int i = 1; i <= 6; ++i) a1.coords[i] = -h;
            roots.push_back(a1);
            roots.push_back(make_weight(8, {{0, Rat(1)}, {1, Rat(1)}}));
            roots.push_back(make_weight(8, {{1, Rat(1)}, {0, Rat(-1)}}));
            for (int i = 4; i <= n; ++i)
                roots.push_back(make_weight(8, {{i - 2, Rat(1)}, {i - 3, Rat(-1)}}));
            break;
        }
        case Series::F: {
            if (n != 4) throw std::invalid_argument("F_n requires n = 4");
            ambient = 4;
            roots.push_back(make_weight(4, {{1, Rat(1)}, {2, Rat(-1)}}));
            roots.push_back(make_weight(4, {{2, Rat(1)}, {3, Rat(-1)}}));
            roots.push_back(make_weight(4, {{3, Rat(1)}}));
            roots.push_back(make_weight(4, {{0, h}, {1, -h}, {2, -h}, {3, -h}}));
            break;
        }
        case Series::G: {
            if (n != 2) throw std::invalid_argument("G_n requires n = 2");
            ambient = 3;
            roots.push_back(make_weight(3, {{0, Rat(1)}, {1, Rat(-1)}}));
            roots.push_back(make_weight(3, {{0, Rat(-2)}, {1, Rat(1)}, {2, Rat(1)}}));
            break;
        }
    }
    return roots;
}

}  // namespace

Weight RootSystem::coroot(const Weight& root) const {
    return (Rat(2) / inner(root, root)) * root;
}

Rat RootSystem::pair_coroot(const Weight& x, const Weight& root) const {
    // scale-invariant: equals 2 dot(x,root)/dot(root,root)
    return Rat(2) * dot(x, root) / dot(root, root);
}

Weight RootSystem::simple_reflect(int i, const Weight& x) const {
    return reflect(simple_roots_[i], x);
}

Weight RootSystem::reflect(const Weight& root, const Weight& x) const {
    return x - pair_coroot(x, root) * root;
}

bool RootSystem::in_weight_lattice(const Weight& x) const {
    // in the root span (orthogonal to the precomputed complement) with
    // integral coroot pairings
    for (const auto& v : span_complement_)
        if (!dot(x, v).is_zero()) return false;
    for (const auto& a : simple_roots_)
        if (!pair_coroot(x, a).is_integer()) return false;
    return true;
}

bool RootSystem::in_coroot_lattice(const Weight& x) const {
    std::vector<Rat> c = coroot_coords(x);
    Weight y(ambient_);
    for (int i = 0; i < rank_; ++i) y = y + c[i] * simple_coroots_[i];
    if (y != x) return false;
    for (const auto& ci : c)
        if (!ci.is_integer()) return false;
    return true;
}

bool RootSystem::is_dominant(const Weight& x) const {
    for (const auto& a : simple_roots_)
        if (pair_coroot(x, a).sign() < 0) return false;
    return true;
}

Weight RootSystem::weight_from_fw_coords(const std::vector<std::int64_t>& c) const {
    if ((int)c.size() != rank_)
        throw std::invalid_argument("expected " + std::to_string(rank_) + " fundamental-weight coordinates");
    Weight w(ambient_);
    for (int i = 0; i < rank_; ++i) w = w + Rat(c[i]) * fundamental_weights_[i];
    return w;
}

std::vector<Rat> RootSystem::fw_coords(const Weight& x) const {
    std::vector<Rat> c(rank_);
    for (int i = 0; i < rank_; ++i) c[i] = pair_coroot(x, simple_roots_[i]);
    return c;
}

std::vector<Rat> RootSystem::simple_root_coords(const Weight& x) const {
    // solve sum_j c_j <a_j, av_i> = <x, av_i>
    std::vector<std::vector<Rat>> a(rank_, std::vector<Rat>(rank_));
    std::vector<std::vector<Rat>> b(rank_, std::vector<Rat>(1));
    for (int i = 0; i < rank_; ++i) {
        for (int j = 0; j < rank_; ++j) a[i][j] = pair_coroot(simple_roots_[j], simple_roots_[i]);
        b[i][0] = pair_coroot(x, simple_roots_[i]);
    }
    auto sol = solve_rational(a, b);
    std::vector<Rat> c(rank_);
    for (int i = 0; i < rank_; ++i) c[i] = sol[i][0];
    return c;
}

std::vector<Rat> RootSystem::coroot_coords(const Weight& x) const {
    // dual basis to the simple coroots is the fundamental weights
    std::vector<Rat> c(rank_);
    for (int i = 0; i < rank_; ++i) c[i] = inner(x, fundamental_weights_[i]);
    return c;
}

Weight RootSystem::dominant_rep(const Weight& x) const {
    Weight y = x;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i < rank_; ++i) {
            if (pair_coroot(y, simple_roots_[i]).sign() < 0) {
                y = simple_reflect(i, y);
                moved = true;
            }
        }
    }
    return y;
}

std::int64_t RootSystem::weyl_dim(const Weight& lambda) const {
    Rat dim(1);
    Weight lr = lambda + rho_;
    for (const auto& a : positive_roots_) dim *= dot(lr, a) / dot(rho_, a);
    return dim.to_integer();
}

RootSystem RootSystem::build(Series series, int rank) {
    RootSystem rs;
    rs.series_ = series;
    rs.rank_ = rank;
    rs.simple_roots_ = series_simple_roots(series, rank, rs.ambient_);

    // all roots: closure of the simple roots under simple reflections
    std::set<Weight> all(rs.simple_roots_.begin(), rs.simple_roots_.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Weight> cur(all.begin(), all.end());
        for (const auto& r : cur) {
            for (int i = 0; i < rank; ++i) {
                Weight s = r - rs.pair_coroot(r, rs.simple_roots_[i]) * rs.simple_roots_[i];
                if (all.insert(s).second) grew = true;
            }
        }
    }

    // positive roots: nonnegative integer combinations of simple roots
    for (const auto& r : all) {
        std::vector<Rat> c = rs.simple_root_coords(r);
        bool pos = true, ints = true;
        for (const auto& ci : c) {
            if (!ci.is_integer()) ints = false;
            if (ci.sign() < 0) pos = false;
        }
        if (!ints) throw std::logic_error("root with non-integral simple-root coordinates");
        if (pos) rs.positive_roots_.push_back(r);
    }
    if (2 * rs.positive_roots_.size() != all.size())
        throw std::logic_error("positive roots do not split the root set in half");

    rs.rho_ = Weight(rs.ambient_);
    for (const auto& r : rs.positive_roots_) rs.rho_ = rs.rho_ + Rat(1, 2) * r;

    // highest root: the dominant root of maximal height
    Rat best_height(-1);
    for (const auto& r : rs.positive_roots_) {
        if (!rs.is_dominant(r)) continue;
        std::vector<Rat> c = rs.simple_root_coords(r);
        Rat h = std::accumulate(c.begin(), c.end(), Rat(0), std::plus<Rat>());
        Rat len = dot(r, r);
        // the highest root is always long; prefer greater length, then height
        Rat lenbest = best_height < Rat(0) ? Rat(0) : dot(rs.theta_, rs.theta_);
        if (best_height < Rat(0) || len > lenbest || (len == lenbest && h > best_height)) {
            best_height = h;
            rs.theta_ = r;
        }
    }
    rs.form_scale_ = Rat(2) / dot(rs.theta_, rs.theta_);

    for (int i = 0; i < rank; ++i) rs.simple_coroots_.push_back(rs.coroot(rs.simple_roots_[i]));

    // fundamental weights from the Cartan matrix: w_j = sum_m (A^-1)_{mj} a_m
    std::vector<std::vector<Rat>> cartan(rank, std::vector<Rat>(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            cartan[i][j] = rs.pair_coroot(rs.simple_roots_[j], rs.simple_roots_[i]);
    std::vector<std::vector<Rat>> rhs(rank, std::vector<Rat>(rank));
    for (int i = 0; i < rank; ++i) rhs[i][i] = Rat(1);
    auto inv = solve_rational(cartan, rhs);  // inv[m][j] = (A^-1)_{mj}
    for (int j = 0; j < rank; ++j) {
        Weight w(rs.ambient_);
        for (int m = 0; m < rank; ++m) w = w + inv[m][j] * rs.simple_roots_[m];
        rs.fundamental_weights_.push_back(w);
    }

    rs.cartan_det_ = det_rational(cartan).to_integer();
    std::vector<std::vector<Rat>> coroot_gram(rank, std::vector<Rat>(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            coroot_gram[i][j] = rs.inner(rs.simple_coroots_[i], rs.simple_coroots_[j]);
    rs.lattice_index_ = det_rational(coroot_gram).to_integer();
    rs.dual_coxeter_ = (Rat(1) + rs.inner(rs.theta_, rs.rho_)).to_integer();

    // exact basis of the orthogonal complement of the root span, for cheap
    // lattice membership tests: Gram-Schmidt the simple roots, then reduce
    // the standard basis against span and already-accepted complement vectors
    {
        std::vector<Weight> span_ortho;
        for (const auto& a : rs.simple_roots_) {
            Weight v = a;
            for (const auto& prev : span_ortho) v = v - (dot(v, prev) / dot(prev, prev)) * prev;
            span_ortho.push_back(v);
        }
        for (int j = 0; j < rs.ambient_; ++j) {
            Weight v(rs.ambient_);
            v.coords[j] = Rat(1);
            for (const auto& prev : span_ortho) v = v - (dot(v, prev) / dot(prev, prev)) * prev;
            for (const auto& prev : rs.span_complement_)
                v = v - (dot(v, prev) / dot(prev, prev)) * prev;
            if (!v.is_zero()) rs.span_complement_.push_back(v);
        }
        if ((int)rs.span_complement_.size() != rs.ambient_ - rank)
            throw std::logic_error("root-span complement has unexpected dimension");
    }

    // construction-time sanity: normalization and rho pairing
    if (rs.inner(rs.theta_, rs.theta_) != Rat(2))
        throw std::logic_error("highest root not normalized to squared length 2");
    for (int i = 0; i < rank; ++i)
        if (rs.pair_coroot(rs.rho_, rs.simple_roots_[i]) != Rat(1))
            throw std::logic_error("rho does not pair to 1 with every simple coroot");

    return rs;
}

std::vector<WeylElement> weyl_group(const RootSystem& rs, std::size_t cap) {
    const int n = rs.ambient_dim();
    WeylElement id;
    id.matrix.assign(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i) id.matrix[i][i] = Rat(1);
    id.sign = 1;

    // dedup by the image of rho, which determines the element (rho is regular)
    std::map<Weight, std::size_t> seen;
    std::vector<WeylElement> group{id};
    seen[rs.rho()] = 0;

    // reflection matrices of the simple roots
    std::vector<std::vector<std::vector<Rat>>> refl(rs.rank());
    for (int k = 0; k < rs.rank(); ++k) {
        refl[k].assign(n, std::vector<Rat>(n));
        for (int j = 0; j < n; ++j) {
            Weight ej(n);
            ej.coords[j] = Rat(1);
            Weight img = rs.simple_reflect(k, ej);
            for (int i = 0; i < n; ++i) refl[k][i][j] = img.coords[i];
        }
    }

    for (std::size_t head = 0; head < group.size(); ++head) {
        for (int k = 0; k < rs.rank(); ++k) {
            // left-multiply: s_k * w
            WeylElement next;
            next.word = group[head].word;
            next.word.insert(next.word.begin(), k);
            next.sign = -group[head].sign;
            next.matrix.assign(n, std::vector<Rat>(n));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    Rat s;
                    for (int l = 0; l < n; ++l) s += refl[k][i][l] * group[head].matrix[l][j];
                    next.matrix[i][j] = s;
                }
            Weight key = next.apply(rs.rho());
            if (seen.emplace(key, group.size()).second) {
                group.push_back(std::move(next));
                if (group.size() > cap)
                    throw rejected("Weyl group larger than cap " + std::to_string(cap) +
                                   " (at least " + std::to_string(group.size()) + " elements)");
            }
        }
    }
    return group;
}

std::vector<Weight> dominant_weights_at_level(const RootSystem& rs, std::int64_t k) {
    if (k <= rs.dual_coxeter())
        throw std::invalid_argument("level k = " + std::to_string(k) + " must exceed the dual Coxeter number " +
                                    std::to_string(rs.dual_coxeter()) + " for " + rs.name());
    // <lambda, theta> <= k - cg with lambda = sum c_i w_i; comarks <w_i, theta>
    const std::int64_t budget = k - rs.dual_coxeter();
    std::vector<std::int64_t> comark(rs.rank());
    for (int i = 0; i < rs.rank(); ++i)
        comark[i] = rs.inner(rs.fundamental_weights()[i], rs.highest_root()).to_integer();

    std::vector<std::vector<std::int64_t>> coords;
    std::vector<std::int64_t> cur(rs.rank(), 0);
    auto rec = [&](auto&& self, int pos, std::int64_t left) -> void {
        if (pos == rs.rank()) {
            coords.push_back(cur);
            return;
        }
        for (std::int64_t c = 0; c * comark[pos] <= left; ++c) {
            cur[pos] = c;
            self(self, pos + 1, left - c * comark[pos]);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, budget);

    std::sort(coords.begin(), coords.end(), [](const auto& a, const auto& b) {
        std::int64_t ga = std::accumulate(a.begin(), a.end(), (std::int64_t)0);
        std::int64_t gb = std::accumulate(b.begin(), b.end(), (std::int64_t)0);
        if (ga != gb) return ga < gb;
        return a < b;
    });

    std::vector<Weight> out;
    out.reserve(coords.size());
    for (const auto& c : coords) out.push_back(rs.weight_from_fw_coords(c));
    return out;
}

FoldResult fold_to_alcove(const RootSystem& rs, std::int64_t k, const Weight& x) {
    if (k <= 0) throw std::invalid_argument("fold_to_alcove requires k > 0");
    FoldResult res;
    Weight y = x + rs.rho();
    int sign = 1;
    const Weight& theta = rs.highest_root();
    for (;;) {
        bool moved = false;
        for (int i = 0; i < rs.rank(); ++i) {
            if (rs.pair_coroot(y, rs.simple_roots()[i]).sign() < 0) {
                y = rs.simple_reflect(i, y);
                sign = -sign;
                moved = true;
            }
        }
        Rat level = rs.inner(y, theta);  // = <y, theta-coroot>, theta is long
        if (level > Rat(k)) {
            y = y - (level - Rat(k)) * theta;
            sign = -sign;
            moved = true;
        }
        if (!moved) break;
    }
    res.on_boundary = (rs.inner(y, theta) == Rat(k));
    for (int i = 0; i < rs.rank() && !res.on_boundary; ++i)
        if (rs.pair_coroot(y, rs.simple_roots()[i]).is_zero()) res.on_boundary = true;
    res.folded = y - rs.rho();
    res.sign = sign;
    return res;
}

}  // namespace qtop
