#include "qtop/linkmodel.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "qtop/parallel.hpp"

namespace qtop {

std::int64_t FaceData::chi_total() const {
    std::int64_t s = 0;
    for (const auto& f : faces) s += f.chi;
    return s;
}

std::int64_t FaceData::gleam_total() const {
    std::int64_t s = 0;
    for (const auto& f : faces) s += f.gleam;
    return s;
}

FaceData faces(const SurfaceLink& link) {
    const int m = (int)link.loops.size();
    std::map<std::string, int> by_id;
    for (int i = 0; i < m; ++i) {
        if (link.loops[i].id == kOuterFace)
            throw std::invalid_argument("loop id 'outer' is reserved for the outer face");
        if (!by_id.emplace(link.loops[i].id, i).second)
            throw std::invalid_argument("duplicate loop id '" + link.loops[i].id + "'");
    }

    std::vector<int> parent(m, -1);  // -1 = outer
    std::vector<std::vector<int>> children(m);
    std::vector<int> roots;
    for (int i = 0; i < m; ++i) {
        const std::string& p = link.loops[i].parent;
        if (p == kOuterFace) {
            roots.push_back(i);
            continue;
        }
        auto it = by_id.find(p);
        if (it == by_id.end())
            throw std::invalid_argument("loop '" + link.loops[i].id + "' names unknown parent '" + p + "'");
        parent[i] = it->second;
        children[it->second].push_back(i);
    }
    // containment must be a forest: every parent chain reaches the outer face
    for (int i = 0; i < m; ++i) {
        int hops = 0;
        for (int v = i; v != -1; v = parent[v])
            if (++hops > m)
                throw std::invalid_argument("containment cycle through loop '" + link.loops[i].id + "'");
    }

    FaceData fd;
    fd.faces.resize(m + 1);
    fd.y_plus.resize(m);
    fd.y_minus.resize(m);
    fd.outer_face = m;

    int genus_face = -1;
    if (link.genus_face == kOuterFace) {
        genus_face = m;
    } else {
        auto it = by_id.find(link.genus_face);
        if (it == by_id.end())
            throw std::invalid_argument("genus_face names unknown face '" + link.genus_face + "'");
        genus_face = it->second;
    }

    for (int v = 0; v < m; ++v) {
        Face& f = fd.faces[v];
        f.id = link.loops[v].id;
        f.adjacent_loops.push_back(v);
        for (int c : children[v]) f.adjacent_loops.push_back(c);
    }
    fd.faces[m].id = kOuterFace;
    fd.faces[m].adjacent_loops = roots;

    for (int fi = 0; fi <= m; ++fi) {
        Face& f = fd.faces[fi];
        f.chi = 2 - (std::int64_t)f.adjacent_loops.size() - (fi == genus_face ? 2 * link.genus : 0);
        for (int l : f.adjacent_loops) {
            bool inner_side = (fi == l);  // the face owned by l is its inner side
            int sgn = (inner_side == link.loops[l].inner_is_plus) ? 1 : -1;
            f.gleam += link.loops[l].winding * sgn;
        }
    }
    for (int l = 0; l < m; ++l) {
        int inner = l;
        int outer = parent[l] == -1 ? m : parent[l];
        fd.y_plus[l] = link.loops[l].inner_is_plus ? inner : outer;
        fd.y_minus[l] = link.loops[l].inner_is_plus ? outer : inner;
    }
    return fd;
}

std::complex<double> shadow_invariant(const LevelData& ld, const SurfaceLink& link,
                                      double term_budget, int threads) {
    const FaceData fd = faces(link);
    const int n = ld.n();
    const int nf = (int)fd.faces.size();
    const int m = (int)link.loops.size();

    for (const auto& loop : link.loops)
        if (!ld.has_label(loop.color))
            throw rejected("loop '" + loop.id + "' colored outside Lambda_+^k: " + loop.color.str());

    double estimate = std::pow(double(n), nf);
    if (estimate > term_budget)
        throw rejected("shadow state sum needs ~" + std::to_string(estimate) +
                       " terms, over the budget of " + std::to_string(term_budget));

    // per-loop fusion matrices N^{mu}_{lambda nu}, exact integers
    std::map<Weight, std::vector<std::int64_t>> fusion_by_color;
    for (const auto& loop : link.loops) {
        if (fusion_by_color.count(loop.color)) continue;
        auto table = cached_multiplicities(ld.rs, loop.color);
        std::vector<std::int64_t>& mat = fusion_by_color[loop.color];
        mat.assign((std::size_t)n * n, 0);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                mat[(std::size_t)a * n + b] = fusion_racah(ld, *table, ld.labels[a], ld.labels[b]);
    }
    std::vector<const std::int64_t*> loop_fusion(m);
    for (int l = 0; l < m; ++l) loop_fusion[l] = fusion_by_color[link.loops[l].color].data();

    // face-local weights d^chi theta^gleam per label
    std::vector<std::vector<std::complex<double>>> face_weight(nf);
    for (int f = 0; f < nf; ++f) {
        face_weight[f].resize(n);
        for (int c = 0; c < n; ++c)
            face_weight[f][c] = std::pow(ld.qdim[c], double(fd.faces[f].chi)) *
                                theta_pow(ld, ld.labels[c], Rat(fd.faces[f].gleam));
    }

    // mixed-radix sweep over colorings, partitioned by the leading face color;
    // partitions are summed independently and combined in label order
    std::vector<std::complex<double>> partial(n, 0.0);
    parallel_for(threads, n, [&](std::size_t first) {
        std::vector<int> eta(nf, 0);
        eta[0] = (int)first;
        std::complex<double> acc = 0.0;
        for (;;) {
            std::complex<double> term = 1.0;
            for (int l = 0; l < m && term != 0.0; ++l)
                term *= double(loop_fusion[l][(std::size_t)eta[fd.y_plus[l]] * n + eta[fd.y_minus[l]]]);
            if (term != 0.0) {
                for (int f = 0; f < nf; ++f) term *= face_weight[f][eta[f]];
                acc += term;
            }
            int pos = nf - 1;
            while (pos >= 1 && ++eta[pos] == n) eta[pos--] = 0;
            if (pos < 1) break;
        }
        partial[first] = acc;
    });
    std::complex<double> total = 0.0;
    for (const auto& p : partial) total += p;
    return total;
}

std::complex<double> normalized_shadow(const LevelData& ld, const SurfaceLink& link,
                                       double term_budget, int threads) {
    double empty = 0.0;
    for (int c = 0; c < ld.n(); ++c)
        empty += std::pow(ld.qdim[c], double(2 - 2 * link.genus));
    return shadow_invariant(ld, link, term_budget, threads) / empty;
}

namespace {

std::int64_t parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        std::int64_t v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("expected integer for " + what + ", got '" + s + "'");
    }
}

}  // namespace

SurfaceLink parse_link_file(const RootSystem& rs, std::istream& in) {
    SurfaceLink link;
    bool saw_genus = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string where = "link file line " + std::to_string(lineno);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;  // blank line
        if (head.rfind("genus=", 0) == 0) {
            link.genus = (int)parse_int(head.substr(6), "genus");
            if (link.genus < 0) throw std::invalid_argument(where + ": genus must be nonnegative");
            saw_genus = true;
        } else if (head.rfind("genus_face=", 0) == 0) {
            link.genus_face = head.substr(11);
        } else if (head == "loop") {
            LoopSpec loop;
            if (!(ls >> loop.id)) throw std::invalid_argument(where + ": loop record without id");
            bool saw_parent = false, saw_winding = false, saw_color = false, saw_plus = false;
            std::string kv;
            while (ls >> kv) {
                auto eq = kv.find('=');
                if (eq == std::string::npos)
                    throw std::invalid_argument(where + ": malformed key-value '" + kv + "'");
                std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
                if (key == "parent") {
                    loop.parent = val;
                    saw_parent = true;
                } else if (key == "winding") {
                    loop.winding = parse_int(val, "winding");
                    saw_winding = true;
                } else if (key == "color") {
                    std::vector<std::int64_t> coords;
                    std::istringstream cs(val);
                    std::string tok;
                    while (std::getline(cs, tok, ',')) coords.push_back(parse_int(tok, "color coordinate"));
                    loop.color = rs.weight_from_fw_coords(coords);
                    if (!rs.is_dominant(loop.color))
                        throw std::invalid_argument(where + ": color must be dominant (nonnegative coordinates)");
                    saw_color = true;
                } else if (key == "plus") {
                    if (val == "inner") loop.inner_is_plus = true;
                    else if (val == "outer") loop.inner_is_plus = false;
                    else throw std::invalid_argument(where + ": plus must be 'inner' or 'outer'");
                    saw_plus = true;
                } else {
                    throw std::invalid_argument(where + ": unknown key '" + key + "'");
                }
            }
            if (!saw_parent || !saw_winding || !saw_color || !saw_plus)
                throw std::invalid_argument(where + ": loop needs parent=, winding=, color= and plus=");
            link.loops.push_back(std::move(loop));
        } else {
            throw std::invalid_argument(where + ": unknown record '" + head + "'");
        }
    }
    if (!saw_genus) throw std::invalid_argument("link file is missing the genus= header");
    faces(link);  // validate the forest and genus_face eagerly
    return link;
}

SurfaceLink load_link_file(const RootSystem& rs, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open link file '" + path + "'");
    return parse_link_file(rs, in);
}

}  // namespace qtop
