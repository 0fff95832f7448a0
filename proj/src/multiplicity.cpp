#include "qtop/multiplicity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace qtop {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// W-orbit of a weight by closure under simple reflections
std::set<Weight> weyl_orbit(const RootSystem& rs, const Weight& w) {
    std::set<Weight> orbit{w};
    std::vector<Weight> queue{w};
    while (!queue.empty()) {
        Weight cur = queue.back();
        queue.pop_back();
        for (int i = 0; i < rs.rank(); ++i) {
            Weight img = rs.simple_reflect(i, cur);
            if (orbit.insert(img).second) queue.push_back(img);
        }
    }
    return orbit;
}

}  // namespace

MultiplicityTable weight_multiplicities(const RootSystem& rs, const Weight& lambda) {
    if (!rs.is_dominant_integral(lambda))
        throw std::invalid_argument("weight_multiplicities: highest weight must be dominant integral, got " +
                                    lambda.str());

    const int rank = rs.rank();
    const auto& simples = rs.simple_roots();
    const auto& positives = rs.positive_roots();

    // Dominant candidates mu = lambda - sum c_i a_i. Dominant weights have
    // nonnegative simple-root coordinates (the inverse Cartan matrix is
    // entrywise nonnegative), so 0 <= c_i <= i-th simple-root coordinate of
    // lambda bounds every dominant weight of the representation.
    std::vector<std::int64_t> box(rank);
    {
        std::vector<Rat> lam_coords = rs.simple_root_coords(lambda);
        for (int i = 0; i < rank; ++i) box[i] = lam_coords[i].floor();
    }

    struct Cand {
        Weight mu;
        std::int64_t depth;
    };
    std::vector<Cand> cands;
    std::vector<std::int64_t> c(rank, 0);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == rank) {
            Weight mu = lambda;
            std::int64_t depth = 0;
            for (int i = 0; i < rank; ++i) {
                mu = mu - Rat(c[i]) * simples[i];
                depth += c[i];
            }
            if (rs.is_dominant(mu)) cands.push_back({mu, depth});
            return;
        }
        for (c[pos] = 0; c[pos] <= box[pos]; ++c[pos]) self(self, pos + 1);
        c[pos] = 0;
    };
    rec(rec, 0);
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        if (a.depth != b.depth) return a.depth < b.depth;
        return a.mu < b.mu;
    });

    // coordinates of positive roots in the simple-root basis, for support tests
    std::vector<std::vector<Rat>> root_coords;
    for (const auto& a : positives) root_coords.push_back(rs.simple_root_coords(a));

    MultiplicityTable table;
    table.highest_weight = lambda;
    const Rat top_norm = rs.inner(lambda + rs.rho(), lambda + rs.rho());

    for (const auto& cand : cands) {
        const Weight& mu = cand.mu;
        if (mu == lambda) {
            table.dominant_entries[lambda] = 1;
            continue;
        }
        Rat denom = top_norm - rs.inner(mu + rs.rho(), mu + rs.rho());
        if (denom.sign() <= 0) continue;  // outside the representation ball

        std::vector<Rat> gap = rs.simple_root_coords(lambda - mu);
        Rat rhs;
        for (std::size_t ai = 0; ai < positives.size(); ++ai) {
            const Weight& alpha = positives[ai];
            const Rat mu_alpha = rs.inner(mu, alpha);
            const Rat alpha_sq = rs.inner(alpha, alpha);
            Weight nu = mu;
            for (std::int64_t j = 1;; ++j) {
                bool inside = true;
                for (int t = 0; t < rank && inside; ++t)
                    if (gap[t] - Rat(j) * root_coords[ai][t] < Rat(0)) inside = false;
                if (!inside) break;
                nu = nu + alpha;
                auto it = table.dominant_entries.find(rs.dominant_rep(nu));
                if (it != table.dominant_entries.end())
                    rhs += Rat(2 * it->second) * (mu_alpha + Rat(j) * alpha_sq);
            }
        }
        Rat m = rhs / denom;
        if (!m.is_integer() || m.sign() < 0)
            throw std::logic_error("Freudenthal recursion produced a non-integral multiplicity at " + mu.str());
        if (m.sign() > 0) table.dominant_entries[mu] = m.to_integer();
    }

    // expand to the full Weyl-invariant support
    for (const auto& [mu, m] : table.dominant_entries)
        for (const auto& w : weyl_orbit(rs, mu)) table.entries[w] = m;

    table.dim = 0;
    for (const auto& [w, m] : table.entries) table.dim += m;
    if (table.dim != rs.weyl_dim(lambda))
        throw std::logic_error("multiplicity table does not match the Weyl dimension formula for " +
                               lambda.str());
    return table;
}

std::complex<double> character_eval(const RootSystem& rs, const MultiplicityTable& table,
                                    const Weight& b) {
    std::complex<double> sum = 0.0;
    for (const auto& [w, m] : table.entries) {
        Rat phase = rs.inner(w, b).mod(1);  // e^{2 pi i <w,b>} depends on <w,b> mod 1
        double t = kTwoPi * phase.to_double();
        sum += double(m) * std::complex<double>(std::cos(t), std::sin(t));
    }
    return sum;
}

std::complex<double> character_eval(const RootSystem& rs, const Weight& lambda, const Weight& b) {
    return character_eval(rs, *cached_multiplicities(rs, lambda), b);
}

std::shared_ptr<const MultiplicityTable> cached_multiplicities(const RootSystem& rs,
                                                               const Weight& lambda) {
    static std::mutex mutex;
    static std::map<std::tuple<Series, int, Weight>, std::shared_ptr<const MultiplicityTable>> cache;
    auto key = std::make_tuple(rs.series(), rs.rank(), lambda);
    {
        std::lock_guard<std::mutex> lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto table = std::make_shared<const MultiplicityTable>(weight_multiplicities(rs, lambda));
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(std::move(key), std::move(table)).first->second;
}

std::map<Weight, std::int64_t> plethysm_coeffs(const RootSystem& rs, const Weight& lambda,
                                               std::int64_t p) {
    if (p < 1) throw std::invalid_argument("plethysm_coeffs requires p >= 1");
    auto base = cached_multiplicities(rs, lambda);

    std::map<Weight, std::int64_t> residual;
    for (const auto& [w, m] : base->entries) residual[Rat(p) * w] += m;

    std::map<Weight, std::int64_t> coeffs;
    while (!residual.empty()) {
        // leader: dominant entry of maximal |mu + rho|, ties by lex order;
        // such an entry is dominance-maximal in the virtual character
        const Weight* leader = nullptr;
        Rat best_norm;
        for (const auto& [w, m] : residual) {
            if (m == 0 || !rs.is_dominant(w)) continue;
            Rat norm = rs.inner(w + rs.rho(), w + rs.rho());
            if (!leader || norm > best_norm || (norm == best_norm && *leader < w)) {
                leader = &w;
                best_norm = norm;
            }
        }
        if (!leader) {
            // nonzero residual without a dominant leader cannot happen for a
            // genuine virtual character
            for (const auto& [w, m] : residual)
                if (m != 0)
                    throw std::logic_error("plethysm decomposition left a residual without dominant leader at " +
                                           w.str());
            break;
        }
        Weight top = *leader;
        std::int64_t cc = residual[top];
        coeffs[top] += cc;
        auto tab = cached_multiplicities(rs, top);
        for (const auto& [w, m] : tab->entries) {
            auto it = residual.find(w);
            std::int64_t next = (it == residual.end() ? 0 : it->second) - cc * m;
            if (next == 0) {
                if (it != residual.end()) residual.erase(it);
            } else {
                residual[w] = next;
            }
        }
    }
    return coeffs;
}

}  // namespace qtop
