#include "qtop/invariants.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qtop {

void validate(const RootSystem& rs, const TorusKnotSpec& spec) {
    if (spec.p < 1) throw std::invalid_argument("torus knot requires p >= 1");
    if (spec.q != 0 && std::gcd(spec.p, std::abs(spec.q)) != 1)
        throw std::invalid_argument("torus knot windings p = " + std::to_string(spec.p) +
                                    ", q = " + std::to_string(spec.q) + " must be coprime");
    if (!rs.is_dominant_integral(spec.color))
        throw std::invalid_argument("torus knot color must be dominant integral");
}

InvariantValue z_fiber_link(const LevelData& ld, int genus, const std::vector<Weight>& colors) {
    if (genus < 0) throw std::invalid_argument("genus must be nonnegative");
    std::vector<int> idx;
    idx.reserve(colors.size());
    for (const auto& c : colors) idx.push_back(ld.index_of(c));  // rejects off-level colors
    const double chi = 2.0 - 2.0 * genus;
    std::complex<double> sum = 0.0;
    for (int l = 0; l < ld.n(); ++l) {
        std::complex<double> term = std::pow(ld.s0(l), chi);
        for (int i : idx) term *= ld.s(l, i) / ld.s0(l);
        sum += term;
    }
    return {sum, Normalization::raw_s00};
}

std::int64_t verlinde_dim(const LevelData& ld, int genus) {
    if (genus < 0) throw std::invalid_argument("genus must be nonnegative");
    double sum = 0.0;
    for (int l = 0; l < ld.n(); ++l) sum += std::pow(ld.s0(l), 2.0 - 2.0 * genus);
    double rounded = std::round(sum);
    if (std::abs(sum - rounded) > 1e-6)
        throw std::logic_error("Verlinde dimension sum " + std::to_string(sum) +
                               " is not close to an integer");
    return (std::int64_t)rounded;
}

namespace {

// G(eta2) = sum_{eta1} d_{eta1} theta_{eta1}^{q/p}
//           sum_tau (-1)^tau m((eta1 - tau*eta2)/p) theta_{tau*eta2}^{-q/p};
// the alpha-independent core of the torus-knot sums, assembled once.
std::vector<std::complex<double>> eta2_profile(const LevelData& ld, const TorusKnotSpec& spec) {
    const int n = ld.n();
    const Rat qp(spec.q, spec.p);
    auto table = cached_multiplicities(ld.rs, spec.color);

    std::vector<std::complex<double>> twist1(n);
    for (int i = 0; i < n; ++i) twist1[i] = theta_pow(ld, ld.labels[i], qp);

    std::vector<std::complex<double>> profile(n, 0.0);
    for (int e2 = 0; e2 < n; ++e2) {
        std::complex<double> acc = 0.0;
        for (int e1 = 0; e1 < n; ++e1) {
            SignedMultSum sum = signed_mult(ld.rs, ld.k, *table, spec.p, ld.labels[e1], ld.labels[e2]);
            if (sum.terms.empty()) continue;
            std::complex<double> inner = 0.0;
            for (const auto& term : sum.terms)
                inner += double(term.value) * theta_pow(ld, term.tau_star_eta2, -qp);
            acc += ld.qdim[e1] * twist1[e1] * inner;
        }
        profile[e2] = acc;
    }
    return profile;
}

std::complex<double> bracket_from_profile(const LevelData& ld,
                                          const std::vector<std::complex<double>>& profile,
                                          int alpha_index) {
    const double s00 = ld.s0(0);
    std::complex<double> sum = 0.0;
    for (int e2 = 0; e2 < ld.n(); ++e2) sum += ld.s(alpha_index, e2) * profile[e2];
    return s00 * sum;
}

}  // namespace

InvariantValue bracket_torus_knot_s2s1(const LevelData& ld, const TorusKnotSpec& spec) {
    validate(ld.rs, spec);
    ld.index_of(spec.color);
    auto profile = eta2_profile(ld, spec);
    const double s00 = ld.s0(0);
    std::complex<double> sum = 0.0;
    for (int e2 = 0; e2 < ld.n(); ++e2) sum += ld.qdim[e2] * profile[e2];
    return {s00 * s00 * sum, Normalization::bracket};
}

InvariantValue bracket_torus_knot_with_fiber(const LevelData& ld, const TorusKnotSpec& spec,
                                             const Weight& alpha) {
    validate(ld.rs, spec);
    ld.index_of(spec.color);
    int ai = ld.index_of(alpha);
    return {bracket_from_profile(ld, eta2_profile(ld, spec), ai), Normalization::bracket};
}

InvariantValue z_s3_torus_knot(const LevelData& ld, const TorusKnotSpec& spec) {
    validate(ld.rs, spec);
    const Rat qp(spec.q, spec.p);
    auto coeffs = rosso_jones_coeffs(ld.rs, spec.color, spec.p);
    std::complex<double> sum = 0.0;
    for (const auto& [mu, c] : coeffs)
        sum += double(c) * qdim_sine_product(ld.rs, ld.k, mu) * theta_pow(ld, mu, qp);
    return {ld.s0(0) * sum, Normalization::raw_s00};
}

SurgeryCheck surgery_check(const LevelData& ld, const TorusKnotSpec& spec) {
    validate(ld.rs, spec);
    ld.index_of(spec.color);
    SurgeryCheck out;

    auto profile = eta2_profile(ld, spec);
    std::complex<double> lhs = 0.0;
    for (int a = 0; a < ld.n(); ++a) lhs += ld.s0(a) * bracket_from_profile(ld, profile, a);
    out.surgery_sum = lhs;
    out.rosso_jones = z_s3_torus_knot(ld, spec).value;
    out.residual = std::abs(out.surgery_sum - out.rosso_jones);

    out.support_in_level = true;
    for (const auto& [mu, c] : rosso_jones_coeffs(ld.rs, spec.color, spec.p))
        if (ld.rs.inner(mu + ld.rs.rho(), ld.rs.highest_root()) >= Rat(ld.k))
            out.support_in_level = false;
    return out;
}

}  // namespace qtop
