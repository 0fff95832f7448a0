#include "qtop/modular.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qtop/parallel.hpp"

namespace qtop {

namespace {
constexpr double kPi = 3.14159265358979323846264338328;
}

std::complex<double> unit_phase_pi(const Rat& e) {
    double t = kPi * e.mod(2).to_double();
    return {std::cos(t), std::sin(t)};
}

int LevelData::index_of(const Weight& w) const {
    for (int i = 0; i < n(); ++i)
        if (labels[i] == w) return i;
    throw rejected("weight " + w.str() + " is not in Lambda_+^" + std::to_string(k) + " for " +
                   rs.name());
}

bool LevelData::has_label(const Weight& w) const {
    for (const auto& l : labels)
        if (l == w) return true;
    return false;
}

std::complex<double> theta_pow(const RootSystem& rs, std::int64_t k, const Weight& lambda,
                               const Rat& r) {
    Rat quad = rs.inner(lambda, lambda + Rat(2) * rs.rho());
    return unit_phase_pi(r * quad / Rat(k));
}

std::complex<double> theta_pow(const LevelData& ld, const Weight& lambda, const Rat& r) {
    return theta_pow(ld.rs, ld.k, lambda, r);
}

double qdim_sine_product(const RootSystem& rs, std::int64_t k, const Weight& lambda) {
    double num = 1.0, den = 1.0;
    for (const auto& alpha : rs.positive_roots()) {
        num *= std::sin(kPi / double(k) * rs.inner(lambda + rs.rho(), alpha).to_double());
        den *= std::sin(kPi / double(k) * rs.inner(rs.rho(), alpha).to_double());
    }
    return num / den;
}

double det_sqrt_one_minus_exp_ad(const RootSystem& rs, const Weight& b) {
    double prod = 1.0;
    for (const auto& alpha : rs.positive_roots())
        prod *= 2.0 * std::sin(kPi * rs.inner(alpha, b).to_double());
    return prod;
}

LevelData level_data(const RootSystem& rs, std::int64_t k, std::size_t weyl_cap, int threads) {
    LevelData ld;
    ld.rs = rs;
    ld.k = k;
    ld.labels = dominant_weights_at_level(rs, k);  // rejects k <= cg
    const int n = ld.n();
    const auto weyl = weyl_group(rs, weyl_cap);

    // prefactor i^{#R+} / (k^{rank/2} |Lambda/Gamma|^{1/2})
    static const std::complex<double> i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::complex<double> pref = i_pow[rs.positive_roots().size() % 4] /
                                (std::pow(double(k), rs.rank() / 2.0) * std::sqrt(double(rs.lattice_index())));

    // Weyl images of the shifted labels, shared across rows
    std::vector<std::vector<Weight>> images(n);
    parallel_for(threads, n, [&](std::size_t j) {
        images[j].reserve(weyl.size());
        Weight shifted = ld.labels[j] + rs.rho();
        for (const auto& w : weyl) images[j].push_back(w.apply(shifted));
    });

    ld.S.assign((std::size_t)n * n, 0.0);
    parallel_for(threads, n, [&](std::size_t i) {
        Weight li = ld.labels[i] + rs.rho();
        for (int j = 0; j < n; ++j) {
            std::complex<double> sum = 0.0;
            for (std::size_t t = 0; t < weyl.size(); ++t) {
                Rat e = Rat(-2) * rs.inner(li, images[j][t]) / Rat(k);
                sum += double(weyl[t].sign) * unit_phase_pi(e);
            }
            ld.S[i * n + j] = pref * sum;
        }
    });

    ld.theta.resize(n);
    ld.qdim.resize(n);
    ld.bar.resize(n);
    const double s00 = ld.S[0].real();
    if (std::abs(ld.S[0].imag()) > 1e-12 || s00 <= 0)
        throw std::logic_error("S_00 is not real positive: " + std::to_string(ld.S[0].real()) + "+" +
                               std::to_string(ld.S[0].imag()) + "i");
    for (int i = 0; i < n; ++i) {
        ld.theta[i] = theta_pow(rs, k, ld.labels[i], Rat(1));
        std::complex<double> si0 = ld.S[(std::size_t)i * n];
        if (std::abs(si0.imag()) > 1e-10 || si0.real() <= 0)
            throw std::logic_error("S_{lambda 0} is not real positive at label " + ld.labels[i].str());
        ld.qdim[i] = si0.real() / s00;
        double sine = qdim_sine_product(rs, k, ld.labels[i]);
        if (std::abs(ld.qdim[i] - sine) > 1e-9)
            throw std::logic_error("quantum dimension mismatch between S-ratio and sine product at " +
                                   ld.labels[i].str());
        // conjugate label: dominant representative of -lambda
        ld.bar[i] = -1;
        Weight conj = rs.dominant_rep(-ld.labels[i]);
        for (int j = 0; j < n; ++j)
            if (ld.labels[j] == conj) { ld.bar[i] = j; break; }
        if (ld.bar[i] < 0)
            throw std::logic_error("conjugate of label " + ld.labels[i].str() + " missing from Lambda_+^k");
    }
    for (int i = 0; i < n; ++i)
        if (ld.bar[ld.bar[i]] != i) throw std::logic_error("bar is not an involution");
    if (std::abs(ld.qdim[0] - 1.0) > 1e-12) throw std::logic_error("qdim of the unit label is not 1");
    return ld;
}

std::complex<double> verlinde_number(const LevelData& ld, int li, int lj, int lk) {
    std::complex<double> sum = 0.0;
    for (int a = 0; a < ld.n(); ++a)
        sum += ld.s(a, li) * ld.s(a, lj) * ld.s(a, lk) / ld.s(a, 0);
    return sum;
}

std::complex<double> verlinde_number(const LevelData& ld, const Weight& lambda, const Weight& mu,
                                     const Weight& nu) {
    return verlinde_number(ld, ld.index_of(lambda), ld.index_of(mu), ld.index_of(nu));
}

std::int64_t fusion_racah(const LevelData& ld, const MultiplicityTable& lambda_table,
                          const Weight& mu, const Weight& nu) {
    if (!ld.has_label(mu) || !ld.has_label(nu))
        throw std::invalid_argument("fusion_racah: mu and nu must lie in Lambda_+^k");
    return signed_mult(ld.rs, ld.k, lambda_table, 1, mu, nu).total;
}

std::int64_t fusion_racah(const LevelData& ld, const Weight& lambda, const Weight& mu,
                          const Weight& nu) {
    return fusion_racah(ld, *cached_multiplicities(ld.rs, lambda), mu, nu);
}

double ModularResiduals::max() const {
    return std::max(std::max(symmetry, unitarity), std::max(s2_vs_c, c2));
}

ModularResiduals verify_modular_identities(const LevelData& ld) {
    const int n = ld.n();
    ModularResiduals r;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            r.symmetry = std::max(r.symmetry, std::abs(ld.s(i, j) - ld.s(j, i)));
            std::complex<double> uu = 0.0, ss = 0.0;
            int cc = 0;
            for (int l = 0; l < n; ++l) {
                uu += ld.s(i, l) * std::conj(ld.s(j, l));
                ss += ld.s(i, l) * ld.s(l, j);
                cc += (ld.bar[i] == l ? 1 : 0) * (ld.bar[l] == j ? 1 : 0);
            }
            double id = i == j ? 1.0 : 0.0;
            double c = ld.bar[i] == j ? 1.0 : 0.0;
            r.unitarity = std::max(r.unitarity, std::abs(uu - id));
            r.s2_vs_c = std::max(r.s2_vs_c, std::abs(ss - c));
            r.c2 = std::max(r.c2, std::abs(double(cc) - id));
        }
    return r;
}

}  // namespace qtop
