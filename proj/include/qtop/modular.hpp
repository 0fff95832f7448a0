#ifndef QTOP_MODULAR_HPP
#define QTOP_MODULAR_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "qtop/affine.hpp"
#include "qtop/multiplicity.hpp"
#include "qtop/root_system.hpp"

namespace qtop {

// Level-k modular data. Immutable after construction; safe to share across
// threads. The construction checks the cheap invariants (twist moduli,
// positivity and double-formula agreement of the quantum dimensions, bar
// involution); the O(n^3) matrix identities live in verify_modular_identities.
struct LevelData {
    RootSystem rs;
    std::int64_t k = 0;
    std::vector<Weight> labels;                 // Lambda_+^k, graded-lex order
    std::vector<std::complex<double>> S;        // n x n, row-major
    std::vector<int> bar;                       // label -> conjugate label; C = delta_{i, bar(j)}
    std::vector<std::complex<double>> theta;    // ribbon twists, unit modulus
    std::vector<double> qdim;                   // S_{i0}/S_{00} > 0

    int n() const { return (int)labels.size(); }
    std::complex<double> s(int i, int j) const { return S[(std::size_t)i * labels.size() + j]; }
    double s0(int i) const { return S[(std::size_t)i * labels.size()].real(); }

    // index of a label; throws qtop::rejected for weights outside Lambda_+^k
    int index_of(const Weight& w) const;
    bool has_label(const Weight& w) const;
};

LevelData level_data(const RootSystem& rs, std::int64_t k, std::size_t weyl_cap = kDefaultWeylCap,
                     int threads = 1);

// exp(i pi e) with the exponent reduced exactly mod 2 before any floating
// point enters
std::complex<double> unit_phase_pi(const Rat& e);

// theta_lambda^r for exact rational r: exp(r (pi i / k) <lambda, lambda+2 rho>),
// computed from the rational exponent, never as a principal-branch power.
std::complex<double> theta_pow(const RootSystem& rs, std::int64_t k, const Weight& lambda,
                               const Rat& r);
std::complex<double> theta_pow(const LevelData& ld, const Weight& lambda, const Rat& r);

// quantum dimension by the Weyl-denominator sine product; valid for any
// dominant lambda, also outside Lambda_+^k
double qdim_sine_product(const RootSystem& rs, std::int64_t k, const Weight& lambda);

// product of 2 sin(pi <alpha, b>) over positive roots: the square-root
// regularized determinant of 1 - exp(ad b) on the form complement
double det_sqrt_one_minus_exp_ad(const RootSystem& rs, const Weight& b);

// N_{lambda mu nu} = sum_alpha S_{a l} S_{a m} S_{a n} / S_{a 0};
// integer-valued up to float noise, totally symmetric
std::complex<double> verlinde_number(const LevelData& ld, int li, int lj, int lk);
std::complex<double> verlinde_number(const LevelData& ld, const Weight& lambda, const Weight& mu,
                                     const Weight& nu);

// fusion coefficient N^mu_{lambda nu} by the quantum Racah formula; exact.
// lambda any dominant integral weight, mu and nu in Lambda_+^k.
std::int64_t fusion_racah(const LevelData& ld, const MultiplicityTable& lambda_table,
                          const Weight& mu, const Weight& nu);
std::int64_t fusion_racah(const LevelData& ld, const Weight& lambda, const Weight& mu,
                          const Weight& nu);

struct ModularResiduals {
    double symmetry = 0;    // max |S - S^T|
    double unitarity = 0;   // max |S S* - 1|
    double s2_vs_c = 0;     // max |S S - C|
    double c2 = 0;          // max |C C - 1| (exact permutation algebra, kept for the report)
    double max() const;
};

// entrywise residuals of the matrix identities; O(n^3)
ModularResiduals verify_modular_identities(const LevelData& ld);

}  // namespace qtop

#endif
