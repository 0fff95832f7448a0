#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "qtop/invariants.hpp"
#include "qtop/linkmodel.hpp"

using namespace qtop;

namespace {

SurfaceLink one_loop(const Weight& color, std::int64_t winding) {
    SurfaceLink link;
    link.loops.push_back({"l0", kOuterFace, winding, color, true});
    return link;
}

}  // namespace

TEST_CASE("fiber links and Verlinde dimensions") {
    RootSystem a1 = RootSystem::build(Series::A, 1);
    LevelData ld = level_data(a1, 4);
    const Weight w = a1.fundamental_weights()[0];

    SUBCASE("empty sphere gives 1, torus counts labels") {
        CHECK(std::abs(z_fiber_link(ld, 0, {}).value - 1.0) < 1e-10);
        CHECK(std::abs(z_fiber_link(ld, 1, {}).value - 3.0) < 1e-9);
        CHECK(verlinde_dim(ld, 0) == 1);
        CHECK(verlinde_dim(ld, 1) == 3);
    }
    SUBCASE("A1 k=4 genus 2 evaluates to 10") {
        CHECK(verlinde_dim(ld, 2) == 10);
    }
    SUBCASE("three fiber colors give fusion multiplicities") {
        LevelData ld5 = level_data(a1, 5);
        auto n3 = [&](int a, int b, int c) {
            std::complex<double> v =
                z_fiber_link(ld5, 0, {ld5.labels[a], ld5.labels[b], ld5.labels[c]}).value;
            CHECK(std::abs(v.imag()) < 1e-9);
            CHECK(std::abs(v.real() - std::round(v.real())) < 1e-7);
            return (std::int64_t)std::llround(v.real());
        };
        CHECK(n3(1, 1, 2) == 1);
        CHECK(n3(1, 1, 0) == 1);
        CHECK(n3(1, 1, 1) == 0);
        // agreement with the quantum Racah fusion after conjugation
        for (int a = 0; a < ld5.n(); ++a) {
            MultiplicityTable table = weight_multiplicities(a1, ld5.labels[a]);
            for (int b = 0; b < ld5.n(); ++b)
                for (int c = 0; c < ld5.n(); ++c)
                    CHECK(n3(a, b, c) ==
                          fusion_racah(ld5, table, ld5.labels[ld5.bar[c]], ld5.labels[b]));
        }
    }
    SUBCASE("colors outside the level are rejected") {
        CHECK_THROWS_AS(z_fiber_link(ld, 0, {Rat(5) * w}), rejected);
    }
}

TEST_CASE("torus knot spec validation") {
    RootSystem a1 = RootSystem::build(Series::A, 1);
    const Weight w = a1.fundamental_weights()[0];
    CHECK_THROWS_AS(validate(a1, {0, 1, w}), std::invalid_argument);
    CHECK_THROWS_AS(validate(a1, {2, 4, w}), std::invalid_argument);
    CHECK_THROWS_AS(validate(a1, {2, 3, Rat(1, 2) * w}), std::invalid_argument);
    CHECK_NOTHROW(validate(a1, {2, 3, w}));
    CHECK_NOTHROW(validate(a1, {3, 0, w}));  // q = 0 carries no coprimality constraint
}

TEST_CASE("torus knot brackets in S2 x S1") {
    RootSystem a1 = RootSystem::build(Series::A, 1);
    LevelData ld = level_data(a1, 4);
    const Weight w = a1.fundamental_weights()[0];
    const Weight zero(a1.ambient_dim());

    SUBCASE("trivial color gives 1") {
        for (auto [p, q] : {std::pair<std::int64_t, std::int64_t>{1, 0}, {2, 3}, {3, 2}}) {
            InvariantValue v = bracket_torus_knot_s2s1(ld, {p, q, zero});
            CHECK(std::abs(v.value - 1.0) < 1e-10);
        }
    }
    SUBCASE("p = 1 reduces to the one-loop shadow") {
        for (std::int64_t q = -2; q <= 3; ++q)
            for (int c = 0; c < ld.n(); ++c) {
                std::complex<double> knot = bracket_torus_knot_s2s1(ld, {1, q, ld.labels[c]}).value;
                std::complex<double> shadow = normalized_shadow(ld, one_loop(ld.labels[c], q));
                CHECK(std::abs(knot - shadow) < 1e-8);
            }
    }
    SUBCASE("fiber color 0 reduces to the plain bracket") {
        TorusKnotSpec spec{2, 3, w};
        CHECK(std::abs(bracket_torus_knot_with_fiber(ld, spec, zero).value -
                       bracket_torus_knot_s2s1(ld, spec).value) < 1e-10);
    }
    SUBCASE("trivial knot color with a fiber collapses to a delta") {
        for (int a = 0; a < ld.n(); ++a) {
            std::complex<double> v =
                bracket_torus_knot_with_fiber(ld, {2, 1, zero}, ld.labels[a]).value;
            CHECK(std::abs(v - (a == 0 ? 1.0 : 0.0)) < 1e-9);
        }
    }
}

TEST_CASE("brackets match the raw lattice-sum oracle") {
    RootSystem a1 = RootSystem::build(Series::A, 1);

    SUBCASE("plain bracket") {
        for (std::int64_t k = 4; k <= 6; ++k) {
            LevelData ld = level_data(a1, k);
            for (auto [p, q] : {std::pair<std::int64_t, std::int64_t>{2, 1}, {2, 3}, {3, 2}}) {
                for (const auto& lambda : ld.labels) {
                    INFO("k=", k, " p=", p, " q=", q, " lambda=", lambda.str());
                    TorusKnotSpec spec{p, q, lambda};
                    std::complex<double> fast = bracket_torus_knot_s2s1(ld, spec).value;
                    std::complex<double> slow = oracle::lattice_sum_bracket(a1, k, spec);
                    CHECK(std::abs(fast - slow) < 1e-8);
                }
            }
        }
    }
    SUBCASE("with a fiber loop") {
        LevelData ld = level_data(a1, 5);
        const Weight w = a1.fundamental_weights()[0];
        for (auto [p, q, ai] : {std::tuple<std::int64_t, std::int64_t, int>{2, 1, 1},
                                {2, 3, 2}, {3, 2, 1}}) {
            TorusKnotSpec spec{p, q, w};
            const Weight alpha = ld.labels[ai];
            std::complex<double> fast = bracket_torus_knot_with_fiber(ld, spec, alpha).value;
            std::complex<double> slow = oracle::lattice_sum_bracket(a1, 5, spec, &alpha);
            CHECK(std::abs(fast - slow) < 1e-8);
        }
    }
}

TEST_CASE("Rosso-Jones value in S3") {
    RootSystem a1 = RootSystem::build(Series::A, 1);
    const Weight w = a1.fundamental_weights()[0];
    const Weight zero(a1.ambient_dim());

    SUBCASE("p = 1 collapses to S00 d theta^q") {
        LevelData ld = level_data(a1, 6);
        for (std::int64_t q : {0, 1, 5}) {
            for (int c = 0; c < ld.n(); ++c) {
                std::complex<double> v = z_s3_torus_knot(ld, {1, q, ld.labels[c]}).value;
                std::complex<double> expect =
                    ld.s0(0) * ld.qdim[c] * theta_pow(ld, ld.labels[c], Rat(q));
                CHECK(std::abs(v - expect) < 1e-10);
            }
        }
    }
    SUBCASE("trivial color gives S00") {
        LevelData ld = level_data(a1, 6);
        CHECK(std::abs(z_s3_torus_knot(ld, {2, 3, zero}).value - ld.s0(0)) < 1e-12);
    }
    SUBCASE("A1 trefoil-type value from the two-term coefficient form") {
        LevelData ld = level_data(a1, 40);
        std::complex<double> v = z_s3_torus_knot(ld, {2, 3, w}).value;
        std::complex<double> expect =
            ld.s0(0) * (qdim_sine_product(a1, 40, Rat(2) * w) * theta_pow(ld, Rat(2) * w, Rat(3, 2)) -
                        theta_pow(ld, Weight(a1.ambient_dim()), Rat(3, 2)));
        CHECK(std::abs(v - expect) < 1e-12);
    }
}

TEST_CASE("surgery cross-check at moderate level") {
    RootSystem a1 = RootSystem::build(Series::A, 1);
    LevelData ld = level_data(a1, 12);
    const Weight w = a1.fundamental_weights()[0];
    const Weight zero(a1.ambient_dim());

    SUBCASE("trivial color") {
        SurgeryCheck c = surgery_check(ld, {2, 3, zero});
        CHECK(c.support_in_level);
        CHECK(c.residual < 1e-9);
    }
    SUBCASE("p = 1 for small labels") {
        for (std::int64_t q : {0, 1, 3})
            for (int l = 0; l < 3; ++l) {
                SurgeryCheck c = surgery_check(ld, {1, q, ld.labels[l]});
                CHECK(c.support_in_level);
                CHECK(c.residual < 1e-7);
            }
    }
    SUBCASE("the trefoil window") {
        SurgeryCheck c = surgery_check(ld, {2, 3, w});
        CHECK(c.support_in_level);
        CHECK(c.residual < 1e-7);
    }
    SUBCASE("support sticking out of the level is flagged") {
        LevelData small = level_data(a1, 4);
        // p = 3 pushes the top coefficient to 3w + ...: outside level 4
        SurgeryCheck c = surgery_check(small, {3, 2, Rat(2) * small.rs.fundamental_weights()[0]});
        CHECK_FALSE(c.support_in_level);
    }
}

TEST_CASE("conjugating the color conjugates the bracket") {
    RootSystem a2 = RootSystem::build(Series::A, 2);
    LevelData ld = level_data(a2, 6);
    for (auto [p, q] : {std::pair<std::int64_t, std::int64_t>{2, 1}, {2, 3}}) {
        for (int c = 0; c < ld.n(); ++c) {
            TorusKnotSpec spec{p, q, ld.labels[c]};
            TorusKnotSpec conj{p, q, ld.labels[ld.bar[c]]};
            std::complex<double> a = bracket_torus_knot_s2s1(ld, spec).value;
            std::complex<double> b = bracket_torus_knot_s2s1(ld, conj).value;
            CHECK(std::abs(a - std::conj(b)) < 1e-8);
        }
    }
}
