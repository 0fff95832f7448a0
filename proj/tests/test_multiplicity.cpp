#include <cmath>
#include <complex>

#include "doctest.h"
#include "oracles.hpp"
#include "qtop/multiplicity.hpp"

using namespace qtop;

namespace {

Weight fw(const RootSystem& rs, std::vector<std::int64_t> c) { return rs.weight_from_fw_coords(c); }

}  // namespace

TEST_CASE("A1 weight strings") {
    RootSystem a1 = RootSystem::build(Series::A, 1);
    const Weight w = a1.fundamental_weights()[0];

    MultiplicityTable t = weight_multiplicities(a1, Rat(2) * w);
    CHECK(t.dim == 3);
    CHECK(t.entries.size() == 3);
    CHECK(t.mult(a1, Rat(2) * w) == 1);
    CHECK(t.mult(a1, Weight(a1.ambient_dim())) == 1);
    CHECK(t.mult(a1, Rat(-2) * w) == 1);
    CHECK(t.mult(a1, w) == 0);                // parity gap
    CHECK(t.mult(a1, Rat(1, 2) * w) == 0);    // off the weight lattice

    CHECK_THROWS_AS(weight_multiplicities(a1, -w), std::invalid_argument);
    CHECK_THROWS_AS(weight_multiplicities(a1, Rat(1, 2) * w), std::invalid_argument);
}

TEST_CASE("A2 adjoint multiplicities") {
    RootSystem a2 = RootSystem::build(Series::A, 2);
    MultiplicityTable t = weight_multiplicities(a2, fw(a2, {1, 1}));
    CHECK(t.dim == 8);
    CHECK(t.mult(a2, Weight(a2.ambient_dim())) == 2);
    for (const auto& r : a2.positive_roots()) {
        CHECK(t.mult(a2, r) == 1);
        CHECK(t.mult(a2, -r) == 1);
    }
}

TEST_CASE("Freudenthal agrees with the tensor-decomposition oracle") {
    for (auto [s, n] : {std::pair{Series::A, 1}, {Series::A, 2}, {Series::A, 3},
                        {Series::B, 2}, {Series::B, 3}, {Series::C, 3}, {Series::G, 2}}) {
        RootSystem rs = RootSystem::build(s, n);
        CAPTURE(rs.name());
        // all dominant weights of dimension <= 200
        std::vector<std::int64_t> c(n, 0);
        auto each = [&](auto&& self, int pos) -> void {
            if (pos == n) {
                Weight lambda = rs.weight_from_fw_coords(c);
                if (rs.weyl_dim(lambda) > 200) return;
                CAPTURE(lambda.str());
                MultiplicityTable t = weight_multiplicities(rs, lambda);
                oracle::CharTable o = oracle::char_table(rs, lambda);
                CHECK(t.dim == oracle::dim_of(o));
                CHECK(t.entries.size() == o.size());
                for (const auto& [w, m] : o) {
                    auto it = t.entries.find(w);
                    REQUIRE(it != t.entries.end());
                    CHECK(it->second == m);
                }
                return;
            }
            for (c[pos] = 0; c[pos] <= 6; ++c[pos]) self(self, pos + 1);
            c[pos] = 0;
        };
        each(each, 0);
    }
}

TEST_CASE("character evaluation") {
    RootSystem a1 = RootSystem::build(Series::A, 1);
    const Weight w = a1.fundamental_weights()[0];

    SUBCASE("classical dimension at b = 0") {
        for (auto [s, n] : {std::pair{Series::A, 2}, {Series::B, 2}}) {
            RootSystem rs = RootSystem::build(s, n);
            Weight lambda = fw(rs, std::vector<std::int64_t>(n, 1));
            std::complex<double> v = character_eval(rs, lambda, Weight(rs.ambient_dim()));
            CHECK(v.real() == doctest::Approx(double(rs.weyl_dim(lambda))).epsilon(1e-12));
            CHECK(std::abs(v.imag()) < 1e-12);
        }
    }
    SUBCASE("A1 fundamental character is 2 cos(2 pi t)") {
        for (auto t : {Rat(1, 3), Rat(2, 5), Rat(7, 4)}) {
            // choose b with <w, b> = t, i.e. b = 2 t w
            Weight b = (Rat(2) * t) * w;
            std::complex<double> v = character_eval(a1, w, b);
            CHECK(v.real() == doctest::Approx(2.0 * std::cos(2.0 * 3.14159265358979324 * t.to_double()))
                                  .epsilon(1e-12));
            CHECK(std::abs(v.imag()) < 1e-12);
        }
    }
    SUBCASE("Weyl invariance of the character") {
        RootSystem b2 = RootSystem::build(Series::B, 2);
        Weight lambda = fw(b2, {1, 1});
        MultiplicityTable table = weight_multiplicities(b2, lambda);
        Weight b = Rat(1, 7) * (b2.rho() + b2.fundamental_weights()[1]);
        std::complex<double> ref = character_eval(b2, table, b);
        for (const auto& elem : weyl_group(b2)) {
            std::complex<double> v = character_eval(b2, table, elem.apply(b));
            CHECK(std::abs(v - ref) < 1e-10);
        }
    }
}

TEST_CASE("plethysm coefficients") {
    RootSystem a1 = RootSystem::build(Series::A, 1);
    const Weight w = a1.fundamental_weights()[0];
    const Weight zero(a1.ambient_dim());

    SUBCASE("p = 1 is the identity") {
        for (auto [s, n] : {std::pair{Series::A, 2}, {Series::B, 2}}) {
            RootSystem rs = RootSystem::build(s, n);
            Weight lambda = fw(rs, std::vector<std::int64_t>(n, 1));
            auto c = plethysm_coeffs(rs, lambda, 1);
            REQUIRE(c.size() == 1);
            CHECK(c.at(lambda) == 1);
        }
    }
    SUBCASE("A1 fundamental squared") {
        auto c = plethysm_coeffs(a1, w, 2);
        REQUIRE(c.size() == 2);
        CHECK(c.at(Rat(2) * w) == 1);
        CHECK(c.at(zero) == -1);
    }
    SUBCASE("A1 spin-1 squared") {
        auto c = plethysm_coeffs(a1, Rat(2) * w, 2);
        REQUIRE(c.size() == 3);
        CHECK(c.at(Rat(4) * w) == 1);
        CHECK(c.at(Rat(2) * w) == -1);
        CHECK(c.at(zero) == 1);
    }
    SUBCASE("Adams operations preserve dimension") {
        for (auto [s, n] : {std::pair{Series::A, 2}, {Series::B, 2}, {Series::G, 2}}) {
            RootSystem rs = RootSystem::build(s, n);
            for (std::int64_t p : {2, 3}) {
                Weight lambda = fw(rs, std::vector<std::int64_t>(n, 1));
                std::int64_t total = 0;
                for (const auto& [mu, c] : plethysm_coeffs(rs, lambda, p))
                    total += c * rs.weyl_dim(mu);
                CHECK(total == rs.weyl_dim(lambda));
            }
        }
    }
}
