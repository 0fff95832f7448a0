#include "doctest.h"
#include "qtop/rational.hpp"
#include "qtop/weight.hpp"

using qtop::Rat;
using qtop::Weight;

TEST_CASE("rational arithmetic is exact and normalized") {
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-3, -6) == Rat(1, 2));
    CHECK(Rat(1, -2) == Rat(-1, 2));
    CHECK((Rat(3, 4) * Rat(2, 3)) == Rat(1, 2));
    CHECK((Rat(7, 2) / Rat(7, 4)) == Rat(2));
    CHECK(Rat(5, 3).floor() == 1);
    CHECK(Rat(-5, 3).floor() == -2);
    CHECK(Rat(7, 2).mod(2) == Rat(3, 2));
    CHECK(Rat(-1, 2).mod(2) == Rat(3, 2));
    CHECK(Rat(-7, 2).mod(1) == Rat(1, 2));
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(6, 3).is_integer());
    CHECK(Rat(6, 3).to_integer() == 2);
    CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rat(1, 3).to_integer(), std::domain_error);
}

TEST_CASE("weight arithmetic") {
    Weight a{Rat(1), Rat(-1, 2)};
    Weight b{Rat(1, 2), Rat(1, 2)};
    CHECK((a + b) == Weight{Rat(3, 2), Rat(0)});
    CHECK((a - b) == Weight{Rat(1, 2), Rat(-1)});
    CHECK((Rat(2) * b) == Weight{Rat(1), Rat(1)});
    CHECK(dot(a, b) == Rat(1, 4));
    CHECK((a - a).is_zero());
}
