#include "doctest.h"

#include <cmath>

#include "hyperrigid/geometry.hpp"

using namespace hyperrigid;

TEST_CASE("angle reduction") {
    CHECK(reduce_angle(0.5) == 0.5);
    CHECK(reduce_angle(kTwoPi) == 0.0);
    CHECK(reduce_angle(-0.5) == doctest::Approx(kTwoPi - 0.5).epsilon(1e-15));
    CHECK(reduce_angle(1.0 + kTwoPi) == 1.0);  // exact sum, exact fmod
}

TEST_CASE("intervals") {
    const CircleInterval iv = make_interval(1.0, 2.0);
    CHECK(iv.contains(1.5));
    CHECK(iv.contains(1.5 + kTwoPi));
    CHECK(!iv.contains(0.5));
    CHECK(iv.normalized());
    CHECK_THROWS_AS(make_interval(2.0, 1.0), std::invalid_argument);

    const auto plain = split_wrapping(1.0, 2.0);
    REQUIRE(plain.size() == 1);
    CHECK(plain[0].lo == 1.0);

    const auto wrapped = split_wrapping(6.0, 1.0);
    REQUIRE(wrapped.size() == 2);
    CHECK(wrapped[0].lo == 6.0);
    CHECK(wrapped[0].hi < kTwoPi);
    CHECK(wrapped[1].lo == 0.0);
    CHECK(wrapped[1].hi == 1.0);
    CHECK(wrapped[0].normalized());
    CHECK(wrapped[1].normalized());
}

TEST_CASE("vector helpers") {
    CHECK(dot({1, 2}, {3, 4}) == 11.0);
    CHECK(cross({1, 0}, {0, 1}) == 1.0);
    const Vec2 rotated = perp({2, 1});
    CHECK(rotated.x == -1.0);
    CHECK(rotated.y == 2.0);
}
