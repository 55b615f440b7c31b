#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <set>
#include <vector>

#include "tghz/classical.hpp"
#include "tghz/timeline.hpp"

using tghz::Distribution;
using tghz::enumerate_timelines;
using tghz::PhaseExponent;
using tghz::Timeline;

namespace {

Timeline make_timeline(std::vector<std::int64_t> ks, std::size_t d) {
    return Timeline::from_exponents(ks, d);
}

}  // namespace

TEST_CASE("product constraint validation") {
    CHECK(make_timeline({0, 0, 0, 0}, 2).satisfies_product_constraint());
    CHECK(make_timeline({1, 1, 0, 0}, 2).satisfies_product_constraint());
    CHECK_FALSE(make_timeline({1, 0, 0, 0}, 2).satisfies_product_constraint());

    CHECK_THROWS_AS(Timeline({PhaseExponent(0, 2), PhaseExponent(0, 3)}), std::invalid_argument);
    CHECK_THROWS_AS(Timeline({PhaseExponent(0, 2)}), std::invalid_argument);
}

TEST_CASE("enumeration produces the constrained set in lexicographic order") {
    const auto n4d2 = enumerate_timelines(4, 2);
    CHECK(n4d2.size() == 8);

    const auto n2d2 = enumerate_timelines(2, 2);
    REQUIRE(n2d2.size() == 2);
    CHECK(n2d2[0] == make_timeline({0, 0}, 2));
    CHECK(n2d2[1] == make_timeline({1, 1}, 2));

    // brute-force oracle: keep the triples out of all 27 whose exponents sum to 0 mod 3
    std::vector<Timeline> oracle;
    for (std::int64_t a = 0; a < 3; ++a) {
        for (std::int64_t b = 0; b < 3; ++b) {
            for (std::int64_t c = 0; c < 3; ++c) {
                if ((a + b + c) % 3 == 0) oracle.push_back(make_timeline({a, b, c}, 3));
            }
        }
    }
    const auto n3d3 = enumerate_timelines(3, 3);
    REQUIRE(n3d3.size() == 9);
    CHECK(n3d3 == oracle);
}

TEST_CASE("enumeration is distinct, valid and sorted on a small grid") {
    for (std::size_t n = 2; n <= 6; ++n) {
        for (std::size_t d = 2; d <= 6; ++d) {
            if (tghz::timeline_count(n, d) > 100'000) continue;
            const auto all = enumerate_timelines(n, d);
            CHECK(all.size() == tghz::timeline_count(n, d));
            CHECK(std::is_sorted(all.begin(), all.end()));
            CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
            for (const auto& t : all) {
                CHECK(t.satisfies_product_constraint());
            }
        }
    }
}

TEST_CASE("enumeration cap carries the required count") {
    try {
        (void)enumerate_timelines(12, 10, 1'000'000);
        FAIL("cap not enforced");
    } catch (const tghz::enumeration_cap_error& e) {
        CHECK(e.required_count == 100'000'000'000ull);
        CHECK(std::string(e.what()).find("too large to enumerate") != std::string::npos);
    }
}

TEST_CASE("distributions validate and merge their support") {
    auto t0 = make_timeline({0, 0, 0, 0}, 2);
    auto t1 = make_timeline({1, 1, 0, 0}, 2);

    const Distribution merged({t0, t1, t0}, {0.25, 0.5, 0.25});
    CHECK(merged.size() == 2);
    CHECK(merged.prob(0) == 0.5);
    CHECK(merged.prob(1) == 0.5);

    CHECK_THROWS_AS(Distribution({t0}, {0.9}), std::invalid_argument);
    CHECK_THROWS_AS(Distribution({t0, t1}, {1.5, -0.5}), std::invalid_argument);
    CHECK_THROWS_AS(Distribution({make_timeline({1, 0, 0, 0}, 2)}, {1.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Distribution({t0, make_timeline({0, 0}, 2)}, {0.5, 0.5}),
                    std::invalid_argument);
}

TEST_CASE("qubit extremal family") {
    const auto dist = tghz::qubit_extremal_distribution(4);
    REQUIRE(dist.size() == 4);
    CHECK(dist.timeline(0) == make_timeline({0, 0, 0, 0}, 2));
    CHECK(dist.timeline(1) == make_timeline({1, 1, 0, 0}, 2));
    CHECK(dist.timeline(2) == make_timeline({1, 0, 1, 0}, 2));
    CHECK(dist.timeline(3) == make_timeline({1, 0, 0, 1}, 2));
    for (std::size_t j = 0; j < 4; ++j) CHECK(dist.prob(j) == 0.25);

    CHECK(tghz::evaluate(dist).value == -0.0625);

    const auto n6 = tghz::evaluate(tghz::qubit_extremal_distribution(6));
    CHECK(std::abs(n6.value - (-std::pow(4.0 / 6.0, 6))) < 1e-12);

    CHECK_THROWS_WITH(tghz::qubit_extremal_distribution(5),
                      Catch::Matchers::ContainsSubstring("even"));
    CHECK_THROWS_AS(tghz::qubit_extremal_distribution(2), std::invalid_argument);
}

TEST_CASE("qubit extremal family evaluates to the closed form") {
    for (std::size_t n = 4; n <= 12; n += 2) {
        const auto obj = tghz::evaluate(tghz::qubit_extremal_distribution(n));
        const double expected =
            -std::pow((static_cast<double>(n) - 2.0) / static_cast<double>(n),
                      static_cast<double>(n));
        CHECK(std::abs(obj.value - expected) < 1e-12);
        CHECK(obj.imag_residual < 1e-12);
    }
}

TEST_CASE("divisible extremal family") {
    const auto dist = tghz::divisible_extremal_distribution(4, 4);
    REQUIRE(dist.size() == 2);
    CHECK(dist.timeline(0) == make_timeline({0, 0, 0, 0}, 4));
    CHECK(dist.timeline(1) == make_timeline({1, 1, 1, 1}, 4));
    CHECK(dist.prob(0) == 0.5);
    CHECK(dist.prob(1) == 0.5);

    CHECK(tghz::divisible_extremal_distribution(4, 8).timeline(1) ==
          make_timeline({2, 2, 2, 2}, 8));

    // ((1 + i)/2)^4 by direct complex arithmetic
    const std::complex<double> factor(0.5, 0.5);
    const std::complex<double> oracle = factor * factor * factor * factor;
    const auto obj = tghz::evaluate(dist);
    CHECK(std::abs(obj.value - oracle.real()) < 1e-15);
    CHECK(std::abs(obj.value + 0.25) < 1e-15);
    CHECK(obj.imag_residual < 1e-14);

    CHECK_THROWS_WITH(tghz::divisible_extremal_distribution(4, 6),
                      Catch::Matchers::ContainsSubstring("divide"));
    CHECK_THROWS_AS(tghz::divisible_extremal_distribution(2, 4), std::invalid_argument);
}

TEST_CASE("divisible extremal family evaluates to the closed form on a grid") {
    for (std::size_t n = 3; n <= 12; ++n) {
        for (std::size_t d = n; d <= 24; d += n) {
            const auto obj = tghz::evaluate(tghz::divisible_extremal_distribution(n, d));
            const double expected = tghz::closed_form_continuous_min(n);
            CHECK(std::abs(obj.value - expected) < 1e-12);
            CHECK(obj.imag_residual < 1e-12);
        }
    }
}
