#include <doctest.h>

#include <cmath>
#include <vector>

#include "ngauss/error.hpp"
#include "ngauss/moments.hpp"
#include "ngauss/random.hpp"
#include "support/oracles.hpp"

using namespace ngauss;

TEST_CASE("sample construction") {
    CHECK_THROWS_AS(Sample({}), InvalidInputError);
    CHECK_THROWS_AS(Sample({1.0, std::nan("")}), InvalidInputError);
    CHECK_THROWS_AS(Sample({1.0, HUGE_VAL}), InvalidInputError);
    Sample s({3.0, 1.0}, "x");
    CHECK(s.size() == 2);
    CHECK(s[0] == 3.0);
    CHECK(s.label().value() == "x");
}

TEST_CASE("mean") {
    CHECK(mean(Sample({1, 2, 3})) == 2.0);
    CHECK(mean(Sample({5})) == 5.0);
    CHECK(mean(Sample({-1, 1, -1, 1})) == 0.0);
    CHECK(mean(Sample(std::vector<double>(7, 0.1))) == doctest::Approx(0.1).epsilon(1e-15));
}

TEST_CASE("central moments use n - 1 for every order") {
    CHECK(central_moment(Sample({0, 2}), 2) == 2.0);
    CHECK(central_moment(Sample({-1, 0, 1}), 2) == 1.0);
    CHECK(central_moment(Sample({0, 0, 3}), 3) == doctest::Approx(((-1.0) * 1 * 1 * 2 + 8.0) / 2.0));
    CHECK(central_moment(Sample({-1, 0, 1}), 2, Divisor::N) == doctest::Approx(2.0 / 3.0));
    CHECK_THROWS_AS((void)central_moment(Sample({1.0}), 2), InsufficientDataError);
    CHECK_THROWS_AS((void)central_moment(Sample({1.0, 2.0}), 0), InvalidInputError);

    oracle::Gen g(7);
    for (int t = 0; t < 50; ++t) {
        auto v = g.normals(static_cast<std::size_t>(g.integer(2, 200)), g.uniform(-1e3, 1e3), 5.0);
        double spread = 0.0;
        const double m = mean(Sample(v));
        for (double x : v) spread = std::max(spread, std::fabs(x - m));
        CHECK(std::fabs(central_moment(Sample(v), 1)) <= 1e-12 * spread);
    }
}

TEST_CASE("summary") {
    auto s = summary(Sample({-2, -1, 0, 1, 2}));
    CHECK(s.n == 5);
    CHECK(std::fabs(s.skewness) <= 1e-12);
    CHECK(s.sd == doctest::Approx(std::sqrt(2.5)));
    // mu4 = 34/4, s^4 = 6.25
    CHECK(s.kurtosis == doctest::Approx(8.5 / 6.25));

    CHECK_THROWS_AS((void)summary(Sample({1, 2, 3})), InsufficientDataError);
    CHECK_THROWS_AS((void)summary(Sample({4, 4, 4, 4, 4})), DegenerateSampleError);

    // large offsets survive the two-pass scheme
    auto big = summary(Sample({1e9 + 1, 1e9 - 1, 1e9 + 2, 1e9 - 2}));
    CHECK(big.sd == doctest::Approx(std::sqrt(10.0 / 3.0)).epsilon(1e-9));
}

TEST_CASE("summary agrees with a direct evaluation") {
    oracle::Gen g(11);
    for (int t = 0; t < 30; ++t) {
        auto v = g.normals(static_cast<std::size_t>(g.integer(4, 300)), 1.0, 2.0);
        for (auto& x : v) x = x * x * x * 0.1 + x;
        auto s = summary(Sample(v));
        auto o = oracle::plain_moments(v);
        CHECK(s.mean == doctest::Approx(o.mean).epsilon(1e-12));
        CHECK(s.sd == doctest::Approx(o.sd).epsilon(1e-12));
        CHECK(s.skewness == doctest::Approx(o.skew).epsilon(1e-10));
        CHECK(s.kurtosis == doctest::Approx(o.kurt).epsilon(1e-10));
        CHECK(s.kurtosis > 0.0);
    }
}

TEST_CASE("gaussian draws have kurtosis near 3") {
    Rng rng(2024);
    std::vector<double> v(100000);
    for (auto& x : v) x = rng.normal();
    auto s = summary(Sample(v));
    CHECK(s.kurtosis >= 2.9);
    CHECK(s.kurtosis <= 3.1);
}

TEST_CASE("center") {
    auto c = center(Sample({1, 2, 3}));
    CHECK(c.vector() == std::vector<double>{-1, 0, 1});
    CHECK(center(Sample({5})).vector() == std::vector<double>{0});
    auto once = center(Sample({-1.5, 0.25, 1.25}));
    auto twice = center(once);
    for (std::size_t i = 0; i < once.size(); ++i) CHECK(std::fabs(twice[i] - once[i]) <= 1e-15);
}

TEST_CASE("properties: centering, translation, scale, reflection") {
    oracle::Gen g(99);
    for (int t = 0; t < 100; ++t) {
        const auto n = static_cast<std::size_t>(g.integer(4, 150));
        auto v = g.normals(n, g.uniform(-50, 50), g.uniform(0.1, 10));
        for (auto& x : v) x += 0.2 * x * x;  // some skew
        const Sample s(v);
        double maxabs = 0.0;
        for (double x : v) maxabs = std::max(maxabs, std::fabs(x));
        CHECK(std::fabs(mean(center(s))) <= 1e-12 * maxabs);

        const auto base = summary(s);
        const double shift = g.uniform(-100, 100);
        const double scale = g.uniform(0.01, 100);
        std::vector<double> shifted = v, scaled = v, flipped = v;
        for (auto& x : shifted) x += shift;
        for (auto& x : scaled) x *= scale;
        for (auto& x : flipped) x = -x;

        auto a = summary(Sample(shifted));
        CHECK(a.mean == doctest::Approx(base.mean + shift).epsilon(1e-10));
        CHECK(a.sd == doctest::Approx(base.sd).epsilon(1e-10));
        CHECK(a.skewness == doctest::Approx(base.skewness).epsilon(1e-10));
        CHECK(a.kurtosis == doctest::Approx(base.kurtosis).epsilon(1e-10));

        auto b = summary(Sample(scaled));
        CHECK(b.mean == doctest::Approx(base.mean * scale).epsilon(1e-10));
        CHECK(b.sd == doctest::Approx(base.sd * scale).epsilon(1e-10));
        CHECK(b.skewness == doctest::Approx(base.skewness).epsilon(1e-10));
        CHECK(b.kurtosis == doctest::Approx(base.kurtosis).epsilon(1e-10));

        auto c = summary(Sample(flipped));
        CHECK(std::fabs(c.skewness + base.skewness) <= 1e-12);
        CHECK(std::fabs(c.kurtosis - base.kurtosis) <= 1e-12);
    }
}
