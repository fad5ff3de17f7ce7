#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "ngauss/error.hpp"
#include "ngauss/moments.hpp"
#include "ngauss/power_transform.hpp"
#include "ngauss/random.hpp"
#include "support/oracles.hpp"

using namespace ngauss;

TEST_CASE("odd ratios") {
    auto c = OddRatio::from_kj(4, 5);
    CHECK(c.numerator() == 9);
    CHECK(c.denominator() == 11);
    CHECK(c.k() == 4);
    CHECK(c.j() == 5);
    CHECK(c.to_string() == "9/11");
    CHECK(c.reciprocal() == OddRatio::from_fraction(11, 9));
    CHECK(OddRatio::from_fraction(9, 15) == OddRatio::from_fraction(3, 5));
    CHECK(OddRatio::from_fraction(7, 7) == OddRatio::identity());
    CHECK(OddRatio::parse("11/9").value() == doctest::Approx(11.0 / 9.0));
    CHECK(OddRatio::parse("3") == OddRatio::from_fraction(3, 1));
    CHECK_THROWS_AS((void)OddRatio::from_fraction(2, 3), InvalidInputError);
    CHECK_THROWS_AS((void)OddRatio::from_fraction(-1, 3), InvalidInputError);
    CHECK_THROWS_AS((void)OddRatio::from_kj(-1, 0), InvalidInputError);
    CHECK_THROWS_AS((void)OddRatio::parse("4/5"), InvalidInputError);
    CHECK_THROWS_AS((void)OddRatio::parse("x"), InvalidInputError);
    CHECK_THROWS_AS((void)OddRatio::parse("1/"), InvalidInputError);
}

TEST_CASE("signed power") {
    const auto third = OddRatio::from_fraction(1, 3);
    CHECK(signed_pow(-8.0, third) == doctest::Approx(-2.0).epsilon(1e-15));
    for (auto c : enumerate_odd_ratios(15)) {
        CHECK(signed_pow(0.0, c) == 0.0);
        CHECK(signed_pow(1.0, c) == 1.0);
        CHECK(signed_pow(-1.0, c) == -1.0);
    }
    const auto c = OddRatio::from_fraction(9, 11);
    const double y = signed_pow(2.0, c);
    CHECK(signed_pow(y, c.reciprocal()) == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("signed power is odd and strictly increasing") {
    oracle::Gen g(5);
    const auto grid = enumerate_odd_ratios(31);
    for (int t = 0; t < 2000; ++t) {
        const auto& c = grid[static_cast<std::size_t>(g.integer(0, static_cast<int>(grid.size()) - 1))];
        const double x = g.uniform(-1e3, 1e3);
        CHECK(signed_pow(-x, c) == -signed_pow(x, c));
        const double x2 = x + std::fabs(x) * 1e-6 + 1e-9;
        CHECK(signed_pow(x2, c) > signed_pow(x, c));
    }
}

TEST_CASE("round trip over the full grid") {
    std::vector<OddRatio> all;
    for (long p = 1; p <= 31; p += 2)
        for (long q = 1; q <= 31; q += 2) all.push_back(OddRatio::from_fraction(p, q));
    double worst = 0.0;
    for (const auto& c : all) {
        for (double e = -6.0; e <= 6.0; e += 0.05) {
            for (double s : {1.0, -1.0}) {
                const double x = s * std::pow(10.0, e) * 1.2345;
                if (std::fabs(x) > 1e6) continue;
                const double back = signed_pow(signed_pow(x, c), c.reciprocal());
                worst = std::max(worst, std::fabs(back - x) / std::fabs(x));
            }
        }
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("transform_sample") {
    const auto c = OddRatio::from_fraction(7, 9);
    CHECK(transform_sample(Sample({-1, 0, 1}), c).vector() == std::vector<double>{-1, 0, 1});
    const Sample up({-5, -2, -0.1, 0, 0.3, 4, 9});
    auto t = transform_sample(up, c);
    REQUIRE(t.size() == up.size());
    for (std::size_t i = 1; i < t.size(); ++i) CHECK(t[i] > t[i - 1]);

    const Sample huge({1.0, 1e200, 2.0});
    try {
        (void)transform_sample(huge, OddRatio::from_fraction(3, 1));
        FAIL("expected RangeError");
    } catch (const RangeError& e) {
        CHECK(e.index() == 1);
    }
}

TEST_CASE("power kurtosis") {
    CHECK(std::fabs(power_kurtosis(1.0) - 3.0) <= 1e-12);
    CHECK(std::fabs(power_kurtosis(3.0 / 5.0) - 1.779) <= 5e-4);
    CHECK(std::fabs(power_kurtosis(9.0 / 7.0) - 4.404) <= 5e-4);
    CHECK_THROWS_AS((void)power_kurtosis(0.0), DomainError);
    CHECK_THROWS_AS((void)power_kurtosis(-1.0), DomainError);

    for (double c = 0.05; c <= 3.0; c += 0.01)
        CHECK(power_kurtosis(c) == doctest::Approx(oracle::power_kurtosis(c)).epsilon(1e-10));
    // c = 2: E z^8 / (E z^4)^2 = 105 / 9
    CHECK(power_kurtosis(2.0) == doctest::Approx(105.0 / 9.0).epsilon(1e-12));

    double prev = 0.0;
    for (double c = 0.4; c <= 2.0 + 1e-9; c += 0.1) {
        const double b = power_kurtosis(c);
        CHECK(b > prev);
        prev = b;
    }
}

TEST_CASE("kurtosis table") {
    std::vector<OddRatio> in{OddRatio::from_fraction(3, 5), OddRatio::from_fraction(5, 7),
                             OddRatio::from_fraction(7, 9)};
    auto rows = kurtosis_table(in);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].c == in[0]);
    CHECK(std::fabs(rows[0].beta2 - 1.779) <= 5e-4);
    CHECK(std::fabs(rows[1].beta2 - 2.06) <= 5e-3);
    CHECK(std::fabs(rows[2].beta2 - 2.237) <= 5e-4);

    std::vector<OddRatio> id{OddRatio::identity()};
    CHECK(kurtosis_table(id)[0].beta2 == doctest::Approx(3.0).epsilon(1e-12));
    std::vector<OddRatio> s{OddRatio::from_fraction(17, 15)};
    // printed as 3.58: the table truncates this entry (3.5863...)
    const double b = kurtosis_table(s)[0].beta2;
    CHECK(std::floor(b * 100.0) / 100.0 == doctest::Approx(3.58).epsilon(1e-12));
    CHECK(b == doctest::Approx(oracle::power_kurtosis(17.0 / 15.0)).epsilon(1e-12));
}

TEST_CASE("grid enumeration") {
    auto g = enumerate_odd_ratios(3);
    REQUIRE(g.size() == 3);
    CHECK(g[0] == OddRatio::from_fraction(1, 3));
    CHECK(g[1] == OddRatio::identity());
    CHECK(g[2] == OddRatio::from_fraction(3, 1));
    auto big = enumerate_odd_ratios(31);
    for (std::size_t i = 1; i < big.size(); ++i) CHECK(big[i].value() > big[i - 1].value());
    CHECK(big.size() == oracle::brute_force_select(3.0, 31).size());
    CHECK_THROWS_AS((void)enumerate_odd_ratios(4), InvalidInputError);
    CHECK_THROWS_AS((void)enumerate_odd_ratios(1), InvalidInputError);
}

TEST_CASE("select_exponent examples") {
    auto top = select_exponent(4.0583, 15);
    REQUIRE(!top.empty());
    CHECK(top[0].c == OddRatio::from_fraction(11, 9));
    CHECK(top[0].normalizing() == OddRatio::from_fraction(9, 11));
    CHECK(std::fabs(top[0].beta2 - 4.042) <= 5e-4);
    CHECK(top[0].gap == std::fabs(top[0].beta2 - 4.0583));

    auto id = select_exponent(3.0);
    CHECK(id[0].c == OddRatio::identity());
    CHECK(id[0].gap <= 1e-12);

    auto nine = select_exponent(4.3, 9, 100);
    bool has = false;
    for (const auto& c : nine) has = has || c.c == OddRatio::from_fraction(9, 7);
    CHECK(has);
    auto ref = oracle::brute_force_select(4.3, 9);
    REQUIRE(nine.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) {
        CHECK(nine[i].c.numerator() == ref[i].p);
        CHECK(nine[i].c.denominator() == ref[i].q);
    }

    CHECK(select_exponent(4.0, 31, 3).size() == 3);
    CHECK_THROWS_AS((void)select_exponent(1.0), DomainError);
    CHECK_THROWS_AS((void)select_exponent(0.5), DomainError);
    CHECK_THROWS_AS((void)select_exponent(3.0, 31, 0), InvalidInputError);
}

TEST_CASE("select_exponent agrees with exhaustive enumeration on random targets") {
    oracle::Gen g(2718);
    for (int t = 0; t < 100; ++t) {
        const double b2 = g.uniform(1.5, 5.5);
        const int max_odd = 2 * g.integer(1, 15) + 1;
        const int top_n = g.integer(1, 8);
        auto got = select_exponent(b2, max_odd, top_n);
        auto ref = oracle::brute_force_select(b2, max_odd);
        REQUIRE(got.size() == std::min<std::size_t>(static_cast<std::size_t>(top_n), ref.size()));
        for (std::size_t i = 0; i < got.size(); ++i) {
            CHECK(got[i].c.numerator() == ref[i].p);
            CHECK(got[i].c.denominator() == ref[i].q);
            CHECK(got[i].gap == doctest::Approx(ref[i].gap).epsilon(1e-9));
        }
    }
}

TEST_CASE("monte carlo kurtosis of transformed gaussians") {
    Rng rng(424242);
    std::vector<double> z(1000000);
    for (auto& v : z) v = rng.normal();
    for (auto c : {OddRatio::from_fraction(7, 9), OddRatio::from_fraction(11, 9)}) {
        std::vector<double> x(z.size());
        for (std::size_t i = 0; i < z.size(); ++i) x[i] = signed_pow(z[i], c);
        auto [k, se] = oracle::batched(x, 100, [](const std::vector<double>& v) {
            return oracle::plain_moments(v).kurt;
        });
        CHECK(std::fabs(k - power_kurtosis(c.value())) <= 3.0 * se);
    }
}
