#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ngauss/moments.hpp"

namespace ngauss {

/**
 * An exponent of the form (2k+1)/(2j+1), kept in lowest terms.
 *
 * Both numerator and denominator are odd, so x^c has a unique real value
 * for every real x and the map x -> x^c is a bijection of the real line.
 */
class OddRatio {
public:
    /// (2k+1)/(2j+1).
    static OddRatio from_kj(std::int64_t k, std::int64_t j);
    /// p/q with p, q odd and positive; reduced on construction.
    static OddRatio from_fraction(std::int64_t p, std::int64_t q);
    /// Parses "p/q" or a bare odd integer "p".
    static OddRatio parse(std::string_view text);
    static OddRatio identity() { return OddRatio(1, 1); }

    [[nodiscard]] std::int64_t numerator() const noexcept { return num_; }
    [[nodiscard]] std::int64_t denominator() const noexcept { return den_; }
    [[nodiscard]] std::int64_t k() const noexcept { return (num_ - 1) / 2; }
    [[nodiscard]] std::int64_t j() const noexcept { return (den_ - 1) / 2; }
    [[nodiscard]] double value() const noexcept {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }
    [[nodiscard]] OddRatio reciprocal() const noexcept { return OddRatio(den_, num_); }
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const OddRatio&, const OddRatio&) = default;

private:
    OddRatio(std::int64_t num, std::int64_t den) : num_(num), den_(den) {}

    std::int64_t num_;
    std::int64_t den_;
};

/// sign(x) |x|^c. Odd in x and strictly increasing; 0, 1 and -1 are fixed points.
[[nodiscard]] double signed_pow(double x, const OddRatio& c);
[[nodiscard]] double signed_pow(double x, double exponent);

/// Elementwise signed_pow. Throws RangeError naming the first element that overflows.
[[nodiscard]] Sample transform_sample(const Sample& sample, const OddRatio& c);

/// Kurtosis of Z^c for Z ~ N(0, 1): sqrt(pi) Gamma(2c + 1/2) / Gamma(c + 1/2)^2.
/// Evaluated in log space. c > 0.
[[nodiscard]] double power_kurtosis(double c);

struct KurtosisRow {
    OddRatio c;
    double beta2;
};

[[nodiscard]] std::vector<KurtosisRow> kurtosis_table(std::span<const OddRatio> exponents);

/// All reduced odd ratios p/q with p, q <= max_odd and lo <= p/q <= hi,
/// ascending by value.
[[nodiscard]] std::vector<OddRatio> enumerate_odd_ratios(int max_odd, double lo = 1.0 / 3.0,
                                                         double hi = 3.0);

/**
 * A candidate model exponent c, meaning data ~ Normal^c.
 *
 * The data should be raised to normalizing() = 1/c to make it Gaussian.
 */
struct ExponentCandidate {
    OddRatio c;
    double beta2;
    double gap;  // |beta2 - target kurtosis|

    [[nodiscard]] OddRatio normalizing() const { return c.reciprocal(); }
};

/// Ranks the grid of enumerate_odd_ratios(max_odd) by |beta2(c) - b2|; ties go
/// to the smaller denominator, then to c closer to 1. Returns at most top_n.
[[nodiscard]] std::vector<ExponentCandidate> select_exponent(double b2, int max_odd = 31,
                                                             int top_n = 5);

}  // namespace ngauss
