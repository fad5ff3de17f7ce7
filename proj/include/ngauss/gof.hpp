#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ngauss/moments.hpp"

namespace ngauss {

/**
 * Histogram bins given by strictly increasing finite edges e_1 < ... < e_m,
 * implicitly extended by -inf and +inf, so there are m + 1 bins:
 * (-inf, e_1), [e_1, e_2), ..., [e_m, +inf).
 */
class BinScheme {
public:
    explicit BinScheme(std::vector<double> edges);

    /// Edges lo, lo + step, ..., hi.
    static BinScheme uniform(double lo, double hi, double step);
    /// "lo:hi:step" or a comma-separated edge list.
    static BinScheme parse(const std::string& spec);
    /// -2.5, -2.0, ..., 2.5: twelve bins.
    static BinScheme forecast_error_default();

    [[nodiscard]] const std::vector<double>& edges() const noexcept { return edges_; }
    [[nodiscard]] std::size_t bin_count() const noexcept { return edges_.size() + 1; }
    [[nodiscard]] double lower(std::size_t bin) const;
    [[nodiscard]] double upper(std::size_t bin) const;
    /// Index of the bin containing x; a value on an edge belongs to the bin on its right.
    [[nodiscard]] std::size_t locate(double x) const;

private:
    std::vector<double> edges_;
};

struct BinRecord {
    double lo = 0.0;
    double hi = 0.0;
    double observed = 0.0;
    double expected = 0.0;
};

struct GofReport {
    std::string method;
    double statistic = 0.0;
    std::optional<int> df;
    double p_value = 1.0;
    std::vector<BinRecord> bins;
    std::vector<std::string> warnings;
};

struct AcfReport {
    std::size_t n = 0;
    int lags = 0;
    std::vector<double> r;  // r_1 .. r_lags
    double bound = 0.0;     // 1.96 / sqrt(n)
    int exceedances = 0;    // count of |r_k| > bound
};

struct WhitenessVerdict {
    bool white = true;
    std::vector<int> offending_lags;
    std::string diagnostic;
};

enum class ThinKeep { Odd, Even };

/// Pearson statistic sum (o_j - e_j)^2 / e_j.
[[nodiscard]] double chi_square_statistic(std::span<const double> observed,
                                          std::span<const double> expected);

/// Chi-square report from already-binned counts (bins carry no edges).
[[nodiscard]] GofReport chi_square_from_counts(std::span<const double> observed,
                                               std::span<const double> expected, int df);

using CdfFunction = std::function<double(double)>;

/// Binned chi-square test against a fully specified cdf. df defaults to
/// bins - 1 - n_params unless df_override is given.
[[nodiscard]] GofReport chi_square_gof(const Sample& sample, const CdfFunction& model_cdf,
                                       const BinScheme& bins, int n_params,
                                       std::optional<int> df_override = std::nullopt);

/// Kolmogorov-Smirnov distance to N(mean, s^2) with both estimated from the sample.
[[nodiscard]] double lilliefors_statistic(const Sample& sample);

/**
 * Monte Carlo null distribution of the Lilliefors statistic for one sample
 * size. Replication i draws from Rng(seed, i), so a table depends only on
 * (n, reps, seed) and can be shared across many tests of equal size.
 */
class LillieforsNull {
public:
    LillieforsNull(std::size_t n, int reps, std::uint64_t seed);

    [[nodiscard]] std::size_t sample_size() const noexcept { return n_; }
    [[nodiscard]] int reps() const noexcept { return static_cast<int>(sorted_.size()); }
    /// (1 + #{D* >= d}) / (1 + reps).
    [[nodiscard]] double p_value(double d) const;

private:
    std::size_t n_;
    std::vector<double> sorted_;
};

[[nodiscard]] GofReport lilliefors(const Sample& sample, int mc_reps = 10000,
                                   std::uint64_t seed = 0);
[[nodiscard]] GofReport lilliefors(const Sample& sample, const LillieforsNull& null);

/// Royston's approximation for the W statistic and its p-value; 3 <= n <= 5000.
[[nodiscard]] GofReport shapiro_wilk(const Sample& sample);

[[nodiscard]] AcfReport acf(const Sample& sample, int max_lag = 20);

/// White when exceedances / lags <= 0.05.
[[nodiscard]] WhitenessVerdict whiteness_check(const AcfReport& report);

/// Keeps one element of each consecutive pair (the first by default).
[[nodiscard]] Sample thin_pairs(const Sample& sample, ThinKeep keep = ThinKeep::Odd);

}  // namespace ngauss
