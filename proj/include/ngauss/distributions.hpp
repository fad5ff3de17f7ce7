#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "ngauss/moments.hpp"
#include "ngauss/power_transform.hpp"

namespace ngauss {

struct GaussianParams {
    double mu = 0.0;
    double sigma = 1.0;
};

/**
 * Law of X where signed_pow(X, normalizing) ~ N(mu, sigma^2).
 *
 * Equivalently X = Y^{1/normalizing} for Gaussian Y, so the data look like a
 * Gaussian raised to model_exponent(). Both orientations are reported when
 * the model is serialized.
 */
struct PowerNormalParams {
    double mu = 0.0;
    double sigma = 1.0;
    OddRatio normalizing = OddRatio::identity();

    [[nodiscard]] OddRatio model_exponent() const { return normalizing.reciprocal(); }
};

struct LaplaceParams {
    double mu = 0.0;
    double b = 1.0;
};

/// Pearson type IV with density k [1 + ((x - lambda)/a)^2]^{-m} exp(-nu atan((x - lambda)/a)).
struct PearsonIVParams {
    double m = 1.0;
    double nu = 0.0;
    double a = 1.0;
    double lambda = 0.0;
    double k_norm = 0.0;  // cached normalizing constant

    /// Validates m > 1/2 and a > 0, and fills k_norm.
    static PearsonIVParams make(double m, double nu, double a, double lambda);
};

using FittedModel = std::variant<GaussianParams, PowerNormalParams, LaplaceParams, PearsonIVParams>;

/// Stable order used for tie-breaking: Gaussian < PowerNormal < Laplace < PearsonIV.
enum class ModelKind { Gaussian = 0, PowerNormal = 1, Laplace = 2, PearsonIV = 3 };

[[nodiscard]] ModelKind model_kind(const FittedModel& model);
[[nodiscard]] std::string model_name(ModelKind kind);
[[nodiscard]] ModelKind parse_model_kind(const std::string& name);

[[nodiscard]] double pdf(const FittedModel& model, double x);
[[nodiscard]] double cdf(const FittedModel& model, double x);

// Gaussian

[[nodiscard]] double gaussian_pdf(double x, const GaussianParams& p);
[[nodiscard]] double gaussian_cdf(double x, const GaussianParams& p);
/// mu = mean, sigma = sd with the n - 1 divisor. Requires n >= 2.
[[nodiscard]] GaussianParams fit_gaussian(const Sample& sample);

// Power-normal

/// c |x|^{c-1} / (sqrt(2 pi) sigma) exp(-(signed_pow(x, c) - mu)^2 / (2 sigma^2)),
/// c the normalizing exponent. Returns +infinity at x = 0 when c < 1.
[[nodiscard]] double power_normal_pdf(double x, const PowerNormalParams& p);
[[nodiscard]] double power_normal_cdf(double x, const PowerNormalParams& p);
/// Fits a Gaussian to signed_pow(sample, normalizing).
[[nodiscard]] PowerNormalParams fit_power_normal(const Sample& sample, const OddRatio& normalizing);

// Laplace

[[nodiscard]] double laplace_pdf(double x, const LaplaceParams& p);
[[nodiscard]] double laplace_cdf(double x, const LaplaceParams& p);
/// Location is the sample median, or 0 when fix_mu_zero is set;
/// scale is b = (1/n) sum |x_i - mu|.
[[nodiscard]] LaplaceParams fit_laplace(const Sample& sample, bool fix_mu_zero = false);

// Pearson type IV

/// 2^{2m-2} |Gamma(m + i nu/2)|^2 / (pi a Gamma(2m - 1)), evaluated in log space.
[[nodiscard]] double pearson4_norm_constant(double m, double nu, double a);
[[nodiscard]] double pearson4_pdf(double x, const PearsonIVParams& p);
[[nodiscard]] double pearson4_cdf(double x, const PearsonIVParams& p);

struct DistributionMoments {
    double mean = 0.0;
    double sd = 0.0;
    double skewness = 0.0;
    double kurtosis = 0.0;
};

/// First four standardized moments by quadrature. Requires m > 5/2.
[[nodiscard]] DistributionMoments pearson4_moments(const PearsonIVParams& p);

/// Method-of-moments fit from mean, sd, skewness and kurtosis. Throws
/// RegionError when the moments do not belong to a type IV (or its symmetric
/// type VII limit) with finite fourth moment.
[[nodiscard]] PearsonIVParams fit_pearson4_mom(const MomentSummary& summary);
[[nodiscard]] PearsonIVParams fit_pearson4_mom(const DistributionMoments& moments);

/// Seeded draws. Pearson IV sampling is not supported (CapabilityError).
[[nodiscard]] Sample sample_from(const FittedModel& model, std::size_t n, std::uint64_t seed,
                                 std::uint64_t stream = 0);

}  // namespace ngauss
