#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ngauss {

/**
 * An ordered sequence of finite observations.
 *
 * Construction rejects empty input and any NaN or infinite value, so every
 * operation downstream can assume finite data of length >= 1.
 */
class Sample {
public:
    explicit Sample(std::vector<double> values, std::optional<std::string> label = std::nullopt);

    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] const std::vector<double>& vector() const noexcept { return values_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] double operator[](std::size_t i) const { return values_[i]; }
    [[nodiscard]] const std::optional<std::string>& label() const noexcept { return label_; }

private:
    std::vector<double> values_;
    std::optional<std::string> label_;
};

/// Divisor used for every central moment. The default matches the
/// convention where mu_k = sum (x_i - mean)^k / (n - 1) for all k.
enum class Divisor { NMinusOne, N };

struct MomentSummary {
    std::size_t n = 0;
    double mean = 0.0;
    double sd = 0.0;
    double skewness = 0.0;  // b1 = mu3 / s^3
    double kurtosis = 0.0;  // b2 = mu4 / s^4, raw (Gaussian = 3)
};

[[nodiscard]] double mean(const Sample& sample);

/// Two-pass central moment of order k (k >= 1). Requires n >= 2.
[[nodiscard]] double central_moment(const Sample& sample, int k,
                                    Divisor divisor = Divisor::NMinusOne);

/// Mean, sd, skewness and kurtosis. Requires n >= 4 and a non-constant sample.
[[nodiscard]] MomentSummary summary(const Sample& sample, Divisor divisor = Divisor::NMinusOne);

/// z_i = x_i - mean(x).
[[nodiscard]] Sample center(const Sample& sample);

}  // namespace ngauss
