#include "ngauss/moments.hpp"

#include <cmath>
#include <numeric>

#include "ngauss/error.hpp"

namespace ngauss {

Sample::Sample(std::vector<double> values, std::optional<std::string> label)
    : values_(std::move(values)), label_(std::move(label)) {
    if (values_.empty()) {
        throw InvalidInputError("sample must contain at least one value");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw InvalidInputError("sample value at index " + std::to_string(i) +
                                    " is not finite");
        }
    }
}

double mean(const Sample& sample) {
    const auto v = sample.values();
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

namespace {

double divisor_value(std::size_t n, Divisor divisor) {
    return divisor == Divisor::NMinusOne ? static_cast<double>(n - 1)
                                         : static_cast<double>(n);
}

}  // namespace

double central_moment(const Sample& sample, int k, Divisor divisor) {
    if (k < 1) {
        throw InvalidInputError("central moment order must be >= 1");
    }
    if (sample.size() < 2) {
        throw InsufficientDataError("central moment requires at least 2 observations");
    }
    const double m = mean(sample);
    double acc = 0.0;
    for (double x : sample.values()) {
        acc += std::pow(x - m, k);
    }
    return acc / divisor_value(sample.size(), divisor);
}

MomentSummary summary(const Sample& sample, Divisor divisor) {
    if (sample.size() < 4) {
        throw InsufficientDataError("moment summary requires at least 4 observations");
    }
    const double m = mean(sample);
    double s2 = 0.0;
    double s3 = 0.0;
    double s4 = 0.0;
    for (double x : sample.values()) {
        const double d = x - m;
        const double d2 = d * d;
        s2 += d2;
        s3 += d2 * d;
        s4 += d2 * d2;
    }
    const double div = divisor_value(sample.size(), divisor);
    const double mu2 = s2 / div;
    const double sd = std::sqrt(mu2);
    if (sd == 0.0) {
        throw DegenerateSampleError("sample is constant; skewness and kurtosis are undefined");
    }
    MomentSummary out;
    out.n = sample.size();
    out.mean = m;
    out.sd = sd;
    out.skewness = (s3 / div) / (mu2 * sd);
    out.kurtosis = (s4 / div) / (mu2 * mu2);
    return out;
}

Sample center(const Sample& sample) {
    const double m = mean(sample);
    std::vector<double> out(sample.values().begin(), sample.values().end());
    for (double& x : out) {
        x -= m;
    }
    return Sample(std::move(out), sample.label());
}

}  // namespace ngauss
