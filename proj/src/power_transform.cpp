#include "ngauss/power_transform.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>

#include "ngauss/error.hpp"
#include "ngauss/special_functions.hpp"

namespace ngauss {

OddRatio OddRatio::from_kj(std::int64_t k, std::int64_t j) {
    if (k < 0 || j < 0) {
        throw InvalidInputError("odd ratio indices k and j must be nonnegative");
    }
    return from_fraction(2 * k + 1, 2 * j + 1);
}

OddRatio OddRatio::from_fraction(std::int64_t p, std::int64_t q) {
    if (p <= 0 || q <= 0) {
        throw InvalidInputError("odd ratio terms must be positive");
    }
    if (p % 2 == 0 || q % 2 == 0) {
        throw InvalidInputError("odd ratio terms must both be odd, got " + std::to_string(p) +
                                "/" + std::to_string(q));
    }
    const std::int64_t g = std::gcd(p, q);
    return OddRatio(p / g, q / g);
}

OddRatio OddRatio::parse(std::string_view text) {
    auto parse_int = [&](std::string_view part) {
        std::int64_t v = 0;
        const auto* first = part.data();
        const auto* last = part.data() + part.size();
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last) {
            throw InvalidInputError("cannot parse exponent '" + std::string(text) + "'");
        }
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return from_fraction(parse_int(text), 1);
    }
    return from_fraction(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string OddRatio::to_string() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

double signed_pow(double x, double exponent) {
    if (x == 0.0) return 0.0;
    const double mag = std::pow(std::fabs(x), exponent);
    return x < 0.0 ? -mag : mag;
}

double signed_pow(double x, const OddRatio& c) {
    if (c.numerator() == c.denominator()) return x;
    return signed_pow(x, c.value());
}

Sample transform_sample(const Sample& sample, const OddRatio& c) {
    std::vector<double> out;
    out.reserve(sample.size());
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double y = signed_pow(sample[i], c);
        if (!std::isfinite(y)) {
            throw RangeError("signed power " + c.to_string() + " of element " +
                                 std::to_string(i) + " overflows",
                             i);
        }
        out.push_back(y);
    }
    return Sample(std::move(out), sample.label());
}

double power_kurtosis(double c) {
    if (!(c > 0.0)) {
        throw DomainError("power_kurtosis requires c > 0");
    }
    return std::exp(0.5 * std::log(std::numbers::pi) + ln_gamma(2.0 * c + 0.5) -
                    2.0 * ln_gamma(c + 0.5));
}

std::vector<KurtosisRow> kurtosis_table(std::span<const OddRatio> exponents) {
    std::vector<KurtosisRow> rows;
    rows.reserve(exponents.size());
    for (const auto& c : exponents) {
        rows.push_back({c, power_kurtosis(c.value())});
    }
    return rows;
}

namespace {

void check_max_odd(int max_odd) {
    if (max_odd < 3 || max_odd % 2 == 0) {
        throw InvalidInputError("max_odd must be an odd integer >= 3, got " +
                                std::to_string(max_odd));
    }
}

}  // namespace

std::vector<OddRatio> enumerate_odd_ratios(int max_odd, double lo, double hi) {
    check_max_odd(max_odd);
    std::vector<OddRatio> out;
    for (std::int64_t p = 1; p <= max_odd; p += 2) {
        for (std::int64_t q = 1; q <= max_odd; q += 2) {
            if (std::gcd(p, q) != 1) continue;
            const double v = static_cast<double>(p) / static_cast<double>(q);
            if (v < lo || v > hi) continue;
            out.push_back(OddRatio::from_fraction(p, q));
        }
    }
    std::sort(out.begin(), out.end(), [](const OddRatio& a, const OddRatio& b) {
        return a.numerator() * b.denominator() < b.numerator() * a.denominator();
    });
    return out;
}

std::vector<ExponentCandidate> select_exponent(double b2, int max_odd, int top_n) {
    if (!(b2 > 1.0)) {
        throw DomainError("target kurtosis must exceed 1 (the lower bound for any "
                          "distribution), got " + std::to_string(b2));
    }
    if (top_n < 1) {
        throw InvalidInputError("top_n must be positive");
    }
    std::vector<ExponentCandidate> candidates;
    for (const auto& c : enumerate_odd_ratios(max_odd)) {
        const double beta2 = power_kurtosis(c.value());
        candidates.push_back({c, beta2, std::fabs(beta2 - b2)});
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const ExponentCandidate& a, const ExponentCandidate& b) {
                  if (a.gap != b.gap) return a.gap < b.gap;
                  if (a.c.denominator() != b.c.denominator()) {
                      return a.c.denominator() < b.c.denominator();
                  }
                  return std::fabs(a.c.value() - 1.0) < std::fabs(b.c.value() - 1.0);
              });
    if (candidates.size() > static_cast<std::size_t>(top_n)) {
        candidates.erase(candidates.begin() + top_n, candidates.end());
    }
    return candidates;
}

}  // namespace ngauss
