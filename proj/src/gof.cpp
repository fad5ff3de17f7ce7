#include "ngauss/gof.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "ngauss/error.hpp"
#include "ngauss/random.hpp"
#include "ngauss/special_functions.hpp"

namespace ngauss {

// --------------------------------------------------------------- BinScheme

BinScheme::BinScheme(std::vector<double> edges) : edges_(std::move(edges)) {
    if (edges_.size() < 2) {
        throw InvalidInputError("a bin scheme needs at least 2 finite edges");
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (!std::isfinite(edges_[i])) {
            throw InvalidInputError("bin edges must be finite");
        }
        if (i > 0 && !(edges_[i] > edges_[i - 1])) {
            throw InvalidInputError("bin edges must be strictly increasing");
        }
    }
}

BinScheme BinScheme::uniform(double lo, double hi, double step) {
    if (!(step > 0.0) || !(hi > lo)) {
        throw InvalidInputError("uniform bins need lo < hi and step > 0");
    }
    const auto count = static_cast<long>(std::llround((hi - lo) / step));
    if (std::fabs(lo + static_cast<double>(count) * step - hi) > 1e-9 * std::max(1.0, std::fabs(hi))) {
        throw InvalidInputError("bin range is not a whole number of steps");
    }
    std::vector<double> edges;
    for (long i = 0; i <= count; ++i) {
        edges.push_back(lo + static_cast<double>(i) * step);
    }
    edges.back() = hi;
    return BinScheme(std::move(edges));
}

BinScheme BinScheme::parse(const std::string& spec) {
    auto to_double = [&spec](const std::string& s) {
        std::size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &pos);
        } catch (const std::exception&) {
            pos = std::string::npos;
        }
        if (pos != s.size()) {
            throw InvalidInputError("cannot parse bin spec '" + spec + "'");
        }
        return v;
    };
    auto split = [](const std::string& s, char sep) {
        std::vector<std::string> parts;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, sep)) parts.push_back(item);
        return parts;
    };
    if (spec.find(':') != std::string::npos) {
        const auto parts = split(spec, ':');
        if (parts.size() != 3) {
            throw InvalidInputError("bin spec must be lo:hi:step, got '" + spec + "'");
        }
        return uniform(to_double(parts[0]), to_double(parts[1]), to_double(parts[2]));
    }
    std::vector<double> edges;
    for (const auto& p : split(spec, ',')) edges.push_back(to_double(p));
    return BinScheme(std::move(edges));
}

BinScheme BinScheme::forecast_error_default() {
    return uniform(-2.5, 2.5, 0.5);
}

double BinScheme::lower(std::size_t bin) const {
    if (bin >= bin_count()) throw InvalidInputError("bin index out of range");
    return bin == 0 ? -std::numeric_limits<double>::infinity() : edges_[bin - 1];
}

double BinScheme::upper(std::size_t bin) const {
    if (bin >= bin_count()) throw InvalidInputError("bin index out of range");
    return bin == edges_.size() ? std::numeric_limits<double>::infinity() : edges_[bin];
}

std::size_t BinScheme::locate(double x) const {
    return static_cast<std::size_t>(std::upper_bound(edges_.begin(), edges_.end(), x) -
                                    edges_.begin());
}

// -------------------------------------------------------------- Chi-square

double chi_square_statistic(std::span<const double> observed, std::span<const double> expected) {
    if (observed.size() != expected.size()) {
        throw InvalidInputError("observed and expected counts differ in length");
    }
    double d2 = 0.0;
    for (std::size_t j = 0; j < observed.size(); ++j) {
        if (!(expected[j] > 0.0)) {
            throw DegenerateSampleError("expected count of bin " + std::to_string(j) +
                                        " is zero; merge it with a neighbour");
        }
        const double diff = observed[j] - expected[j];
        d2 += diff * diff / expected[j];
    }
    return d2;
}

GofReport chi_square_from_counts(std::span<const double> observed,
                                 std::span<const double> expected, int df) {
    GofReport report;
    report.method = "chi-square";
    report.statistic = chi_square_statistic(observed, expected);
    report.df = df;
    report.p_value = chi_square_sf(report.statistic, df);
    for (std::size_t j = 0; j < observed.size(); ++j) {
        report.bins.push_back({std::nan(""), std::nan(""), observed[j], expected[j]});
    }
    return report;
}

GofReport chi_square_gof(const Sample& sample, const CdfFunction& model_cdf,
                         const BinScheme& bins, int n_params, std::optional<int> df_override) {
    const std::size_t nbins = bins.bin_count();
    const int df = df_override ? *df_override
                               : static_cast<int>(nbins) - 1 - n_params;
    if (df < 1) {
        throw InvalidInputError("chi-square test has no degrees of freedom left (" +
                                std::to_string(nbins) + " bins, " + std::to_string(n_params) +
                                " fitted parameters)");
    }
    std::vector<double> observed(nbins, 0.0);
    for (double x : sample.values()) {
        observed[bins.locate(x)] += 1.0;
    }
    const double n = static_cast<double>(sample.size());
    std::vector<double> expected(nbins);
    double f_lo = 0.0;
    for (std::size_t j = 0; j < nbins; ++j) {
        const double f_hi = j + 1 == nbins ? 1.0 : model_cdf(bins.upper(j));
        expected[j] = n * (f_hi - f_lo);
        f_lo = f_hi;
    }
    GofReport report = chi_square_from_counts(observed, expected, df);
    for (std::size_t j = 0; j < nbins; ++j) {
        report.bins[j].lo = bins.lower(j);
        report.bins[j].hi = bins.upper(j);
    }
    if (sample.size() < 5 * nbins) {
        report.warnings.push_back("fewer than 5 observations per bin on average (n = " +
                                  std::to_string(sample.size()) + ", bins = " +
                                  std::to_string(nbins) + ")");
    }
    return report;
}

// --------------------------------------------------------------- Lilliefors

namespace {

double lilliefors_distance(std::vector<double> v) {
    const std::size_t n = v.size();
    double m = 0.0;
    for (double x : v) m += x;
    m /= static_cast<double>(n);
    double ss = 0.0;
    for (double x : v) ss += (x - m) * (x - m);
    const double s = std::sqrt(ss / static_cast<double>(n - 1));
    if (s == 0.0) {
        throw DegenerateSampleError("Lilliefors test is undefined for a constant sample");
    }
    std::sort(v.begin(), v.end());
    const double dn = static_cast<double>(n);
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double z = normal_cdf((v[i] - m) / s);
        d = std::max({d, static_cast<double>(i + 1) / dn - z, z - static_cast<double>(i) / dn});
    }
    return d;
}

constexpr std::size_t kLillieforsMinN = 5;

}  // namespace

double lilliefors_statistic(const Sample& sample) {
    if (sample.size() < kLillieforsMinN) {
        throw InsufficientDataError("Lilliefors test requires at least 5 observations");
    }
    return lilliefors_distance(sample.vector());
}

LillieforsNull::LillieforsNull(std::size_t n, int reps, std::uint64_t seed) : n_(n) {
    if (n < kLillieforsMinN) {
        throw InsufficientDataError("Lilliefors test requires at least 5 observations");
    }
    if (reps < 1) {
        throw InvalidInputError("Monte Carlo replications must be positive");
    }
    sorted_.resize(static_cast<std::size_t>(reps));
    std::vector<double> draw(n);
    for (int i = 0; i < reps; ++i) {
        Rng rng(seed, static_cast<std::uint64_t>(i));
        for (double& x : draw) x = rng.normal();
        sorted_[static_cast<std::size_t>(i)] = lilliefors_distance(draw);
    }
    std::sort(sorted_.begin(), sorted_.end());
}

double LillieforsNull::p_value(double d) const {
    const auto at_least = static_cast<double>(
        sorted_.end() - std::lower_bound(sorted_.begin(), sorted_.end(), d));
    return (1.0 + at_least) / (1.0 + static_cast<double>(sorted_.size()));
}

GofReport lilliefors(const Sample& sample, const LillieforsNull& null) {
    if (null.sample_size() != sample.size()) {
        throw InvalidInputError("Lilliefors null table was built for a different sample size");
    }
    GofReport report;
    report.method = "lilliefors";
    report.statistic = lilliefors_statistic(sample);
    report.p_value = null.p_value(report.statistic);
    return report;
}

GofReport lilliefors(const Sample& sample, int mc_reps, std::uint64_t seed) {
    if (sample.size() < kLillieforsMinN) {
        throw InsufficientDataError("Lilliefors test requires at least 5 observations");
    }
    return lilliefors(sample, LillieforsNull(sample.size(), mc_reps, seed));
}

// ------------------------------------------------------------ Shapiro-Wilk

namespace {

// c[0] + c[1] x + c[2] x^2 + ...
template <std::size_t N>
double poly(const std::array<double, N>& c, double x) {
    double acc = 0.0;
    for (std::size_t i = N; i-- > 0;) acc = acc * x + c[i];
    return acc;
}

}  // namespace

GofReport shapiro_wilk(const Sample& sample) {
    const std::size_t n = sample.size();
    if (n < 3 || n > 5000) {
        throw CapabilityError("Shapiro-Wilk test supports 3 <= n <= 5000 (got n = " +
                              std::to_string(n) + ")");
    }
    std::vector<double> x = sample.vector();
    std::sort(x.begin(), x.end());
    if (x.back() - x.front() < 1e-19 * std::max(1.0, std::fabs(x.front()))) {
        throw DegenerateSampleError("Shapiro-Wilk test is undefined for a constant sample");
    }

    static constexpr std::array<double, 6> c1 = {0.0, 0.221157, -0.147981,
                                                 -2.07119, 4.434685, -2.706056};
    static constexpr std::array<double, 6> c2 = {0.0, 0.042981, -0.293762,
                                                 -1.752461, 5.682633, -3.582633};
    static constexpr std::array<double, 4> c3 = {0.544, -0.39978, 0.025054, -6.714e-4};
    static constexpr std::array<double, 4> c4 = {1.3822, -0.77857, 0.062767, -0.0020322};
    static constexpr std::array<double, 4> c5 = {-1.5861, -0.31082, -0.083751, 0.0038915};
    static constexpr std::array<double, 3> c6 = {-0.4803, -0.082676, 0.0030302};
    static constexpr std::array<double, 2> g = {-2.273, 0.459};

    // Coefficients a_1 >= a_2 >= ... for the upper half; the lower half is antisymmetric.
    const std::size_t half = n / 2;
    const double an = static_cast<double>(n);
    std::vector<double> a(half);
    if (n == 3) {
        a[0] = std::sqrt(0.5);
    } else {
        std::vector<double> m(half);
        double summ2 = 0.0;
        for (std::size_t i = 0; i < half; ++i) {
            m[i] = normal_quantile((static_cast<double>(i + 1) - 0.375) / (an + 0.25));
            summ2 += m[i] * m[i];
        }
        summ2 *= 2.0;
        const double ssumm2 = std::sqrt(summ2);
        const double rsn = 1.0 / std::sqrt(an);
        const double a1 = poly(c1, rsn) - m[0] / ssumm2;
        std::size_t first;
        double fac;
        if (n > 5) {
            first = 2;
            const double a2 = -m[1] / ssumm2 + poly(c2, rsn);
            fac = std::sqrt((summ2 - 2.0 * m[0] * m[0] - 2.0 * m[1] * m[1]) /
                            (1.0 - 2.0 * a1 * a1 - 2.0 * a2 * a2));
            a[1] = a2;
        } else {
            first = 1;
            fac = std::sqrt((summ2 - 2.0 * m[0] * m[0]) / (1.0 - 2.0 * a1 * a1));
        }
        a[0] = a1;
        for (std::size_t i = first; i < half; ++i) a[i] = -m[i] / fac;
    }

    double mean_x = 0.0;
    for (double v : x) mean_x += v;
    mean_x /= an;
    double ssq = 0.0;
    for (double v : x) ssq += (v - mean_x) * (v - mean_x);
    double num = 0.0;
    for (std::size_t i = 0; i < half; ++i) num += a[i] * (x[n - 1 - i] - x[i]);
    const double w = std::min(1.0, num * num / ssq);

    double pw;
    if (n == 3) {
        constexpr double pi6 = 1.90985931710274;  // 6 / pi
        constexpr double stqr = 1.04719755119660;  // pi / 3
        pw = std::max(0.0, pi6 * (std::asin(std::sqrt(w)) - stqr));
    } else {
        double w1 = std::log(1.0 - w);
        double mu;
        double sigma;
        if (n <= 11) {
            const double gamma = poly(g, an);
            if (w1 >= gamma) {
                pw = 1e-99;
                GofReport report{"shapiro-wilk", w, std::nullopt, pw, {}, {}};
                return report;
            }
            w1 = -std::log(gamma - w1);
            mu = poly(c3, an);
            sigma = std::exp(poly(c4, an));
        } else {
            const double ln_n = std::log(an);
            mu = poly(c5, ln_n);
            sigma = std::exp(poly(c6, ln_n));
        }
        pw = 1.0 - normal_cdf((w1 - mu) / sigma);
    }
    GofReport report;
    report.method = "shapiro-wilk";
    report.statistic = w;
    report.p_value = std::clamp(pw, 0.0, 1.0);
    return report;
}

// --------------------------------------------------------------------- ACF

AcfReport acf(const Sample& sample, int max_lag) {
    const std::size_t n = sample.size();
    if (max_lag < 1 || static_cast<std::size_t>(max_lag) >= n) {
        throw InsufficientDataError("ACF requires 1 <= max_lag < n (n = " + std::to_string(n) +
                                    ", max_lag = " + std::to_string(max_lag) + ")");
    }
    const double m = mean(sample);
    std::vector<double> d(n);
    double denom = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        d[t] = sample[t] - m;
        denom += d[t] * d[t];
    }
    if (denom == 0.0) {
        throw DegenerateSampleError("ACF is undefined for a constant sample");
    }
    AcfReport report;
    report.n = n;
    report.lags = max_lag;
    report.bound = 1.96 / std::sqrt(static_cast<double>(n));
    for (int k = 1; k <= max_lag; ++k) {
        double acc = 0.0;
        for (std::size_t t = 0; t + static_cast<std::size_t>(k) < n; ++t) {
            acc += d[t] * d[t + static_cast<std::size_t>(k)];
        }
        const double rk = acc / denom;
        report.r.push_back(rk);
        if (std::fabs(rk) > report.bound) ++report.exceedances;
    }
    return report;
}

WhitenessVerdict whiteness_check(const AcfReport& report) {
    if (report.lags < 1) {
        throw InvalidInputError("ACF report has no lags");
    }
    WhitenessVerdict v;
    for (std::size_t k = 0; k < report.r.size(); ++k) {
        if (std::fabs(report.r[k]) > report.bound) v.offending_lags.push_back(static_cast<int>(k + 1));
    }
    const double frac = static_cast<double>(report.exceedances) / report.lags;
    v.white = frac <= 0.05;
    std::ostringstream os;
    os << report.exceedances << " of " << report.lags << " lags outside +/-" << report.bound;
    if (!v.offending_lags.empty()) {
        os << " (lags";
        for (int lag : v.offending_lags) os << ' ' << lag;
        os << ')';
    }
    os << (v.white ? "; consistent with white noise" : "; temporal correlation present");
    v.diagnostic = os.str();
    return v;
}

Sample thin_pairs(const Sample& sample, ThinKeep keep) {
    if (sample.size() < 2) {
        throw InsufficientDataError("thinning requires at least 2 observations");
    }
    std::vector<double> out;
    const std::size_t start = keep == ThinKeep::Odd ? 0 : 1;
    for (std::size_t i = start; i < sample.size(); i += 2) out.push_back(sample[i]);
    return Sample(std::move(out), sample.label());
}

}  // namespace ngauss
