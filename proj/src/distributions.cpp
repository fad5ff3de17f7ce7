#include "ngauss/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "ngauss/error.hpp"
#include "ngauss/quadrature.hpp"
#include "ngauss/random.hpp"
#include "ngauss/special_functions.hpp"

namespace ngauss {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr double kHalfPi = 0.5 * std::numbers::pi;

void check_scale(double scale, const char* what) {
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw InvalidInputError(std::string(what) + " must be positive and finite");
    }
}

}  // namespace

ModelKind model_kind(const FittedModel& model) {
    return static_cast<ModelKind>(model.index());
}

std::string model_name(ModelKind kind) {
    switch (kind) {
        case ModelKind::Gaussian: return "gaussian";
        case ModelKind::PowerNormal: return "power-normal";
        case ModelKind::Laplace: return "laplace";
        case ModelKind::PearsonIV: return "pearson4";
    }
    return "unknown";
}

ModelKind parse_model_kind(const std::string& name) {
    for (auto kind : {ModelKind::Gaussian, ModelKind::PowerNormal, ModelKind::Laplace,
                      ModelKind::PearsonIV}) {
        if (model_name(kind) == name) return kind;
    }
    throw InvalidInputError("unknown model '" + name +
                            "' (expected gaussian, power-normal, laplace or pearson4)");
}

double pdf(const FittedModel& model, double x) {
    return std::visit(Overloaded{
                          [x](const GaussianParams& p) { return gaussian_pdf(x, p); },
                          [x](const PowerNormalParams& p) { return power_normal_pdf(x, p); },
                          [x](const LaplaceParams& p) { return laplace_pdf(x, p); },
                          [x](const PearsonIVParams& p) { return pearson4_pdf(x, p); },
                      },
                      model);
}

double cdf(const FittedModel& model, double x) {
    return std::visit(Overloaded{
                          [x](const GaussianParams& p) { return gaussian_cdf(x, p); },
                          [x](const PowerNormalParams& p) { return power_normal_cdf(x, p); },
                          [x](const LaplaceParams& p) { return laplace_cdf(x, p); },
                          [x](const PearsonIVParams& p) { return pearson4_cdf(x, p); },
                      },
                      model);
}

// ---------------------------------------------------------------- Gaussian

double gaussian_pdf(double x, const GaussianParams& p) {
    return normal_pdf((x - p.mu) / p.sigma) / p.sigma;
}

double gaussian_cdf(double x, const GaussianParams& p) {
    if (std::isinf(x)) return x > 0.0 ? 1.0 : 0.0;
    return normal_cdf((x - p.mu) / p.sigma);
}

GaussianParams fit_gaussian(const Sample& sample) {
    if (sample.size() < 2) {
        throw InsufficientDataError("Gaussian fit requires at least 2 observations");
    }
    const double sd = std::sqrt(central_moment(sample, 2));
    if (sd == 0.0) {
        throw DegenerateSampleError("cannot fit a Gaussian to a constant sample");
    }
    return {mean(sample), sd};
}

// ----------------------------------------------------------- Power-normal

double power_normal_pdf(double x, const PowerNormalParams& p) {
    const GaussianParams g{p.mu, p.sigma};
    if (p.normalizing == OddRatio::identity()) {
        return gaussian_pdf(x, g);
    }
    const double c = p.normalizing.value();
    if (x == 0.0) {
        if (c < 1.0) return std::numeric_limits<double>::infinity();
        return 0.0;
    }
    const double jacobian = c * std::pow(std::fabs(x), c - 1.0);
    return jacobian * gaussian_pdf(signed_pow(x, p.normalizing), g);
}

double power_normal_cdf(double x, const PowerNormalParams& p) {
    return gaussian_cdf(signed_pow(x, p.normalizing), {p.mu, p.sigma});
}

PowerNormalParams fit_power_normal(const Sample& sample, const OddRatio& normalizing) {
    const GaussianParams g = fit_gaussian(transform_sample(sample, normalizing));
    return {g.mu, g.sigma, normalizing};
}

// ---------------------------------------------------------------- Laplace

double laplace_pdf(double x, const LaplaceParams& p) {
    return std::exp(-std::fabs(x - p.mu) / p.b) / (2.0 * p.b);
}

double laplace_cdf(double x, const LaplaceParams& p) {
    if (x <= p.mu) {
        return 0.5 * std::exp((x - p.mu) / p.b);
    }
    return 1.0 - 0.5 * std::exp(-(x - p.mu) / p.b);
}

LaplaceParams fit_laplace(const Sample& sample, bool fix_mu_zero) {
    if (sample.size() < 2) {
        throw InsufficientDataError("Laplace fit requires at least 2 observations");
    }
    double mu = 0.0;
    if (!fix_mu_zero) {
        std::vector<double> v = sample.vector();
        std::sort(v.begin(), v.end());
        const std::size_t n = v.size();
        mu = n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
    }
    double acc = 0.0;
    for (double x : sample.values()) {
        acc += std::fabs(x - mu);
    }
    const double b = acc / static_cast<double>(sample.size());
    if (b == 0.0) {
        throw DegenerateSampleError("Laplace scale is zero: every value equals the location");
    }
    return {mu, b};
}

// ------------------------------------------------------------ Pearson IV

PearsonIVParams PearsonIVParams::make(double m, double nu, double a, double lambda) {
    if (!(m > 0.5)) {
        throw InvalidInputError("Pearson IV requires m > 1/2");
    }
    check_scale(a, "Pearson IV scale a");
    if (!std::isfinite(nu) || !std::isfinite(lambda)) {
        throw InvalidInputError("Pearson IV nu and lambda must be finite");
    }
    return {m, nu, a, lambda, pearson4_norm_constant(m, nu, a)};
}

double pearson4_norm_constant(double m, double nu, double a) {
    if (!(m > 0.5)) {
        throw DomainError("Pearson IV normalizing constant requires m > 1/2");
    }
    const double log_k = (2.0 * m - 2.0) * std::numbers::ln2 +
                         2.0 * ln_gamma_modulus(m, 0.5 * nu) - std::log(std::numbers::pi) -
                         std::log(a) - ln_gamma(2.0 * m - 1.0);
    return std::exp(log_k);
}

double pearson4_pdf(double x, const PearsonIVParams& p) {
    const double t = (x - p.lambda) / p.a;
    if (std::isinf(t)) return 0.0;
    return p.k_norm * std::exp(-p.m * std::log1p(t * t) - p.nu * std::atan(t));
}

namespace {

// Under x = lambda + a tan(phi) the density becomes
// k a cos(phi)^{2m-2} exp(-nu phi) on (-pi/2, pi/2).
double pearson4_angle_density(double phi, const PearsonIVParams& p) {
    const double c = std::cos(phi);
    if (c <= 0.0) return 0.0;
    return p.k_norm * p.a * std::exp((2.0 * p.m - 2.0) * std::log(c) - p.nu * phi);
}

constexpr Precision kCdfPrecision{1e-14, 1e-12};

}  // namespace

double pearson4_cdf(double x, const PearsonIVParams& p) {
    if (std::isinf(x)) return x > 0.0 ? 1.0 : 0.0;
    const double phi = std::atan((x - p.lambda) / p.a);
    auto g = [&p](double t) { return pearson4_angle_density(t, p); };
    // Integrate over the shorter tail for accuracy.
    if (phi <= 0.0) {
        return std::clamp(integrate_or_throw(g, -kHalfPi, phi, kCdfPrecision), 0.0, 1.0);
    }
    return std::clamp(1.0 - integrate_or_throw(g, phi, kHalfPi, kCdfPrecision), 0.0, 1.0);
}

DistributionMoments pearson4_moments(const PearsonIVParams& p) {
    if (!(p.m > 2.5)) {
        throw DomainError("Pearson IV fourth moment exists only for m > 5/2 (got m = " +
                          std::to_string(p.m) + ")");
    }
    constexpr Precision prec{1e-15, 1e-13};
    const double log_kernel_scale = 2.0 * p.m - 2.0;
    // Moments of t = tan(phi) under the angular kernel cos^{2m-2} exp(-nu phi);
    // (tan(phi) - s)^r cos^{2m-2} = (sin - s cos)^r cos^{2m-2-r}.
    auto moment = [&](int r, double shift) {
        auto f = [&, r, shift](double phi) {
            const double c = std::cos(phi);
            if (c <= 0.0) return 0.0;
            const double base = std::sin(phi) - shift * c;
            return std::pow(base, r) *
                   std::exp((log_kernel_scale - r) * std::log(c) - p.nu * phi);
        };
        return integrate_or_throw(f, -kHalfPi, kHalfPi, prec, 20000);
    };
    const double j0 = moment(0, 0.0);
    const double m1 = moment(1, 0.0) / j0;
    const double c2 = moment(2, m1) / j0;
    const double c3 = moment(3, m1) / j0;
    const double c4 = moment(4, m1) / j0;
    DistributionMoments out;
    out.mean = p.lambda + p.a * m1;
    out.sd = p.a * std::sqrt(c2);
    out.skewness = c3 / (c2 * std::sqrt(c2));
    out.kurtosis = c4 / (c2 * c2);
    return out;
}

PearsonIVParams fit_pearson4_mom(const DistributionMoments& mo) {
    if (!(mo.sd > 0.0)) {
        throw DegenerateSampleError("Pearson IV fit requires a positive standard deviation");
    }
    const double skew = mo.skewness;
    const double beta1 = skew * skew;
    const double beta2 = mo.kurtosis;
    const double denom = 2.0 * beta2 - 3.0 * beta1 - 6.0;
    if (!(denom > 0.0)) {
        throw RegionError("moments outside the Pearson IV region: requires 2*kurtosis - "
                          "3*skewness^2 - 6 > 0 (got " + std::to_string(denom) + ")");
    }
    const double r = 6.0 * (beta2 - beta1 - 1.0) / denom;
    const double disc = 16.0 * (r - 1.0) - beta1 * (r - 2.0) * (r - 2.0);
    if (!(disc > 0.0)) {
        throw RegionError("moments outside the Pearson IV region: requires 16(r-1) - "
                          "skewness^2 (r-2)^2 > 0 with r = " + std::to_string(r) +
                          " (got " + std::to_string(disc) + ")");
    }
    const double m = 1.0 + 0.5 * r;
    const double nu = -r * (r - 2.0) * skew / std::sqrt(disc);
    const double a = mo.sd * std::sqrt(disc) / 4.0;
    const double lambda = mo.mean - (r - 2.0) * skew * mo.sd / 4.0;
    return PearsonIVParams::make(m, nu, a, lambda);
}

PearsonIVParams fit_pearson4_mom(const MomentSummary& s) {
    return fit_pearson4_mom(DistributionMoments{s.mean, s.sd, s.skewness, s.kurtosis});
}

// --------------------------------------------------------------- Sampling

Sample sample_from(const FittedModel& model, std::size_t n, std::uint64_t seed,
                   std::uint64_t stream) {
    if (n < 1) {
        throw InvalidInputError("sample size must be positive");
    }
    Rng rng(seed, stream);
    std::vector<double> out(n);
    std::visit(Overloaded{
                   [&](const GaussianParams& p) {
                       for (double& x : out) x = p.mu + p.sigma * rng.normal();
                   },
                   [&](const PowerNormalParams& p) {
                       const OddRatio inv = p.model_exponent();
                       for (double& x : out) x = signed_pow(p.mu + p.sigma * rng.normal(), inv);
                   },
                   [&](const LaplaceParams& p) {
                       for (double& x : out) x = rng.laplace(p.mu, p.b);
                   },
                   [](const PearsonIVParams&) {
                       throw CapabilityError("sampling from Pearson IV is not supported");
                   },
               },
               model);
    return Sample(std::move(out));
}

}  // namespace ngauss
