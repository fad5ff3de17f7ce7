#pragma once
// Reference computations used by the tests. Nothing here calls into the
// library's numerical routines; integrals and special functions come from
// Boost.Math so that a library bug cannot hide behind its own oracle.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace oracle {

inline constexpr double pi = 3.141592653589793238462643383279502884;

// Definite integral on a finite interval; tolerates endpoint singularities.
template <class F>
double integral(F f, double a, double b, double tol = 1e-14) {
    boost::math::quadrature::tanh_sinh<double> ts;
    return ts.integrate(f, a, b, tol);
}

// Integral over [a, +inf).
template <class F>
double integral_to_inf(F f, double a, double tol = 1e-14) {
    boost::math::quadrature::exp_sinh<double> es;
    return es.integrate([&](double t) { return f(a + t); }, 0.0,
                        std::numeric_limits<double>::infinity(), tol);
}

// Smooth integrands: adaptive Gauss-Kronrod 61.
template <class F>
double integral_gk(F f, double a, double b, unsigned depth = 20, double tol = 1e-13) {
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, depth, tol);
}

inline double phi(double z) { return std::exp(-0.5 * z * z) / std::sqrt(2.0 * pi); }

// |Gamma(m + ib)|^2 from the product
//   Gamma(m)^2 prod_{k>=0} [1 + b^2/(m+k)^2]^{-1}.
// The first K factors are multiplied out; the remaining log-sum
// sum_{k>=K} log(1 + b^2/(m+k)^2) is bounded above by b^2/(m+K-1) and is
// replaced by its Euler-Maclaurin estimate b^2/(m+K-1/2), whose error is
// O(b^2/K^3 + b^4/K^3). Returns the value and the raw tail bound.
struct ProductOracle {
    double value;
    double tail_bound;
};

inline ProductOracle gamma_modulus_sq_product(double m, double b, long K = 2000000) {
    const double b2 = b * b;
    long double log_prod = 0.0L;
    for (long k = 0; k < K; ++k) {
        const long double t = static_cast<long double>(m) + k;
        log_prod += std::log1p(static_cast<long double>(b2) / (t * t));
    }
    const double tail = b2 / (m + static_cast<double>(K) - 0.5);
    const double g = boost::math::tgamma(m);
    return {g * g * std::exp(-static_cast<double>(log_prod) - tail),
            b2 / (m + static_cast<double>(K) - 1.0)};
}

// beta2(c) = sqrt(pi) Gamma(2c + 1/2) / Gamma(c + 1/2)^2 via Boost lgamma.
inline double power_kurtosis(double c) {
    return std::exp(0.5 * std::log(pi) + boost::math::lgamma(2.0 * c + 0.5) -
                    2.0 * boost::math::lgamma(c + 0.5));
}

struct Candidate {
    long p;
    long q;
    double gap;
};

// Exhaustive exponent search written independently of the library: every
// odd p, q <= max_odd with gcd 1 and 1/3 <= p/q <= 3, ordered by gap, then
// denominator, then distance of p/q from 1.
inline std::vector<Candidate> brute_force_select(double b2, long max_odd) {
    std::vector<Candidate> all;
    for (long p = 1; p <= max_odd; p += 2) {
        for (long q = 1; q <= max_odd; q += 2) {
            if (std::gcd(p, q) != 1) continue;
            if (3 * p < q || p > 3 * q) continue;
            const double c = static_cast<double>(p) / static_cast<double>(q);
            all.push_back({p, q, std::fabs(power_kurtosis(c) - b2)});
        }
    }
    std::sort(all.begin(), all.end(), [](const Candidate& x, const Candidate& y) {
        if (x.gap != y.gap) return x.gap < y.gap;
        if (x.q != y.q) return x.q < y.q;
        return std::fabs(static_cast<double>(x.p) / x.q - 1.0) <
               std::fabs(static_cast<double>(y.p) / y.q - 1.0);
    });
    return all;
}

// Plain moments with divisor n - 1, written out directly.
struct Moments {
    double mean, sd, skew, kurt;
};

inline Moments plain_moments(const std::vector<double>& x) {
    const double n = static_cast<double>(x.size());
    double s = 0.0;
    for (double v : x) s += v;
    const double m = s / n;
    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double v : x) {
        const double d = v - m;
        m2 += d * d;
        m3 += d * d * d;
        m4 += d * d * d * d;
    }
    m2 /= n - 1;
    m3 /= n - 1;
    m4 /= n - 1;
    return {m, std::sqrt(m2), m3 / std::pow(m2, 1.5), m4 / (m2 * m2)};
}

// Batch standard error: split into equal batches, compute a statistic per
// batch and return (overall statistic, sd(batch values) / sqrt(batches)).
template <class Stat>
std::pair<double, double> batched(const std::vector<double>& x, std::size_t batches, Stat stat) {
    const std::size_t len = x.size() / batches;
    std::vector<double> vals;
    for (std::size_t b = 0; b < batches; ++b) {
        std::vector<double> chunk(x.begin() + static_cast<long>(b * len),
                                  x.begin() + static_cast<long>((b + 1) * len));
        vals.push_back(stat(chunk));
    }
    const double mu = std::accumulate(vals.begin(), vals.end(), 0.0) / vals.size();
    double var = 0.0;
    for (double v : vals) var += (v - mu) * (v - mu);
    var /= static_cast<double>(vals.size() - 1);
    return {stat(x), std::sqrt(var / static_cast<double>(vals.size()))};
}

// Generator for property tests, deliberately separate from ngauss::Rng.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : eng_(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
    double normal() { return std::normal_distribution<double>(0.0, 1.0)(eng_); }
    std::vector<double> normals(std::size_t n, double mu = 0.0, double sd = 1.0) {
        std::vector<double> v(n);
        for (auto& x : v) x = mu + sd * normal();
        return v;
    }
    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

}  // namespace oracle
