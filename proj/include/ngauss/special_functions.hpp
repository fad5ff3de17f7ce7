#pragma once

namespace ngauss {

/// Tolerances handed to iterative routines (quadrature, series).
struct Precision {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
};

/// ln Gamma(x) for x > 0. Relative error below 1e-13 on [0.5, 100],
/// including the neighbourhoods of the zeros at x = 1 and x = 2.
[[nodiscard]] double ln_gamma(double x);

/// ln |Gamma(m + i b)| for m > 0.
[[nodiscard]] double ln_gamma_modulus(double m, double b);

/// |Gamma(m + i b)|^2 for m > 0.
[[nodiscard]] double gamma_modulus_sq(double m, double b);

/// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
[[nodiscard]] double gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
[[nodiscard]] double gamma_q(double a, double x);

[[nodiscard]] double chi_square_cdf(double x, int df);

/// P(chi^2_df > x).
[[nodiscard]] double chi_square_sf(double x, int df);

[[nodiscard]] double normal_pdf(double x);

/// Standard normal cdf. normal_cdf(-x) = 1 - normal_cdf(x) holds by construction.
[[nodiscard]] double normal_cdf(double x);

/// Inverse of normal_cdf on (0, 1).
[[nodiscard]] double normal_quantile(double p);

/// E|Z|^p = 2^{p/2} Gamma((p+1)/2) / sqrt(pi) for Z ~ N(0, 1), p >= 0.
///
/// The signed moment E(Z^c) for an odd-ratio exponent c is zero by symmetry,
/// so only the absolute moment carries information.
[[nodiscard]] double gaussian_power_moment(double p);

}  // namespace ngauss
