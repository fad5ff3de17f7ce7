#pragma once

#include <functional>

#include "ngauss/special_functions.hpp"

namespace ngauss {

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;  // estimated absolute error
    int intervals = 0;
    bool converged = false;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive 15-point Gauss-Kronrod on [a, b]. Either bound may be
/// infinite; infinite ranges are mapped onto finite ones before subdivision.
/// Integrands are never evaluated at the endpoints, so integrable endpoint
/// singularities are tolerated.
[[nodiscard]] QuadratureResult integrate(const Integrand& f, double a, double b,
                                         Precision precision = {}, int max_intervals = 4000);

/// As integrate(), but throws NumericalError when the tolerance is not met.
[[nodiscard]] double integrate_or_throw(const Integrand& f, double a, double b,
                                        Precision precision = {}, int max_intervals = 4000);

}  // namespace ngauss
