#include "ngauss/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "ngauss/error.hpp"

namespace ngauss {

namespace {

// Kronrod abscissae (descending) and weights; the Gauss 7-point rule uses the
// odd-indexed abscissae.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double lo;
    double hi;
    double value;
    double error;

    bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gauss_kronrod(const Integrand& f, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double fc = f(center);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double fsum = f(center - dx) + f(center + dx);
        kronrod += kWgk[j] * fsum;
        if (j % 2 == 1) {
            gauss += kWg[j / 2] * fsum;
        }
    }
    const double value = kronrod * half;
    const double error = std::fabs((kronrod - gauss) * half);
    return {lo, hi, value, error};
}

QuadratureResult integrate_finite(const Integrand& f, double a, double b,
                                  Precision precision, int max_intervals) {
    std::priority_queue<Panel> panels;
    Panel first = gauss_kronrod(f, a, b);
    double total = first.value;
    double total_err = first.error;
    panels.push(first);
    int count = 1;
    auto done = [&] {
        return total_err <= std::max(precision.abs_tol, precision.rel_tol * std::fabs(total));
    };
    while (!done() && count < max_intervals) {
        const Panel worst = panels.top();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (!(mid > worst.lo && mid < worst.hi)) {
            break;  // interval can no longer be split in floating point
        }
        panels.pop();
        const Panel left = gauss_kronrod(f, worst.lo, mid);
        const Panel right = gauss_kronrod(f, mid, worst.hi);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
        ++count;
    }
    // Re-sum to shed the drift accumulated by incremental updates.
    double value = 0.0;
    double error = 0.0;
    while (!panels.empty()) {
        value += panels.top().value;
        error += panels.top().error;
        panels.pop();
    }
    QuadratureResult out;
    out.value = value;
    out.error = error;
    out.intervals = count;
    out.converged = error <= std::max(precision.abs_tol, precision.rel_tol * std::fabs(value));
    return out;
}

}  // namespace

QuadratureResult integrate(const Integrand& f, double a, double b, Precision precision,
                           int max_intervals) {
    if (std::isnan(a) || std::isnan(b)) {
        throw InvalidInputError("integration bounds must not be NaN");
    }
    if (a == b) {
        return {0.0, 0.0, 0, true};
    }
    if (a > b) {
        QuadratureResult r = integrate(f, b, a, precision, max_intervals);
        r.value = -r.value;
        return r;
    }
    const bool lo_inf = std::isinf(a);
    const bool hi_inf = std::isinf(b);
    if (lo_inf && hi_inf) {
        // x = t / (1 - t^2), t in (-1, 1)
        auto g = [&f](double t) {
            const double d = 1.0 - t * t;
            return f(t / d) * (1.0 + t * t) / (d * d);
        };
        return integrate_finite(g, -1.0, 1.0, precision, max_intervals);
    }
    if (hi_inf) {
        // x = a + t / (1 - t), t in [0, 1)
        auto g = [&f, a](double t) {
            const double d = 1.0 - t;
            return f(a + t / d) / (d * d);
        };
        return integrate_finite(g, 0.0, 1.0, precision, max_intervals);
    }
    if (lo_inf) {
        auto g = [&f, b](double t) {
            const double d = 1.0 - t;
            return f(b - t / d) / (d * d);
        };
        return integrate_finite(g, 0.0, 1.0, precision, max_intervals);
    }
    return integrate_finite(f, a, b, precision, max_intervals);
}

double integrate_or_throw(const Integrand& f, double a, double b, Precision precision,
                          int max_intervals) {
    const QuadratureResult r = integrate(f, a, b, precision, max_intervals);
    if (!r.converged) {
        throw NumericalError("quadrature did not reach tolerance (estimated error " +
                             std::to_string(r.error) + ")");
    }
    return r.value;
}

}  // namespace ngauss
