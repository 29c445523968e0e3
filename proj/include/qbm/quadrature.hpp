#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qbm {

/// Tolerances and limits for the adaptive quadrature engines.
struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_subdivisions = 4000;
    // Slowest algebraic decay exponent p of the integrand tail (f ~ w^-p).
    // Used to sanity-check that the reciprocal tail map is applicable (p >= 2).
    double tail_decay_exponent = 2.0;

    void validate() const;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;  // estimated absolute error
    int subdivisions = 0;

    operator double() const { return value; }
};

/// Thrown when the requested tolerance cannot be reached; carries the best
/// available estimate so callers can decide whether to proceed anyway.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double last_value, double last_error)
        : std::runtime_error(what), last_value_(last_value), last_error_(last_error) {}

    double last_value() const { return last_value_; }
    double last_error() const { return last_error_; }

private:
    double last_value_;
    double last_error_;
};

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (G7,K15) integration of f over the finite interval
/// [a, b].  Optional breakpoints seed the initial subdivision; callers pass
/// the locations of known sharp features (resonances, thermal scales).
QuadratureResult integrate(const Integrand& f, double a, double b,
                           const QuadratureSpec& spec = {},
                           std::span<const double> breakpoints = {});

/// Integral of f over [0, inf).  Adaptive panels on [0, split] plus the
/// reciprocal map u = split/w on (split, inf); split should dominate every
/// feature scale of f (the physics modules use 10*max(omega0, cutoff, kT)).
QuadratureResult integrate_semi_infinite(const Integrand& f,
                                         const QuadratureSpec& spec = {},
                                         double split = 10.0,
                                         std::span<const double> breakpoints = {});

/// Nodes and weights of `panels` equal-width 15-point Kronrod panels spanning
/// [a, b]; xs and ws are resized to 15*panels.  Building block for fixed
/// tensor-product grids.
void kronrod15_panels(double a, double b, int panels, std::vector<double>& xs,
                      std::vector<double>& ws);

/// Cosine transform integral(0,inf) g(w) cos(w t) dw for t > 0 and g smooth,
/// eventually monotone decaying (at least like 1/w).  Adaptive up to
/// feature_end, then half-period panels with repeated-averaging acceleration
/// of the alternating tail.
QuadratureResult integrate_cosine_transform(const Integrand& g, double t,
                                            double feature_end,
                                            const QuadratureSpec& spec = {});

}  // namespace qbm
