#pragma once

#include <vector>

#include "qbm/bath.hpp"
#include "qbm/quadrature.hpp"

namespace qbm {

/// Heat per bit of von Neumann entropy change under a quasi-static frequency
/// variation, against the Landauer bound kT ln 2.
struct LandauerPoint {
    double temperature;
    double ratio;        // |delta Q / (dS_v / ln 2)|, energy per bit
    double bound;        // kT ln 2
    bool below_bound;
    double ratio_over_bound() const { return ratio / bound; }
};

/// dS and dS_v by centered differences in omega0 at fixed (gamma, Gamma, T);
/// dS_v goes through the analytic mu-derivative of the closed-form entropy, so
/// only the variances are differenced numerically.
LandauerPoint landauer_ratio(double temperature, const BathParams& p,
                             double rel_step = 1e-3, const QuadratureSpec& spec = {});

/// Pointwise landauer_ratio over an ascending temperature grid.  Per-point
/// failures are collected in `errors` (grid index + message); the sweep
/// continues past them.
struct LandauerSweep {
    std::vector<LandauerPoint> points;
    std::vector<std::pair<std::size_t, std::string>> errors;
};
LandauerSweep landauer_sweep(const std::vector<double>& temperatures, const BathParams& p,
                             double rel_step = 1e-3, const QuadratureSpec& spec = {});

}  // namespace qbm
