#pragma once

#include "qbm/bath.hpp"
#include "qbm/quadrature.hpp"

namespace qbm {

/// Coupling strength that puts the T = 0 mean energy at the target value
/// (both quantities monotone increasing in gamma).  Bisection on
/// [gamma_lo, gamma_hi]; throws std::runtime_error if the target is not
/// bracketed.
double find_gamma_for_mean_energy(double target, const BathParams& p, double gamma_lo = 1e-3,
                                  double gamma_hi = 8.0, double tol = 1e-8,
                                  const QuadratureSpec& spec = {});

/// Coupling strength with mean occupation <n> = target at temperature T.
double find_gamma_for_occupation(double target, double temperature, const BathParams& p,
                                 double gamma_lo = 1e-3, double gamma_hi = 8.0,
                                 double tol = 1e-8, const QuadratureSpec& spec = {});

}  // namespace qbm
