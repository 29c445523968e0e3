#pragma once

#include "qbm/bath.hpp"
#include "qbm/quadrature.hpp"

namespace qbm {

/// Stationary second moments of the Brownian oscillator at temperature T
/// (natural units: T in hbar*omega0/k, q2 in hbar/(m*omega0), p2 in m*hbar*omega0).
struct EquilibriumMoments {
    double temperature;
    double q2;
    double p2;
    double mean_energy;  // p2/2m + m omega0^2 q2 / 2, exactly by construction
};

/// <q^2> = (1/pi) * integral coth(w/2T) Im chi~(w) dw  (coth -> 1 at T = 0).
double position_variance(double temperature, const BathParams& p,
                         const QuadratureSpec& spec = {});

/// <p^2> = (1/pi) * integral m^2 w^2 coth(w/2T) Im chi~(w) dw.
double momentum_variance(double temperature, const BathParams& p,
                         const QuadratureSpec& spec = {});

/// <H_s> = <p^2>/2m + m omega0^2 <q^2>/2.
double mean_energy(double temperature, const BathParams& p,
                   const QuadratureSpec& spec = {});

EquilibriumMoments equilibrium_moments(double temperature, const BathParams& p,
                                       const QuadratureSpec& spec = {});

/// Matsubara-sum route for <q^2>, T > 0 only:
///   (1/m beta) sum_{n=-N..N} [omega0^2 + nu_n^2 + |nu_n| gamma^(|nu_n|)/m]^{-1}
/// plus the analytic 1/nu^2 tail beyond N (trigamma).  Independent cross-check
/// of the quadrature route.
double matsubara_position_variance(double temperature, const BathParams& p,
                                   int n_terms = 2000);

}  // namespace qbm
