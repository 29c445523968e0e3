#pragma once

#include "qbm/bath.hpp"
#include "qbm/gaussian_state.hpp"
#include "qbm/quadrature.hpp"

namespace qbm {

/// Thermodynamic potentials of the damped oscillator at one temperature.
struct ThermoPoint {
    double temperature;
    double z;        // partition function (underflows to 0 at very low T; see log_z)
    double log_z;
    double f;        // free energy
    double s;        // thermodynamic entropy (units k)
    double u;        // internal energy, = f + T s
    double c;        // specific heat (units k)
    double u_int;    // interaction energy U - <H_s> = Gamma dF/dGamma
};

/// ln Z from the Gamma-function form,
///   ln Z = ln(omega0 / 2 pi nu) + sum_j Re ln Gamma(lambda_j/nu) - ln Gamma(Gamma/nu),
/// nu = 2 pi T.  Requires T > 0.
double log_partition_function(double temperature, const BathParams& p);
double partition_function(double temperature, const BathParams& p);

/// Free energy.  Production route for T > 0 is -T ln Z; at T = 0 the integral
/// route with f(w, 0) = w/2 is used.
double free_energy(double temperature, const BathParams& p, const QuadratureSpec& spec = {});

/// Validation route for all T >= 0:
///   F = (1/pi) integral f(w,T) Im{d ln chi~/dw} dw,  f(w,T) = T ln[2 sinh(w/2T)].
double free_energy_integral(double temperature, const BathParams& p,
                            const QuadratureSpec& spec = {});

/// S(T) = (1/pi) integral s(w,T) Im{d ln chi~/dw} dw, the pole form of the
/// integrand; S(0) = 0.
double entropy(double temperature, const BathParams& p, const QuadratureSpec& spec = {});

double internal_energy(double temperature, const BathParams& p,
                       const QuadratureSpec& spec = {});

/// C = T dS/dT by centered difference (relative step 1e-4); C(0) = 0.
double specific_heat(double temperature, const BathParams& p,
                     const QuadratureSpec& spec = {});

/// U_int = U - <H_s>, cross-checked against Gamma dF/dGamma (centered
/// difference, relative step 1e-4); disagreement raises ConsistencyError.
double interaction_energy(double temperature, const BathParams& p,
                          const QuadratureSpec& spec = {});

struct EntropyComparison {
    double thermodynamic;        // S(T)
    double von_neumann;          // S_v(rho_s)
    double mutual_information;   // I_sb = S_v - S(T)
};
EntropyComparison entropy_comparison(double temperature, const BathParams& p,
                                     const QuadratureSpec& spec = {});

enum class VariedParameter { frequency, mass };

/// Quasi-static bookkeeping for a centered variation of omega0 or m:
///   dF = dW_s,  T dS = dQ_s + dU_int,  d<H_s> = dW_s + dQ_s.
struct VariationReport {
    VariedParameter parameter;
    double delta;    // absolute parameter step actually used (full centered span)
    double d_f;
    double d_s;
    double d_q;      // T dS
    double d_w_s;    // Tr[rho_s dH_s]
    double d_q_s;    // Tr[H_s drho_s] = d<H_s> - dW_s
    double d_u_int;
    double d_mean_energy;
};
VariationReport quasi_static_variation(double temperature, const BathParams& p,
                                       VariedParameter which, double rel_step = 1e-4,
                                       const QuadratureSpec& spec = {});

ThermoPoint thermo_point(double temperature, const BathParams& p,
                         const QuadratureSpec& spec = {});

}  // namespace qbm
