#pragma once

#include <array>
#include <complex>

#include "qbm/quadrature.hpp"

namespace qbm {

// Natural units hbar = k_B = 1 throughout; omega0 sets the frequency scale.

/// Brownian oscillator + Drude bath parameters.
struct BathParams {
    double mass = 1.0;    // m
    double omega0 = 1.0;  // bare oscillator frequency
    double gamma = 1.0;   // system-bath coupling strength
    double cutoff = 10.0; // Drude cutoff (Gamma)

    void validate() const;  // throws std::invalid_argument on hard violations
    // cutoff < omega0 is allowed but physically questionable; callers that
    // talk to users should warn when this returns true.
    bool cutoff_below_resonance() const { return cutoff <= omega0; }
};

/// The three characteristic frequencies lambda_j of the damped oscillator:
/// (nu + l1)(nu + l2)(nu + l3) = (omega0^2 + nu^2)(nu + Gamma) + nu gamma Gamma / m.
/// Ordering: real root first (largest real part when all real), then the
/// conjugate pair with positive imaginary part ahead of its conjugate.
struct DrudePoles {
    std::array<std::complex<double>, 3> lambda;
};

/// Drude spectral density J(w) = gamma w Gamma^2 / (w^2 + Gamma^2).
double spectral_density(double omega, const BathParams& p);

/// Memory kernel gamma(t) = gamma Gamma e^{-Gamma t}.
double damping_kernel(double t, const BathParams& p);

/// One-sided Fourier transform gamma~(w) = gamma Gamma / (Gamma - i w).
std::complex<double> damping_fourier(double omega, const BathParams& p);

/// chi~(w) = [m(omega0^2 - w^2) - i w gamma~(w)]^{-1}.
std::complex<double> susceptibility(double omega, const BathParams& p);

DrudePoles drude_poles(const BathParams& p);

/// Phase phi(w) = sum_j arctan(w/lambda_j) - arctan(w/Gamma), continuous in w,
/// phi(0) = 0, phi(inf) = pi.  Conjugate-pair terms are combined into a real
/// arg() expression, so no unwrapping is ever needed.
double phase(double omega, const DrudePoles& poles, const BathParams& p);
double phase(double omega, const BathParams& p);

/// d phi / d w = Im{ d ln chi~ / dw } = sum_j lambda_j/(lambda_j^2+w^2) - Gamma/(Gamma^2+w^2).
double log_chi_derivative_im(double omega, const DrudePoles& poles, const BathParams& p);
double log_chi_derivative_im(double omega, const BathParams& p);

/// Noise correlation K(t) = (1/pi) * integral J(w) coth(w/2T) cos(w t) dw.
/// The Drude integrand falls off only like 1/w, so K(0) is log-divergent in
/// the ultraviolet; at t = 0 the integral is regularized with the explicit
/// frequency cutoff uv_cutoff (default 0 picks 100*max(Gamma, omega0)).
/// For t > 0 the full conditionally-convergent value is returned.
double noise_correlation(double t, double temperature, const BathParams& p,
                         const QuadratureSpec& spec = {}, double uv_cutoff = 0.0);

}  // namespace qbm
