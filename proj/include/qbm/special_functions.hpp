#pragma once

#include <array>
#include <complex>
#include <span>

namespace qbm {

using Complex = std::complex<double>;

/// Principal-branch log Gamma on C \ (-inf, 0]:  analytic, and real on the
/// positive real axis.  Throws std::domain_error at the poles 0, -1, -2, ...
Complex log_gamma(Complex z);

/// Roots of v^3 + a2 v^2 + a1 v + a0 with real coefficients.  Conjugate pairs
/// come out exactly conjugate; each root is Newton-polished so that
/// |p(root)| <= 1e-12 * max(1, |root|^3).
std::array<Complex, 3> cubic_roots(double a2, double a1, double a0);

/// Normalized harmonic-oscillator eigenfunction
///   psi_n(u) = (sqrt(pi) 2^n n!)^{-1/2} H_n(u) exp(-u^2/2),
/// computed by upward recurrence on the normalized functions themselves, so
/// it stays finite for any n (no factorial overflow).
double hermite_wavefunction(int n, double u);

/// All of psi_0(u) .. psi_{n_max}(u) in one recurrence pass.
/// out.size() must be n_max + 1.
void hermite_wavefunctions(int n_max, double u, std::span<double> out);

/// Legendre polynomial P_n(z) for complex argument, three-term recurrence.
Complex legendre_p(int n, Complex z);

/// Trigamma psi'(x) for x > 0 (recurrence + asymptotic series).
double trigamma(double x);

// Stable thermal kernels, x = beta*hbar*omega >= 0.
double coth_half(double x);       // coth(x/2); series branch for small x
double log_2sinh_half(double x);  // ln(2 sinh(x/2)) without overflow
double entropy_kernel(double x);  // x/(e^x - 1) - ln(1 - e^{-x}), -> 0 for large x

}  // namespace qbm
