#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "qbm/bath.hpp"

namespace qbm {

/// Explicit N-oscillator bath with equidistant frequencies w_i = i Delta and
/// couplings c_i = sqrt(2 Delta m_i w_i J(w_i) / pi); the exact brute-force
/// oracle for the continuum formulas.
struct DiscreteBath {
    int n_oscillators;
    double delta;                    // frequency spacing; covered range = coverage * cutoff
    std::vector<double> omegas;      // w_i, i = 1..N
    std::vector<double> couplings;   // c_i
    std::vector<double> masses;      // m_i (all 1 by default)
    BathParams system;
    double counter_term;             // sum c_i^2 / (2 m_i w_i^2)
};

/// Frequency range extends to coverage*cutoff (>= 8 recommended) so the Drude
/// tail is represented.
DiscreteBath build_discrete_bath(int n, const BathParams& p, double coverage = 8.0);

/// Normal modes of the coupled quadratic form.  The mass-weighted potential is
/// an arrowhead matrix; eigenvalues are located by the interlacing property
/// and bisection on the secular function  f(l) = K00 - l - sum k_i^2/(d_i - l)
/// (the transcendental eigenvalue equation of the coupled chain).
struct NormalModes {
    std::vector<double> frequencies;      // w'_k, ascending, size N+1
    std::vector<double> system_overlap;   // squared system component |v_k0|^2 of mode k
};
NormalModes normal_modes(const DiscreteBath& b);

/// Dense-eigensolver route (Eigen), O(N^3): cross-check for the secular solver.
NormalModes normal_modes_dense(const DiscreteBath& b);

/// Full orthogonal mode matrix, column k = mode k in mass-weighted coordinates
/// (row 0 = system).  O(N^2) storage; intended for small-N verification.
Eigen::MatrixXd mode_matrix(const DiscreteBath& b, const NormalModes& modes);

/// Exact equilibrium moments of the system coordinate from normal-mode
/// thermal averages (coth -> 1 at T = 0).  Returns (q2, p2).
std::pair<double, double> exact_moments(const DiscreteBath& b, const NormalModes& modes,
                                        double temperature);

/// F_tot = sum_k f(w'_k, T) over coupled modes, T > 0.
double exact_total_free_energy(const DiscreteBath& b, const NormalModes& modes,
                               double temperature);

/// F_b = sum_i f(w_i, T) over the uncoupled bath modes only.
double bath_free_energy(const DiscreteBath& b, double temperature);

}  // namespace qbm
