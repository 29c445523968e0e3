#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qbm/bath.hpp"
#include "qbm/fluctuations.hpp"
#include "qbm/quadrature.hpp"

namespace qbm {

/// Raised when an internal cross-check fails (imaginary residue, route
/// disagreement); indicates a bug or loss of precision, not bad user input.
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Zero-mean Gaussian state with no q-p correlation: the stationary reduced
/// density matrix of the Brownian oscillator,
///   <q|rho|q'> = (2 pi <q^2>)^{-1/2} exp[-(q+q')^2/(8<q^2>) - (q-q')^2 <p^2>/2].
/// The dimensionless variables x = 2 b^2 <q^2>, y = 2 <p^2>/b^2 with
/// b = sqrt(m omega0) refer to the unperturbed-oscillator scale.
class GaussianState {
public:
    GaussianState(double q2, double p2, double b_scale = 1.0);

    static GaussianState from_bath(double temperature, const BathParams& p,
                                   const QuadratureSpec& spec = {});
    /// Thermal (Gibbs) state with mean occupation n_bar: x = y = 2 n_bar + 1.
    static GaussianState thermal(double n_bar, const BathParams& p = {});
    /// Squeezed vacuum with <n> = sinh^2 r: x = e^{-2r}, y = e^{+2r}, mu = 1.
    static GaussianState squeezed_vacuum(double n_bar);

    double q2() const { return q2_; }
    double p2() const { return p2_; }
    double b_scale() const { return b_; }

    double x() const { return 2.0 * b_ * b_ * q2_; }
    double y() const { return 2.0 * p2_ / (b_ * b_); }
    double big_d() const { return (1.0 + x()) * (1.0 + y()); }  // D = 1+x+y+xy
    double a() const { return (y() - x()) / big_d(); }
    double d() const { return (x() * y() - 1.0) / big_d(); }

    /// Position representation <q|rho|q'>.
    double kernel(double q, double qp) const;

private:
    double q2_, p2_, b_;
};

/// mu = (1/2)/sqrt(<q^2><p^2>); equals Tr rho^2 for this state family.
double purity(const GaussianState& s);

/// Eigenvalues p_n = 2mu/(1+mu) [(1-mu)/(1+mu)]^n of the reduced density
/// matrix, plus the eigenfunction scale c = [<p^2>/<q^2>]^{1/4}.
struct SpectralDecomposition {
    double mu;
    std::vector<double> p_n;
    double eigenfunction_scale;
    int n_max;
};

/// n_max < 0 selects the smallest truncation with geometric tail < tail_tol.
SpectralDecomposition eigenvalues(const GaussianState& s, int n_max = -1,
                                  double tail_tol = 1e-10);

/// S_v = (1-mu)/(2mu) ln[(1+mu)/(1-mu)] - ln[2mu/(1+mu)]; 0 at mu = 1.
double von_neumann_entropy_from_purity(double mu);
double von_neumann_entropy(const GaussianState& s);

/// Pseudo-thermal form rho = Z_eff^{-1} exp(-beta H_eff):
///   omega_eff = (2T) artanh(mu),  m_eff = sqrt(<p^2>/<q^2>)/omega_eff.
/// Pure states (mu = 1) have no effective thermal frequency: domain_error.
struct EffectiveOscillator {
    double omega_eff;
    double m_eff;
    double z_eff;
};
EffectiveOscillator effective_oscillator(const GaussianState& s, double temperature);

/// Diagonal element rho_nn in the unperturbed number basis (closed form with
/// Legendre polynomials; complex intermediates when d^2 < a^2, asserted real).
double number_basis_diagonal(const GaussianState& s, int n);

/// rho_00 .. rho_{n_max n_max} in one overflow-safe recurrence pass.
std::vector<double> number_basis_diagonal_all(const GaussianState& s, int n_max);

/// Number-basis block rho_nm computed by 2-D panel quadrature of
/// psi_n(b q) rho(q,q') psi_m(b q') in rotated coordinates u=(q+q')/2, v=q-q'.
struct NumberBasisBlock {
    Eigen::MatrixXd rho;
    int n_max;
    double trace_deficit;   // 1 - sum_n rho_nn
    int suggested_n_max;    // truncation that would push the p_n tail below 1e-8
    bool truncated() const { return trace_deficit > 1e-6; }
};
NumberBasisBlock number_basis_block(const GaussianState& s, int n_max = -1,
                                    const QuadratureSpec& spec = {});

struct OccupationStatistics {
    double n_bar;
    double var_n;
};
/// Diagonal sums n_bar = sum n rho_nn, var = sum n^2 rho_nn - n_bar^2, with a
/// moment-identity cross-check n_bar = (x+y)/4 - 1/2 at 1e-8.
OccupationStatistics occupation_statistics(const GaussianState& s, int n_max = -1);

/// Shannon entropy -sum rho_nn ln rho_nn of the unperturbed-basis diagonal.
double shannon_entropy_diagonal(const GaussianState& s, int n_max = -1);

/// Smallest n with the p_n tail mass below tail_tol.
int auto_n_max_eigenvalues(const GaussianState& s, double tail_tol = 1e-10);
/// Smallest n with the (geometric) rho_nn tail bound below tail_tol.
int auto_n_max_diagonal(const GaussianState& s, double tail_tol = 1e-12);

}  // namespace qbm
