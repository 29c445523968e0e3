#include "qbm/gaussian_state.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "qbm/special_functions.hpp"

namespace qbm {

namespace {

constexpr int kBlockNMaxLimit = 200;

// Geometric decay rate of rho_nn: |Q_n| <= (|d|+|a|)^n.
double diagonal_decay_rate(const GaussianState& s) {
    return std::abs(s.d()) + std::abs(s.a());
}

double clamp_population(double v, const char* where) {
    if (v < -1e-10)
        throw ConsistencyError(std::string(where) + ": population below -1e-10");
    return v < 0.0 ? 0.0 : v;
}

}  // namespace

GaussianState::GaussianState(double q2, double p2, double b_scale)
    : q2_(q2), p2_(p2), b_(b_scale) {
    if (!(q2 > 0.0) || !(p2 > 0.0))
        throw std::invalid_argument("GaussianState: variances must be > 0");
    if (!(b_scale > 0.0)) throw std::invalid_argument("GaussianState: b_scale must be > 0");
    if (q2 * p2 < 0.25 * (1.0 - 1e-9))
        throw std::invalid_argument("GaussianState: uncertainty product below hbar^2/4");
}

GaussianState GaussianState::from_bath(double temperature, const BathParams& p,
                                       const QuadratureSpec& spec) {
    const auto m = equilibrium_moments(temperature, p, spec);
    return GaussianState(m.q2, m.p2, std::sqrt(p.mass * p.omega0));
}

GaussianState GaussianState::thermal(double n_bar, const BathParams& p) {
    if (n_bar < 0.0) throw std::domain_error("thermal: n_bar must be >= 0");
    const double b = std::sqrt(p.mass * p.omega0);
    const double occ = 2.0 * n_bar + 1.0;
    return GaussianState(occ / (2.0 * b * b), occ * b * b / 2.0, b);
}

GaussianState GaussianState::squeezed_vacuum(double n_bar) {
    if (n_bar < 0.0) throw std::domain_error("squeezed_vacuum: n_bar must be >= 0");
    const double r = std::asinh(std::sqrt(n_bar));
    return GaussianState(0.5 * std::exp(-2.0 * r), 0.5 * std::exp(2.0 * r), 1.0);
}

double GaussianState::kernel(double q, double qp) const {
    const double sum = q + qp, diff = q - qp;
    return std::exp(-sum * sum / (8.0 * q2_) - 0.5 * diff * diff * p2_) /
           std::sqrt(2.0 * M_PI * q2_);
}

double purity(const GaussianState& s) { return 0.5 / std::sqrt(s.q2() * s.p2()); }

int auto_n_max_eigenvalues(const GaussianState& s, double tail_tol) {
    const double mu = std::min(purity(s), 1.0);
    const double xi = (1.0 - mu) / (1.0 + mu);
    if (xi <= 0.0) return 0;
    // tail mass sum_{k>n} p_k = xi^{n+1}
    return std::max(1, static_cast<int>(std::ceil(std::log(tail_tol) / std::log(xi))) - 1);
}

int auto_n_max_diagonal(const GaussianState& s, double tail_tol) {
    const double r = diagonal_decay_rate(s);
    if (r < 1e-16) return 8;
    if (r >= 1.0 - 1e-12)
        throw ConsistencyError("auto_n_max_diagonal: diagonal decay rate at 1");
    const double pref = std::sqrt(4.0 / s.big_d());
    const int n = static_cast<int>(
        std::ceil(std::log(tail_tol * (1.0 - r) / pref) / std::log(r)));
    if (n > 2'000'000)
        throw ConsistencyError("auto_n_max_diagonal: truncation beyond 2e6 levels");
    return std::max(8, n);
}

SpectralDecomposition eigenvalues(const GaussianState& s, int n_max, double tail_tol) {
    double mu = purity(s);
    if (mu > 1.0 + 1e-9)
        throw std::domain_error("eigenvalues: purity > 1, not a physical state");
    mu = std::min(mu, 1.0);
    if (n_max < 0) n_max = auto_n_max_eigenvalues(s, tail_tol);

    const double p0 = 2.0 * mu / (1.0 + mu);
    const double xi = (1.0 - mu) / (1.0 + mu);
    std::vector<double> p(n_max + 1);
    double v = p0;
    for (int n = 0; n <= n_max; ++n) {
        p[n] = v;
        v *= xi;
    }
    const double scale = std::pow(s.p2() / s.q2(), 0.25);
    return {mu, std::move(p), scale, n_max};
}

double von_neumann_entropy_from_purity(double mu) {
    if (!(mu > 0.0)) throw std::domain_error("von_neumann_entropy: purity must be > 0");
    if (mu > 1.0 + 1e-9)
        throw std::domain_error("von_neumann_entropy: purity > 1, not a physical state");
    if (mu >= 1.0) return 0.0;
    return (1.0 - mu) / (2.0 * mu) * std::log((1.0 + mu) / (1.0 - mu)) -
           std::log(2.0 * mu / (1.0 + mu));
}

double von_neumann_entropy(const GaussianState& s) {
    return von_neumann_entropy_from_purity(purity(s));
}

EffectiveOscillator effective_oscillator(const GaussianState& s, double temperature) {
    if (!(temperature > 0.0))
        throw std::domain_error("effective_oscillator: requires T > 0");
    const double mu = purity(s);
    if (mu >= 1.0 - 1e-14)
        throw std::domain_error("effective_oscillator: undefined for a pure state");
    // The pseudo-thermal form fixes omega_eff through mu = tanh(beta omega_eff / 2).
    const double omega_eff = 2.0 * temperature * std::atanh(mu);
    const double m_eff = std::sqrt(s.p2() / s.q2()) / omega_eff;
    const double z_eff = std::sqrt(1.0 - mu * mu) / (2.0 * mu);
    return {omega_eff, m_eff, z_eff};
}

double number_basis_diagonal(const GaussianState& s, int n) {
    if (n < 0) throw std::domain_error("number_basis_diagonal: n must be >= 0");
    const double pref = std::sqrt(4.0 / s.big_d());
    if (n == 0) return pref;

    const double a = s.a(), d = s.d();
    const double w2 = d * d - a * a;

    if (std::abs(a) < 1e-300 && std::abs(d) < 1e-300) return 0.0;  // pure ground state

    if (n <= 64 && std::abs(w2) > 1e-280) {
        // Literal closed form: complex intermediates when d^2 < a^2, with the
        // combination (d^2-a^2)^{n/2} P_n(d/sqrt(d^2-a^2)) asserted real.
        const std::complex<double> w2c(w2, 0.0);
        const std::complex<double> val =
            pref * std::pow(w2c, 0.5 * n) * legendre_p(n, d / std::sqrt(w2c));
        if (std::abs(val.imag()) > 1e-8)
            throw ConsistencyError("number_basis_diagonal: imaginary residue above 1e-8");
        return clamp_population(val.real(), "number_basis_diagonal");
    }
    // Overflow-safe real recurrence on Q_n = (d^2-a^2)^{n/2} P_n(d/sqrt(d^2-a^2)).
    double q_prev = 1.0, q_cur = d;
    for (int m = 1; m < n; ++m) {
        const double q_next = ((2.0 * m + 1.0) * d * q_cur - m * w2 * q_prev) / (m + 1.0);
        q_prev = q_cur;
        q_cur = q_next;
    }
    return clamp_population(pref * q_cur, "number_basis_diagonal");
}

std::vector<double> number_basis_diagonal_all(const GaussianState& s, int n_max) {
    if (n_max < 0) throw std::domain_error("number_basis_diagonal_all: n_max must be >= 0");
    const double pref = std::sqrt(4.0 / s.big_d());
    const double a = s.a(), d = s.d();
    const double w2 = d * d - a * a;

    std::vector<double> out(n_max + 1);
    double q_prev = 1.0, q_cur = d;
    out[0] = pref;
    if (n_max >= 1) out[1] = clamp_population(pref * q_cur, "number_basis_diagonal_all");
    for (int m = 1; m < n_max; ++m) {
        const double q_next = ((2.0 * m + 1.0) * d * q_cur - m * w2 * q_prev) / (m + 1.0);
        q_prev = q_cur;
        q_cur = q_next;
        out[m + 1] = clamp_population(pref * q_cur, "number_basis_diagonal_all");
    }
    return out;
}

namespace {

// Tensor-product Kronrod panels for the rotated-coordinate representation
//   rho_nm = b * integral du dv  N e^{-u^2/2q2} e^{-v^2 p2/2}
//            psi_n(b(u+v/2)) psi_m(b(u-v/2)).
Eigen::MatrixXd block_pass(const GaussianState& s, int n_max, double box, int panels) {
    const double b = s.b_scale();
    const double norm = 1.0 / std::sqrt(2.0 * M_PI * s.q2());
    const double lu = box, lv = 2.0 * box;

    std::vector<double> xu, wu, xv, wv;
    kronrod15_panels(-lu, lu, panels, xu, wu);
    kronrod15_panels(-lv, lv, panels, xv, wv);

    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n_max + 1, n_max + 1);
    std::vector<double> psi_plus(n_max + 1), psi_minus(n_max + 1);

    for (std::size_t i = 0; i < xu.size(); ++i) {
        const double u = xu[i];
        const double gu = std::exp(-0.5 * u * u / s.q2());
        if (gu == 0.0) continue;
        for (std::size_t j = 0; j < xv.size(); ++j) {
            const double v = xv[j];
            const double wt = wu[i] * wv[j] * gu * std::exp(-0.5 * v * v * s.p2());
            if (std::abs(wt) < 1e-300) continue;
            hermite_wavefunctions(n_max, b * (u + 0.5 * v), psi_plus);
            hermite_wavefunctions(n_max, b * (u - 0.5 * v), psi_minus);
            for (int n = 0; n <= n_max; ++n) {
                const double f = wt * psi_plus[n];
                // parity: rho_nm = 0 exactly for odd n+m; skip those pairs
                for (int mm = n % 2; mm <= n_max; mm += 2) m(n, mm) += f * psi_minus[mm];
            }
        }
    }
    return (b * norm) * m;
}

}  // namespace

NumberBasisBlock number_basis_block(const GaussianState& s, int n_max,
                                    const QuadratureSpec& spec) {
    spec.validate();
    if (n_max < 0) n_max = std::min(auto_n_max_diagonal(s, 1e-10), kBlockNMaxLimit);
    if (n_max > kBlockNMaxLimit)
        throw std::invalid_argument("number_basis_block: n_max above 200");

    const double b = s.b_scale();
    const double box = 8.0 * std::max(std::sqrt(s.q2()), 1.0 / b);

    // Panels sized to the fastest psi_n oscillation across the box; then
    // refine (1.5x) until two successive grids agree elementwise.
    const double waves = 2.0 * box * b * std::sqrt(2.0 * n_max + 1.0) / (2.0 * M_PI);
    int panels = std::max(8, static_cast<int>(std::ceil(waves / 1.5)) + 4);
    const double tol = std::max(1e-11, spec.abs_tol);

    Eigen::MatrixXd coarse = block_pass(s, n_max, box, panels);
    Eigen::MatrixXd fine;
    double diff = 0.0;
    bool converged = false;
    for (int pass = 0; pass < 4; ++pass) {
        panels = panels + panels / 2;
        fine = block_pass(s, n_max, box, panels);
        diff = (fine - coarse).cwiseAbs().maxCoeff();
        if (diff <= tol) {
            converged = true;
            break;
        }
        coarse = fine;
    }
    if (!converged)
        throw QuadratureError("number_basis_block: panel refinement stalled at diff=" +
                                  std::to_string(diff),
                              fine.trace(), diff);

    // Exact symmetry + parity of the kernel, imposed on the numerical block.
    Eigen::MatrixXd rho = 0.5 * (fine + fine.transpose());
    for (int n = 0; n <= n_max; ++n)
        for (int mm = (n % 2) ? 0 : 1; mm <= n_max; mm += 2) rho(n, mm) = 0.0;

    const double deficit = 1.0 - rho.trace();
    return {std::move(rho), n_max, deficit, auto_n_max_diagonal(s, 1e-8)};
}

OccupationStatistics occupation_statistics(const GaussianState& s, int n_max) {
    if (n_max < 0) n_max = auto_n_max_diagonal(s, 1e-14);
    const auto diag = number_basis_diagonal_all(s, n_max);

    double n_bar = 0.0, n2 = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        n_bar += n * diag[n];
        n2 += static_cast<double>(n) * n * diag[n];
    }
    const double identity = 0.25 * (s.x() + s.y()) - 0.5;
    if (std::abs(n_bar - identity) > 1e-8 * std::max(1.0, identity))
        throw ConsistencyError("occupation_statistics: sum disagrees with (x+y)/4 - 1/2");
    return {n_bar, n2 - n_bar * n_bar};
}

double shannon_entropy_diagonal(const GaussianState& s, int n_max) {
    if (n_max < 0) n_max = auto_n_max_diagonal(s, 1e-14);
    const auto diag = number_basis_diagonal_all(s, n_max);
    double h = 0.0;
    for (double p : diag)
        if (p > 0.0) h -= p * std::log(p);
    return h;
}

}  // namespace qbm
