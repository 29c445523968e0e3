#include "qbm/discrete_bath.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qbm/special_functions.hpp"

namespace qbm {

namespace {

struct Arrowhead {
    double head;              // K00 = omega0^2 + sum c^2/(m m_i w_i^2)
    std::vector<double> diag; // d_i = w_i^2
    std::vector<double> off;  // k_i = -c_i / sqrt(m m_i)
};

Arrowhead arrowhead_of(const DiscreteBath& b) {
    const int n = b.n_oscillators;
    Arrowhead a;
    a.diag.resize(n);
    a.off.resize(n);
    double renorm = 0.0;
    for (int i = 0; i < n; ++i) {
        a.diag[i] = b.omegas[i] * b.omegas[i];
        a.off[i] = -b.couplings[i] / std::sqrt(b.system.mass * b.masses[i]);
        renorm += b.couplings[i] * b.couplings[i] / (b.masses[i] * a.diag[i]);
    }
    a.head = b.system.omega0 * b.system.omega0 + renorm / b.system.mass;
    return a;
}

double secular(const Arrowhead& a, double lambda) {
    double s = a.head - lambda;
    for (std::size_t i = 0; i < a.diag.size(); ++i)
        s -= a.off[i] * a.off[i] / (a.diag[i] - lambda);
    return s;
}

// f is strictly decreasing from +inf to -inf on each bracket.
double bisect_root(const Arrowhead& a, double lo, double hi) {
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (secular(a, mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double overlap_sq(const Arrowhead& a, double lambda) {
    double s = 1.0;
    for (std::size_t i = 0; i < a.diag.size(); ++i) {
        const double r = a.off[i] / (lambda - a.diag[i]);
        s += r * r;
    }
    return 1.0 / s;
}

}  // namespace

DiscreteBath build_discrete_bath(int n, const BathParams& p, double coverage) {
    p.validate();
    if (n < 1) throw std::invalid_argument("build_discrete_bath: n must be >= 1");
    if (!(coverage > 0.0)) throw std::invalid_argument("build_discrete_bath: coverage > 0");

    DiscreteBath b;
    b.n_oscillators = n;
    b.system = p;
    b.delta = coverage * p.cutoff / n;
    b.omegas.resize(n);
    b.couplings.resize(n);
    b.masses.assign(n, 1.0);
    double counter = 0.0;
    for (int i = 0; i < n; ++i) {
        const double w = (i + 1) * b.delta;
        b.omegas[i] = w;
        b.couplings[i] =
            std::sqrt(2.0 * b.delta * b.masses[i] * w * spectral_density(w, p) / M_PI);
        counter += b.couplings[i] * b.couplings[i] / (2.0 * b.masses[i] * w * w);
    }
    b.counter_term = counter;
    return b;
}

NormalModes normal_modes(const DiscreteBath& b) {
    const int n = b.n_oscillators;
    NormalModes modes;
    modes.frequencies.resize(n + 1);
    modes.system_overlap.resize(n + 1);

    if (b.system.gamma == 0.0) {
        // Uncoupled: modes are {omega0} and the bare bath frequencies.
        std::vector<double> f(b.omegas);
        f.push_back(b.system.omega0);
        std::sort(f.begin(), f.end());
        for (int k = 0; k <= n; ++k) {
            modes.frequencies[k] = f[k];
            modes.system_overlap[k] = (f[k] == b.system.omega0) ? 1.0 : 0.0;
        }
        return modes;
    }

    const Arrowhead a = arrowhead_of(b);

    // Interlacing brackets: (0, d_1), (d_i, d_{i+1}), (d_N, up).
    // f(0) = omega0^2 > 0 exactly (counter-term cancellation), so 0 brackets below.
    double off_sum = 0.0;
    for (double k : a.off) off_sum += k * k;
    double slack = std::max(1.0, 2.0 * (a.head - a.diag.back())) + 2.0 * off_sum;
    while (secular(a, a.diag.back() + slack) > 0.0) slack *= 2.0;

    for (int k = 0; k <= n; ++k) {
        const double lo = (k == 0) ? 0.0 : a.diag[k - 1];
        const double hi = (k == n) ? a.diag.back() + slack : a.diag[k];
        const double lambda = bisect_root(a, lo, hi);
        if (!(lambda > 0.0))
            throw std::runtime_error("normal_modes: non-positive eigenvalue (counter-term "
                                     "missing or N too small)");
        modes.frequencies[k] = std::sqrt(lambda);
        modes.system_overlap[k] = overlap_sq(a, lambda);
    }
    return modes;
}

NormalModes normal_modes_dense(const DiscreteBath& b) {
    const int n = b.n_oscillators;
    const Arrowhead a = arrowhead_of(b);

    Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n + 1, n + 1);
    k(0, 0) = a.head;
    for (int i = 0; i < n; ++i) {
        k(i + 1, i + 1) = a.diag[i];
        k(0, i + 1) = k(i + 1, 0) = a.off[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(k);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("normal_modes_dense: eigensolver failed");

    NormalModes modes;
    modes.frequencies.resize(n + 1);
    modes.system_overlap.resize(n + 1);
    for (int j = 0; j <= n; ++j) {
        const double ev = solver.eigenvalues()[j];
        if (!(ev > 0.0))
            throw std::runtime_error("normal_modes_dense: non-positive eigenvalue");
        modes.frequencies[j] = std::sqrt(ev);
        modes.system_overlap[j] = solver.eigenvectors()(0, j) * solver.eigenvectors()(0, j);
    }
    return modes;
}

Eigen::MatrixXd mode_matrix(const DiscreteBath& b, const NormalModes& modes) {
    const int n = b.n_oscillators;
    const Arrowhead a = arrowhead_of(b);
    Eigen::MatrixXd v(n + 1, n + 1);
    for (int k = 0; k <= n; ++k) {
        const double lambda = modes.frequencies[k] * modes.frequencies[k];
        const double v0 = std::sqrt(modes.system_overlap[k]);
        v(0, k) = v0;
        if (v0 == 0.0) {
            // uncoupled bath mode: unit vector on its own oscillator
            for (int i = 1; i <= n; ++i)
                v(i, k) = (std::abs(a.diag[i - 1] - lambda) <
                           1e-12 * std::max(1.0, lambda))
                              ? 1.0
                              : 0.0;
            continue;
        }
        for (int i = 1; i <= n; ++i) v(i, k) = a.off[i - 1] * v0 / (lambda - a.diag[i - 1]);
    }
    return v;
}

std::pair<double, double> exact_moments(const DiscreteBath& b, const NormalModes& modes,
                                        double temperature) {
    if (temperature < 0.0) throw std::domain_error("exact_moments: requires T >= 0");
    const double m = b.system.mass;
    double q2 = 0.0, p2 = 0.0;
    for (std::size_t k = 0; k < modes.frequencies.size(); ++k) {
        const double w = modes.frequencies[k];
        const double th = temperature > 0.0 ? coth_half(w / temperature) : 1.0;
        const double weight = modes.system_overlap[k] * th;
        q2 += weight * 0.5 / w;
        p2 += weight * 0.5 * w;
    }
    return {q2 / m, p2 * m};
}

double exact_total_free_energy(const DiscreteBath&, const NormalModes& modes,
                               double temperature) {
    if (!(temperature > 0.0))
        throw std::domain_error("exact_total_free_energy: requires T > 0");
    double f = 0.0;
    for (double w : modes.frequencies) f += temperature * log_2sinh_half(w / temperature);
    return f;
}

double bath_free_energy(const DiscreteBath& b, double temperature) {
    if (!(temperature > 0.0))
        throw std::domain_error("bath_free_energy: requires T > 0");
    double f = 0.0;
    for (double w : b.omegas) f += temperature * log_2sinh_half(w / temperature);
    return f;
}

}  // namespace qbm
