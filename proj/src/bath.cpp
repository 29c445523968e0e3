#include "qbm/bath.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qbm/special_functions.hpp"

namespace qbm {

void BathParams::validate() const {
    if (!(mass > 0.0)) throw std::invalid_argument("BathParams: mass must be > 0");
    if (!(omega0 > 0.0)) throw std::invalid_argument("BathParams: omega0 must be > 0");
    if (gamma < 0.0) throw std::invalid_argument("BathParams: gamma must be >= 0");
    if (!(cutoff > 0.0)) throw std::invalid_argument("BathParams: cutoff must be > 0");
}

double spectral_density(double omega, const BathParams& p) {
    if (omega < 0.0) throw std::domain_error("spectral_density: requires omega >= 0");
    const double g2 = p.cutoff * p.cutoff;
    return p.gamma * omega * g2 / (omega * omega + g2);
}

double damping_kernel(double t, const BathParams& p) {
    if (t < 0.0) throw std::domain_error("damping_kernel: requires t >= 0");
    return p.gamma * p.cutoff * std::exp(-p.cutoff * t);
}

std::complex<double> damping_fourier(double omega, const BathParams& p) {
    return p.gamma * p.cutoff / std::complex<double>(p.cutoff, -omega);
}

std::complex<double> susceptibility(double omega, const BathParams& p) {
    const std::complex<double> denom =
        p.mass * (p.omega0 * p.omega0 - omega * omega) -
        std::complex<double>(0.0, omega) * damping_fourier(omega, p);
    return 1.0 / denom;
}

DrudePoles drude_poles(const BathParams& p) {
    p.validate();
    const double w02 = p.omega0 * p.omega0;
    // lambda_j solve mu^3 - Gamma mu^2 + (omega0^2 + gamma Gamma/m) mu - omega0^2 Gamma = 0.
    auto roots = cubic_roots(-p.cutoff, w02 + p.gamma * p.cutoff / p.mass, -w02 * p.cutoff);

    // cubic_roots gives [real, +Im, -Im] in the oscillatory case.  With three
    // real roots the "real first" rule is vacuous; sort ascending.  No fixed
    // labeling is index-continuous through both real-collision transitions
    // (root monodromy); the root set itself is what downstream consumers use,
    // and all of them are symmetric in the three roots.
    const bool all_real =
        std::all_of(roots.begin(), roots.end(), [](auto z) { return z.imag() == 0.0; });
    if (all_real) {
        std::sort(roots.begin(), roots.end(),
                  [](auto a, auto b) { return a.real() < b.real(); });
    }
    return DrudePoles{roots};
}

double phase(double omega, const DrudePoles& poles, const BathParams& p) {
    if (omega < 0.0) throw std::domain_error("phase: requires omega >= 0");
    double phi = 0.0;
    const auto& l = poles.lambda;
    for (int j = 0; j < 3; ++j) {
        if (l[j].imag() == 0.0) {
            phi += std::atan2(omega, l[j].real());
        } else if (l[j].imag() > 0.0) {
            // arctan(w/l) + arctan(w/conj(l)) = arg(|l|^2 - w^2 + 2 i w Re l),
            // which stays in the upper half plane: continuous for all w.
            const double n2 = std::norm(l[j]);
            phi += std::atan2(2.0 * omega * l[j].real(), n2 - omega * omega);
        }
    }
    return phi - std::atan2(omega, p.cutoff);
}

double phase(double omega, const BathParams& p) {
    return phase(omega, drude_poles(p), p);
}

double log_chi_derivative_im(double omega, const DrudePoles& poles, const BathParams& p) {
    if (omega < 0.0) throw std::domain_error("log_chi_derivative_im: requires omega >= 0");
    const double w2 = omega * omega;
    double val = 0.0;
    const auto& l = poles.lambda;
    for (int j = 0; j < 3; ++j) {
        if (l[j].imag() == 0.0) {
            val += l[j].real() / (std::norm(l[j]) + w2);
        } else if (l[j].imag() > 0.0) {
            // lambda/(lambda^2+w^2) + c.c.
            val += 2.0 * (l[j] / (l[j] * l[j] + w2)).real();
        }
    }
    return val - p.cutoff / (p.cutoff * p.cutoff + w2);
}

double log_chi_derivative_im(double omega, const BathParams& p) {
    return log_chi_derivative_im(omega, drude_poles(p), p);
}

double noise_correlation(double t, double temperature, const BathParams& p,
                         const QuadratureSpec& spec, double uv_cutoff) {
    p.validate();
    if (t < 0.0) t = -t;  // K is even by construction
    if (temperature < 0.0) throw std::domain_error("noise_correlation: requires T >= 0");
    if (uv_cutoff <= 0.0) uv_cutoff = 100.0 * std::max(p.cutoff, p.omega0);

    auto integrand = [&](double w) {
        const double th = temperature > 0.0 ? coth_half(w / temperature) : 1.0;
        return spectral_density(w, p) * th / M_PI;
    };

    if (t == 0.0) {
        // Log-divergent in the UV; report the cutoff-regularized value.
        const double thermal = temperature > 0.0 ? 20.0 * temperature : 0.0;
        const double feats[] = {p.omega0, p.cutoff, thermal};
        return integrate(integrand, 0.0, uv_cutoff, spec, feats).value;
    }
    auto damped = [&](double w) { return integrand(w); };
    const double feature_end =
        std::max({4.0 * p.cutoff, 4.0 * p.omega0,
                  temperature > 0.0 ? 8.0 * temperature : 0.0});
    return integrate_cosine_transform(damped, t, feature_end, spec).value;
}

}  // namespace qbm
