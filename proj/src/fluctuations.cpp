#include "qbm/fluctuations.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qbm/special_functions.hpp"

namespace qbm {

namespace {

// Im chi~(w) = J(w)/|D(w)|^2 with D = m(omega0^2-w^2) + w Im gamma~ - i J(w).
double im_chi(double w, const BathParams& p) {
    const double j = spectral_density(w, p);
    const double g2 = p.cutoff * p.cutoff;
    const double re_d = p.mass * (p.omega0 * p.omega0 - w * w) +
                        p.gamma * p.cutoff * w * w / (g2 + w * w);
    return j / (re_d * re_d + j * j);
}

// Initial panel edges: the resonance (narrow for weak coupling) plus the
// cutoff and thermal scales.
std::vector<double> feature_points(double temperature, const BathParams& p) {
    const double w0 = p.omega0;
    const double width = std::max(spectral_density(w0, p) / (2.0 * p.mass * w0), 1e-12 * w0);
    std::vector<double> pts = {0.5 * w0, 2.0 * w0, w0, p.cutoff};
    for (double scale : {1.0, 10.0, 100.0}) {
        pts.push_back(w0 - scale * width);
        pts.push_back(w0 + scale * width);
    }
    if (temperature > 0.0) {
        pts.push_back(temperature);
        pts.push_back(10.0 * temperature);
    }
    return pts;
}

double split_point(double temperature, const BathParams& p) {
    return 10.0 * std::max({p.omega0, p.cutoff, temperature});
}

double fdt_integral(double temperature, const BathParams& p, const QuadratureSpec& spec,
                    bool momentum) {
    p.validate();
    if (temperature < 0.0) throw std::domain_error("fdt moments: requires T >= 0");

    if (p.gamma == 0.0) {
        // Im chi collapses to a delta peak at omega0: bare-oscillator moments.
        const double th = temperature > 0.0 ? coth_half(p.omega0 / temperature) : 1.0;
        return momentum ? 0.5 * p.mass * p.omega0 * th : 0.5 * th / (p.mass * p.omega0);
    }

    auto integrand = [&](double w) {
        const double th = temperature > 0.0 ? coth_half(w / temperature) : 1.0;
        const double base = th * im_chi(w, p) / M_PI;
        return momentum ? p.mass * p.mass * w * w * base : base;
    };
    const auto pts = feature_points(temperature, p);
    try {
        return integrate_semi_infinite(integrand, spec, split_point(temperature, p), pts).value;
    } catch (const QuadratureError& e) {
        throw QuadratureError(std::string(momentum ? "momentum" : "position") +
                                  "_variance at T=" + std::to_string(temperature) +
                                  ", gamma=" + std::to_string(p.gamma) +
                                  ", cutoff=" + std::to_string(p.cutoff) + ": " + e.what(),
                              e.last_value(), e.last_error());
    }
}

}  // namespace

double position_variance(double temperature, const BathParams& p, const QuadratureSpec& spec) {
    return fdt_integral(temperature, p, spec, false);
}

double momentum_variance(double temperature, const BathParams& p, const QuadratureSpec& spec) {
    return fdt_integral(temperature, p, spec, true);
}

double mean_energy(double temperature, const BathParams& p, const QuadratureSpec& spec) {
    const auto m = equilibrium_moments(temperature, p, spec);
    return m.mean_energy;
}

EquilibriumMoments equilibrium_moments(double temperature, const BathParams& p,
                                       const QuadratureSpec& spec) {
    const double q2 = position_variance(temperature, p, spec);
    const double p2 = momentum_variance(temperature, p, spec);
    const double e = 0.5 * p2 / p.mass + 0.5 * p.mass * p.omega0 * p.omega0 * q2;
    return {temperature, q2, p2, e};
}

double matsubara_position_variance(double temperature, const BathParams& p, int n_terms) {
    p.validate();
    if (!(temperature > 0.0))
        throw std::domain_error(
            "matsubara_position_variance: requires T > 0 (use the quadrature route at T = 0)");
    if (n_terms < 1) throw std::invalid_argument("matsubara_position_variance: n_terms >= 1");

    const double beta = 1.0 / temperature;
    const double nu1 = 2.0 * M_PI / beta;
    const double w02 = p.omega0 * p.omega0;

    double sum = 1.0 / w02;  // n = 0
    for (int n = 1; n <= n_terms; ++n) {
        const double nu = nu1 * n;
        const double ghat = p.gamma * p.cutoff / (nu + p.cutoff);
        sum += 2.0 / (w02 + nu * nu + nu * ghat / p.mass);
    }
    // Tail: terms ~ 1/nu_n^2; sum_{n>N} 1/n^2 = trigamma(N+1).
    sum += 2.0 * trigamma(n_terms + 1.0) / (nu1 * nu1);

    return sum / (p.mass * beta);
}

}  // namespace qbm
