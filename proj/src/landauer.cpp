#include "qbm/landauer.hpp"

#include <cmath>
#include <stdexcept>

#include "qbm/fluctuations.hpp"
#include "qbm/gaussian_state.hpp"
#include "qbm/thermo.hpp"

namespace qbm {

LandauerPoint landauer_ratio(double temperature, const BathParams& p, double rel_step,
                             const QuadratureSpec& spec) {
    p.validate();
    if (!(temperature > 0.0)) throw std::domain_error("landauer_ratio: requires T > 0");
    if (!(rel_step > 0.0) || rel_step > 0.1)
        throw std::invalid_argument("landauer_ratio: rel_step must be in (0, 0.1]");

    BathParams plus = p, minus = p;
    plus.omega0 = p.omega0 * (1.0 + rel_step);
    minus.omega0 = p.omega0 * (1.0 - rel_step);

    const double d_s = entropy(temperature, plus, spec) - entropy(temperature, minus, spec);

    // dmu by centered difference of the variances only, then the analytic
    // chain rule dS_v = -ln[(1+mu)/(1-mu)]/(2 mu^2) dmu.
    const auto mom_plus = equilibrium_moments(temperature, plus, spec);
    const auto mom_minus = equilibrium_moments(temperature, minus, spec);
    const double mu_plus = 0.5 / std::sqrt(mom_plus.q2 * mom_plus.p2);
    const double mu_minus = 0.5 / std::sqrt(mom_minus.q2 * mom_minus.p2);
    const double mu = 0.5 * (mu_plus + mu_minus);
    const double d_mu = mu_plus - mu_minus;
    if (!(mu < 1.0))
        throw std::domain_error("landauer_ratio: pure state, dS_v undefined");
    const double d_s_v = -std::log((1.0 + mu) / (1.0 - mu)) / (2.0 * mu * mu) * d_mu;
    if (std::abs(d_s_v) < 1e-14)
        throw std::runtime_error("landauer_ratio: degenerate variation, |dS_v| < 1e-14");

    const double ratio = std::abs(temperature * d_s * std::log(2.0) / d_s_v);
    const double bound = temperature * std::log(2.0);
    return {temperature, ratio, bound, ratio < bound};
}

LandauerSweep landauer_sweep(const std::vector<double>& temperatures, const BathParams& p,
                             double rel_step, const QuadratureSpec& spec) {
    if (!std::is_sorted(temperatures.begin(), temperatures.end()))
        throw std::invalid_argument("landauer_sweep: temperature grid must be ascending");
    LandauerSweep sweep;
    sweep.points.reserve(temperatures.size());
    for (std::size_t i = 0; i < temperatures.size(); ++i) {
        try {
            sweep.points.push_back(landauer_ratio(temperatures[i], p, rel_step, spec));
        } catch (const std::exception& e) {
            sweep.errors.emplace_back(i, e.what());
        }
    }
    return sweep;
}

}  // namespace qbm
