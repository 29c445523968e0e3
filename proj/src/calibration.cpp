#include "qbm/calibration.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "qbm/fluctuations.hpp"

namespace qbm {

namespace {

double bisect_gamma(const std::function<double(double)>& residual, double lo, double hi,
                    double tol) {
    double f_lo = residual(lo);
    double f_hi = residual(hi);
    if (f_lo * f_hi > 0.0)
        throw std::runtime_error("calibration: target not bracketed on [gamma_lo, gamma_hi]");
    while (hi - lo > tol * std::max(1.0, hi)) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = residual(mid);
        if (f_mid == 0.0) return mid;
        if (f_lo * f_mid < 0.0) {
            hi = mid;
            f_hi = f_mid;
        } else {
            lo = mid;
            f_lo = f_mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double find_gamma_for_mean_energy(double target, const BathParams& p, double gamma_lo,
                                  double gamma_hi, double tol, const QuadratureSpec& spec) {
    auto residual = [&](double g) {
        BathParams q = p;
        q.gamma = g;
        return mean_energy(0.0, q, spec) - target;
    };
    return bisect_gamma(residual, gamma_lo, gamma_hi, tol);
}

double find_gamma_for_occupation(double target, double temperature, const BathParams& p,
                                 double gamma_lo, double gamma_hi, double tol,
                                 const QuadratureSpec& spec) {
    auto residual = [&](double g) {
        BathParams q = p;
        q.gamma = g;
        // <n> = <H_s>/omega0 - 1/2 for the unperturbed number operator
        return mean_energy(temperature, q, spec) / q.omega0 - 0.5 - target;
    };
    return bisect_gamma(residual, gamma_lo, gamma_hi, tol);
}

}  // namespace qbm
