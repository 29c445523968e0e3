#include "qbm/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qbm {

namespace {

// Lanczos coefficients, g = 607/128 (Godfrey / Numerical Recipes set).
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczosC[15] = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5};

Complex lanczos_log_gamma(Complex z) {
    // Valid for Re z >= 0.5.
    Complex sum = kLanczosC[0];
    for (int i = 1; i < 15; ++i) sum += kLanczosC[i] / (z + Complex(i - 1, 0));
    const Complex t = z + (kLanczosG - 0.5);
    return 0.5 * std::log(2.0 * M_PI) + (z - 0.5) * std::log(t) - t + std::log(sum);
}

Complex polish_root(double a2, double a1, double a0, Complex x) {
    for (int it = 0; it < 3; ++it) {
        const Complex p = ((x + a2) * x + a1) * x + a0;
        const Complex dp = (3.0 * x + 2.0 * a2) * x + a1;
        if (std::abs(dp) == 0.0) break;
        const Complex step = p / dp;
        x -= step;
        if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
    }
    return x;
}

}  // namespace

Complex log_gamma(Complex z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
        throw std::domain_error("log_gamma: pole at non-positive integer");

    // Shift into the Lanczos domain.  For Im z != 0 the shifted points never
    // touch the cut, so the principal logs add up to the analytic branch.
    Complex shift(0.0, 0.0);
    int k = 0;
    if (z.real() < 0.5) k = static_cast<int>(std::ceil(0.5 - z.real()));
    for (int j = 0; j < k; ++j) shift += std::log(z + Complex(j, 0));
    return lanczos_log_gamma(z + Complex(k, 0)) - shift;
}

std::array<Complex, 3> cubic_roots(double a2, double a1, double a0) {
    // Numerical Recipes style: x^3 + a2 x^2 + a1 x + a0.
    const double q = (a2 * a2 - 3.0 * a1) / 9.0;
    const double r = (2.0 * a2 * a2 * a2 - 9.0 * a2 * a1 + 27.0 * a0) / 54.0;
    const double r2 = r * r, q3 = q * q * q;

    std::array<Complex, 3> roots;
    if (r2 < q3) {
        // Three real roots.
        const double theta = std::acos(std::clamp(r / std::sqrt(q3), -1.0, 1.0));
        const double m = -2.0 * std::sqrt(q);
        roots[0] = m * std::cos(theta / 3.0) - a2 / 3.0;
        roots[1] = m * std::cos((theta + 2.0 * M_PI) / 3.0) - a2 / 3.0;
        roots[2] = m * std::cos((theta - 2.0 * M_PI) / 3.0) - a2 / 3.0;
        for (auto& x : roots) x = Complex(polish_root(a2, a1, a0, x).real(), 0.0);
    } else {
        const double aa = -std::copysign(std::cbrt(std::abs(r) + std::sqrt(r2 - q3)), r);
        const double bb = (aa == 0.0) ? 0.0 : q / aa;
        const double real_root = polish_root(a2, a1, a0, Complex(aa + bb - a2 / 3.0, 0)).real();
        Complex pair(-0.5 * (aa + bb) - a2 / 3.0, 0.5 * std::sqrt(3.0) * std::abs(aa - bb));
        pair = polish_root(a2, a1, a0, pair);
        if (pair.imag() < 0.0) pair = std::conj(pair);
        roots[0] = Complex(real_root, 0.0);
        roots[1] = pair;
        roots[2] = std::conj(pair);
    }
    return roots;
}

double hermite_wavefunction(int n, double u) {
    if (n < 0) throw std::domain_error("hermite_wavefunction: n must be >= 0");
    double prev = 0.0;
    double cur = std::pow(M_PI, -0.25) * std::exp(-0.5 * u * u);
    for (int m = 1; m <= n; ++m) {
        const double next =
            u * std::sqrt(2.0 / m) * cur - std::sqrt((m - 1.0) / m) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

void hermite_wavefunctions(int n_max, double u, std::span<double> out) {
    if (n_max < 0 || out.size() != static_cast<std::size_t>(n_max) + 1)
        throw std::invalid_argument("hermite_wavefunctions: bad output span");
    out[0] = std::pow(M_PI, -0.25) * std::exp(-0.5 * u * u);
    if (n_max == 0) return;
    out[1] = u * std::sqrt(2.0) * out[0];
    for (int m = 2; m <= n_max; ++m)
        out[m] = u * std::sqrt(2.0 / m) * out[m - 1] - std::sqrt((m - 1.0) / m) * out[m - 2];
}

Complex legendre_p(int n, Complex z) {
    if (n < 0) throw std::domain_error("legendre_p: n must be >= 0");
    Complex prev(1.0, 0.0);
    if (n == 0) return prev;
    Complex cur = z;
    for (int m = 1; m < n; ++m) {
        const Complex next = ((2.0 * m + 1.0) * z * cur - static_cast<double>(m) * prev) /
                             static_cast<double>(m + 1);
        prev = cur;
        cur = next;
    }
    return cur;
}

double trigamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("trigamma: requires x > 0");
    double acc = 0.0;
    while (x < 16.0) {
        acc += 1.0 / (x * x);
        x += 1.0;
    }
    const double inv = 1.0 / x, inv2 = inv * inv;
    // psi'(x) ~ 1/x + 1/(2x^2) + sum B_2k / x^{2k+1}
    double series = inv + 0.5 * inv2 +
                    inv * inv2 * (1.0 / 6.0 + inv2 * (-1.0 / 30.0 + inv2 * (1.0 / 42.0 +
                                  inv2 * (-1.0 / 30.0))));
    return acc + series;
}

double coth_half(double x) {
    if (x < 0.0) throw std::domain_error("coth_half: requires x >= 0");
    if (x < 1e-4) return 2.0 / x + x / 6.0;  // cancellation-safe near 0
    return 1.0 / std::tanh(0.5 * x);
}

double log_2sinh_half(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_2sinh_half: requires x > 0");
    // ln(2 sinh(x/2)) = x/2 + ln(1 - e^{-x})
    return 0.5 * x + std::log1p(-std::exp(-x));
}

double entropy_kernel(double x) {
    if (!(x >= 0.0)) throw std::domain_error("entropy_kernel: requires x >= 0");
    if (x == 0.0) return std::numeric_limits<double>::infinity();
    if (x > 700.0) return 0.0;
    const double em = std::expm1(x);
    return x / em - std::log1p(-std::exp(-x));
}

}  // namespace qbm
