// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Tolerances are pinned here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "qbm/calibration.hpp"
#include "qbm/discrete_bath.hpp"
#include "qbm/fluctuations.hpp"
#include "qbm/gaussian_state.hpp"
#include "qbm/landauer.hpp"
#include "qbm/special_functions.hpp"
#include "qbm/thermo.hpp"

using namespace qbm;

namespace {

int failures = 0;

class Criterion {
public:
    explicit Criterion(int number, std::string what)
        : number_(number), what_(std::move(what)), start_(clock::now()) {}

    void check(bool ok, const std::string& detail) {
        if (!ok) {
            all_ok_ = false;
            if (!first_failure_.empty()) first_failure_ += "; ";
            first_failure_ += detail;
        }
    }

    double elapsed() const {
        return std::chrono::duration<double>(clock::now() - start_).count();
    }

    void finish(double runtime_limit = 0.0, const std::string& note = "") {
        const double dt = elapsed();
        if (runtime_limit > 0.0 && dt > runtime_limit) {
            all_ok_ = false;
            first_failure_ += (first_failure_.empty() ? "" : "; ") + std::string("runtime ") +
                              std::to_string(dt) + " s exceeds " +
                              std::to_string(runtime_limit) + " s";
        }
        std::printf("[%s] criterion %2d: %s (%.2f s%s%s)\n", all_ok_ ? "PASS" : "FAIL",
                    number_, what_.c_str(), dt, note.empty() ? "" : "; ",
                    note.c_str());
        if (!all_ok_) {
            std::printf("       -> %s\n", first_failure_.c_str());
            ++failures;
        }
    }

private:
    using clock = std::chrono::steady_clock;
    int number_;
    std::string what_;
    clock::time_point start_;
    bool all_ok_ = true;
    std::string first_failure_;
};

BathParams params(double gamma, double cutoff, double omega0 = 1.0) {
    BathParams p;
    p.gamma = gamma;
    p.cutoff = cutoff;
    p.omega0 = omega0;
    return p;
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i)
        g[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
    return g;
}

double tuned_gamma_fig6() {
    static const double value = find_gamma_for_mean_energy(1.0, params(1.0, 10.0));
    return value;
}

void criterion_1() {
    Criterion c(1, "ground-state energetics: gamma tuned for <H_s>(0) = hbar omega0");
    const double g = tuned_gamma_fig6();
    c.check(g >= 2.3 && g <= 2.6, "recovered gamma = " + std::to_string(g) +
                                      " outside [2.3, 2.6]");
    const double e = mean_energy(0.0, params(g, 10.0));
    c.check(std::abs(e - 1.0) < 1e-6, "tuned mean energy " + std::to_string(e));
    c.finish(5.0, "gamma* = " + std::to_string(g));
}

void criterion_2() {
    Criterion c(2, "entropy ordering S_vN >= S_thermo on 50 points, T in [1e-3, 2]");
    const auto p = params(tuned_gamma_fig6(), 10.0);
    const auto grid = log_grid(1e-3, 2.0, 50);
    int violations = 0;
    for (double t : grid) {
        const auto cmp = entropy_comparison(t, p);
        if (cmp.von_neumann < cmp.thermodynamic) ++violations;
    }
    c.check(violations == 0, std::to_string(violations) + " ordering violations");
    const auto cold = entropy_comparison(1e-3, p);
    c.check(cold.von_neumann > 0.1,
            "S_vN(1e-3) = " + std::to_string(cold.von_neumann) + " <= 0.1");
    c.check(cold.thermodynamic < 0.01,
            "S_thermo(1e-3) = " + std::to_string(cold.thermodynamic) + " >= 0.01");
    c.finish(30.0);
}

void criterion_3() {
    Criterion c(3, "Third Law with linear onset: S(2T)/S(T) in [1.9, 2.1]");
    const auto p = params(1.0, 10.0);
    for (double t : {1e-3, 2e-3, 4e-3}) {
        const double ratio = entropy(2.0 * t, p) / entropy(t, p);
        c.check(ratio > 1.9 && ratio < 2.1,
                "S(2T)/S(T) = " + std::to_string(ratio) + " at T = " + std::to_string(t));
    }
    c.finish();
}

void criterion_4() {
    Criterion c(4, "occupation targets of Figs. 1 and 5 at cutoff = 100 omega0");
    const double g1 = find_gamma_for_occupation(1.0, 1e-3, params(1.0, 100.0));
    c.check(g1 >= 1.8 && g1 <= 2.2,
            "tuned gamma = " + std::to_string(g1) + " outside [1.8, 2.2]");
    const auto s5 = GaussianState::from_bath(1e-3, params(0.93, 100.0));
    const double n5 = occupation_statistics(s5).n_bar;
    c.check(std::abs(n5 - 0.50) <= 0.02, "<n> = " + std::to_string(n5) + " not 0.50 +- 0.02");
    c.finish(0.0, "gamma*(n=1) = " + std::to_string(g1) + ", n(0.93) = " + std::to_string(n5));
}

void criterion_5() {
    Criterion c(5, "route equivalence: Gamma-form F, Eq.15 S, Matsubara <q^2> on 3x3x3 grid");
    for (double t : {0.25, 1.5, 4.0}) {
        for (double gamma : {0.3, 1.0, 2.5}) {
            for (double cutoff : {6.0, 15.0, 60.0}) {
                const auto p = params(gamma, cutoff);
                const double f_a = free_energy(t, p);
                const double f_b = free_energy_integral(t, p);
                c.check(std::abs(f_a - f_b) <= 1e-6 * std::abs(f_a),
                        "F routes differ at T=" + std::to_string(t) + " gamma=" +
                            std::to_string(gamma) + " cutoff=" + std::to_string(cutoff));

                const double h = 1e-4 * t;
                const double s_fd = -(free_energy(t + h, p) - free_energy(t - h, p)) / (2 * h);
                const double s_int = entropy(t, p);
                c.check(std::abs(s_fd - s_int) <= 1e-5 * std::abs(s_int),
                        "S routes differ at T=" + std::to_string(t) + " gamma=" +
                            std::to_string(gamma) + " cutoff=" + std::to_string(cutoff));

                const double q2_quad = position_variance(t, p);
                const double q2_sum = matsubara_position_variance(t, p, 4000);
                c.check(std::abs(q2_quad - q2_sum) <= 1e-6 * q2_quad,
                        "<q^2> routes differ at T=" + std::to_string(t) + " gamma=" +
                            std::to_string(gamma) + " cutoff=" + std::to_string(cutoff));
            }
        }
    }
    c.finish();
}

void criterion_6() {
    Criterion c(6, "oracle closure: N = 4000 discrete bath vs continuum");
    const struct {
        double gamma, cutoff, temp;
    } points[] = {{1.0, 10.0, 1.0}, {2.43, 10.0, 0.5}};
    for (const auto& pt : points) {
        const auto p = params(pt.gamma, pt.cutoff);
        const auto bath = build_discrete_bath(4000, p);
        const auto modes = normal_modes(bath);
        const auto [q2_exact, p2_exact] = exact_moments(bath, modes, pt.temp);
        const double q2 = position_variance(pt.temp, p);
        const double p2 = momentum_variance(pt.temp, p);
        c.check(std::abs(q2 - q2_exact) <= 0.005 * q2_exact,
                "<q^2> off by " + std::to_string(std::abs(q2 - q2_exact) / q2_exact) +
                    " at gamma=" + std::to_string(pt.gamma));
        c.check(std::abs(p2 - p2_exact) <= 0.005 * p2_exact,
                "<p^2> off by " + std::to_string(std::abs(p2 - p2_exact) / p2_exact) +
                    " at gamma=" + std::to_string(pt.gamma));
        const double f_discrete = exact_total_free_energy(bath, modes, pt.temp) -
                                  bath_free_energy(bath, pt.temp);
        const double f = free_energy(pt.temp, p);
        c.check(std::abs(f_discrete - f) <= 0.01 * std::abs(f),
                "F_tot - F_b off by " + std::to_string(std::abs(f_discrete - f) / std::abs(f)) +
                    " at gamma=" + std::to_string(pt.gamma));
    }
    c.finish(120.0);
}

void criterion_7() {
    Criterion c(7, "density-matrix sum rules for the Fig. 1 and Fig. 5 states");
    const double g1 = find_gamma_for_occupation(1.0, 1e-3, params(1.0, 100.0));
    const GaussianState states[] = {GaussianState::from_bath(1e-3, params(g1, 100.0)),
                                    GaussianState::from_bath(1e-3, params(0.93, 100.0))};
    for (const auto& s : states) {
        const auto block = number_basis_block(s);  // auto-selected n_max
        const double trace = 1.0 - block.trace_deficit;
        c.check(trace >= 1.0 - 1e-8, "trace = " + std::to_string(trace));
        const double sum_sq = block.rho.squaredNorm();
        c.check(std::abs(sum_sq - purity(s)) <= 1e-4,
                "purity sum off by " + std::to_string(std::abs(sum_sq - purity(s))));
        for (int n = 0; n <= 10; ++n) {
            const double closed = number_basis_diagonal(s, n);
            c.check(std::abs(block.rho(n, n) - closed) <= 1e-8,
                    "rho_nn closed form vs quadrature at n=" + std::to_string(n));
        }
    }
    c.finish();
}

void criterion_8() {
    Criterion c(8, "bounds sweep: 1000 seeded random states");
    std::mt19937_64 rng(42);
    auto log_uniform = [&rng](double lo, double hi) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        return lo * std::pow(hi / lo, u);
    };
    for (int i = 0; i < 1000; ++i) {
        const auto p = params(log_uniform(0.01, 3.0), log_uniform(2.0, 200.0));
        const double t = log_uniform(1e-3, 10.0);
        const auto s = GaussianState::from_bath(t, p);
        const double mu = purity(s);
        c.check(mu <= 1.0, "purity above 1 at sample " + std::to_string(i));
        c.check(s.q2() * s.p2() >= 0.25, "uncertainty violated at sample " + std::to_string(i));
        const auto st = occupation_statistics(s);
        const double band = st.n_bar * (st.n_bar + 1.0);
        c.check(st.var_n >= band - 1e-6 && st.var_n <= 2.0 * band + 1e-6,
                "occupation band violated at sample " + std::to_string(i));
    }
    c.finish();
}

void criterion_9() {
    Criterion c(9, "heat bookkeeping: dF = dW_s, T dS = dQ_s + dU_int, dQ_s ~ -dU_int");
    const auto p = params(1.0, 10.0);

    const auto warm = quasi_static_variation(1.0, p, VariedParameter::frequency);
    c.check(std::abs(warm.d_f - warm.d_w_s) <= 1e-5 * std::abs(warm.d_f),
            "dF vs dW_s rel dev " +
                std::to_string(std::abs(warm.d_f - warm.d_w_s) / std::abs(warm.d_f)));
    c.check(std::abs(warm.d_q - (warm.d_q_s + warm.d_u_int)) <= 1e-5 * std::abs(warm.d_q),
            "T dS vs dQ_s + dU_int at T = 1");

    const auto cold = quasi_static_variation(1e-4, p, VariedParameter::frequency);
    c.check(std::abs(cold.d_q_s + cold.d_u_int) <= 0.01 * std::abs(cold.d_u_int),
            "dQ_s vs -dU_int rel dev " +
                std::to_string(std::abs(cold.d_q_s + cold.d_u_int) / std::abs(cold.d_u_int)));
    c.finish();
}

void criterion_10() {
    Criterion c(10, "Landauer: below bound at low T, weak-coupling limit, quadratic onset");
    for (double gamma : {0.1, 0.5}) {
        for (double t : {0.02, 0.05, 0.1}) {
            const auto pt = landauer_ratio(t, params(gamma, 10.0));
            c.check(pt.ratio < pt.bound, "not below bound at gamma=" + std::to_string(gamma) +
                                             " T=" + std::to_string(t));
        }
    }
    const auto weak = landauer_ratio(0.5, params(1e-5, 10.0));
    c.check(std::abs(weak.ratio - weak.bound) <= 1e-3 * weak.bound,
            "weak-coupling gap " +
                std::to_string(std::abs(weak.ratio - weak.bound) / weak.bound));
    double lo = 1e300, hi = 0.0;
    for (double t : {0.01, 0.02, 0.03}) {
        const double scaled = landauer_ratio(t, params(0.5, 100.0)).ratio / (t * t);
        lo = std::min(lo, scaled);
        hi = std::max(hi, scaled);
    }
    c.check((hi - lo) / lo <= 0.20,
            "ratio/T^2 varies by " + std::to_string((hi - lo) / lo));
    c.finish();
}

void criterion_11() {
    Criterion c(11, "second-law consistency: F(0) >= <H_s>(0) on 20 random baths");
    std::mt19937_64 rng(7);
    auto log_uniform = [&rng](double lo, double hi) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        return lo * std::pow(hi / lo, u);
    };
    for (int i = 0; i < 20; ++i) {
        const auto p = params(log_uniform(0.05, 3.0), log_uniform(2.0, 200.0));
        const double f0 = free_energy(0.0, p);
        const double e0 = mean_energy(0.0, p);
        c.check(f0 >= e0, "F(0) < <H_s>(0) at gamma=" + std::to_string(p.gamma) +
                              " cutoff=" + std::to_string(p.cutoff));
    }
    c.finish();
}

}  // namespace

int main() {
    std::printf("acceptance suite: damped quantum oscillator, Drude bath\n");
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    if (failures > 0) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
