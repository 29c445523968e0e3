// Command-line front end: parameter sweeps, figure-data reproduction, and
// discrete-bath oracle runs, with CSV/JSON output in natural units.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qbm/calibration.hpp"
#include "qbm/discrete_bath.hpp"
#include "qbm/fluctuations.hpp"
#include "qbm/gaussian_state.hpp"
#include "qbm/landauer.hpp"
#include "qbm/special_functions.hpp"
#include "qbm/thermo.hpp"
#include "sweep_io.hpp"

namespace {

using namespace qbm;
using cli::format_full;
using cli::Table;

constexpr int kExitOk = 0;
constexpr int kExitParameter = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitConstraint = 4;

struct Options {
    double omega0 = 1.0;
    double mass = 1.0;
    double gamma = 1.0;
    double cutoff = 10.0;
    double temp = 1.0;
    std::string temp_range;
    int n_max = -1;
    int samples = 1000;
    std::uint64_t seed = 42;
    double rel_tol = 0.0;  // 0: library default / env override
    std::string format = "csv";
    std::string out;
    std::string spec_file;
    // command-specific
    std::string state = "qbm";
    double n_bar = 1.0;
    double tune_occupation = -1.0;
    double tune_energy = -1.0;
    double delta = 1e-3;
    int bath_size = 4000;
    bool full = false;
    std::string command;  // informational key in recipe files
};

BathParams bath_params(const Options& o) {
    BathParams p;
    p.omega0 = o.omega0;
    p.mass = o.mass;
    p.gamma = o.gamma;
    p.cutoff = o.cutoff;
    p.validate();
    if (p.cutoff_below_resonance())
        std::cerr << "warning: cutoff <= omega0; the Drude bath is barely ohmic here\n";
    return p;
}

QuadratureSpec quadrature_spec(const Options& o) {
    QuadratureSpec spec;
    if (o.rel_tol > 0.0) {
        spec.rel_tol = o.rel_tol;
    } else if (const char* env = std::getenv("QBM_QUAD_RTOL")) {
        spec.rel_tol = std::stod(env);
    }
    spec.abs_tol = std::min(spec.abs_tol, spec.rel_tol * 0.01);
    spec.validate();
    return spec;
}

std::vector<std::string> header(const Options& o, const std::string& cmd) {
    std::vector<std::string> lines;
    lines.push_back("qbm " + cmd + "; natural units hbar = k_B = 1, m = " +
                    format_full(o.mass) + ", omega0 = " + format_full(o.omega0));
    lines.push_back("params: gamma=" + format_full(o.gamma) +
                    " cutoff=" + format_full(o.cutoff));
    return lines;
}

void emit(const Options& o, const Table& table) {
    if (o.format == "json")
        cli::write_output(o.out, table.to_json());
    else
        cli::write_output(o.out, table.to_csv());
}

std::vector<double> temperatures(const Options& o) {
    if (!o.temp_range.empty()) return cli::parse_range(o.temp_range);
    return {o.temp};
}

int run_entropy_sweep(Options o) {
    auto p = bath_params(o);
    const auto spec = quadrature_spec(o);
    if (o.tune_energy > 0.0) {
        p.gamma = find_gamma_for_mean_energy(o.tune_energy * p.omega0, p, 1e-3, 8.0, 1e-8, spec);
        o.gamma = p.gamma;
    }
    const auto temps = temperatures(o);

    // --full adds the whole thermodynamic row (Z, F, U, C, U_int).
    std::vector<std::array<double, 9>> rows(temps.size());
    auto err = cli::parallel_for(temps.size(), [&](std::size_t i) {
        const double t = temps[i];
        if (!(t > 0.0)) throw std::domain_error("temperature grid must be positive");
        const auto cmp = entropy_comparison(t, p, spec);
        if (o.full) {
            const auto pt = thermo_point(t, p, spec);
            rows[i] = {t,    pt.z, pt.f, pt.s, pt.u, pt.c, pt.u_int, cmp.von_neumann,
                       cmp.mutual_information};
        } else {
            rows[i] = {t, cmp.thermodynamic, cmp.von_neumann, entropy_kernel(p.omega0 / t),
                       cmp.mutual_information, 0, 0, 0, 0};
        }
    });
    if (err) {
        std::cerr << "numerical failure at T=" << format_full(temps[err->first]) << ": "
                  << err->second << "\n";
        return kExitNumerical;
    }

    Table table;
    table.header_lines = header(o, "entropy-sweep");
    if (o.tune_energy > 0.0)
        table.header_lines.push_back("tuned: gamma=" + format_full(o.gamma) +
                                     " for mean energy " + format_full(o.tune_energy) +
                                     " at T=0");
    if (o.full) {
        table.columns = {"T", "Z", "F", "S", "U", "C", "U_int", "S_vN", "I_sb"};
        for (const auto& r : rows)
            table.add_row({r[0], r[1], r[2], r[3], r[4], r[5], r[6], r[7], r[8]});
    } else {
        table.columns = {"T", "S_thermo", "S_vN", "s_omega0", "I_sb"};
        for (const auto& r : rows) table.add_row({r[0], r[1], r[2], r[3], r[4]});
    }
    emit(o, table);
    return kExitOk;
}

int run_density_matrix(Options o) {
    auto p = bath_params(o);
    const auto spec = quadrature_spec(o);

    GaussianState state = [&] {
        if (o.state == "thermal") return GaussianState::thermal(o.n_bar, p);
        if (o.state == "squeezed") return GaussianState::squeezed_vacuum(o.n_bar);
        if (o.tune_occupation >= 0.0) {
            p.gamma = find_gamma_for_occupation(o.tune_occupation, o.temp, p, 1e-3, 8.0,
                                                1e-8, spec);
            o.gamma = p.gamma;
        }
        return GaussianState::from_bath(o.temp, p, spec);
    }();

    const auto block = number_basis_block(state, o.n_max, spec);
    if (block.truncated())
        std::cerr << "warning: trace deficit " << format_full(block.trace_deficit)
                  << " at n_max=" << block.n_max << "; suggested n_max="
                  << block.suggested_n_max << "\n";

    const auto stats = occupation_statistics(state);
    const auto dec = eigenvalues(state, block.n_max);

    Table table;
    table.header_lines = header(o, "density-matrix");
    table.header_lines.push_back("state: " + o.state +
                                 (o.state == "qbm" ? " T=" + format_full(o.temp)
                                                   : " n_bar=" + format_full(o.n_bar)));
    if (o.tune_occupation >= 0.0)
        table.header_lines.push_back("tuned: gamma=" + format_full(o.gamma) +
                                     " for occupation " + format_full(o.tune_occupation));
    table.columns = {"n", "m", "rho_nm", "rho_diag_closed", "p_eigen"};
    for (int n = 0; n <= block.n_max; ++n) {
        for (int m = 0; m <= block.n_max; ++m) {
            std::vector<std::string> row = {std::to_string(n), std::to_string(m),
                                            format_full(block.rho(n, m)), "", ""};
            if (n == m) {
                row[3] = format_full(number_basis_diagonal(state, n));
                row[4] = format_full(dec.p_n[n]);
            }
            table.rows.push_back(std::move(row));
        }
    }
    table.footer_lines.push_back(
        "summary: trace=" + format_full(1.0 - block.trace_deficit) +
        " purity_sum=" + format_full(block.rho.squaredNorm()) +
        " purity=" + format_full(purity(state)) + " n_bar=" + format_full(stats.n_bar) +
        " var_n=" + format_full(stats.var_n));
    emit(o, table);
    return kExitOk;
}

int run_state_bounds(Options o) {
    auto p = bath_params(o);
    const auto spec = quadrature_spec(o);
    if (o.samples < 1) {
        std::cerr << "samples must be >= 1\n";
        return kExitParameter;
    }

    // Draw sequentially so the sample set depends only on the seed.
    // Documented ranges: log-uniform gamma in [0.01, 3] omega0,
    // cutoff in [2, 200] omega0, T in [1e-3, 10] hbar omega0 / k.
    cli::UniformStream stream(o.seed);
    std::vector<BathParams> draws(o.samples, p);
    std::vector<double> temps(o.samples);
    for (int i = 0; i < o.samples; ++i) {
        draws[i].gamma = stream.log_uniform(0.01, 3.0) * p.omega0;
        draws[i].cutoff = stream.log_uniform(2.0, 200.0) * p.omega0;
        temps[i] = stream.log_uniform(1e-3, 10.0);
    }

    struct Row {
        double x, y, n_bar, var_n, mu;
    };
    std::vector<Row> rows(o.samples);
    auto err = cli::parallel_for(o.samples, [&](std::size_t i) {
        const auto s = GaussianState::from_bath(temps[i], draws[i], spec);
        const auto stats = occupation_statistics(s);
        rows[i] = {s.x(), s.y(), stats.n_bar, stats.var_n, purity(s)};
    });
    if (err) {
        std::cerr << "numerical failure at sample " << err->first << " (gamma="
                  << format_full(draws[err->first].gamma)
                  << ", cutoff=" << format_full(draws[err->first].cutoff)
                  << ", T=" << format_full(temps[err->first]) << "): " << err->second << "\n";
        return kExitNumerical;
    }

    for (int i = 0; i < o.samples; ++i) {
        const auto& r = rows[i];
        const double band = r.n_bar * (r.n_bar + 1.0);
        const bool ok = r.x * r.y >= 1.0 - 1e-9 && r.mu <= 1.0 + 1e-9 &&
                        r.var_n >= band - 1e-6 && r.var_n <= 2.0 * band + 1e-6;
        if (!ok) {
            std::cerr << "state-bound violation at gamma=" << format_full(draws[i].gamma)
                      << " cutoff=" << format_full(draws[i].cutoff)
                      << " T=" << format_full(temps[i]) << "\n";
            return kExitConstraint;
        }
    }

    Table table;
    table.header_lines = header(o, "state-bounds");
    table.header_lines.push_back(
        "sampling: log-uniform gamma in [0.01,3] omega0, cutoff in [2,200] omega0, "
        "T in [1e-3,10]; seed=" + std::to_string(o.seed) +
        " samples=" + std::to_string(o.samples));
    table.columns = {"dq2_norm", "dp2_norm", "n_bar", "var_n", "gamma", "cutoff", "T"};
    for (int i = 0; i < o.samples; ++i)
        table.add_row({rows[i].x, rows[i].y, rows[i].n_bar, rows[i].var_n, draws[i].gamma,
                       draws[i].cutoff, temps[i]});
    emit(o, table);
    return kExitOk;
}

int run_landauer(Options o) {
    const auto p = bath_params(o);
    const auto spec = quadrature_spec(o);
    const auto temps = temperatures(o);
    if (!std::is_sorted(temps.begin(), temps.end())) {
        std::cerr << "temperature grid must be ascending\n";
        return kExitParameter;
    }

    std::vector<LandauerPoint> points(temps.size());
    std::vector<std::string> point_errors(temps.size());
    auto err = cli::parallel_for(temps.size(), [&](std::size_t i) {
        try {
            points[i] = landauer_ratio(temps[i], p, o.delta, spec);
        } catch (const std::exception& e) {
            point_errors[i] = e.what();  // collected; sweep continues
        }
    });
    (void)err;  // per-point failures are handled below

    Table table;
    table.header_lines = header(o, "landauer");
    table.columns = {"T", "ratio", "kTln2", "ratio_over_bound"};
    bool any_failed = false;
    for (std::size_t i = 0; i < temps.size(); ++i) {
        if (!point_errors[i].empty()) {
            any_failed = true;
            std::cerr << "skipping T=" << format_full(temps[i]) << ": " << point_errors[i]
                      << "\n";
            continue;
        }
        table.add_row({points[i].temperature, points[i].ratio, points[i].bound,
                       points[i].ratio_over_bound()});
    }
    emit(o, table);
    return any_failed ? kExitNumerical : kExitOk;
}

int run_oracle(Options o) {
    const auto p = bath_params(o);
    const auto spec = quadrature_spec(o);
    if (o.bath_size < 1) {
        std::cerr << "bath size must be >= 1\n";
        return kExitParameter;
    }

    const auto bath = build_discrete_bath(o.bath_size, p);
    const auto modes = normal_modes(bath);

    Table table;
    table.header_lines = header(o, "oracle");
    table.header_lines.push_back("discrete bath: N=" + std::to_string(o.bath_size) +
                                 " delta=" + format_full(bath.delta) +
                                 " T=" + format_full(o.temp));
    table.header_lines.push_back(
        "tolerances are the N=4000 figures scaled by max(1, 4000/N): the "
        "discretization converges first order in Delta");
    table.columns = {"quantity", "discrete", "continuum", "rel_dev", "tol", "pass"};

    bool all_pass = true;
    auto add = [&](const std::string& name, double exact, double model, double tol) {
        const double dev = std::abs(exact - model) / std::max(std::abs(model), 1e-300);
        const bool pass = dev <= tol;
        all_pass = all_pass && pass;
        table.rows.push_back({name, format_full(exact), format_full(model), format_full(dev),
                              format_full(tol), pass ? "1" : "0"});
    };

    const double n_scale = std::max(1.0, 4000.0 / o.bath_size);
    const auto [q2, p2] = exact_moments(bath, modes, o.temp);
    add("q2", q2, position_variance(o.temp, p, spec), 0.005 * n_scale);
    add("p2", p2, momentum_variance(o.temp, p, spec), 0.005 * n_scale);
    if (o.temp > 0.0) {
        const double f_discrete =
            exact_total_free_energy(bath, modes, o.temp) - bath_free_energy(bath, o.temp);
        add("F_tot-F_b", f_discrete, free_energy(o.temp, p, spec), 0.01 * n_scale);
    }
    if (o.bath_size == 1) {
        // closed-form 2x2 cross-check
        const double w1 = bath.omegas[0], c = bath.couplings[0];
        const double head = p.omega0 * p.omega0 + c * c / (w1 * w1 * p.mass);
        const double tr = head + w1 * w1;
        const double det = head * w1 * w1 - c * c / p.mass;
        const double disc = std::sqrt(0.25 * tr * tr - det);
        add("mode0^2", modes.frequencies[0] * modes.frequencies[0], 0.5 * tr - disc, 1e-12);
        add("mode1^2", modes.frequencies[1] * modes.frequencies[1], 0.5 * tr + disc, 1e-12);
    }

    emit(o, table);
    if (!all_pass) {
        std::cerr << "oracle comparison failed tolerance\n";
        return kExitNumerical;
    }
    return kExitOk;
}

// Recipe-file support: values fill options not given on the command line.
struct SpecBinding {
    std::string key;
    CLI::Option* option;
    std::function<void(const std::string&)> set;
};

void apply_spec_file(const std::string& path, const std::string& command,
                     std::vector<SpecBinding>& bindings) {
    const auto kv = cli::read_spec_file(path);
    if (auto it = kv.find("command"); it != kv.end() && it->second != command)
        throw std::invalid_argument("spec file is for command '" + it->second +
                                    "', not '" + command + "'");
    for (auto& b : bindings) {
        if (b.option->count() > 0) continue;  // flags win
        if (auto it = kv.find(b.key); it != kv.end()) b.set(it->second);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Damped quantum harmonic oscillator (Drude bath): equilibrium statistics, "
                 "entropies, heat bookkeeping, and the exact finite-bath oracle"};
    app.require_subcommand(1);

    Options o;
    int exit_code = kExitOk;

    auto add_common = [&](CLI::App* cmd, std::vector<SpecBinding>& bindings) {
        auto bind = [&bindings](const std::string& key, CLI::Option* opt, auto& target) {
            bindings.push_back({key, opt, [&target](const std::string& v) {
                                    if constexpr (std::is_same_v<std::decay_t<decltype(target)>,
                                                                 std::string>)
                                        target = v;
                                    else if constexpr (std::is_integral_v<
                                                           std::decay_t<decltype(target)>>)
                                        target = static_cast<std::decay_t<decltype(target)>>(
                                            std::stoll(v));
                                    else
                                        target = std::stod(v);
                                }});
        };
        bind("omega0", cmd->add_option("--omega0", o.omega0, "oscillator frequency"), o.omega0);
        bind("mass", cmd->add_option("--mass", o.mass, "oscillator mass"), o.mass);
        bind("gamma", cmd->add_option("--gamma", o.gamma, "coupling strength"), o.gamma);
        bind("cutoff", cmd->add_option("--cutoff", o.cutoff, "Drude cutoff"), o.cutoff);
        bind("temp", cmd->add_option("--temp", o.temp, "temperature (hbar omega0/k)"), o.temp);
        bind("temp-range",
             cmd->add_option("--temp-range", o.temp_range,
                             "start:stop:count[:log] or comma list"),
             o.temp_range);
        bind("n-max", cmd->add_option("--n-max", o.n_max, "number-basis truncation (-1 auto)"),
             o.n_max);
        bind("samples", cmd->add_option("--samples", o.samples, "random draws"), o.samples);
        bind("seed", cmd->add_option("--seed", o.seed, "RNG seed"), o.seed);
        bind("rel-tol",
             cmd->add_option("--rel-tol", o.rel_tol,
                             "quadrature relative tolerance (also QBM_QUAD_RTOL)"),
             o.rel_tol);
        bind("format",
             cmd->add_option("--format", o.format, "csv or json")
                 ->check(CLI::IsMember({"csv", "json"})),
             o.format);
        bind("out", cmd->add_option("--out", o.out, "output path (default stdout)"), o.out);
        cmd->add_option("--spec", o.spec_file, "key=value recipe file (flags win)");
    };

    auto wire = [&](CLI::App* cmd, std::vector<SpecBinding>* bindings, auto runner) {
        cmd->callback([&, cmd, bindings, runner] {
            try {
                if (!o.spec_file.empty())
                    apply_spec_file(o.spec_file, cmd->get_name(), *bindings);
                exit_code = runner(o);
            } catch (const std::invalid_argument& e) {
                std::cerr << "parameter error: " << e.what() << "\n";
                exit_code = kExitParameter;
            } catch (const std::domain_error& e) {
                std::cerr << "parameter error: " << e.what() << "\n";
                exit_code = kExitParameter;
            } catch (const std::exception& e) {
                std::cerr << "numerical failure: " << e.what() << "\n";
                exit_code = kExitNumerical;
            }
        });
    };

    static std::vector<SpecBinding> b1, b2, b3, b4, b5;

    auto* sweep = app.add_subcommand("entropy-sweep",
                                     "thermodynamic vs von Neumann entropy over T");
    add_common(sweep, b1);
    b1.push_back({"tune-energy",
                  sweep->add_option("--tune-energy", o.tune_energy,
                                    "root-find gamma so <H_s>(T=0) equals this (hbar omega0)"),
                  [&](const std::string& v) { o.tune_energy = std::stod(v); }});
    b1.push_back({"full",
                  sweep->add_flag("--full", o.full,
                                  "emit the full thermodynamic row (T,Z,F,S,U,C,U_int,S_vN,I_sb)"),
                  [&](const std::string& v) { o.full = (v != "0" && v != "false"); }});
    wire(sweep, &b1, run_entropy_sweep);

    auto* dm = app.add_subcommand("density-matrix",
                                  "number-basis block rho_nm of a Gaussian state");
    add_common(dm, b2);
    b2.push_back({"state",
                  dm->add_option("--state", o.state, "qbm | thermal | squeezed")
                      ->check(CLI::IsMember({"qbm", "thermal", "squeezed"})),
                  [&](const std::string& v) { o.state = v; }});
    b2.push_back({"n-bar", dm->add_option("--n-bar", o.n_bar, "mean occupation"),
                  [&](const std::string& v) { o.n_bar = std::stod(v); }});
    b2.push_back({"tune-occupation",
                  dm->add_option("--tune-occupation", o.tune_occupation,
                                 "root-find gamma so <n> equals this (qbm state)"),
                  [&](const std::string& v) { o.tune_occupation = std::stod(v); }});
    wire(dm, &b2, run_density_matrix);

    auto* bounds = app.add_subcommand("state-bounds",
                                      "random-state sweep of variance/occupation bounds");
    add_common(bounds, b3);
    wire(bounds, &b3, run_state_bounds);

    auto* landauer = app.add_subcommand("landauer", "heat per bit vs the kT ln2 bound");
    add_common(landauer, b4);
    b4.push_back({"delta",
                  landauer->add_option("--delta", o.delta, "relative omega0 step"),
                  [&](const std::string& v) { o.delta = std::stod(v); }});
    wire(landauer, &b4, run_landauer);

    auto* oracle = app.add_subcommand("oracle",
                                      "discrete-bath exact values vs continuum formulas");
    add_common(oracle, b5);
    b5.push_back({"bath-size",
                  oracle->add_option("--bath-size", o.bath_size, "number of bath oscillators"),
                  [&](const std::string& v) { o.bath_size = std::stoi(v); }});
    wire(oracle, &b5, run_oracle);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParameter;
    }
    return exit_code;
}
