// Python bindings for the core operations.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qbm/calibration.hpp"
#include "qbm/discrete_bath.hpp"
#include "qbm/fluctuations.hpp"
#include "qbm/gaussian_state.hpp"
#include "qbm/landauer.hpp"
#include "qbm/quadrature.hpp"
#include "qbm/special_functions.hpp"
#include "qbm/thermo.hpp"

namespace py = pybind11;
using namespace qbm;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Damped quantum harmonic oscillator in a Drude bath: equilibrium "
              "statistics, entropies, heat bookkeeping, Landauer diagnostics "
              "(natural units hbar = k_B = 1)";

    py::register_exception<QuadratureError>(m, "QuadratureError", PyExc_ArithmeticError);
    py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_ArithmeticError);

    py::class_<QuadratureSpec>(m, "QuadratureSpec")
        .def(py::init<>())
        .def_readwrite("rel_tol", &QuadratureSpec::rel_tol)
        .def_readwrite("abs_tol", &QuadratureSpec::abs_tol)
        .def_readwrite("max_subdivisions", &QuadratureSpec::max_subdivisions)
        .def_readwrite("tail_decay_exponent", &QuadratureSpec::tail_decay_exponent);

    py::class_<BathParams>(m, "BathParams")
        .def(py::init([](double mass, double omega0, double gamma, double cutoff) {
                 BathParams p{mass, omega0, gamma, cutoff};
                 p.validate();
                 return p;
             }),
             py::arg("mass") = 1.0, py::arg("omega0") = 1.0, py::arg("gamma") = 1.0,
             py::arg("cutoff") = 10.0)
        .def_readwrite("mass", &BathParams::mass)
        .def_readwrite("omega0", &BathParams::omega0)
        .def_readwrite("gamma", &BathParams::gamma)
        .def_readwrite("cutoff", &BathParams::cutoff)
        .def("__repr__", [](const BathParams& p) {
            return "BathParams(mass=" + std::to_string(p.mass) +
                   ", omega0=" + std::to_string(p.omega0) +
                   ", gamma=" + std::to_string(p.gamma) +
                   ", cutoff=" + std::to_string(p.cutoff) + ")";
        });

    // bath characterization
    m.def("spectral_density", &spectral_density, py::arg("omega"), py::arg("params"));
    m.def("damping_kernel", &damping_kernel, py::arg("t"), py::arg("params"));
    m.def("damping_fourier", &damping_fourier, py::arg("omega"), py::arg("params"));
    m.def("susceptibility", &susceptibility, py::arg("omega"), py::arg("params"));
    m.def(
        "drude_poles",
        [](const BathParams& p) {
            const auto poles = drude_poles(p);
            return std::vector<std::complex<double>>(poles.lambda.begin(), poles.lambda.end());
        },
        py::arg("params"));
    m.def("phase", py::overload_cast<double, const BathParams&>(&phase), py::arg("omega"),
          py::arg("params"));
    m.def("log_chi_derivative_im",
          py::overload_cast<double, const BathParams&>(&log_chi_derivative_im),
          py::arg("omega"), py::arg("params"));
    m.def("noise_correlation", &noise_correlation, py::arg("t"), py::arg("temperature"),
          py::arg("params"), py::arg("spec") = QuadratureSpec{}, py::arg("uv_cutoff") = 0.0);

    // equilibrium moments
    py::class_<EquilibriumMoments>(m, "EquilibriumMoments")
        .def_readonly("temperature", &EquilibriumMoments::temperature)
        .def_readonly("q2", &EquilibriumMoments::q2)
        .def_readonly("p2", &EquilibriumMoments::p2)
        .def_readonly("mean_energy", &EquilibriumMoments::mean_energy);
    m.def("position_variance", &position_variance, py::arg("temperature"), py::arg("params"),
          py::arg("spec") = QuadratureSpec{});
    m.def("momentum_variance", &momentum_variance, py::arg("temperature"), py::arg("params"),
          py::arg("spec") = QuadratureSpec{});
    m.def("mean_energy", &mean_energy, py::arg("temperature"), py::arg("params"),
          py::arg("spec") = QuadratureSpec{});
    m.def("equilibrium_moments", &equilibrium_moments, py::arg("temperature"),
          py::arg("params"), py::arg("spec") = QuadratureSpec{});
    m.def("matsubara_position_variance", &matsubara_position_variance,
          py::arg("temperature"), py::arg("params"), py::arg("n_terms") = 2000);

    // Gaussian state and information measures
    py::class_<GaussianState>(m, "GaussianState")
        .def(py::init<double, double, double>(), py::arg("q2"), py::arg("p2"),
             py::arg("b_scale") = 1.0)
        .def_static("from_bath", &GaussianState::from_bath, py::arg("temperature"),
                    py::arg("params"), py::arg("spec") = QuadratureSpec{})
        .def_static("thermal", &GaussianState::thermal, py::arg("n_bar"),
                    py::arg("params") = BathParams{})
        .def_static("squeezed_vacuum", &GaussianState::squeezed_vacuum, py::arg("n_bar"))
        .def_property_readonly("q2", &GaussianState::q2)
        .def_property_readonly("p2", &GaussianState::p2)
        .def_property_readonly("x", &GaussianState::x)
        .def_property_readonly("y", &GaussianState::y)
        .def("kernel", &GaussianState::kernel, py::arg("q"), py::arg("q_prime"));

    py::class_<SpectralDecomposition>(m, "SpectralDecomposition")
        .def_readonly("mu", &SpectralDecomposition::mu)
        .def_readonly("p_n", &SpectralDecomposition::p_n)
        .def_readonly("eigenfunction_scale", &SpectralDecomposition::eigenfunction_scale)
        .def_readonly("n_max", &SpectralDecomposition::n_max);
    py::class_<EffectiveOscillator>(m, "EffectiveOscillator")
        .def_readonly("omega_eff", &EffectiveOscillator::omega_eff)
        .def_readonly("m_eff", &EffectiveOscillator::m_eff)
        .def_readonly("z_eff", &EffectiveOscillator::z_eff);
    py::class_<NumberBasisBlock>(m, "NumberBasisBlock")
        .def_readonly("rho", &NumberBasisBlock::rho)
        .def_readonly("n_max", &NumberBasisBlock::n_max)
        .def_readonly("trace_deficit", &NumberBasisBlock::trace_deficit)
        .def_readonly("suggested_n_max", &NumberBasisBlock::suggested_n_max)
        .def("truncated", &NumberBasisBlock::truncated);
    py::class_<OccupationStatistics>(m, "OccupationStatistics")
        .def_readonly("n_bar", &OccupationStatistics::n_bar)
        .def_readonly("var_n", &OccupationStatistics::var_n);

    m.def("purity", &purity, py::arg("state"));
    m.def("eigenvalues", &eigenvalues, py::arg("state"), py::arg("n_max") = -1,
          py::arg("tail_tol") = 1e-10);
    m.def("von_neumann_entropy", &von_neumann_entropy, py::arg("state"));
    m.def("von_neumann_entropy_from_purity", &von_neumann_entropy_from_purity, py::arg("mu"));
    m.def("effective_oscillator", &effective_oscillator, py::arg("state"),
          py::arg("temperature"));
    m.def("number_basis_diagonal", &number_basis_diagonal, py::arg("state"), py::arg("n"));
    m.def("number_basis_diagonal_all", &number_basis_diagonal_all, py::arg("state"),
          py::arg("n_max"));
    m.def("number_basis_block", &number_basis_block, py::arg("state"), py::arg("n_max") = -1,
          py::arg("spec") = QuadratureSpec{});
    m.def("occupation_statistics", &occupation_statistics, py::arg("state"),
          py::arg("n_max") = -1);
    m.def("shannon_entropy_diagonal", &shannon_entropy_diagonal, py::arg("state"),
          py::arg("n_max") = -1);

    // thermodynamics
    py::class_<ThermoPoint>(m, "ThermoPoint")
        .def_readonly("temperature", &ThermoPoint::temperature)
        .def_readonly("z", &ThermoPoint::z)
        .def_readonly("log_z", &ThermoPoint::log_z)
        .def_readonly("f", &ThermoPoint::f)
        .def_readonly("s", &ThermoPoint::s)
        .def_readonly("u", &ThermoPoint::u)
        .def_readonly("c", &ThermoPoint::c)
        .def_readonly("u_int", &ThermoPoint::u_int);
    py::class_<EntropyComparison>(m, "EntropyComparison")
        .def_readonly("thermodynamic", &EntropyComparison::thermodynamic)
        .def_readonly("von_neumann", &EntropyComparison::von_neumann)
        .def_readonly("mutual_information", &EntropyComparison::mutual_information);
    py::enum_<VariedParameter>(m, "VariedParameter")
        .value("frequency", VariedParameter::frequency)
        .value("mass", VariedParameter::mass);
    py::class_<VariationReport>(m, "VariationReport")
        .def_readonly("parameter", &VariationReport::parameter)
        .def_readonly("delta", &VariationReport::delta)
        .def_readonly("d_f", &VariationReport::d_f)
        .def_readonly("d_s", &VariationReport::d_s)
        .def_readonly("d_q", &VariationReport::d_q)
        .def_readonly("d_w_s", &VariationReport::d_w_s)
        .def_readonly("d_q_s", &VariationReport::d_q_s)
        .def_readonly("d_u_int", &VariationReport::d_u_int)
        .def_readonly("d_mean_energy", &VariationReport::d_mean_energy);

    m.def("log_partition_function", &log_partition_function, py::arg("temperature"),
          py::arg("params"));
    m.def("partition_function", &partition_function, py::arg("temperature"), py::arg("params"));
    m.def("free_energy", &free_energy, py::arg("temperature"), py::arg("params"),
          py::arg("spec") = QuadratureSpec{});
    m.def("free_energy_integral", &free_energy_integral, py::arg("temperature"),
          py::arg("params"), py::arg("spec") = QuadratureSpec{});
    m.def("entropy", &entropy, py::arg("temperature"), py::arg("params"),
          py::arg("spec") = QuadratureSpec{});
    m.def("internal_energy", &internal_energy, py::arg("temperature"), py::arg("params"),
          py::arg("spec") = QuadratureSpec{});
    m.def("specific_heat", &specific_heat, py::arg("temperature"), py::arg("params"),
          py::arg("spec") = QuadratureSpec{});
    m.def("interaction_energy", &interaction_energy, py::arg("temperature"), py::arg("params"),
          py::arg("spec") = QuadratureSpec{});
    m.def("entropy_comparison", &entropy_comparison, py::arg("temperature"), py::arg("params"),
          py::arg("spec") = QuadratureSpec{});
    m.def("quasi_static_variation", &quasi_static_variation, py::arg("temperature"),
          py::arg("params"), py::arg("which"), py::arg("rel_step") = 1e-4,
          py::arg("spec") = QuadratureSpec{});
    m.def("thermo_point", &thermo_point, py::arg("temperature"), py::arg("params"),
          py::arg("spec") = QuadratureSpec{});

    // discrete bath oracle
    py::class_<DiscreteBath>(m, "DiscreteBath")
        .def_readonly("n_oscillators", &DiscreteBath::n_oscillators)
        .def_readonly("delta", &DiscreteBath::delta)
        .def_readonly("omegas", &DiscreteBath::omegas)
        .def_readonly("couplings", &DiscreteBath::couplings)
        .def_readonly("masses", &DiscreteBath::masses)
        .def_readonly("counter_term", &DiscreteBath::counter_term);
    py::class_<NormalModes>(m, "NormalModes")
        .def_readonly("frequencies", &NormalModes::frequencies)
        .def_readonly("system_overlap", &NormalModes::system_overlap);
    m.def("build_discrete_bath", &build_discrete_bath, py::arg("n"), py::arg("params"),
          py::arg("coverage") = 8.0);
    m.def("normal_modes", &normal_modes, py::arg("bath"));
    m.def("normal_modes_dense", &normal_modes_dense, py::arg("bath"));
    m.def("mode_matrix", &mode_matrix, py::arg("bath"), py::arg("modes"));
    m.def("exact_moments", &exact_moments, py::arg("bath"), py::arg("modes"),
          py::arg("temperature"));
    m.def("exact_total_free_energy", &exact_total_free_energy, py::arg("bath"),
          py::arg("modes"), py::arg("temperature"));
    m.def("bath_free_energy", &bath_free_energy, py::arg("bath"), py::arg("temperature"));

    // Landauer diagnostics
    py::class_<LandauerPoint>(m, "LandauerPoint")
        .def_readonly("temperature", &LandauerPoint::temperature)
        .def_readonly("ratio", &LandauerPoint::ratio)
        .def_readonly("bound", &LandauerPoint::bound)
        .def_readonly("below_bound", &LandauerPoint::below_bound)
        .def("ratio_over_bound", &LandauerPoint::ratio_over_bound);
    m.def("landauer_ratio", &landauer_ratio, py::arg("temperature"), py::arg("params"),
          py::arg("rel_step") = 1e-3, py::arg("spec") = QuadratureSpec{});
    m.def(
        "landauer_sweep",
        [](const std::vector<double>& temps, const BathParams& p, double rel_step,
           const QuadratureSpec& spec) {
            const auto sweep = landauer_sweep(temps, p, rel_step, spec);
            return std::make_pair(sweep.points, sweep.errors);
        },
        py::arg("temperatures"), py::arg("params"), py::arg("rel_step") = 1e-3,
        py::arg("spec") = QuadratureSpec{});

    // calibration helpers
    m.def("find_gamma_for_mean_energy", &find_gamma_for_mean_energy, py::arg("target"),
          py::arg("params"), py::arg("gamma_lo") = 1e-3, py::arg("gamma_hi") = 8.0,
          py::arg("tol") = 1e-8, py::arg("spec") = QuadratureSpec{});
    m.def("find_gamma_for_occupation", &find_gamma_for_occupation, py::arg("target"),
          py::arg("temperature"), py::arg("params"), py::arg("gamma_lo") = 1e-3,
          py::arg("gamma_hi") = 8.0, py::arg("tol") = 1e-8,
          py::arg("spec") = QuadratureSpec{});

    // special functions shared by the physics modules
    m.def("log_gamma", &log_gamma, py::arg("z"));
    m.def("hermite_wavefunction", &hermite_wavefunction, py::arg("n"), py::arg("u"));
    m.def("legendre_p", &legendre_p, py::arg("n"), py::arg("z"));
    m.def("coth_half", &coth_half, py::arg("x"));
    m.def("entropy_kernel", &entropy_kernel, py::arg("x"));
}
