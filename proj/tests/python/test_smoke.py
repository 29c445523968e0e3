"""Smoke tests for the python bindings (natural units hbar = k_B = 1)."""

import math

import numpy as np
import pytest

import qbm


def test_bath_characterization():
    p = qbm.BathParams(gamma=1.0, cutoff=10.0)
    assert qbm.spectral_density(10.0, p) == pytest.approx(5.0)
    assert qbm.damping_kernel(0.0, p) == pytest.approx(10.0)
    chi0 = qbm.susceptibility(0.0, p)
    assert chi0 == pytest.approx(1.0)
    poles = qbm.drude_poles(p)
    assert sum(poles) == pytest.approx(10.0)


def test_thermal_state_purity_and_entropy():
    th = qbm.GaussianState.thermal(1.0)
    assert qbm.purity(th) == pytest.approx(1.0 / 3.0)
    # S_v of a thermal state equals the Bose entropy kernel
    t = 0.8
    n_bar = 1.0 / math.expm1(1.0 / t)
    th_t = qbm.GaussianState.thermal(n_bar)
    assert qbm.von_neumann_entropy(th_t) == pytest.approx(qbm.entropy_kernel(1.0 / t))


def test_entropy_comparison_orders():
    p = qbm.BathParams(gamma=2.43, cutoff=10.0)
    cmp = qbm.entropy_comparison(0.1, p)
    assert cmp.von_neumann > cmp.thermodynamic
    assert cmp.mutual_information > 0.0


def test_partition_function_weak_coupling():
    p = qbm.BathParams(gamma=1e-8, cutoff=10.0)
    t = 0.7
    exact = -math.log(2.0 * math.sinh(0.5 / t))
    assert qbm.log_partition_function(t, p) == pytest.approx(exact, rel=1e-8)


def test_number_basis_block_is_numpy():
    s = qbm.GaussianState.squeezed_vacuum(1.0)
    block = qbm.number_basis_block(s, 10)
    assert isinstance(block.rho, np.ndarray)
    assert block.rho.shape == (11, 11)
    assert block.rho[1, 1] == pytest.approx(0.0, abs=1e-12)  # parity
    stats = qbm.occupation_statistics(s)
    assert stats.n_bar == pytest.approx(1.0)
    assert stats.var_n == pytest.approx(4.0)


def test_landauer_below_bound_at_low_temperature():
    pt = qbm.landauer_ratio(0.05, qbm.BathParams(gamma=0.5, cutoff=10.0))
    assert pt.below_bound
    assert pt.bound == pytest.approx(0.05 * math.log(2.0))


def test_discrete_bath_oracle_roundtrip():
    p = qbm.BathParams(gamma=1.0, cutoff=10.0)
    bath = qbm.build_discrete_bath(500, p)
    modes = qbm.normal_modes(bath)
    assert len(modes.frequencies) == 501
    q2, p2 = qbm.exact_moments(bath, modes, 1.0)
    assert q2 == pytest.approx(qbm.position_variance(1.0, p), rel=0.05)
    assert p2 == pytest.approx(qbm.momentum_variance(1.0, p), rel=0.05)


def test_calibration_recovers_paper_coupling():
    gamma = qbm.find_gamma_for_mean_energy(1.0, qbm.BathParams(gamma=1.0, cutoff=10.0))
    assert 2.3 < gamma < 2.6


def test_errors_surface_as_python_exceptions():
    with pytest.raises(ValueError):
        qbm.BathParams(omega0=-1.0)
    with pytest.raises(ValueError):
        qbm.matsubara_position_variance(0.0, qbm.BathParams())
