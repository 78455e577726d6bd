import numpy as np
import pytest

import pumpspec as ps


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Trigger JIT compilation once so timed tests see warm kernels."""
    p = ps.AtomParams(rabi=1.0, gamma_e=1.0, gamma_t=0.0)
    ps.propagate(np.diag([1, 0, 0]).astype(complex), p, ps.constant_drive(p),
                 t_end=0.01, dt=0.005)
    grid = ps.FrequencyGrid(tau=0.01, n_half=1)
    ps.photon_trajectories(p, ps.constant_drive(p), 0.01, grid, dt=0.005)
    ps.propagate_no_jump([1, 0, 0], p, ps.constant_drive(p), 0.01, dt=0.005)


@pytest.fixture(scope="session")
def reference_params():
    return ps.AtomParams(rabi=5.0, gamma_e=1.0, gamma_t=0.0, delta=0.0)


@pytest.fixture(scope="session")
def grid40():
    return ps.FrequencyGrid(tau=40.0, n_half=64)


@pytest.fixture(scope="session")
def ground_rho():
    return np.diag([1.0, 0.0, 0.0]).astype(complex)
