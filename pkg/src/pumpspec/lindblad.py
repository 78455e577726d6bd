"""Master-equation generator, propagation and steady states.

The density matrix is vectorized row-major in the fixed (g, e, t) basis,
so vec(rho)[3*i + j] = rho_ij and vec(A rho B) = (A kron B^T) vec(rho).
The generator combines the coherent drive commutator with the two decay
channels e -> t (rate Gamma_e) and t -> g (rate Gamma_t); there is
deliberately no e -> g dissipator.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _rk4
from .core import (AtomParams, DegenerateSteadyStateError, DriveProfile,
                   ExpRampDrive, IntegrationError, ValidationError,
                   constant_drive, is_physical, ketbra)

_I3 = np.eye(3, dtype=complex)

_SIG_P_GE = ketbra(1, 0)
_SIG_M_GE = ketbra(0, 1)
_SIG_M_ET = ketbra(2, 1)
_SIG_M_GT = ketbra(0, 2)

# trace covector on vec(rho): picks out the diagonal entries
TRACE_ROW = np.zeros(9, dtype=complex)
TRACE_ROW[[0, 4, 8]] = 1.0


def _spre(a):
    return np.kron(a, _I3)


def _spost(b):
    return np.kron(_I3, b.T)


def _dissipator(lop, rate):
    ldl = lop.conj().T @ lop
    return rate * (np.kron(lop, lop.conj()) - 0.5 * _spre(ldl) - 0.5 * _spost(ldl))


# drive commutator superoperators: the Hamiltonian part of the generator is
# a(t)*KP + conj(a(t))*KM with a(t) = (Omega(t)/2) exp(i delta t)
_KP = -1j * (_spre(_SIG_P_GE) - _spost(_SIG_P_GE))
_KM = -1j * (_spre(_SIG_M_GE) - _spost(_SIG_M_GE))


def _decay_part(params: AtomParams) -> np.ndarray:
    return (_dissipator(_SIG_M_ET, params.gamma_e)
            + _dissipator(_SIG_M_GT, params.gamma_t))


def _drive_amplitude(params: AtomParams, drive: DriveProfile, t):
    omega = drive.value(t)
    if params.delta == 0.0:
        return 0.5 * omega + 0.0j
    return 0.5 * omega * np.exp(1j * params.delta * np.asarray(t, dtype=float))


@dataclass(frozen=True)
class Liouvillian:
    """Dense 9x9 generator acting on the row-major vectorized density matrix."""

    mat: np.ndarray
    time_dependent: bool

    def apply(self, rho: np.ndarray) -> np.ndarray:
        """d(rho)/dt for a 3x3 density matrix argument."""
        return (self.mat @ np.asarray(rho, dtype=complex).reshape(9)).reshape(3, 3)


def build_generator(params: AtomParams, drive: DriveProfile, t: float = 0.0) -> Liouvillian:
    """Generator L(t) such that d vec(rho)/dt = L(t) vec(rho)."""
    a = complex(_drive_amplitude(params, drive, float(t)))
    mat = _decay_part(params) + a * _KP + np.conj(a) * _KM
    td = params.delta != 0.0 or isinstance(drive, ExpRampDrive)
    return Liouvillian(mat=mat, time_dependent=td)


def default_dt(params: AtomParams, drive: DriveProfile | None = None) -> float:
    """Default integration step 0.005 / max(Omega_peak, Gamma_e, Gamma_t, |delta|, 1)."""
    peak = drive.peak if drive is not None else params.rabi
    scale = max(peak, params.gamma_e, params.gamma_t, abs(params.delta), 1.0)
    return 0.005 / scale


@dataclass(frozen=True)
class PopulationTrace:
    """Populations and coherences stored at every integration step.

    max_trace_defect and max_hermiticity_defect record the worst
    deviations of the raw propagated matrices over the whole run, before
    the Hermitian reconstruction below.
    """

    times: np.ndarray
    rho_gg: np.ndarray
    rho_ee: np.ndarray
    rho_tt: np.ndarray
    coh_ge: np.ndarray
    coh_et: np.ndarray
    coh_gt: np.ndarray
    max_trace_defect: float = 0.0
    max_hermiticity_defect: float = 0.0

    def density_matrices(self) -> np.ndarray:
        """Reconstruct the full (n, 3, 3) Hermitian matrices."""
        n = self.times.size
        rho = np.empty((n, 3, 3), dtype=complex)
        rho[:, 0, 0] = self.rho_gg
        rho[:, 1, 1] = self.rho_ee
        rho[:, 2, 2] = self.rho_tt
        rho[:, 0, 1] = self.coh_ge
        rho[:, 1, 0] = self.coh_ge.conj()
        rho[:, 1, 2] = self.coh_et
        rho[:, 2, 1] = self.coh_et.conj()
        rho[:, 0, 2] = self.coh_gt
        rho[:, 2, 0] = self.coh_gt.conj()
        return rho

    def final_matrix(self) -> np.ndarray:
        return self.density_matrices()[-1]


def _step_count(t_end: float, dt: float) -> tuple[int, float]:
    # dt is adjusted (by less than half a step) so that n*dt == t_end exactly
    if t_end <= 0 or dt <= 0:
        raise ValidationError(f"t_end and dt must be > 0, got {t_end}, {dt}")
    n = max(1, int(round(t_end / dt)))
    return n, t_end / n


def propagate(rho0, params: AtomParams, drive: DriveProfile,
              t_end: float, dt: float | None = None) -> PopulationTrace:
    """Fixed-step RK4 integration of the vectorized master equation.

    The state is stored at every step.  Time-dependent generators are
    evaluated at the RK4 substage times, preserving 4th-order accuracy.
    Raises IntegrationError when the propagated state drifts outside the
    physicality tolerances (the step size is then the suspect).
    """
    rho0 = np.asarray(rho0, dtype=complex).reshape(3, 3)
    check0 = is_physical(rho0, tol=1e-9)
    if not check0:
        raise ValidationError("initial state is unphysical: " + "; ".join(check0.failures))
    if dt is None:
        dt = default_dt(params, drive)
    n, dt = _step_count(t_end, dt)

    t_half = np.arange(2 * n + 1) * (dt / 2.0)
    ap = np.ascontiguousarray(_drive_amplitude(params, drive, t_half), dtype=complex)
    out = _rk4.liouville_rk4(_decay_part(params), _KP, _KM, ap, dt,
                             rho0.reshape(9))

    times = np.arange(n + 1) * dt
    trace_defect = np.max(np.abs(out[:, [0, 4, 8]].sum(axis=1) - 1.0))
    herm_defect = max(np.max(np.abs(out[:, 1] - out[:, 3].conj())),
                      np.max(np.abs(out[:, 5] - out[:, 7].conj())),
                      np.max(np.abs(out[:, 2] - out[:, 6].conj())),
                      2.0 * np.max(np.abs(out[:, [0, 4, 8]].imag)))
    final_check = is_physical(out[-1].reshape(3, 3), tol=1e-8)
    if trace_defect > 1e-9 or herm_defect > 1e-9 or not final_check:
        raise IntegrationError(
            f"propagation left the physical manifold (trace defect {trace_defect:.2e}, "
            f"Hermiticity defect {herm_defect:.2e}, min eigenvalue "
            f"{final_check.min_eigenvalue:.2e}); try a smaller dt than {dt:.3e}")

    return PopulationTrace(
        times=times,
        rho_gg=out[:, 0].real,
        rho_ee=out[:, 4].real,
        rho_tt=out[:, 8].real,
        coh_ge=out[:, 1],
        coh_et=out[:, 5],
        coh_gt=out[:, 2],
        max_trace_defect=float(trace_defect),
        max_hermiticity_defect=float(herm_defect),
    )


def steady_state(params: AtomParams) -> np.ndarray:
    """Null-space steady state of the constant-drive generator.

    Solves L vec(rho) = 0 subject to Tr rho = 1 through a bordered
    least-squares system.  Only defined on resonance: with the explicit
    detuning phases the generator is time-periodic rather than constant,
    so delta != 0 is rejected.
    """
    if params.delta != 0.0:
        raise ValidationError(
            "steady_state requires delta == 0: with the explicit drive phases "
            "the off-resonant generator is time-periodic, not constant")
    mat = build_generator(params, constant_drive(params)).mat

    svals = np.linalg.svd(mat, compute_uv=False)
    scale = max(svals[0], 1.0)
    null_dim = int(np.sum(svals < 1e-10 * scale))
    if null_dim > 1:
        raise DegenerateSteadyStateError(
            f"generator null space has dimension {null_dim}; "
            "the steady state is not unique for these parameters")

    bordered = np.vstack([mat, TRACE_ROW])
    rhs = np.zeros(10, dtype=complex)
    rhs[9] = 1.0
    vec, *_ = np.linalg.lstsq(bordered, rhs, rcond=None)
    residual = float(np.max(np.abs(mat @ vec)))
    if residual > 1e-9:
        raise DegenerateSteadyStateError(
            f"bordered solve residual {residual:.2e}; no consistent steady state")
    rho = vec.reshape(3, 3)
    rho = 0.5 * (rho + rho.conj().T)
    check = is_physical(rho, tol=1e-9)
    if not check:
        raise DegenerateSteadyStateError(
            "steady-state solve produced an unphysical matrix: "
            + "; ".join(check.failures))
    return rho
