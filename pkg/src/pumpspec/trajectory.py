"""Single-photon emission spectrum from conditional (trajectory) dynamics.

The zero-photon branch evolves under the non-Hermitian Hamiltonian
H_eff = H(t) - i (Gamma_e/2) |e><e|, losing norm at exactly the photon
emission rate.  Each one-photon amplitude, labelled by the photon
frequency omega_j of a symmetric Fourier comb, is driven by the no-jump
e-amplitude through the source term sqrt(Gamma_e/tau) sigma_-^{et} |psi>
and accumulates only a trap-state component.  The spectrum is the set of
final norms <psi_omega(tau)|psi_omega(tau)>.

Everything here is deterministic: the conditional amplitudes obey closed
ODEs, so no Monte Carlo jump sampling (and no RNG) is involved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _rk4
from .core import (AtomParams, ConvergenceError, DomainError, DriveProfile,
                   FrequencyGrid, GridMismatchError, IntegrationError,
                   SpectrumResult, ValidationError, omega_eff)
from .lindblad import _step_count, default_dt


def _h_ge(params: AtomParams, drive: DriveProfile, t):
    # upper-triangle matrix element <g|H(t)|e> = (Omega(t)/2) e^{-i delta t}
    omega = drive.value(t)
    if params.delta == 0.0:
        return 0.5 * omega + 0.0j
    return 0.5 * omega * np.exp(-1j * params.delta * np.asarray(t, dtype=float))


@dataclass(frozen=True)
class NoJumpTrajectory:
    """Zero-photon conditional state stored at every step."""

    times: np.ndarray
    psi: np.ndarray          # (n+1, 3) complex amplitudes

    def norm2(self) -> np.ndarray:
        return np.sum(np.abs(self.psi) ** 2, axis=1)

    def emission_integral(self) -> np.ndarray:
        """Trapezoidal cumulative integral of |psi_e|^2 (emission flux / Gamma_e)."""
        pe = np.abs(self.psi[:, 1]) ** 2
        dt = np.diff(self.times)
        inc = 0.5 * (pe[1:] + pe[:-1]) * dt
        return np.concatenate([[0.0], np.cumsum(inc)])


def propagate_no_jump(psi0, params: AtomParams, drive: DriveProfile,
                      t_end: float, dt: float | None = None) -> NoJumpTrajectory:
    """RK4 integration of the no-jump equation, sampling every step.

    psi0 must be normalized.  The squared norm can only decrease (it is
    the no-emission probability); an increase beyond 1e-8 signals a
    misconfigured integrator and aborts.
    """
    psi0 = np.asarray(psi0, dtype=complex).reshape(3)
    if abs(float(np.vdot(psi0, psi0).real) - 1.0) > 1e-8:
        raise ValidationError("psi0 must be normalized")
    if dt is None:
        dt = default_dt(params, drive)
    n, dt = _step_count(t_end, dt)
    t_half = np.arange(2 * n + 1) * (dt / 2.0)
    h = np.ascontiguousarray(_h_ge(params, drive, t_half), dtype=complex)
    out = _rk4.nojump_rk4(h, params.gamma_e, dt, psi0)
    norm2 = np.sum(np.abs(out) ** 2, axis=1)
    rise = float(np.max(np.diff(norm2), initial=0.0))
    if rise > 1e-8:
        raise IntegrationError(
            f"no-jump norm increased by {rise:.2e} in one step; "
            f"the integrator is misconfigured (dt = {dt:.3e})")
    return NoJumpTrajectory(times=np.arange(n + 1) * dt, psi=out)


@dataclass(frozen=True)
class PhotonTrajectorySet:
    """One-photon amplitudes for every comb frequency.

    samples holds the full 3-component amplitude vectors at the stored
    times, shape (n_stored, 3, M); the g and e components stay identically
    zero (the source feeds only the trap level and nothing couples back),
    which ge_leakage makes checkable.  final_norms are the end-of-interval
    squared norms, i.e. the unnormalized spectrum.
    """

    grid: FrequencyGrid
    times: np.ndarray
    samples: np.ndarray
    final_norms: np.ndarray

    @property
    def f_values(self) -> np.ndarray:
        """Trap-level amplitudes f_omega(t), shape (n_stored, M)."""
        return self.samples[:, 2, :]

    @property
    def ge_leakage(self) -> float:
        """Largest spurious amplitude outside the trap level (exactly 0)."""
        return float(np.max(np.abs(self.samples[:, :2, :]), initial=0.0))


def photon_trajectories(params: AtomParams, drive: DriveProfile, tau: float,
                        grid: FrequencyGrid, dt: float | None = None,
                        store_every: int | None = None) -> PhotonTrajectorySet:
    """Co-integrate the no-jump state with all per-frequency amplitudes.

    The atom starts in |g>; grid.tau must equal the observation interval
    tau for the comb spacing 2*pi/tau to be the Fourier-sampling step.
    """
    if not math.isclose(grid.tau, tau, rel_tol=1e-12, abs_tol=0.0):
        raise GridMismatchError(
            f"grid.tau = {grid.tau} does not match the observation interval tau = {tau}")
    if dt is None:
        dt = default_dt(params, drive)
    n, dt = _step_count(tau, dt)
    if store_every is None:
        store_every = max(1, n // 2000)
    t_half = np.arange(2 * n + 1) * (dt / 2.0)
    h = np.ascontiguousarray(_h_ge(params, drive, t_half), dtype=complex)
    src = math.sqrt(params.gamma_e / tau)
    psi_out, f_store, _ = _rk4.photon_rk4(h, params.gamma_e, grid.omegas, src,
                                          dt, store_every)
    norm2 = np.sum(np.abs(psi_out) ** 2, axis=1)
    rise = float(np.max(np.diff(norm2), initial=0.0))
    if rise > 1e-8:
        raise IntegrationError(
            f"no-jump norm increased by {rise:.2e} in one step (dt = {dt:.3e})")
    stored_steps = [k for k in range(0, n + 1, store_every)]
    if stored_steps[-1] != n:
        stored_steps.append(n)
    times = np.asarray(stored_steps, dtype=float) * dt
    final_norms = np.sum(np.abs(f_store[-1]) ** 2, axis=0)
    return PhotonTrajectorySet(grid=grid, times=times, samples=f_store,
                               final_norms=final_norms)


def single_photon_spectrum(params: AtomParams, drive: DriveProfile, tau: float,
                           grid: FrequencyGrid, dt: float | None = None,
                           check_dt: bool = True) -> SpectrumResult:
    """Emission spectrum S(omega_j) = <psi_omega(tau)|psi_omega(tau)>.

    The returned samples are peak-normalized (the overall scale carries an
    arbitrary normalization constant; shapes are the comparable content).
    With check_dt the run is repeated at dt/2 and the normalized |S|^2
    curves must agree within 1e-4 in L_inf, otherwise ConvergenceError is
    raised; the finer run is the one returned.
    """
    if dt is None:
        dt = default_dt(params, drive)
    traj = photon_trajectories(params, drive, tau, grid, dt=dt, store_every=10**9)
    coarse = _normalized_spectrum(grid, traj.final_norms)
    if not check_dt:
        return coarse
    traj_fine = photon_trajectories(params, drive, tau, grid, dt=dt / 2.0,
                                    store_every=10**9)
    fine = _normalized_spectrum(grid, traj_fine.final_norms)
    gap = float(np.max(np.abs(fine.abs2 - coarse.abs2)))
    if gap > 1e-4:
        raise ConvergenceError(
            f"step-halving disagreement {gap:.2e} > 1e-4 at dt = {dt:.3e}; "
            "reduce dt")
    return fine


def _normalized_spectrum(grid: FrequencyGrid, final_norms: np.ndarray) -> SpectrumResult:
    peak = float(np.max(final_norms))
    s = final_norms.astype(complex)
    if peak > 0.0:
        s = s / peak
    return SpectrumResult(grid, s)


def transient_spectrum(params: AtomParams, drive: DriveProfile, tau: float,
                       grid: FrequencyGrid, dt: float | None = None,
                       check_dt: bool = True) -> SpectrumResult:
    """Spectrum under a time-dependent drive envelope and/or finite detuning.

    Identical machinery to single_photon_spectrum; the drive may be a ramp
    and params.delta may be nonzero (the drive phases e^{+-i delta t} are
    applied explicitly).
    """
    return single_photon_spectrum(params, drive, tau, grid, dt=dt, check_dt=check_dt)


def analytic_f(params: AtomParams, omega_j, t):
    """Closed-form one-photon amplitude shape for a constant resonant drive.

    Valid for delta = 0 and Omega^2 > Gamma_e^2/4.  The overall scale
    (source strength times normalization) is left out; compare shapes
    after a single fitted constant per parameter set.  Broadcasts over
    omega_j and t.
    """
    if params.delta != 0.0:
        raise DomainError("analytic_f is the resonant closed form (delta == 0)")
    oeff = omega_eff(params)
    w = np.asarray(omega_j, dtype=float)
    tt = np.asarray(t, dtype=float)
    a = 1j * w - params.gamma_e / 4.0
    env = np.exp(-params.gamma_e * tt / 4.0)
    m = (np.sin(oeff * tt / 2.0) * env * a
         - (oeff / 2.0) * np.cos(oeff * tt / 2.0) * env
         + (oeff / 2.0) * np.exp(-1j * w * tt))
    return m / (a**2 + oeff**2 / 4.0)


def band_weight(spec: SpectrumResult, half_width: float) -> float:
    """Fraction of the summed |S|^2 within |omega| < half_width."""
    if half_width <= 0:
        raise ValidationError(f"half_width must be > 0, got {half_width}")
    total = float(np.sum(spec.abs2))
    if total == 0.0:
        return 0.0
    inside = float(np.sum(spec.abs2[np.abs(spec.grid.omegas) < half_width]))
    return inside / total
