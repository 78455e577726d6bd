"""Shared domain types for the three-level pumping simulator.

Level convention: the basis order is fixed as (g, e, t) = (0, 1, 2)
everywhere -- ground, excited, trap.  The laser couples g <-> e with Rabi
frequency Omega, spontaneous emission goes e -> t at rate Gamma_e and
t -> g at rate Gamma_t.  All rates and frequencies are dimensionless, in
units of a reference rate (the documented default sets Gamma_e = 1).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np


class PumpspecError(Exception):
    """Base class for errors raised by this package."""


class ValidationError(PumpspecError):
    """A parameter or configuration value violates its contract."""


class DomainError(PumpspecError):
    """Inputs outside the mathematical domain of a closed-form expression."""


class IntegrationError(PumpspecError):
    """A fixed-step integration produced an unphysical state."""


class ConvergenceError(PumpspecError):
    """A step-halving or limit check did not meet its tolerance."""


class TruncationError(PumpspecError):
    """A correlation trace is too short for its transform to be trusted."""


class GridMismatchError(PumpspecError):
    """A frequency grid is inconsistent with the observation interval."""


class DegenerateSteadyStateError(PumpspecError):
    """The generator's null space has dimension > 1."""


class LevelIndex(enum.IntEnum):
    """The three internal states, in fixed basis order."""

    G = 0
    E = 1
    T = 2


def ketbra(i: int, j: int) -> np.ndarray:
    """Return the 3x3 operator |i><j| in the fixed basis."""
    m = np.zeros((3, 3), dtype=complex)
    m[i, j] = 1.0
    return m


@dataclass(frozen=True)
class AtomParams:
    """Atomic parameters in units of the reference rate.

    rabi is the peak Rabi frequency Omega of the g-e drive, gamma_e the
    e -> t emission rate, gamma_t the t -> g recycling rate, delta the
    laser detuning (any sign).
    """

    rabi: float = 5.0
    gamma_e: float = 1.0
    gamma_t: float = 0.0
    delta: float = 0.0

    def __post_init__(self):
        for name in ("rabi", "gamma_e", "gamma_t"):
            v = getattr(self, name)
            if not np.isfinite(v) or v < 0:
                raise ValidationError(f"{name} must be finite and >= 0, got {v}")
        if not np.isfinite(self.delta):
            raise ValidationError(f"delta must be finite, got {self.delta}")


def omega_eff(params: AtomParams) -> float:
    """Effective Rabi frequency sqrt(Omega^2 - Gamma_e^2/4).

    Defined only in the strong-drive regime Omega^2 > Gamma_e^2/4; this is
    the damped oscillation frequency that sets the doublet splitting.
    """
    disc = params.rabi**2 - params.gamma_e**2 / 4.0
    if disc <= 0.0:
        raise DomainError(
            "overdamped regime: Omega^2 <= Gamma_e^2/4, "
            "doublet peak structure undefined"
        )
    return float(np.sqrt(disc))


def generalized_rabi(params: AtomParams) -> float:
    """Generalized Rabi frequency sqrt(Omega^2 + delta^2)."""
    return float(np.hypot(params.rabi, params.delta))


@dataclass(frozen=True)
class ConstantDrive:
    """Constant Rabi envelope Omega(t) = omega0."""

    omega0: float

    def __post_init__(self):
        if not np.isfinite(self.omega0) or self.omega0 < 0:
            raise ValidationError(f"omega0 must be finite and >= 0, got {self.omega0}")

    @property
    def peak(self) -> float:
        return self.omega0

    def value(self, t):
        return self.omega0 * np.ones_like(np.asarray(t, dtype=float))


@dataclass(frozen=True)
class ExpRampDrive:
    """Saturating ramp Omega(t) = omega_max*(1 - exp(-(t-t_start)/rise_time)).

    Zero before t_start; approaches omega_max monotonically with a single
    time-scale knob, modelling a field whose intensity rises as the atom
    enters the beam.
    """

    omega_max: float
    rise_time: float
    t_start: float = 0.0

    def __post_init__(self):
        if not np.isfinite(self.omega_max) or self.omega_max < 0:
            raise ValidationError(f"omega_max must be >= 0, got {self.omega_max}")
        if not np.isfinite(self.rise_time) or self.rise_time <= 0:
            raise ValidationError(f"rise_time must be > 0, got {self.rise_time}")

    @property
    def peak(self) -> float:
        return self.omega_max

    def value(self, t):
        dt = np.maximum(np.asarray(t, dtype=float) - self.t_start, 0.0)
        return self.omega_max * (-np.expm1(-dt / self.rise_time))


DriveProfile = ConstantDrive | ExpRampDrive


def constant_drive(params: AtomParams) -> ConstantDrive:
    """Constant drive at the parameter set's Rabi frequency."""
    return ConstantDrive(params.rabi)


def dm_from_pure(psi) -> np.ndarray:
    """Density matrix |psi><psi| normalized to unit trace."""
    psi = np.asarray(psi, dtype=complex).reshape(3)
    n2 = float(np.vdot(psi, psi).real)
    if n2 <= 0.0:
        raise ValidationError("zero state vector has no associated density matrix")
    return np.outer(psi, psi.conj()) / n2


@dataclass(frozen=True)
class PhysicalityCheck:
    """Diagnostic result of the Hermiticity / trace / positivity checks."""

    trace_error: float
    hermiticity_error: float
    min_eigenvalue: float
    tol: float

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def failures(self) -> list[str]:
        out = []
        if self.hermiticity_error >= self.tol:
            out.append(f"Hermiticity violated by {self.hermiticity_error:.3e}")
        if self.trace_error >= self.tol:
            out.append(f"unit trace violated by {self.trace_error:.3e}")
        if self.min_eigenvalue <= -self.tol:
            out.append(f"positivity violated by {-self.min_eigenvalue:.3e}")
        return out

    def __bool__(self) -> bool:
        return self.ok


def is_physical(rho, tol: float = 1e-9) -> PhysicalityCheck:
    """Check a 3x3 matrix for Hermiticity, unit trace and positivity.

    Returns a truthy/falsy report listing which checks failed and by how
    much.  Positivity is assessed on the Hermitian part so that a large
    asymmetry is reported as a Hermiticity failure, not a spurious
    eigenvalue one.
    """
    if tol <= 0:
        raise ValidationError(f"tol must be > 0, got {tol}")
    rho = np.asarray(rho, dtype=complex).reshape(3, 3)
    herm = float(np.max(np.abs(rho - rho.conj().T)))
    tr = float(np.abs(np.trace(rho) - 1.0))
    lam = float(np.linalg.eigvalsh((rho + rho.conj().T) / 2.0)[0])
    return PhysicalityCheck(trace_error=tr, hermiticity_error=herm,
                            min_eigenvalue=lam, tol=tol)


@dataclass(frozen=True)
class FrequencyGrid:
    """Symmetric frequency comb omega_j = j*(2*pi/tau), j = -n_half..n_half.

    The spacing is the Fourier-sampling step of an observation interval of
    length tau, so grids built for an interval can be reused across the
    analytic, regression and trajectory spectra.
    """

    tau: float
    n_half: int

    def __post_init__(self):
        if not np.isfinite(self.tau) or self.tau <= 0:
            raise ValidationError(f"tau must be > 0, got {self.tau}")
        if int(self.n_half) != self.n_half or self.n_half < 1:
            raise ValidationError(f"n_half must be a positive integer, got {self.n_half}")

    @property
    def spacing(self) -> float:
        return 2.0 * np.pi / self.tau

    @cached_property
    def omegas(self) -> np.ndarray:
        return np.arange(-self.n_half, self.n_half + 1) * self.spacing

    def __len__(self) -> int:
        return 2 * self.n_half + 1


def default_grid(params: AtomParams, tau: float = 40.0) -> FrequencyGrid:
    """Grid over [-2*Omega_eff, 2*Omega_eff] at the sampling step of tau."""
    n_half = int(np.ceil(2.0 * omega_eff(params) / (2.0 * np.pi / tau)))
    return FrequencyGrid(tau=tau, n_half=max(n_half, 1))


@dataclass(frozen=True)
class SpectrumResult:
    """Spectrum samples on a frequency grid.

    s_values holds S(omega_j); abs2 holds |S(omega_j)|^2, the quantity the
    spectra are plotted and compared with.
    """

    grid: FrequencyGrid
    s_values: np.ndarray
    abs2: np.ndarray = field(init=False)

    def __post_init__(self):
        s = np.asarray(self.s_values, dtype=complex)
        if s.shape != (len(self.grid),):
            raise ValidationError(
                f"expected {len(self.grid)} spectrum samples, got {s.shape}")
        object.__setattr__(self, "s_values", s)
        object.__setattr__(self, "abs2", s.real**2 + s.imag**2)

    def normalized(self) -> "SpectrumResult":
        """Rescale so the peak of |S|^2 is 1 (zero spectra pass through)."""
        peak = float(np.max(self.abs2))
        if peak == 0.0:
            return self
        return SpectrumResult(self.grid, self.s_values / np.sqrt(peak))


def peak_pair(grid: FrequencyGrid, abs2) -> tuple[float, float]:
    """Locate the dominant peak on each side of omega = 0.

    The position is refined by a quadratic fit through the maximum sample
    and its two neighbours, so separations are not quantized to the grid
    spacing.
    """
    abs2 = np.asarray(abs2, dtype=float)
    w = grid.omegas

    def refine(mask):
        idx = np.flatnonzero(mask)
        k = idx[np.argmax(abs2[idx])]
        if k == 0 or k == len(w) - 1:
            return float(w[k])
        a, b, c = abs2[k - 1], abs2[k], abs2[k + 1]
        denom = a - 2.0 * b + c
        if denom >= 0.0:
            return float(w[k])
        return float(w[k] + 0.5 * grid.spacing * (a - c) / denom)

    return refine(w < 0), refine(w > 0)


def peak_separation(grid: FrequencyGrid, abs2) -> float:
    """Distance between the refined negative- and positive-side maxima."""
    lo, hi = peak_pair(grid, abs2)
    return hi - lo
