"""Emission spectrum on the e -> t line from two-time correlations.

The steady-state correlation K(tau) = <sigma_+^{et}(t+tau) sigma_-^{et}(t)>
obeys the same closed pair of equations as the one-time (tg, te)
coherences, so it is propagated with exactly that 2x2 restriction of the
master-equation generator, starting from the regression vector
(rho_eg^ss, rho_ee^ss).  The spectrum is the two-sided Fourier transform,
with the negative-lag branch supplied by stationarity K(-tau) = K(tau)*.

A genuine steady state needs gamma_t > 0; the gamma_t -> 0 doublet is
obtained by running a decreasing sequence of fictitious gamma_t values and
checking that the normalized spectra converge.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .core import (AtomParams, FrequencyGrid, SpectrumResult, TruncationError,
                   ValidationError, constant_drive, omega_eff)
from .lindblad import build_generator, steady_state

# vec(rho) indices of the closed coherence pair driving the correlation
_TG, _TE = 6, 7


@dataclass(frozen=True)
class CorrelationTrace:
    """Samples of K(tau) on a uniform lag grid starting at tau = 0."""

    taus: np.ndarray
    k_values: np.ndarray


def _regression_block(params: AtomParams) -> np.ndarray:
    mat = build_generator(params, constant_drive(params)).mat
    block = mat[np.ix_([_TG, _TE], [_TG, _TE])]
    rest = [i for i in range(9) if i not in (_TG, _TE)]
    leak = float(np.max(np.abs(mat[np.ix_([_TG, _TE], rest)])))
    if leak > 1e-12:
        raise ValidationError(
            f"(tg, te) coherence pair does not close on itself (leak {leak:.2e})")
    return block


def qrt_correlation(params: AtomParams, tau_max: float | None = None,
                    dt: float = 1e-3) -> CorrelationTrace:
    """Regression-theorem correlation K(tau) on [0, tau_max].

    gamma_t must be strictly positive so that the cycling steady state
    exists; for the gamma_t -> 0 doublet use gamma_t_limit_spectrum.  The
    default tau_max is sized so the decay envelope exp(-(Gamma_e/4 +
    Gamma_t/2) tau) falls below 3e-7, enough for an untruncated transform.
    """
    if params.gamma_t <= 0.0:
        raise ValidationError(
            "qrt_correlation needs gamma_t > 0 (no nontrivial steady state "
            "otherwise); take the gamma_t -> 0 limit via gamma_t_limit_spectrum")
    if params.delta != 0.0:
        raise ValidationError("qrt_correlation is defined on resonance (delta == 0)")
    envelope_rate = params.gamma_e / 4.0 + params.gamma_t / 2.0
    if tau_max is None:
        tau_max = 15.0 / envelope_rate
    n = max(1, int(round(tau_max / dt)))
    dt = tau_max / n

    block = _regression_block(params)
    rho_ss = steady_state(params)
    v = np.array([rho_ss[1, 0], rho_ss[1, 1]], dtype=complex)

    # constant generator: the RK4 step collapses to its one-step matrix
    a = block * dt
    phi = np.eye(2, dtype=complex) + a + a @ a / 2 + a @ a @ a / 6 + a @ a @ a @ a / 24
    k_values = np.empty(n + 1, dtype=complex)
    k_values[0] = v[1]
    for i in range(n):
        v = phi @ v
        k_values[i + 1] = v[1]
    return CorrelationTrace(taus=np.arange(n + 1) * dt, k_values=k_values)


def spectrum_from_correlation(corr: CorrelationTrace,
                              grid: FrequencyGrid) -> SpectrumResult:
    """Two-sided transform S(omega) = int K(tau) e^{-i omega tau} dtau.

    Only tau >= 0 is integrated; stationarity supplies the negative branch
    as the conjugate, so each sample is F(omega) + F(omega)* with F the
    trapezoidal one-sided transform.  The trace must have decayed at its
    end or truncation would ring through the spectrum.
    """
    taus = np.asarray(corr.taus, dtype=float)
    k = np.asarray(corr.k_values, dtype=complex)
    if taus.ndim != 1 or taus.size < 2 or taus.size != k.size:
        raise ValidationError("correlation trace must hold matching tau/K samples")
    k0 = abs(k[0])
    if abs(k[-1]) > 1e-6 * k0:
        raise TruncationError(
            f"insufficient decay at tau_max: |K(end)| = {abs(k[-1]):.3e} "
            f"exceeds 1e-6 * |K(0)| = {1e-6 * k0:.3e}; extend tau_max")
    s = np.empty(len(grid), dtype=complex)
    for i, w in enumerate(grid.omegas):
        f = np.trapezoid(k * np.exp(-1j * w * taus), taus)
        s[i] = f + np.conj(f)
    return SpectrumResult(grid, s)


def lorentzian_halfwidth(params: AtomParams) -> float:
    """Half-width at half-maximum of each doublet Lorentzian factor."""
    return params.gamma_e / 4.0 + params.gamma_t / 2.0


def doublet_components(params: AtomParams, omegas) -> tuple[np.ndarray, np.ndarray]:
    """The two closed-form doublet terms (red- and blue-shifted branches).

    Both carry the common prefactor rho_tt^ss / (pi * Omega_eff); in the
    gamma_t -> 0 limit rho_tt^ss = 1 (all population ends in the trap
    state).  Their sum is the closed-form spectrum.
    """
    w = np.asarray(omegas, dtype=float)
    oeff = omega_eff(params)
    hw = lorentzian_halfwidth(params)
    rho_tt_ss = 1.0 if params.gamma_t == 0.0 else float(steady_state(params)[2, 2].real)
    pref = rho_tt_ss / (np.pi * oeff)
    lo = pref * (1j * params.gamma_e / 4 + oeff / 2) * hw / (hw**2 + (w + oeff / 2) ** 2)
    hi = pref * (-1j * params.gamma_e / 4 + oeff / 2) * hw / (hw**2 + (w - oeff / 2) ** 2)
    return lo, hi


def analytic_spectrum(params: AtomParams, grid: FrequencyGrid) -> SpectrumResult:
    """Closed-form AC-Stark-split doublet evaluated on the grid.

    Requires the strong-drive regime Omega^2 > Gamma_e^2/4.  Note this
    closed form keeps only the Lorentzian (absorptive) parts of the exact
    transform; see the README for the measured consequences.
    """
    lo, hi = doublet_components(params, grid.omegas)
    return SpectrumResult(grid, lo + hi)


@dataclass(frozen=True)
class GammaTLimitReport:
    """Convergence record of the gamma_t -> 0 limiting procedure."""

    gamma_ts: tuple[float, ...]
    linf_diffs: tuple[float, ...]
    tolerance: float
    converged: bool | None   # None: single-element sequence, not assessed

    def summary(self) -> str:
        if self.converged is None:
            return "convergence not assessed (single gamma_t)"
        status = "converged" if self.converged else "NOT converged"
        diffs = ", ".join(f"{d:.3e}" for d in self.linf_diffs)
        return f"{status} at tolerance {self.tolerance:g}; successive L_inf diffs: {diffs}"


def gamma_t_limit_spectrum(params_base: AtomParams, grid: FrequencyGrid,
                           gamma_t_sequence, dt: float = 1e-3,
                           tolerance: float = 1e-3
                           ) -> tuple[SpectrumResult, GammaTLimitReport]:
    """Regression spectrum along a decreasing sequence of fictitious gamma_t.

    Each spectrum is normalized to unit peak of |S|^2 and compared with its
    predecessor in L_inf.  Returns the last (normalized) spectrum plus the
    difference trace; non-convergence is reported, not raised, since the
    trace itself is the diagnostic.
    """
    gts = tuple(float(g) for g in gamma_t_sequence)
    if not gts:
        raise ValidationError("gamma_t_sequence must be non-empty")
    if any(g <= 0 for g in gts):
        raise ValidationError("gamma_t_sequence values must all be > 0")
    if any(b >= a for a, b in zip(gts, gts[1:])):
        raise ValidationError("gamma_t_sequence must be strictly decreasing")

    diffs = []
    prev = None
    spec = None
    for g in gts:
        p = replace(params_base, gamma_t=g)
        corr = qrt_correlation(p, dt=dt)
        spec = spectrum_from_correlation(corr, grid).normalized()
        if prev is not None:
            diffs.append(float(np.max(np.abs(spec.abs2 - prev))))
        prev = spec.abs2
    converged = None if len(gts) == 1 else bool(diffs[-1] < tolerance)
    report = GammaTLimitReport(gamma_ts=gts, linf_diffs=tuple(diffs),
                               tolerance=tolerance, converged=converged)
    return spec, report
