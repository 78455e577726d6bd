"""Acceptance suite: one test per documented criterion, each printing a
PASS/FAIL line with the measured numbers.

Criteria 4b and 5b compare the exact numerical spectra against the
closed-form doublet at tolerances the closed form cannot meet (it keeps
only the Lorentzian parts of the exact transform); they are implemented
as stated and fail honestly.  See README, section "Numerical notes".
"""

import time

import numpy as np
import pytest

import pumpspec as ps


def line(num, ok, detail):
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {num}: {status} - {detail}")


@pytest.fixture(scope="module")
def analytic_ref(grid40):
    return ps.analytic_spectrum(ps.AtomParams(rabi=5.0, gamma_e=1.0, gamma_t=0.0),
                                grid40)


@pytest.fixture(scope="module")
def qrt_limit(reference_params, grid40):
    return ps.gamma_t_limit_spectrum(reference_params, grid40, (0.1, 0.01, 1e-3))


@pytest.fixture(scope="module")
def trajectory_ref(reference_params, grid40):
    return ps.single_photon_spectrum(reference_params, ps.constant_drive(reference_params),
                                     40.0, grid40, dt=1e-3)


def test_criterion_1_physicality_under_random_parameters(ground_rho):
    rng = np.random.default_rng(20260810)
    worst_trace = worst_herm = 0.0
    worst_eig = np.inf
    for _ in range(50):
        p = ps.AtomParams(rabi=rng.uniform(0.0, 10.0),
                          gamma_e=rng.uniform(0.0, 3.0),
                          gamma_t=rng.uniform(0.0, 3.0),
                          delta=rng.uniform(-3.0, 3.0))
        tr = ps.propagate(ground_rho, p, ps.constant_drive(p), t_end=40.0)
        worst_trace = max(worst_trace, tr.max_trace_defect)
        worst_herm = max(worst_herm, tr.max_hermiticity_defect)
        eigs = np.linalg.eigvalsh(tr.density_matrices())
        worst_eig = min(worst_eig, float(eigs[:, 0].min()))
    ok = worst_trace < 1e-9 and worst_herm < 1e-9 and worst_eig >= -1e-8
    line(1, ok, f"50 random sets to t=40: max trace defect {worst_trace:.2e}, "
                f"max Hermiticity defect {worst_herm:.2e}, min eigenvalue {worst_eig:.2e}")
    assert worst_trace < 1e-9
    assert worst_herm < 1e-9
    assert worst_eig >= -1e-8


def test_criterion_2_complete_population_transfer(reference_params, ground_rho):
    start = time.perf_counter()
    tr = ps.propagate(ground_rho, reference_params, ps.constant_drive(reference_params),
                      t_end=40.0, dt=1e-3)
    elapsed = time.perf_counter() - start
    final = tr.rho_tt[-1]
    monotone = float(np.min(np.diff(tr.rho_tt)))
    ok = final > 0.999 and monotone >= -1e-10 and elapsed < 1.0
    line(2, ok, f"rho_tt(40) = {final:.6f}, min step change {monotone:.1e}, "
                f"runtime {elapsed:.2f} s")
    assert final > 0.999
    assert monotone >= -1e-10
    assert elapsed < 1.0


def test_criterion_3_cycling_steady_state(ground_rho):
    p = ps.AtomParams(rabi=5.0, gamma_e=1.0, gamma_t=2.0)
    drive = ps.constant_drive(p)
    tr = ps.propagate(ground_rho, p, drive, t_end=40.0, dt=1e-3)
    final = tr.final_matrix()
    rate = ps.build_generator(p, drive).apply(final)
    pop_rate = float(np.max(np.abs(np.diag(rate)).real))
    ss = ps.steady_state(p)
    elementwise = float(np.max(np.abs(ss - final)))
    flux = abs(p.gamma_e * ss[1, 1].real - p.gamma_t * ss[2, 2].real)
    ok = pop_rate < 1e-6 and elementwise < 1e-7 and flux < 1e-9
    line(3, ok, f"|d rho_ii/dt|(40) = {pop_rate:.2e}, "
                f"null-space vs propagated {elementwise:.2e}, flux balance {flux:.2e}")
    assert pop_rate < 1e-6
    assert elementwise < 1e-7
    assert flux < 1e-9


def test_criterion_4a_doublet_peak_positions(analytic_ref, grid40):
    half = ps.omega_eff(ps.AtomParams(rabi=5.0, gamma_e=1.0)) / 2
    w = grid40.omegas
    snap_pos = w[np.argmax(np.where(w > 0, analytic_ref.abs2, -np.inf))]
    snap_neg = w[np.argmax(np.where(w < 0, analytic_ref.abs2, -np.inf))]
    err = max(abs(snap_pos - half), abs(snap_neg + half))
    ok = err <= grid40.spacing and abs(half - 2.4875) < 1e-3
    line("4a", ok, f"closed-form maxima at {snap_neg:+.4f}/{snap_pos:+.4f} vs "
                   f"+-{half:.4f}, offset {err:.4f} <= spacing {grid40.spacing:.4f}")
    assert abs(half - 2.4875) < 1e-3
    assert err <= grid40.spacing


def test_criterion_4b_qrt_matches_closed_form_shape(qrt_limit, analytic_ref):
    spec, report = qrt_limit
    diffs_shrink = all(b < a for a, b in zip(report.linf_diffs, report.linf_diffs[1:]))
    linf = float(np.max(np.abs(spec.abs2 - analytic_ref.normalized().abs2)))
    ok = diffs_shrink and linf < 0.02
    line("4b", ok, f"gamma_t->0 extrapolation diffs {report.linf_diffs} shrink: "
                   f"{diffs_shrink}; L_inf vs closed form {linf:.4f} (bound 0.02)")
    assert diffs_shrink
    # The exact transform of the regression correlation differs from the
    # closed-form doublet by ~8% at the inner shoulders (the closed form
    # drops the dispersive numerator terms); the trajectory method agrees
    # with the regression result to ~0.1%, isolating the discrepancy in
    # the closed form.  Asserted as documented; expected to fail.
    assert linf < 0.02, (
        f"normalized regression spectrum deviates from the closed-form doublet "
        f"by L_inf = {linf:.4f} > 0.02; the closed form keeps only the "
        f"Lorentzian parts of the exact transform (see README, Numerical notes)")


def test_criterion_5a_cross_method_peak_positions(trajectory_ref, analytic_ref, grid40):
    w = grid40.omegas

    def snaps(spec):
        return (w[np.argmax(np.where(w < 0, spec.abs2, -np.inf))],
                w[np.argmax(np.where(w > 0, spec.abs2, -np.inf))])

    t_lo, t_hi = snaps(trajectory_ref)
    a_lo, a_hi = snaps(analytic_ref)
    err = max(abs(t_lo - a_lo), abs(t_hi - a_hi))
    ok = err <= grid40.spacing
    line("5a", ok, f"trajectory peaks {t_lo:+.4f}/{t_hi:+.4f} vs closed form "
                   f"{a_lo:+.4f}/{a_hi:+.4f} (within one spacing: {ok})")
    assert err <= grid40.spacing


def test_criterion_5b_cross_method_shape_agreement(trajectory_ref, analytic_ref):
    linf = float(np.max(np.abs(trajectory_ref.normalized().abs2
                               - analytic_ref.normalized().abs2)))
    ok = linf < 0.05
    line("5b", ok, f"trajectory vs closed form, L_inf of normalized |S|^2 = "
                   f"{linf:.4f} (bound 0.05)")
    # Same structural cause as 4b: the two exact numerical methods agree to
    # ~0.1% but both deviate ~8% from the closed-form doublet at the inner
    # shoulders.  Asserted as documented; expected to fail.
    assert linf < 0.05, (
        f"normalized trajectory spectrum deviates from the closed-form doublet "
        f"by L_inf = {linf:.4f} > 0.05 (see README, Numerical notes)")


def test_criterion_6_zero_frequency_suppression(trajectory_ref):
    bw = ps.band_weight(trajectory_ref, 0.5)
    frozen = 2.296e-3   # converged constant-drive run, Omega=5, Gamma_e=1, tau=40
    ok = bw < 0.05 and abs(bw - frozen) / frozen < 0.05
    line(6, ok, f"band_weight(|omega|<0.5) = {bw:.3e} (bound 0.05, frozen {frozen:.3e})")
    assert bw < 0.05
    assert abs(bw - frozen) / frozen < 0.05


def test_criterion_7_rise_time_ordering(reference_params, grid40):
    weights = []
    for rise in (0.2, 1.0, 5.0):
        drive = ps.ExpRampDrive(omega_max=5.0, rise_time=rise)
        spec = ps.transient_spectrum(reference_params, drive, 40.0, grid40, dt=1e-3)
        weights.append(ps.band_weight(spec, 0.5))
    ok = weights[0] < weights[1] < weights[2]
    line(7, ok, "band_weight(0.5) over rise_time (0.2, 1, 5): "
                + ", ".join(f"{w:.4f}" for w in weights)
                + f" strictly increasing: {ok}")
    assert weights[0] < weights[1] < weights[2]


def test_criterion_8_detuning_splitting(grid40):
    seps = []
    targets = []
    for delta in (0.0, 1.0, 2.0):
        p = ps.AtomParams(rabi=5.0, gamma_e=1.0, delta=delta)
        spec = ps.transient_spectrum(p, ps.ConstantDrive(5.0), 40.0, grid40, dt=1e-3)
        seps.append(ps.peak_separation(grid40, spec.abs2))
        targets.append(ps.generalized_rabi(p))
    rel = [abs(s - t) / t for s, t in zip(seps, targets)]
    increasing = seps[0] < seps[1] < seps[2]
    ok = all(r < 0.05 for r in rel) and increasing
    line(8, ok, "separations " + ", ".join(f"{s:.4f}" for s in seps)
         + " vs sqrt(Omega^2+delta^2) " + ", ".join(f"{t:.4f}" for t in targets)
         + f"; max rel err {max(rel):.3%}, increasing: {increasing}")
    assert all(r < 0.05 for r in rel)
    assert increasing


def test_criterion_9_photon_bookkeeping():
    cases = [
        (ps.AtomParams(rabi=5.0, gamma_e=1.0), ps.ConstantDrive(5.0)),
        (ps.AtomParams(rabi=5.0, gamma_e=1.0), ps.ExpRampDrive(5.0, 1.0)),
        (ps.AtomParams(rabi=5.0, gamma_e=1.0, delta=2.0), ps.ConstantDrive(5.0)),
        (ps.AtomParams(rabi=8.0, gamma_e=2.5), ps.ConstantDrive(8.0)),
    ]
    worst = 0.0
    for p, drive in cases:
        traj = ps.propagate_no_jump([1, 0, 0], p, drive, 40.0, dt=1e-3)
        total = traj.norm2() + p.gamma_e * traj.emission_integral()
        worst = max(worst, float(np.max(np.abs(total - 1.0))))
    ok = worst < 1e-6
    line(9, ok, f"norm^2 + Gamma_e int |psi_e|^2 stays 1 within {worst:.2e} "
                f"over {len(cases)} drive/detuning cases")
    assert worst < 1e-6


def test_criterion_10_integrator_order(ground_rho):
    ratios = []
    for gamma_t in (0.0, 2.0):
        p = ps.AtomParams(rabi=5.0, gamma_e=1.0, gamma_t=gamma_t)
        drive = ps.constant_drive(p)
        runs = {dt: ps.propagate(ground_rho, p, drive, t_end=40.0, dt=dt)
                for dt in (0.02, 0.01, 0.005)}

        def pops(tr, stride):
            return np.stack([tr.rho_gg[::stride], tr.rho_ee[::stride],
                             tr.rho_tt[::stride]])

        d1 = np.max(np.abs(pops(runs[0.02], 1) - pops(runs[0.01], 2)))
        d2 = np.max(np.abs(pops(runs[0.01], 2) - pops(runs[0.005], 4)))
        ratios.append(d1 / d2)
    ok = all(r >= 12.0 for r in ratios)
    line(10, ok, "error shrink factors dt->dt/2: "
         + ", ".join(f"{r:.1f}" for r in ratios) + " (need >= 12)")
    assert all(r >= 12.0 for r in ratios)
