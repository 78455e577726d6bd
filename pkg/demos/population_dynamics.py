"""Population dynamics of the driven three-level atom.

An atom enters the laser field in the ground state |g>, is coherently
cycled to |e> at Rabi frequency Omega, and falls into the trap state |t>
by spontaneous emission at rate Gamma_e.  Two regimes:

* Gamma_t = 0: |t> is a dark state, so the population is pumped over
  completely -- the loading mechanism this package is built to study.
* Gamma_t = 2: |t> leaks back to |g> and the atom cycles indefinitely,
  settling into the steady state used to define the emission spectrum.

Run:  python demos/population_dynamics.py
Writes SVG + CSV into demos/output/.
"""

import os

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

import pumpspec as ps
from pumpspec.cli import write_populations_csv

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

rho0 = np.diag([1.0, 0.0, 0.0]).astype(complex)

fig, axes = plt.subplots(1, 2, figsize=(10, 4), sharey=True)
for ax, gamma_t in zip(axes, (2.0, 0.0)):
    p = ps.AtomParams(rabi=5.0, gamma_e=1.0, gamma_t=gamma_t)
    trace = ps.propagate(rho0, p, ps.constant_drive(p), t_end=12.0, dt=1e-3)
    ax.plot(trace.times, trace.rho_gg, "-", label=r"$\rho_{gg}$")
    ax.plot(trace.times, trace.rho_ee, "--", label=r"$\rho_{ee}$")
    ax.plot(trace.times, trace.rho_tt, "-.", label=r"$\rho_{tt}$")
    ax.set_xlabel(r"$t$")
    ax.set_title(rf"$\Gamma_t = {gamma_t:g}$")
    write_populations_csv(trace, os.path.join(OUT, f"populations_gt{gamma_t:g}.csv"))

    if gamma_t > 0:
        ss = ps.steady_state(p)
        print(f"Gamma_t = {gamma_t}: steady populations "
              f"(g, e, t) = ({ss[0,0].real:.4f}, {ss[1,1].real:.4f}, {ss[2,2].real:.4f}); "
              f"flux balance |Ge*rho_ee - Gt*rho_tt| = "
              f"{abs(p.gamma_e*ss[1,1].real - p.gamma_t*ss[2,2].real):.1e}")
    else:
        print(f"Gamma_t = {gamma_t}: rho_tt({trace.times[-1]:g}) = "
              f"{trace.rho_tt[-1]:.6f} -> complete transfer into the trap state")

axes[0].set_ylabel("population")
axes[0].legend()
fig.tight_layout()
fig.savefig(os.path.join(OUT, "population_dynamics.svg"))
print(f"wrote {OUT}/population_dynamics.svg")
