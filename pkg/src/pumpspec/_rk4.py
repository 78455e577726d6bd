"""Fixed-step RK4 kernels for the master-equation and trajectory solvers.

The drive enters every kernel through amplitude arrays sampled on the
half-step grid t_k = k*dt/2 (length 2*n_steps + 1), so the three RK4
substage times (t, t + dt/2, t + dt) of step n read entries 2n, 2n+1 and
2n+2.  This keeps the stepper 4th-order for time-dependent generators.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def _liouville_apply(L0, KP, KM, a, y):
    # generator at drive amplitude a: L0 + a*KP + conj(a)*KM
    return L0 @ y + a * (KP @ y) + np.conj(a) * (KM @ y)


@njit(cache=True)
def liouville_rk4(L0, KP, KM, ap_half, dt, y0):
    """Propagate vec(rho), returning every step (n_steps+1, 9)."""
    n = (ap_half.shape[0] - 1) // 2
    out = np.empty((n + 1, 9), dtype=np.complex128)
    y = y0.copy()
    out[0] = y
    for step in range(n):
        a0 = ap_half[2 * step]
        a1 = ap_half[2 * step + 1]
        a2 = ap_half[2 * step + 2]
        k1 = _liouville_apply(L0, KP, KM, a0, y)
        k2 = _liouville_apply(L0, KP, KM, a1, y + (0.5 * dt) * k1)
        k3 = _liouville_apply(L0, KP, KM, a1, y + (0.5 * dt) * k2)
        k4 = _liouville_apply(L0, KP, KM, a2, y + dt * k3)
        y = y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        out[step + 1] = y
    return out


@njit(cache=True)
def _nojump_rhs(h, gamma_e, psi):
    d = np.empty(3, dtype=np.complex128)
    d[0] = -1j * h * psi[1]
    d[1] = -1j * np.conj(h) * psi[0] - 0.5 * gamma_e * psi[1]
    d[2] = 0.0
    return d


@njit(cache=True)
def nojump_rk4(h_half, gamma_e, dt, psi0):
    """No-photon conditional evolution, returning every step (n_steps+1, 3)."""
    n = (h_half.shape[0] - 1) // 2
    out = np.empty((n + 1, 3), dtype=np.complex128)
    psi = psi0.copy()
    out[0] = psi
    for step in range(n):
        h0 = h_half[2 * step]
        h1 = h_half[2 * step + 1]
        h2 = h_half[2 * step + 2]
        k1 = _nojump_rhs(h0, gamma_e, psi)
        k2 = _nojump_rhs(h1, gamma_e, psi + (0.5 * dt) * k1)
        k3 = _nojump_rhs(h1, gamma_e, psi + (0.5 * dt) * k2)
        k4 = _nojump_rhs(h2, gamma_e, psi + dt * k3)
        psi = psi + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        out[step + 1] = psi
    return out


@njit(cache=True)
def _photon_rhs(h, gamma_e, omegas, src, psi, F, dpsi, dF):
    dpsi[0] = -1j * h * psi[1]
    dpsi[1] = -1j * np.conj(h) * psi[0] - 0.5 * gamma_e * psi[1]
    dpsi[2] = 0.0
    m = omegas.shape[0]
    for j in range(m):
        iw = 1j * omegas[j]
        dF[0, j] = -1j * h * F[1, j] - iw * F[0, j]
        dF[1, j] = -1j * np.conj(h) * F[0, j] - (0.5 * gamma_e) * F[1, j] - iw * F[1, j]
        dF[2, j] = src * psi[1] - iw * F[2, j]


@njit(cache=True)
def photon_rk4(h_half, gamma_e, omegas, src, dt, store_every):
    """Co-integrate the no-jump state and all one-photon amplitudes.

    Returns (psi_out, F_store, F_final): psi_out is (n+1, 3); F_store holds
    the (3, M) one-photon amplitude matrix at steps 0, store_every,
    2*store_every, ... and always at the final step; F_final is the exact
    end-of-interval amplitude matrix.
    """
    n = (h_half.shape[0] - 1) // 2
    m = omegas.shape[0]
    psi_out = np.empty((n + 1, 3), dtype=np.complex128)
    n_store = n // store_every + 1
    if n % store_every != 0:
        n_store += 1
    F_store = np.empty((n_store, 3, m), dtype=np.complex128)

    psi = np.zeros(3, dtype=np.complex128)
    psi[0] = 1.0
    F = np.zeros((3, m), dtype=np.complex128)
    psi_out[0] = psi
    F_store[0] = F
    idx = 1

    k1p = np.empty(3, dtype=np.complex128)
    k2p = np.empty(3, dtype=np.complex128)
    k3p = np.empty(3, dtype=np.complex128)
    k4p = np.empty(3, dtype=np.complex128)
    k1F = np.empty((3, m), dtype=np.complex128)
    k2F = np.empty((3, m), dtype=np.complex128)
    k3F = np.empty((3, m), dtype=np.complex128)
    k4F = np.empty((3, m), dtype=np.complex128)

    for step in range(n):
        h0 = h_half[2 * step]
        h1 = h_half[2 * step + 1]
        h2 = h_half[2 * step + 2]
        _photon_rhs(h0, gamma_e, omegas, src, psi, F, k1p, k1F)
        _photon_rhs(h1, gamma_e, omegas, src,
                    psi + (0.5 * dt) * k1p, F + (0.5 * dt) * k1F, k2p, k2F)
        _photon_rhs(h1, gamma_e, omegas, src,
                    psi + (0.5 * dt) * k2p, F + (0.5 * dt) * k2F, k3p, k3F)
        _photon_rhs(h2, gamma_e, omegas, src,
                    psi + dt * k3p, F + dt * k3F, k4p, k4F)
        psi = psi + (dt / 6.0) * (k1p + 2.0 * k2p + 2.0 * k3p + k4p)
        F = F + (dt / 6.0) * (k1F + 2.0 * k2F + 2.0 * k3F + k4F)
        psi_out[step + 1] = psi
        if (step + 1) % store_every == 0 or step + 1 == n:
            F_store[idx] = F
            idx += 1
    return psi_out, F_store, F.copy()
