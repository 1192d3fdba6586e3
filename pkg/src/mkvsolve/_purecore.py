"""Pure numpy implementations of the hot numerical kernels.

This module is the reference backend. `mkvsolve._speedups` (Cython, OpenMP)
implements the same functions; `mkvsolve.backend` picks one at import time.

Random numbers are counter-based (Philox-4x32-10): every draw is a pure
function of (seed, stream, position), so results never depend on worker
count or call order.
"""

from __future__ import annotations

import numpy as np

_M0 = np.uint64(0xD2511F53)
_M1 = np.uint64(0xCD9E8D57)
_W0 = np.uint32(0x9E3779B9)
_W1 = np.uint32(0xBB67AE85)
_LO32 = np.uint64(0xFFFFFFFF)

# kernel ids shared with the compiled core
K_CONSTANT = 0
K_LINEAR_MEAN_FIELD = 1
K_TRIG = 2
K_BOUNDED_INTERACTION = 3
K_HOLDER_BUMP = 4

_INV_SQRT_2PI = 1.0 / np.sqrt(2.0 * np.pi)


def philox_words(seed: int, stream: int, n: int) -> np.ndarray:
    """Philox-4x32-10 blocks: row i is the 4-word output for counter i.

    The 128-bit counter is (i_lo, i_hi, stream_lo, stream_hi) and the 64-bit
    key is the seed.
    """
    idx = np.arange(n, dtype=np.uint64)
    c0 = (idx & _LO32).astype(np.uint32)
    c1 = (idx >> np.uint64(32)).astype(np.uint32)
    c2 = np.full(n, np.uint32(stream & 0xFFFFFFFF), dtype=np.uint32)
    c3 = np.full(n, np.uint32((stream >> 32) & 0xFFFFFFFF), dtype=np.uint32)
    k0 = np.uint32(seed & 0xFFFFFFFF)
    k1 = np.uint32((seed >> 32) & 0xFFFFFFFF)
    for _ in range(10):
        p0 = c0.astype(np.uint64) * _M0
        p1 = c2.astype(np.uint64) * _M1
        hi0 = (p0 >> np.uint64(32)).astype(np.uint32)
        lo0 = (p0 & _LO32).astype(np.uint32)
        hi1 = (p1 >> np.uint64(32)).astype(np.uint32)
        lo1 = (p1 & _LO32).astype(np.uint32)
        c0 = hi1 ^ c1 ^ k0
        c1 = lo1
        c2 = hi0 ^ c3 ^ k1
        c3 = lo0
        k0 = np.uint32(k0 + _W0)
        k1 = np.uint32(k1 + _W1)
    return np.stack([c0, c1, c2, c3], axis=1)


def philox_uniforms(seed: int, stream: int, n: int) -> np.ndarray:
    """n uniforms in (0, 1), four per Philox counter."""
    rows = (n + 3) // 4
    w = philox_words(seed, stream, rows)
    u = (w.astype(np.float64) + 0.5) * 2.0**-32
    return u.reshape(-1)[:n]


def philox_normals(seed: int, stream: int, n: int) -> np.ndarray:
    """n standard normals, Box-Muller on Philox words (four per counter)."""
    rows = (n + 3) // 4
    w = philox_words(seed, stream, rows).astype(np.float64)
    u = (w + 0.5) * 2.0**-32
    r0 = np.sqrt(-2.0 * np.log(u[:, 0]))
    r1 = np.sqrt(-2.0 * np.log(u[:, 2]))
    a0 = 2.0 * np.pi * u[:, 1]
    a1 = 2.0 * np.pi * u[:, 3]
    out = np.empty((rows, 4))
    out[:, 0] = r0 * np.cos(a0)
    out[:, 1] = r0 * np.sin(a0)
    out[:, 2] = r1 * np.cos(a1)
    out[:, 3] = r1 * np.sin(a1)
    return out.reshape(-1)[:n]


def kernel_pair_values(kid: int, p0: float, p1: float, p2: float,
                       t: float, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """Dense (len(xs), len(ys)) table of the scalar interaction kernel."""
    x = np.asarray(xs, dtype=np.float64)[:, None]
    y = np.asarray(ys, dtype=np.float64)[None, :]
    if kid == K_CONSTANT:
        return np.full((x.shape[0], y.shape[1]), p0)
    if kid == K_LINEAR_MEAN_FIELD:
        return p0 * (y - x)
    if kid == K_TRIG:
        return p0 * np.sin(p1 * (x + y))
    if kid == K_BOUNDED_INTERACTION:
        return p0 + p1 * np.exp(-((x - y) ** 2) / (2.0 * p2 * p2))
    if kid == K_HOLDER_BUMP:
        return p0 + p1 * np.minimum(np.abs(x - y) ** p2, 1.0)
    raise ValueError(f"unknown kernel id {kid}")


def mean_field_reduce_1d(kid: int, p0: float, p1: float, p2: float, t: float,
                         xs: np.ndarray, ys: np.ndarray, ws: np.ndarray,
                         num_threads: int = 1) -> np.ndarray:
    """Evaluate sum_j ws[j] * k(t, xs[i], ys[j]) for every i (d = 1)."""
    table = kernel_pair_values(kid, p0, p1, p2, t, xs, ys)
    return table @ np.asarray(ws, dtype=np.float64)


def density_step_1d(xs: np.ndarray, rho: np.ndarray, drift: np.ndarray,
                    cvar: np.ndarray, dt: float, w: np.ndarray,
                    num_threads: int = 1) -> tuple[np.ndarray, float]:
    """One frozen-coefficient Gaussian step of the forward density.

    rho_next(x_j) = sum_i w_i rho_i N(x_j; x_i + drift_i dt, cvar_i dt).
    Returns (rho_next, pre-renormalization mass).
    """
    xs = np.asarray(xs, dtype=np.float64)
    mean = xs + np.asarray(drift, dtype=np.float64) * dt
    var = np.asarray(cvar, dtype=np.float64) * dt
    # columns: source i, rows: target j
    gauss = np.exp(-((xs[:, None] - mean[None, :]) ** 2) / (2.0 * var[None, :]))
    gauss *= _INV_SQRT_2PI / np.sqrt(var[None, :])
    rho_next = gauss @ (np.asarray(w) * np.asarray(rho))
    mass = float(np.dot(w, rho_next))
    return rho_next, mass


def pullback_step_1d(xs: np.ndarray, fvals: np.ndarray, drift: np.ndarray,
                     cvar: np.ndarray, dt: float, w: np.ndarray,
                     num_threads: int = 1) -> np.ndarray:
    """One backward step: g(x_i) = sum_j w_j N(x_j; x_i + drift_i dt, cvar_i dt) f_j."""
    xs = np.asarray(xs, dtype=np.float64)
    mean = xs + np.asarray(drift, dtype=np.float64) * dt
    var = np.asarray(cvar, dtype=np.float64) * dt
    gauss = np.exp(-((xs[None, :] - mean[:, None]) ** 2) / (2.0 * var[:, None]))
    gauss *= _INV_SQRT_2PI / np.sqrt(var[:, None])
    return gauss @ (np.asarray(w) * np.asarray(fvals))
