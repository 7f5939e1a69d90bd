"""Pure-numpy grid scan for geodesic shooting (fallback backend).

For every (phi0, beta) cell, sweep t over (0, 2*pi/sqrt(1+beta^2)] and
record the smallest max-componentwise deviation between the geodesic
endpoint and the target, together with the t achieving it.

Vectorized per beta-slice: the A component and the polar pieces of B do
not depend on phi0, so the inner (phi0, t) block is assembled from outer
products with no trigonometry inside.
"""
from __future__ import annotations

import math

import numpy as np

BACKEND_NAME = "python"


def scan_su2(
    target: np.ndarray, phis: np.ndarray, betas: np.ndarray, n_t: int
) -> tuple[np.ndarray, np.ndarray]:
    """Per-(phi0, beta) best deviation from an SU(2) target and its t.

    target is (a_re, a_im, b_re, b_im).  Returns (dev, t_best), both of
    shape (len(phis), len(betas)).
    """
    tr = np.asarray(target, dtype=float)
    n_phi = len(phis)
    dev = np.empty((n_phi, len(betas)))
    t_best = np.empty_like(dev)
    cphi = np.cos(phis)
    sphi = np.sin(phis)
    rows = np.arange(n_phi)
    for ib, beta in enumerate(betas):
        re_a, im_a, bc, bs, ts = _slice_tables(beta, n_t)
        dev_a = np.maximum(np.abs(re_a - tr[0]), np.abs(im_a - tr[1]))
        b_re = np.outer(cphi, bc) - np.outer(sphi, bs)
        b_im = np.outer(sphi, bc) + np.outer(cphi, bs)
        np.abs(b_re - tr[2], out=b_re)
        np.abs(b_im - tr[3], out=b_im)
        d = np.maximum(np.maximum(b_re, b_im), dev_a[None, :])
        idx = np.argmin(d, axis=1)
        dev[:, ib] = d[rows, idx]
        t_best[:, ib] = ts[idx]
    return dev, t_best


def scan_so3(
    target: np.ndarray, phis: np.ndarray, betas: np.ndarray, n_t: int
) -> tuple[np.ndarray, np.ndarray]:
    """Per-(phi0, beta) best deviation from an SO(3) target (row-major 9-vector)."""
    tr = np.asarray(target, dtype=float).reshape(9)
    n_phi = len(phis)
    dev = np.empty((n_phi, len(betas)))
    t_best = np.empty_like(dev)
    cphi = np.cos(phis)
    sphi = np.sin(phis)
    rows = np.arange(n_phi)
    for ib, beta in enumerate(betas):
        a1, a2, bc, bs, ts = _slice_tables(beta, n_t)
        b1 = np.outer(cphi, bc) - np.outer(sphi, bs)
        b2 = np.outer(sphi, bc) + np.outer(cphi, bs)
        a1a1 = (a1 * a1)[None, :]
        a2a2 = (a2 * a2)[None, :]
        a1a2 = (a1 * a2)[None, :]
        b1b1 = b1 * b1
        b2b2 = b2 * b2
        b1b2 = b1 * b2
        a1b1 = a1[None, :] * b1
        a1b2 = a1[None, :] * b2
        a2b1 = a2[None, :] * b1
        a2b2 = a2[None, :] * b2
        d = np.abs(a1a1 + a2a2 - b1b1 - b2b2 - tr[0])
        np.maximum(d, np.abs(2.0 * (a2b1 - a1b2) - tr[1]), out=d)
        np.maximum(d, np.abs(2.0 * (a2b2 + a1b1) - tr[2]), out=d)
        np.maximum(d, np.abs(2.0 * (a2b1 + a1b2) - tr[3]), out=d)
        np.maximum(d, np.abs(a1a1 - a2a2 + b1b1 - b2b2 - tr[4]), out=d)
        np.maximum(d, np.abs(2.0 * (b1b2 - a1a2) - tr[5]), out=d)
        np.maximum(d, np.abs(2.0 * (a2b2 - a1b1) - tr[6]), out=d)
        np.maximum(d, np.abs(2.0 * (b1b2 + a1a2) - tr[7]), out=d)
        np.maximum(d, np.abs(a1a1 - a2a2 - b1b1 + b2b2 - tr[8]), out=d)
        idx = np.argmin(d, axis=1)
        dev[:, ib] = d[rows, idx]
        t_best[:, ib] = ts[idx]
    return dev, t_best


def _slice_tables(beta: float, n_t: int):
    """t-tables for one beta: Re(A), Im(A), and B's rectangular parts at phi0 = 0."""
    s = math.sqrt(1.0 + beta * beta)
    ts = np.arange(1, n_t + 1) * (2.0 * math.pi / s / n_t)
    u = ts * (s / 2.0)
    h = ts * (beta / 2.0)
    su, cu = np.sin(u), np.cos(u)
    sh, ch = np.sin(h), np.cos(h)
    re_a = (beta / s) * su * sh + cu * ch
    im_a = (beta / s) * su * ch - cu * sh
    bmag = su / s
    return re_a, im_a, bmag * ch, bmag * sh, ts
