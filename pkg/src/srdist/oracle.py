"""Brute-force geodesic-shooting oracle and the flawed-system demonstration.

`shoot_min_time` scans the whole (phi0, beta, t) parameter box of
geodesics from the identity, keeps the cells whose endpoint comes
closest to the target, polishes each candidate by coordinate descent
with step halving, and reports the least arrival time together with all
parameter-distinct minimizers.  It shares only the geodesic formulas
with the production distance code, never its case analysis, so it serves
as an independent check.

`br_system_residual` / `demonstrate_br_nonuniqueness` evaluate the
distance system published in earlier literature and exhibit two distinct
solutions for the same target, refuting its uniqueness claim.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from . import _kernels
from .algebra import SO3Element, SU2Element
from .su2_distance import DistanceCase, distance_su2

TWO_PI = 2.0 * math.pi

# Endpoint deviation (max-norm) a refined candidate must reach to count
# as hitting the target; grid cells are preselected adaptively because
# the raw grid resolution cannot reach this directly.
MATCH_TOL = 1e-3
# Accuracy of the refined endpoint match required of listed minimizers.
REFINED_TOL = 1e-6
# Arrival-time tolerance: minimizers within t_min + TIME_TOL are listed.
TIME_TOL = 2e-2
# Parameter-space radius for deduplicating minimizers.
DEDUP_RADIUS = 0.1

_CANDIDATE_CAP = 512


class ShootNoMatchError(RuntimeError):
    """No grid candidate reached the target: the grid is too coarse for it."""


@dataclass(frozen=True)
class GridSpec:
    n_phi: int = 256
    n_beta: int = 256
    beta_max: float = 8.0
    n_t: int = 512
    refine_steps: int = 60

    def __post_init__(self):
        if min(self.n_phi, self.n_beta, self.n_t) < 64:
            raise ValueError("grid sizes must be at least 64 in each dimension")
        if self.beta_max < 8.0:
            raise ValueError("beta_max must be at least 8")
        if self.refine_steps < 1:
            raise ValueError("refine_steps must be positive")


@dataclass(frozen=True)
class ShootResult:
    t_min: float
    minimizers: list[tuple[float, float, float]]  # (phi0, beta, t)
    grid_spec: GridSpec


def _target_vector_su2(g: SU2Element) -> np.ndarray:
    return np.array([g.a_re, g.a_im, g.b_re, g.b_im])


def _endpoint_dev_su2(target: np.ndarray) -> Callable[[float, float, float], float]:
    t0, t1, t2, t3 = target

    def dev(phi0: float, beta: float, t: float) -> float:
        s = math.sqrt(1.0 + beta * beta)
        u = t * s / 2.0
        h = t * beta / 2.0
        su, cu = math.sin(u), math.cos(u)
        sh, ch = math.sin(h), math.cos(h)
        bmag = su / s
        return max(
            abs((beta / s) * su * sh + cu * ch - t0),
            abs((beta / s) * su * ch - cu * sh - t1),
            abs(bmag * math.cos(h + phi0) - t2),
            abs(bmag * math.sin(h + phi0) - t3),
        )

    return dev


def _endpoint_sq_su2(target: np.ndarray) -> Callable[[float, float, float], float]:
    t0, t1, t2, t3 = target

    def sq(phi0: float, beta: float, t: float) -> float:
        s = math.sqrt(1.0 + beta * beta)
        u = t * s / 2.0
        h = t * beta / 2.0
        su, cu = math.sin(u), math.cos(u)
        sh, ch = math.sin(h), math.cos(h)
        bmag = su / s
        d0 = (beta / s) * su * sh + cu * ch - t0
        d1 = (beta / s) * su * ch - cu * sh - t1
        d2 = bmag * math.cos(h + phi0) - t2
        d3 = bmag * math.sin(h + phi0) - t3
        return d0 * d0 + d1 * d1 + d2 * d2 + d3 * d3

    return sq


def _rotation_entries(phi0: float, beta: float, t: float) -> tuple:
    """The nine entries of the covering image of the geodesic endpoint."""
    s = math.sqrt(1.0 + beta * beta)
    u = t * s / 2.0
    h = t * beta / 2.0
    su, cu = math.sin(u), math.cos(u)
    sh, ch = math.sin(h), math.cos(h)
    a1 = (beta / s) * su * sh + cu * ch
    a2 = (beta / s) * su * ch - cu * sh
    bmag = su / s
    b1 = bmag * math.cos(h + phi0)
    b2 = bmag * math.sin(h + phi0)
    a11, a22, a12 = a1 * a1, a2 * a2, a1 * a2
    b11, b22, b12 = b1 * b1, b2 * b2, b1 * b2
    return (
        a11 + a22 - b11 - b22,
        2.0 * (a2 * b1 - a1 * b2),
        2.0 * (a2 * b2 + a1 * b1),
        2.0 * (a2 * b1 + a1 * b2),
        a11 - a22 + b11 - b22,
        2.0 * (b12 - a12),
        2.0 * (a2 * b2 - a1 * b1),
        2.0 * (b12 + a12),
        a11 - a22 - b11 + b22,
    )


def _endpoint_dev_so3(target: np.ndarray) -> Callable[[float, float, float], float]:
    tr = tuple(target.reshape(9))

    def dev(phi0: float, beta: float, t: float) -> float:
        m = _rotation_entries(phi0, beta, max(t, 0.0))
        return max(abs(a - b) for a, b in zip(m, tr))

    return dev


def _endpoint_sq_so3(target: np.ndarray) -> Callable[[float, float, float], float]:
    tr = tuple(target.reshape(9))

    def sq(phi0: float, beta: float, t: float) -> float:
        m = _rotation_entries(phi0, beta, max(t, 0.0))
        return sum((a - b) * (a - b) for a, b in zip(m, tr))

    return sq


def _refine(
    dev: Callable[[float, float, float], float],
    sq: Callable[[float, float, float], float],
    phi0: float,
    beta: float,
    t: float,
    steps: tuple[float, float, float],
    rounds: int,
) -> tuple[float, float, float, float]:
    """Coordinate descent with step halving on the squared endpoint error.

    Sweeps the three coordinates greedily; when a full sweep brings no
    improvement the steps are halved.  `rounds` counts the halvings, so
    the final steps are the grid spacings shrunk by 2^-rounds.  The
    squared error is the descent objective (the max-norm deviation has
    ridges that stall single-coordinate moves); the returned deviation is
    still the max-norm one.
    """
    x = [phi0, beta, t]
    s = list(steps)
    best = sq(*x)
    halvings = 0
    sweeps = 0
    max_sweeps = 20 * rounds
    while halvings < rounds and sweeps < max_sweeps:
        sweeps += 1
        moved = False
        for i in range(3):
            for direction in (1.0, -1.0):
                while True:
                    trial = list(x)
                    trial[i] = x[i] + direction * s[i]
                    if i == 2 and trial[i] <= 0.0:
                        break
                    d = sq(*trial)
                    if d < best:
                        best = d
                        x = trial
                        moved = True
                    else:
                        break
        if not moved:
            s = [v / 2.0 for v in s]
            halvings += 1
    return x[0], x[1], x[2], dev(*x)


def _dedup(
    points: list[tuple[float, float, float]]
) -> list[tuple[float, float, float]]:
    """Greedy dedup at DEDUP_RADIUS in (phi0, beta), phi0 taken mod 2*pi."""
    kept: list[tuple[float, float, float]] = []
    for p in points:
        phi = p[0] % TWO_PI
        dup = False
        for q in kept:
            dphi = abs(phi - q[0])
            dphi = min(dphi, TWO_PI - dphi)
            if math.hypot(dphi, p[1] - q[1]) <= DEDUP_RADIUS:
                dup = True
                break
        if not dup:
            kept.append((phi, p[1], p[2]))
    return kept


def _shoot(
    scan,
    dev_fn: Callable[[float, float, float], float],
    sq_fn: Callable[[float, float, float], float],
    grid: GridSpec,
    target_vec: np.ndarray,
    beta_hint: Optional[float],
) -> ShootResult:
    beta_max = grid.beta_max
    # Widen the search window when the production solver puts the
    # minimizer's momentum near the window edge (window sizing only; all
    # values are still computed independently).
    if beta_hint is not None and abs(beta_hint) >= 0.9 * beta_max:
        beta_max = 1.25 * abs(beta_hint)

    phis = np.arange(grid.n_phi) * (TWO_PI / grid.n_phi)
    betas = np.linspace(-beta_max, beta_max, grid.n_beta)
    dev, t_best = scan(target_vec, phis, betas, grid.n_t)

    min_dev = float(dev.min())
    threshold = max(MATCH_TOL, 4.0 * min_dev, min_dev + 2e-3)
    cand_idx = np.argwhere(dev <= threshold)
    if len(cand_idx) > _CANDIDATE_CAP:
        order = np.argsort(dev[cand_idx[:, 0], cand_idx[:, 1]], kind="stable")
        cand_idx = cand_idx[order[:_CANDIDATE_CAP]]

    steps = (
        TWO_PI / grid.n_phi,
        2.0 * beta_max / (grid.n_beta - 1),
        TWO_PI / grid.n_t,
    )
    refined: list[tuple[float, float, float, float]] = []
    for ip, ib in cand_idx:
        r = _refine(
            dev_fn,
            sq_fn,
            float(phis[ip]),
            float(betas[ib]),
            float(t_best[ip, ib]),
            steps,
            grid.refine_steps,
        )
        refined.append(r)

    hits = [r for r in refined if r[3] <= MATCH_TOL]
    if not hits:
        raise ShootNoMatchError(
            f"no refined candidate within {MATCH_TOL} of the target "
            f"(best deviation {min(r[3] for r in refined) if refined else min_dev:.3e})"
        )
    t_min = min(r[2] for r in hits)

    exact = [r for r in refined if r[3] <= REFINED_TOL and r[2] <= t_min + TIME_TOL]
    exact.sort(key=lambda r: (r[2], r[0] % TWO_PI, r[1]))
    minimizers = _dedup([(r[0], r[1], r[2]) for r in exact])
    return ShootResult(t_min=t_min, minimizers=minimizers, grid_spec=grid)


def shoot_min_time(target: SU2Element, grid: GridSpec = GridSpec()) -> ShootResult:
    """Minimal geodesic arrival time at an SU(2) target, by exhaustive scan."""
    ref = distance_su2(target)
    vec = _target_vector_su2(target)
    return _shoot(
        _kernels.scan_su2,
        _endpoint_dev_su2(vec),
        _endpoint_sq_su2(vec),
        grid,
        vec,
        ref.beta,
    )


def shoot_min_time_so3(target: SO3Element, grid: GridSpec = GridSpec()) -> ShootResult:
    """Minimal arrival time at an SO(3) target, endpoint matched after covering."""
    from .so3_distance import distance_so3

    ref = distance_so3(target)
    vec = np.ascontiguousarray(target.m, dtype=float).reshape(9)
    return _shoot(
        _kernels.scan_so3,
        _endpoint_dev_so3(vec),
        _endpoint_sq_so3(vec),
        grid,
        vec,
        ref.beta,
    )


def br_system_residual(
    t: float, beta: float, abs_a: float, arg_a: float
) -> tuple[float, float]:
    """Residuals of the previously published two-equation distance system.

    First equation: -beta*t/2 + arctan((beta/s)*tan(t*s/2)) = arg(A),
    with the principal-branch arctan of the published formula; at the tan
    pole t*s/2 = pi/2 the one-sided limit sgn(beta*sin(u))*pi/2 is used.
    Keeping the principal branch is the point: it is what makes the
    system admit two roots for one target (see
    demonstrate_br_nonuniqueness).
    Second equation: sin(t*s/2)/s = sqrt(1 - |A|^2).
    """
    s = math.sqrt(1.0 + beta * beta)
    u = t * s / 2.0
    su, cu = math.sin(u), math.cos(u)
    if abs(cu) < 1e-300:
        branch = math.copysign(math.pi / 2.0, beta * su) if beta != 0.0 else 0.0
    else:
        branch = math.atan(beta * su / (s * cu))
    r1 = -beta * t / 2.0 + branch - arg_a
    r2 = math.sin(u) / s - math.sqrt(max(0.0, 1.0 - abs_a * abs_a))
    return r1, r2


@dataclass(frozen=True)
class NonuniquenessReport:
    """Two distinct solutions of the flawed system for one target."""

    abs_a: float
    t_small: float
    t_large: float
    residuals_small: tuple[float, float]
    residuals_large: tuple[float, float]
    true_distance: float
    true_case: DistanceCase
    notes: str = field(default="", compare=False)


def demonstrate_br_nonuniqueness(abs_a: float) -> NonuniquenessReport:
    """Exhibit two beta = 0, arg(A) = 0 solutions of the flawed system.

    Both t = 2*arcsin(sqrt(1-|A|^2)) and t = 2*pi - 2*arcsin(sqrt(1-|A|^2))
    satisfy the system, while the corrected case analysis returns a single
    value (the smaller one).
    """
    if not 0.0 < abs_a < 1.0:
        raise ValueError("abs_a must lie in (0, 1)")
    half = math.asin(math.sqrt(1.0 - abs_a * abs_a))
    t_small = 2.0 * half
    t_large = TWO_PI - 2.0 * half
    res_small = br_system_residual(t_small, 0.0, abs_a, 0.0)
    res_large = br_system_residual(t_large, 0.0, abs_a, 0.0)
    g = SU2Element(abs_a, 0.0, math.sqrt(1.0 - abs_a * abs_a), 0.0)
    ref = distance_su2(g)
    notes = (
        f"flawed system admits t = {t_small:.9f} and t = {t_large:.9f}; "
        f"case analysis gives the unique t = {ref.t:.9f} ({ref.case.value})"
    )
    return NonuniquenessReport(
        abs_a=abs_a,
        t_small=t_small,
        t_large=t_large,
        residuals_small=res_small,
        residuals_large=res_large,
        true_distance=ref.t,
        true_case=ref.case,
        notes=notes,
    )
