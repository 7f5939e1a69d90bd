"""Exact sub-Riemannian distance from the identity on SU(2).

The distance depends only on the A component of the target.  Writing
theta = arg(A), the five branches are:

  1. A = 0                         -> t = pi
  2. |A| = 1                       -> t = 2*sqrt(|theta|*(2*pi - |theta|))
  3. |theta| = pi*(1 - |A|)/2      -> t = pi*sqrt(1 - |A|^2)
  4. |theta| < pi*(1 - |A|)/2      -> short arc: solve arg_short(beta) = theta
  5. |theta| > pi*(1 - |A|)/2      -> long arc: solve arg_long(beta) = +-pi - theta

Branches 4 and 5 reduce to a single monotone transcendental equation in
the vertical momentum beta (solved by bisection); the travel times
`time_short` / `time_long` then follow in closed form.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Optional

from .algebra import SU2Element, sgn, su2_inv, su2_mul

TWO_PI = 2.0 * math.pi

# Half-width of the classification band around the branch-3 boundary,
# applied to theta.  The distance is continuous across the boundary, so
# the band contributes error well below the other tolerances.
EPS_CASE = 1e-9

# |A| closer than this to 0 or 1 is routed to branches 1 / 2.
ABS_A_EDGE = 1e-12


class DomainError(ValueError):
    """Argument outside the beta-domain or target outside a monotone range."""


class DistanceCase(enum.Enum):
    A_ZERO = "Case1_Azero"
    ABS_A_ONE = "Case2_AbsAone"
    BOUNDARY = "Case3_Boundary"
    SHORT = "Case4_Short"
    LONG = "Case5_Long"


@dataclass(frozen=True)
class DistanceResult:
    """Distance t, the branch used, and the recovered geodesic parameters.

    `beta` / `phi0` are None when the minimizer's parameter is not unique
    (e.g. |A| = 1 leaves the sign of beta free, B = 0 leaves phi0 free).
    """

    t: float
    case: DistanceCase
    beta: Optional[float]
    phi0: Optional[float]


def _clamped_asin(x: float) -> float:
    # Domain endpoints overshoot [-1, 1] by ~1e-16 in float arithmetic.
    return math.asin(min(1.0, max(-1.0, x)))


def beta_domain_max(abs_a: float) -> float:
    """Endpoint b* = |A|/sqrt(1 - |A|^2) of the admissible beta interval."""
    if not 0.0 < abs_a < 1.0:
        raise DomainError("abs_a must lie in (0, 1)")
    return abs_a / math.sqrt(1.0 - abs_a * abs_a)


def _check_beta(beta: float, abs_a: float) -> float:
    bmax = beta_domain_max(abs_a)
    if abs(beta) > bmax + 1e-12:
        raise DomainError(f"|beta| = {abs(beta)} exceeds domain endpoint {bmax}")
    return min(bmax, max(-bmax, beta))


def _at_endpoint(beta: float, abs_a: float) -> bool:
    # The asin argument hits 1 at |beta| = b*, where roundoff in the
    # argument is amplified by the infinite derivative; the exact limit
    # values are substituted there instead.
    return abs(beta) >= beta_domain_max(abs_a)


def time_short(beta: float, abs_a: float) -> float:
    """Travel time of the short arc (t < pi/sqrt(1+beta^2)); even in beta."""
    beta = _check_beta(beta, abs_a)
    if _at_endpoint(beta, abs_a):
        return math.pi * math.sqrt(1.0 - abs_a * abs_a)
    s2 = 1.0 + beta * beta
    return 2.0 / math.sqrt(s2) * _clamped_asin(math.sqrt((1.0 - abs_a * abs_a) * s2))


def time_long(beta: float, abs_a: float) -> float:
    """Travel time of the long arc; even in beta, equals 2*pi/sqrt(1+beta^2) - time_short."""
    beta = _check_beta(beta, abs_a)
    if _at_endpoint(beta, abs_a):
        return math.pi * math.sqrt(1.0 - abs_a * abs_a)
    s2 = 1.0 + beta * beta
    return (
        2.0
        / math.sqrt(s2)
        * (math.pi - _clamped_asin(math.sqrt((1.0 - abs_a * abs_a) * s2)))
    )


def arg_short(beta: float, abs_a: float) -> float:
    """arg(A) reached by the short arc; odd, strictly increasing in beta.

    Range is [-pi*(1-|A|)/2, pi*(1-|A|)/2].
    """
    beta = _check_beta(beta, abs_a)
    if _at_endpoint(beta, abs_a):
        return math.copysign(math.pi * (1.0 - abs_a) / 2.0, beta)
    s = math.sqrt(1.0 + beta * beta)
    one_m = 1.0 - abs_a * abs_a
    return -(beta / s) * _clamped_asin(math.sqrt(one_m * s * s)) + _clamped_asin(
        beta * math.sqrt(one_m) / abs_a
    )


def arg_long(beta: float, abs_a: float) -> float:
    """Phase reached by the long arc: pi*beta/sqrt(1+beta^2) + arg_short(beta).

    Odd, strictly increasing; range [-pi*(1+|A|)/2, pi*(1+|A|)/2].
    """
    beta = _check_beta(beta, abs_a)
    if _at_endpoint(beta, abs_a):
        return math.copysign(math.pi * (1.0 + abs_a) / 2.0, beta)
    s = math.sqrt(1.0 + beta * beta)
    return math.pi * beta / s + arg_short(beta, abs_a)


def solve_monotone(
    f: Callable[[float], float], beta_max: float, target: float
) -> float:
    """Solve f(beta) = target for a strictly increasing f on [-beta_max, beta_max].

    Plain bisection, 200 iterations: the final interval width is far below
    1e-12 and no derivative is needed.  Raises DomainError when the target
    exceeds the range by more than 1e-10 (signals misclassification
    upstream); targets within 1e-10 of an endpoint clamp to it.
    """
    lo, hi = -beta_max, beta_max
    flo, fhi = f(lo), f(hi)
    if target < flo - 1e-10 or target > fhi + 1e-10:
        raise DomainError(
            f"target {target} outside monotone range [{flo}, {fhi}]"
        )
    if target <= flo:
        return lo
    if target >= fhi:
        return hi
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if hi - lo <= 4e-16 * (1.0 + abs(mid)):
            break
        if f(mid) < target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _boundary_beta(theta: float, abs_a: float, t: float) -> float:
    """Sign choice for beta = +-b* on the branch-3 boundary.

    The boundary system reads sin(beta*t/2) = sgn(beta)*cos(theta) and
    cos(beta*t/2) = sgn(beta)*sin(theta); pick the sign with the smaller
    residual (both satisfy it only at theta = pi*(1-|A|)/2 exactly).
    """
    bmax = beta_domain_max(abs_a)

    def residual(beta: float) -> float:
        return max(
            abs(math.sin(beta * t / 2.0) - sgn(beta) * math.cos(theta)),
            abs(math.cos(beta * t / 2.0) - sgn(beta) * math.sin(theta)),
        )

    return bmax if residual(bmax) <= residual(-bmax) else -bmax


def distance_su2(g: SU2Element) -> DistanceResult:
    """Distance from g to the identity, with branch label and geodesic parameters."""
    abs_a = math.hypot(g.a_re, g.a_im)
    abs_b = math.hypot(g.b_re, g.b_im)

    if abs_a <= ABS_A_EDGE:
        # Branch 1: t = pi, beta = 0, phi0 = arg(B).
        phi0 = math.atan2(g.b_im, g.b_re) % TWO_PI
        return DistanceResult(math.pi, DistanceCase.A_ZERO, 0.0, phi0)

    theta = math.atan2(g.a_im, g.a_re)

    if abs_a >= 1.0 - ABS_A_EDGE:
        # Branch 2: B = 0; |beta| is fixed by t but its sign is not reported.
        t = 2.0 * math.sqrt(max(0.0, abs(theta) * (TWO_PI - abs(theta))))
        return DistanceResult(t, DistanceCase.ABS_A_ONE, None, None)

    boundary = math.pi * (1.0 - abs_a) / 2.0
    if abs(abs(theta) - boundary) <= EPS_CASE:
        # Branch 3: boundary between the short- and long-arc regimes.
        t = math.pi * math.sqrt(1.0 - abs_a * abs_a)
        beta = _boundary_beta(theta, abs_a, t)
        case = DistanceCase.BOUNDARY
    elif abs(theta) < boundary:
        # Branch 4: short arc, monotone target theta.
        beta = solve_monotone(
            lambda b: arg_short(b, abs_a), beta_domain_max(abs_a), theta
        )
        t = time_short(beta, abs_a)
        case = DistanceCase.SHORT
    else:
        # Branch 5: long arc; the system's phase target is pi - theta for
        # theta >= 0 and -pi - theta otherwise.
        target = math.pi - theta if theta >= 0.0 else -math.pi - theta
        beta = solve_monotone(
            lambda b: arg_long(b, abs_a), beta_domain_max(abs_a), target
        )
        t = time_long(beta, abs_a)
        case = DistanceCase.LONG

    phi0 = None
    if abs_b > ABS_A_EDGE:
        phi0 = (math.atan2(g.b_im, g.b_re) - beta * t / 2.0) % TWO_PI
    return DistanceResult(t, case, beta, phi0)


def classify_su2(g: SU2Element) -> DistanceCase:
    """Re-evaluate the branch predicate alone (used by consistency tests)."""
    abs_a = math.hypot(g.a_re, g.a_im)
    if abs_a <= ABS_A_EDGE:
        return DistanceCase.A_ZERO
    if abs_a >= 1.0 - ABS_A_EDGE:
        return DistanceCase.ABS_A_ONE
    theta = abs(math.atan2(g.a_im, g.a_re))
    boundary = math.pi * (1.0 - abs_a) / 2.0
    if abs(theta - boundary) <= EPS_CASE:
        return DistanceCase.BOUNDARY
    return DistanceCase.SHORT if theta < boundary else DistanceCase.LONG


def distance_su2_pair(g: SU2Element, h: SU2Element) -> float:
    """Distance between two elements via left-invariance: d(g, h) = d(e, g^-1 h)."""
    return distance_su2(su2_mul(su2_inv(g), h)).t
