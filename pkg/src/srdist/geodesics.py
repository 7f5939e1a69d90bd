"""Unit-speed sub-Riemannian geodesics from the identity.

A geodesic is parametrized by a horizontal direction angle phi0 and a
vertical momentum beta; the parameter t is also arclength.  Two
independent evaluation routes are provided: the closed trigonometric
form (production) and the product of two one-parameter subgroups
(cross-check).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .algebra import AlgebraVector, SO3Element, SU2Element, klein_omega, su2_exp, su2_mul

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class GeodesicParams:
    """Horizontal direction angle phi0 (normalized to [0, 2*pi)) and beta."""

    phi0: float
    beta: float

    def __post_init__(self):
        if not (math.isfinite(self.phi0) and math.isfinite(self.beta)):
            raise ValueError("geodesic parameters must be finite")
        object.__setattr__(self, "phi0", self.phi0 % TWO_PI)


def geodesic_point(p: GeodesicParams, t: float) -> SU2Element:
    """Closed-form geodesic endpoint at time t >= 0.

    With s = sqrt(1 + beta^2), u = t*s/2 and h = beta*t/2:

        Re(A) = (beta/s) sin(u) sin(h) + cos(u) cos(h)
        Im(A) = (beta/s) sin(u) cos(h) - cos(u) sin(h)
        B     = (sin(u)/s) * exp(i*(h + phi0))
    """
    if t < 0:
        raise ValueError("geodesic parameter t must be nonnegative")
    beta = p.beta
    s = math.sqrt(1.0 + beta * beta)
    u = t * s / 2.0
    h = beta * t / 2.0
    su, cu = math.sin(u), math.cos(u)
    sh, ch = math.sin(h), math.cos(h)
    a_re = (beta / s) * su * sh + cu * ch
    a_im = (beta / s) * su * ch - cu * sh
    bmag = su / s
    b_re = bmag * math.cos(h + p.phi0)
    b_im = bmag * math.sin(h + p.phi0)
    return SU2Element(a_re, a_im, b_re, b_im)


def geodesic_point_exp(p: GeodesicParams, t: float) -> SU2Element:
    """Same endpoint via exp(t(cos(phi0) p1 + sin(phi0) p2 + beta k)) exp(-t beta k).

    Exists as an independent route; agrees with `geodesic_point` to 1e-10.
    """
    if t < 0:
        raise ValueError("geodesic parameter t must be nonnegative")
    first = su2_exp(AlgebraVector(math.cos(p.phi0), math.sin(p.phi0), p.beta), t)
    second = su2_exp(AlgebraVector(0.0, 0.0, p.beta), -t)
    return su2_mul(first, second)


def geodesic_point_so3(p: GeodesicParams, t: float) -> SO3Element:
    """Geodesic endpoint on SO(3), the covering image of the SU(2) endpoint."""
    return klein_omega(geodesic_point(p, t))


def cut_time_bound(beta: float) -> float:
    """Upper bound 2*pi/sqrt(1 + beta^2) on the time a geodesic stays minimizing."""
    if not math.isfinite(beta):
        raise ValueError("beta must be finite")
    return TWO_PI / math.sqrt(1.0 + beta * beta)
