"""Group and Lie-algebra arithmetic for SU(2) and SO(3).

An SU(2) element is stored as the complex pair (A, B) of the matrix

    [[ A,        B      ],
     [ -conj(B), conj(A)]],    |A|^2 + |B|^2 = 1.

The Klein map sends (A, B) to a rotation matrix acting on R^3.  It is a
2-to-1 group homomorphism: (A, B) and (-A, -B) cover the same rotation.
`lift_so3` inverts it, returning the canonical lift (Re(A) >= 0) and its
negation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# Construction-time validation tolerance; SU(2) elements are renormalized
# after validation so invariants survive long computation chains.
CONSTRUCTION_TOL = 1e-9


class InvalidElementError(ValueError):
    """Input violates a group invariant (non-unit pair, non-rotation matrix)."""


def sgn(x: float) -> float:
    """Sign with the deterministic convention sgn(0) = +1."""
    return 1.0 if x >= 0.0 else -1.0


@dataclass(frozen=True)
class SU2Element:
    """Unit pair (A, B) with A = a_re + i*a_im, B = b_re + i*b_im."""

    a_re: float
    a_im: float
    b_re: float
    b_im: float

    def __post_init__(self):
        vals = (self.a_re, self.a_im, self.b_re, self.b_im)
        if not all(math.isfinite(v) for v in vals):
            raise InvalidElementError("SU(2) components must be finite")
        norm = math.sqrt(sum(v * v for v in vals))
        if abs(norm - 1.0) > CONSTRUCTION_TOL:
            raise InvalidElementError(
                f"unit-norm violation: |A|^2+|B|^2 deviates by {abs(norm * norm - 1.0):.3e}"
            )
        if norm != 1.0:
            object.__setattr__(self, "a_re", self.a_re / norm)
            object.__setattr__(self, "a_im", self.a_im / norm)
            object.__setattr__(self, "b_re", self.b_re / norm)
            object.__setattr__(self, "b_im", self.b_im / norm)

    @property
    def a(self) -> complex:
        return complex(self.a_re, self.a_im)

    @property
    def b(self) -> complex:
        return complex(self.b_re, self.b_im)

    @classmethod
    def from_complex(cls, a: complex, b: complex) -> "SU2Element":
        return cls(a.real, a.imag, b.real, b.imag)

    @classmethod
    def identity(cls) -> "SU2Element":
        return cls(1.0, 0.0, 0.0, 0.0)

    def negate(self) -> "SU2Element":
        return SU2Element(-self.a_re, -self.a_im, -self.b_re, -self.b_im)

    def as_matrix(self) -> np.ndarray:
        a, b = self.a, self.b
        return np.array([[a, b], [-b.conjugate(), a.conjugate()]], dtype=complex)


@dataclass(frozen=True)
class SO3Element:
    """3x3 rotation matrix (orthogonal, determinant 1)."""

    m: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.m, dtype=float)
        if m.shape != (3, 3):
            raise InvalidElementError(f"rotation matrix must be 3x3, got {m.shape}")
        if not np.all(np.isfinite(m)):
            raise InvalidElementError("rotation matrix entries must be finite")
        ortho_res = np.max(np.abs(m.T @ m - np.eye(3)))
        if ortho_res > CONSTRUCTION_TOL:
            raise InvalidElementError(
                f"orthogonality violation: max |M^T M - I| = {ortho_res:.3e}"
            )
        det_res = abs(np.linalg.det(m) - 1.0)
        if det_res > CONSTRUCTION_TOL:
            raise InvalidElementError(f"determinant violation: |det - 1| = {det_res:.3e}")
        m = m.copy()
        m.setflags(write=False)
        object.__setattr__(self, "m", m)

    @classmethod
    def identity(cls) -> "SO3Element":
        return cls(np.eye(3))

    def transpose(self) -> "SO3Element":
        return SO3Element(self.m.T)

    def __getitem__(self, idx):
        return self.m[idx]


@dataclass(frozen=True)
class AlgebraVector:
    """Coefficients in the orthogonal-plus-vertical Lie algebra basis."""

    x: float
    y: float
    z: float


def su2_mul(g: SU2Element, h: SU2Element) -> SU2Element:
    """Group product of two SU(2) elements in (A, B) form."""
    a = g.a * h.a - g.b * h.b.conjugate()
    b = g.a * h.b + g.b * h.a.conjugate()
    return SU2Element.from_complex(a, b)


def su2_inv(g: SU2Element) -> SU2Element:
    """Inverse (conjugate transpose): (A, B) -> (conj(A), -B)."""
    return SU2Element(g.a_re, -g.a_im, -g.b_re, -g.b_im)


def su2_exp(v: AlgebraVector, t: float) -> SU2Element:
    """Exponential of t*(x*p1 + y*p2 + z*k) in closed form.

    The generator matrix squares to -(w/2)^2 * I with w = |(x, y, z)|, so

        exp = cos(t*w/2) * I + sin(t*w/2)/(w/2) * generator,

    which in (A, B) coordinates reads
    A = cos(t*w/2) + i*z*sin(t*w/2)/w, B = (x + i*y)*sin(t*w/2)/w.
    """
    w = math.sqrt(v.x * v.x + v.y * v.y + v.z * v.z)
    if w == 0.0:
        return SU2Element.identity()
    c = math.cos(t * w / 2.0)
    s = math.sin(t * w / 2.0) / w
    return SU2Element(c, v.z * s, v.x * s, v.y * s)


def so3_mul(c1: SO3Element, c2: SO3Element) -> SO3Element:
    return SO3Element(c1.m @ c2.m)


def klein_omega(g: SU2Element) -> SO3Element:
    """Covering epimorphism SU(2) -> SO(3).

    Every entry is quadratic in (A1, A2, B1, B2), hence invariant under
    the simultaneous sign flip (A, B) -> (-A, -B).
    """
    a1, a2, b1, b2 = g.a_re, g.a_im, g.b_re, g.b_im
    m = np.array(
        [
            [
                a1 * a1 + a2 * a2 - b1 * b1 - b2 * b2,
                2.0 * (a2 * b1 - b2 * a1),
                2.0 * (a2 * b2 + b1 * a1),
            ],
            [
                2.0 * (a2 * b1 + b2 * a1),
                a1 * a1 - a2 * a2 + b1 * b1 - b2 * b2,
                2.0 * (b1 * b2 - a1 * a2),
            ],
            [
                2.0 * (a2 * b2 - b1 * a1),
                2.0 * (b2 * b1 + a2 * a1),
                a1 * a1 - a2 * a2 - b1 * b1 + b2 * b2,
            ],
        ]
    )
    return SO3Element(m)


def lift_so3(c: SO3Element) -> tuple[SU2Element, SU2Element]:
    """Both SU(2) preimages of a rotation, canonical lift (Re(A) >= 0) first.

    A is fixed by the trace/first-entry identities of the covering map;
    B is recovered from the first row and column, dividing by whichever of
    |Re(A)|, |Im(A)| is larger for stability.  With A = 0 (c11 = -1), B
    follows from the lower-right 2x2 block instead.
    """
    m = c.m
    c11, c22, c33 = m[0, 0], m[1, 1], m[2, 2]
    a1 = math.sqrt(max(0.0, 1.0 + c11 + c22 + c33)) / 2.0
    a2 = sgn(m[2, 1] - m[1, 2]) * math.sqrt(max(0.0, 1.0 + c11 - c22 - c33)) / 2.0
    abs_a2 = a1 * a1 + a2 * a2
    if abs_a2 > 1e-24:
        # c12 = 2(A2 B1 - B2 A1), c21 = 2(A2 B1 + B2 A1),
        # c13 = 2(A2 B2 + B1 A1), c31 = 2(A2 B2 - B1 A1)
        if abs(a1) >= abs(a2):
            b1 = (m[0, 2] - m[2, 0]) / (4.0 * a1)
            b2 = (m[1, 0] - m[0, 1]) / (4.0 * a1)
        else:
            b1 = (m[0, 1] + m[1, 0]) / (4.0 * a2)
            b2 = (m[0, 2] + m[2, 0]) / (4.0 * a2)
    else:
        # A = 0: c22 = B1^2 - B2^2, c23 = 2 B1 B2, B1^2 + B2^2 = 1.
        a1 = a2 = 0.0
        b1 = math.sqrt(max(0.0, (1.0 + c22) / 2.0))
        b2 = sgn(m[1, 2]) * math.sqrt(max(0.0, (1.0 - c22) / 2.0))
        if b1 == 0.0:
            b2 = abs(b2)
    lift = SU2Element(a1, a2, b1, b2)
    return lift, lift.negate()


def random_su2(rng: np.random.Generator) -> SU2Element:
    """Random SU(2) element from a normalized 4-dimensional Gaussian."""
    while True:
        v = rng.standard_normal(4)
        n = np.linalg.norm(v)
        if n > 1e-6:
            return SU2Element(*(v / n))


def random_so3(rng: np.random.Generator) -> SO3Element:
    """Random rotation as the image of a random unit quaternion."""
    return klein_omega(random_su2(rng))
