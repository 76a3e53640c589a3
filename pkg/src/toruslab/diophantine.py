"""Integer-vector approximation of rotation vectors.

A rotation vector ``omega`` in R^d is resonant when some nonzero integer
vector annihilates it.  Non-resonant vectors still admit integer vectors
``k`` making ``<omega, k>`` unusually small; this module finds every
indivisible ``k`` in a box with

    |<omega, k>| < C / |k|**(d - 1)

by exhaustive enumeration (cost O(max_norm**d), fine at desk scale) and
certifies each hit.  ``|.|`` is the Euclidean norm throughout.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

# Relative threshold declaring <omega, k> "machine zero" for float input.
# Rational cancellations are detected exactly, so this only guards inputs
# meant to be irrational but stored as floats.
RESONANCE_REL_TOL = 1e-13


class ResonantVectorError(ValueError):
    """Raised when an operation requires a non-resonant rotation vector.

    The offending integer witness is attached as ``witness``.
    """

    def __init__(self, witness, residual):
        self.witness = tuple(int(c) for c in witness)
        self.residual = float(residual)
        super().__init__(
            f"rotation vector is resonant: witness k={self.witness}, "
            f"residual {self.residual:.3e}"
        )


@dataclass(frozen=True)
class RotationVector:
    """A frequency vector omega in R^d, d >= 2."""

    coords: tuple

    def __post_init__(self):
        coords = tuple(float(c) for c in self.coords)
        if len(coords) < 2:
            raise ValueError("rotation vector needs dimension >= 2")
        if not all(math.isfinite(c) for c in coords):
            raise ValueError("rotation vector entries must be finite")
        object.__setattr__(self, "coords", coords)

    @property
    def dim(self):
        return len(self.coords)

    @property
    def norm(self):
        return math.hypot(*self.coords)

    def as_array(self):
        return np.array(self.coords, dtype=float)

    @classmethod
    def golden(cls):
        """(1, (1+sqrt 5)/2): the classic badly-approximable pair."""
        return cls((1.0, (1.0 + math.sqrt(5.0)) / 2.0))


@dataclass(frozen=True)
class Approximant:
    """An indivisible integer vector k with small inner product against omega."""

    k: tuple
    residual: float   # exact-to-float <omega, k>
    norm: float       # Euclidean |k|
    indivisible: bool

    def as_array(self):
        return np.array(self.k, dtype=int)


@dataclass(frozen=True)
class ResonanceReport:
    resonant: bool
    witness: tuple | None
    residual: float | None
    max_norm: int

    def __bool__(self):
        return self.resonant


def is_indivisible(k) -> bool:
    """True iff the entries of the nonzero integer vector k have gcd 1."""
    k = [int(c) for c in k]
    if all(c == 0 for c in k):
        raise ValueError("zero vector has no divisibility class")
    return math.gcd(*(abs(c) for c in k)) == 1


def _exact_residual(omega: RotationVector, k) -> float:
    # Fractions of the stored floats: the dot product is computed without
    # rounding and collapses to exactly zero on rational cancellation.
    acc = Fraction(0)
    for w, c in zip(omega.coords, k):
        acc += Fraction(w) * int(c)
    return float(acc)


def _canonical_sign(k):
    for c in k:
        if c != 0:
            return k if c > 0 else tuple(-x for x in k)
    return k


def _box(dim, max_norm):
    rng = range(-max_norm, max_norm + 1)
    for k in itertools.product(rng, repeat=dim):
        if any(c != 0 for c in k):
            yield k


def classify_resonance(omega: RotationVector, max_norm: int) -> ResonanceReport:
    """Search |k|_inf <= max_norm for an integer vector with <omega,k> = 0.

    Returns the smallest-Euclidean-norm witness, ties broken by taking the
    sign making the first nonzero entry positive and then lexicographic
    order.  Rational cancellations are recognised exactly; float-irrational
    input uses the |residual| < 1e-13 |omega| |k| threshold.
    """
    if max_norm < 1:
        raise ValueError("max_norm must be >= 1")
    omega_norm = omega.norm
    best = None
    for k in _box(omega.dim, max_norm):
        k = _canonical_sign(k)
        res = _exact_residual(omega, k)
        knorm = math.hypot(*k)
        if res == 0.0 or abs(res) < RESONANCE_REL_TOL * omega_norm * knorm:
            key = (knorm, k)
            if best is None or key < best[0]:
                best = (key, k, res)
    if best is None:
        return ResonanceReport(False, None, None, max_norm)
    return ResonanceReport(True, best[1], best[2], max_norm)


def find_approximants(omega: RotationVector, max_norm: int, C: float = 1.0):
    """All indivisible k with 1 <= |k| <= max_norm and |<omega,k>| < C/|k|^(d-1).

    Sorted by increasing Euclidean norm (lexicographic tie-break), one
    representative per +-k pair (first nonzero entry positive).  An empty
    list means max_norm is too small, not that no approximants exist.

    Raises ResonantVectorError when omega is resonant within the box.
    """
    if max_norm < 1:
        raise ValueError("max_norm must be >= 1")
    if C <= 0:
        raise ValueError("C must be positive")
    report = classify_resonance(omega, max_norm)
    if report.resonant:
        raise ResonantVectorError(report.witness, report.residual)

    d = omega.dim
    hits = []
    seen = set()
    for k in _box(d, max_norm):
        k = _canonical_sign(k)
        if k in seen:
            continue
        seen.add(k)
        knorm = math.hypot(*k)
        if knorm > max_norm:
            continue
        if not is_indivisible(k):
            continue
        res = _exact_residual(omega, k)
        if abs(res) < C / knorm ** (d - 1):
            hits.append(Approximant(k=k, residual=res, norm=knorm, indivisible=True))
    hits.sort(key=lambda ap: (ap.norm, ap.k))
    return hits


def eq1_bound(approximant: Approximant, C: float = 1.0, dim: int | None = None) -> float:
    """The right-hand side C/|k|^(d-1) the approximant's residual beats."""
    d = dim if dim is not None else len(approximant.k)
    return C / approximant.norm ** (d - 1)
