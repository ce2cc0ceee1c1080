"""
Reduced Burau representation over integer Laurent polynomials, spectral
lower bounds on entropy, and the exact classifier on three strands.

Generator convention (frozen; all tests pin behaviour to it): sigma_k maps
to the identity except for the 3x3 block at rows/columns k-1, k, k+1

        [ 1   t   0 ]
        [ 0  -t   0 ]
        [ 0   1   1 ]

truncated at the matrix edges, so in B_3

    sigma_1 -> [[-t, 0], [1, 1]],      sigma_2 -> [[1, t], [0, -t]].

Evaluating the image of a word on the unit circle |t| = 1 and taking the
largest log spectral radius over a sample grid gives a lower bound for the
word's topological entropy (the classical Burau bound on the dilatation);
t = -1 is always sampled, being the strongest point for small braids.

On three strands the separate classifier uses the integer matrices

    sigma_1 -> [[1, 1], [0, 1]],       sigma_2 -> [[1, 0], [-1, 1]],

whose kernel is generated by the fourth power of the half twist.  Up to
that entropy-zero center, |trace| > 2 characterizes the pseudo-Anosov
words, with dilatation (|tr| + sqrt(tr^2 - 4)) / 2; parabolic non-identity
images are the twist-reducible words and the rest are periodic.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .braids import BraidWord

__all__ = [
    "LaurentPoly",
    "LaurentMatrix",
    "B3Kind",
    "B3Class",
    "reduced_burau",
    "evaluate_on_circle",
    "spectral_radius",
    "entropy_lower_bound",
    "b3_exact_classify",
]

_NUMERIC_FLOOR = 1e-9  # log spectral radii below this are float noise, clamp to 0


@dataclass(frozen=True)
class LaurentPoly:
    """An integer Laurent polynomial, stored as sorted (exponent, coefficient) pairs."""

    coeffs: tuple[tuple[int, int], ...]

    @classmethod
    def from_dict(cls, d: dict[int, int]) -> LaurentPoly:
        return cls(tuple(sorted((e, c) for e, c in d.items() if c != 0)))

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls(())

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls(((0, 1),))

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> LaurentPoly:
        if coefficient == 0:
            return cls(())
        return cls(((exponent, coefficient),))

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        out = dict(self.coeffs)
        for e, c in other.coeffs:
            out[e] = out.get(e, 0) + c
        return LaurentPoly.from_dict(out)

    def __mul__(self, other: LaurentPoly) -> LaurentPoly:
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs:
            for e2, c2 in other.coeffs:
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly.from_dict(out)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(tuple((e, -c) for e, c in self.coeffs))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, t: complex) -> complex:
        return sum(c * t**e for e, c in self.coeffs)

    def on_circle(self, theta: float) -> complex:
        return sum(c * cmath.exp(1j * theta * e) for e, c in self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in self.coeffs:
            if e == 0:
                parts.append(f"{c}")
            elif e == 1:
                parts.append(f"{c}*t")
            else:
                parts.append(f"{c}*t^{e}")
        return " + ".join(parts).replace("+ -", "- ")


@dataclass(frozen=True)
class LaurentMatrix:
    """A square matrix of integer Laurent polynomials."""

    entries: tuple[tuple[LaurentPoly, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    @classmethod
    def identity(cls, size: int) -> LaurentMatrix:
        one, zero = LaurentPoly.one(), LaurentPoly.zero()
        return cls(tuple(
            tuple(one if r == c else zero for c in range(size)) for r in range(size)
        ))

    def __mul__(self, other: LaurentMatrix) -> LaurentMatrix:
        if self.size != other.size:
            raise ValueError("matrix size mismatch")
        m = self.size
        rows = []
        for r in range(m):
            row = []
            for c in range(m):
                acc = LaurentPoly.zero()
                for k in range(m):
                    if self.entries[r][k].is_zero() or other.entries[k][c].is_zero():
                        continue
                    acc = acc + self.entries[r][k] * other.entries[k][c]
                row.append(acc)
            rows.append(tuple(row))
        return LaurentMatrix(tuple(rows))


def _generator_matrix(n: int, k: int, inverted: bool) -> LaurentMatrix:
    m = n - 1
    one, zero = LaurentPoly.one(), LaurentPoly.zero()
    rows = [[one if r == c else zero for c in range(m)] for r in range(m)]
    i = k - 1
    if not inverted:
        rows[i][i] = LaurentPoly.monomial(1, -1)        # -t
        if i - 1 >= 0:
            rows[i - 1][i] = LaurentPoly.monomial(1)    # t
        if i + 1 < m:
            rows[i + 1][i] = one
    else:
        rows[i][i] = LaurentPoly.monomial(-1, -1)       # -t^-1
        if i - 1 >= 0:
            rows[i - 1][i] = one
        if i + 1 < m:
            rows[i + 1][i] = LaurentPoly.monomial(-1)   # t^-1
    return LaurentMatrix(tuple(tuple(r) for r in rows))


def reduced_burau(w: BraidWord) -> LaurentMatrix:
    """Image of w under the reduced Burau representation, letters left to right."""
    if w.n < 3:
        raise ValueError("reduced Burau needs at least 3 strands")
    M = LaurentMatrix.identity(w.n - 1)
    for letter in w.letters:
        M = M * _generator_matrix(w.n, abs(letter), letter < 0)
    return M


def evaluate_on_circle(M: LaurentMatrix, theta: float) -> np.ndarray:
    """Substitute t = exp(i theta) entrywise."""
    m = M.size
    out = np.empty((m, m), dtype=complex)
    for r in range(m):
        for c in range(m):
            out[r, c] = M.entries[r][c].on_circle(theta)
    return out


def spectral_radius(matrix: np.ndarray) -> float:
    return float(max(abs(ev) for ev in np.linalg.eigvals(matrix)))


def entropy_lower_bound(w: BraidWord, grid: int = 64) -> float:
    """Max over sampled unit-circle points of the log spectral radius of the
    reduced Burau image; clamped at 0.  Always a valid entropy lower bound."""
    if grid < 1:
        raise ValueError(f"grid must be >= 1, got {grid}")
    M = reduced_burau(w)
    thetas = [2.0 * math.pi * j / grid for j in range(grid)]
    if all(abs(th - math.pi) > 1e-12 for th in thetas):
        thetas.append(math.pi)
    best = 0.0
    for theta in thetas:
        value = math.log(max(spectral_radius(evaluate_on_circle(M, theta)), 1.0))
        if value > best:
            best = value
    return best if best > _NUMERIC_FLOOR else 0.0


class B3Kind(Enum):
    PERIODIC = "PERIODIC"
    REDUCIBLE = "REDUCIBLE"
    PSEUDO_ANOSOV = "PSEUDO_ANOSOV"


@dataclass(frozen=True)
class B3Class:
    """Exact entropy classification of a 3-strand braid word."""

    matrix: tuple[tuple[int, int], tuple[int, int]]
    trace: int
    kind: B3Kind
    entropy_exact: float


_B3_MATS = {
    1: ((1, 1), (0, 1)),
    -1: ((1, -1), (0, 1)),
    2: ((1, 0), (-1, 1)),
    -2: ((1, 0), (1, 1)),
}


def _mat2_mul(A, B):
    return (
        (A[0][0] * B[0][0] + A[0][1] * B[1][0], A[0][0] * B[0][1] + A[0][1] * B[1][1]),
        (A[1][0] * B[0][0] + A[1][1] * B[1][0], A[1][0] * B[0][1] + A[1][1] * B[1][1]),
    )


def _log_dilatation(tr: int) -> float:
    # log((|tr| + sqrt(tr^2 - 4)) / 2), stable for arbitrarily large integer traces
    t = abs(tr)
    ratio = 4.0 / (float(t) * float(t)) if t < 10**15 else 0.0
    return math.log(t) + math.log((1.0 + math.sqrt(max(0.0, 1.0 - ratio))) / 2.0)


def b3_exact_classify(w: BraidWord) -> B3Class:
    """Classify a 3-strand word as periodic, reducible, or pseudo-Anosov,
    with the exact entropy in the pseudo-Anosov case."""
    if w.n != 3:
        raise ValueError(f"exact classification is for 3 strands, got {w.n}")
    M = ((1, 0), (0, 1))
    for letter in w.letters:
        M = _mat2_mul(M, _B3_MATS[letter])
    tr = M[0][0] + M[1][1]
    if abs(tr) > 2:
        return B3Class(M, tr, B3Kind.PSEUDO_ANOSOV, _log_dilatation(tr))
    if abs(tr) < 2 or M in (((1, 0), (0, 1)), ((-1, 0), (0, -1))):
        return B3Class(M, tr, B3Kind.PERIODIC, 0.0)
    return B3Class(M, tr, B3Kind.REDUCIBLE, 0.0)
