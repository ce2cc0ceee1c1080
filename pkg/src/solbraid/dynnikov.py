"""
Integer coordinates for multicurves on the n-punctured disk and the
piecewise-linear action of braid generators on them.

Coordinates.  Place the punctures 1..n on a horizontal axis and let wall i
(1 <= i <= n-1) be the vertical arc separating punctures 1..i from i+1..n.
Between walls i and i+1 sits puncture i+1; a taut multicurve meets that
strip in arcs passing above the puncture, below it, or looping around it
from the left or right wall.  For each interior puncture the pair

    a_i = (arcs below - arcs above) / 2,
    b_i = (left loops - right loops) = (wall_i - wall_{i+1}) / 2,

with i = 1..n-2, gives the classical Dynnikov coordinates: a bijection
between Z^(2n-4) and multicurves (0 is the empty curve).

Action.  sigma_k updates only the coordinate pairs k-1 and k, by the
standard max-plus update rules (Hall & Yurttas, "The geometry of the
Dynnikov coordinates").  For k = 1 and k = n-1 one of the two pairs sits
in an end region of the disk; its virtual coordinates are a = 0 and
b = -w_1/2 (resp. +w_{n-1}/2) where w is the wall crossing count, which is
recovered from the coordinates by minimality.  Words act left to right,
matching :func:`solbraid.braids.permutation_of`.

Triviality.  A word is trivial iff it induces the identity permutation,
fixes the n-1 canonical loops (the round curves around adjacent puncture
pairs), and has exponent sum zero.  The last condition is needed because
coordinates of closed curves are blind to full boundary twists: the full
twist fixes every multicurve, and the pure braids acting trivially on the
filling loop family are exactly its powers, which the exponent sum detects.

Entropy.  Iterating a word on a seed curve grows the coordinate L1-norm
like exp(h t) when the word has a pseudo-Anosov piece of entropy h, and
polynomially otherwise.  :func:`entropy_estimate` measures the tail of the
per-step log-norm increments over a family of seeds, with exact cycle
detection for periodic orbits and a decay test separating polynomial from
exponential growth.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from enum import Enum

from . import burau
from .braids import BraidWord, permutation_of

DEFAULT_SEED = 0x5EED

__all__ = [
    "DynnikovCoords",
    "EntropyConfig",
    "EntropyEstimate",
    "EstimateVerdict",
    "Classification",
    "ClassifiedWord",
    "apply_generator",
    "apply_braid",
    "canonical_loop",
    "canonical_loops",
    "wall_crossings",
    "is_trivial",
    "equal",
    "entropy_estimate",
    "classify",
]


class EstimateVerdict(Enum):
    ZERO = "ZERO"
    POSITIVE = "POSITIVE"
    INCONCLUSIVE = "INCONCLUSIVE"


class Classification(Enum):
    ZERO_ENTROPY = "ZERO_ENTROPY"
    POSITIVE_ENTROPY = "POSITIVE_ENTROPY"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class DynnikovCoords:
    """Coordinates (a, b) of an integral multicurve on the n-punctured disk."""

    n: int
    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"puncture count must be >= 3, got {self.n}")
        if len(self.a) != self.n - 2 or len(self.b) != self.n - 2:
            raise ValueError(
                f"need {self.n - 2} entries in each of a and b, "
                f"got {len(self.a)} and {len(self.b)}"
            )

    @classmethod
    def zero(cls, n: int) -> DynnikovCoords:
        return cls(n, (0,) * (n - 2), (0,) * (n - 2))

    def is_zero(self) -> bool:
        return not any(self.a) and not any(self.b)

    def norm(self) -> int:
        return sum(map(abs, self.a)) + sum(map(abs, self.b))

    def scaled(self, m: int) -> DynnikovCoords:
        return DynnikovCoords(self.n, tuple(m * x for x in self.a), tuple(m * x for x in self.b))


def canonical_loop(n: int, i: int) -> DynnikovCoords:
    """The round curve enclosing punctures i and i+1 (1 <= i <= n-1).

    It crosses wall i twice and no other wall, and is symmetric about the
    axis, so all a vanish and b has -1, +1 at the two neighbouring slots.
    """
    if not 1 <= i <= n - 1:
        raise ValueError(f"loop index {i} out of range 1..{n - 1}")
    a = [0] * (n - 2)
    b = [0] * (n - 2)
    if i >= 2:
        b[i - 2] = -1
    if i <= n - 2:
        b[i - 1] = 1
    return DynnikovCoords(n, tuple(a), tuple(b))


def canonical_loops(n: int) -> list[DynnikovCoords]:
    return [canonical_loop(n, i) for i in range(1, n)]


def _first_wall(n, a, b):
    """Crossings of wall 1 for the minimal multicurve with coordinates (a, b)."""
    w1 = 0
    prefix = 0  # 2 * (b_1 + ... + b_{i-1})
    for i in range(n - 2):
        bi = b[i]
        need = 2 * abs(a[i]) + (2 * bi if bi > 0 else 0) + prefix
        if need > w1:
            w1 = need
        prefix += 2 * bi
    if prefix > w1:  # wall n-1 must also be nonnegative
        w1 = prefix
    return w1


def wall_crossings(c: DynnikovCoords) -> tuple[int, ...]:
    """Crossing counts with walls 1..n-1, from the minimality recurrence."""
    w = [_first_wall(c.n, c.a, c.b)]
    for bi in c.b:
        w.append(w[-1] - 2 * bi)
    return tuple(w)


def _step(n, a, b, k, sign, exact=True):
    """Apply sigma_k^sign in place to coordinate lists a, b.

    Pairs are indexed 1..n-2; pair 0 and pair n-1 are the end regions with
    virtual coordinates (0, -w_1/2) and (0, +w_{n-1}/2).
    """
    p = k - 1
    q = k
    if p >= 1:
        ap, bp = a[p - 1], b[p - 1]
    else:
        w1 = _first_wall(n, a, b)
        ap, bp = 0, (-(w1 // 2) if exact else -w1 / 2.0)
    if q <= n - 2:
        aq, bq = a[q - 1], b[q - 1]
    else:
        wl = _first_wall(n, a, b)
        for x in b:
            wl -= 2 * x
        aq, bq = 0, (wl // 2 if exact else wl / 2.0)

    bq_pos = bq if bq > 0 else 0
    bq_neg = bq if bq < 0 else 0
    bp_pos = bp if bp > 0 else 0
    bp_neg = bp if bp < 0 else 0
    if sign > 0:
        c = ap - aq - bq_pos + bp_neg
        c_neg = c if c < 0 else 0
        t = bq_pos + c
        u = bp_neg - c
        new_ap = ap - bp_pos - (t if t > 0 else 0)
        new_bp = bq + c_neg
        new_aq = aq - bq_neg - (u if u < 0 else 0)
        new_bq = bp - c_neg
    else:
        d = ap - aq + bq_pos - bp_neg
        d_pos = d if d > 0 else 0
        t = bq_pos - d
        u = bp_neg + d
        new_ap = ap + bp_pos + (t if t > 0 else 0)
        new_bp = bq - d_pos
        new_aq = aq + bq_neg + (u if u < 0 else 0)
        new_bq = bp + d_pos
    if p >= 1:
        a[p - 1] = new_ap
        b[p - 1] = new_bp
    if q <= n - 2:
        a[q - 1] = new_aq
        b[q - 1] = new_bq


def apply_generator(c: DynnikovCoords, k: int, sign: int) -> DynnikovCoords:
    """The action of sigma_k (sign=+1) or sigma_k^-1 (sign=-1) on c."""
    if not 1 <= k <= c.n - 1:
        raise ValueError(f"generator index {k} out of range 1..{c.n - 1}")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    a = list(c.a)
    b = list(c.b)
    _step(c.n, a, b, k, sign)
    return DynnikovCoords(c.n, tuple(a), tuple(b))


def apply_braid(c: DynnikovCoords, w: BraidWord) -> DynnikovCoords:
    """Left-to-right fold of apply_generator over the letters of w."""
    if w.n != c.n:
        raise ValueError(f"strand/puncture count mismatch: {w.n} vs {c.n}")
    a = list(c.a)
    b = list(c.b)
    n = c.n
    for letter in w.letters:
        _step(n, a, b, abs(letter), 1 if letter > 0 else -1)
    return DynnikovCoords(n, tuple(a), tuple(b))


def is_trivial(w: BraidWord) -> bool:
    """Exact word problem: does w represent the identity braid?

    Checks the induced permutation, the exponent sum (which detects powers
    of the full twist, invisible to closed-curve coordinates), and that all
    canonical loops are fixed.
    """
    if w.n < 3:
        raise ValueError("triviality test needs at least 3 strands")
    if not w.letters:
        return True
    if sum(1 if k > 0 else -1 for k in w.letters) != 0:
        return False
    if not permutation_of(w).is_identity():
        return False
    return all(apply_braid(L, w) == L for L in canonical_loops(w.n))


def equal(w1: BraidWord, w2: BraidWord) -> bool:
    """Do two words represent the same braid?"""
    if w1.n != w2.n:
        raise ValueError(f"strand count mismatch: {w1.n} vs {w2.n}")
    return is_trivial(w1 * w2.inverse())


@dataclass(frozen=True)
class EntropyConfig:
    """Budget and thresholds for the iterative entropy estimator."""

    iterations: int = 200
    seeds: int = 8            # pseudo-random seed curves on top of the canonical loops
    rng_seed: int = DEFAULT_SEED
    warmup: int = 64          # exact big-integer steps (with cycle detection) before
                              # switching to the renormalized float fast path
    tail_fraction: float = 0.5
    zero_threshold: float = 0.005
    positive_threshold: float = 0.02
    positive_rel_std: float = 0.25
    decay_ratio: float = 0.9  # last-quarter vs last-half mean ratio marking polynomial growth


@dataclass(frozen=True)
class EntropyEstimate:
    """Tail growth rate of coordinate norms under iteration of one word."""

    value: float
    iterations: int
    growth_log: tuple[float, ...]  # per-step log-norm increments of the fastest seed
    verdict: EstimateVerdict
    periodic: bool = False  # every seed orbit closed up exactly

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("entropy estimate cannot be negative")


def _seed_family(n: int, count: int, rng_seed: int) -> list[DynnikovCoords]:
    seeds = canonical_loops(n)
    rng = random.Random(rng_seed)
    while len(seeds) < (n - 1) + count:
        a = tuple(rng.randint(-10, 10) for _ in range(n - 2))
        b = tuple(rng.randint(-10, 10) for _ in range(n - 2))
        if any(a) or any(b):
            seeds.append(DynnikovCoords(n, a, b))
    return seeds


def _iterate_seed(n, word, seed, iterations, warmup):
    """Growth log for one seed; returns (logs, periodic)."""
    a = list(seed.a)
    b = list(seed.b)
    norm = sum(map(abs, a)) + sum(map(abs, b))
    logs: list[float] = []
    seen = {(tuple(a), tuple(b)): 0}
    step = 0
    # exact phase with cycle detection
    while step < min(warmup, iterations):
        for letter in word:
            _step(n, a, b, abs(letter), 1 if letter > 0 else -1)
        step += 1
        key = (tuple(a), tuple(b))
        if key in seen:
            return logs, True
        seen[key] = step
        new_norm = sum(map(abs, a)) + sum(map(abs, b))
        logs.append(math.log(new_norm) - math.log(norm))
        norm = new_norm
    # float fast path: renormalize every step, accumulate the log factor
    if step < iterations:
        fa = [x / norm for x in a]
        fb = [x / norm for x in b]
        while step < iterations:
            for letter in word:
                _step(n, fa, fb, abs(letter), 1 if letter > 0 else -1, exact=False)
            step += 1
            scale = sum(map(abs, fa)) + sum(map(abs, fb))
            logs.append(math.log(scale))
            inv = 1.0 / scale
            fa = [x * inv for x in fa]
            fb = [x * inv for x in fb]
    return logs, False


def entropy_estimate(
    w: BraidWord,
    iterations: int | None = None,
    seeds: int | None = None,
    config: EntropyConfig | None = None,
) -> EntropyEstimate:
    """Estimate the topological entropy of w as the exponential growth rate
    of curve coordinates, in nats per application of the word."""
    cfg = config or EntropyConfig()
    iters = cfg.iterations if iterations is None else iterations
    n_extra = cfg.seeds if seeds is None else seeds
    if w.n < 3:
        raise ValueError("entropy estimation needs at least 3 strands")
    if iters < 10:
        raise ValueError(f"need at least 10 iterations, got {iters}")

    best_value = 0.0
    best_logs: tuple[float, ...] = ()
    best_stats = None
    all_periodic = True
    for seed in _seed_family(w.n, n_extra, cfg.rng_seed):
        logs, periodic = _iterate_seed(w.n, w.letters, seed, iters, cfg.warmup)
        if periodic:
            continue
        all_periodic = False
        tail = logs[int(len(logs) * (1.0 - cfg.tail_fraction)):]
        mean = sum(tail) / len(tail)
        if best_stats is None or mean > best_stats[0]:
            quarter = logs[(3 * len(logs)) // 4:]
            qmean = sum(quarter) / len(quarter)
            var = sum((x - mean) ** 2 for x in tail) / len(tail)
            best_stats = (mean, math.sqrt(var), qmean)
            best_logs = tuple(logs)

    if all_periodic:
        return EntropyEstimate(0.0, iters, (), EstimateVerdict.ZERO, periodic=True)

    mean, std, qmean = best_stats
    best_value = max(0.0, mean)
    if mean >= cfg.positive_threshold and std <= cfg.positive_rel_std * mean:
        verdict = EstimateVerdict.POSITIVE
    elif mean <= cfg.zero_threshold:
        verdict = EstimateVerdict.ZERO
    elif mean <= cfg.positive_threshold and qmean <= cfg.decay_ratio * mean:
        # increments keep shrinking: polynomial (twist-like) growth
        verdict = EstimateVerdict.ZERO
    else:
        verdict = EstimateVerdict.INCONCLUSIVE
    return EntropyEstimate(best_value, iters, best_logs, verdict)


_RIGOROUS_TOL = 1e-6


@dataclass(frozen=True)
class ClassifiedWord:
    """Entropy classification of a single braid word."""

    word: BraidWord
    label: Classification
    estimate: EntropyEstimate
    burau_bound: float
    exact: float | None = None  # exact entropy when available (3 strands)

    @property
    def rigorous(self) -> bool:
        return self.burau_bound > _RIGOROUS_TOL


def classify(
    w: BraidWord,
    config: EntropyConfig | None = None,
    grid: int = 64,
) -> ClassifiedWord:
    """Zero/positive entropy verdict for one word.

    On 3 strands the verdict is exact, via the integer matrix classifier in
    :mod:`solbraid.burau`; otherwise the iterative estimate decides, except
    that a positive Burau spectral bound always forces a positive verdict.
    """
    estimate = entropy_estimate(w, config=config)
    bound = burau.entropy_lower_bound(w, grid) if w.letters else 0.0
    if w.n == 3:
        exact_cls = burau.b3_exact_classify(w)
        if exact_cls.kind is burau.B3Kind.PSEUDO_ANOSOV:
            label = Classification.POSITIVE_ENTROPY
        else:
            label = Classification.ZERO_ENTROPY
        return ClassifiedWord(w, label, estimate, bound, exact=exact_cls.entropy_exact)
    if bound > _RIGOROUS_TOL or estimate.verdict is EstimateVerdict.POSITIVE:
        label = Classification.POSITIVE_ENTROPY
    elif estimate.verdict is EstimateVerdict.ZERO:
        label = Classification.ZERO_ENTROPY
    else:
        label = Classification.INCONCLUSIVE
    return ClassifiedWord(w, label, estimate, bound)
