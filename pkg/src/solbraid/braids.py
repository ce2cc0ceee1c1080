"""
Braid words on n strands, written in the Artin generators.

A word is a finite sequence of nonzero integers: the letter k (with
1 <= |k| <= n-1) stands for sigma_|k| if k > 0 and sigma_|k|^-1 if k < 0.
Words act left to right everywhere in this package: in w1 * w2 the letters
of w1 are applied first.  Composition is plain concatenation; no free
reduction is ever performed here, so this module is a free-monoid layer.
Equality of the underlying group elements is decided in
:mod:`solbraid.dynnikov`.

Strand positions are numbered 1..n.  The induced permutation sends
sigma_k to the transposition (k, k+1); the sign of a letter is irrelevant
to the permutation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass


_TOKEN_RE = re.compile(r"^s(\d+)(\^-1)?$")


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n}; images[i-1] is the image of i."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, k: int) -> Permutation:
        """The transposition (k, k+1) in degree n."""
        if not 1 <= k <= n - 1:
            raise ValueError(f"transposition index {k} out of range for degree {n}")
        images = list(range(1, n + 1))
        images[k - 1], images[k] = images[k], images[k - 1]
        return cls(tuple(images))

    @classmethod
    def from_cycles(cls, text: str, n: int) -> Permutation:
        """Parse cycle notation like "(1 2)(3 4 5)"; "()" is the identity."""
        stripped = text.replace(",", " ").strip()
        if not re.fullmatch(r"(\(\s*(\d+(\s+\d+)*)?\s*\)\s*)*", stripped):
            raise ValueError(f"malformed cycle notation: {text!r}")
        images = list(range(1, n + 1))
        for cyc in re.findall(r"\(([^()]*)\)", stripped):
            entries = [int(tok) for tok in cyc.split()]
            if len(set(entries)) != len(entries):
                raise ValueError(f"repeated element in cycle: ({cyc})")
            for e in entries:
                if not 1 <= e <= n:
                    raise ValueError(f"cycle entry {e} out of range 1..{n}")
            for i, e in enumerate(entries):
                images[e - 1] = entries[(i + 1) % len(entries)]
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def of(self, i: int) -> int:
        return self.images[i - 1]

    def then(self, other: Permutation) -> Permutation:
        """Composite 'self first, then other'."""
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        return Permutation(tuple(other.images[i - 1] for i in self.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(img == i for i, img in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest element."""
        seen: set[int] = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen or self.of(start) == start:
                continue
            cyc = [start]
            seen.add(start)
            j = self.of(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self.of(j)
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)


@dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators of the braid group on n strands."""

    n: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"strand count must be >= 2, got {self.n}")
        for k in self.letters:
            if k == 0 or abs(k) > self.n - 1:
                raise ValueError(
                    f"letter {k} out of range for {self.n} strands (need 1 <= |k| <= {self.n - 1})"
                )

    @classmethod
    def identity(cls, n: int) -> BraidWord:
        return cls(n, ())

    @classmethod
    def parse(cls, text: str, n: int) -> BraidWord:
        """Parse whitespace-separated signed integers or s<k> / s<k>^-1 tokens."""
        letters = []
        for tok in text.split():
            m = _TOKEN_RE.match(tok)
            if m:
                k = int(m.group(1))
                letters.append(-k if m.group(2) else k)
                continue
            try:
                letters.append(int(tok))
            except ValueError:
                raise ValueError(f"malformed braid letter {tok!r}") from None
        return cls(n, tuple(letters))

    def __str__(self) -> str:
        return " ".join(str(k) for k in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return compose(self, other)

    def compose(self, other: BraidWord) -> BraidWord:
        return compose(self, other)

    def inverse(self) -> BraidWord:
        return inverse(self)

    def permutation(self) -> Permutation:
        return permutation_of(self)

    def exponent_sum(self) -> int:
        return exponent_sum(self)


def compose(w1: BraidWord, w2: BraidWord) -> BraidWord:
    """Concatenation w1·w2 (w1's letters apply first)."""
    if w1.n != w2.n:
        raise ValueError(f"strand count mismatch: {w1.n} vs {w2.n}")
    return BraidWord(w1.n, w1.letters + w2.letters)


def inverse(w: BraidWord) -> BraidWord:
    """The reversed word with negated letters."""
    return BraidWord(w.n, tuple(-k for k in reversed(w.letters)))


def permutation_of(w: BraidWord) -> Permutation:
    """Induced permutation of strand endpoints, letters applied left to right."""
    images = list(range(1, w.n + 1))
    for letter in w.letters:
        k = abs(letter)
        # post-compose with (k, k+1): swap the two values k, k+1 wherever they sit
        for i, img in enumerate(images):
            if img == k:
                images[i] = k + 1
            elif img == k + 1:
                images[i] = k
    return Permutation(tuple(images))


def exponent_sum(w: BraidWord) -> int:
    """Sum of letter signs; the abelianization of the word."""
    return sum(1 if k > 0 else -1 for k in w.letters)


def linking_matrix(w: BraidWord) -> tuple[tuple[int, ...], ...]:
    """
    Pairwise linking numbers of a pure braid: entry (i, j) is half the signed
    count of crossings between the strands starting at positions i and j.

    Strand identities are tracked by simulating positions through the word;
    each crossing contributes +-1 to the pair involved, and the total for
    every pair is even exactly when the braid is pure.
    """
    perm = permutation_of(w)
    if not perm.is_identity():
        raise ValueError(f"linking matrix needs a pure braid; permutation is {perm}")
    n = w.n
    half = [[0] * n for _ in range(n)]
    strand_at = list(range(n))  # strand_at[pos-1] = strand id (0-based)
    for letter in w.letters:
        k = abs(letter)
        s = 1 if letter > 0 else -1
        a, b = strand_at[k - 1], strand_at[k]
        half[a][b] += s
        half[b][a] += s
        strand_at[k - 1], strand_at[k] = b, a
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            q, r = divmod(half[i][j], 2)
            assert r == 0, "odd crossing count on a pure braid"
            row.append(q)
        out.append(tuple(row))
    return tuple(out)
