"""
Finite permutation groups given by explicit element sets.

The degrees in play here are tiny (punctures of a disk, <= 8 or so), so
groups are stored as literal frozensets of permutations and the closure,
derived series, and solvability questions are answered by exhaustion; no
stabilizer-chain machinery.  The closure construction aborts with
:class:`ClosureBoundExceeded` above a configurable element bound.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braids import Permutation

__all__ = [
    "PermGroup",
    "DerivedSeries",
    "ClosureBoundExceeded",
    "UNSOLVABLE",
    "generate_closure",
    "derived_series",
    "is_solvable",
    "derived_length",
    "orbits",
]

DEFAULT_BOUND = 40320  # 8!


class ClosureBoundExceeded(ValueError):
    """The generated group is larger than the configured element bound."""


class _UnsolvableType:
    __slots__ = ()

    def __repr__(self):
        return "UNSOLVABLE"


#: Distinguished return of :func:`derived_length` for non-solvable groups.
UNSOLVABLE = _UnsolvableType()


@dataclass(frozen=True)
class PermGroup:
    """A permutation group as an explicit set of elements."""

    degree: int
    elements: frozenset[Permutation]
    generators: tuple[Permutation, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def is_trivial(self) -> bool:
        return self.order == 1

    def __contains__(self, p: Permutation) -> bool:
        return p in self.elements


@dataclass(frozen=True)
class DerivedSeries:
    """Descending chain G >= [G,G] >= ... until trivial or stable."""

    groups: tuple[PermGroup, ...]
    terminated: bool  # True when the last group is trivial


def _raw_closure(gen_tuples, degree, bound):
    """BFS closure on raw 1-based image tuples."""
    identity = tuple(range(1, degree + 1))
    elements = {identity}
    frontier = [identity]
    while frontier:
        new_frontier = []
        for p in frontier:
            for g in gen_tuples:
                q = tuple(g[x - 1] for x in p)
                if q not in elements:
                    elements.add(q)
                    if len(elements) > bound:
                        raise ClosureBoundExceeded(
                            f"group order exceeds bound {bound}; "
                            "explicit closure is only meant for small degree"
                        )
                    new_frontier.append(q)
        frontier = new_frontier
    return elements


def generate_closure(
    gens: list[Permutation] | tuple[Permutation, ...],
    bound: int = DEFAULT_BOUND,
) -> PermGroup:
    """Breadth-first closure of the generators under composition."""
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    gens = tuple(gens)
    degrees = {g.degree for g in gens}
    if len(degrees) > 1:
        raise ValueError(f"generators of mixed degree: {sorted(degrees)}")
    degree = degrees.pop() if degrees else 1
    elements = _raw_closure([g.images for g in gens], degree, bound)
    return PermGroup(degree, frozenset(Permutation(t) for t in elements), gens)


def commutator_subgroup(G: PermGroup) -> PermGroup:
    """Closure of all commutators a^-1 b^-1 a b of elements of G."""
    degree = G.degree
    elems = [p.images for p in G.elements]
    inverses = {}
    for p in elems:
        inv = [0] * degree
        for i, img in enumerate(p, start=1):
            inv[img - 1] = i
        inverses[p] = tuple(inv)
    coms = set()
    for a in elems:
        a_inv = inverses[a]
        for b in elems:
            b_inv = inverses[b]
            # x -> b(a(b^-1(a^-1(x)))), built as one indexing chain
            coms.add(tuple(b[a[b_inv[a_inv[x - 1] - 1] - 1] - 1]
                           for x in range(1, degree + 1)))
    closed = _raw_closure(sorted(coms), degree, bound=G.order)
    gens = tuple(Permutation(t) for t in sorted(coms))
    return PermGroup(degree, frozenset(Permutation(t) for t in closed), gens)


def derived_series(G: PermGroup) -> DerivedSeries:
    """Iterate the commutator subgroup until it is trivial or stabilizes."""
    chain = [G]
    while True:
        nxt = commutator_subgroup(chain[-1])
        if nxt.order == chain[-1].order:
            # stabilized; trivial iff the group already was
            return DerivedSeries(tuple(chain), terminated=chain[-1].is_trivial())
        chain.append(nxt)
        if nxt.is_trivial():
            return DerivedSeries(tuple(chain), terminated=True)


def is_solvable(G: PermGroup) -> bool:
    return derived_series(G).terminated


def derived_length(G: PermGroup):
    """Number of derived-series steps to reach the trivial group, or UNSOLVABLE."""
    series = derived_series(G)
    if not series.terminated:
        return UNSOLVABLE
    return len(series.groups) - 1


def orbits(G: PermGroup) -> list[tuple[int, ...]]:
    """Orbit partition of {1..degree} under the natural action, sorted."""
    remaining = set(range(1, G.degree + 1))
    out = []
    while remaining:
        start = min(remaining)
        orbit = {start}
        frontier = [start]
        while frontier:
            x = frontier.pop()
            for g in G.elements:
                y = g.of(x)
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        out.append(tuple(sorted(orbit)))
        remaining -= orbit
    return out
