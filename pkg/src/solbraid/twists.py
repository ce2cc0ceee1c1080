"""
The abelian group of generalized annulus twists and the free-abelian
lattice of twist powers.

A twist is the map (x, t) |-> (x + a t + b, t) of the annulus T^1 x [0,1]
with rational a, b; composition adds the parameters, so twists about one
annulus form a group isomorphic to (Q^2, +).  Both boundary restrictions
are rational rotations (by b and a + b), hence of finite order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import NamedTuple

__all__ = [
    "Twist",
    "BoundaryBehavior",
    "TwistLattice",
    "twist_compose",
    "twist_inverse",
    "boundary_behavior",
    "lattice_embed",
]

RationalLike = int | str | Fraction


@dataclass(frozen=True)
class Twist:
    """x |-> x + a t + b on the annulus; essential iff a != 0."""

    a: Fraction
    b: Fraction

    def __init__(self, a: RationalLike, b: RationalLike):
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))

    @property
    def essential(self) -> bool:
        return self.a != 0


class BoundaryBehavior(NamedTuple):
    rotation0: Fraction  # rotation on the t = 0 circle, mod 1
    rotation1: Fraction  # rotation on the t = 1 circle, mod 1
    order: int           # common finite order of the two rotations


def twist_compose(t1: Twist, t2: Twist) -> Twist:
    return Twist(t1.a + t2.a, t1.b + t2.b)


def twist_inverse(t: Twist) -> Twist:
    return Twist(-t.a, -t.b)


def boundary_behavior(t: Twist) -> BoundaryBehavior:
    r0 = t.b % 1
    r1 = (t.a + t.b) % 1
    return BoundaryBehavior(r0, r1, lcm(r0.denominator, r1.denominator))


@dataclass(frozen=True)
class TwistLattice:
    """Formal powers of twists about `rank` disjoint annuli; composition adds."""

    rank: int

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")

    def zero(self) -> tuple[int, ...]:
        return (0,) * self.rank

    def embed(self, powers) -> tuple[int, ...]:
        return lattice_embed(powers, self.rank)

    def add(self, v1, v2) -> tuple[int, ...]:
        if len(v1) != self.rank or len(v2) != self.rank:
            raise ValueError("vector length must equal the lattice rank")
        return tuple(x + y for x, y in zip(v1, v2))


def lattice_embed(powers, rank: int) -> tuple[int, ...]:
    """Sum a list of (annulus index, integer power) into a rank-vector."""
    vec = [0] * rank
    for index, power in powers:
        if not 0 <= index < rank:
            raise ValueError(f"annulus index {index} out of range for rank {rank}")
        vec[index] += power
    return tuple(vec)
