"""
Canonical fixed point of a finite tree: the balanced-edge midpoint or the
unique sink vertex of the majority orientation.

Orient each edge toward the side holding more than half of the vertices.
Either some edge splits the tree exactly in half (there can be at most one
such edge, and its midpoint is fixed by every automorphism), or the
orientation has a unique sink vertex, which every automorphism fixes.
This coincides with the classical centroid (minimizing the largest
component after removal); subtree sizes come from a single rooted pass.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

__all__ = [
    "Tree",
    "CenterKind",
    "CenterPoint",
    "MajorityOrientation",
    "orient_majority",
    "canonical_center",
    "verify_fixed",
]

Edge = frozenset


@dataclass(frozen=True)
class Tree:
    vertices: frozenset
    edges: frozenset  # of 2-element frozensets

    def __post_init__(self):
        if not self.vertices:
            raise ValueError("tree needs at least one vertex")
        for e in self.edges:
            if len(e) != 2 or not e <= self.vertices:
                raise ValueError(f"bad edge {set(e)}")
        if len(self.edges) != len(self.vertices) - 1:
            raise ValueError("edge count must be vertex count - 1")
        if len(self._component(next(iter(self.vertices)))) != len(self.vertices):
            raise ValueError("tree must be connected")

    @classmethod
    def from_edges(cls, pairs) -> Tree:
        edges = frozenset(frozenset(p) for p in pairs)
        vertices = frozenset(v for e in edges for v in e)
        return cls(vertices, edges)

    @classmethod
    def single_vertex(cls, v) -> Tree:
        return cls(frozenset([v]), frozenset())

    @classmethod
    def parse_edge_list(cls, text: str) -> Tree:
        """One edge per line, two whitespace-separated vertex names."""
        pairs = []
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(f"bad edge line: {line!r}")
            pairs.append(tuple(parts))
        if not pairs:
            raise ValueError("no edges found")
        return cls.from_edges(pairs)

    def adjacency(self) -> dict:
        adj = {v: [] for v in self.vertices}
        for e in self.edges:
            u, v = tuple(e)
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def _component(self, start) -> set:
        adj = self.adjacency()
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return seen


class CenterKind(Enum):
    VERTEX = "VERTEX"
    EDGE_MIDPOINT = "EDGE_MIDPOINT"


@dataclass(frozen=True)
class CenterPoint:
    kind: CenterKind
    vertex: object = None
    edge: frozenset | None = None


@dataclass(frozen=True)
class MajorityOrientation:
    """Per-edge direction (u, v) pointing at the majority side, or the balanced edge."""

    directed: tuple  # of ((u, v)) pairs, empty when balanced
    balanced: frozenset | None


def _subtree_sizes(tree: Tree, root):
    """Iterative post-order: size[v] = vertices in the subtree under v."""
    adj = tree.adjacency()
    parent = {root: None}
    order = [root]
    stack = [root]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in parent:
                parent[v] = u
                order.append(v)
                stack.append(v)
    size = {v: 1 for v in tree.vertices}
    for v in reversed(order[1:]):
        size[parent[v]] += size[v]
    return parent, size


def orient_majority(tree: Tree) -> MajorityOrientation:
    """Direct each edge toward its heavier side; report the balanced edge if any."""
    if len(tree.vertices) < 2:
        raise ValueError("orientation needs at least one edge")
    total = len(tree.vertices)
    root = next(iter(tree.vertices))
    parent, size = _subtree_sizes(tree, root)
    directed = []
    balanced = None
    for v, p in parent.items():
        if p is None:
            continue
        below = size[v]            # side containing v
        above = total - below      # side containing p
        if below * 2 == total:
            # the split is exactly even; such an edge is unique
            assert balanced is None, "two balanced edges in one tree"
            balanced = frozenset((p, v))
        elif below * 2 > total:
            directed.append((p, v))
        else:
            directed.append((v, p))
    if balanced is not None:
        return MajorityOrientation((), balanced)
    return MajorityOrientation(tuple(directed), None)


def canonical_center(tree: Tree) -> CenterPoint:
    """The automorphism-fixed point: a vertex or an edge midpoint."""
    if len(tree.vertices) == 1:
        return CenterPoint(CenterKind.VERTEX, vertex=next(iter(tree.vertices)))
    orientation = orient_majority(tree)
    if orientation.balanced is not None:
        return CenterPoint(CenterKind.EDGE_MIDPOINT, edge=orientation.balanced)
    outgoing = {u for (u, _) in orientation.directed}
    sinks = tree.vertices - outgoing
    assert len(sinks) == 1, f"majority orientation has {len(sinks)} sinks"
    return CenterPoint(CenterKind.VERTEX, vertex=next(iter(sinks)))


def _is_automorphism(tree: Tree, mapping: dict) -> bool:
    if set(mapping) != set(tree.vertices) or set(mapping.values()) != set(tree.vertices):
        return False
    return all(frozenset((mapping[u], mapping[v])) in tree.edges for u, v in
               (tuple(e) for e in tree.edges))


def verify_fixed(tree: Tree, autos, center: CenterPoint | None = None) -> bool:
    """Is the canonical center fixed by every given automorphism?

    Vertex centers must be fixed pointwise, edge centers setwise.  Raises
    ValueError if a mapping is not an automorphism of the tree.
    """
    if center is None:
        center = canonical_center(tree)
    for phi in autos:
        if not _is_automorphism(tree, phi):
            raise ValueError("mapping is not a tree automorphism")
        if center.kind is CenterKind.VERTEX:
            if phi[center.vertex] != center.vertex:
                return False
        else:
            u, v = tuple(center.edge)
            if frozenset((phi[u], phi[v])) != center.edge:
                return False
    return True
