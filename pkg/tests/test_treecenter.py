import itertools
import random

import pytest

from solbraid.treecenter import (
    CenterKind,
    Tree,
    canonical_center,
    orient_majority,
    verify_fixed,
)


def path(k):
    return Tree.from_edges([(i, i + 1) for i in range(1, k)])


def star(leaves):
    return Tree.from_edges([(0, i) for i in range(1, leaves + 1)])


def random_tree(rng, size):
    """Uniform random labelled tree from a random parent sequence."""
    if size == 1:
        return Tree.single_vertex(0)
    edges = [(rng.randrange(i), i) for i in range(1, size)]
    return Tree.from_edges(edges)


def centroid_oracle(tree):
    """Brute force: max component size after removing each vertex."""
    adj = tree.adjacency()
    total = len(tree.vertices)
    scores = {}
    for v in tree.vertices:
        best = 0
        seen = {v}
        for w in adj[v]:
            if w in seen:
                continue
            stack = [w]
            comp = 0
            seen.add(w)
            while stack:
                x = stack.pop()
                comp += 1
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            best = max(best, comp)
        scores[v] = best
    low = min(scores.values())
    return {v for v, s in scores.items() if s == low}


def check_against_oracle(tree):
    centroids = centroid_oracle(tree)
    center = canonical_center(tree)
    if len(centroids) == 2:
        assert center.kind is CenterKind.EDGE_MIDPOINT
        assert center.edge == frozenset(centroids)
    else:
        assert center.kind is CenterKind.VERTEX
        assert {center.vertex} == centroids


def test_tree_validation():
    with pytest.raises(ValueError):
        Tree.from_edges([(1, 2), (3, 4)])  # disconnected
    with pytest.raises(ValueError):
        Tree(frozenset([1, 2, 3]), frozenset([frozenset([1, 2]), frozenset([2, 3]),
                                              frozenset([1, 3])]))  # cycle
    with pytest.raises(ValueError):
        Tree(frozenset(), frozenset())


def test_parse_edge_list():
    tree = Tree.parse_edge_list("a b\nb c\n\n# comment\nc d\n")
    assert len(tree.vertices) == 4
    with pytest.raises(ValueError):
        Tree.parse_edge_list("a b c\n")
    with pytest.raises(ValueError):
        Tree.parse_edge_list("")


def test_orient_two_vertex_tree_is_balanced():
    o = orient_majority(path(2))
    assert o.balanced == frozenset((1, 2))
    assert o.directed == ()


def test_orient_three_path_points_to_middle():
    o = orient_majority(path(3))
    assert o.balanced is None
    assert set(o.directed) == {(1, 2), (3, 2)}


def test_orient_star_points_to_hub():
    o = orient_majority(star(4))
    assert o.balanced is None
    assert set(o.directed) == {(i, 0) for i in range(1, 5)}


def test_center_of_four_path_is_middle_edge():
    center = canonical_center(path(4))
    assert center.kind is CenterKind.EDGE_MIDPOINT
    assert center.edge == frozenset((2, 3))


def test_center_of_three_path_is_middle_vertex():
    center = canonical_center(path(3))
    assert center.kind is CenterKind.VERTEX
    assert center.vertex == 2


def test_center_of_single_vertex():
    center = canonical_center(Tree.single_vertex("x"))
    assert center.kind is CenterKind.VERTEX
    assert center.vertex == "x"


def test_center_matches_oracle_on_random_trees():
    rng = random.Random(123)
    for _ in range(400):
        check_against_oracle(random_tree(rng, rng.randint(1, 50)))


def test_verify_fixed_swap_on_edge():
    tree = path(2)
    assert verify_fixed(tree, [{1: 2, 2: 1}])


def test_verify_fixed_reflection_of_path():
    tree = path(3)
    assert verify_fixed(tree, [{1: 3, 2: 2, 3: 1}])


def test_verify_fixed_rejects_non_automorphism():
    tree = path(3)
    with pytest.raises(ValueError):
        verify_fixed(tree, [{1: 2, 2: 1, 3: 3}])


def brute_force_automorphisms(tree):
    vertices = sorted(tree.vertices)
    autos = []
    for images in itertools.permutations(vertices):
        phi = dict(zip(vertices, images))
        if all(frozenset((phi[u], phi[v])) in tree.edges
               for u, v in (tuple(e) for e in tree.edges)):
            autos.append(phi)
    return autos


def test_center_fixed_by_all_automorphisms_small_trees():
    rng = random.Random(7)
    for _ in range(60):
        tree = random_tree(rng, rng.randint(1, 7))
        autos = brute_force_automorphisms(tree)
        assert verify_fixed(tree, autos)
