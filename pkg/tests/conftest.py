import itertools
import random

import pytest

from amplify.graphs import AmplifiedGraph, parse_graph

G1 = "vertex a\n"
G2 = "vertex a\nvertex b\nedge a b\n"
G3 = "vertex a\nvertex b\nvertex c\nedge a b\nedge b c\n"
G4 = "vertex a\nedge a a\n"
G5 = "vertex a\nvertex b\nvertex c\nedge a b\n"
TRIANGLE = "vertex a\nvertex b\nvertex c\nedge a b\nedge b c\nedge a c\n"


@pytest.fixture
def g1():
    return parse_graph(G1)


@pytest.fixture
def g2():
    return parse_graph(G2)


@pytest.fixture
def g3():
    return parse_graph(G3)


@pytest.fixture
def g4():
    return parse_graph(G4)


@pytest.fixture
def g5():
    return parse_graph(G5)


@pytest.fixture
def triangle():
    return parse_graph(TRIANGLE)


def make_graph(rows, prefix="x"):
    n = len(rows)
    return AmplifiedGraph(tuple(f"{prefix}{i}" for i in range(n)), tuple(rows))


def random_graph(rng: random.Random, n: int, density: float = 0.5, prefix="x"):
    rows = []
    for _ in range(n):
        row = 0
        for w in range(n):
            if rng.random() < density:
                row |= 1 << w
        rows.append(row)
    return make_graph(rows, prefix=prefix)


def all_graphs(n, prefix="x"):
    """Every labeled graph on n vertices (2^(n*n) of them)."""
    for packed in range(1 << (n * n)):
        mask = (1 << n) - 1
        rows = tuple((packed >> (n * i)) & mask for i in range(n))
        yield make_graph(rows, prefix=prefix)


def brute_force_isomorphism(g, h):
    """Exhaustive bijection search; the test oracle for the pruned search."""
    n = g.vertex_count
    if h.vertex_count != n:
        return None
    for perm in itertools.permutations(range(n)):
        if all(
            g.has_edge(v, w) == h.has_edge(perm[v], perm[w])
            for v in range(n)
            for w in range(n)
        ):
            return perm
    return None
