"""Shared fixtures, graph constructors, and hypothesis strategies."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from intorder import Graph, StrictPartialOrder, complete_graph, graph_from_edges


def single_nonedge4() -> Graph:
    """Four vertices a, b, c, d whose only non-edge is a-c."""
    return graph_from_edges(
        4, [(0, 1), (0, 3), (1, 2), (1, 3), (2, 3)], labels=("a", "b", "c", "d")
    )


def net_graph() -> Graph:
    """Triangle a, b, c with pendant vertices x, y, z; not an interval graph."""
    return graph_from_edges(
        6,
        [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)],
        labels=("a", "b", "c", "x", "y", "z"),
    )


def star3() -> Graph:
    return graph_from_edges(4, [(0, 1), (0, 2), (0, 3)])


def p4() -> Graph:
    return graph_from_edges(4, [(0, 1), (1, 2), (2, 3)])


def c4() -> Graph:
    return graph_from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


def k3() -> Graph:
    return complete_graph(3)


def two_k2() -> Graph:
    return graph_from_edges(4, [(0, 1), (2, 3)])


def empty3() -> Graph:
    return graph_from_edges(3, [])


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return graph_from_edges(n, edges)


def random_walk(g: Graph, rng: random.Random, max_steps: int | None = None) -> list[int]:
    """A walk with adjacent distinct consecutive vertices (revisits allowed)."""
    walk = [rng.randrange(g.n)]
    steps = rng.randint(0, max_steps if max_steps is not None else 2 * g.n)
    for _ in range(steps):
        nbrs = sorted(g.neighbors(walk[-1]))
        if not nbrs:
            break
        walk.append(rng.choice(nbrs))
    return walk


@st.composite
def graphs(draw, max_n: int = 8):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return graph_from_edges(n, sorted(chosen))


@st.composite
def partial_orders(draw, max_n: int = 7):
    """Arbitrary strict partial orders via a random topological layout."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    layout = draw(st.permutations(range(n)))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    rel: set[tuple[int, int]] = set()
    for i, j in chosen:
        rel.add((layout[i], layout[j]))
    # close transitively; the layout keeps the relation acyclic
    changed = True
    while changed:
        changed = False
        extra = {
            (a, d)
            for a, b in rel
            for c, d in rel
            if b == c and (a, d) not in rel
        }
        if extra:
            rel |= extra
            changed = True
    return StrictPartialOrder(n, frozenset(rel))
