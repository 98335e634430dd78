"""Tree families: the extremal constructions, simple shapes and seeded random samplers.

Random trees come from decoding a uniform Prüfer sequence drawn with numpy's
PCG64 generator, so a given ``(n, seed)`` yields the same labelled tree on
every platform.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import networkx as nx
import numpy as np

from .errors import BadParameter
from .tree import Tree, VertexClass, classify, in_script_t, in_script_tk, reduce_to_script_t


def rng(seed: int) -> np.random.Generator:
    if not 0 <= seed < 2**64:
        raise BadParameter(f"seed must be an unsigned 64-bit integer, got {seed}")
    return np.random.Generator(np.random.PCG64(seed))


def path(n: int) -> Tree:
    if n < 1:
        raise BadParameter(f"path needs n >= 1, got {n}")
    return Tree(n, tuple((i, i + 1) for i in range(n - 1)))


def star(leaves: int) -> Tree:
    """``K_{1,leaves}`` with centre 0."""
    if leaves < 1:
        raise BadParameter(f"star needs at least one leaf, got {leaves}")
    return Tree(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def spider(legs: Sequence[int]) -> Tree:
    """Centre 0 with one path of each given length hanging from it."""
    if any(l < 1 for l in legs):
        raise BadParameter(f"leg lengths must be positive, got {list(legs)}")
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Tree(nxt, tuple(edges))


def fig1() -> Tree:
    """11-vertex tree with domination number 5 and four eigenvalues below 1.

    Root 0 has children 1 and 2; each of those has two penultimate children
    (3, 4 and 5, 6), and each penultimate carries one leaf (7..10).
    """
    edges = [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6), (3, 7), (4, 8), (5, 9), (6, 10)]
    return Tree(11, tuple(edges))


# offsets inside one hanging subtree of the tight family
TIGHT_U, TIGHT_A, TIGHT_P1, TIGHT_L1, TIGHT_B, TIGHT_P2, TIGHT_L2, TIGHT_P3, TIGHT_L3 = range(9)


def tight43(k: int) -> Tree:
    """Root 0 with ``k`` copies of a 9-vertex subtree; ``n = 9k + 1``.

    Subtree ``i`` starts at ``base = 1 + 9i``: ``u`` hangs from the root and
    has children ``a`` and a penultimate ``p1`` (with leaf ``l1``); ``a`` has a
    single child ``b``; ``b`` has two penultimate children ``p2``, ``p3`` each
    with one leaf.
    """
    if k < 2:
        raise BadParameter(f"tight43 needs k >= 2, got {k}")
    edges = []
    for i in range(k):
        b0 = 1 + 9 * i
        u, a, p1, l1, b, p2, l2, p3, l3 = (b0 + j for j in range(9))
        edges += [(0, u), (u, a), (u, p1), (p1, l1), (a, b), (b, p2), (p2, l2), (b, p3), (p3, l3)]
    return Tree(9 * k + 1, tuple(edges))


def caterpillar(n: int) -> Tree:
    """Path ``v_1 .. v_{3n}`` plus a leaf on ``v_{3i-1}`` for ``2 <= i <= n``.

    ``v_j`` has id ``j - 1``; the added leaves get ids ``3n .. 4n - 2``.
    """
    if n < 2:
        raise BadParameter(f"caterpillar needs n >= 2, got {n}")
    edges = [(j, j + 1) for j in range(3 * n - 1)]
    for i in range(2, n + 1):
        edges.append((3 * i - 2, 3 * n + i - 2))
    return Tree(4 * n - 1, tuple(edges))


def random_tree(n: int, seed: int) -> Tree:
    """Uniform random labelled tree on ``n`` vertices."""
    if n < 1:
        raise BadParameter(f"random tree needs n >= 1, got {n}")
    if n == 1:
        return Tree(1, ())
    if n == 2:
        return Tree(2, ((0, 1),))
    seq = rng(seed).integers(0, n, size=n - 2).tolist()
    g = nx.from_prufer_sequence(seq)
    return Tree(n, tuple(g.edges()))


def random_script_t(n: int, seed: int) -> Tree:
    """Random tree with no two adjacent degree-2 vertices, on 3..n vertices.

    A uniform tree is reduced by clean-path contraction; if fewer than three
    vertices remain, leaves are attached to vertex 0 until there are three.
    """
    if n < 3:
        raise BadParameter(f"random-scriptT needs n >= 3, got {n}")
    t, _ = reduce_to_script_t(random_tree(n, seed))
    if t.n < 3:
        extra = tuple((0, v) for v in range(t.n, 3))
        t = Tree(3, t.edges + extra)
    assert in_script_t(t)
    return t


def random_tk(n: int, k: int, seed: int) -> Tree:
    """Random tree whose deep vertices all have degree at least ``k``.

    Starts from a uniform tree on ``n`` vertices; each deep vertex short of
    degree ``k`` gets extra children that each carry one leaf.  Those children
    are penultimate, so the padded vertex stays deep and no new deep vertex
    appears.
    """
    if k < 3:
        raise BadParameter(f"random-Tk needs k >= 3, got {k}")
    if n < k + 1:
        raise BadParameter(f"random-Tk needs n >= k + 1, got n={n}, k={k}")
    t = random_tree(n, seed)
    classes, _ = classify(t)
    edges = list(t.edges)
    nxt = t.n
    for v, c in enumerate(classes):
        if c is not VertexClass.DEEP:
            continue
        for _ in range(k - t.degree(v)):
            edges += [(v, nxt), (nxt, nxt + 1)]
            nxt += 2
    out = Tree(nxt, tuple(edges))
    assert in_script_tk(out, k)
    return out


FAMILIES = ("fig1", "tight43", "caterpillar", "star", "path", "spider", "random", "random-scriptT", "random-Tk")


@dataclass(frozen=True)
class FamilySpec:
    """A family tag plus its parameters, e.g. ``FamilySpec("tight43", {"k": 3})``."""

    family: str
    params: dict = field(default_factory=dict)

    def build(self) -> Tree:
        p = self.params
        f = self.family
        try:
            if f == "fig1":
                return fig1()
            if f == "tight43":
                return tight43(p["k"])
            if f == "caterpillar":
                return caterpillar(p["n"])
            if f == "star":
                return star(p["n"] - 1)
            if f == "path":
                return path(p["n"])
            if f == "spider":
                return spider(p["legs"])
            if f == "random":
                return random_tree(p["n"], p.get("seed", 0))
            if f == "random-scriptT":
                return random_script_t(p["n"], p.get("seed", 0))
            if f == "random-Tk":
                return random_tk(p["n"], p["k"], p.get("seed", 0))
        except KeyError as exc:
            raise BadParameter(f"family {f!r} needs parameter {exc.args[0]!r}") from None
        raise BadParameter(f"unknown family {f!r}; expected one of {', '.join(FAMILIES)}")


def build(family: str, **params) -> Tree:
    return FamilySpec(family, params).build()
