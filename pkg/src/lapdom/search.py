"""Randomised local search for trees with a large gamma/mu ratio."""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .domination import gamma_dp
from .generators import random_tree, rng as make_rng
from .inertia import mu
from .report import rational_json
from .tree import Tree

CEILING = Fraction(4, 3)


def gamma_mu_ratio(t: Tree) -> Fraction:
    return Fraction(gamma_dp(t)[0], mu(t))


def _side(t: Tree, start: int, cut: tuple[int, int]) -> set[int]:
    """Vertices reachable from ``start`` once edge ``cut`` is removed."""
    a, b = cut
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for v in t.adj[u]:
            if (u, v) in ((a, b), (b, a)) or v in seen:
                continue
            seen.add(v)
            stack.append(v)
    return seen


def mutate(t: Tree, gen) -> Tree:
    """Cut a random edge and regraft the detached side onto a random vertex of the rest."""
    if t.n < 3:
        return t
    edges = list(t.edges)
    i = int(gen.integers(len(edges)))
    u, v = edges[i]
    if gen.random() < 0.5:
        u, v = v, u
    moved = _side(t, v, (u, v))
    rest = [x for x in range(t.n) if x not in moved]
    target = rest[int(gen.integers(len(rest)))]
    anchor = v
    if gen.random() < 0.5:
        side = sorted(moved)
        anchor = side[int(gen.integers(len(side)))]
    edges[i] = (target, anchor)
    return Tree(t.n, tuple(edges))


def search(n: int = 30, iters: int = 1000, seed: int = 0, start: Optional[Tree] = None) -> dict:
    """Hill-climb on gamma/mu from ``start`` (or a random tree on ``n`` vertices).

    A mutation is kept when it does not lower the ratio.  The result records
    every improvement of the best ratio and whether any tree reached 4/3.
    """
    gen = make_rng(seed)
    cur = start if start is not None else random_tree(n, seed)
    cur_ratio = gamma_mu_ratio(cur)
    best, best_ratio = cur, cur_ratio
    trajectory = [{"iter": 0, "ratio": rational_json(best_ratio)}]
    for it in range(1, iters + 1):
        cand = mutate(cur, gen)
        r = gamma_mu_ratio(cand)
        if r >= cur_ratio:
            cur, cur_ratio = cand, r
            if r > best_ratio:
                best, best_ratio = cand, r
                trajectory.append({"iter": it, "ratio": rational_json(r)})
    return {
        "n": best.n,
        "iters": iters,
        "seed": seed,
        "best_ratio": rational_json(best_ratio),
        "best_gamma": gamma_dp(best)[0],
        "best_mu": mu(best),
        "best_edges": [list(e) for e in best.edges],
        "trajectory": trajectory,
        "below_ceiling": best_ratio < CEILING,
    }
