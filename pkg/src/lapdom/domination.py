"""Dominating sets of trees.

Two exact methods (a three-state tree DP and exhaustive search) serve as
oracles for three constructive bottom-up methods: the plain greedy, the
weight-propagation construction that runs alongside the eigenvalue
recurrence at ``alpha = -1`` (``alg2``), and the simpler penultimate-weight
construction for trees with high-degree deep vertices (``alg3``).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional

from .errors import NotInScriptT, NotInScriptTk, TooLarge
from .tree import (
    RootedTree,
    Tree,
    VertexClass,
    adjacent_degree2_pairs,
    classify,
    deep_vertices_below,
    root_at,
)

BRUTE_FORCE_MAX_N = 20
FOUR_THIRDS = Fraction(4, 3)
ONE_THIRD = Fraction(1, 3)


def is_dominating(t: Tree, members: Iterable[int]) -> bool:
    """True iff every vertex is in ``members`` or adjacent to a member."""
    covered = [False] * t.n
    for v in members:
        covered[v] = True
        for u in t.adj[v]:
            covered[u] = True
    return all(covered)


def undominated(t: Tree, members: Iterable[int]) -> list[int]:
    ms = set(members)
    return [v for v in range(t.n) if v not in ms and not any(u in ms for u in t.adj[v])]


@dataclass(frozen=True)
class TraceEntry:
    """State of one vertex at the moment the algorithm decided on it.

    ``weight`` is the weight held at decision time, ``pushed`` what went to
    the parent (``None`` at the root), ``f`` the recurrence value after the
    update where the method tracks one.
    """

    vertex: int
    added: bool
    weight: Optional[Fraction] = None
    pushed: Optional[Fraction] = None
    f: Optional[Fraction] = None
    zero_child_branch: bool = False


@dataclass(frozen=True)
class DominationCertificate:
    members: frozenset[int]
    method: str
    root: Optional[int] = None
    trace: tuple[TraceEntry, ...] = ()
    params: dict = field(default_factory=dict, compare=False)

    @property
    def size(self) -> int:
        return len(self.members)

    def replay(self) -> frozenset[int]:
        """Members recovered from the trace alone."""
        return frozenset(e.vertex for e in self.trace if e.added)

    def to_dict(self) -> dict:
        from .report import rational_json

        d = {
            "method": self.method,
            "members": sorted(self.members),
            "size": self.size,
            "root": self.root,
            "params": {k: rational_json(v) if isinstance(v, Fraction) else v for k, v in self.params.items()},
        }
        if self.trace:
            d["trace"] = [
                {
                    "vertex": e.vertex,
                    "added": e.added,
                    "weight": rational_json(e.weight),
                    "pushed": rational_json(e.pushed),
                    "f": rational_json(e.f),
                    "zero_child_branch": e.zero_child_branch,
                }
                for e in self.trace
            ]
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


# --------------------------------------------------------------------------
# exact oracles

_INF = math.inf


def gamma_dp(t: Tree) -> tuple[int, frozenset[int]]:
    """Domination number and one minimum dominating set, by tree DP.

    For each vertex (rooted at 0) three costs are kept: ``v`` in the set;
    ``v`` outside but dominated by a child; ``v`` outside and still waiting
    for its parent.  Ties prefer "outside", then smaller ids.
    """
    rt = root_at(t, 0)
    n = t.n
    cin = [0] * n
    cdom = [0.0] * n
    cwait = [0.0] * n
    for v in rt.order:
        kids = rt.children[v]
        cin[v] = 1 + sum(min(cin[c], cdom[c], cwait[c]) for c in kids)
        cwait[v] = sum(cdom[c] for c in kids) if kids else 0
        if kids:
            base = sum(min(cin[c], cdom[c]) for c in kids)
            extra = min(cin[c] - min(cin[c], cdom[c]) for c in kids)
            cdom[v] = base + extra
        else:
            cdom[v] = _INF

    IN, DOM, WAIT = 0, 1, 2
    state = [0] * n
    r = rt.root
    state[r] = DOM if cdom[r] <= cin[r] else IN
    for v in reversed(rt.order):
        kids = rt.children[v]
        s = state[v]
        if s == IN:
            for c in kids:
                best = min(cin[c], cdom[c], cwait[c])
                state[c] = WAIT if cwait[c] == best else DOM if cdom[c] == best else IN
        elif s == WAIT:
            for c in kids:
                state[c] = DOM
        else:
            forced = None
            if not any(cin[c] < cdom[c] for c in kids):
                forced = min(kids, key=lambda c: (cin[c] - cdom[c], c))
            for c in kids:
                state[c] = IN if (c == forced or cin[c] < cdom[c]) else DOM
    members = frozenset(v for v in range(n) if state[v] == IN)
    size = int(min(cin[r], cdom[r]))
    assert len(members) == size
    return size, members


def gamma_bruteforce(t: Tree) -> int:
    """Smallest dominating set size by exhaustive search (``n <= 20``)."""
    return len(bruteforce_dominating_set(t))


def bruteforce_dominating_set(t: Tree) -> frozenset[int]:
    """First minimum dominating set in (size, lexicographic) order."""
    if t.n > BRUTE_FORCE_MAX_N:
        raise TooLarge(f"brute force is limited to n <= {BRUTE_FORCE_MAX_N}, got {t.n}")
    full = (1 << t.n) - 1
    closed = [(1 << v) | sum(1 << u for u in t.adj[v]) for v in range(t.n)]
    for size in range(1, t.n + 1):
        for combo in combinations(range(t.n), size):
            mask = 0
            for v in combo:
                mask |= closed[v]
            if mask == full:
                return frozenset(combo)
    raise AssertionError("unreachable: the full vertex set dominates")


# --------------------------------------------------------------------------
# constructive methods

def greedy_dominating(t: Tree, root: int = 0) -> DominationCertificate:
    """Bottom-up greedy: take a vertex whenever one of its children is undominated.

    The root is added at the end if it is still undominated.
    """
    rt = root_at(t, root)
    dominated = [False] * t.n
    members = set()
    trace = []

    def take(v):
        members.add(v)
        dominated[v] = True
        for u in t.adj[v]:
            dominated[u] = True

    for v in rt.order:
        add = any(not dominated[c] for c in rt.children[v])
        if add:
            take(v)
        trace.append(TraceEntry(v, add))
    if not dominated[rt.root]:
        take(rt.root)
        trace.append(TraceEntry(rt.root, True))
    return DominationCertificate(frozenset(members), "greedy", root=rt.root, trace=tuple(trace))


def _trivial(t: Tree, method: str) -> DominationCertificate:
    return DominationCertificate(frozenset({0}), method, root=0, trace=(TraceEntry(0, True),))


def _penultimate_root(t: Tree) -> tuple[RootedTree, list[VertexClass]]:
    classes, _ = classify(t)
    r = next(v for v, c in enumerate(classes) if c is VertexClass.PENULTIMATE)
    return root_at(t, r), classes


def alg2_dominating(t: Tree, bonus: str = "zero-branch") -> DominationCertificate:
    """Weight-propagation dominating set for trees without adjacent degree-2 vertices.

    Runs the eigenvalue recurrence at ``alpha = -1`` from a penultimate root
    (smallest id).  Penultimate vertices start with weight 4/3, all others 0.
    A vertex joins the set when its weight is at least 4/3 (or its value is 0
    and its weight at least 1) and some child is still undominated; members
    pass ``w - 1`` to the parent, everyone else passes ``w``.

    ``bonus`` selects when a vertex gains one unit of weight:

    * ``"zero-branch"`` -- whenever it takes the zero-child branch, penultimate
      vertices included.
    * ``"negative"`` -- whenever its value ends negative, except penultimate
      vertices, whose 4/3 start already counts it.  Total injected weight is
      then exactly ``4/3 p + (mu - p)``.

    For ``n <= 2`` a single vertex is returned.
    """
    if bonus not in ("zero-branch", "negative"):
        raise ValueError(f"unknown bonus rule {bonus!r}")
    if t.n <= 2:
        return _trivial(t, "alg2")
    bad = adjacent_degree2_pairs(t)
    if bad:
        raise NotInScriptT(f"adjacent degree-2 vertices: {bad}", sorted({v for e in bad for v in e}))
    rt, classes = _penultimate_root(t)
    n = t.n
    f = [Fraction(len(t.adj[v]) - 1) for v in range(n)]
    w = [FOUR_THIRDS if c is VertexClass.PENULTIMATE else Fraction(0) for c in classes]
    detached = [False] * n
    dominated = [False] * n
    members = set()
    trace = []
    for v in rt.order:
        kids = rt.children[v]
        if not kids:
            continue
        attached = [c for c in kids if not detached[c]]
        zeros = [c for c in attached if f[c] == 0]
        branch = bool(zeros)
        if not zeros:
            f[v] -= sum(1 / f[c] for c in attached)
        else:
            f[v] = Fraction(-1, 2)
            f[zeros[0]] = Fraction(2)
            if bonus == "zero-branch":
                w[v] += 1
            if rt.parent[v] >= 0:
                detached[v] = True
        if bonus == "negative" and f[v] < 0 and classes[v] is not VertexClass.PENULTIMATE:
            w[v] += 1
        wants = w[v] >= FOUR_THIRDS or (f[v] == 0 and w[v] >= 1)
        add = wants and any(not dominated[c] for c in kids)
        push = w[v] - 1 if add else w[v]
        if add:
            members.add(v)
            dominated[v] = True
            for u in t.adj[v]:
                dominated[u] = True
        parent = rt.parent[v]
        if parent >= 0:
            w[parent] += push
        trace.append(TraceEntry(v, add, weight=w[v], pushed=push if parent >= 0 else None,
                                f=f[v], zero_child_branch=branch))
    return DominationCertificate(
        frozenset(members), "alg2", root=rt.root, trace=tuple(trace), params={"bonus": bonus}
    )


def alg3_epsilon(k: int) -> Fraction:
    return Fraction(1, (k - 2) * (k + 1))


def alg3_dominating(t: Tree, k: Optional[int] = None, eps_override=None) -> DominationCertificate:
    """Penultimate-weight dominating set.

    Penultimate vertices start with weight ``1 + eps``, all others 0, where
    ``eps = 1/((k-2)(k+1))``.  Bottom-up, a vertex holding at least ``1 + eps``
    joins the set and passes ``w - 1`` up; otherwise it passes ``w``.

    Without ``eps_override`` the tree must have every deep vertex of degree
    at least ``k >= 3``.  With ``eps_override`` the value is used as given and
    the tree must have no adjacent degree-2 vertices (the case ``eps = 1``).
    """
    if eps_override is None:
        if k is None or k < 3:
            raise NotInScriptTk(f"k must be an integer >= 3, got {k!r}")
        bad = deep_vertices_below(t, k)
        if bad:
            raise NotInScriptTk(f"deep vertices with degree below {k}: {bad}", bad)
        eps = alg3_epsilon(k)
    else:
        eps = Fraction(eps_override)
        if eps <= 0:
            raise ValueError("eps_override must be positive")
        bad = adjacent_degree2_pairs(t)
        if bad:
            raise NotInScriptT(f"adjacent degree-2 vertices: {bad}", sorted({v for e in bad for v in e}))
    if t.n <= 2:
        return _trivial(t, "alg3")
    rt, classes = _penultimate_root(t)
    threshold = 1 + eps
    w = [threshold if c is VertexClass.PENULTIMATE else Fraction(0) for c in classes]
    members = set()
    trace = []
    for v in rt.order:
        add = w[v] >= threshold
        push = w[v] - 1 if add else w[v]
        if add:
            members.add(v)
        parent = rt.parent[v]
        if parent >= 0:
            w[parent] += push
        trace.append(TraceEntry(v, add, weight=w[v], pushed=push if parent >= 0 else None))
    return DominationCertificate(
        frozenset(members), "alg3", root=rt.root, trace=tuple(trace), params={"k": k, "eps": eps}
    )


def dominate(t: Tree, method: str, k: Optional[int] = None, eps_override=None) -> DominationCertificate:
    """Dispatch by method name: dp, brute, greedy, alg2 or alg3."""
    if method == "dp":
        _, members = gamma_dp(t)
        return DominationCertificate(members, "dp")
    if method == "brute":
        return DominationCertificate(bruteforce_dominating_set(t), "brute")
    if method == "greedy":
        return greedy_dominating(t)
    if method == "alg2":
        return alg2_dominating(t)
    if method == "alg3":
        return alg3_dominating(t, k, eps_override)
    raise ValueError(f"unknown method {method!r}")
