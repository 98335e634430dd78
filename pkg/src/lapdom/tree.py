"""Tree data model, edge-list I/O, vertex classes, rooting and clean-path contraction.

Vertices are always the integers ``0..n-1``.  Every value here is immutable;
operations return new objects.
"""

from __future__ import annotations

import enum
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import EdgeListSyntaxError, IdOutOfRange, InvalidPath, NotATree


@dataclass(frozen=True)
class Tree:
    """An undirected tree on vertices ``0..n-1``.

    ``edges`` is normalised to a sorted tuple of ``(u, v)`` pairs with ``u < v``,
    so two trees compare equal iff they have identical labelled edge sets.
    Construction validates the tree property and raises :class:`NotATree`
    or :class:`IdOutOfRange` otherwise.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        n = self.n
        if not isinstance(n, int) or n < 1:
            raise NotATree(f"vertex count must be a positive integer, got {n!r}")
        norm = []
        for u, v in self.edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise IdOutOfRange(f"edge ({u}, {v}) has an id outside 0..{n - 1}")
            if u == v:
                raise NotATree(f"self-loop at vertex {u}")
            norm.append((u, v) if u < v else (v, u))
        norm.sort()
        for e1, e2 in zip(norm, norm[1:]):
            if e1 == e2:
                raise NotATree(f"duplicate edge {e1}")
        if len(norm) != n - 1:
            raise NotATree(f"a tree on {n} vertices has {n - 1} edges, got {len(norm)}")
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in norm:
            nbrs[u].append(v)
            nbrs[v].append(u)
        seen = _reachable(nbrs, 0)
        if len(seen) != n:
            raise NotATree(f"graph is disconnected ({len(seen)} of {n} vertices reachable from 0)")
        object.__setattr__(self, "edges", tuple(norm))
        object.__setattr__(self, "adj", tuple(tuple(sorted(x)) for x in nbrs))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Tree":
        return cls(n, tuple((e[0], e[1]) for e in edges))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]


def _reachable(nbrs: Sequence[Sequence[int]], start: int) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for v in nbrs[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return seen


# --------------------------------------------------------------------------
# edge-list format

def parse_tree(text: str) -> Tree:
    """Parse an edge-list document.

    Lines starting with ``#`` and blank lines are ignored.  The first remaining
    line holds ``n``; the following ``n - 1`` lines hold ``u v`` pairs.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line))
    if not rows:
        raise EdgeListSyntaxError("empty document: expected a vertex count")
    lineno, first = rows[0]
    try:
        n = int(first)
    except ValueError:
        raise EdgeListSyntaxError(f"line {lineno}: expected vertex count, got {first!r}") from None
    if n < 1:
        raise EdgeListSyntaxError(f"line {lineno}: vertex count must be positive, got {n}")
    edges = []
    for lineno, line in rows[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListSyntaxError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListSyntaxError(f"line {lineno}: non-integer vertex id in {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise IdOutOfRange(f"line {lineno}: id outside 0..{n - 1} in {line!r}")
        edges.append((u, v))
    return Tree(n, tuple(edges))


def read_tree(path) -> Tree:
    with open(path, encoding="utf-8") as fh:
        return parse_tree(fh.read())


def format_tree(t: Tree, comment: Optional[str] = None) -> str:
    lines = []
    if comment:
        lines.extend("# " + c for c in comment.splitlines())
    lines.append(str(t.n))
    lines.extend(f"{u} {v}" for u, v in t.edges)
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# classification

class VertexClass(enum.Enum):
    LEAF = "leaf"
    PENULTIMATE = "penultimate"
    DEEP = "deep"


def classify(t: Tree) -> tuple[list[VertexClass], int]:
    """Return the class of every vertex and the number of penultimate vertices.

    A leaf has degree one.  A penultimate vertex is a non-leaf with a leaf
    neighbour, so both ends of ``P_2`` are leaves and ``p(P_2) = 0``.  The
    isolated vertex of ``K_1`` is classed as deep.
    """
    deg = t.degrees
    classes = []
    for v in range(t.n):
        if deg[v] == 1:
            classes.append(VertexClass.LEAF)
        elif any(deg[u] == 1 for u in t.adj[v]):
            classes.append(VertexClass.PENULTIMATE)
        else:
            classes.append(VertexClass.DEEP)
    p = sum(c is VertexClass.PENULTIMATE for c in classes)
    return classes, p


def penultimate_count(t: Tree) -> int:
    return classify(t)[1]


def penultimates(t: Tree) -> list[int]:
    classes, _ = classify(t)
    return [v for v, c in enumerate(classes) if c is VertexClass.PENULTIMATE]


def min_deep_degree(t: Tree) -> float:
    """Smallest degree of a deep vertex, or ``math.inf`` when there is none."""
    classes, _ = classify(t)
    degs = [t.degree(v) for v, c in enumerate(classes) if c is VertexClass.DEEP]
    return min(degs) if degs else math.inf


def adjacent_degree2_pairs(t: Tree) -> list[tuple[int, int]]:
    deg = t.degrees
    return [(u, v) for u, v in t.edges if deg[u] == 2 and deg[v] == 2]


def in_script_t(t: Tree) -> bool:
    """True when no two adjacent vertices both have degree two."""
    return not adjacent_degree2_pairs(t)


def deep_vertices_below(t: Tree, k: int) -> list[int]:
    classes, _ = classify(t)
    return [v for v, c in enumerate(classes) if c is VertexClass.DEEP and t.degree(v) < k]


def in_script_tk(t: Tree, k: int) -> bool:
    """True when every deep vertex has degree at least ``k``."""
    return not deep_vertices_below(t, k)


# --------------------------------------------------------------------------
# rooting

@dataclass(frozen=True)
class RootedTree:
    """A tree with a chosen root.

    ``parent[root]`` is ``-1``.  ``children`` lists are in ascending id order
    and ``order`` is reverse BFS order, so every vertex comes after all of
    its descendants and the root comes last.
    """

    tree: Tree
    root: int
    parent: tuple[int, ...]
    children: tuple[tuple[int, ...], ...]
    order: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.tree.n


def root_at(t: Tree, r: int) -> RootedTree:
    if not 0 <= r < t.n:
        raise IdOutOfRange(f"root {r} outside 0..{t.n - 1}")
    parent = [-1] * t.n
    children: list[list[int]] = [[] for _ in range(t.n)]
    bfs = [r]
    visited = [False] * t.n
    visited[r] = True
    queue = deque([r])
    while queue:
        u = queue.popleft()
        for v in t.adj[u]:
            if not visited[v]:
                visited[v] = True
                parent[v] = u
                children[u].append(v)
                bfs.append(v)
                queue.append(v)
    return RootedTree(
        tree=t,
        root=r,
        parent=tuple(parent),
        children=tuple(tuple(c) for c in children),
        order=tuple(reversed(bfs)),
    )


# --------------------------------------------------------------------------
# clean paths and contraction

class CleanPath3(NamedTuple):
    a: int
    b: int
    c: int
    d: int


def is_clean_path3(t: Tree, p: Sequence[int]) -> bool:
    if len(p) != 4 or len(set(p)) != 4:
        return False
    if any(not 0 <= x < t.n for x in p):
        return False
    a, b, c, d = p
    adj = t.adj
    return b in adj[a] and c in adj[b] and d in adj[c] and len(adj[b]) == 2 and len(adj[c]) == 2


def find_clean_path3(t: Tree) -> Optional[CleanPath3]:
    """Smallest clean path ``(a, b, c, d)`` of three edges, or ``None``.

    Picks the lexicographically smallest adjacent degree-2 pair ``b < c``;
    ``a`` and ``d`` are then the remaining neighbours of ``b`` and ``c``.
    """
    pairs = adjacent_degree2_pairs(t)
    if not pairs:
        return None
    b, c = pairs[0]
    (a,) = [x for x in t.adj[b] if x != c]
    (d,) = [x for x in t.adj[c] if x != b]
    return CleanPath3(a, b, c, d)


def contract_clean_path3(t: Tree, p: Sequence[int]) -> tuple[Tree, dict[int, int]]:
    """Replace the clean path ``p`` by one vertex ``e``.

    ``e`` inherits the outside neighbours of both ends.  Ids are renumbered
    order-preservingly, with ``e`` occupying the slot of ``min(p)``.  Returns
    the contracted tree and the old-id to new-id map (all four path vertices
    map to ``e``).
    """
    if not is_clean_path3(t, p):
        raise InvalidPath(f"{tuple(p)} is not a clean path of length three")
    a, b, c, d = p
    gone = {a, b, c, d}
    slot = min(gone)
    keep = [v for v in range(t.n) if v not in gone or v == slot]
    new_id = {v: i for i, v in enumerate(keep)}
    e = new_id[slot]
    for v in gone:
        new_id[v] = e
    edges = []
    for u, v in t.edges:
        if u in gone and v in gone:
            continue
        edges.append((new_id[u], new_id[v]))
    return Tree(t.n - 3, tuple(edges)), new_id


def reduce_to_script_t(t: Tree) -> tuple[Tree, int]:
    """Contract clean length-3 paths until none is left; return the tree and step count."""
    steps = 0
    while (p := find_clean_path3(t)) is not None:
        t, _ = contract_clean_path3(t, p)
        steps += 1
    return t, steps
