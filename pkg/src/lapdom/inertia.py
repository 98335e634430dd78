"""Exact eigenvalue counting for tree Laplacians.

The bottom-up congruence diagonalization of ``L(T) + alpha*I`` assigns every
vertex a rational value whose signs give the inertia of the matrix.  With
``alpha = -beta`` the negative, zero and positive counts are the numbers of
Laplacian eigenvalues below, at and above ``beta``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, NamedTuple, Optional, Sequence, Union

from .errors import EmptyInterval
from .tree import RootedTree, Tree, root_at

try:
    from gmpy2 import mpq as _mpq
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    _mpq = None

ExactRational = Fraction
RationalLike = Union[Fraction, int, str]

HALF = Fraction(1, 2)


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions, decimal strings ("0.5") and ratio strings ("1/2")."""
    return x if isinstance(x, Fraction) else Fraction(x)


class InertiaTriple(NamedTuple):
    neg: int
    zero: int
    pos: int


@dataclass(frozen=True)
class DiagonalizationResult:
    f: tuple[Fraction, ...]
    triple: InertiaTriple
    removed_edges: tuple[tuple[int, int], ...]
    zero_child_choices: tuple[tuple[int, int], ...]


def _tally(values) -> InertiaTriple:
    neg = zero = pos = 0
    for x in values:
        if x < 0:
            neg += 1
        elif x > 0:
            pos += 1
        else:
            zero += 1
    return InertiaTriple(neg, zero, pos)


def diagonalize(
    rt: RootedTree,
    alpha: RationalLike,
    choose: Optional[Callable[[Sequence[int]], int]] = None,
) -> DiagonalizationResult:
    """Run the diagonalization on ``L(T) + alpha*I`` and keep the full trace.

    Each vertex starts at ``deg(v) + alpha``.  Processing children first, a
    vertex whose attached children are all non-zero subtracts the sum of their
    reciprocals.  If some attached child is zero, one such child (the smallest
    id, or ``choose(zero_children)``) is set to 2, the vertex to -1/2, and the
    vertex is detached from its parent.  Childless vertices keep their start
    value.
    """
    alpha = as_rational(alpha)
    t = rt.tree
    f = [Fraction(len(t.adj[v])) + alpha for v in range(t.n)]
    detached = [False] * t.n
    removed = []
    choices = []
    for v in rt.order:
        kids = [c for c in rt.children[v] if not detached[c]]
        if not kids:
            continue
        zeros = [c for c in kids if f[c] == 0]
        if not zeros:
            f[v] -= sum(1 / f[c] for c in kids)
            continue
        j = choose(zeros) if choose is not None else zeros[0]
        f[v] = -HALF
        f[j] = Fraction(2)
        choices.append((v, j))
        if rt.parent[v] >= 0:
            detached[v] = True
            removed.append((v, rt.parent[v]))
    return DiagonalizationResult(
        f=tuple(f),
        triple=_tally(f),
        removed_edges=tuple(removed),
        zero_child_choices=tuple(choices),
    )


class _Plan(NamedTuple):
    """Rooted structure flattened for repeated inertia evaluations."""

    n: int
    internal: tuple[tuple[int, tuple[int, ...], int, bool], ...]  # (v, children, degree, has parent)
    root_degree: int


def _plan(rt: RootedTree) -> _Plan:
    t = rt.tree
    internal = tuple(
        (v, rt.children[v], len(t.adj[v]), rt.parent[v] >= 0) for v in rt.order if rt.children[v]
    )
    return _Plan(t.n, internal, len(t.adj[rt.root]))


def _inertia_planned(plan: _Plan, alpha: Fraction) -> InertiaTriple:
    if _mpq is not None:
        a = _mpq(alpha.numerator, alpha.denominator)
        two, mhalf = _mpq(2), _mpq(-1, 2)
    else:  # pragma: no cover
        a, two, mhalf = alpha, Fraction(2), -HALF
    if not plan.internal:  # K_1
        return _tally([plan.root_degree + a])
    # every vertex without children is a leaf of degree 1; internal entries are overwritten
    f = [1 + a] * plan.n
    detached = bytearray(plan.n)
    for v, kids, deg, has_parent in plan.internal:
        acc = 0
        hit = -1
        for c in kids:
            if detached[c]:
                continue
            fc = f[c]
            if not fc:
                hit = c
                break
            acc += 1 / fc
        if hit < 0:
            f[v] = deg + a - acc
        else:
            f[v] = mhalf
            f[hit] = two
            if has_parent:
                detached[v] = 1
    return _tally(f)


def inertia(rt: RootedTree, alpha: RationalLike) -> InertiaTriple:
    """Inertia triple only; same recurrence as :func:`diagonalize` without the trace."""
    return _inertia_planned(_plan(rt), as_rational(alpha))


def _rooted(t: Union[Tree, RootedTree]) -> RootedTree:
    return t if isinstance(t, RootedTree) else root_at(t, 0)


def count_below(t: Union[Tree, RootedTree], beta: RationalLike) -> int:
    """Number of Laplacian eigenvalues in ``[0, beta)``."""
    return inertia(_rooted(t), -as_rational(beta)).neg


def count_eq(t: Union[Tree, RootedTree], beta: RationalLike) -> int:
    """Multiplicity of ``beta`` as a Laplacian eigenvalue."""
    return inertia(_rooted(t), -as_rational(beta)).zero


def below_and_eq(t: Union[Tree, RootedTree], beta: RationalLike) -> tuple[int, int]:
    tr = inertia(_rooted(t), -as_rational(beta))
    return tr.neg, tr.zero


def mu(t: Tree) -> int:
    """Number of Laplacian eigenvalues in ``[0, 1)``."""
    return count_below(t, 1)


def nu(t: Tree) -> int:
    """Number of Laplacian eigenvalues in ``[2, n]``."""
    return t.n - count_below(t, 2)


def count_interval(
    t: Union[Tree, RootedTree],
    a: RationalLike,
    b: RationalLike,
    closed_left: bool = True,
    closed_right: bool = False,
) -> int:
    """Eigenvalues in the interval from ``a`` to ``b``; defaults to ``[a, b)``."""
    a, b = as_rational(a), as_rational(b)
    if a > b:
        raise ValueError(f"interval endpoints out of order: {a} > {b}")
    if a == b and not (closed_left or closed_right):
        raise EmptyInterval(f"open interval ({a}, {a}) is empty")
    rt = _rooted(t)
    below_a, eq_a = below_and_eq(rt, a)
    below_b, eq_b = below_and_eq(rt, b)
    if a == b:
        return eq_a if (closed_left and closed_right) else 0
    count = below_b - below_a
    if not closed_left:
        count -= eq_a
    if closed_right:
        count += eq_b
    return count


class SpectrumInterval(NamedTuple):
    """``lo == hi`` marks an exact eigenvalue; otherwise the open interval ``(lo, hi)``."""

    lo: Fraction
    hi: Fraction
    multiplicity: int

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2


HINT_MAX_N = 2000


def _float_hints(t: Tree) -> list[float]:
    """Approximate eigenvalues used only to place bisection probes."""
    if t.n > HINT_MAX_N:
        return []
    import numpy as np

    m = np.zeros((t.n, t.n))
    for u, v in t.edges:
        m[u, v] = m[v, u] = -1.0
    m[np.diag_indices(t.n)] = t.degrees
    return sorted(np.linalg.eigvalsh(m).tolist())


def _simple_dyadic(x: float, radius: Fraction) -> Fraction:
    """Dyadic rational with the smallest denominator within ``radius`` of ``x``."""
    k = 0
    while True:
        c = Fraction(round(x * (1 << k)), 1 << k)
        if abs(c - Fraction(x)) <= radius:
            return c
        k += 1


def localize_spectrum(
    t: Tree, tol: RationalLike = Fraction(1, 10**6), hints: Optional[Sequence[float]] = None
) -> list[SpectrumInterval]:
    """Bracket every Laplacian eigenvalue by bisection on exact counts.

    Starts from ``[0, 2**m]`` with ``2**m >= n`` (the spectrum lies in
    ``[0, n]``) and splits at dyadic points, so integer eigenvalues such as
    0, 1 and 2 are hit exactly.  A probe that hits an eigenvalue exactly is
    reported as a degenerate interval; everything else ends up in open
    intervals of width at most ``tol``.  Multiplicities sum to ``n``.

    Floating-point eigenvalue estimates (``hints``; computed with numpy when
    omitted, pass ``[]`` to disable) are used to guess small brackets that
    are then certified by exact counts.  A wrong guess only costs probes: every
    reported count comes from the exact engine.
    """
    tol = as_rational(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    plan = _plan(root_at(t, 0))
    guesses = sorted(hints) if hints is not None else _float_hints(t)
    exact: dict[Fraction, int] = {}
    out: list[SpectrumInterval] = []

    def probe(x):
        tr = _inertia_planned(plan, -x)
        if tr.zero:
            exact[x] = tr.zero
        return tr.neg, tr.zero

    # half-width of a guessed bracket: a power of two, so the bracket is at most tol wide
    w = Fraction(1)
    while 2 * w > tol:
        w /= 2
    while 4 * w <= tol:
        w *= 2

    def guided(lo, hi, cnt):
        """Cut points bracketing each tight cluster of float guesses in ``(lo, hi)``."""
        inside = [g for g in guesses if lo < g < hi]
        if len(inside) != cnt:
            return None
        clusters = [[inside[0]]]
        for g in inside[1:]:
            if g - clusters[-1][-1] <= float(w) / 8:
                clusters[-1].append(g)
            else:
                clusters.append([g])
        cuts = []
        for cl in clusters:
            if cl[-1] - cl[0] > float(w) / 2:
                continue  # too spread out to certify in one bracket; leave it to bisection
            c = _simple_dyadic((cl[0] + cl[-1]) / 2, w / 4)
            a, b = c - w, c + w
            if a > (cuts[-1] if cuts else lo) and b < hi:
                cuts += [a, c, b]
        return cuts or None

    lo, hi = Fraction(0), Fraction(1 << max(t.n - 1, 0).bit_length())
    below_lo, eq_lo = probe(lo)
    below_hi, _ = probe(hi)
    # stack entries: (lo, hi, below(lo) + eq(lo), count in the open interval, guesses allowed)
    stack = [(lo, hi, below_lo + eq_lo, below_hi - below_lo - eq_lo, True)]
    while stack:
        lo, hi, through_lo, cnt, may_guess = stack.pop()
        if cnt == 0:
            continue
        if hi - lo <= tol:
            out.append(SpectrumInterval(lo, hi, cnt))
            continue
        cuts = guided(lo, hi, cnt) if may_guess and guesses else None
        if cuts is None:
            cuts = [(lo + hi) / 2]
        pieces = []
        left, through = lo, through_lo
        for x in cuts:
            below_x, eq_x = probe(x)
            pieces.append((left, x, through, below_x - through))
            left, through = x, below_x + eq_x
        pieces.append((left, hi, through, through_lo + cnt - through))
        guided_split = len(cuts) > 1
        for a, b, thr, k in reversed(pieces):
            # pieces left over from a guided split are bisected, which guarantees termination
            stack.append((a, b, thr, k, not guided_split))
    out.extend(SpectrumInterval(x, x, m) for x, m in exact.items())
    out.sort(key=lambda s: (s.lo, s.hi))
    return out


def spectrum_midpoints(intervals: Sequence[SpectrumInterval]) -> list[float]:
    """Expand localized intervals into a sorted list of approximate eigenvalues."""
    vals = []
    for s in intervals:
        vals.extend([float(s.midpoint)] * s.multiplicity)
    return vals

