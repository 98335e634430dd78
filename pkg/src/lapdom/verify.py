"""Per-tree invariant checks, family sweeps and the analysis report."""

from __future__ import annotations

import math
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from . import oracles
from .domination import (
    BRUTE_FORCE_MAX_N,
    ONE_THIRD,
    alg2_dominating,
    alg3_dominating,
    alg3_epsilon,
    gamma_bruteforce,
    gamma_dp,
    greedy_dominating,
    is_dominating,
)
from .generators import caterpillar, tight43
from .inertia import count_below, count_interval, diagonalize, mu, nu
from .report import rational_json
from .tree import (
    Tree,
    classify,
    contract_clean_path3,
    find_clean_path3,
    in_script_t,
    min_deep_degree,
    reduce_to_script_t,
    root_at,
)

FOUR_THIRDS = Fraction(4, 3)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


# --------------------------------------------------------------------------
# individual relations

def alg2_push_violations(cert) -> list[int]:
    """Vertices pushing less than 1/3 without being a member that was a zero-child."""
    return [
        e.vertex
        for e in cert.trace
        if e.pushed is not None and e.pushed < ONE_THIRD and not (e.added and e.f == 0)
    ]


def alg3_push_violations(t: Tree, cert, eps: Fraction) -> list[int]:
    """Non-leaf, non-root vertices pushing less than ``eps``."""
    children = root_at(t, cert.root).children
    return [e.vertex for e in cert.trace if e.pushed is not None and children[e.vertex] and e.pushed < eps]


def contraction_steps(t: Tree) -> list[dict]:
    """Contract clean length-3 paths one at a time, recording mu and gamma around each step."""
    steps = []
    cur_mu, cur_gamma = mu(t), gamma_dp(t)[0]
    while (p := find_clean_path3(t)) is not None:
        nxt, _ = contract_clean_path3(t, p)
        nxt_mu, nxt_gamma = mu(nxt), gamma_dp(nxt)[0]
        steps.append({
            "path": list(p),
            "n_before": t.n,
            "n_after": nxt.n,
            "mu_before": cur_mu,
            "mu_after": nxt_mu,
            "gamma_before": cur_gamma,
            "gamma_after": nxt_gamma,
            "mu_drop_is_one": cur_mu - nxt_mu == 1,
            "gamma_drop_ok": 0 <= cur_gamma - nxt_gamma <= 1,
            "ratio_monotone": Fraction(cur_gamma, cur_mu) <= Fraction(nxt_gamma, nxt_mu),
        })
        t, cur_mu, cur_gamma = nxt, nxt_mu, nxt_gamma
    return steps


def step_ok(s: dict) -> bool:
    return s["mu_drop_is_one"] and s["gamma_drop_ok"] and s["ratio_monotone"]


def oracle_interval_checks(t: Tree, rng: random.Random, guard: float = 1e-6, extra: int = 3) -> tuple[int, int]:
    """Compare Jacobi interval counts with exact counts.

    Returns ``(agreements, disagreements)``; intervals where the numeric
    count is indeterminate are skipped.
    """
    eigs = oracles.tree_spectrum(t)
    rt = root_at(t, 0)
    n = t.n
    intervals = [(Fraction(0), Fraction(1)), (Fraction(0), Fraction(2)), (Fraction(2), Fraction(n + 1))]
    for _ in range(extra):
        a = Fraction(rng.randrange(0, 1000 * n + 1), 1000)
        b = Fraction(rng.randrange(0, 1000 * n + 1), 1000)
        a, b = min(a, b), max(a, b)
        if a < b:
            intervals.append((a, b))
    agree = disagree = 0
    for a, b in intervals:
        num = oracles.interval_count_numeric(eigs, float(a), float(b), guard)
        if num is None:
            continue
        if num == count_interval(rt, a, b):
            agree += 1
        else:
            disagree += 1
    return agree, disagree


# --------------------------------------------------------------------------
# the full suite on one tree

def check_tree(
    t: Tree,
    seed: int = 0,
    brute_max: int = 16,
    oracle_max: int = 100,
    roots: int = 3,
) -> list[Check]:
    rng = random.Random(seed)
    out: list[Check] = []
    n = t.n
    m = mu(t)
    g, witness = gamma_dp(t)
    _, p = classify(t)

    out.append(Check("gamma_witness_dominates", is_dominating(t, witness) and len(witness) == g))
    out.append(Check("mu_le_gamma", m <= g, f"mu={m} gamma={g}"))
    out.append(Check("p_le_mu", p <= m, f"p={p} mu={m}"))
    out.append(Check("ratio_lt_4_3", Fraction(g, m) < FOUR_THIRDS, f"gamma/mu={g}/{m}"))
    if n >= 2:
        below2 = count_below(t, 2)
        out.append(Check("m02_ge_half_n", below2 >= math.ceil(n / 2), f"m[0,2)={below2} n={n}"))
        v = n - below2
        out.append(Check("nu_ge_gamma", v >= g, f"nu={v} gamma={g}"))

    gr = greedy_dominating(t)
    out.append(Check("greedy_minimum", is_dominating(t, gr.members) and gr.size == g, f"greedy={gr.size} gamma={g}"))
    if n <= min(brute_max, BRUTE_FORCE_MAX_N):
        b = gamma_bruteforce(t)
        out.append(Check("dp_eq_bruteforce", b == g, f"brute={b} dp={g}"))

    # inertia invariance across roots and tie-breaks
    base = {a: diagonalize(root_at(t, 0), a).triple for a in (Fraction(-1), Fraction(-2))}
    same = True
    for _ in range(roots):
        r = rng.randrange(n)
        for a, tr in base.items():
            got = diagonalize(root_at(t, r), a, choose=lambda zs: rng.choice(list(zs))).triple
            same &= got == tr
    out.append(Check("inertia_root_invariance", same))

    # contraction
    steps = contraction_steps(t)
    bad = [s["path"] for s in steps if not step_ok(s)]
    out.append(Check("contraction_steps", not bad, f"{len(steps)} steps" + (f", failing {bad}" if bad else "")))

    # constructive algorithms on the reduced tree
    red, _ = reduce_to_script_t(t)
    if red.n >= 3:
        rm, rg = mu(red), gamma_dp(red)[0]
        _, rp = classify(red)
        c2 = alg2_dominating(red)
        out.append(Check("alg2_dominating", is_dominating(red, c2.members)))
        out.append(Check("alg2_minimum", c2.size == rg, f"alg2={c2.size} gamma={rg}"))
        out.append(Check("alg2_size_bound", c2.size <= rm + Fraction(rp - 1, 3), f"|D|={c2.size} mu={rm} p={rp}"))
        viol = alg2_push_violations(c2)
        out.append(Check("alg2_push_third", not viol, f"violators {viol}" if viol else ""))
        c3 = alg3_dominating(red, eps_override=1)
        out.append(Check("alg3_eps1", is_dominating(red, c3.members) and c3.size < 2 * rp, f"|D|={c3.size} p={rp}"))
    if n >= 3:
        k = min_deep_degree(t)
        if k >= 3:
            k = 3 if k == math.inf else int(k)
            eps = alg3_epsilon(k)
            c3 = alg3_dominating(t, k)
            ok = is_dominating(t, c3.members) and c3.size < (1 + eps) * p
            out.append(Check("alg3_size_bound", ok, f"k={k} |D|={c3.size} p={p}"))
            viol = alg3_push_violations(t, c3, eps)
            out.append(Check("alg3_push_eps", not viol, f"violators {viol}" if viol else ""))

    if n <= oracle_max:
        agree, disagree = oracle_interval_checks(t, rng)
        out.append(Check("oracle_agreement", disagree == 0, f"agree={agree} disagree={disagree}"))
    return out


def tight43_check(k: int) -> Check:
    t = tight43(k)
    m, g = mu(t), gamma_dp(t)[0]
    return Check(f"tight43_k{k}", m == 3 * k + 1 and g == 4 * k, f"mu={m} gamma={g}")


def caterpillar_check(n: int) -> Check:
    t = caterpillar(n)
    v, g = nu(t), gamma_dp(t)[0]
    return Check(f"caterpillar_n{n}", v == 2 * n - 1 and g == n, f"nu={v} gamma={g}")


# --------------------------------------------------------------------------
# analysis report

def analyze(t: Tree) -> dict:
    """Everything the analyze command reports, as a JSON-ready dict."""
    n = t.n
    m = mu(t)
    v = nu(t)
    g, witness = gamma_dp(t)
    _, p = classify(t)
    degree_hist = Counter(t.degrees)
    checks = [
        Check("mu_le_gamma", m <= g),
        Check("p_le_mu", p <= m),
        Check("ratio_lt_4_3", Fraction(g, m) < FOUR_THIRDS),
    ]
    alg2_size = None
    bound_on = None
    if in_script_t(t) and n >= 3:
        target = t
        bound_on = "input"
    else:
        target, _ = reduce_to_script_t(t)
        bound_on = "reduced"
    if target.n >= 3:
        c2 = alg2_dominating(target)
        tm, tp = mu(target), classify(target)[1]
        if bound_on == "input":
            alg2_size = c2.size
        checks.append(Check("alg2_size_bound", c2.size <= tm + Fraction(tp - 1, 3),
                            f"evaluated on {bound_on} tree (n={target.n})"))
    else:
        checks.append(Check("alg2_size_bound", True, "skipped: fewer than 3 vertices after reduction"))
    if n >= 2:
        below2 = count_below(t, 2)
        checks.append(Check("nu_ge_gamma", v >= g))
        checks.append(Check("m02_ge_half_n", below2 >= math.ceil(n / 2)))
    else:
        checks.append(Check("nu_ge_gamma", True, "skipped: n = 1"))
        checks.append(Check("m02_ge_half_n", True, "skipped: n = 1"))
    return {
        "n": n,
        "edges": [list(e) for e in t.edges],
        "degree_histogram": {str(d): c for d, c in sorted(degree_hist.items())},
        "p": p,
        "mu": m,
        "nu": v,
        "gamma": g,
        "gamma_witness": sorted(witness),
        "alg2_size": alg2_size,
        "ratio_gamma_mu": rational_json(Fraction(g, m)),
        "ratio_nu_gamma": rational_json(Fraction(v, g)),
        "checks": [c.to_dict() for c in checks],
        "all_passed": all(c.passed for c in checks),
    }
