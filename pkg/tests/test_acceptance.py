"""Acceptance suite: one group of tests per acceptance criterion.

Every test carries ``@pytest.mark.criterion(number, title)``; the conftest
prints one PASS/FAIL line per criterion at the end of the run.  All random
inputs are drawn from fixed seeds, so the suite is reproducible.
"""

import math
import random
from fractions import Fraction as F

import pytest

from lapdom.domination import (
    alg2_dominating,
    alg3_dominating,
    alg3_epsilon,
    gamma_bruteforce,
    gamma_dp,
    greedy_dominating,
    is_dominating,
)
from lapdom.generators import (
    caterpillar,
    fig1,
    random_script_t,
    random_tk,
    random_tree,
    rng,
    tight43,
)
from lapdom.inertia import (
    count_below,
    diagonalize,
    localize_spectrum,
    mu,
    spectrum_midpoints,
)
from lapdom.tree import classify, find_clean_path3, root_at
from lapdom.verify import (
    alg2_push_violations,
    alg3_push_violations,
    contraction_steps,
    oracle_interval_checks,
)

criterion = pytest.mark.criterion


def draws(count, n_lo, n_hi, seed):
    """``count`` reproducible (n, seed) pairs with ``n_lo <= n <= n_hi``."""
    g = rng(seed)
    return [(int(g.integers(n_lo, n_hi + 1)), int(g.integers(0, 2**63))) for _ in range(count)]


def report(label, failures, total):
    print(f"{label}: {total - len(failures)}/{total} ok")
    assert not failures, failures[:5]


# --------------------------------------------------------------------------
# 1. the eleven-vertex example (fig1)

@criterion(1, "fig1 tree: mu=4, gamma=5, p=4, inertia labels")
def test_fig1_reproduction():
    t = fig1()
    assert mu(t) == 4
    assert gamma_dp(t)[0] == 5
    assert classify(t)[1] == 4
    f = diagonalize(root_at(t, 0), -1).f
    labels = {0: F(0), 1: F(2), 2: F(2)}
    labels.update({v: F(-1, 2) for v in (3, 4, 5, 6)})
    labels.update({v: F(2) for v in (7, 8, 9, 10)})
    assert {v: f[v] for v in range(t.n)} == labels


# --------------------------------------------------------------------------
# 2. tight family

@criterion(2, "tight family k=2..50: mu=3k+1, gamma=4k, ratio below 4/3, > 1.32 by k=25")
def test_tight_family_values():
    bad = []
    for k in range(2, 51):
        t = tight43(k)
        m, g = mu(t), gamma_dp(t)[0]
        if (m, g) != (3 * k + 1, 4 * k) or not F(g, m) < F(4, 3):
            bad.append((k, m, g))
    report("tight43 k=2..50", bad, 49)


@criterion(2, "tight family k=2..50: mu=3k+1, gamma=4k, ratio below 4/3, > 1.32 by k=25")
def test_tight_family_ratio_exceeds_1_32_by_k25():
    # Stated threshold.  4k/(3k+1) > 33/25 holds iff k > 33, so this cannot
    # pass for the family as constructed; kept as written, see the decisions ledger.
    ratio = F(4 * 25, 3 * 25 + 1)
    print(f"ratio at k=25: {ratio} = {float(ratio):.6f}; first k above 1.32:",
          next(k for k in range(2, 100) if F(4 * k, 3 * k + 1) > F(132, 100)))
    assert ratio > F(132, 100)


# --------------------------------------------------------------------------
# 3. caterpillar family

@criterion(3, "caterpillar n=2..50: nu=2n-1, gamma=n; labels of T_3 at alpha=-2")
def test_caterpillar_family():
    bad = []
    for n in range(2, 51):
        t = caterpillar(n)
        v = t.n - count_below(t, 2)
        g = gamma_dp(t)[0]
        if (v, g) != (2 * n - 1, n):
            bad.append((n, v, g))
    report("caterpillar n=2..50", bad, 49)


@criterion(3, "caterpillar n=2..50: nu=2n-1, gamma=n; labels of T_3 at alpha=-2")
def test_caterpillar_t3_labels():
    t = caterpillar(3)
    f = diagonalize(root_at(t, 8), -2).f  # v_9 has id 8
    assert list(f[:9]) == [-1, 1, -1, 1, 1, -1, 1, 1, -2]
    assert f[9] == f[10] == -1


# --------------------------------------------------------------------------
# 4 and 10. fuzzing the general bounds

@pytest.fixture(scope="module")
def fuzzed():
    rows = []
    for n, s in draws(10_000, 3, 150, seed=4):
        t = random_tree(n, s)
        _, p = classify(t)
        g = gamma_dp(t)[0]
        below1 = count_below(t, 1)
        below2 = count_below(t, 2)
        rows.append((n, s, p, below1, g, below2))
    return rows


@criterion(4, "10,000 random trees: p <= mu <= gamma and gamma/mu < 4/3")
def test_general_bounds(fuzzed):
    bad = [r for r in fuzzed if not (r[2] <= r[3] <= r[4] and F(r[4], r[3]) < F(4, 3))]
    worst = max(F(r[4], r[3]) for r in fuzzed)
    print(f"largest gamma/mu seen: {worst}")
    report("p <= mu <= gamma < 4/3 mu", bad, len(fuzzed))


@criterion(10, "m[0,2) >= ceil(n/2), nu >= gamma on fuzzed trees; nu/gamma = 2 - 1/n")
def test_background_inequalities(fuzzed):
    bad = [r for r in fuzzed if r[5] < math.ceil(r[0] / 2) or r[0] - r[5] < r[4]]
    report("m[0,2) >= n/2 and nu >= gamma", bad, len(fuzzed))


@criterion(10, "m[0,2) >= ceil(n/2), nu >= gamma on fuzzed trees; nu/gamma = 2 - 1/n")
def test_caterpillar_ratio_approaches_two():
    ratios = []
    for n in range(2, 51):
        t = caterpillar(n)
        ratios.append(F(t.n - count_below(t, 2), gamma_dp(t)[0]))
    assert ratios == [2 - F(1, n) for n in range(2, 51)]
    assert all(a < b < 2 for a, b in zip(ratios, ratios[1:]))


# --------------------------------------------------------------------------
# 5. weight-propagation algorithm on trees without adjacent degree-2 vertices

@criterion(5, "2,000 trees in script-T: alg2 dominating, minimum, size bound, push >= 1/3")
def test_alg2_contract():
    bad = []
    for n, s in draws(2_000, 3, 150, seed=5):
        t = random_script_t(n, s)
        c = alg2_dominating(t)
        _, p = classify(t)
        ok = (
            is_dominating(t, c.members)
            and c.size == gamma_dp(t)[0]
            and c.size <= mu(t) + F(p - 1, 3)
            and not alg2_push_violations(c)
        )
        if not ok:
            bad.append((n, s))
    report("alg2", bad, 2_000)


# --------------------------------------------------------------------------
# 6. penultimate-weight algorithm

@criterion(6, "1,000 trees per k in {3,4,5,8}: alg3 bound; eps=1 gives |D| < 2p")
@pytest.mark.parametrize("k", [3, 4, 5, 8])
def test_alg3_bound(k):
    eps = alg3_epsilon(k)
    bad = []
    for n, s in draws(1_000, k + 1, 100, seed=60 + k):
        t = random_tk(n, k, s)
        c = alg3_dominating(t, k)
        _, p = classify(t)
        if not (is_dominating(t, c.members) and c.size < (1 + eps) * p) or alg3_push_violations(t, c, eps):
            bad.append((n, s))
    report(f"alg3 k={k}", bad, 1_000)


@criterion(6, "1,000 trees per k in {3,4,5,8}: alg3 bound; eps=1 gives |D| < 2p")
def test_alg3_eps_one():
    bad = []
    for n, s in draws(1_000, 3, 150, seed=69):
        t = random_script_t(n, s)
        c = alg3_dominating(t, eps_override=1)
        _, p = classify(t)
        if not (is_dominating(t, c.members) and c.size < 2 * p):
            bad.append((n, s))
    report("alg3 eps=1", bad, 1_000)


# --------------------------------------------------------------------------
# 7. clean-path contraction

@criterion(7, "1,000 trees with clean 3-paths: mu drops by 1, gamma by <= 1, ratio monotone")
def test_contraction():
    g = rng(7)
    bad = []
    kept = steps_total = 0
    while kept < 1_000:
        n, s = int(g.integers(4, 151)), int(g.integers(0, 2**63))
        t = random_tree(n, s)
        if find_clean_path3(t) is None:
            continue
        kept += 1
        for st in contraction_steps(t):
            steps_total += 1
            ok = (
                st["mu_before"] == st["mu_after"] + 1
                and st["gamma_before"] <= st["gamma_after"] + 1
                and F(st["gamma_before"], st["mu_before"]) <= F(st["gamma_after"], st["mu_after"])
            )
            if not ok:
                bad.append((n, s, st["path"]))
    print(f"{steps_total} contraction steps over {kept} trees")
    report("contraction steps", bad, steps_total)


# --------------------------------------------------------------------------
# 8. root and tie-break invariance

@criterion(8, "500 trees x 5 roots x random tie-breaks: identical inertia triples")
def test_inertia_invariance():
    pick = random.Random(8)
    bad = []
    checked = 0
    for n, s in draws(500, 1, 100, seed=8):
        t = random_tree(n, s)
        alphas = [F(-1), F(-2), F(-1, 2)]
        alphas += [-F(pick.randrange(0, 100 * (n + 1)), pick.randrange(1, 101)) for _ in range(2)]
        base = {a: diagonalize(root_at(t, 0), a).triple for a in alphas}
        for _ in range(5):
            rt = root_at(t, pick.randrange(n))
            for a in alphas:
                checked += 1
                got = diagonalize(rt, a, choose=lambda zs: pick.choice(list(zs))).triple
                if got != base[a]:
                    bad.append((n, s, rt.root, a))
    report("triples", bad, checked)


# --------------------------------------------------------------------------
# 9. agreement with the numerical oracle

@criterion(9, "500 trees n<=100: Jacobi counts agree; localization sums to n and 2(n-1)")
def test_oracle_agreement():
    pick = random.Random(9)
    tol = F(1, 10**9)
    bad = []
    agree_total = 0
    for n, s in draws(500, 1, 100, seed=9):
        t = random_tree(n, s)
        agree, disagree = oracle_interval_checks(t, pick, guard=1e-6, extra=3)
        agree_total += agree
        ivs = localize_spectrum(t, tol)
        total = sum(iv.multiplicity for iv in ivs)
        trace_err = abs(sum(spectrum_midpoints(ivs)) - 2 * (n - 1))
        if disagree or total != n or trace_err > n * 1e-9:
            bad.append((n, s, disagree, total, trace_err))
    print(f"{agree_total} determinate interval comparisons")
    assert agree_total > 1_000
    report("oracle agreement", bad, 500)


# --------------------------------------------------------------------------
# 11. oracles against each other

@criterion(11, "DP = brute force on 2,000 trees n<=16; greedy = DP on 5,000 trees n<=150")
def test_dp_equals_bruteforce():
    bad = [(n, s) for n, s in draws(2_000, 1, 16, seed=11)
           if gamma_dp(random_tree(n, s))[0] != gamma_bruteforce(random_tree(n, s))]
    report("dp vs brute force", bad, 2_000)


@criterion(11, "DP = brute force on 2,000 trees n<=16; greedy = DP on 5,000 trees n<=150")
def test_greedy_equals_dp():
    bad = []
    for n, s in draws(5_000, 1, 150, seed=111):
        t = random_tree(n, s)
        c = greedy_dominating(t)
        if not is_dominating(t, c.members) or c.size != gamma_dp(t)[0]:
            bad.append((n, s))
    report("greedy vs dp", bad, 5_000)
