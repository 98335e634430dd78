from fractions import Fraction as F

from lapdom.generators import fig1, path, random_tree, star, tight43
from lapdom.report import rational_from_json, rational_json
from lapdom.search import gamma_mu_ratio, search
from lapdom.verify import analyze, caterpillar_check, check_tree, contraction_steps, tight43_check


def test_rational_json_roundtrip():
    d = rational_json(F(-5, 4))
    assert d == {"num": "-5", "den": "4", "decimal": -1.25}
    assert rational_from_json(d) == F(-5, 4)
    assert rational_json(None) is None


def test_check_tree_all_pass_on_samples():
    for seed in range(30):
        t = random_tree(3 + seed, seed)
        checks = check_tree(t, seed=seed)
        assert all(c.passed for c in checks), [c for c in checks if not c.passed]


def test_check_tree_names_are_descriptive():
    names = {c.name for c in check_tree(fig1())}
    assert {"mu_le_gamma", "p_le_mu", "ratio_lt_4_3", "alg2_size_bound", "oracle_agreement"} <= names


def test_contraction_steps_p7():
    steps = contraction_steps(path(7))
    assert [(s["mu_before"], s["mu_after"]) for s in steps] == [(3, 2), (2, 1)]
    assert [(s["gamma_before"], s["gamma_after"]) for s in steps] == [(3, 2), (2, 1)]
    assert contraction_steps(star(5)) == []


def test_family_checks():
    assert tight43_check(4).passed
    assert caterpillar_check(7).passed


def test_analyze_examples():
    r = analyze(fig1())
    assert (r["mu"], r["gamma"], r["p"]) == (4, 5, 4)
    assert rational_from_json(r["ratio_gamma_mu"]) == F(5, 4)
    assert r["alg2_size"] == 5 and r["all_passed"]

    r = analyze(tight43(3))
    assert rational_from_json(r["ratio_gamma_mu"]) == F(6, 5)

    r = analyze(path(2))
    assert (r["mu"], r["gamma"]) == (1, 1)
    assert rational_from_json(r["ratio_gamma_mu"]) == 1


def test_search_seeded_with_tight_family():
    for k in (2, 3, 5):
        res = search(iters=0, start=tight43(k))
        assert rational_from_json(res["best_ratio"]) == F(4 * k, 3 * k + 1)


def test_search_stays_below_ceiling_and_is_deterministic():
    a = search(n=25, iters=300, seed=11)
    b = search(n=25, iters=300, seed=11)
    assert a == b
    assert a["below_ceiling"]
    assert rational_from_json(a["best_ratio"]) < F(4, 3)
    best = F(a["best_gamma"], a["best_mu"])
    assert best == rational_from_json(a["best_ratio"])


def test_gamma_mu_ratio():
    assert gamma_mu_ratio(fig1()) == F(5, 4)
