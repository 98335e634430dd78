from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from lapdom.domination import (
    alg2_dominating,
    alg3_dominating,
    alg3_epsilon,
    bruteforce_dominating_set,
    dominate,
    gamma_bruteforce,
    gamma_dp,
    greedy_dominating,
    is_dominating,
    undominated,
)
from lapdom.errors import NotInScriptT, NotInScriptTk, TooLarge
from lapdom.generators import (
    caterpillar,
    fig1,
    path,
    random_script_t,
    random_tk,
    random_tree,
    spider,
    star,
    tight43,
)
from lapdom.inertia import mu
from lapdom.tree import classify
from lapdom.verify import alg2_push_violations, alg3_push_violations


def test_is_dominating_examples():
    assert is_dominating(path(3), {1})
    assert not is_dominating(path(3), {0})
    assert undominated(path(3), {0}) == [2]
    assert is_dominating(fig1(), {0, 3, 4, 5, 6})


def test_gamma_dp_examples():
    assert gamma_dp(fig1())[0] == 5
    assert gamma_dp(tight43(3))[0] == 12
    assert gamma_dp(caterpillar(4))[0] == 4
    assert gamma_dp(path(1))[0] == 1


def test_bruteforce_examples():
    assert gamma_bruteforce(path(2)) == 1
    assert gamma_bruteforce(path(7)) == 3
    assert gamma_bruteforce(star(5)) == 1
    assert bruteforce_dominating_set(path(3)) == {1}


def test_bruteforce_too_large():
    with pytest.raises(TooLarge):
        gamma_bruteforce(path(21))


def test_greedy_examples():
    assert greedy_dominating(path(3)).members == {1}
    assert greedy_dominating(path(2)).size == 1
    assert greedy_dominating(fig1()).size == 5


def test_alg2_examples():
    c = alg2_dominating(path(3))
    assert c.members == {1}
    assert c.size <= mu(path(3)) + F(1 - 1, 3)

    c = alg2_dominating(fig1())
    assert c.size == 5 and c.members == {1, 3, 4, 5, 6}
    assert c.size <= 4 + F(4 - 1, 3)
    assert c.root == 3

    t = tight43(2)
    c = alg2_dominating(t)
    assert is_dominating(t, c.members) and c.size == 8
    assert c.size <= 7 + F(6 - 1, 3)


def test_alg2_replay_and_json():
    c = alg2_dominating(fig1())
    assert c.replay() == c.members
    d = c.to_dict()
    assert d["method"] == "alg2" and d["size"] == 5
    assert d["trace"][0]["weight"]["den"] in {"1", "3"}


def test_alg2_small_n_bypass():
    assert alg2_dominating(path(1)).members == {0}
    assert alg2_dominating(path(2)).size == 1


def test_alg2_rejects_adjacent_degree2():
    with pytest.raises(NotInScriptT) as ei:
        alg2_dominating(path(5))
    assert set(ei.value.vertices) == {1, 2, 3}
    assert "1" in str(ei.value)


def test_alg3_examples():
    c = alg3_dominating(star(5), 3)
    assert c.members == {0}
    assert c.size < (1 + F(1, 4)) * 1

    s = spider([2, 2, 2])
    c = alg3_dominating(s, 3)
    assert is_dominating(s, c.members)
    assert c.size == gamma_dp(s)[0] == 3
    assert c.size < F(5, 4) * 3


def test_alg3_epsilon():
    assert alg3_epsilon(3) == F(1, 4)
    assert alg3_epsilon(8) == F(1, 54)


def test_alg3_preconditions():
    with pytest.raises(NotInScriptTk) as ei:
        alg3_dominating(tight43(2), 3)
    assert ei.value.vertices
    with pytest.raises(NotInScriptT):
        alg3_dominating(path(5), eps_override=1)


def test_dominate_dispatch():
    t = fig1()
    for method in ("dp", "brute", "greedy", "alg2"):
        c = dominate(t, method)
        assert is_dominating(t, c.members) and c.size == 5
    with pytest.raises(ValueError):
        dominate(t, "nope")


# --- properties ------------------------------------------------------------

@settings(max_examples=120, deadline=None)
@given(st.integers(1, 16), st.integers(0, 2**32))
def test_dp_matches_bruteforce(n, seed):
    t = random_tree(n, seed)
    g, w = gamma_dp(t)
    assert is_dominating(t, w) and len(w) == g
    assert g == gamma_bruteforce(t)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 120), st.integers(0, 2**32))
def test_greedy_is_minimum(n, seed):
    t = random_tree(n, seed)
    c = greedy_dominating(t)
    assert is_dominating(t, c.members)
    assert c.size == gamma_dp(t)[0]


@settings(max_examples=100, deadline=None)
@given(st.integers(3, 120), st.integers(0, 2**32), st.sampled_from(["zero-branch", "negative"]))
def test_alg2_contract(n, seed, bonus):
    t = random_script_t(n, seed)
    c = alg2_dominating(t, bonus=bonus)
    _, p = classify(t)
    assert is_dominating(t, c.members)
    assert c.size == gamma_dp(t)[0]
    assert c.size <= mu(t) + F(p - 1, 3)
    assert not alg2_push_violations(c)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([3, 4, 5, 8]), st.integers(9, 80), st.integers(0, 2**32))
def test_alg3_contract(k, n, seed):
    t = random_tk(n, k, seed)
    eps = alg3_epsilon(k)
    c = alg3_dominating(t, k)
    _, p = classify(t)
    assert is_dominating(t, c.members)
    assert c.size < (1 + eps) * p
    assert not alg3_push_violations(t, c, eps)
