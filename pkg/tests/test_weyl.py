from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from macdonald.algebra import ONE, qfactorial, t
from macdonald.weyl import (
    act,
    all_perms,
    bruhat_leq,
    box_stats,
    compose,
    dblex_less,
    dominance_leq,
    inv_t_lambda,
    inv_u_mu,
    inverse,
    length,
    longest,
    n_of_lambda,
    partition_of,
    poincare_W0,
    poincare_Wlambda,
    reduced_word,
    simple,
    u_mu_arm,
    v_mu,
    z_mu,
)


def brute_bruhat(u, w):
    """u <= w iff some reduced word of w has a subword multiplying to u."""
    n = len(w)
    word = reduced_word(w)
    reach = {tuple(range(1, n + 1))}
    for i in word:
        reach |= {compose(x, simple(n, i)) for x in reach}
    return u in reach


def brute_min_sorter(mu):
    """Shortest w with w mu weakly increasing (w acts by moving entry r to slot w(r))."""
    n = len(mu)
    best = None
    for w in all_perms(n):
        out = act(w, mu)
        if all(out[i] <= out[i + 1] for i in range(n - 1)):
            if best is None or length(w) < length(best):
                best = w
    return best


def test_v_mu_examples():
    assert v_mu((0, 0)) == (1, 2)
    assert v_mu((1, 0)) == (2, 1)
    assert v_mu((0, 1, 0)) == (1, 3, 2)


@pytest.mark.parametrize("mu", [(0, 1, 0), (2, 0, 1), (1, 1, 0), (3, 1, 2, 1), (0, 0, 0)])
def test_v_mu_is_minimal_sorter(mu):
    assert v_mu(mu) == brute_min_sorter(mu)


def test_z_mu_examples():
    assert z_mu((3, 1, 2)) == (1, 3, 2)
    assert z_mu((2, 2)) == (1, 2)
    assert z_mu((0, 5)) == (2, 1)
    assert partition_of((3, 1, 2)) == (3, 2, 1)


def test_dblex_examples():
    assert dblex_less((1, 1), (2, 0))
    assert dblex_less((2, 0), (0, 2))
    assert not dblex_less((0, 2), (2, 0))
    assert not dblex_less((1, 1), (1, 1))


def test_dominance():
    assert dominance_leq((1, 1, 1), (3, 0, 0))
    assert not dominance_leq((3, 0, 0), (2, 1, 0))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_bruhat_against_subwords(n):
    perms = all_perms(n)
    for u in perms:
        for w in perms:
            assert bruhat_leq(u, w) == brute_bruhat(u, w)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_reduced_words(n):
    for w in all_perms(n):
        word = reduced_word(w)
        assert len(word) == length(w)
        x = tuple(range(1, n + 1))
        for i in word:
            x = compose(x, simple(n, i))
        assert x == w
        assert compose(w, inverse(w)) == tuple(range(1, n + 1))


def test_longest():
    assert length(longest(4)) == 6


def test_u_mu_arm_examples():
    assert u_mu_arm((1, 0), 1, 1) == 0
    assert u_mu_arm((0, 1), 2, 1) == 1
    assert u_mu_arm((4,), 1, 3) == 0


def test_inversion_sets():
    assert inv_t_lambda((1, 0)) == [(1, 2, 0)]
    assert inv_t_lambda((0, 0)) == []
    inv = inv_u_mu((0, 1))
    assert len(inv) == 1 and inv[0][2] == 1


def test_box_stats():
    assert box_stats((2, 1), (1, 1)) == dict(arm=1, leg=1, coarm=0, coleg=0, hook=3, content=0)
    assert box_stats((2, 1), (1, 2)) == dict(arm=0, leg=0, coarm=1, coleg=0, hook=1, content=1)
    assert box_stats((1,), (1, 1)) == dict(arm=0, leg=0, coarm=0, coleg=0, hook=1, content=0)


def test_poincare():
    assert poincare_W0(2) == ONE + t
    lam = (5, 5, 3, 2, 2, 2, 2, 2, -1, -1, -1)
    assert poincare_Wlambda(lam) == qfactorial(2) * qfactorial(1) * qfactorial(5) * qfactorial(3)
    assert n_of_lambda((2, 1, 0)) == 1


@given(st.permutations([1, 2, 3, 4]), st.permutations([1, 2, 3, 4]))
def test_length_is_inversion_count(u, w):
    u, w = tuple(u), tuple(w)
    inv = sum(1 for i in range(4) for j in range(i + 1, 4) if w[i] > w[j])
    assert length(w) == inv
    assert length(compose(u, w)) % 2 == (length(u) + length(w)) % 2
