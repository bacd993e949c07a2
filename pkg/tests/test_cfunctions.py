from fractions import Fraction

import pytest

from macdonald.algebra import ONE, LaurentPoly, PoleError, q, t, v
from macdonald.cfunctions import (
    EvalPoint,
    ct_closed,
    dim_schur,
    eval_cprod,
    hook_P,
    norm_P_closed,
    norm_ratio_A_over_P,
    norm_ratio_E,
    princspec_direct,
    princspec_E_closed,
    princspec_P_closed,
    qbinom,
    qdim_schur,
)
from macdonald.inner import inner
from macdonald.polynomials import A, E, P
from macdonald.weyl import inv_perm, longest, poincare_W0


def test_cprod_examples():
    assert eval_cprod(EvalPoint.t_mu((0, 0)), "cY", inv_perm(longest(2))) == (ONE + t) / v
    assert eval_cprod(EvalPoint.t_mu((0, 0)), "cY", []) == ONE
    for m in (1, 2, 3):
        val = eval_cprod(EvalPoint.t_mu((m, 0)), "cY", [(1, 2, 0)])
        assert v * val == t * (ONE - q ** m) / (ONE - q ** m * t)


def test_cprod_pole():
    with pytest.raises(PoleError):
        eval_cprod(EvalPoint.t_mu((0, 0)), "cY", [(1, 1, 0)])


def test_princspec_examples():
    x = LaurentPoly.var
    assert princspec_direct(x(2, 1) + x(2, 2)) == ONE + t
    assert princspec_direct(x(2, 2) - x(2, 1).scale(t)).is_zero()
    assert princspec_direct(LaurentPoly.constant(2)) == ONE
    assert princspec_P_closed((1, 0)) == ONE + t
    assert princspec_P_closed((0, 0)) == ONE
    direct = t + (ONE - t) / (ONE - q * t)
    assert princspec_direct(E((0, 1))) == direct == princspec_E_closed((0, 1))
    assert hook_P((1, 0)) == ONE + t


@pytest.mark.parametrize("lam", [(1, 0), (2, 1), (3, 1, 0), (2, 2, 1)])
def test_dimension(lam):
    via_q = qdim_schur(lam).at_v_equals_one().constant_value()
    via_hook = hook_P(lam).q_to_t().at_v_equals_one().constant_value()
    assert via_q == via_hook == dim_schur(lam)


def test_dimension_values():
    assert dim_schur((2, 1, 0)) == Fraction(8)
    assert dim_schur((1, 0, 0, 0)) == Fraction(4)


def test_norm_examples():
    assert norm_ratio_E((0, 0)) == ONE
    assert norm_P_closed((0, 0), 1) == poincare_W0(2, q)


def test_norm_at_k0_is_orbit_size():
    # W_lambda(1) would give 1 for (1,0); the direct pairing counts the orbit
    one = LaurentPoly.constant(2)
    for lam, size in [((1, 0), 2), ((0, 0), 1), ((2, 1), 2)]:
        f = P(lam)
        assert inner(f, f, 2, 0) == ONE * size
        assert norm_P_closed(lam, 0) == ONE * size
    assert poincare_W0(2, ONE) == ONE * 2


@pytest.mark.parametrize("lam", [(0, 0), (1, 0), (2, 0)])
@pytest.mark.parametrize("k", [1, 2])
def test_norm_A_over_P(lam, k):
    n = 2
    lr = (lam[0] + 1, lam[1])
    a, p = A(lam), P(lr)
    ratio = inner(a, a, n, k) / inner(p, p, n, k)
    assert ratio == norm_ratio_A_over_P(lam).t_to_q_power(k)


def test_qbinom_and_ct():
    assert qbinom(2, 1) == ONE + q
    assert ct_closed(2, 1) == ONE + q
    assert ct_closed(3, 0) == ONE
    with pytest.raises(ValueError):
        qbinom(1, 2)
