"""c-function products at evaluation points, principal specializations and norms.

Every evaluation point sends Y_i to a monomial q^a v^b, so a c-function
factor for the (possibly affine) pair (i, j + l n) only needs the scalar
z = q^l ev(Y_i^-1 Y_j):

    cYinv  = (v^-1 - v z) / (1 - z)
    cY     = (v^-1 - v / z) / (1 - 1/z)
    cYcYinv = (1 - t z)(1 - z/t) / (1 - z)^2

>>> from macdonald.weyl import inv_perm, longest
>>> str(eval_cprod(EvalPoint.t_mu((0, 0)), "cY", inv_perm(longest(2))))
'(t+1)/t^(1/2)'
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from .algebra import ONE, Coeff, LaurentPoly, PoleError, q, t, v
from .weyl import (
    AffinePair,
    Comp,
    as_comp,
    box_stats,
    boxes,
    inv_decreasing,
    inv_perm,
    inv_t_lambda,
    inv_u_mu,
    length,
    longest,
    n_of_lambda,
    partition_of,
    poincare_W0,
    poincare_Wlambda,
    u_mu_arm,
    v_mu,
)

_V_INV = Coeff.monomial(0, -1)


@dataclass(frozen=True)
class EvalPoint:
    """A homomorphism C[Y] -> Q(q, v) with Y_i -> q^{a_i} v^{b_i}."""

    kind: str
    n: int
    data: Comp = ()

    @classmethod
    def t_mu(cls, mu: Sequence[int]) -> "EvalPoint":
        return cls("ev_t_mu", len(mu), as_comp(mu))

    @classmethod
    def tinv_0(cls, n: int) -> "EvalPoint":
        return cls("ev_tinv_0", n)

    @classmethod
    def qlam_trho(cls, lam: Sequence[int]) -> "EvalPoint":
        return cls("ev_qlam_trho", len(lam), as_comp(lam))

    def Y(self, i: int) -> Tuple[int, int]:
        """Exponents (a, b) with Y_i -> q^a v^b."""
        n = self.n
        if self.kind == "ev_t_mu":
            vm = v_mu(self.data)
            return (-self.data[i - 1], -2 * (vm[i - 1] - 1) + (n - 1))
        if self.kind == "ev_tinv_0":
            return (0, 2 * (i - 1) - (n - 1))
        if self.kind == "ev_qlam_trho":
            return (self.data[i - 1], 2 * (n - i))
        raise ValueError(f"unknown evaluation point {self.kind!r}")

    def ratio(self, i: int, j: int, shift: int = 0) -> Coeff:
        """q^shift ev(Y_i^-1 Y_j)."""
        ai, bi = self.Y(i)
        aj, bj = self.Y(j)
        return Coeff.monomial(shift + aj - ai, bj - bi)


def _factor(kind: str, z: Coeff) -> Coeff:
    if z == ONE:
        raise PoleError("c-function denominator vanishes at this point")
    if kind == "cYinv":
        return (_V_INV - v * z) / (ONE - z)
    if kind == "cY":
        zi = z.inverse()
        return (_V_INV - v * zi) / (ONE - zi)
    if kind == "cYcYinv":
        return (ONE - t * z) * (ONE - z / t) / (ONE - z) ** 2
    raise ValueError(f"unknown c-function kind {kind!r}")


def eval_cprod(point: EvalPoint, kind: str, pairs: Iterable[AffinePair]) -> Coeff:
    out = ONE
    for (i, j, l) in pairs:
        out = out * _factor(kind, point.ratio(i, j, l))
    return out


def princspec_direct(f: LaurentPoly) -> Coeff:
    """f(1, t, ..., t^{n-1})."""
    total = Coeff(0)
    for e, c in f.terms.items():
        total = total + c * Coeff.monomial(0, 2 * sum(i * a for i, a in enumerate(e)))
    return total


def princspec_E_closed(mu: Sequence[int]) -> Coeff:
    """t^{(n-1)|mu|/2} t^{-l(v_mu)/2} ev^t_0(c^{Y^-1}_{u_mu}); this equals t^{n(lambda)} times the box product."""
    mu = as_comp(mu)
    n = len(mu)
    pre = Coeff.monomial(0, (n - 1) * sum(mu) - length(v_mu(mu)))
    return pre * eval_cprod(EvalPoint.t_mu((0,) * n), "cYinv", inv_u_mu(mu))


def princspec_E_product(mu: Sequence[int]) -> Coeff:
    """t^{n(lambda)} prod over boxes (r, c) and i <= u_mu(r, c) of the explicit factors."""
    mu = as_comp(mu)
    vm = v_mu(mu)
    out = t ** n_of_lambda(partition_of(mu))
    for (r, c) in boxes(mu):
        d = mu[r - 1] - c + 1
        for i in range(1, u_mu_arm(mu, r, c) + 1):
            out = out * (ONE - Coeff.monomial(d, 2 * (vm[r - 1] - i + 1))) / (
                ONE - Coeff.monomial(d, 2 * (vm[r - 1] - i))
            )
    return out


def princspec_P_closed(lam: Sequence[int]) -> Coeff:
    """t^{(n-1)|lambda|/2} ev^{t^-1}_0(c^{Y^-1}_{t_lambda})."""
    lam = as_comp(lam)
    n = len(lam)
    pre = Coeff.monomial(0, (n - 1) * sum(lam))
    return pre * eval_cprod(EvalPoint.tinv_0(n), "cYinv", inv_t_lambda(lam))


def princspec_P_product(lam: Sequence[int]) -> Coeff:
    lam = as_comp(lam)
    n = len(lam)
    out = t ** n_of_lambda(lam)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for l in range(lam[i - 1] - lam[j - 1]):
                out = out * (ONE - Coeff.monomial(l, 2 * (j - i + 1))) / (
                    ONE - Coeff.monomial(l, 2 * (j - i))
                )
    return out


def hook_P(lam: Sequence[int]) -> Coeff:
    lam = as_comp(lam)
    n = len(lam)
    out = t ** n_of_lambda(lam)
    for b in boxes(lam):
        s = box_stats(lam, b)
        out = out * (ONE - Coeff.monomial(s["coarm"], 2 * (n - s["coleg"]))) / (
            ONE - Coeff.monomial(s["arm"], 2 * (s["leg"] + 1))
        )
    return out


def hook_E(mu: Sequence[int]) -> Coeff:
    mu = as_comp(mu)
    vm = v_mu(mu)
    out = t ** n_of_lambda(partition_of(mu))
    for (r, c) in boxes(mu):
        out = out * (ONE - Coeff.monomial(c, 2 * vm[r - 1])) / (
            ONE - Coeff.monomial(mu[r - 1] - c + 1, 2 * (vm[r - 1] - u_mu_arm(mu, r, c)))
        )
    return out


def qdim_schur(lam: Sequence[int]) -> Coeff:
    """t^{n(lambda)} prod_b (1 - t^{n + c(b)}) / (1 - t^{h(b)})."""
    lam = as_comp(lam)
    n = len(lam)
    out = t ** n_of_lambda(lam)
    for b in boxes(lam):
        s = box_stats(lam, b)
        out = out * (ONE - t ** (n + s["content"])) / (ONE - t ** s["hook"])
    return out


def dim_schur(lam: Sequence[int]) -> Fraction:
    """prod_b (n + c(b)) / h(b)."""
    lam = as_comp(lam)
    n = len(lam)
    out = Fraction(1)
    for b in boxes(lam):
        s = box_stats(lam, b)
        out *= Fraction(n + s["content"], s["hook"])
    return out


def norm_ratio_E(mu: Sequence[int]) -> Coeff:
    """(E_mu, E_mu) / (1, 1) = ev^t_0(c^Y_{u_mu} c^{Y^-1}_{u_mu})."""
    mu = as_comp(mu)
    return eval_cprod(EvalPoint.t_mu((0,) * len(mu)), "cYcYinv", inv_u_mu(mu))


def norm_ratio_E_product(mu: Sequence[int]) -> Coeff:
    """The same ratio written out box by box."""
    mu = as_comp(mu)
    vm = v_mu(mu)
    out = ONE
    for (r, c) in boxes(mu):
        d = mu[r - 1] - c + 1
        a = vm[r - 1]
        for i in range(1, u_mu_arm(mu, r, c) + 1):
            out = out * (
                (ONE - Coeff.monomial(d, 2 * (a - i + 1)))
                * (ONE - Coeff.monomial(d, 2 * (a - i - 1)))
                / (ONE - Coeff.monomial(d, 2 * (a - i))) ** 2
            )
    return out


def norm_ratio_P_over_E(lam: Sequence[int]) -> Coeff:
    """(P, P) / (E_lambda, E_lambda) = W_0/W_lambda t^{-l(v_lambda)/2} ev^t_lambda(c^Y_{v_lambda})."""
    lam = as_comp(lam)
    n = len(lam)
    pairs = inv_decreasing(lam)
    pre = poincare_W0(n) / poincare_Wlambda(lam) * Coeff.monomial(0, -len(pairs))
    return pre * eval_cprod(EvalPoint.t_mu(lam), "cY", pairs)


def norm_ratio_A_over_P(lam: Sequence[int]) -> Coeff:
    """(A_{lambda+rho}, A_{lambda+rho}) / (P_{lambda+rho}, P_{lambda+rho})."""
    lam = as_comp(lam)
    n = len(lam)
    lr = tuple(a + n - 1 - i for i, a in enumerate(lam))
    pairs = inv_perm(longest(n))
    pt = EvalPoint.t_mu(lr)
    return eval_cprod(pt, "cYinv", pairs) / eval_cprod(pt, "cY", pairs)


def norm_P_closed(lam: Sequence[int], k: int) -> Coeff:
    """(P_lambda, P_lambda) at t = q^k in closed form.

    For k >= 1 this is W_0(q^k) prod_{i<j} prod_{r=1}^{k-1}
    (1 - q^{lambda_i - lambda_j + r + k(j-i)}) / (1 - q^{lambda_i - lambda_j - r + k(j-i)}).
    At k = 0 the kernel is 1 and the norm is the orbit size n!/|W_lambda|.
    """
    lam = as_comp(lam)
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = len(lam)
    one = Coeff(1)
    if k == 0:
        return poincare_W0(n, one) / poincare_Wlambda(lam, one)
    out = poincare_W0(n, q ** k)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            d = lam[i - 1] - lam[j - 1] + k * (j - i)
            for r in range(1, k):
                out = out * (ONE - q ** (d + r)) / (ONE - q ** (d - r))
    return out


def qbinom(m: int, k: int) -> Coeff:
    if not 0 <= k <= m:
        raise ValueError(f"need 0 <= k <= m, got m={m}, k={k}")
    out = ONE
    for i in range(k):
        out = out * (ONE - q ** (m - i)) / (ONE - q ** (i + 1))
    return out


def ct_closed(n: int, k: int) -> Coeff:
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    out = ONE
    for i in range(2, n + 1):
        out = out * qbinom(i * k, k)
    return out


def stabilizer_pairs(lam: Sequence[int]) -> list:
    """Inversions of the longest element of the stabilizer of lam."""
    n = len(lam)
    return [(i + 1, j + 1, 0) for i in range(n) for j in range(i + 1, n) if lam[i] == lam[j]]
