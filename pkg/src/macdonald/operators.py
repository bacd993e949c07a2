"""Operators on Laurent polynomials: Demazure-Lusztig T_i, promotion, Cherednik Y_i.

Conventions (all indices 1-based, t = v^2):

* ``T_i = v^-1 x_{i+1} d_i - v d_i x_{i+1}`` with d_i the divided difference.
* ``(T_pi f)(x_1, ..., x_n) = f(x_2, ..., x_n, q^-1 x_1)``, so T_pi x_i = x_{i+1} T_pi
  with x_{n+1} = q^-1 x_1.
* ``Y_j = T_{j-1}^-1 ... T_1^-1 T_pi T_{n-1} ... T_j``.

>>> from macdonald.algebra import x
>>> str(apply_T(1, x(2, 1)))
'(1/t^(1/2))*x2'
"""

from __future__ import annotations

from typing import Callable, Dict, Sequence, Tuple

from .algebra import ONE, Coeff, LaurentPoly, Scalar, as_coeff, q, v
from .weyl import Comp, Perm, all_perms, length, reduced_word, v_mu

Operator = Callable[[LaurentPoly], LaurentPoly]

_V_INV = Coeff.monomial(0, -1)
_V_DIFF = v - _V_INV  # t^(1/2) - t^(-1/2)


def _check_index(f: LaurentPoly, i: int, top: int | None = None):
    top = f.n - 1 if top is None else top
    if not 1 <= i <= top:
        raise IndexError(f"index {i} out of range for n={f.n}")


def apply_s(i: int, f: LaurentPoly) -> LaurentPoly:
    _check_index(f, i)
    out = {}
    for e, c in f.terms.items():
        e2 = list(e)
        e2[i - 1], e2[i] = e2[i], e2[i - 1]
        out[tuple(e2)] = c
    return LaurentPoly._raw(f.n, out)


def apply_partial(i: int, f: LaurentPoly) -> LaurentPoly:
    """d_i f = (f - s_i f) / (x_i - x_{i+1})."""
    return (f - apply_s(i, f)).exact_div_linear(i)


def mul_x(i: int, f: LaurentPoly, power: int = 1) -> LaurentPoly:
    e = [0] * f.n
    e[i - 1] = power
    return f.shift(tuple(e))


_T_CACHE: Dict[Tuple[int, int, Comp], LaurentPoly] = {}


def _T_monomial(n: int, i: int, e: Comp) -> LaurentPoly:
    key = (n, i, e)
    hit = _T_CACHE.get(key)
    if hit is None:
        m = LaurentPoly._raw(n, {e: ONE})
        a = mul_x(i + 1, apply_partial(i, m)).scale(_V_INV)
        b = apply_partial(i, mul_x(i + 1, m)).scale(v)
        hit = a - b
        _T_CACHE[key] = hit
    return hit


def _linear(f: LaurentPoly, image: Callable[[Comp], LaurentPoly]) -> LaurentPoly:
    acc: Dict[Comp, Coeff] = {}
    for e, c in f.terms.items():
        for e2, c2 in image(e).terms.items():
            p = c * c2
            s = acc.get(e2)
            acc[e2] = p if s is None else s + p
    return LaurentPoly._raw(f.n, {e: c for e, c in acc.items() if c})


def apply_T(i: int, f: LaurentPoly) -> LaurentPoly:
    """T_i f; monomial images are computed once from the divided-difference form."""
    _check_index(f, i)
    return _linear(f, lambda e: _T_monomial(f.n, i, e))


def apply_T_inv(i: int, f: LaurentPoly) -> LaurentPoly:
    """T_i^-1 = T_i - (t^(1/2) - t^(-1/2))."""
    return apply_T(i, f) - f.scale(_V_DIFF)


def apply_Tpi(f: LaurentPoly) -> LaurentPoly:
    """x^mu -> q^{-mu_n} x^{(mu_n, mu_1, ..., mu_{n-1})}."""
    out = {}
    for e, c in f.terms.items():
        last = e[-1]
        out[(last,) + e[:-1]] = c * Coeff.monomial(-last, 0) if last else c
    return LaurentPoly._raw(f.n, out)


def apply_Tpi_inv(f: LaurentPoly) -> LaurentPoly:
    """x^nu -> q^{nu_1} x^{(nu_2, ..., nu_n, nu_1)}."""
    out = {}
    for e, c in f.terms.items():
        first = e[0]
        out[e[1:] + (first,)] = c * Coeff.monomial(first, 0) if first else c
    return LaurentPoly._raw(f.n, out)


def apply_y(i: int, f: LaurentPoly) -> LaurentPoly:
    """y_i x^mu = q^{-mu_i} x^mu."""
    _check_index(f, i, f.n)
    out = {}
    for e, c in f.terms.items():
        out[e] = c * Coeff.monomial(-e[i - 1], 0) if e[i - 1] else c
    return LaurentPoly._raw(f.n, out)


def apply_Y(i: int, f: LaurentPoly) -> LaurentPoly:
    n = f.n
    _check_index(f, i, n)
    g = f
    for j in range(i, n):
        g = apply_T(j, g)
    g = apply_Tpi(g)
    for j in range(1, i):
        g = apply_T_inv(j, g)
    return g


def apply_Y_inv(i: int, f: LaurentPoly) -> LaurentPoly:
    n = f.n
    _check_index(f, i, n)
    g = f
    for j in range(i - 1, 0, -1):
        g = apply_T(j, g)
    g = apply_Tpi_inv(g)
    for j in range(n - 1, i - 1, -1):
        g = apply_T_inv(j, g)
    return g


def apply_C(i: int, f: LaurentPoly) -> LaurentPoly:
    """C_i = T_i + t^(-1/2)."""
    return apply_T(i, f) + f.scale(_V_INV)


def apply_D(i: int, f: LaurentPoly, forward: bool = True) -> LaurentPoly:
    """Demazure-type projectors.

    forward:  D_{i,i+1} = (1 + s_i) (1 - x_i/x_{i+1})^-1
    backward: D_{i+1,i} = (1 + s_i) (1 - x_{i+1}/x_i)^-1
    """
    _check_index(f, i)
    sf = apply_s(i, f)
    if forward:
        num = mul_x(i, sf) - mul_x(i + 1, f)
    else:
        num = mul_x(i, f) - mul_x(i + 1, sf)
    return num.exact_div_linear(i)


def apply_Tpi_vee(f: LaurentPoly) -> LaurentPoly:
    """T_pi^vee = x_1 T_1 T_2 ... T_{n-1}."""
    g = f
    for j in range(f.n - 1, 0, -1):
        g = apply_T(j, g)
    return mul_x(1, g)


def apply_T_word(word: Sequence[int], f: LaurentPoly) -> LaurentPoly:
    """T_{i1} T_{i2} ... T_{il} f (the last letter acts first)."""
    for i in reversed(word):
        f = apply_T(i, f)
    return f


def hecke_orbit(f: LaurentPoly) -> Dict[Perm, LaurentPoly]:
    """T_w f for every w in S_n, built along lexicographically first reduced words."""
    n = f.n
    perms = sorted(all_perms(n), key=length)
    out: Dict[Perm, LaurentPoly] = {}
    for w in perms:
        word = reduced_word(w)
        if not word:
            out[w] = f
            continue
        # w = s_i w' with i the first letter
        i = word[0]
        rest = tuple(i + 1 if a == i else i if a == i + 1 else a for a in w)
        out[w] = apply_T(i, out[rest])
    return out


def symmetrize_bosonic(f: LaurentPoly) -> LaurentPoly:
    """sum_w t^{(l(w) - l(w0))/2} T_w f."""
    n = f.n
    l0 = n * (n - 1) // 2
    acc = LaurentPoly(n)
    for w, g in hecke_orbit(f).items():
        acc = acc + g.scale(Coeff.monomial(0, length(w) - l0))
    return acc


def symmetrize_fermionic(f: LaurentPoly) -> LaurentPoly:
    """sum_w (-t^{-1/2})^{l(w) - l(w0)} T_w f."""
    n = f.n
    l0 = n * (n - 1) // 2
    acc = LaurentPoly(n)
    for w, g in hecke_orbit(f).items():
        d = length(w) - l0
        acc = acc + g.scale(Coeff.monomial(0, -d, -1 if d % 2 else 1))
    return acc


def Y_ratio_eigenvalue(mu: Sequence[int], i: int) -> Coeff:
    """ev_mu(Y_i^-1 Y_{i+1}) = q^{mu_i - mu_{i+1}} t^{v_mu(i) - v_mu(i+1)}."""
    vm = v_mu(mu)
    return Coeff.monomial(mu[i - 1] - mu[i], 2 * (vm[i - 1] - vm[i]))


def Y_eigenvalue(mu: Sequence[int], i: int) -> Coeff:
    """q^{-mu_i} t^{-(v_mu(i) - 1) + (n - 1)/2}."""
    n = len(mu)
    vm = v_mu(mu)
    return Coeff.monomial(-mu[i - 1], -2 * (vm[i - 1] - 1) + (n - 1))


def apply_tau_on_E(i: int, E: LaurentPoly, mu: Sequence[int]) -> Tuple[LaurentPoly, Comp]:
    """Intertwiner tau_i^vee on the eigenvector E with label mu.

    Uses tau_i^vee = T_i + (t^(-1/2) - t^(1/2)) / (1 - ev_mu(Y_i^-1 Y_{i+1})).
    Returns the image and the label s_i mu of its eigenvalue.
    """
    mu = tuple(mu)
    sm = list(mu)
    sm[i - 1], sm[i] = sm[i], sm[i - 1]
    sm = tuple(sm)
    if mu[i - 1] == mu[i]:
        return LaurentPoly(E.n), sm
    c = (_V_INV - v) / (ONE - Y_ratio_eigenvalue(mu, i))
    return apply_T(i, E) + E.scale(c), sm


def apply_tau_pi(E: LaurentPoly, mu: Sequence[int]) -> Tuple[LaurentPoly, Comp]:
    """tau_pi^vee = T_pi^vee, sending the label mu to (mu_n + 1, mu_1, ..., mu_{n-1})."""
    mu = tuple(mu)
    return apply_Tpi_vee(E), (mu[-1] + 1,) + mu[:-1]


def compose_ops(*ops: Operator) -> Operator:
    """compose_ops(A, B)(f) = A(B(f))."""

    def run(f: LaurentPoly) -> LaurentPoly:
        for op in reversed(ops):
            f = op(f)
        return f

    return run


def scalar_op(c: Scalar) -> Operator:
    c = as_coeff(c)
    return lambda f: f.scale(c)


def x_op(i: int, power: int = 1) -> Operator:
    return lambda f: mul_x(i, f, power)


def x_op_affine(i: int, n: int) -> Operator:
    """x_i with the convention x_{n+1} = q^-1 x_1."""
    if i == n + 1:
        return lambda f: mul_x(1, f).scale(q.inverse())
    return x_op(i)
