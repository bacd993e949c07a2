"""E_mu, P_lambda and A_{lambda+rho}, plus their classical specializations.

>>> str(E((0, 1)))
'x2 + ((t-1)/(q*t-1))*x1'
>>> str(P((1, 0)))
'x2 + x1'
"""

from __future__ import annotations

import threading
from typing import Dict, Iterable, Optional, Sequence

from .algebra import ONE, Coeff, LaurentPoly, t
from .operators import (
    apply_partial,
    apply_tau_on_E,
    apply_tau_pi,
    apply_Tpi,
    mul_x,
    symmetrize_bosonic,
    symmetrize_fermionic,
)
from .weyl import (
    Comp,
    all_perms,
    as_comp,
    boxes,
    length,
    partition_of,
    poincare_Wlambda,
    rearrangements,
    sign,
    u_mu_arm,
    v_mu,
)


class ECache:
    """Memo table for E_mu, keyed by (n, mu) with min(mu) = 0.

    Values are pure functions of the key, so a racing double insert is harmless.
    """

    def __init__(self):
        self.store: Dict[Comp, LaurentPoly] = {}
        self._lock = threading.Lock()

    def get(self, mu: Comp) -> Optional[LaurentPoly]:
        return self.store.get(mu)

    def put(self, mu: Comp, f: LaurentPoly):
        with self._lock:
            self.store.setdefault(mu, f)

    def E(self, mu: Iterable[int]) -> LaurentPoly:
        mu = as_comp(mu)
        n = len(mu)
        m = min(mu)
        if m != 0:
            base = self.E(tuple(a - m for a in mu))
            return base.shift((m,) * n)
        hit = self.store.get(mu)
        if hit is not None:
            return hit
        if not any(mu):
            res = LaurentPoly.constant(n)
        elif mu[0] >= 1:
            nu = mu[1:] + (mu[0] - 1,)
            res = mul_x(1, apply_Tpi(self.E(nu))).scale(Coeff.monomial(nu[-1], 0))
        else:
            i = next(j for j in range(1, n) if mu[j - 1] < mu[j])
            rho = list(mu)
            rho[i - 1], rho[i] = rho[i], rho[i - 1]
            rho = tuple(rho)
            res = _raise_E2(self.E(rho), rho, i)
        self.put(mu, res)
        return res


def _raise_E2(F: LaurentPoly, rho: Comp, i: int) -> LaurentPoly:
    """(d_i x_i - t x_i d_i + (1-t) a/(1-a)) F, with a read off rho (rho_i > rho_{i+1})."""
    vr = v_mu(rho)
    a = Coeff.monomial(rho[i - 1] - rho[i], 2 * (vr[i - 1] - vr[i]))
    c = (ONE - t) * a / (ONE - a)
    return apply_partial(i, mul_x(i, F)) - mul_x(i, apply_partial(i, F)).scale(t) + F.scale(c)


DEFAULT_CACHE = ECache()


def E(mu: Iterable[int], cache: Optional[ECache] = None) -> LaurentPoly:
    """The nonsymmetric Macdonald polynomial E_mu for any mu in Z^n."""
    return (cache or DEFAULT_CACHE).E(mu)


def E_via_creation(mu: Iterable[int]) -> LaurentPoly:
    """E_mu = t^{-l(v_mu)/2} times the box word of intertwiners applied to 1.

    Boxes act in order of decreasing column, and within a column of
    decreasing row; every tau_i step then raises a strictly larger entry
    past a smaller one, which is asserted along the way.
    """
    mu = as_comp(mu)
    if min(mu) < 0:
        raise ValueError("E_via_creation needs a nonnegative composition")
    n = len(mu)
    f = LaurentPoly.constant(n)
    label: Comp = (0,) * n
    for (r, c) in sorted(boxes(mu), key=lambda b: (-b[1], -b[0])):
        f, label = apply_tau_pi(f, label)
        for i in range(1, u_mu_arm(mu, r, c) + 1):
            if label[i - 1] <= label[i]:
                raise AssertionError(f"creation word stalls at {label}, step {i}")
            f, label = apply_tau_on_E(i, f, label)
    if label != mu:
        raise AssertionError(f"creation word reached {label}, expected {mu}")
    return f.scale(Coeff.monomial(0, -length(v_mu(mu))))


def rho(n: int) -> Comp:
    return tuple(range(n - 1, -1, -1))


def vandermonde_divide(f: LaurentPoly) -> LaurentPoly:
    """f / prod_{i<j} (x_i - x_j), exactly."""
    n = f.n
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            f = f.exact_div_binomial(i, j)
    return f


def A_rho(n: int) -> LaurentPoly:
    """prod_{i<j} (x_j - t x_i)."""
    out = LaurentPoly.constant(n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out = out * (LaurentPoly.var(n, j) - LaurentPoly.var(n, i).scale(t))
    return out


def divide_by_A_rho(f: LaurentPoly) -> LaurentPoly:
    n = f.n
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            f = f.exact_div_binomial(j, i, t)
    return f


def _alternate(f: LaurentPoly) -> LaurentPoly:
    """sum_w det(w) w(f)."""
    acc = LaurentPoly(f.n)
    for w in all_perms(f.n):
        g = f.permute(w)
        acc = acc + (g if sign(w) == 1 else -g)
    return acc


def _check_decreasing(lam: Sequence[int]):
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"{tuple(lam)} is not weakly decreasing")


def P(lam: Iterable[int], cache: Optional[ECache] = None) -> LaurentPoly:
    """Symmetric Macdonald polynomial by symmetrizing E_lambda."""
    lam = as_comp(lam)
    _check_decreasing(lam)
    n = len(lam)
    F = E(lam, cache)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            F = F * (LaurentPoly.var(n, i) - LaurentPoly.var(n, j).scale(t))
    return vandermonde_divide(_alternate(F)).scale(poincare_Wlambda(lam).inverse())


def A(lam: Iterable[int], cache: Optional[ECache] = None) -> LaurentPoly:
    """A_{lambda+rho} by antisymmetrizing E_{lambda+rho}."""
    lam = as_comp(lam)
    _check_decreasing(lam)
    n = len(lam)
    lr = tuple(a + b for a, b in zip(lam, rho(n)))
    return A_rho(n) * vandermonde_divide(_alternate(E(lr, cache)))


def eexp_coeff(kind: str, lam: Sequence[int], mu: Sequence[int]) -> Coeff:
    """Coefficient of E_mu in the E-expansion of P_lambda or A_{lambda+rho}."""
    lam, mu = as_comp(lam), as_comp(mu)
    target = lam if kind == "P" else tuple(a + b for a, b in zip(lam, rho(len(lam))))
    if partition_of(mu) != partition_of(target):
        raise ValueError(f"{mu} is not a rearrangement of {target}")
    vm = v_mu(mu)
    n = len(mu)
    out = ONE
    for i in range(n):
        for j in range(i + 1, n):
            if mu[i] > mu[j]:
                d = mu[i] - mu[j]
                dv = vm[i] - vm[j]
                den = ONE - Coeff.monomial(d, 2 * dv)
                if kind == "P":
                    out = out * t * (ONE - Coeff.monomial(d, 2 * (dv - 1))) / den
                elif kind == "A":
                    out = out * -(ONE - Coeff.monomial(d, 2 * (dv + 1))) / den
                else:
                    raise ValueError(f"unknown kind {kind!r}")
    return out


def P_via_Eexpansion(lam: Iterable[int], cache: Optional[ECache] = None) -> LaurentPoly:
    lam = as_comp(lam)
    _check_decreasing(lam)
    acc = LaurentPoly(len(lam))
    for mu in rearrangements(lam):
        acc = acc + E(mu, cache).scale(eexp_coeff("P", lam, mu))
    return acc


def A_via_Eexpansion(lam: Iterable[int], cache: Optional[ECache] = None) -> LaurentPoly:
    lam = as_comp(lam)
    _check_decreasing(lam)
    lr = tuple(a + b for a, b in zip(lam, rho(len(lam))))
    acc = LaurentPoly(len(lam))
    for mu in rearrangements(lr):
        acc = acc + E(mu, cache).scale(eexp_coeff("A", lam, mu))
    return acc


def A_via_symmetrizer(lam: Iterable[int], cache: Optional[ECache] = None) -> LaurentPoly:
    """t^{l(w0)/2} eps_0 E_{lambda+rho}."""
    lam = as_comp(lam)
    n = len(lam)
    lr = tuple(a + b for a, b in zip(lam, rho(n)))
    return symmetrize_fermionic(E(lr, cache)).scale(Coeff.monomial(0, n * (n - 1) // 2))


def P_via_symmetrizer(lam: Iterable[int], cache: Optional[ECache] = None) -> LaurentPoly:
    """t^{l(w0)/2} 1_0 E_lambda / W_lambda(t)."""
    lam = as_comp(lam)
    n = len(lam)
    scale = Coeff.monomial(0, n * (n - 1) // 2) / poincare_Wlambda(lam)
    return symmetrize_bosonic(E(lam, cache)).scale(scale)


def monomial_symmetric(lam: Iterable[int]) -> LaurentPoly:
    lam = as_comp(lam)
    return LaurentPoly(len(lam), {mu: 1 for mu in rearrangements(lam)})


def schur(lam: Iterable[int]) -> LaurentPoly:
    """Bialternant a_{lambda+rho} / a_rho."""
    lam = as_comp(lam)
    _check_decreasing(lam)
    n = len(lam)
    top = LaurentPoly.monomial(tuple(a + b for a, b in zip(lam, rho(n))))
    return vandermonde_divide(_alternate(top))


def hall_littlewood(lam: Iterable[int], cache: Optional[ECache] = None) -> LaurentPoly:
    return P(lam, cache).map_coeffs(Coeff.q_to_zero)


def classical(kind: str, lam: Iterable[int], cache: Optional[ECache] = None) -> LaurentPoly:
    if kind == "schur":
        return schur(lam)
    if kind == "hall_littlewood":
        return hall_littlewood(lam, cache)
    if kind == "monomial":
        return monomial_symmetric(lam)
    raise ValueError(f"unknown kind {kind!r}")


def t_to_qt(f: LaurentPoly) -> LaurentPoly:
    return f.map_coeffs(Coeff.t_to_qt)


def q_to_t(f: LaurentPoly) -> LaurentPoly:
    return f.map_coeffs(Coeff.q_to_t)


def is_symmetric(f: LaurentPoly) -> bool:
    from .operators import apply_s

    return all(apply_s(i, f) == f for i in range(1, f.n))

