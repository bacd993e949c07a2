"""The scalar product at t = q^k as a constant term against a finite kernel.

    (f, g) = ct( (f * bar(g))|_{t = q^k} * J_k )
    J_k = prod_{i<j} prod_{r=0}^{k-1} (1 - q^r x_i/x_j) prod_{r=1}^{k} (1 - q^r x_j/x_i)

>>> from macdonald.algebra import LaurentPoly
>>> one = LaurentPoly.constant(2)
>>> str(inner(one, one, 2, 1))
'q+1'
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, List, Sequence, Tuple

from .algebra import ONE, Coeff, LaurentPoly, q
from .operators import (
    apply_T,
    apply_T_inv,
    apply_Tpi,
    apply_Tpi_inv,
    apply_Y,
    apply_Y_inv,
    mul_x,
)
from .polynomials import A_rho, is_symmetric
from .weyl import poincare_W0


@lru_cache(maxsize=None)
def kernel(n: int, k: int) -> LaurentPoly:
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = LaurentPoly.constant(n)
    one = LaurentPoly.constant(n)
    for i in range(n):
        for j in range(i + 1, n):
            up = [0] * n
            up[i], up[j] = 1, -1
            down = [0] * n
            down[i], down[j] = -1, 1
            for r in range(k):
                out = out * (one - LaurentPoly.monomial(up, q ** r))
            for r in range(1, k + 1):
                out = out * (one - LaurentPoly.monomial(down, q ** r))
    return out


def specialize(f: LaurentPoly, k: int) -> LaurentPoly:
    """t -> q^k on every coefficient."""
    return f.map_coeffs(lambda c: c.t_to_q_power(k))


def inner(f: LaurentPoly, g: LaurentPoly, n: int, k: int) -> Coeff:
    if f.n != n or g.n != n:
        raise ValueError("polynomials must live in n variables")
    K = kernel(n, k).terms
    fs = specialize(f, k).terms
    gs = specialize(g.bar(), k).terms
    total = Coeff(0)
    for a, ca in fs.items():
        for b, cb in gs.items():
            kc = K.get(tuple(-x - y for x, y in zip(a, b)))
            if kc is not None:
                total = total + ca * cb * kc
    return total


def coeff_conjugate(g: LaurentPoly) -> LaurentPoly:
    """g^t: q -> 1/q, t -> 1/t on coefficients, variables untouched."""
    return g.map_coeffs(Coeff.bar)


def inner_sym(f: LaurentPoly, g: LaurentPoly, n: int, k: int) -> Coeff:
    """<f, g> = (f, g^t) / W_0(t) at t = q^k."""
    if not (is_symmetric(f) and is_symmetric(g)):
        raise ValueError("inner_sym needs symmetric arguments")
    return inner(f, coeff_conjugate(g), n, k) / poincare_W0(n, q ** k)


@dataclass
class Report:
    checked: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, what: str):
        self.checked += 1
        if not ok:
            self.failures.append(what)


Op = Callable[[LaurentPoly], LaurentPoly]


def adjoint_pairs(n: int) -> List[Tuple[str, Op, Op, int]]:
    """(name, A, A^*, s) for x_i, T_i, T_pi, Y_i.

    T_i and Y_i have images odd in t^(1/2), where t -> q^k is undefined.
    s is the power of t^(1/2) that makes v^s A and v^s A^* even.
    """
    out: List[Tuple[str, Op, Op, int]] = []
    for i in range(1, n + 1):
        out.append((f"x{i}", lambda f, i=i: mul_x(i, f), lambda f, i=i: mul_x(i, f, -1), 0))
    for i in range(1, n):
        out.append((f"T{i}", lambda f, i=i: apply_T(i, f), lambda f, i=i: apply_T_inv(i, f), 1))
    out.append(("Tpi", apply_Tpi, apply_Tpi_inv, 0))
    for i in range(1, n + 1):
        out.append(
            (f"Y{i}", lambda f, i=i: apply_Y(i, f), lambda f, i=i: apply_Y_inv(i, f), n - 1)
        )
    return out


def adjoint_holds(op: Op, adj: Op, s: int, f: LaurentPoly, g: LaurentPoly, n: int, k: int) -> bool:
    """(A f, g) = (f, A^* g), tested as (v^s A f, g) = q^{ks} (f, v^s A^* g)."""
    vs = Coeff.monomial(0, s)
    lhs = inner(op(f).scale(vs), g, n, k)
    rhs = inner(f, adj(g).scale(vs), n, k) * q ** (k * s)
    return lhs == rhs


def verify_adjoints(n: int, k: int, sample: Sequence[LaurentPoly]) -> Report:
    rep = Report()
    for name, op, adj, s in adjoint_pairs(n):
        for a, f in enumerate(sample):
            for b, g in enumerate(sample):
                ok = adjoint_holds(op, adj, s, f, g, n, k)
                rep.record(ok, f"({name} f{a}, f{b}) != (f{a}, {name}^* f{b}) at n={n}, k={k}")
    return rep


def level_shift_factor(n: int, k: int) -> Coeff:
    """W_0(q^{k+1}) / W_0(q^{-k})."""
    return poincare_W0(n, q ** (k + 1)) / poincare_W0(n, q ** (-k))


def verify_level_shift(f: LaurentPoly, g: LaurentPoly, n: int, k: int) -> Report:
    """(f, g) at t = q^{k+1} against the A_rho-twisted product at t = q^k."""
    if not (is_symmetric(f) and is_symmetric(g)):
        raise ValueError("level shift needs symmetric arguments")
    rep = Report()
    ar = A_rho(n)
    lhs = inner(f, g, n, k + 1)
    rhs = level_shift_factor(n, k) * inner(ar * f, ar * g, n, k)
    rep.record(lhs == rhs, f"level shift fails at n={n}, k={k}: {lhs} vs {rhs}")
    return rep


def normalized(f: LaurentPoly, g: LaurentPoly, n: int, k: int) -> Coeff:
    return inner(f, g, n, k) / inner(LaurentPoly.constant(n), LaurentPoly.constant(n), n, k)
