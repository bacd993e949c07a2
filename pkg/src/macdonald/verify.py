"""Named invariant suites, shared by the command line and the tests.

Each suite walks its cases in a fixed order and stops at the first
failure, so the reported counterexample is the smallest in that order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Dict, Iterator, Optional, Tuple

from . import cfunctions as cf
from . import inner as ip
from . import operators as ops
from . import polynomials as mp
from .algebra import ONE, Coeff, LaurentPoly, q, v
from .weyl import (
    compositions,
    dblex_less,
    partitions_in_box,
    poincare_enumerated,
    poincare_W0,
    poincare_Wlambda,
)

V_DIFF = v - Coeff.monomial(0, -1)


@dataclass
class Outcome:
    suite: str
    checked: int
    failure: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.failure is None


Case = Tuple[str, Callable[[], bool]]


def _run(suite: str, cases: Iterator[Case]) -> Outcome:
    count = 0
    for label, check in cases:
        count += 1
        if not check():
            return Outcome(suite, count, label)
    return Outcome(suite, count)


def eigenvalue_cases(n: int, max_deg: int) -> Iterator[Case]:
    for mu in compositions(n, -2, max_deg, max_sum=max_deg):
        f = mp.E(mu)
        for i in range(1, n + 1):
            yield (
                f"Y_{i} E_{mu} != eigenvalue * E_{mu}",
                lambda f=f, i=i, mu=mu: ops.apply_Y(i, f) == f.scale(ops.Y_eigenvalue(mu, i)),
            )
        yield (f"E_{mu} fails the triangularity property", lambda f=f, mu=mu: triangular(f, mu))


def triangular(f: LaurentPoly, mu) -> bool:
    mu = tuple(mu)
    if f.coeff(mu) != ONE:
        return False
    if not all(c.is_even_in_v() for _, c in f):
        return False
    return all(sum(e) == sum(mu) and (e == mu or dblex_less(e, mu)) for e in f.terms)


def monomials(n: int, lo: int = -2, hi: int = 2) -> Iterator[LaurentPoly]:
    for e in product(range(lo, hi + 1), repeat=n):
        yield LaurentPoly.monomial(e)


def relation_checks(n: int) -> Dict[str, Callable[[LaurentPoly], bool]]:
    """Operator identities, each as a predicate on a test polynomial."""
    T, Ti, Tp = ops.apply_T, ops.apply_T_inv, ops.apply_Tpi
    X = ops.mul_x
    checks: Dict[str, Callable[[LaurentPoly], bool]] = {}
    for i in range(1, n):
        checks[f"quadratic T{i}"] = lambda f, i=i: T(i, T(i, f)) == T(i, f).scale(V_DIFF) + f
        checks[f"inverse T{i}"] = lambda f, i=i: Ti(i, T(i, f)) == f
        checks[f"Bernstein T{i} x{i}"] = lambda f, i=i: T(i, X(i, f)) == X(
            i + 1, T(i, f)
        ) - X(i + 1, f).scale(V_DIFF)
        checks[f"Bernstein T{i} x{i + 1}"] = lambda f, i=i: T(i, X(i + 1, f)) == X(
            i, T(i, f)
        ) + X(i + 1, f).scale(V_DIFF)
        checks[f"T-past-Y {i}"] = lambda f, i=i: T(i, ops.apply_Y(i, f)) == ops.apply_Y(
            i + 1, T(i, f)
        ) + ops.apply_Y(i, f).scale(V_DIFF)
    for i in range(1, n - 1):
        checks[f"braid {i}"] = lambda f, i=i: T(i, T(i + 1, T(i, f))) == T(i + 1, T(i, T(i + 1, f)))
        checks[f"promotion T{i}"] = lambda f, i=i: Tp(T(i, f)) == T(i + 1, Tp(f))
    for i in range(1, n - 1):
        for j in range(i + 2, n):
            checks[f"commute T{i} T{j}"] = lambda f, i=i, j=j: T(i, T(j, f)) == T(j, T(i, f))
    for i in range(1, n):
        checks[f"promotion x{i}"] = lambda f, i=i: Tp(X(i, f)) == X(i + 1, Tp(f))
    checks[f"promotion x{n}"] = lambda f: Tp(X(n, f)) == X(1, Tp(f)).scale(q.inverse())
    checks["Tpi inverse"] = lambda f: ops.apply_Tpi_inv(Tp(f)) == f
    checks["glue"] = lambda f: Ti(1, Tp(ops.apply_Tpi_vee(f))) == ops.apply_Tpi_vee(
        Tp(T(n - 1, f))
    )
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            checks[f"Y{i} Y{j} commute"] = lambda f, i=i, j=j: ops.apply_Y(
                i, ops.apply_Y(j, f)
            ) == ops.apply_Y(j, ops.apply_Y(i, f))

    def tpi_power(f):
        g = f
        for _ in range(n):
            g = Tp(g)
        h = f
        for i in range(n, 0, -1):
            h = ops.apply_Y(i, h)
        return g == h

    checks["Tpi^n = Y1...Yn"] = tpi_power
    return checks


def relation_cases(n: int, max_deg: int) -> Iterator[Case]:
    r = min(max_deg, 2)
    checks = relation_checks(n)
    for f in monomials(n, -r, r):
        e = next(iter(f.terms))
        for name, pred in checks.items():
            yield (f"{name} fails on x^{e}", lambda pred=pred, f=f: pred(f))


def expansion_cases(n: int, max_deg: int) -> Iterator[Case]:
    for mu in compositions(n, 0, max_deg):
        yield (f"E_via_creation{mu} != E{mu}", lambda mu=mu: mp.E_via_creation(mu) == mp.E(mu))
    for lam in partitions_in_box(n, max_deg):
        yield (f"P_via_Eexpansion{lam} != P{lam}", lambda lam=lam: mp.P_via_Eexpansion(lam) == mp.P(lam))
        yield (f"A_via_Eexpansion{lam} != A{lam}", lambda lam=lam: mp.A_via_Eexpansion(lam) == mp.A(lam))
        yield (f"symmetrizer form of A{lam}", lambda lam=lam: mp.A_via_symmetrizer(lam) == mp.A(lam))
        yield (f"symmetrizer form of P{lam}", lambda lam=lam: mp.P_via_symmetrizer(lam) == mp.P(lam))


def specialization_cases(n: int, max_deg: int) -> Iterator[Case]:
    for mu in compositions(n, 0, max_deg):

        def chain(mu=mu):
            d = cf.princspec_direct(mp.E(mu))
            return d == cf.princspec_E_closed(mu) == cf.princspec_E_product(mu) == cf.hook_E(mu)

        yield (f"principal specialization of E{mu}", chain)
    for lam in partitions_in_box(n, max_deg):

        def pchain(lam=lam):
            d = cf.princspec_direct(mp.P(lam))
            return d == cf.princspec_P_closed(lam) == cf.princspec_P_product(lam) == cf.hook_P(lam)

        yield (f"principal specialization of P{lam}", pchain)
        yield (f"A{lam}(1, t, ...) != 0", lambda lam=lam: cf.princspec_direct(mp.A(lam)).is_zero())
        yield (
            f"E{lam} at q=0 != x^{lam}",
            lambda lam=lam: mp.E(lam).map_coeffs(Coeff.q_to_zero) == LaurentPoly.monomial(lam),
        )
        yield (f"P{lam} at q=t != s{lam}", lambda lam=lam: mp.q_to_t(mp.P(lam)) == mp.schur(lam))
        yield (
            f"dimension of s{lam}",
            lambda lam=lam: cf.qdim_schur(lam).at_v_equals_one().constant_value()
            == cf.dim_schur(lam)
            == cf.hook_P(lam).q_to_t().at_v_equals_one().constant_value(),
        )
        yield (
            f"Poincare polynomial of {lam}",
            lambda lam=lam: poincare_Wlambda(lam) == poincare_enumerated(lam)
            and poincare_W0(n) == poincare_enumerated((0,) * n),
        )


def wcf_cases(n: int, max_deg: int) -> Iterator[Case]:
    ar = mp.A_rho(n)
    for lam in partitions_in_box(n, max_deg):
        yield (
            f"Weyl character formula for {lam}",
            lambda lam=lam: ar * mp.t_to_qt(mp.P(lam)) == mp.A(lam),
        )


def orthogonality_cases(n: int, max_deg: int, k: int) -> Iterator[Case]:
    mus = [m for m in compositions(n, 0, min(max_deg, 2)) if sum(m) <= max_deg]
    for a in mus:
        for b in mus:
            if a != b and sum(a) == sum(b):
                yield (
                    f"(E{a}, E{b}) != 0 at t=q^{k}",
                    lambda a=a, b=b: ip.inner(mp.E(a), mp.E(b), n, k).is_zero(),
                )


def norm_cases(n: int, max_deg: int, k: int) -> Iterator[Case]:
    one = LaurentPoly.constant(n)
    yield (f"ct of kernel({n},{k})", lambda: ip.inner(one, one, n, k) == cf.ct_closed(n, k))
    for mu in compositions(n, 0, max_deg):

        def enorm(mu=mu):
            r = ip.inner(mp.E(mu), mp.E(mu), n, k) / ip.inner(one, one, n, k)
            closed = cf.norm_ratio_E(mu)
            return closed == cf.norm_ratio_E_product(mu) and r == closed.t_to_q_power(k)

        yield (f"norm of E{mu} at t=q^{k}", enorm)
    for lam in partitions_in_box(n, max_deg):

        def pnorm(lam=lam):
            pp = ip.inner(mp.P(lam), mp.P(lam), n, k)
            ee = ip.inner(mp.E(lam), mp.E(lam), n, k)
            return pp == cf.norm_P_closed(lam, k) and pp == cf.norm_ratio_P_over_E(lam).t_to_q_power(k) * ee

        yield (f"norm of P{lam} at t=q^{k}", pnorm)


def adjoint_sample(n: int) -> list:
    xs = [LaurentPoly.var(n, i) for i in range(1, n + 1)]
    out = [LaurentPoly.constant(n)] + xs
    if n >= 2:
        out.append(xs[0] * LaurentPoly.monomial([0, -1] + [0] * (n - 2)))
    return out


def adjoint_cases(n: int, k: int) -> Iterator[Case]:
    sample = adjoint_sample(n)
    for name, op, adj, s in ip.adjoint_pairs(n):
        for a, f in enumerate(sample):
            for b, g in enumerate(sample):
                yield (
                    f"({name} f{a}, f{b}) != (f{a}, {name}^* f{b}) at t=q^{k}",
                    lambda op=op, adj=adj, s=s, f=f, g=g: ip.adjoint_holds(op, adj, s, f, g, n, k),
                )


def levelshift_cases(n: int, k: int) -> Iterator[Case]:
    fs = [mp.monomial_symmetric(lam) for lam in partitions_in_box(n, 2) if sum(lam) <= 2]
    for a, f in enumerate(fs):
        for b, g in enumerate(fs):
            yield (
                f"level shift fails for pair ({a}, {b}) at k={k}",
                lambda f=f, g=g: ip.verify_level_shift(f, g, n, k).passed,
            )


SUITES = (
    "eigenvalues",
    "relations",
    "expansions",
    "specializations",
    "wcf",
    "orthogonality",
    "norms",
    "adjoints",
    "levelshift",
)


def run_suite(name: str, n: int, max_deg: int = 2, k: int = 1) -> Outcome:
    if name == "eigenvalues":
        cases = eigenvalue_cases(n, max_deg)
    elif name == "relations":
        cases = relation_cases(n, max_deg)
    elif name == "expansions":
        cases = expansion_cases(n, max_deg)
    elif name == "specializations":
        cases = specialization_cases(n, max_deg)
    elif name == "wcf":
        cases = wcf_cases(n, max_deg)
    elif name == "orthogonality":
        cases = orthogonality_cases(n, max_deg, k)
    elif name == "norms":
        cases = norm_cases(n, max_deg, k)
    elif name == "adjoints":
        cases = adjoint_cases(n, k)
    elif name == "levelshift":
        cases = levelshift_cases(n, k)
    else:
        raise ValueError(f"unknown suite {name!r}")
    return _run(name, cases)
