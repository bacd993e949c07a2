"""Exact scalars in Q(q, v) with v = t^(1/2), and Laurent polynomials over them.

A scalar is stored as a reduced fraction of integer polynomials in q and v.
The denominator's leading coefficient, in graded-lex order with q before v,
is positive, so two equal scalars always carry identical representatives.

>>> from macdonald.algebra import q, t, ONE
>>> (ONE - t) / (ONE - q * t) == (t - 1) / (q * t - 1)
True
>>> str((ONE - t) / (ONE - q * t))
'(t-1)/(q*t-1)'
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

import flint

Exponent = Tuple[int, ...]

_CTX = flint.fmpz_mpoly_ctx.get(("q", "v"), "deglex")
_Pq, _Pv = _CTX.gens()
_P1 = _CTX.from_dict({(0, 0): 1})
_P0 = _CTX.from_dict({})


class PoleError(ZeroDivisionError):
    """A specialization or division hit a vanishing denominator."""


class ParityError(ValueError):
    """t -> q^k was requested for a scalar that is odd in t^(1/2)."""


class NotDivisibleError(ArithmeticError):
    """An exact division left a nonzero remainder."""


def _poly(x) -> flint.fmpz_mpoly:
    if isinstance(x, flint.fmpz_mpoly):
        return x
    return _CTX.from_dict({(0, 0): int(x)}) if x else _P0


def _terms(p: flint.fmpz_mpoly) -> Dict[Tuple[int, int], int]:
    return {k: int(c) for k, c in p.to_dict().items()}


def _from_terms(d: Mapping[Tuple[int, int], int]) -> flint.fmpz_mpoly:
    return _CTX.from_dict({k: c for k, c in d.items() if c})


class Coeff:
    """An element of Q(q, v); immutable, always in canonical form."""

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        if isinstance(num, Coeff) and den == 1:
            self.num, self.den = num.num, num.den
            return
        if isinstance(num, Fraction):
            num, den = num.numerator, num.denominator * (den if isinstance(den, int) else 1)
        n, d = _poly(num), _poly(den)
        if d.is_zero():
            raise PoleError("zero denominator")
        self.num, self.den = _canon(n, d)

    @classmethod
    def _raw(cls, num, den) -> "Coeff":
        c = object.__new__(cls)
        c.num, c.den = num, den
        return c

    @classmethod
    def monomial(cls, a: int = 0, b: int = 0, c: int = 1) -> "Coeff":
        """c * q^a * v^b, exponents of either sign."""
        num = _CTX.from_dict({(max(a, 0), max(b, 0)): c}) if c else _P0
        den = _CTX.from_dict({(max(-a, 0), max(-b, 0)): 1})
        return cls._raw(num, den) if c else ZERO

    # arithmetic

    def __add__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            n = self.num + o.num
            if self.den == _P1:
                return Coeff._raw(n, _P1)
            return Coeff._raw(*_canon(n, self.den))
        if self.den == _P1:
            return Coeff._raw(self.num * o.den + o.num, o.den)
        if o.den == _P1:
            return Coeff._raw(o.num * self.den + self.num, self.den)
        g = self.den.gcd(o.den)
        b1, d1 = self.den / g, o.den / g
        n = self.num * d1 + o.num * b1
        g2 = n.gcd(g)
        if g2 != _P1:
            n, g = n / g2, g / g2
        return Coeff._raw(*_signfix(n, b1 * d1 * g))

    __radd__ = __add__

    def __neg__(self):
        return Coeff._raw(-self.num, self.den)

    def __sub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        if self.den == _P1 and o.den == _P1:
            return Coeff._raw(self.num * o.num, _P1)
        a, b, c, d = self.num, self.den, o.num, o.den
        g1 = a.gcd(d)
        g2 = c.gcd(b)
        if g1 != _P1:
            a, d = a / g1, d / g1
        if g2 != _P1:
            c, b = c / g2, b / g2
        return Coeff._raw(*_signfix(a * c, b * d))

    __rmul__ = __mul__

    def inverse(self) -> "Coeff":
        if self.num.is_zero():
            raise PoleError("inverse of zero")
        return Coeff._raw(*_signfix(self.den, self.num))

    def __truediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return Coeff._raw(self.num ** e, self.den ** e)

    def __eq__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((tuple(sorted(_terms(self.num).items())), tuple(sorted(_terms(self.den).items()))))

    def __bool__(self):
        return not self.num.is_zero()

    def is_zero(self) -> bool:
        return self.num.is_zero()

    # term access

    @property
    def num_terms(self) -> Dict[Tuple[int, int], int]:
        return _terms(self.num)

    @property
    def den_terms(self) -> Dict[Tuple[int, int], int]:
        return _terms(self.den)

    def is_even_in_v(self) -> bool:
        return all(b % 2 == 0 for (_, b) in self.num.to_dict()) and all(
            b % 2 == 0 for (_, b) in self.den.to_dict()
        )

    # substitutions

    def bar(self) -> "Coeff":
        """q -> 1/q and v -> 1/v."""
        return _rev(self.num) / _rev(self.den)

    def q_to_zero(self) -> "Coeff":
        d = self.den.subs({"q": 0})
        if d.is_zero():
            raise PoleError("denominator vanishes at q = 0")
        return Coeff(self.num.subs({"q": 0}), d)

    def q_to_t(self) -> "Coeff":
        """q -> t = v^2."""
        return _compose(self, _Pv ** 2, _Pv)

    def t_to_qt(self) -> "Coeff":
        """t -> q t; requires evenness in v."""
        if not self.is_even_in_v():
            raise ParityError("scalar is odd in t^(1/2)")
        f = lambda p: _from_terms(_shift_terms(p, lambda a, b: (a + b // 2, b)))
        return _checked(f(self.num), f(self.den))

    def t_to_q_power(self, k: int) -> "Coeff":
        """t -> q^k for integer k; requires evenness in v."""
        if not self.is_even_in_v():
            raise ParityError("scalar is odd in t^(1/2)")
        return _laurent_subst(self, lambda a, b: (a + k * (b // 2), 0))

    def q_to_inverse(self) -> "Coeff":
        """q -> 1/q, leaving v alone."""
        return _laurent_subst(self, lambda a, b: (-a, b))

    def at_v_equals_one(self) -> "Coeff":
        """Value at v = 1 (so t = 1), cancelling (v - 1) factors first."""
        num, den = self.num, self.den
        vm1 = _Pv - 1
        while den.subs({"v": 1}).is_zero():
            qn, rn = divmod(num, vm1)
            if not rn.is_zero():
                raise PoleError("pole at t = 1")
            qd, _ = divmod(den, vm1)
            num, den = qn, qd
        return Coeff(num.subs({"v": 1}), den.subs({"v": 1}))

    def constant_value(self) -> Fraction:
        """The rational number this scalar equals; it must be free of q and v."""
        nd, dd = _terms(self.num), _terms(self.den)
        if any(k != (0, 0) for k in nd) or any(k != (0, 0) for k in dd):
            raise ValueError(f"{self} is not a constant")
        return Fraction(nd.get((0, 0), 0), dd[(0, 0)])

    def __str__(self):
        n = _render(self.num)
        if self.den == _P1:
            return n
        d = _render(self.den)
        if len(self.num.to_dict()) > 1:
            n = f"({n})"
        if len(self.den.to_dict()) > 1:
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"Coeff({self})"


def _coerce(x) -> Coeff:
    if isinstance(x, Coeff):
        return x
    if isinstance(x, int):
        return Coeff._raw(_poly(x), _P1)
    if isinstance(x, Fraction):
        return Coeff(x)
    return NotImplemented


def _signfix(n, d):
    if d.leading_coefficient() < 0:
        return -n, -d
    return n, d


def _canon(n, d):
    if n.is_zero():
        return _P0, _P1
    g = n.gcd(d)
    if g != _P1:
        n, d = n / g, d / g
    return _signfix(n, d)


def _checked(n, d) -> Coeff:
    if d.is_zero():
        raise PoleError("denominator vanishes under substitution")
    return Coeff(n, d)


def _shift_terms(p, f) -> Dict[Tuple[int, int], int]:
    out: Dict[Tuple[int, int], int] = {}
    for (a, b), c in p.to_dict().items():
        key = f(a, b)
        out[key] = out.get(key, 0) + int(c)
    return out


def _laurent_part(d: Dict[Tuple[int, int], int]):
    """Split a Laurent term dict into (polynomial, shift) with nonnegative exponents."""
    d = {k: c for k, c in d.items() if c}
    if not d:
        return _P0, (0, 0)
    ma = min(a for a, _ in d)
    mb = min(b for _, b in d)
    return _from_terms({(a - ma, b - mb): c for (a, b), c in d.items()}), (ma, mb)


def _laurent_subst(x: Coeff, f) -> Coeff:
    n, (na, nb) = _laurent_part(_shift_terms(x.num, f))
    d, (da, db) = _laurent_part(_shift_terms(x.den, f))
    if d.is_zero():
        raise PoleError("denominator vanishes under substitution")
    return Coeff(n, d) * Coeff.monomial(na - da, nb - db)


def _rev(p) -> Coeff:
    return _laurent_subst(Coeff._raw(p, _P1), lambda a, b: (-a, -b))


def _compose(x: Coeff, qv, vv) -> Coeff:
    return _checked(x.num.compose(qv, vv), x.den.compose(qv, vv))


def _render_mono(a: int, b: int) -> str:
    parts = []
    if a == 1:
        parts.append("q")
    elif a:
        parts.append(f"q^{a}")
    if b:
        if b % 2:
            parts.append(f"t^({b}/2)")
        elif b == 2:
            parts.append("t")
        else:
            parts.append(f"t^{b // 2}")
    return "*".join(parts)


def _render(p) -> str:
    d = _terms(p)
    if not d:
        return "0"
    out = ""
    for (a, b) in sorted(d, reverse=True):
        c = d[(a, b)]
        m = _render_mono(a, b)
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if not m:
            body = str(mag)
        elif mag == 1:
            body = m
        else:
            body = f"{mag}*{m}"
        if not out:
            out = body if sign == "+" else "-" + body
        else:
            out += sign + body
    return out


ZERO = Coeff._raw(_P0, _P1)
ONE = Coeff._raw(_P1, _P1)
q = Coeff._raw(_Pq, _P1)
v = Coeff._raw(_Pv, _P1)
t = Coeff._raw(_Pv ** 2, _P1)
v_inv = Coeff.monomial(0, -1)

Scalar = Union[Coeff, int, Fraction]


def as_coeff(x: Scalar) -> Coeff:
    c = _coerce(x)
    if c is NotImplemented:
        raise TypeError(f"cannot use {x!r} as a scalar")
    return c


def qint(m: int, x: Coeff = t) -> Coeff:
    """[m]_x = (1 - x^m) / (1 - x)."""
    return sum((x ** i for i in range(m)), ZERO)


def qfactorial(m: int, x: Coeff = t) -> Coeff:
    out = ONE
    for i in range(1, m + 1):
        out = out * qint(i, x)
    return out


class LaurentPoly:
    """A sparse Laurent polynomial in x_1..x_n with Coeff coefficients.

    Instances are treated as immutable; ``terms`` never holds zero coefficients.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Exponent, Scalar] | None = None):
        self.n = n
        clean: Dict[Exponent, Coeff] = {}
        for e, c in (terms or {}).items():
            if len(e) != n:
                raise ValueError(f"exponent {e} has wrong length for n={n}")
            c = as_coeff(c)
            if c:
                clean[tuple(e)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, n: int, terms: Dict[Exponent, Coeff]) -> "LaurentPoly":
        p = object.__new__(cls)
        p.n, p.terms = n, terms
        return p

    @classmethod
    def monomial(cls, exps: Iterable[int], c: Scalar = 1) -> "LaurentPoly":
        e = tuple(exps)
        return cls(len(e), {e: c})

    @classmethod
    def constant(cls, n: int, c: Scalar = 1) -> "LaurentPoly":
        return cls(n, {(0,) * n: c})

    @classmethod
    def var(cls, n: int, i: int) -> "LaurentPoly":
        """x_i, 1-based."""
        e = [0] * n
        e[i - 1] = 1
        return cls._raw(n, {tuple(e): ONE})

    def _check(self, other: "LaurentPoly"):
        if other.n != self.n:
            raise ValueError(f"mixing n={self.n} with n={other.n}")

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(self.n, as_coeff(other))
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return LaurentPoly._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(self.n, as_coeff(other))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Scalar) -> "LaurentPoly":
        c = as_coeff(c)
        if not c:
            return LaurentPoly._raw(self.n, {})
        if c == ONE:
            return self
        return LaurentPoly._raw(self.n, {e: c * a for e, a in self.terms.items()})

    def shift(self, exps: Exponent, c: Scalar = 1) -> "LaurentPoly":
        """Multiply by c * x^exps."""
        c = as_coeff(c)
        out = {}
        for e, a in self.terms.items():
            b = a * c if c != ONE else a
            if b:
                out[tuple(x + y for x, y in zip(e, exps))] = b
        return LaurentPoly._raw(self.n, out)

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return self.scale(other)
        self._check(other)
        if len(other.terms) > len(self.terms):
            self, other = other, self
        out: Dict[Exponent, Coeff] = {}
        for e2, c2 in other.terms.items():
            for e1, c1 in self.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                p = c1 * c2
                s = out.get(e)
                out[e] = p if s is None else s + p
        return LaurentPoly._raw(self.n, {e: c for e, c in out.items() if c})

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        out = LaurentPoly.constant(self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.n == other.n and self.terms == other.terms
        try:
            return self == LaurentPoly.constant(self.n, as_coeff(other))
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator[Tuple[Exponent, Coeff]]:
        return iter(self.terms.items())

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, exps: Iterable[int]) -> Coeff:
        return self.terms.get(tuple(exps), ZERO)

    def ct(self) -> Coeff:
        return self.coeff((0,) * self.n)

    def map_coeffs(self, f) -> "LaurentPoly":
        return LaurentPoly(self.n, {e: f(c) for e, c in self.terms.items()})

    def permute(self, sigma: Tuple[int, ...]) -> "LaurentPoly":
        """Apply x_i -> x_{sigma(i)}, sigma in one-line notation (1-based)."""
        out = {}
        for e, c in self.terms.items():
            new = [0] * self.n
            for i, a in enumerate(e):
                new[sigma[i] - 1] = a
            out[tuple(new)] = c
        return LaurentPoly._raw(self.n, out)

    def substitute(self, images: Mapping[int, Tuple[Exponent, Scalar]]) -> "LaurentPoly":
        """Substitute x_i -> c_i * x^{e_i} for the 1-based indices in ``images``.

        Monomial images keep the result a Laurent polynomial; unlisted
        variables are left alone.
        """
        basis = []
        for i in range(1, self.n + 1):
            if i in images:
                e, c = images[i]
                basis.append((tuple(e), as_coeff(c)))
            else:
                unit = [0] * self.n
                unit[i - 1] = 1
                basis.append((tuple(unit), ONE))
        out: Dict[Exponent, Coeff] = {}
        for e, c in self.terms.items():
            new = [0] * self.n
            scal = c
            for a, (be, bc) in zip(e, basis):
                if a:
                    for j in range(self.n):
                        new[j] += a * be[j]
                    if bc != ONE:
                        scal = scal * bc ** a
            key = tuple(new)
            s = out.get(key)
            out[key] = scal if s is None else s + scal
        return LaurentPoly._raw(self.n, {e: c for e, c in out.items() if c})

    def bar(self) -> "LaurentPoly":
        """x -> 1/x, q -> 1/q, t -> 1/t."""
        return LaurentPoly._raw(
            self.n, {tuple(-a for a in e): c.bar() for e, c in self.terms.items()}
        )

    def exact_div_binomial(self, a: int, b: int, c: Scalar = 1) -> "LaurentPoly":
        """Divide exactly by (x_a - c x_b), treating x_a as the main variable.

        Raises NotDivisibleError when the remainder is nonzero.
        """
        c = as_coeff(c)
        ia, ib = a - 1, b - 1
        if not self.terms:
            return self
        low = min(e[ia] for e in self.terms)
        work = dict(self.terms)
        quot: Dict[Exponent, Coeff] = {}
        # group keys by their x_a exponent so we sweep degrees top down
        by_deg: Dict[int, set] = {}
        for e in work:
            by_deg.setdefault(e[ia], set()).add(e)
        for d in range(max(by_deg), low, -1):
            for e in by_deg.get(d, ()):
                lc = work.pop(e, None)
                if lc is None or not lc:
                    continue
                qe = list(e)
                qe[ia] -= 1
                qe = tuple(qe)
                quot[qe] = quot[qe] + lc if qe in quot else lc
                re = list(qe)
                re[ib] += 1
                re = tuple(re)
                add = lc * c
                cur = work.get(re)
                work[re] = add if cur is None else cur + add
                by_deg.setdefault(d - 1, set()).add(re)
        if any(v_ for v_ in work.values()):
            raise NotDivisibleError(f"not divisible by x{a} - ({c})*x{b}")
        return LaurentPoly._raw(self.n, {e: x for e, x in quot.items() if x})

    def exact_div_linear(self, i: int) -> "LaurentPoly":
        """Exact quotient by (x_i - x_{i+1})."""
        return self.exact_div_binomial(i, i + 1)

    def __str__(self):
        if not self.terms:
            return "0"
        from .weyl import sort_desc_dblex

        parts = []
        for e in sort_desc_dblex(self.terms):
            c = self.terms[e]
            mono = "*".join(
                f"x{i + 1}" if a == 1 else f"x{i + 1}^{a}" for i, a in enumerate(e) if a
            )
            cs = str(c)
            if not mono:
                parts.append(f"({cs})")
            elif c == ONE:
                parts.append(mono)
            else:
                parts.append(f"({cs})*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"LaurentPoly(n={self.n}, {self})"


def x(n: int, i: int) -> LaurentPoly:
    return LaurentPoly.var(n, i)
