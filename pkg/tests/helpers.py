import sympy as sp

from macdonald.algebra import LaurentPoly

Q, V = sp.symbols("q v")


def coeff_to_sympy(c):
    num = sum(k * Q ** a * V ** b for (a, b), k in c.num_terms.items())
    den = sum(k * Q ** a * V ** b for (a, b), k in c.den_terms.items())
    return sp.Integer(num) / den if isinstance(num, int) else num / den


def poly_to_sympy(f: LaurentPoly, xs):
    out = sp.Integer(0)
    for e, c in f:
        m = sp.Integer(1)
        for x, a in zip(xs, e):
            m *= x ** a
        out += coeff_to_sympy(c) * m
    return out


def same(a, b) -> bool:
    return sp.simplify(sp.together(a - b)) == 0
