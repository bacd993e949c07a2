"""Compositions, permutations and the statistics attached to them.

Permutations are 1-based one-line tuples: ``w[i - 1] == w(i)``. A
composition mu is acted on by ``(w mu)_{w(i)} = mu_i``.

>>> v_mu((0, 1, 0))
(1, 3, 2)
>>> z_mu((3, 1, 2))
(1, 3, 2)
>>> dblex_less((2, 0), (0, 2))
True
"""

from __future__ import annotations

from collections import Counter
from itertools import permutations, product
from typing import Iterable, Iterator, List, Sequence, Tuple

from .algebra import ONE, Coeff, qfactorial, t

Comp = Tuple[int, ...]
Perm = Tuple[int, ...]
AffinePair = Tuple[int, int, int]  # (i, j, l) stands for the pair (i, j + l n)


def as_comp(mu: Iterable[int]) -> Comp:
    return tuple(int(a) for a in mu)


def partition_of(mu: Sequence[int]) -> Comp:
    """mu^+: the entries sorted weakly decreasing."""
    return tuple(sorted(mu, reverse=True))


def v_mu(mu: Sequence[int]) -> Perm:
    """v_mu(r) = 1 + #{r' < r : mu_r' <= mu_r} + #{r' > r : mu_r' < mu_r}."""
    n = len(mu)
    return tuple(
        1
        + sum(1 for s in range(r) if mu[s] <= mu[r])
        + sum(1 for s in range(r + 1, n) if mu[s] < mu[r])
        for r in range(n)
    )


def z_mu(mu: Sequence[int]) -> Perm:
    """The shortest w with mu = w mu^+."""
    order = sorted(range(len(mu)), key=lambda r: (-mu[r], r))
    # order[i] is the position in mu holding the i-th entry of mu^+
    return tuple(p + 1 for p in order)


def act(w: Perm, mu: Sequence[int]) -> Comp:
    out = [0] * len(mu)
    for i, a in enumerate(mu):
        out[w[i] - 1] = a
    return tuple(out)


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def simple(n: int, i: int) -> Perm:
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def compose(u: Perm, w: Perm) -> Perm:
    """u o w."""
    return tuple(u[a - 1] for a in w)


def inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for i, a in enumerate(w):
        out[a - 1] = i + 1
    return tuple(out)


def length(w: Perm) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def sign(w: Perm) -> int:
    return -1 if length(w) % 2 else 1


def all_perms(n: int) -> List[Perm]:
    return [tuple(p) for p in permutations(range(1, n + 1))]


def longest(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def reduced_word(w: Perm) -> List[int]:
    """Lexicographically first reduced word: w = s_{i1} s_{i2} ... s_{il}."""
    word = []
    w = tuple(w)
    winv = inverse(w)
    while True:
        for i in range(1, len(w)):
            if winv[i - 1] > winv[i]:
                word.append(i)
                w = compose(simple(len(w), i), w)
                winv = inverse(w)
                break
        else:
            return word


def _rank(w: Perm) -> List[List[int]]:
    n = len(w)
    r = [[0] * (n + 2) for _ in range(n + 1)]
    for i in range(1, n + 1):
        for k in range(1, n + 1):
            r[i][k] = r[i - 1][k] + (1 if w[i - 1] >= k else 0)
    return r


def bruhat_leq(u: Perm, w: Perm) -> bool:
    """Bruhat order via the rank-matrix criterion."""
    ru, rw = _rank(u), _rank(w)
    n = len(u)
    return all(ru[i][k] <= rw[i][k] for i in range(1, n + 1) for k in range(1, n + 1))


def dominance_leq(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """lam <= mu in dominance; partitions of different size are incomparable."""
    if sum(lam) != sum(mu) or len(lam) != len(mu):
        return False
    a = b = 0
    for x, y in zip(lam, mu):
        a += x
        b += y
        if a > b:
            return False
    return True


def dblex_less(nu: Sequence[int], mu: Sequence[int]) -> bool:
    """Strict DBlex: dominance on the sorted parts, then Bruhat on z."""
    lp, mp = partition_of(nu), partition_of(mu)
    if lp != mp:
        return dominance_leq(lp, mp)
    zn, zm = z_mu(nu), z_mu(mu)
    return zn != zm and bruhat_leq(zn, zm)


def dblex_key(mu: Sequence[int]):
    """A total order refining DBlex (within a fixed total degree)."""
    z = z_mu(mu)
    return (sum(mu), partition_of(mu), length(z), z)


def sort_desc_dblex(exps: Iterable[Sequence[int]]) -> List[Comp]:
    return sorted((tuple(e) for e in exps), key=dblex_key, reverse=True)


def boxes(mu: Sequence[int]) -> List[Tuple[int, int]]:
    """Boxes (r, c) of the diagram of a nonnegative composition."""
    return [(r + 1, c) for r, m in enumerate(mu) for c in range(1, m + 1)]


def u_mu_arm(mu: Sequence[int], r: int, c: int) -> int:
    """#{r' < r : mu_r' <= c-1} + #{r' > r : mu_r' < c-1}."""
    return sum(1 for s in range(r - 1) if mu[s] <= c - 1) + sum(
        1 for s in range(r, len(mu)) if mu[s] < c - 1
    )


def inv_t_lambda(lam: Sequence[int]) -> List[AffinePair]:
    """Inversions of the translation t_lambda, lambda weakly decreasing."""
    n = len(lam)
    return [
        (i + 1, j + 1, l)
        for i in range(n)
        for j in range(i + 1, n)
        for l in range(lam[i] - lam[j])
    ]


def inv_u_mu(mu: Sequence[int]) -> List[AffinePair]:
    vm = v_mu(mu)
    return [
        (vm[r - 1], i, mu[r - 1] - c + 1)
        for (r, c) in boxes(mu)
        for i in range(1, u_mu_arm(mu, r, c) + 1)
    ]


def inv_perm(w: Perm) -> List[AffinePair]:
    """{(i, j, 0) : i < j, w(i) > w(j)}."""
    n = len(w)
    return [(i + 1, j + 1, 0) for i in range(n) for j in range(i + 1, n) if w[i] > w[j]]


def inv_decreasing(lam: Sequence[int]) -> List[AffinePair]:
    """{(i, j, 0) : i < j, lam_i > lam_j}; these are the inversions of v_lambda."""
    n = len(lam)
    return [(i + 1, j + 1, 0) for i in range(n) for j in range(i + 1, n) if lam[i] > lam[j]]


def affine_length_t(lam: Sequence[int]) -> int:
    n = len(lam)
    return sum(abs(lam[i] - lam[j]) for i in range(n) for j in range(i + 1, n))


def conjugate(lam: Sequence[int]) -> Comp:
    return tuple(sum(1 for a in lam if a >= c) for c in range(1, (max(lam) if lam else 0) + 1))


def box_stats(lam: Sequence[int], box: Tuple[int, int]) -> dict:
    r, c = box
    if not 1 <= c <= lam[r - 1]:
        raise ValueError(f"{box} is not a box of {tuple(lam)}")
    arm = lam[r - 1] - c
    leg = sum(1 for s in range(r, len(lam)) if lam[s] >= c)
    return {
        "arm": arm,
        "leg": leg,
        "coarm": c - 1,
        "coleg": r - 1,
        "content": c - r,
        "hook": arm + leg + 1,
    }


def n_of_lambda(lam: Sequence[int]) -> int:
    return sum(i * a for i, a in enumerate(lam))


def poincare_W0(n: int, x: Coeff = t) -> Coeff:
    return qfactorial(n, x)


def poincare_Wlambda(lam: Sequence[int], x: Coeff = t) -> Coeff:
    out = ONE
    for m in Counter(lam).values():
        out = out * qfactorial(m, x)
    return out


def poincare_enumerated(lam: Sequence[int], x: Coeff = t) -> Coeff:
    """Sum of x^{l(w)} over the stabilizer of lam, by brute force."""
    lam = tuple(lam)
    total = Coeff(0)
    for w in all_perms(len(lam)):
        if act(w, lam) == lam:
            total = total + x ** length(w)
    return total


def rearrangements(lam: Sequence[int]) -> List[Comp]:
    return sorted(set(permutations(lam)))


def compositions(n: int, lo: int, hi: int, max_sum: int | None = None) -> Iterator[Comp]:
    for mu in product(range(lo, hi + 1), repeat=n):
        if max_sum is None or abs(sum(mu)) <= max_sum:
            yield mu


def partitions_in_box(n: int, top: int, bottom: int = 0) -> List[Comp]:
    """Weakly decreasing length-n tuples with entries in [bottom, top]."""
    return sorted({partition_of(m) for m in product(range(bottom, top + 1), repeat=n)}, reverse=True)

