"""Exact arithmetic on monomial matrices with power-of-q entries.

An element is stored as the pair (cp, perm) of its unique diagonal-times-
permutation decomposition D * P: ``cp[i-1]`` is the exponent on row i and
``perm`` the permutation whose matrix puts row i's entry in column perm(i).

The product law (with composition applying the left factor's permutation
first) is

    cp(gh)  = cp(g) + conjugate_cp(perm(g), cp(h))
    perm(gh) = perm(h) o perm(g)

where ``conjugate_cp(sigma, c)[i] = c[sigma(i)]``.  Exponents are plain
Python ints, so powers never overflow.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import CycleSet
from .errors import DimensionMismatch, IndexOutOfRange
from .perms import Perm, apply, compose, identity, invert

MatEntry = int | None
Matrix = list[list[MatEntry]]


@dataclass(frozen=True)
class MonomialElement:
    cp: tuple[int, ...]
    perm: Perm

    def __post_init__(self):
        if len(self.cp) != len(self.perm):
            raise DimensionMismatch(
                f"cp has length {len(self.cp)}, perm degree {len(self.perm)}"
            )

    @property
    def n(self) -> int:
        return len(self.cp)

    @property
    def lam(self) -> int:
        """Word length over the generators and their inverses: sum |cp_i|."""
        return sum(abs(c) for c in self.cp)

    def in_monoid(self) -> bool:
        return all(c >= 0 for c in self.cp)

    def __mul__(self, other: "MonomialElement") -> "MonomialElement":
        return multiply(self, other)

    def __repr__(self) -> str:
        return f"MonomialElement(cp={self.cp}, perm={self.perm})"


def identity_element(n: int) -> MonomialElement:
    return MonomialElement((0,) * n, identity(n))


def theta(cs: CycleSet, i: int) -> MonomialElement:
    """The generator image: unit exponent on row i, permutation psi(s_i)."""
    if not 1 <= i <= cs.n:
        raise IndexOutOfRange(f"generator index {i} out of 1..{cs.n}")
    cp = tuple(1 if k == i else 0 for k in range(1, cs.n + 1))
    return MonomialElement(cp, cs.rows[i - 1])


def conjugate_cp(sigma: Perm, c: tuple[int, ...]) -> tuple[int, ...]:
    """Conjugation of a diagonal by a permutation matrix: result_i = c_{sigma(i)}."""
    return tuple(c[sigma[i] - 1] for i in range(len(c)))


def multiply(a: MonomialElement, b: MonomialElement) -> MonomialElement:
    if a.n != b.n:
        raise DimensionMismatch(f"sizes {a.n} and {b.n}")
    cp = tuple(x + y for x, y in zip(a.cp, conjugate_cp(a.perm, b.cp)))
    return MonomialElement(cp, compose(b.perm, a.perm))


def inverse(g: MonomialElement) -> MonomialElement:
    pinv = invert(g.perm)
    cp = tuple(-c for c in conjugate_cp(pinv, g.cp))
    return MonomialElement(cp, pinv)


def transpose(g: MonomialElement) -> MonomialElement:
    """Matrix transpose; row exponents of the transpose are column exponents of g."""
    pinv = invert(g.perm)
    return MonomialElement(conjugate_cp(pinv, g.cp), pinv)


def power(g: MonomialElement, k: int) -> MonomialElement:
    if k < 0:
        return power(inverse(g), -k)
    acc = identity_element(g.n)
    for _ in range(k):
        acc = multiply(acc, g)
    return acc


def naive_matrix(g: MonomialElement) -> Matrix:
    """The explicit n x n matrix: entry (i, perm(i)) holds the exponent cp_i,
    everything else is None.  Serves as the independent multiplication oracle."""
    n = g.n
    mat: Matrix = [[None] * n for _ in range(n)]
    for i in range(1, n + 1):
        mat[i - 1][apply(g.perm, i) - 1] = g.cp[i - 1]
    return mat


def naive_matmul(m1: Matrix, m2: Matrix) -> Matrix:
    """Schoolbook product of two monomial matrices (exponents add)."""
    n = len(m1)
    out: Matrix = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if m1[i][j] is None:
                continue
            for k in range(n):
                if m2[j][k] is None:
                    continue
                if out[i][k] is not None:
                    raise ValueError("product is not monomial")
                out[i][k] = m1[i][j] + m2[j][k]
    return out


def element_from_matrix(mat: Matrix) -> MonomialElement:
    """Read a (cp, perm) pair back off an explicit monomial matrix."""
    n = len(mat)
    cp = [0] * n
    images = [0] * n
    for i in range(n):
        nonzero = [j for j in range(n) if mat[i][j] is not None]
        if len(nonzero) != 1:
            raise ValueError(f"row {i + 1} is not monomial")
        j = nonzero[0]
        cp[i] = mat[i][j]
        images[i] = j + 1
    return MonomialElement(tuple(cp), tuple(images))
