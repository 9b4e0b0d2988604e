"""Omega/Pi word calculus on the structure monoid.

``pi`` evaluates the canonical product whose exponent vector is the multiset
of its entries; ``omega`` gives its letterwise components.  The key identity
making both cheap is that the permutation part of ``pi`` of a prefix, applied
to the next entry, is the corresponding omega:

    omega(t_1..t_k) = perm(pi(t_1..t_{k-1}))(t_k).

The doubly recursive definition

    omega_k(x_1..x_k) = omega_{k-1}(x_1..x_{k-1}) * omega_{k-1}(x_1..x_{k-2}, x_k)

is kept as :func:`omega_recursive` and used as a test oracle only.
"""

from __future__ import annotations

from .core import CycleSet
from .errors import EmptyTuple, IndexOutOfRange, NegativeExponent
from .monomial import (
    MonomialElement,
    identity_element,
    inverse,
    multiply,
    theta,
    transpose,
)
from .perms import apply, invert

Word = tuple[int, ...]


def _check_word(cs: CycleSet, word) -> Word:
    word = tuple(word)
    for t in word:
        if not 1 <= t <= cs.n:
            raise IndexOutOfRange(f"generator index {t} out of 1..{cs.n}")
    return word


def word_to_element(cs: CycleSet, word) -> MonomialElement:
    """Product of the generator images over the word, left to right."""
    g = identity_element(cs.n)
    for t in _check_word(cs, word):
        g = multiply(g, theta(cs, t))
    return g


def pi(cs: CycleSet, entries) -> MonomialElement:
    """Evaluate the canonical element with exponent multiset ``entries``."""
    g = identity_element(cs.n)
    for t in _check_word(cs, entries):
        g = multiply(g, theta(cs, apply(g.perm, t)))
    return g


def omega(cs: CycleSet, entries) -> int:
    entries = _check_word(cs, entries)
    if not entries:
        raise EmptyTuple("omega needs at least one entry")
    prefix = pi(cs, entries[:-1])
    return apply(prefix.perm, entries[-1])


def omega_recursive(cs: CycleSet, entries) -> int:
    """Direct evaluation of the recursive definition, memoized per call."""
    entries = _check_word(cs, entries)
    if not entries:
        raise EmptyTuple("omega needs at least one entry")
    memo: dict[Word, int] = {}

    def rec(tup: Word) -> int:
        if len(tup) == 1:
            return tup[0]
        got = memo.get(tup)
        if got is None:
            left = rec(tup[:-1])
            right = rec(tup[:-2] + tup[-1:])
            got = memo[tup] = cs.star(left, right)
        return got

    return rec(entries)


def pi_expression(cs: CycleSet, word) -> Word:
    """A tuple whose pi equals the word's element.

    Inverts the evaluation left to right: entry j is the preimage of the
    word's j-th letter under the prefix permutation.
    """
    word = _check_word(cs, word)
    if not word:
        raise EmptyTuple("pi_expression needs a non-empty word")
    g = identity_element(cs.n)
    out = []
    for t in word:
        out.append(apply(invert(g.perm), t))
        g = multiply(g, theta(cs, t))
    return tuple(out)


def words_equal(cs: CycleSet, w1, w2) -> bool:
    """Word problem in the monoid: equality of exponent vectors."""
    return word_to_element(cs, w1).cp == word_to_element(cs, w2).cp


def germ_words_equal(cs: CycleSet, w1, w2, modulus: int | None = None) -> bool:
    """Word problem in the germ: exponent vectors modulo the class."""
    if modulus is None:
        from .germ import dehornoy_class_value

        modulus = dehornoy_class_value(cs)
    a = word_to_element(cs, w1).cp
    b = word_to_element(cs, w2).cp
    return all((x - y) % modulus == 0 for x, y in zip(a, b))


def diagonal_image(cs: CycleSet, i: int, k: int) -> int:
    """T^k(i) for the diagonal map T(i) = psi(s_i)(i); k may be negative."""
    T = tuple(apply(cs.rows[x - 1], x) for x in range(1, cs.n + 1))
    if k < 0:
        T = invert(T)
        k = -k
    for _ in range(k):
        i = T[i - 1]
    return i


def bracket_power(cs: CycleSet, i: int, k: int) -> MonomialElement:
    """The unique element with exponent vector k*e_i.

    For k >= 0 this is the product s T(s) ... T^{k-1}(s); for k < 0 it is the
    inverse of the bracket power of t = T^{k}(i) (pulling i back |k| steps).
    """
    if not 1 <= i <= cs.n:
        raise IndexOutOfRange(f"generator index {i} out of 1..{cs.n}")
    if k < 0:
        t = diagonal_image(cs, i, k)
        return inverse(bracket_power(cs, t, -k))
    g = identity_element(cs.n)
    t = i
    for _ in range(k):
        g = multiply(g, theta(cs, t))
        t = cs.star(t, t)
    return g


def cp_to_element(cs: CycleSet, c) -> MonomialElement:
    """The unique monoid element with the given nonnegative exponent vector."""
    c = tuple(c)
    if len(c) != cs.n:
        raise IndexOutOfRange(f"vector length {len(c)} != n = {cs.n}")
    if any(x < 0 for x in c):
        raise NegativeExponent(f"exponent vector {c} has a negative entry")
    entries = []
    for i, count in enumerate(c, start=1):
        entries.extend([i] * count)
    return pi(cs, entries)


def left_fraction(cs: CycleSet, g: MonomialElement) -> tuple[MonomialElement, MonomialElement]:
    """Reduced decomposition g = f * h^{-1} with f, h in the monoid.

    f carries the positive part of the exponents, so lam(f) + lam(h) = lam(g).
    """
    f = cp_to_element(cs, tuple(max(c, 0) for c in g.cp))
    h = multiply(inverse(g), f)
    return f, h


def right_fraction(cs: CycleSet, g: MonomialElement) -> tuple[MonomialElement, MonomialElement]:
    """Reduced decomposition g = f^{-1} * h, via the transpose cycle set."""
    from .core import transpose_cycle_set

    a, b = left_fraction(transpose_cycle_set(cs), transpose(g))
    return transpose(b), transpose(a)
