"""Dehornoy class, the finite germ quotient, retractions, and class bounds.

The class d of a cycle set is the least k such that every bracket power
s^[k] is diagonal.  Reducing exponents mod d turns the monoid arithmetic
into a finite group of order d^n, the germ; roots of unity are never
materialized, residue vectors stand in for them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .calculus import bracket_power, cp_to_element, pi
from .core import (
    CycleSet,
    PermGroupInfo,
    diagonal_map,
    perm_group,
    validate,
)
from .errors import CapExceeded, CycleSetError, IndexOutOfRange
from .monomial import MonomialElement, conjugate_cp
from .perms import Perm, compose, identity, invert

GERM_ENUM_CAP = 10**7


def _per_generator_classes(cs: CycleSet) -> list[int]:
    """d_s = least k >= 1 with perm(s^[k]) = id, for each generator."""
    n = cs.n
    bound = math.factorial(n)
    out = []
    for s in range(1, n + 1):
        p = cs.rows[s - 1]
        t = cs.star(s, s)
        k = 1
        while p != identity(n):
            p = compose(cs.rows[t - 1], p)
            t = cs.star(t, t)
            k += 1
            if k > bound:
                raise CycleSetError(
                    f"bracket powers of s_{s} never become diagonal; "
                    "the table is not a valid cycle set"
                )
        out.append(k)
    return out


def dehornoy_class_value(cs: CycleSet) -> int:
    """The class d = lcm of the per-generator minimal diagonal powers."""
    return math.lcm(*_per_generator_classes(cs))


def prime_divisors(k: int) -> frozenset[int]:
    out = set()
    p = 2
    while p * p <= k:
        if k % p == 0:
            out.add(p)
            while k % p == 0:
                k //= p
        p += 1
    if k > 1:
        out.add(k)
    return frozenset(out)


@dataclass(frozen=True)
class ClassReport:
    d: int
    per_generator: tuple[int, ...]
    o_T: int
    g_order: int
    checks: dict[str, bool] = field(compare=False)


def dehornoy_class(cs: CycleSet, group_info: Optional[PermGroupInfo] = None) -> ClassReport:
    """Class plus the divisibility facts it must satisfy."""
    per = _per_generator_classes(cs)
    d = math.lcm(*per)
    o_T = diagonal_map(cs).order
    if group_info is None:
        group_info = perm_group(cs)
    g = group_info.order
    checks = {
        "o(T) | d": d % o_T == 0,
        "d | #G": g % d == 0,
        "#G | d^n": (d ** cs.n) % g == 0,
        "primes(d) == primes(#G)": prime_divisors(d) == prime_divisors(g),
        "d | n!": math.factorial(cs.n) % d == 0,
    }
    return ClassReport(d, tuple(per), o_T, g, checks)


@dataclass(frozen=True)
class GermElement:
    """A pair (residue vector, permutation); the modulus lives in the Germ."""

    cp_mod: tuple[int, ...]
    perm: Perm


class Germ:
    """Finite quotient arithmetic: monoid products with exponents mod d.

    Any multiple of the class works as modulus; an explicit ``modulus`` also
    lets candidate tables that are not cycle sets be probed (their closure
    then need not have d^n elements, which is how permutation-freeness
    failures are detected).
    """

    def __init__(self, cs: CycleSet, modulus: int | None = None, cap: int = GERM_ENUM_CAP):
        self.cycle_set = cs
        self.n = cs.n
        if modulus is None:
            modulus = dehornoy_class_value(cs)
        if modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {modulus}")
        self.d = modulus
        self.cap = cap
        self._elements: tuple[GermElement, ...] | None = None

    def make_element(self, cp_mod: Sequence[int], perm: Perm) -> GermElement:
        if len(cp_mod) != self.n:
            raise IndexOutOfRange(f"vector length {len(cp_mod)} != n = {self.n}")
        return GermElement(tuple(c % self.d for c in cp_mod), perm)

    @property
    def identity(self) -> GermElement:
        return GermElement((0,) * self.n, identity(self.n))

    def generator(self, i: int) -> GermElement:
        if not 1 <= i <= self.n:
            raise IndexOutOfRange(f"generator index {i} out of 1..{self.n}")
        return self.make_element(
            tuple(1 if k == i else 0 for k in range(1, self.n + 1)),
            self.cycle_set.rows[i - 1],
        )

    @property
    def generators(self) -> list[GermElement]:
        return [self.generator(i) for i in range(1, self.n + 1)]

    def multiply(self, a: GermElement, b: GermElement) -> GermElement:
        cp = tuple(
            (x + y) % self.d for x, y in zip(a.cp_mod, conjugate_cp(a.perm, b.cp_mod))
        )
        return GermElement(cp, compose(b.perm, a.perm))

    def inverse(self, a: GermElement) -> GermElement:
        pinv = invert(a.perm)
        cp = tuple((-c) % self.d for c in conjugate_cp(pinv, a.cp_mod))
        return GermElement(cp, pinv)

    def project(self, g: MonomialElement) -> GermElement:
        return self.make_element(g.cp, g.perm)

    def lift(self, e: GermElement) -> MonomialElement:
        """Section into the monoid: the element with the residue exponents.

        Only meaningful over a valid cycle set, where it inverts ``project``
        on canonical representatives.
        """
        return cp_to_element(self.cycle_set, e.cp_mod)

    def element_with_residues(self, cp_mod: Sequence[int]) -> GermElement:
        return self.project(cp_to_element(self.cycle_set, tuple(c % self.d for c in cp_mod)))

    def pi(self, entries: Iterable[int]) -> GermElement:
        return self.project(pi(self.cycle_set, tuple(entries)))

    def order(self) -> int:
        return len(self.elements())

    def elements(self) -> tuple[GermElement, ...]:
        """Closure of the generators under the product, sorted."""
        if self._elements is None:
            closure, _ = self._closure()
            self._cache(closure)
        return self._elements

    def _cache(self, closure: set[GermElement]) -> None:
        self._elements = tuple(sorted(closure, key=lambda e: (e.cp_mod, e.perm)))

    def _closure(self, stop_at_permutation: bool = False) -> tuple[set[GermElement], bool]:
        """BFS closure; the flag reports whether it ran to completion."""
        gens = self.generators
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for g in frontier:
                for h in gens:
                    x = self.multiply(g, h)
                    if x not in seen:
                        if len(seen) >= self.cap:
                            raise CapExceeded(
                                f"germ closure exceeded cap {self.cap}"
                            )
                        seen.add(x)
                        nxt.append(x)
                        if (
                            stop_at_permutation
                            and not any(x.cp_mod)
                            and x.perm != identity(self.n)
                        ):
                            return seen, False
            frontier = nxt
        return seen, True


def germ(cs: CycleSet, modulus: int | None = None, cap: int = GERM_ENUM_CAP) -> Germ:
    return Germ(cs, modulus, cap)


def is_permutation_free(g: Germ) -> bool:
    """Whether the only closure element with zero residues is the identity."""
    if g._elements is not None:
        closure = g._elements
    else:
        closure, completed = g._closure(stop_at_permutation=True)
        if completed:
            g._cache(closure)
    ident = identity(g.n)
    return not any(
        not any(e.cp_mod) and e.perm != ident for e in closure
    )


def germ_length(cp_mod: Sequence[int], d: int) -> int:
    """Minimal word length over generators and inverses in the germ.

    Each residue k costs k letters when k <= d/2 and d-k inverse letters
    otherwise.
    """
    total = 0
    for c in cp_mod:
        if not 0 <= c < d:
            raise ValueError(f"residue {c} out of 0..{d - 1}")
        total += c if 2 * c <= d else d - c
    return total


@dataclass(frozen=True)
class ExchangeResult:
    passed: bool
    prefix: tuple[int, ...]
    letter: int
    omitted_index: int | None = None


def exchange_check(g: Germ, prefix: Sequence[int], s: int) -> ExchangeResult:
    """Harness for the exchange property of reduced positive expressions.

    ``prefix`` must be reduced (every generator fewer than d times).  If
    prepending ``s`` breaks reducedness, some omission of one entry must
    reproduce the same germ element; the first such index is reported.
    A prefix that stays reduced passes vacuously.
    """
    prefix = tuple(prefix)
    counts = {t: prefix.count(t) for t in set(prefix)}
    if any(c >= g.d for c in counts.values()):
        raise ValueError("prefix is not reduced: some generator occurs >= d times")
    if g.d == 1:
        # trivial germ: every element is the identity and nothing can be
        # omitted; the exchange statement assumes d >= 2
        return ExchangeResult(True, prefix, s)
    if counts.get(s, 0) + 1 < g.d:
        return ExchangeResult(True, prefix, s)
    target = g.pi(prefix)
    for i in range(len(prefix)):
        shortened = (s,) + prefix[:i] + prefix[i + 1:]
        if g.pi(shortened) == target:
            return ExchangeResult(True, prefix, s, omitted_index=i + 1)
    return ExchangeResult(False, prefix, s)


def retraction(cs: CycleSet, k: int) -> CycleSet:
    """The cycle set on the bracket powers: row i becomes perm(s_i^[k])."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    rows = tuple(bracket_power(cs, i, k).perm for i in range(1, cs.n + 1))
    out = CycleSet(cs.n, rows)
    result = validate(out)
    if not result.valid:
        raise CycleSetError(
            f"retraction by {k} failed the law at {result.witness}; "
            "the input was not a valid cycle set"
        )
    return out


# --- class bounds -----------------------------------------------------------


def max_product_distinct_partition(n: int) -> int:
    """Brute-force maximum product over partitions of n into distinct parts."""
    if n < 1:
        raise ValueError("n must be positive")

    @lru_cache(maxsize=None)
    def best(remaining: int, smallest: int) -> int:
        # product over a partition of `remaining` into distinct parts >= smallest;
        # 1 encodes the empty partition
        out = 1 if remaining == 0 else 0
        for part in range(smallest, remaining + 1):
            sub = best(remaining - part, part + 1)
            if sub:
                out = max(out, part * sub)
        return out

    return best(n, 1)


def a_n_closed_form(n: int) -> int:
    """Closed form for the maximal product over distinct partitions.

    Writes n = (1 + 2 + ... + m) + l with the largest such triangular number,
    so 0 <= l <= m, and splits on how close l is to m.
    """
    if n < 2:
        raise ValueError("closed form needs n >= 2")
    m = 1
    while (m + 1) * (m + 2) // 2 <= n:
        m += 1
    l = n - m * (m + 1) // 2
    if l == m:
        return math.factorial(m + 1)
    if l == m - 1:
        return (m + 2) * math.factorial(m) // 2
    value, rem = divmod(math.factorial(m + 1), m - l)
    if rem:
        raise ArithmeticError(f"non-integer closed form at n={n}")
    return value


def _partitions(n: int, smallest: int = 1):
    if n == 0:
        yield ()
        return
    for part in range(smallest, n + 1):
        for rest in _partitions(n - part, part):
            yield (part,) + rest


def landau_g(n: int) -> int:
    """Largest order of a permutation of n points: max lcm over partitions."""
    if n < 1:
        raise ValueError("n must be positive")
    return max(math.lcm(*p) for p in _partitions(n))


@dataclass(frozen=True)
class ClassBounds:
    a_n: int
    landau_g_n: int
    factorial_bound: int


def class_bounds(n: int) -> ClassBounds:
    """a_n by closed form, the Landau number by brute force, and the
    general (n!)^n bound."""
    return ClassBounds(
        a_n=a_n_closed_form(n),
        landau_g_n=landau_g(n),
        factorial_bound=math.factorial(n) ** n,
    )


# --- conjecture / theorem sweep --------------------------------------------


@dataclass(frozen=True)
class ConjectureReport:
    """Divisibility theorems and conjectured bounds evaluated on one cycle set.

    Implications are vacuously true when their hypothesis fails.  The
    ``theorem_*`` fields can never be False on a valid cycle set; the
    ``conjecture_*`` fields would falsify the corresponding open statements.
    """

    n: int
    d: int
    g_order: int
    o_T: int
    indecomposable: bool
    square_free: bool
    abelian: bool
    theorem_o_T_divides_d: bool
    theorem_d_divides_g_order: bool
    theorem_g_order_divides_d_pow_n: bool
    theorem_same_prime_divisors: bool
    theorem_d_divides_n_factorial: bool
    theorem_n_divides_g_order_if_indecomposable: bool
    theorem_square_free_abelian_bound: bool
    conjecture_d_le_n_if_indecomposable: bool
    conjecture_d_le_a_n: bool

    def violations(self) -> list[str]:
        return [
            name
            for name in self.__dataclass_fields__
            if name.startswith(("theorem_", "conjecture_")) and not getattr(self, name)
        ]


def conjecture_report(cs: CycleSet, group_info: Optional[PermGroupInfo] = None) -> ConjectureReport:
    if group_info is None:
        group_info = perm_group(cs)
    diag = diagonal_map(cs)
    d = dehornoy_class_value(cs)
    g = group_info.order
    n = cs.n
    a_n = a_n_closed_form(n) if n >= 2 else 1
    indec = group_info.transitive
    return ConjectureReport(
        n=n,
        d=d,
        g_order=g,
        o_T=diag.order,
        indecomposable=indec,
        square_free=diag.square_free,
        abelian=group_info.abelian,
        theorem_o_T_divides_d=d % diag.order == 0,
        theorem_d_divides_g_order=g % d == 0,
        theorem_g_order_divides_d_pow_n=(d**n) % g == 0,
        theorem_same_prime_divisors=prime_divisors(d) == prime_divisors(g),
        theorem_d_divides_n_factorial=math.factorial(n) % d == 0,
        theorem_n_divides_g_order_if_indecomposable=(not indec) or g % n == 0,
        theorem_square_free_abelian_bound=(
            not (diag.square_free and group_info.abelian) or d <= a_n
        ),
        conjecture_d_le_n_if_indecomposable=(not indec) or d <= n,
        conjecture_d_le_a_n=d <= a_n,
    )
