"""Divisibility lattice of the structure monoid.

Left divisibility is the componentwise order on exponent vectors; right
divisibility is the same order on the transposes' exponents (the column
exponents).  Meets and joins exist because exponent vectors classify monoid
elements, so gcd/lcm reduce to componentwise min/max, with the right-handed
versions built through the transpose cycle set.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .calculus import cp_to_element
from .core import CycleSet, transpose_cycle_set
from .errors import CapExceeded, NegativeExponent
from .monomial import MonomialElement, transpose

DIVISOR_ENUM_CAP = 100_000
DELTA_DIVISORS_N_CAP = 20


def _require_monoid(*gs: MonomialElement) -> None:
    for g in gs:
        if not g.in_monoid():
            raise NegativeExponent(f"not a monoid element: cp={g.cp}")


def left_divides(g1: MonomialElement, g2: MonomialElement) -> bool:
    _require_monoid(g1, g2)
    return all(a <= b for a, b in zip(g1.cp, g2.cp))


def right_divides(g1: MonomialElement, g2: MonomialElement) -> bool:
    _require_monoid(g1, g2)
    return all(a <= b for a, b in zip(transpose(g1).cp, transpose(g2).cp))


def gcd_left(cs: CycleSet, g1: MonomialElement, g2: MonomialElement) -> MonomialElement:
    _require_monoid(g1, g2)
    return cp_to_element(cs, tuple(map(min, g1.cp, g2.cp)))


def lcm_left(cs: CycleSet, g1: MonomialElement, g2: MonomialElement) -> MonomialElement:
    _require_monoid(g1, g2)
    return cp_to_element(cs, tuple(map(max, g1.cp, g2.cp)))


def _from_column_cp(cs: CycleSet, col_cp) -> MonomialElement:
    """The monoid element whose column exponent vector is ``col_cp``."""
    return transpose(cp_to_element(transpose_cycle_set(cs), col_cp))


def gcd_right(cs: CycleSet, g1: MonomialElement, g2: MonomialElement) -> MonomialElement:
    _require_monoid(g1, g2)
    c = tuple(map(min, transpose(g1).cp, transpose(g2).cp))
    return _from_column_cp(cs, c)


def lcm_right(cs: CycleSet, g1: MonomialElement, g2: MonomialElement) -> MonomialElement:
    _require_monoid(g1, g2)
    c = tuple(map(max, transpose(g1).cp, transpose(g2).cp))
    return _from_column_cp(cs, c)


def delta(cs: CycleSet, k: int = 1) -> MonomialElement:
    """The Garside element power with constant exponent vector (k,...,k)."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return cp_to_element(cs, (k,) * cs.n)


def divisors_of_delta(cs: CycleSet, n_cap: int = DELTA_DIVISORS_N_CAP) -> list[MonomialElement]:
    """All 2^n elements with exponents in {0,1}, in lexicographic cp order."""
    if cs.n > n_cap:
        raise CapExceeded(f"2^{cs.n} divisors exceed the n <= {n_cap} cap")
    return [cp_to_element(cs, bits) for bits in itertools.product((0, 1), repeat=cs.n)]


@dataclass(frozen=True)
class BalanceReport:
    """``balanced`` is exact when ``exact`` is set; past the enumeration cap
    it falls back to ``rows_match_columns``, the cheap condition that row i
    and column i carry equal nonzero entries for every i.  That condition is
    neither necessary nor sufficient in general (it is exact for constant
    exponent vectors, the Garside powers), so capped results are heuristic."""

    balanced: bool
    exact: bool
    rows_match_columns: bool


def _divisor_cps(bounds) -> itertools.product:
    return itertools.product(*(range(b + 1) for b in bounds))


def is_balanced(cs: CycleSet, g: MonomialElement, cap: int = DIVISOR_ENUM_CAP) -> BalanceReport:
    """Compare the full left- and right-divisor sets of a monoid element."""
    _require_monoid(g)
    col_cp = transpose(g).cp
    rows_match_columns = g.cp == col_cp
    size = 1
    for b in g.cp:
        size *= b + 1
    if size > cap:
        return BalanceReport(rows_match_columns, False, rows_match_columns)
    left = {cp_to_element(cs, c) for c in _divisor_cps(g.cp)}
    tcs = transpose_cycle_set(cs)
    right = {transpose(cp_to_element(tcs, c)) for c in _divisor_cps(col_cp)}
    return BalanceReport(left == right, True, rows_match_columns)
