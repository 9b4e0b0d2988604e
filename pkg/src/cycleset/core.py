"""Cycle-set tables: validation, diagonal map, permutation group, decomposition.

A cycle set of size n is stored as n permutations ``rows[i-1] = psi(s_i)``,
where ``s_i * s_j = s_{psi(s_i)(j)}``.  The defining law, checked by
:func:`validate`, is

    (s*t)*(s*u) = (t*s)*(t*u)    for all s, t, u,

equivalently on indices: psi(s_{i*j}) o psi(s_i) = psi(s_{j*i}) o psi(s_j).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import NonDegeneracyViolation, NotAPermutation
from .perms import (
    Perm,
    apply,
    compose,
    identity,
    invert,
    is_permutation,
    perm_order,
)

DEFAULT_ELEMENT_CAP = 10**6


@dataclass(frozen=True)
class CycleSet:
    """A table of n permutations of {1..n}; the law is *not* assumed.

    Rows that merely form permutations are accepted so that candidate tables
    (e.g. products that fail to be cycle sets) can be represented; call
    :func:`validate` to check the law.
    """

    n: int
    rows: tuple[Perm, ...]

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise NotAPermutation(0, f"expected {self.n} rows, got {len(self.rows)}")
        for i, row in enumerate(self.rows, start=1):
            if not is_permutation(row, self.n):
                raise NotAPermutation(i)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> "CycleSet":
        tup = tuple(tuple(r) for r in rows)
        return cls(len(tup), tup)

    @classmethod
    def trivial(cls, n: int) -> "CycleSet":
        return cls(n, (identity(n),) * n)

    @classmethod
    def cyclic(cls, n: int) -> "CycleSet":
        """s_i * s_j = s_{j+1 mod n}: every row is the n-cycle (1 2 ... n)."""
        sigma = tuple(list(range(2, n + 1)) + [1])
        return cls(n, (sigma,) * n)

    def row(self, i: int) -> Perm:
        return self.rows[i - 1]

    def star(self, i: int, j: int) -> int:
        """Index of s_i * s_j."""
        return self.rows[i - 1][j - 1]

    def is_valid(self) -> bool:
        return validate(self).valid


@dataclass(frozen=True)
class Witness:
    """First failing triple of the law, 1-based, with both evaluated sides."""

    i: int
    j: int
    u: int
    left: int
    right: int


@dataclass(frozen=True)
class ValidationResult:
    valid: bool
    witness: Optional[Witness] = None

    def __bool__(self) -> bool:
        return self.valid


def validate(cs: CycleSet) -> ValidationResult:
    """Check the law over all n^3 triples; lexicographically first witness."""
    n = cs.n
    rows = cs.rows
    for i in range(1, n + 1):
        ri = rows[i - 1]
        for j in range(1, n + 1):
            rj = rows[j - 1]
            rc = rows[ri[j - 1] - 1]
            re = rows[rj[i - 1] - 1]
            for u in range(n):
                left = rc[ri[u] - 1]
                right = re[rj[u] - 1]
                if left != right:
                    return ValidationResult(False, Witness(i, j, u + 1, left, right))
    return ValidationResult(True)


@dataclass(frozen=True)
class DiagonalInfo:
    perm: Perm
    order: int
    square_free: bool


def diagonal_map(cs: CycleSet) -> DiagonalInfo:
    """T(i) = psi(s_i)(i), verified injective (it must be on valid input)."""
    n = cs.n
    images = []
    seen: dict[int, int] = {}
    for i in range(1, n + 1):
        t = apply(cs.rows[i - 1], i)
        if t in seen:
            raise NonDegeneracyViolation(seen[t], i)
        seen[t] = i
        images.append(t)
    T = tuple(images)
    return DiagonalInfo(T, perm_order(T), T == identity(n))


@dataclass(frozen=True)
class PermGroupInfo:
    """The subgroup of S_n generated by the rows.

    ``abelian``/``transitive``/``orbits`` are exact even when the closure is
    capped; ``order`` is then a lower bound with ``order_is_lower_bound`` set
    and ``elements`` left unmaterialized.
    """

    order: int
    abelian: bool
    transitive: bool
    orbits: tuple[tuple[int, ...], ...]
    elements: Optional[tuple[Perm, ...]] = field(default=None, repr=False)
    order_is_lower_bound: bool = False


def _orbits_of_rows(rows: Sequence[Perm], n: int) -> tuple[tuple[int, ...], ...]:
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for r in rows:
        for x in range(1, n + 1):
            a, b = find(x), find(r[x - 1])
            if a != b:
                parent[a] = b
    groups: dict[int, list[int]] = {}
    for x in range(1, n + 1):
        groups.setdefault(find(x), []).append(x)
    return tuple(tuple(v) for v in sorted(groups.values()))


def perm_group(cs: CycleSet, element_cap: int = DEFAULT_ELEMENT_CAP) -> PermGroupInfo:
    """Breadth-first closure of the rows under composition."""
    n = cs.n
    gens = sorted(set(cs.rows))
    abelian = all(compose(a, b) == compose(b, a) for a in gens for b in gens)
    orbits = _orbits_of_rows(gens, n)

    seen = {identity(n)}
    frontier = [identity(n)]
    capped = False
    while frontier and not capped:
        nxt = []
        for g in frontier:
            for h in gens:
                x = compose(g, h)
                if x not in seen:
                    seen.add(x)
                    nxt.append(x)
                    if len(seen) > element_cap:
                        capped = True
                        break
            if capped:
                break
        frontier = nxt
    elements = None if capped else tuple(sorted(seen))
    return PermGroupInfo(
        order=len(seen),
        abelian=abelian,
        transitive=len(orbits) == 1,
        orbits=orbits,
        elements=elements,
        order_is_lower_bound=capped,
    )


@dataclass(frozen=True)
class Component:
    """One orbit with its induced cycle set, relabeled to 1..|orbit|."""

    orbit: tuple[int, ...]
    cycle_set: CycleSet


def decompose(cs: CycleSet) -> list[Component]:
    """Split into the induced cycle sets on the orbits of the generated group.

    A single component means the cycle set is indecomposable.  Orbit elements
    keep their original relative order under relabeling.
    """
    out = []
    for orbit in _orbits_of_rows(cs.rows, cs.n):
        relabel = {v: k + 1 for k, v in enumerate(orbit)}
        rows = tuple(
            tuple(relabel[apply(cs.rows[s - 1], x)] for x in orbit) for s in orbit
        )
        out.append(Component(orbit, CycleSet(len(orbit), rows)))
    return out


def pairing_is_bijective(cs: CycleSet) -> bool:
    """Whether (s,t) -> (s*t, t*s) is a bijection of pairs."""
    n = cs.n
    images = set()
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            images.add((cs.star(i, j), cs.star(j, i)))
    return len(images) == n * n


def transpose_cycle_set(cs: CycleSet) -> CycleSet:
    """The cycle set whose structure group is the transpose of this one's.

    Its generator with exponent vector e_i is the transpose of the generator
    of index T^{-1}(i), so psi_t(s_i) = psi(s_{T^{-1}(i)})^{-1}.  Used to read
    column exponents through the row machinery.
    """
    info = diagonal_map(cs)
    t_inv = invert(info.perm)
    rows = tuple(invert(cs.rows[apply(t_inv, i) - 1]) for i in range(1, cs.n + 1))
    return CycleSet(cs.n, rows)
