"""Exhaustive census of cycle sets of a given size, with class statistics.

Two interchangeable enumeration backends exist: a pure-Python recursive
search (the reference; used for small n and as a cross-check oracle) and the
compiled kernels in _kernels.py (needed to keep n = 5, 6 at desk scale).
Both emit tables in lexicographic order of the flattened table, so streams
are identical.

``up_to_iso`` mode keeps exactly the tables that are lexicographically
minimal among all simultaneous relabelings (conjugation of the whole table
by a permutation), so its stream is a subsequence of the labeled one.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional

from .core import CycleSet
from .cys import format_cys, parse_census
from .errors import CapExceeded, CensusMismatch
from .germ import a_n_closed_form, dehornoy_class_value, prime_divisors

DEFAULT_N_CAP = 6

# Out of desk scale, kept for reference only: the size-10 census has roughly
# 4.9 million solutions of which about 67% have prime-power class.  Nothing
# in this package recomputes those numbers; the engine is exercised at n <= 6.
REFERENCE_N10_TOTAL_APPROX = 4_900_000
REFERENCE_N10_PRIME_POWER_FRACTION_APPROX = 0.67


def _enumerate_tables_py(n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Reference search; yields 0-based tables in lexicographic order."""
    perms = list(itertools.permutations(range(n)))
    rows: list[tuple[int, ...] | None] = [None] * n
    diag_used = [False] * n
    pair_used: set[tuple[int, int]] = set()

    def checks_for_row(k: int) -> bool:
        for a in range(k + 1):
            ra = rows[a]
            for b in range(k + 1):
                rb = rows[b]
                c = ra[b]
                e = rb[a]
                if c > k or e > k:
                    continue
                if a < k and b < k and c < k and e < k:
                    continue
                rc, re = rows[c], rows[e]
                for u in range(n):
                    if rc[ra[u]] != re[rb[u]]:
                        return False
        return True

    def place(k: int, cand: tuple[int, ...]):
        if diag_used[cand[k]]:
            return None
        rows[k] = cand
        added = []
        ok = True
        for a in range(k + 1):
            p = (rows[a][k], rows[k][a])
            if p in pair_used:
                ok = False
                break
            pair_used.add(p)
            added.append(p)
            if a < k:
                q = (p[1], p[0])
                if q in pair_used:
                    ok = False
                    break
                pair_used.add(q)
                added.append(q)
        ok = ok and checks_for_row(k)
        if not ok:
            for p in added:
                pair_used.remove(p)
            rows[k] = None
            return None
        diag_used[cand[k]] = True
        return added

    def unplace(k: int, added) -> None:
        for p in added:
            pair_used.remove(p)
        diag_used[rows[k][k]] = False
        rows[k] = None

    def forced_row(k: int):
        for a in range(k):
            ra = rows[a]
            for b in range(k):
                if a == b:
                    continue
                rb = rows[b]
                c, e = ra[b], rb[a]
                if c == k and e < k:
                    inv = [0] * n
                    for i, v in enumerate(ra):
                        inv[v] = i
                    return tuple(rows[e][rb[inv[i]]] for i in range(n))
                if e == k and c < k:
                    inv = [0] * n
                    for i, v in enumerate(rb):
                        inv[v] = i
                    return tuple(rows[c][ra[inv[i]]] for i in range(n))
        return None

    def dead_at(k: int) -> bool:
        for a in range(k):
            for b in range(a + 1, k):
                if rows[a][b] == k and rows[b][a] == k and rows[a] != rows[b]:
                    return True
        return False

    def rec(k: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if k == n:
            yield tuple(rows)
            return
        if dead_at(k):
            return
        f = forced_row(k)
        for cand in ((f,) if f is not None else perms):
            added = place(k, cand)
            if added is None:
                continue
            yield from rec(k + 1)
            unplace(k, added)

    yield from rec(0)


def _conjugate_table(table, tau, tau_inv):
    n = len(table)
    return tuple(
        tuple(tau[table[tau_inv[i]][tau_inv[j]]] for j in range(n)) for i in range(n)
    )


def is_canonical_table(table) -> bool:
    """Minimal in lex order among simultaneous relabelings (0-based table)."""
    n = len(table)
    for tau in itertools.permutations(range(n)):
        inv = [0] * n
        for i, v in enumerate(tau):
            inv[v] = i
        if _conjugate_table(table, tau, inv) < table:
            return False
    return True


def canonical_form(cs: CycleSet) -> CycleSet:
    """The lexicographically minimal relabeling of a cycle set."""
    table = _to_table(cs)
    best = table
    for tau in itertools.permutations(range(cs.n)):
        inv = [0] * cs.n
        for i, v in enumerate(tau):
            inv[v] = i
        cand = _conjugate_table(table, tau, inv)
        if cand < best:
            best = cand
    return _from_table(best)


def _to_table(cs: CycleSet):
    return tuple(tuple(v - 1 for v in row) for row in cs.rows)


def _from_table(table) -> CycleSet:
    return CycleSet(len(table), tuple(tuple(v + 1 for v in row) for row in table))


def _numba_tables(n: int):
    import numpy as np

    from . import _kernels

    perms = np.array(
        list(itertools.permutations(range(n))), dtype=np.int8
    ).reshape(-1, n)
    limit = 120_000
    while True:
        out = np.empty((limit, n, n), dtype=np.int8)
        count = _kernels.search(n, perms, out, limit)
        if count <= limit:
            return out[:count], perms
        limit = count


def _resolve_backend(n: int, backend: str) -> str:
    if backend == "auto":
        return "numba" if n >= 5 else "python"
    if backend not in ("numba", "python"):
        raise ValueError(f"unknown backend {backend!r}")
    return backend


def enumerate_cycle_sets(
    n: int,
    mode: str = "labeled",
    visitor: Optional[Callable[[CycleSet], None]] = None,
    n_cap: int = DEFAULT_N_CAP,
    backend: str = "auto",
) -> Iterator[CycleSet]:
    """Stream every cycle-set table of size n in lexicographic order.

    ``mode`` is "labeled" or "up_to_iso"; the latter emits the subsequence of
    canonical representatives.  ``visitor`` is called on each emitted set.
    """
    if mode not in ("labeled", "up_to_iso"):
        raise ValueError(f"unknown mode {mode!r}")
    if n > n_cap:
        raise CapExceeded(f"census size {n} exceeds the cap {n_cap}")
    if n < 1:
        raise ValueError("n must be positive")

    def emit(tables: Iterable) -> Iterator[CycleSet]:
        for table in tables:
            if mode == "up_to_iso" and not is_canonical_table(table):
                continue
            cs = _from_table(table)
            if visitor is not None:
                visitor(cs)
            yield cs

    if _resolve_backend(n, backend) == "python":
        yield from emit(_enumerate_tables_py(n))
        return

    import numpy as np

    from . import _kernels

    arr, perms = _numba_tables(n)
    if mode == "up_to_iso":
        mask = np.zeros(arr.shape[0], dtype=np.uint8)
        _kernels.canonical_mask(arr, perms, mask)
        arr = arr[mask.astype(bool)]
    for i in range(arr.shape[0]):
        table = tuple(tuple(int(v) for v in row) for row in arr[i])
        cs = _from_table(table)
        if visitor is not None:
            visitor(cs)
        yield cs


def _stats_rows(n: int, backend: str) -> list[tuple[int, int, int, int, int, int]]:
    """Per labeled table: (d, g_order, o_T, orbits, abelian, square_free)."""
    if _resolve_backend(n, backend) == "numba":
        import numpy as np

        from . import _kernels

        arr, _ = _numba_tables(n)
        stats = np.zeros((arr.shape[0], 6), dtype=np.int64)
        _kernels.table_stats(arr, stats)
        return [tuple(int(x) for x in row) for row in stats]
    from .core import diagonal_map, perm_group

    out = []
    for cs in enumerate_cycle_sets(n, backend="python"):
        info = perm_group(cs)
        diag = diagonal_map(cs)
        out.append(
            (
                dehornoy_class_value(cs),
                info.order,
                diag.order,
                len(info.orbits),
                int(info.abelian),
                int(diag.square_free),
            )
        )
    return out


@dataclass(frozen=True)
class CensusRecord:
    """``violations`` lists failed divisibility theorems (must stay empty);
    ``conjecture_violations`` would falsify the open bound conjectures."""

    n: int
    total_count: int
    dmax: int
    class_histogram: dict[int, int]
    prime_power_fraction: float
    iso_count: Optional[int] = None
    violations: list[str] = field(default_factory=list)
    conjecture_violations: list[str] = field(default_factory=list)
    nd_inequalities: list[tuple[int, int, int, bool]] = field(default_factory=list)


def dmax_table(n_from: int, n_to: int, n_cap: int = DEFAULT_N_CAP, backend: str = "auto") -> dict[int, int]:
    """Maximal class over all cycle sets of each size in the range."""
    out = {}
    for n in range(n_from, n_to + 1):
        if n > n_cap:
            raise CapExceeded(f"census size {n} exceeds the cap {n_cap}")
        out[n] = max(row[0] for row in _stats_rows(n, backend))
    return out


def _nd_inequalities(hist: dict[int, int]) -> list[tuple[int, int, int, bool]]:
    """For each composite class d present, N(n,d) <= prod N(n, p^a).

    N(n,d) counts tables whose class divides d, read off the histogram.
    """

    def count_dividing(d: int) -> int:
        return sum(c for cls, c in hist.items() if d % cls == 0)

    out = []
    for d in sorted(hist):
        primes = prime_divisors(d)
        if len(primes) < 2:
            continue
        bound = 1
        for p in primes:
            pa = p
            while d % (pa * p) == 0:
                pa *= p
            bound *= count_dividing(pa)
        lhs = count_dividing(d)
        out.append((d, lhs, bound, lhs <= bound))
    return out


def stats(
    n: int,
    n_cap: int = DEFAULT_N_CAP,
    backend: str = "auto",
    include_iso: bool = True,
) -> CensusRecord:
    """Class histogram, prime-power fraction, and the theorem/conjecture sweep."""
    if n > n_cap:
        raise CapExceeded(f"census size {n} exceeds the cap {n_cap}")
    rows = _stats_rows(n, backend)
    hist: dict[int, int] = {}
    for d, *_ in rows:
        hist[d] = hist.get(d, 0) + 1
    total = len(rows)
    dmax = max(hist) if hist else 0
    prime_power = sum(c for d, c in hist.items() if len(prime_divisors(d)) == 1)
    a_n = a_n_closed_form(n) if n >= 2 else 1
    violations = []
    conjecture_violations = []
    fact_n = math.factorial(n)
    for idx, (d, g, o_T, orbits, abelian, square_free) in enumerate(rows):
        indec = orbits == 1
        theorem_checks = {
            "o(T) | d": d % o_T == 0,
            "d | #G": g % d == 0,
            "#G | d^n": (d**n) % g == 0,
            "primes(d) == primes(#G)": prime_divisors(d) == prime_divisors(g),
            "d | n!": fact_n % d == 0,
            "indecomposable => n | #G": (not indec) or g % n == 0,
            "square-free abelian => d <= a_n": (
                not (square_free and abelian) or d <= a_n
            ),
        }
        conjecture_checks = {
            "indecomposable => d <= n": (not indec) or d <= n,
            "d <= a_n": d <= a_n,
        }
        for name, ok in theorem_checks.items():
            if not ok:
                violations.append(f"table #{idx}: {name} (d={d}, #G={g})")
        for name, ok in conjecture_checks.items():
            if not ok:
                conjecture_violations.append(f"table #{idx}: {name} (d={d}, #G={g})")
    iso_count = None
    if include_iso:
        iso_count = sum(1 for _ in enumerate_cycle_sets(n, "up_to_iso", backend=backend))
    return CensusRecord(
        n=n,
        total_count=total,
        dmax=dmax,
        class_histogram=dict(sorted(hist.items())),
        prime_power_fraction=prime_power / total if total else 0.0,
        iso_count=iso_count,
        violations=violations,
        conjecture_violations=conjecture_violations,
        nd_inequalities=_nd_inequalities(hist),
    )


def summary_lines(total: int, dmax: int, hist: dict[int, int]) -> list[str]:
    lines = [f"total={total}", f"dmax={dmax}"]
    lines.extend(f"hist {d}={hist[d]}" for d in sorted(hist))
    return lines


def run_census(
    n: int,
    mode: str = "labeled",
    out_path: Optional[str] = None,
    n_cap: int = DEFAULT_N_CAP,
    backend: str = "auto",
) -> tuple[int, int, dict[int, int]]:
    """Stream the census, optionally persisting it; returns (total, dmax, hist).

    When the output file already exists its blocks are verified against the
    regenerated stream: a complete file is checked in full, a truncated one
    is treated as a checkpoint prefix and extended in place.
    """
    existing: list[CycleSet] = []
    existing_footer: list[str] = []
    if out_path and os.path.exists(out_path):
        existing, existing_footer = parse_census(out_path)

    total = 0
    dmax = 0
    hist: dict[int, int] = {}
    fh = None
    try:
        if out_path:
            mode_flag = "a" if existing else "w"
            fh = open(out_path, mode_flag, encoding="utf-8")
        for cs in enumerate_cycle_sets(n, mode, n_cap=n_cap, backend=backend):
            if total < len(existing):
                if existing[total].rows != cs.rows:
                    raise CensusMismatch(
                        f"{out_path}: block {total + 1} disagrees with the stream"
                    )
            elif fh is not None:
                fh.write(format_cys(cs) + "\n")
            d = dehornoy_class_value(cs)
            hist[d] = hist.get(d, 0) + 1
            dmax = max(dmax, d)
            total += 1
        if total < len(existing):
            raise CensusMismatch(
                f"{out_path}: file has {len(existing)} blocks, stream only {total}"
            )
        footer = summary_lines(total, dmax, hist)
        if existing_footer:
            if existing_footer != footer:
                raise CensusMismatch(f"{out_path}: footer disagrees with the stream")
        elif fh is not None:
            fh.write("\n".join(footer) + "\n")
    finally:
        if fh is not None:
            fh.close()
    return total, dmax, hist
