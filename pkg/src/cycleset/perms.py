"""Permutations of {1..n} in one-line notation.

A permutation is a tuple ``p`` of length n whose entries are 1..n, with
``p[x-1]`` the image of ``x``.  Composition is function composition:
``compose(a, b)`` applies ``b`` first, then ``a``.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def is_permutation(images: Sequence[int], n: int) -> bool:
    return len(images) == n and sorted(images) == list(range(1, n + 1))


def apply(p: Perm, x: int) -> int:
    return p[x - 1]


def compose(a: Perm, b: Perm) -> Perm:
    """(a o b)(x) = a(b(x))."""
    return tuple(a[b[x] - 1] for x in range(len(a)))


def invert(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v - 1] = i + 1
    return tuple(inv)


def perm_order(p: Perm) -> int:
    order = 1
    for c in cycles(p, trivial=True):
        order = order * len(c) // math.gcd(order, len(c))
    return order


def cycles(p: Perm, trivial: bool = False) -> list[tuple[int, ...]]:
    """Disjoint cycles, each starting at its minimum, sorted by minimum.

    Fixed points are omitted unless ``trivial`` is set.
    """
    n = len(p)
    seen = [False] * n
    out = []
    for start in range(1, n + 1):
        if seen[start - 1]:
            continue
        cyc = [start]
        seen[start - 1] = True
        x = p[start - 1]
        while x != start:
            cyc.append(x)
            seen[x - 1] = True
            x = p[x - 1]
        if len(cyc) > 1 or trivial:
            out.append(tuple(cyc))
    return out


def from_cycles(n: int, cycs: Iterable[Iterable[int]]) -> Perm:
    img = list(range(1, n + 1))
    for cyc in cycs:
        pts = list(cyc)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            if not 1 <= a <= n:
                raise ValueError(f"cycle entry {a} out of range 1..{n}")
            img[a - 1] = b
    if not is_permutation(img, n):
        raise ValueError("cycles are not disjoint")
    return tuple(img)


def cycle_string(p: Perm) -> str:
    """Human form, e.g. '(1 2 3 4)(5 6)'; the identity prints as 'id'."""
    cycs = cycles(p)
    if not cycs:
        return "id"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)
