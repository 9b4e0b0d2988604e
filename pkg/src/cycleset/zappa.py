"""Composition of two cycle-set structures with coprime classes, and the
Sylow-style decomposition that inverts it.

Two structures *_1, *_2 on the same index set compose exactly when they
satisfy the mixed law

    (s *1 t) *2 (s *1 u) = (t *2 s) *1 (t *2 u)   for all s, t, u,

equivalently when their germs commute elementwise.  The composed table is
built generator by generator from a Bezout pair (u, v) with
d2*u + d1*v = 1 mod d1*d2, which makes each composed generator carry the
unit exponent vector.  Conversely every cycle set of class d splits into
retractions of prime-power class, one per prime of d, and composing them
back restores the original table.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .calculus import bracket_power
from .core import CycleSet, ValidationResult, validate
from .errors import (
    CompositionInvalid,
    DimensionMismatch,
    NotCoprime,
    TrivialClass,
)
from .germ import Germ, GermElement, dehornoy_class_value, germ
from .perms import apply, compose


@dataclass(frozen=True)
class MixedEquationResult:
    passed: bool
    counterexample: Optional[tuple[int, int, int]] = None
    left: Optional[int] = None
    right: Optional[int] = None


def mixed_equation_check(s1: CycleSet, s2: CycleSet) -> MixedEquationResult:
    """Check the mixed law on all n^3 triples; first failure in lex order."""
    if s1.n != s2.n:
        raise DimensionMismatch(f"sizes {s1.n} and {s2.n}")
    n = s1.n
    for s in range(1, n + 1):
        for t in range(1, n + 1):
            rl = s2.rows[s1.star(s, t) - 1]
            rr = s1.rows[s2.star(t, s) - 1]
            for u in range(1, n + 1):
                left = rl[s1.star(s, u) - 1]
                right = rr[s2.star(t, u) - 1]
                if left != right:
                    return MixedEquationResult(False, (s, t, u), left, right)
    return MixedEquationResult(True)


@dataclass(frozen=True)
class CommuteResult:
    passed: bool
    counterexample: Optional[tuple[int, int]] = None


def germs_commute_check(s1: CycleSet, s2: CycleSet) -> CommuteResult:
    """Generator-level commutation of the two germs.

    For generators s of the first structure and t of the second, the unique
    candidate pair (t', s') with s t = t' s' is forced on the diagonal parts;
    what remains is the permutation identity

        psi2(s *1 t) o psi1(s) = psi1(t *2 s) o psi2(t),

    which is the mixed law with the witness index abstracted away.
    """
    if s1.n != s2.n:
        raise DimensionMismatch(f"sizes {s1.n} and {s2.n}")
    d1 = dehornoy_class_value(s1)
    d2 = dehornoy_class_value(s2)
    if math.gcd(d1, d2) != 1:
        raise NotCoprime(f"classes {d1} and {d2} are not coprime")
    n = s1.n
    for s in range(1, n + 1):
        for t in range(1, n + 1):
            left = compose(s2.rows[s1.star(s, t) - 1], s1.rows[s - 1])
            right = compose(s1.rows[s2.star(t, s) - 1], s2.rows[t - 1])
            if left != right:
                return CommuteResult(False, (s, t))
    return CommuteResult(True)


def bezout_pair(d1: int, d2: int) -> tuple[int, int]:
    """The (u, v) with d2*u + d1*v = 1 mod d1*d2, 0 <= u < d1, 0 <= v < d2.

    u inverts d2 mod d1 and v inverts d1 mod d2; the congruence mod d1*d2
    follows by the Chinese remainder theorem.  d1 = 1 gives u = 0.
    """
    if math.gcd(d1, d2) != 1:
        raise NotCoprime(f"{d1} and {d2} are not coprime")
    u = pow(d2, -1, d1) % d1 if d1 > 1 else 0
    v = pow(d1, -1, d2) % d2 if d2 > 1 else 0
    return u, v


@dataclass(frozen=True)
class ZappaResult:
    cycle_set: CycleSet
    valid: bool
    validation: ValidationResult
    d1: int
    d2: int
    u: int
    v: int


def zappa_compose(s1: CycleSet, s2: CycleSet) -> ZappaResult:
    """Compose two structures of coprime classes; the candidate may fail
    the law and is returned together with its validation."""
    if s1.n != s2.n:
        raise DimensionMismatch(f"sizes {s1.n} and {s2.n}")
    d1 = dehornoy_class_value(s1)
    d2 = dehornoy_class_value(s2)
    u, v = bezout_pair(d1, d2)
    rows = []
    for i in range(1, s1.n + 1):
        sigma = bracket_power(s1, i, u).perm
        j = apply(sigma, i)
        tau = bracket_power(s2, j, v).perm
        rows.append(compose(tau, sigma))
    candidate = CycleSet(s1.n, tuple(rows))
    result = validate(candidate)
    return ZappaResult(candidate, result.valid, result, d1, d2, u, v)


@dataclass(frozen=True)
class SylowFactor:
    """The retraction S^[beta] of prime-power class prime**exponent."""

    prime: int
    exponent: int
    beta: int
    cycle_set: CycleSet


def _prime_factorization(d: int) -> list[tuple[int, int]]:
    out = []
    p = 2
    while p * p <= d:
        if d % p == 0:
            a = 0
            while d % p == 0:
                d //= p
                a += 1
            out.append((p, a))
        p += 1
    if d > 1:
        out.append((d, 1))
    return out


def sylow_decompose(cs: CycleSet) -> list[SylowFactor]:
    """One factor per prime of the class d, in ascending prime order."""
    from .germ import retraction

    d = dehornoy_class_value(cs)
    if d < 2:
        raise TrivialClass("class 1: nothing to decompose")
    factors = []
    for p, a in _prime_factorization(d):
        beta = d // p**a
        sub = retraction(cs, beta)
        got = dehornoy_class_value(sub)
        if got != p**a:
            raise CompositionInvalid(
                f"retraction by {beta} has class {got}, expected {p**a}"
            )
        factors.append(SylowFactor(p, a, beta, sub))
    return factors


def sylow_recompose(factors: Sequence[SylowFactor]) -> CycleSet:
    """Left fold of the composition over the factors in ascending prime order."""
    if not factors:
        raise ValueError("need at least one factor")
    ordered = sorted(factors, key=lambda f: f.prime)
    acc = ordered[0].cycle_set
    for factor in ordered[1:]:
        result = zappa_compose(acc, factor.cycle_set)
        if not result.valid:
            raise CompositionInvalid(
                f"intermediate composition failed the law at {result.validation.witness}"
            )
        acc = result.cycle_set
    return acc


@dataclass(frozen=True)
class SylowChecks:
    """Verification record for the Sylow subgroup structure of the germ."""

    d: int
    subgroup_orders: dict[int, int]
    expected_orders: dict[int, int]
    orders_ok: bool
    commute_ok: bool
    factorization_ok: bool
    factored_elements: int


def _subgroup_closure(g: Germ, beta: int) -> set[GermElement]:
    gens = [g.project(bracket_power(g.cycle_set, i, beta)) for i in range(1, g.n + 1)]
    seen = {g.identity}
    frontier = [g.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for h in gens:
                y = g.multiply(x, h)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def _peel_component(g: Germ, element: GermElement, beta: int, alpha: int) -> GermElement:
    """The factor of ``element`` inside the subgroup of residues divisible by
    beta, matching it mod alpha (residues decompose uniquely by CRT)."""
    inv_beta = pow(beta, -1, alpha) if alpha > 1 else 0
    v = tuple(beta * ((c * inv_beta) % alpha) for c in element.cp_mod)
    return g.element_with_residues(v)


def sylow_group_checks(cs: CycleSet, sample_elements: int = 10, seed: int = 0) -> SylowChecks:
    """Check subgroup cardinalities, pairwise commutation on generators, and
    that sampled germ elements factor as an ordered product over the Sylows."""
    d = dehornoy_class_value(cs)
    if d < 2:
        raise TrivialClass("class 1: the germ is trivial")
    g = germ(cs)
    primes = _prime_factorization(d)
    closures: dict[int, set[GermElement]] = {}
    orders: dict[int, int] = {}
    expected: dict[int, int] = {}
    for p, a in primes:
        alpha = p**a
        beta = d // alpha
        closures[p] = _subgroup_closure(g, beta)
        orders[p] = len(closures[p])
        expected[p] = alpha**cs.n
    orders_ok = orders == expected

    commute_ok = True
    for pi_, ai in primes:
        for pj, aj in primes:
            if pi_ >= pj or not commute_ok:
                continue
            alpha_j = pj**aj
            beta_i, beta_j = d // pi_**ai, d // alpha_j
            for s in range(1, cs.n + 1):
                for t in range(1, cs.n + 1):
                    gi = g.project(bracket_power(cs, s, beta_i))
                    hj = g.project(bracket_power(cs, t, beta_j))
                    prod = g.multiply(gi, hj)
                    h2 = _peel_component(g, prod, beta_j, alpha_j)
                    g2 = g.multiply(g.inverse(h2), prod)
                    if h2 not in closures[pj] or g2 not in closures[pi_]:
                        commute_ok = False
                        break
                if not commute_ok:
                    break

    rng = random.Random(seed)
    factored = 0
    factorization_ok = True
    for _ in range(sample_elements):
        target = g.element_with_residues(
            tuple(rng.randrange(d) for _ in range(cs.n))
        )
        rem = target
        for p, a in primes:
            alpha = p**a
            beta = d // alpha
            part = _peel_component(g, rem, beta, alpha)
            if part not in closures[p]:
                factorization_ok = False
                break
            rem = g.multiply(g.inverse(part), rem)
        if rem != g.identity:
            factorization_ok = False
        if not factorization_ok:
            break
        factored += 1
    return SylowChecks(
        d=d,
        subgroup_orders=orders,
        expected_orders=expected,
        orders_ok=orders_ok,
        commute_ok=commute_ok,
        factorization_ok=factorization_ok,
        factored_elements=factored,
    )
