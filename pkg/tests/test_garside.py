import itertools
import random

import pytest

from cycleset import CycleSet
from cycleset.calculus import cp_to_element, pi, word_to_element
from cycleset.errors import CapExceeded, NegativeExponent
from cycleset.garside import (
    delta,
    divisors_of_delta,
    gcd_left,
    gcd_right,
    is_balanced,
    lcm_left,
    lcm_right,
    left_divides,
    right_divides,
)
from cycleset.monomial import MonomialElement, identity_element, inverse, multiply, theta, transpose


def monoid_sample(cs, rng, count, max_len=5):
    out = []
    for _ in range(count):
        word = tuple(rng.randint(1, cs.n) for _ in range(rng.randint(0, max_len)))
        out.append(word_to_element(cs, word))
    return out


def test_two_by_two_divisibility_example():
    cs = CycleSet.from_rows([(2, 1), (2, 1)])
    g1 = MonomialElement((3, 0), (2, 1))
    g2 = MonomialElement((4, 0), (1, 2))
    assert left_divides(g1, g2)
    assert not right_divides(g1, g2)
    assert left_divides(g1, g1) and right_divides(g1, g1)
    # g1 and g2 really live in the monoid of this cycle set
    assert cp_to_element(cs, (3, 0)) == g1
    assert cp_to_element(cs, (4, 0)) == g2


def test_divides_requires_monoid(ex1):
    with pytest.raises(NegativeExponent):
        left_divides(inverse(theta(ex1, 1)), theta(ex1, 1))


def test_left_divides_matches_quotient_oracle(ex1):
    rng = random.Random(20)
    sample = monoid_sample(ex1, rng, 60)
    for g1 in sample[:30]:
        for g2 in sample[30:]:
            h = multiply(inverse(g1), g2)
            assert left_divides(g1, g2) == h.in_monoid()


def test_right_divides_matches_quotient_oracle(ex1):
    rng = random.Random(21)
    sample = monoid_sample(ex1, rng, 60)
    for g1 in sample[:30]:
        for g2 in sample[30:]:
            h = multiply(g2, inverse(g1))
            assert right_divides(g1, g2) == h.in_monoid()


def test_gcd_lcm_goldens(ex1):
    a = pi(ex1, (1, 3))
    b = pi(ex1, (1, 2))
    c = pi(ex1, (2, 4))
    assert a.cp == (1, 0, 1, 0)
    assert b.cp == (1, 1, 0, 0)
    assert c.cp == (0, 1, 0, 1)
    assert gcd_left(ex1, a, b) == pi(ex1, (1,))
    assert gcd_left(ex1, a, b).cp == (1, 0, 0, 0)
    big = lcm_left(ex1, a, c)
    assert big.cp == (1, 1, 1, 1)
    assert big == delta(ex1)
    assert big == pi(ex1, (1, 2, 3, 4))


def test_gcd_lcm_idempotent_and_lattice_laws(ex1):
    rng = random.Random(22)
    sample = monoid_sample(ex1, rng, 12, max_len=4)
    for g in sample:
        assert gcd_left(ex1, g, g) == g
        assert lcm_left(ex1, g, g) == g
        assert gcd_right(ex1, g, g) == g
        assert lcm_right(ex1, g, g) == g
    for a, b in itertools.combinations(sample, 2):
        m = gcd_left(ex1, a, b)
        j = lcm_left(ex1, a, b)
        assert gcd_left(ex1, a, b) == gcd_left(ex1, b, a)
        assert left_divides(m, a) and left_divides(m, b)
        assert left_divides(a, j) and left_divides(b, j)
        mr = gcd_right(ex1, a, b)
        jr = lcm_right(ex1, a, b)
        assert right_divides(mr, a) and right_divides(mr, b)
        assert right_divides(a, jr) and right_divides(b, jr)
    for a, b, c in itertools.combinations(sample, 3):
        assert gcd_left(ex1, gcd_left(ex1, a, b), c) == gcd_left(
            ex1, a, gcd_left(ex1, b, c)
        )


def test_gcd_is_greatest_common_divisor(ex1):
    rng = random.Random(23)
    sample = monoid_sample(ex1, rng, 10, max_len=4)
    small = monoid_sample(ex1, rng, 25, max_len=3)
    for a, b in itertools.combinations(sample, 2):
        m = gcd_left(ex1, a, b)
        for c in small:
            if left_divides(c, a) and left_divides(c, b):
                assert left_divides(c, m)
        mr = gcd_right(ex1, a, b)
        for c in small:
            if right_divides(c, a) and right_divides(c, b):
                assert right_divides(c, mr)


def test_delta(ex1):
    d1 = delta(ex1)
    assert d1.cp == (1, 1, 1, 1)
    assert delta(ex1, 2) == multiply(d1, d1)
    trivial = CycleSet.trivial(3)
    assert delta(trivial).perm == (1, 2, 3)
    with pytest.raises(ValueError):
        delta(ex1, 0)


def test_cp_to_element_errors(ex1):
    with pytest.raises(NegativeExponent):
        cp_to_element(ex1, (1, -1, 0, 0))


def test_divisors_of_delta(ex1):
    divisors = divisors_of_delta(ex1)
    assert len(divisors) == 16
    assert len(set(divisors)) == 16
    d = delta(ex1)
    for g in divisors:
        assert left_divides(g, d)
    for i in range(1, 5):
        assert theta(ex1, i) in divisors
    assert identity_element(4) in divisors
    with pytest.raises(CapExceeded):
        divisors_of_delta(ex1, n_cap=3)


def test_divisors_of_delta_trivial():
    cs = CycleSet.trivial(2)
    divisors = divisors_of_delta(cs)
    assert len(divisors) == 4
    assert all(g.perm == (1, 2) for g in divisors)


def test_balanced_delta_and_identity(ex1):
    for k in (1, 2, 3):
        report = is_balanced(ex1, delta(ex1, k))
        assert report.balanced and report.exact and report.rows_match_columns
    report = is_balanced(ex1, identity_element(4))
    assert report.balanced and report.rows_match_columns


def test_balanced_generators(ex1):
    # generators are always balanced; the sufficient row/column condition
    # only holds when the diagonal fixes the index
    for i in range(1, 5):
        report = is_balanced(ex1, theta(ex1, i))
        assert report.balanced and report.exact
        assert report.rows_match_columns == (ex1.star(i, i) == i)


def test_balanced_exact_matches_divisor_sets(ex1):
    from cycleset.core import transpose_cycle_set

    tcs = transpose_cycle_set(ex1)
    rng = random.Random(24)
    for g in monoid_sample(ex1, rng, 25, max_len=4):
        report = is_balanced(ex1, g)
        assert report.exact
        # definition-level oracle: balanced iff every left divisor also
        # right-divides and every right divisor also left-divides, with the
        # divisor sets enumerated from the exponent bounds
        left = [
            cp_to_element(ex1, c)
            for c in itertools.product(*(range(x + 1) for x in g.cp))
        ]
        right = [
            transpose(cp_to_element(tcs, c))
            for c in itertools.product(*(range(x + 1) for x in transpose(g).cp))
        ]
        balanced_oracle = all(right_divides(h, g) for h in left) and all(
            left_divides(h, g) for h in right
        )
        assert report.balanced == balanced_oracle


def test_row_column_match_does_not_imply_balanced(ex1):
    # the row/column condition is reported but is weaker than balancedness:
    # diag(1, 1, q^2, q^2) matches rows and columns, yet its left divisor
    # with exponents (0,0,1,1) (permutation (14)(23)) is not a right divisor
    g = cp_to_element(ex1, (0, 0, 2, 2))
    assert g.perm == (1, 2, 3, 4)
    report = is_balanced(ex1, g)
    assert report.rows_match_columns
    assert report.exact and not report.balanced
    h = cp_to_element(ex1, (0, 0, 1, 1))
    assert left_divides(h, g) and not right_divides(h, g)
    assert not multiply(g, inverse(h)).in_monoid()


def test_balanced_cap_partial(ex1):
    g = cp_to_element(ex1, (3, 3, 3, 3))
    report = is_balanced(ex1, g, cap=10)
    assert not report.exact
    assert report.balanced == report.rows_match_columns
