import random
from fractions import Fraction

import pytest

from germdyn.staircase import (
    MonomialIdeal2,
    NotPrimary,
    colength,
    colength_power,
    containment_index,
    hilbert_samuel_fit,
    minkowski_check,
    mixed,
    product,
    random_primary_ideal,
    samuel,
    staircase_covolume,
)

M = MonomialIdeal2([(1, 0), (0, 1)])
I23 = MonomialIdeal2([(2, 0), (0, 3)])


def brute_colength_power(I, n):
    """Lattice-count oracle: monomials not expressible as a product of n
    generators times anything."""
    U = n * I.x_power
    V = n * I.y_power
    inside = set()
    frontier = {(0, 0)}
    for _ in range(n):
        nxt = set()
        for (u, v) in frontier:
            for a, b in I.gens:
                if u + a <= U and v + b <= V:
                    nxt.add((u + a, v + b))
        frontier = nxt
    for (u, v) in frontier:
        inside.add((u, v))
    count = 0
    for u in range(U + 1):
        for v in range(V + 1):
            member = any(u >= a and v >= b for a, b in inside)
            if not member:
                if u >= U or v >= V:
                    raise AssertionError("oracle box too small")
                count += 1
    return count


def test_minimal_antichain_and_validation():
    I = MonomialIdeal2([(2, 0), (0, 3), (2, 1), (4, 4)])
    assert I.gens == ((0, 3), (2, 0))
    with pytest.raises(NotPrimary):
        MonomialIdeal2([(1, 1), (2, 0)])


def test_frozen_multiplicities():
    assert samuel(M) == 1
    assert samuel(I23) == 6
    assert samuel(product(M, I23)) == 11
    assert mixed(M, I23) == 2
    assert minkowski_check(M, I23)  # 2^2 = 4 <= 1 * 6
    assert staircase_covolume(I23) == Fraction(3)


def test_colength_values():
    assert colength(M) == 1
    assert colength(I23) == 6
    # outside (x^2, x y, y^3): 1, y, y^2, x
    assert colength(MonomialIdeal2([(2, 0), (1, 1), (0, 3)])) == 4


def test_colength_power_matches_brute_force():
    rng = random.Random(311)
    ideals = [M, I23, MonomialIdeal2([(3, 0), (1, 1), (0, 4)])]
    ideals += [random_primary_ideal(rng, max_power=4) for _ in range(5)]
    for I in ideals:
        for n in range(1, 4):
            assert colength_power(I, n) == brute_colength_power(I, n)


def test_hilbert_samuel_fit_equals_staircase():
    rng = random.Random(1900)
    for _ in range(10):
        I = random_primary_ideal(rng, max_power=5)
        assert hilbert_samuel_fit(I, 1, 8) == samuel(I)


def test_mixed_symmetry_and_linearity():
    rng = random.Random(77)
    for _ in range(20):
        I = random_primary_ideal(rng, max_power=5)
        J = random_primary_ideal(rng, max_power=5)
        assert mixed(I, J) == mixed(J, I)
        assert mixed(I, I) == samuel(I)
        assert minkowski_check(I, J)


def test_containment_index():
    assert containment_index(M) == 1
    assert containment_index(I23) == 4  # x^4, x^3 y, ..., y^4 all inside


def test_contains():
    assert I23.contains(2, 5) and I23.contains(0, 3)
    assert not I23.contains(1, 2)
