import random
from fractions import Fraction

import pytest

from germdyn.bipoly import (
    BiPoly,
    BudgetExceeded,
    ZeroPolynomial,
    bipoly_gcd,
    resultant_x,
)
from germdyn.polyparse import parse_poly


def rand_poly(rng, dmax=2):
    terms = {}
    for _ in range(rng.randint(1, 5)):
        terms[(rng.randint(0, dmax), rng.randint(0, dmax))] = rng.randint(-4, 4)
    return BiPoly(terms)


def test_arithmetic_basics():
    x, y = BiPoly.x(), BiPoly.y()
    p = (x + y) * (x - y)
    assert p == x * x - y * y
    assert (x + y) ** 2 == x * x + 2 * x * y + y * y
    assert (p - p).is_zero()
    assert BiPoly.const(Fraction(1, 2)) * 2 == BiPoly.const(1)


def test_queries():
    p = parse_poly("x^2 y + 3 y^4")
    assert p.degree_x() == 2 and p.degree_y() == 4
    assert p.degree() == 4 and p.order() == 3
    assert p.ord_y() == 1
    assert p.term_count() == 2
    assert parse_poly("x^2 + 5").eval_y0_in_x() == [5, 0, 1]


def test_compose():
    p = parse_poly("x^2 - y^4")
    q = p.compose(parse_poly("x^2 - y^4"), parse_poly("y^4"))
    assert q == parse_poly("(x^2 - y^4)^2 - y^16")


def test_compose_budget():
    p = parse_poly("(x + y)^8")
    with pytest.raises(BudgetExceeded):
        p.compose(parse_poly("x + y^2"), parse_poly("y + x^2"), budget=3)


def test_resultant_known_values():
    # Res_x(x^2 - y^3, x) = y^3 up to sign/scale
    r = resultant_x(parse_poly("x^2 - y^3"), parse_poly("x + y^5"))
    # common: substitute x = -y^5 into x^2 - y^3 -> y^10 - y^3
    nz = [k for k, c in enumerate(r) if c != 0]
    assert min(nz) == 3 and max(nz) == 10


def test_resultant_vanishing_iff_common_factor():
    p = parse_poly("(x - y)(x + 2 y)")
    q = parse_poly("(x - y)(x + 3 y^2)")
    assert all(c == 0 for c in resultant_x(p, q))
    q2 = parse_poly("(x - 2 y)(x + 3 y^2)")
    assert any(c != 0 for c in resultant_x(p, q2))


def test_resultant_linear_path_matches_bareiss():
    rng = random.Random(5150)
    for _ in range(60):
        p = rand_poly(rng)
        if p.degree_x() < 1:
            continue
        h = BiPoly({(0, j): rng.randint(-3, 3) for j in range(3)})
        q = BiPoly.x() * rng.choice([1, 2, -1]) + h
        # force the general path by multiplying q with itself (degree 2)
        r_lin = resultant_x(p, q)
        r_gen = resultant_x(p, q * q) if p.degree_x() >= 2 else None
        if r_gen is not None:
            # Res(p, q^2) = Res(p, q)^2 up to a constant scale
            lin_sq_ord = 2 * min(
                (k for k, c in enumerate(r_lin) if c), default=0
            ) if any(r_lin) else None
            gen_ord = min(
                (k for k, c in enumerate(r_gen) if c), default=None
            ) if any(r_gen) else None
            assert lin_sq_ord == gen_ord


def test_resultant_rejects_degenerate():
    with pytest.raises(ZeroPolynomial):
        resultant_x(BiPoly.zero(), BiPoly.x())
    with pytest.raises(ValueError):
        resultant_x(BiPoly.y(), BiPoly.x())


def test_gcd():
    p = parse_poly("(x + y)^2 (x - y^2)")
    q = parse_poly("(x + y) (x - y^2) (x + 1)")
    g = bipoly_gcd(p, q)
    assert g == parse_poly("(x + y)(x - y^2)") or g == -parse_poly(
        "(x + y)(x - y^2)"
    )
    assert bipoly_gcd(parse_poly("x^2"), parse_poly("y^3")).is_constant()


def test_gcd_random_divides():
    rng = random.Random(777)
    for _ in range(40):
        a, b, c = (rand_poly(rng, 1) for _ in range(3))
        if a.is_zero() or b.is_zero() or c.is_zero():
            continue
        g = bipoly_gcd(a * c, b * c)
        assert not g.is_zero()
        # c divides gcd(a*c, b*c): gcd(g, c) is the normalized c itself
        assert bipoly_gcd(g, c) == bipoly_gcd(c, c)
