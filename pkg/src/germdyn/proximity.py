"""Blowup combinatorics: chains of infinitely near points.

A chart records, for each point after the first, which earlier points it is
proximate to.  The proximity matrix P (unit lower triangular with -1 at each
proximity) determines everything: the intersection matrix of the exceptional
components is N = -P^T P, the dual basis comes from exact inversion, and the
generic multiplicities are the first column of P^{-1}.  Skewness values are
negative intersection numbers of the normalized dual divisors.
"""

from __future__ import annotations

import json
from fractions import Fraction


class NotNegativeDefinite(ValueError):
    """The intersection form failed the sign test; the chart is malformed."""


class ProximityChart:
    """r infinitely near points; point i > 1 is proximate to its predecessor
    and to at most one other earlier point.  ``axis`` names the coordinate
    whose zero curve the chain of free points follows."""

    __slots__ = ("r", "proximities", "axis")

    def __init__(self, r: int, proximities, axis: str = "y"):
        if r < 1:
            raise ValueError("need at least one point")
        if axis not in ("x", "y"):
            raise ValueError("axis must be 'x' or 'y'")
        prox = {(int(i), int(j)) for i, j in proximities}
        for i, j in prox:
            if not (1 <= j < i <= r):
                raise ValueError("proximity (%d, %d) out of range" % (i, j))
        for i in range(2, r + 1):
            if (i, i - 1) not in prox:
                raise ValueError("point %d must be proximate to point %d" % (i, i - 1))
            count = sum(1 for a, b in prox if a == i)
            if count > 2:
                raise ValueError("point %d proximate to more than two points" % i)
        self.r = r
        self.proximities = frozenset(prox)
        self.axis = axis

    @classmethod
    def free_chain(cls, r: int, axis: str = "y") -> "ProximityChart":
        return cls(r, [(i, i - 1) for i in range(2, r + 1)], axis)

    def proximity_matrix(self) -> list[list[int]]:
        P = [[0] * self.r for _ in range(self.r)]
        for i in range(self.r):
            P[i][i] = 1
        for i, j in self.proximities:
            P[i - 1][j - 1] = -1
        return P

    def is_free(self, i: int) -> bool:
        """Point i is free when proximate to at most one earlier point."""
        return sum(1 for a, _ in self.proximities if a == i) <= 1

    @classmethod
    def from_json(cls, text: str) -> "ProximityChart":
        data = json.loads(text)
        return cls(data["points"], data["proximate"], data.get("axis", "y"))

    def to_json(self) -> dict:
        return {
            "points": self.r,
            "proximate": sorted([i, j] for i, j in self.proximities),
            "axis": self.axis,
        }

    def __repr__(self):
        return "ProximityChart(r=%d, proximities=%r, axis=%r)" % (
            self.r,
            sorted(self.proximities),
            self.axis,
        )


class ExceptionalLattice:
    """Intersection matrix, exact dual-basis coefficients, and generic
    multiplicities of the exceptional components of a chart."""

    __slots__ = ("N", "dual", "b", "ord_x", "ord_y")

    def __init__(self, N, dual, b, ord_x, ord_y):
        self.N = N
        self.dual = dual  # dual[i][j]: coefficient of E_(i+1) in dual of E_(j+1)
        self.b = b
        self.ord_x = ord_x
        self.ord_y = ord_y

    def dual_pairing(self, i: int, j: int) -> Fraction:
        """Intersection of the i-th and j-th dual divisors (1-based)."""
        # dual_i . dual_j = (N^{-1})_{ij}; dual holds exactly N^{-1}
        return self.dual[i - 1][j - 1]


def intersection_matrix(chart: ProximityChart) -> ExceptionalLattice:
    """Build the lattice: N = -P^T P, dual coefficients N^{-1}, generic
    multiplicities from the first column of P^{-1}, and coordinate orders
    from the chain membership of the followed axis."""
    r = chart.r
    P = chart.proximity_matrix()
    Pt = [[P[j][i] for j in range(r)] for i in range(r)]
    N = [
        [-sum(Pt[i][k] * P[k][j] for k in range(r)) for j in range(r)]
        for i in range(r)
    ]
    _check_negative_definite(N)
    Pinv = _invert_unit_lower(P)
    dual = _invert_exact(N)
    b = [Pinv[i][0] for i in range(r)]
    # the axis curve passes through the first point and every later free
    # point of the chain; the other coordinate is in generic position
    axis_mult = [1] + [1 if chart.is_free(i) else 0 for i in range(2, r + 1)]
    v_axis = [
        sum(Pinv[i][j] * axis_mult[j] for j in range(r)) for i in range(r)
    ]
    v_generic = b
    if chart.axis == "y":
        ord_x, ord_y = v_generic, v_axis
    else:
        ord_x, ord_y = v_axis, v_generic
    if any(m < 1 for m in b):
        raise AssertionError("generic multiplicities must be positive")
    return ExceptionalLattice(N, dual, b, ord_x, ord_y)


def _invert_unit_lower(P):
    """Inverse of a unit lower-triangular integer matrix, exactly."""
    r = len(P)
    inv = [[0] * r for _ in range(r)]
    for j in range(r):
        inv[j][j] = 1
        for i in range(j + 1, r):
            s = -sum(P[i][k] * inv[k][j] for k in range(j, i))
            inv[i][j] = s
    return inv


def _invert_exact(M):
    r = len(M)
    aug = [
        [Fraction(M[i][j]) for j in range(r)]
        + [Fraction(1 if i == j else 0) for j in range(r)]
        for i in range(r)
    ]
    for col in range(r):
        piv = next((k for k in range(col, r) if aug[k][col] != 0), None)
        if piv is None:
            raise NotNegativeDefinite("intersection form is degenerate")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for k in range(r):
            if k != col and aug[k][col] != 0:
                f = aug[k][col]
                aug[k] = [a - f * b for a, b in zip(aug[k], aug[col])]
    return [row[r:] for row in aug]


def _check_negative_definite(N):
    """Exact sign test on leading principal minors: (-1)^k det_k > 0."""
    r = len(N)
    mat = [[Fraction(N[i][j]) for j in range(r)] for i in range(r)]
    det = Fraction(1)
    for k in range(r):
        piv = next((m for m in range(k, r) if mat[m][k] != 0), None)
        if piv is None:
            raise NotNegativeDefinite("singular leading block")
        if piv != k:
            mat[k], mat[piv] = mat[piv], mat[k]
            det = -det
        det *= mat[k][k]
        expected_sign = -1 if (k + 1) % 2 else 1
        if (det > 0) - (det < 0) != expected_sign:
            raise NotNegativeDefinite(
                "leading minor %d has the wrong sign" % (k + 1)
            )
        for m in range(k + 1, r):
            f = mat[m][k] / mat[k][k]
            if f != 0:
                mat[m] = [a - f * b for a, b in zip(mat[m], mat[k])]


def skewness(chart: ProximityChart, i: int, j: int) -> Fraction:
    """Tree height of the meet of the i-th and j-th divisorial valuations:
    -(b_i^{-1} dual_i) . (b_j^{-1} dual_j), a rational >= 1."""
    lat = intersection_matrix(chart)
    return -lat.dual_pairing(i, j) / (lat.b[i - 1] * lat.b[j - 1])


def random_chart(rng, max_points: int = 6) -> ProximityChart:
    """A seeded random well-formed chart: predecessor proximities always,
    plus occasional satellite proximities one step further back."""
    r = rng.randint(1, max_points)
    prox = [(i, i - 1) for i in range(2, r + 1)]
    for i in range(3, r + 1):
        if rng.random() < 0.4:
            prox.append((i, i - 2))
    axis = rng.choice(["x", "y"])
    return ProximityChart(r, prox, axis)
