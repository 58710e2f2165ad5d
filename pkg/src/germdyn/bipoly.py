"""Exact sparse bivariate polynomials over the rationals.

Monomials x**i * y**j are stored as a dict (i, j) -> Fraction with no zero
entries.  This is the workhorse behind curve defining equations, map germs
and their iterates, resultants, and gcds.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _igcd


class ZeroPolynomial(ValueError):
    """Raised when an operation requires a nonzero polynomial."""


class BudgetExceeded(RuntimeError):
    """Raised when a sparse term-count budget is exceeded."""


class BiPoly:
    """A polynomial in x and y with exact Fraction coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for (i, j), c in terms.items():
                c = Fraction(c)
                if c != 0:
                    clean[(i, j)] = c
        self.terms = clean

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def const(cls, c):
        return cls({(0, 0): Fraction(c)})

    @classmethod
    def monomial(cls, c, i: int, j: int):
        return cls({(i, j): Fraction(c)})

    @classmethod
    def x(cls):
        return cls({(1, 0): Fraction(1)})

    @classmethod
    def y(cls):
        return cls({(0, 1): Fraction(1)})

    # -- basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(ij == (0, 0) for ij in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((0, 0), Fraction(0))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(i + j for i, j in self.terms)

    def order(self):
        """Lowest total degree of a term; None for the zero polynomial."""
        if not self.terms:
            return None
        return min(i + j for i, j in self.terms)

    def degree_x(self) -> int:
        if not self.terms:
            return -1
        return max(i for i, _ in self.terms)

    def degree_y(self) -> int:
        if not self.terms:
            return -1
        return max(j for _, j in self.terms)

    def term_count(self) -> int:
        return len(self.terms)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        other = _as_bipoly(other)
        out = dict(self.terms)
        for ij, c in other.terms.items():
            s = out.get(ij, Fraction(0)) + c
            if s:
                out[ij] = s
            else:
                out.pop(ij, None)
        p = BiPoly.__new__(BiPoly)
        p.terms = out
        return p

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_bipoly(other))

    def __rsub__(self, other):
        return _as_bipoly(other) + (-self)

    def __neg__(self):
        p = BiPoly.__new__(BiPoly)
        p.terms = {ij: -c for ij, c in self.terms.items()}
        return p

    def __mul__(self, other):
        other = _as_bipoly(other)
        out = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                ij = (i1 + i2, j1 + j2)
                s = out.get(ij, Fraction(0)) + c1 * c2
                if s:
                    out[ij] = s
                else:
                    out.pop(ij, None)
        p = BiPoly.__new__(BiPoly)
        p.terms = out
        return p

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = BiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- composition --------------------------------------------------------

    def compose(self, fx: "BiPoly", fy: "BiPoly", budget: int | None = None) -> "BiPoly":
        """Substitute x -> fx, y -> fy.  Exact; optional term budget."""
        # Horner in x over coefficient polys in y keeps the power table small
        by_i: dict[int, dict[int, Fraction]] = {}
        for (i, j), c in self.terms.items():
            by_i.setdefault(i, {})[j] = c
        result = BiPoly.zero()
        ypows: dict[int, BiPoly] = {0: BiPoly.const(1)}

        def ypow(j):
            if j not in ypows:
                ypows[j] = ypow(j - 1) * fy
                _check_budget(ypows[j], budget)
            return ypows[j]

        xpow = BiPoly.const(1)
        for i in range(0, (max(by_i) if by_i else 0) + 1):
            if i > 0:
                xpow = xpow * fx
                _check_budget(xpow, budget)
            if i in by_i:
                row = BiPoly.zero()
                for j, c in by_i[i].items():
                    row = row + BiPoly.const(c) * ypow(j)
                result = result + row * xpow
                _check_budget(result, budget)
        return result

    def eval_y0_in_x(self) -> list[Fraction]:
        """Coefficient list of self(x, 0) as a univariate poly in x."""
        d = self.degree_x()
        out = [Fraction(0)] * (d + 1 if d >= 0 else 0)
        for (i, j), c in self.terms.items():
            if j == 0:
                out[i] = c
        return _trim_q(out)

    def x_coefficients(self) -> list["BiPoly"]:
        """Coefficients of x**0 .. x**deg_x as polynomials in y."""
        d = self.degree_x()
        if d < 0:
            return []
        out = [BiPoly.zero() for _ in range(d + 1)]
        for (i, j), c in self.terms.items():
            out[i] = out[i] + BiPoly.monomial(c, 0, j)
        return out

    def ord_y(self):
        """Order of vanishing in y of self viewed along x = anything: the
        minimal j over the support.  None if zero."""
        if not self.terms:
            return None
        return min(j for _, j in self.terms)

    # -- rendering ----------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j) in sorted(self.terms, key=lambda ij: (ij[0] + ij[1], ij[0])):
            c = self.terms[(i, j)]
            mono = []
            if i:
                mono.append("x" if i == 1 else "x^%d" % i)
            if j:
                mono.append("y" if j == 1 else "y^%d" % j)
            body = "*".join(mono)
            if body:
                if c == 1:
                    parts.append(body)
                elif c == -1:
                    parts.append("-" + body)
                else:
                    parts.append("%s*%s" % (c, body))
            else:
                parts.append(str(c))
        s = " + ".join(parts)
        return s.replace("+ -", "- ")

    def __repr__(self):
        return "BiPoly(%s)" % str(self)

    def to_json(self) -> list:
        return [
            {"i": i, "j": j, "coefficient": str(c)}
            for (i, j), c in sorted(self.terms.items())
        ]


def _as_bipoly(x):
    if isinstance(x, BiPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return BiPoly.const(x)
    raise TypeError("cannot coerce %r to BiPoly" % (x,))


def _check_budget(p: BiPoly, budget):
    if budget is not None and p.term_count() > budget:
        raise BudgetExceeded(
            "term count %d exceeds budget %d" % (p.term_count(), budget)
        )


# ---------------------------------------------------------------------------
# univariate helpers: dense lists, low degree first
# ---------------------------------------------------------------------------

def _trim_q(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _trim_z(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _uadd(a, b):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _trim_z(out)


def _usub(a, b):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _trim_z(out)


def _umul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
    return _trim_z(out)


def _uexact_div(a, b):
    """Exact division in Z[y]; the quotient must exist (Bareiss guarantee)."""
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    a = list(a)
    q = [0] * (len(a) - len(b) + 1) if len(a) >= len(b) else []
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        lead, div = a[-1], b[-1]
        if lead % div != 0:
            raise ArithmeticError("inexact division in Bareiss step")
        coef = lead // div
        q[shift] = coef
        for i, cb in enumerate(b):
            a[shift + i] -= coef * cb
        a = _trim_z(a)
    if a:
        raise ArithmeticError("nonzero remainder in exact division")
    return q


def _uord(a) -> int:
    for i, c in enumerate(a):
        if c:
            return i
    raise ZeroPolynomial("zero polynomial has no finite order")


# gcd in Q[t] (monic-normalized), dense Fraction lists


def _qgcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _trim_q(list(a)), _trim_q(list(b))
    while b:
        a, b = b, _qmod(a, b)
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def _qmod(a, b):
    a = list(a)
    while len(a) >= len(b) and a:
        coef = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, cb in enumerate(b):
            a[shift + i] -= coef * cb
        a = _trim_q(a)
    return a


# ---------------------------------------------------------------------------
# resultant
# ---------------------------------------------------------------------------

def resultant_x(P: BiPoly, Q: BiPoly) -> list[Fraction]:
    """Sylvester resultant of P and Q eliminating x, as a dense poly in y.

    Computed fraction-free (Bareiss) over integer-cleared coefficients;
    a linear-in-x input takes a direct evaluation shortcut.  The result is
    exact up to the rational factor introduced by denominator clearing,
    which is harmless for order-of-vanishing and zero-testing uses.
    """
    if P.is_zero() or Q.is_zero():
        raise ZeroPolynomial("resultant of a zero polynomial")
    dP, dQ = P.degree_x(), Q.degree_x()
    if dP < 1 or dQ < 1:
        raise ValueError("both inputs must have positive degree in x")
    if dQ == 1 or dP == 1:
        if dQ != 1:
            P, Q = Q, P
            dP, dQ = dQ, dP
        return _resultant_linear(P, Q)
    prows = _int_coeff_rows(P)
    qrows = _int_coeff_rows(Q)
    n = dP + dQ
    mat = []
    for k in range(dQ):
        row = [[] for _ in range(n)]
        for i, c in enumerate(prows):
            row[k + i] = c
        mat.append(row)
    for k in range(dP):
        row = [[] for _ in range(n)]
        for i, c in enumerate(qrows):
            row[k + i] = c
        mat.append(row)
    det = _bareiss_poly_det(mat)
    return [Fraction(c) for c in det]


def _resultant_linear(P: BiPoly, Q: BiPoly) -> list[Fraction]:
    """Res_x(P, q1*x + q0) = sum_i p_i * (-q0)**i * q1**(dP - i), up to sign."""
    dP = P.degree_x()
    qc = Q.x_coefficients()
    q0 = qc[0] if len(qc) > 0 else BiPoly.zero()
    q1 = qc[1]
    pc = P.x_coefficients()
    acc = BiPoly.zero()
    neg_q0_pow = BiPoly.const(1)
    q1_pows = [BiPoly.const(1)]
    for _ in range(dP):
        q1_pows.append(q1_pows[-1] * q1)
    for i in range(dP + 1):
        ci = pc[i] if i < len(pc) else BiPoly.zero()
        if not ci.is_zero():
            acc = acc + ci * neg_q0_pow * q1_pows[dP - i]
        if i < dP:
            neg_q0_pow = neg_q0_pow * (-q0)
    out = [Fraction(0)] * (acc.degree_y() + 1 if not acc.is_zero() else 0)
    for (i, j), c in acc.terms.items():
        if i != 0:
            raise AssertionError("x left over after elimination")
        out[j] += c
    return _trim_q(out)


def _int_coeff_rows(P: BiPoly) -> list[list[int]]:
    """x-coefficients of P as integer-cleared dense polys in y, leading first."""
    denom = 1
    for c in P.terms.values():
        denom = denom * c.denominator // _igcd(denom, c.denominator)
    d = P.degree_x()
    rows = [[0] * (P.degree_y() + 1) for _ in range(d + 1)]
    for (i, j), c in P.terms.items():
        rows[i][j] = int(c * denom)
    rows = [_trim_z(r) for r in rows]
    return list(reversed(rows))  # leading coefficient first, Sylvester layout


def _bareiss_poly_det(mat) -> list[int]:
    """Fraction-free determinant of a matrix with entries in Z[y]."""
    n = len(mat)
    sign = 1
    prev = [1]
    for k in range(n - 1):
        if not mat[k][k]:
            pivot_row = None
            for r in range(k + 1, n):
                if mat[r][k]:
                    pivot_row = r
                    break
            if pivot_row is None:
                return []
            mat[k], mat[pivot_row] = mat[pivot_row], mat[k]
            sign = -sign
        pkk = mat[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = _usub(_umul(pkk, mat[i][j]), _umul(mat[i][k], mat[k][j]))
                mat[i][j] = _uexact_div(num, prev) if num else []
            mat[i][k] = []
        prev = pkk
    det = mat[n - 1][n - 1]
    if sign < 0:
        det = [-c for c in det]
    return det


# ---------------------------------------------------------------------------
# gcd
# ---------------------------------------------------------------------------

def bipoly_gcd(P: BiPoly, Q: BiPoly) -> BiPoly:
    """A gcd over Q[x, y], primitive with positive leading coefficient."""
    if P.is_zero():
        return _normalize_gcd(Q)
    if Q.is_zero():
        return _normalize_gcd(P)
    g = _gcd_rec(P, Q)
    return _normalize_gcd(g)


def _gcd_rec(P: BiPoly, Q: BiPoly) -> BiPoly:
    dP, dQ = P.degree_x(), Q.degree_x()
    if dP == 0 and dQ == 0:
        # both univariate in y
        g = _qgcd(_y_coeffs(P), _y_coeffs(Q))
        return _from_y_coeffs(g)
    if dP == 0 or dQ == 0:
        if dP == 0:
            P, Q = Q, P
        # gcd(P, c(y)) = gcd(content_x(P), c(y))
        g = _qgcd(_y_coeffs(_content_x(P)), _y_coeffs(Q))
        return _from_y_coeffs(g)
    if dP < dQ:
        P, Q = Q, P
    cP, pP = _content_x(P), None
    cQ, pQ = _content_x(Q), None
    pP = _divide_content(P, cP)
    pQ = _divide_content(Q, cQ)
    cont = _from_y_coeffs(_qgcd(_y_coeffs(cP), _y_coeffs(cQ)))
    # primitive Euclid via pseudo-remainders
    A, B = pP, pQ
    while not B.is_zero() and B.degree_x() > 0:
        R = _pseudo_rem(A, B)
        A, B = B, _divide_content(R, _content_x(R)) if not R.is_zero() else BiPoly.zero()
    if B.is_zero():
        g = A
    else:
        # B is a nonzero poly in y only; primitive parts share no y-content
        g = BiPoly.const(1)
    return cont * g


def _pseudo_rem(A: BiPoly, B: BiPoly) -> BiPoly:
    dA, dB = A.degree_x(), B.degree_x()
    lb = B.x_coefficients()[dB]
    R = A
    while not R.is_zero() and R.degree_x() >= dB:
        dR = R.degree_x()
        lr = R.x_coefficients()[dR]
        R = R * lb - B * lr * BiPoly.monomial(1, dR - dB, 0)
    return R


def _content_x(P: BiPoly) -> BiPoly:
    g: list[Fraction] = []
    for c in P.x_coefficients():
        if not c.is_zero():
            g = _qgcd(g, _y_coeffs(c))
    return _from_y_coeffs(g)


def _divide_content(P: BiPoly, cont: BiPoly) -> BiPoly:
    if cont.is_constant():
        c = cont.constant_term()
        if c == 1:
            return P
        return P * BiPoly.const(Fraction(1) / c)
    cy = _y_coeffs(cont)
    out = BiPoly.zero()
    for i, coeff in enumerate(P.x_coefficients()):
        if coeff.is_zero():
            continue
        q = _qexact_div(_y_coeffs(coeff), cy)
        out = out + _from_y_coeffs(q) * BiPoly.monomial(1, i, 0)
    return out


def _qexact_div(a, b):
    a = list(a)
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    while a:
        if len(a) < len(b):
            raise ArithmeticError("inexact content division")
        coef = a[-1] / b[-1]
        shift = len(a) - len(b)
        q[shift] = coef
        for i, cb in enumerate(b):
            a[shift + i] -= coef * cb
        a = _trim_q(a)
    return q


def _y_coeffs(P: BiPoly) -> list[Fraction]:
    if P.degree_x() > 0:
        raise ValueError("not a polynomial in y only")
    out = [Fraction(0)] * (P.degree_y() + 1 if not P.is_zero() else 0)
    for (_, j), c in P.terms.items():
        out[j] = c
    return _trim_q(out)


def _from_y_coeffs(coeffs) -> BiPoly:
    return BiPoly({(0, j): c for j, c in enumerate(coeffs) if c})


def _normalize_gcd(g: BiPoly) -> BiPoly:
    """Clear denominators, divide by integer content, fix the sign."""
    if g.is_zero():
        return g
    denom = 1
    for c in g.terms.values():
        denom = denom * c.denominator // _igcd(denom, c.denominator)
    nums = {ij: int(c * denom) for ij, c in g.terms.items()}
    content = 0
    for v in nums.values():
        content = _igcd(content, abs(v))
    lead_key = max(nums, key=lambda ij: (ij[0], ij[1]))
    sign = 1 if nums[lead_key] > 0 else -1
    return BiPoly({ij: Fraction(sign * v, content) for ij, v in nums.items()})
