"""The invariant family of curve germs indexed by binary sequences.

Each sequence s gets a series g_s(y) = sum a_n y^(2+4n) with dyadic
coefficients produced by a convolution recursion driven by the bits of s.
The curve x + g_s(y) = 0 maps onto the curve of the shifted sequence under
(x, y) -> (x^2 - y^4, y^4), and the pairwise contact orders follow the
closed formula (4^(m+1) + 2) / 3 in the first bit disagreement m.  This
module computes the coefficients exactly, re-verifies the defining
identities and the coefficient growth bound, and builds the fast-growth
witness pairs.
"""

from __future__ import annotations

from fractions import Fraction

from .bitseq import BitSeq, NoneBelow, first_difference
from .dyadic import Dyadic
from .series import USeries


class UndeterminedDifference(ValueError):
    """The first bit disagreement was not found below the horizon."""


class InfiniteAbove:
    """Sentinel: the multiplicity exceeds the certified lower bound."""

    __slots__ = ("bound",)

    def __init__(self, bound: int):
        self.bound = bound

    def __eq__(self, other):
        return isinstance(other, InfiniteAbove) and self.bound == other.bound

    def __repr__(self):
        return "InfiniteAbove(%s)" % self.bound


class CoeffTable:
    """Memoized coefficient rows, one per distinct shifted sequence.

    Rows are extended bottom-up (no call recursion), so requesting
    coefficients at index ~10^4 never risks stack depth.  Internally each
    row is kept as the integers A_n = a_n * 4**n (the recursion only ever
    halves even quantities in this scaling, so the A_n stay integral);
    Dyadic views are materialized on demand.
    """

    def __init__(self):
        self._irows: dict[tuple, list[int]] = {}
        self._rows: dict[tuple, list[Dyadic]] = {}
        self._seqs: dict[tuple, BitSeq] = {}

    def coeff(self, s: BitSeq, n: int) -> Dyadic:
        return self.row(s, n + 1)[n]

    def row(self, s: BitSeq, upto: int) -> list[Dyadic]:
        """Coefficients a_0 .. a_(upto-1) for sequence s."""
        # plan the shift chain iteratively: row for s needs the row of the
        # shifted sequence only up to ~upto/4
        chain = []
        seq, need = s, upto
        while need > 0:
            chain.append((seq, need))
            if need <= 1:
                break
            # indices n with 4 | (n-1), n < upto, pull a_((n-1)/4) of the shift
            need = (need - 2) // 4 + 1
            seq = seq.shift()
        for seq, need in reversed(chain):
            self._extend(seq, need)
        key = s.canonical_key()
        irow = self._irows[key]
        drow = self._rows[key]
        while len(drow) < upto:
            n = len(drow)
            drow.append(Dyadic(irow[n], 2 * n))
        return drow[:upto]

    def _extend(self, s: BitSeq, upto: int):
        key = s.canonical_key()
        row = self._irows.get(key)
        if row is None:
            row = [-1 if s.bit(0) else 1]
            self._irows[key] = row
            self._rows[key] = []
            self._seqs[key] = s
        if len(row) >= upto:
            return
        sign = -row[0]  # a_0 = +-1, so -X/(2 a_0) = sign * X / 2
        shift_key = s.shift().canonical_key()
        shift_row = self._irows.get(shift_key, [])
        while len(row) < upto:
            n = len(row) - 1  # defining a_(n+1)
            # convolution over i + j = n + 1 with i, j >= 1, folded by
            # symmetry; in the A_n scaling the 4-powers cancel exactly
            acc = 0
            i, j = 1, n
            while i < j:
                acc += row[i] * row[j]
                i += 1
                j -= 1
            total = acc + acc
            if i == j:
                total += row[i] * row[i]
            if n % 4 == 0:
                k = n // 4
                if k >= len(shift_row):
                    raise AssertionError("shift row too short; planner bug")
                total += shift_row[k] << (2 * (n + 1) - 2 * k)
            if total % 2:
                raise AssertionError("scaled recursion produced an odd value")
            row.append(sign * (total // 2))


_DEFAULT_TABLE = CoeffTable()


def coeff(s: BitSeq, n: int, table: CoeffTable | None = None) -> Dyadic:
    """The exact coefficient a_n for sequence s."""
    return (table or _DEFAULT_TABLE).coeff(s, n)


def curve(s: BitSeq, N: int, table: CoeffTable | None = None) -> USeries:
    """g_s truncated to order N; support is contained in {2, 6, 10, ...}."""
    if N < 2:
        return USeries.zero(max(N, 0))
    nmax = (N - 3) // 4 + 1  # indices n with 2 + 4n < N
    row = (table or _DEFAULT_TABLE).row(s, nmax)
    out = USeries.zero(N)
    for n, a in enumerate(row):
        out.coeffs[2 + 4 * n] = a
    return out


def mult_formula(s: BitSeq, t: BitSeq, horizon: int):
    """Contact order (4^(m+1) + 2) / 3 from the first bit disagreement m,
    or a certified lower bound when no disagreement is found."""
    m = first_difference(s, t, horizon)
    if isinstance(m, NoneBelow):
        return InfiniteAbove((4 ** (horizon + 1) + 2) // 3)
    return (4 ** (m + 1) + 2) // 3


def mult_formula_from_m(m: int) -> int:
    return (4 ** (m + 1) + 2) // 3


def mult_formula_exceeds(m: int, bound: int) -> bool:
    """Exact test (4^(m+1) + 2)/3 > bound without materializing the value.

    Needed when m itself is astronomically large: 4^(m+1)/3 > 2^(2m) holds
    for m >= 1, so a bit-length comparison settles all big cases.
    """
    if bound < 0:
        return True
    if m >= 1 and 2 * m >= bound.bit_length():
        return True
    if m <= 4096:
        return (4 ** (m + 1) + 2) // 3 > bound
    return False


def mult_coeffwise(s: BitSeq, t: BitSeq, N: int, table: CoeffTable | None = None):
    """Contact order 2 + 4n from the first differing coefficient index n < N,
    else InfiniteAbove(2 + 4*N) as a certified lower bound."""
    if N < 1:
        raise ValueError("N must be >= 1")
    tb = table or _DEFAULT_TABLE
    row_s = tb.row(s, N)
    row_t = tb.row(t, N)
    for n in range(N):
        if row_s[n] != row_t[n]:
            return 2 + 4 * n
    return InfiniteAbove(2 + 4 * N)


def verify_functoriality(s: BitSeq, N: int, table: CoeffTable | None = None):
    """Check g_s(y)^2 = y^4 - g_{sigma(s)}(y^4) for all exponents < N.

    Returns (True, None) or (False, (exponent, lhs, rhs)).
    """
    if N < 8:
        raise ValueError("N must be >= 8")
    tb = table or _DEFAULT_TABLE
    g = curve(s, N, tb)
    lhs = g * g
    rhs = USeries.monomial(Dyadic(1), 4, N) - curve(s.shift(), N, tb).compose_monomial(4)
    bound = min(lhs.trunc, rhs.trunc, N)
    for k in range(bound):
        if lhs.coeffs[k] != rhs.coeffs[k]:
            return False, (k, lhs.coeffs[k], rhs.coeffs[k])
    return True, None


_BOUND_C = Fraction(1, 20)
_BOUND_R = 10


def verify_bound(s: BitSeq, N: int, table: CoeffTable | None = None,
                 R: int = _BOUND_R):
    """Exact check |a_n| <= (1/20) R^n / n^2 for 1 <= n < N.

    Returns (True, None) or (False, (n, a_n, bound)).
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    row = (table or _DEFAULT_TABLE).row(s, N)
    for n in range(1, N):
        q = _BOUND_C * Fraction(R**n, n * n)
        if not row[n].abs_leq(q):
            return False, (n, row[n], q)
    return True, None


def lemma_sum_check(n: int) -> bool:
    """Exact rational test sum 1/(k^2 (n-k+1)^2) <= 20/(n+1)^2.

    Uses the partial-fraction identity
    sum = (2*H2(n) + 4*H1(n)/(n+1)) / (n+1)^2 with harmonic sums H1, H2;
    the direct term-by-term sum is kept in the tests as an oracle.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    h1 = sum(Fraction(1, k) for k in range(1, n + 1))
    h2 = sum(Fraction(1, k * k) for k in range(1, n + 1))
    return 2 * h2 + 4 * h1 / (n + 1) <= 20


def lemma_sum_check_range(n_max: int):
    """lemma_sum_check for every 1 <= n <= n_max with incremental harmonic
    sums; returns (True, None) or (False, first failing n)."""
    h1 = Fraction(0)
    h2 = Fraction(0)
    for n in range(1, n_max + 1):
        h1 += Fraction(1, n)
        h2 += Fraction(1, n * n)
        if not (2 * h2 + 4 * h1 / (n + 1) <= 20):
            return False, n
    return True, None


def lemma_sum_direct(n: int) -> Fraction:
    """Brute-force left-hand side; test oracle for lemma_sum_check."""
    return sum(Fraction(1, k * k * (n - k + 1) ** 2) for k in range(1, n + 1))


def section3_recursion_check(s: BitSeq, t: BitSeq, horizon: int) -> bool:
    """Check the contact orders satisfy: value 2 when the first bits differ,
    else 4 * (value of the shifted pair) - 2."""
    m = first_difference(s, t, horizon)
    if isinstance(m, NoneBelow):
        raise UndeterminedDifference(
            "no bit disagreement below horizon %d" % horizon
        )
    value = mult_formula_from_m(m)
    if s.bit(0) != t.bit(0):
        return value == 2
    shifted = mult_formula(s.shift(), t.shift(), horizon)
    if isinstance(shifted, InfiniteAbove):
        raise UndeterminedDifference("shifted pair undetermined")
    return value == 4 * shifted - 2


# ---------------------------------------------------------------------------
# growth specifications and the fast-growth witness construction
# ---------------------------------------------------------------------------

class GrowthSpec:
    """A named integer growth function n -> nu(n), exactly evaluable."""

    def __init__(self, kind: str, arg=None):
        self.kind = kind
        self.arg = arg
        if kind == "pow":
            if arg is None or int(arg) < 1:
                raise ValueError("pow base must be >= 1")
            self.arg = int(arg)
        elif kind == "factorial":
            pass
        elif kind == "tower":
            if arg is None or int(arg) < 2:
                raise ValueError("tower base must be >= 2")
            self.arg = int(arg)
        elif kind == "table":
            self.arg = [int(v) for v in arg]
            if not self.arg:
                raise ValueError("empty growth table")
        else:
            raise ValueError("unknown growth kind %r" % kind)

    def __call__(self, n: int) -> int:
        if n < 0:
            raise ValueError("negative argument")
        if self.kind == "pow":
            return self.arg**n
        if self.kind == "factorial":
            import math

            return math.factorial(n)
        if self.kind == "tower":
            v = 1
            for _ in range(n):
                v = self.arg**v
            return v
        if n >= len(self.arg):
            raise IndexError("growth table has no entry for n = %d" % n)
        return self.arg[n]

    @classmethod
    def parse(cls, text: str) -> "GrowthSpec":
        text = text.strip()
        if text == "factorial":
            return cls("factorial")
        if text.startswith("pow:"):
            return cls("pow", int(text[4:]))
        if text.startswith("tower:"):
            return cls("tower", int(text[6:]))
        if text.startswith("table:"):
            path = text[6:]
            with open(path) as fh:
                vals = [int(line) for line in fh if line.strip()]
            return cls("table", vals)
        raise ValueError("unrecognized growth spec %r" % text)

    def __str__(self):
        if self.kind in ("pow", "tower"):
            return "%s:%d" % (self.kind, self.arg)
        if self.kind == "table":
            return "table[%d entries]" % len(self.arg)
        return self.kind


def build_theoremA_pair(nu: GrowthSpec, K: int):
    """Construct (s, t, witnesses): s all zeros, t runs of zeros separated by
    single ones, run lengths chosen minimally so each witness shift beats nu.

    Witness k is (n_k, M_k, nu(n_k)) with M_k = nu(n_k) + 1 > nu(n_k), where
    n_k is the start of the k-th run and M_k the first-one position of the
    shifted t.  Every window of t up to the last witness contains a one, so
    all contact orders below that horizon are finite.
    """
    if K < 1:
        raise ValueError("need at least one witness")
    s = BitSeq.zeros()
    lengths = []
    starts = []
    pos = 0
    for _ in range(K):
        starts.append(pos)
        L = nu(pos) + 1
        lengths.append(L)
        pos += L + 1
    t = BitSeq.blocks(lengths)
    witnesses = []
    for k in range(K):
        shifted = t.shift_by(starts[k])
        M = shifted.first_one(lengths[k] + 2)
        if isinstance(M, NoneBelow) or M != lengths[k]:
            raise AssertionError("witness construction out of sync")
        witnesses.append((starts[k], M, nu(starts[k])))
    return s, t, witnesses


def certify_finite_contacts(s: BitSeq, t: BitSeq, horizon: int) -> bool:
    """True iff every shift sigma^n(t), n <= horizon, differs from s at some
    finite index (each window of t contains a one when s is all zeros).

    The difference index may be astronomically large, so the query runs with
    an unbounded structural horizon rather than a bit scan."""
    import math

    for n in range(horizon + 1):
        shifted = t.shift_by(n)
        m = first_difference(s, shifted, math.inf)
        if isinstance(m, NoneBelow):
            return False
    return True


def mu_theoremA(s: BitSeq, t: BitSeq, n: int, horizon: int = 10**6,
                materialize_limit: int = 2 * 10**6):
    """Contact order of the curve of s with the curve of sigma^n(t).

    Exact integer when the disagreement index is modest; raises when the
    result would have more than ~materialize_limit digits (use
    mult_formula_exceeds for inequality certificates in that regime).
    """
    shifted = t.shift_by(n)
    m = first_difference(s, shifted, horizon)
    if isinstance(m, NoneBelow):
        return InfiniteAbove((4 ** (horizon + 1) + 2) // 3)
    if m > materialize_limit:
        raise OverflowError(
            "contact order has ~%s digits; compare symbolically instead" % m
        )
    return mult_formula_from_m(m)


def decimal_digits(n: int) -> int:
    """Exact decimal digit count of a positive integer, without string
    conversion (which interpreters may cap for big values)."""
    if n <= 0:
        raise ValueError("need a positive integer")
    # bit_length * log10(2) estimate, then exact adjustment by comparison
    d = max(1, (n.bit_length() * 30103) // 100000)
    while 10**d <= n:
        d += 1
    while d > 1 and 10 ** (d - 1) > n:
        d -= 1
    return d


def mu_digit_count(m) -> int:
    """Decimal digit count of (4^(m+1) + 2)/3, exact for modest m and by
    high-precision logarithm for astronomically large m."""
    if m <= 10**5:
        return decimal_digits(mult_formula_from_m(m))
    import mpmath

    with mpmath.workdps(decimal_digits(m) + 30):
        val = (mpmath.mpf(m) + 1) * mpmath.log10(4) - mpmath.log10(3)
        return int(mpmath.floor(val)) + 1
