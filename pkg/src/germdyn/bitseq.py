"""Infinite binary sequences with effective tails.

A sequence is a finite prefix plus a tail rule: all zeros, all ones, a
repeating cycle, or runs of zeros separated by single ones (given by a list
of run lengths whose last entry repeats forever).  All four forms are closed
under the left shift, and every bit is computable, so shifts and
first-difference queries are total operations.
"""

from __future__ import annotations

ZEROS = "zeros"
ONES = "ones"
PERIODIC = "periodic"
BLOCKS = "blocks"

_SCAN_CAP = 10**6


class NoneBelow:
    """Sentinel: no difference (or no one-bit) below ``horizon``."""

    __slots__ = ("horizon",)

    def __init__(self, horizon: int):
        self.horizon = horizon

    def __eq__(self, other):
        return isinstance(other, NoneBelow) and self.horizon == other.horizon

    def __repr__(self):
        return "NoneBelow(%d)" % self.horizon


class BitSeq:
    __slots__ = ("prefix", "tail", "param")

    def __init__(self, prefix, tail: str, param=None):
        prefix = tuple(int(b) for b in prefix)
        if any(b not in (0, 1) for b in prefix):
            raise ValueError("bits must be 0 or 1")
        if tail == PERIODIC:
            param = tuple(int(b) for b in param)
            if not param:
                raise ValueError("empty cycle")
        elif tail == BLOCKS:
            param = tuple(int(x) for x in param)
            if not param or any(x < 0 for x in param):
                raise ValueError("block lengths must be nonnegative and nonempty")
        elif tail in (ZEROS, ONES):
            param = None
        else:
            raise ValueError("unknown tail kind %r" % tail)
        self.prefix = prefix
        self.tail = tail
        self.param = param

    # -- constructors -------------------------------------------------------

    @classmethod
    def zeros(cls, prefix=()):
        return cls(prefix, ZEROS)

    @classmethod
    def ones(cls, prefix=()):
        return cls(prefix, ONES)

    @classmethod
    def periodic(cls, prefix, cycle):
        return cls(prefix, PERIODIC, cycle)

    @classmethod
    def blocks(cls, lengths, prefix=()):
        return cls(prefix, BLOCKS, lengths)

    # -- bit access ---------------------------------------------------------

    def bit(self, n: int) -> int:
        if n < 0:
            raise IndexError("negative index")
        if n < len(self.prefix):
            return self.prefix[n]
        k = n - len(self.prefix)
        if self.tail == ZEROS:
            return 0
        if self.tail == ONES:
            return 1
        if self.tail == PERIODIC:
            return self.param[k % len(self.param)]
        return self._blocks_bit(k)

    def _blocks_bit(self, k: int) -> int:
        lengths = self.param
        for i, L in enumerate(lengths):
            if k < L:
                return 0
            if k == L:
                return 1
            k -= L + 1
            if i == len(lengths) - 1:
                # last length repeats forever
                k %= L + 1
                return 1 if k == L else 0
        raise AssertionError("unreachable")

    # -- shift --------------------------------------------------------------

    def shift(self) -> "BitSeq":
        if self.prefix:
            return BitSeq(self.prefix[1:], self.tail, self.param)
        if self.tail == ZEROS or self.tail == ONES:
            return self
        if self.tail == PERIODIC:
            c = self.param
            return BitSeq((), PERIODIC, c[1:] + c[:1])
        lengths = list(self.param)
        if lengths[0] > 0:
            if len(lengths) == 1:
                # keep the repeating run length intact
                return BitSeq((), BLOCKS, [lengths[0] - 1, lengths[0]])
            lengths[0] -= 1
            return BitSeq((), BLOCKS, lengths)
        # current bit is the separating 1
        if len(lengths) == 1:
            return BitSeq((), BLOCKS, lengths)
        return BitSeq((), BLOCKS, lengths[1:])

    def shift_by(self, n: int) -> "BitSeq":
        """sigma**n, with jumps over long zero runs instead of n single steps."""
        if n < 0:
            raise ValueError("negative shift")
        s = self
        if n and s.prefix:
            drop = min(n, len(s.prefix))
            s = BitSeq(s.prefix[drop:], s.tail, s.param)
            n -= drop
        if n == 0:
            return s
        if s.tail in (ZEROS, ONES):
            return s
        if s.tail == PERIODIC:
            c = s.param
            r = n % len(c)
            return BitSeq((), PERIODIC, c[r:] + c[:r])
        lengths = list(s.param)
        while n > 0:
            L = lengths[0]
            if len(lengths) == 1:
                # periodic regime of period L + 1
                r = n % (L + 1)
                if r == 0:
                    return BitSeq((), BLOCKS, [L])
                if r <= L:
                    return BitSeq((), BLOCKS, [L - r, L])
            if n <= L:
                lengths[0] = L - n
                return BitSeq((), BLOCKS, lengths)
            n -= L + 1
            lengths = lengths[1:] if len(lengths) > 1 else lengths
        return BitSeq((), BLOCKS, lengths)

    # -- structure queries --------------------------------------------------

    def first_one(self, horizon):
        """Index of the first 1 bit below ``horizon`` (may be a huge int)."""
        for i, b in enumerate(self.prefix):
            if i >= horizon:
                return NoneBelow(horizon)
            if b:
                return i
        base = len(self.prefix)
        if base >= horizon:
            return NoneBelow(horizon)
        if self.tail == ZEROS:
            return NoneBelow(horizon)
        if self.tail == ONES:
            return base
        if self.tail == PERIODIC:
            for i, b in enumerate(self.param):
                if b and base + i < horizon:
                    return base + i
            return NoneBelow(horizon)
        pos = base + self.param[0]
        return pos if pos < horizon else NoneBelow(horizon)

    def canonical_key(self):
        """Hashable form identifying the sequence; shifts of periodic
        sequences collapse onto finitely many keys."""
        prefix = list(self.prefix)
        tail, param = self.tail, self.param
        if tail == PERIODIC:
            param = _primitive_cycle(param)
            if all(b == 0 for b in param):
                tail, param = ZEROS, None
            elif all(b == 1 for b in param):
                tail, param = ONES, None
        while prefix:
            b = prefix[-1]
            if tail == ZEROS and b == 0:
                prefix.pop()
            elif tail == ONES and b == 1:
                prefix.pop()
            elif tail == PERIODIC and b == param[-1]:
                prefix.pop()
                param = param[-1:] + param[:-1]
            else:
                break
        return (tuple(prefix), tail, param)

    def same_sequence(self, other: "BitSeq") -> bool:
        return self.canonical_key() == other.canonical_key()

    def __repr__(self):
        return "BitSeq(%r, %s, %r)" % (list(self.prefix), self.tail, self.param)

    def __str__(self):
        p = "".join(str(b) for b in self.prefix)
        if self.tail == ZEROS:
            return p + ":0..." if p else "0..."
        if self.tail == ONES:
            return p + ":1..." if p else "1..."
        if self.tail == PERIODIC:
            return "%s:(%s)" % (p, "".join(str(b) for b in self.param))
        return "%s:blocks%r" % (p, list(self.param))


def _primitive_cycle(c):
    n = len(c)
    for d in range(1, n + 1):
        if n % d == 0 and c == c[:d] * (n // d):
            return c[:d]
    return c


def first_difference(s: BitSeq, t: BitSeq, horizon):
    """Least index m < horizon with s_m != t_m, else NoneBelow(horizon)."""
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    if s.same_sequence(t):
        return NoneBelow(horizon)
    # an all-zeros side reduces to a structural first-one query, which
    # handles astronomically long zero runs
    if s.canonical_key() == ((), ZEROS, None):
        return t.first_one(horizon)
    if t.canonical_key() == ((), ZEROS, None):
        return s.first_one(horizon)
    cap = min(horizon, _SCAN_CAP)
    for m in range(cap):
        if s.bit(m) != t.bit(m):
            return m
    if horizon > _SCAN_CAP:
        raise OverflowError(
            "bitwise scan capped at %d; no difference found" % _SCAN_CAP
        )
    return NoneBelow(horizon)


def parse_bitseq(text: str) -> BitSeq:
    """Parse sequence literals: "0110", "0110:(10)", "01:0...", "01:1..."."""
    text = text.strip().replace("…", "...")
    if ":" not in text:
        prefix, tail = text, "0..."
    else:
        prefix, tail = text.split(":", 1)
    if any(ch not in "01" for ch in prefix):
        raise ValueError("bad prefix %r: bits must be 0/1" % prefix)
    bits = [int(ch) for ch in prefix]
    tail = tail.strip()
    if tail == "0...":
        return BitSeq.zeros(bits)
    if tail == "1...":
        return BitSeq.ones(bits)
    if tail.startswith("(") and tail.endswith(")"):
        cycle = tail[1:-1]
        if not cycle or any(ch not in "01" for ch in cycle):
            raise ValueError("bad cycle %r" % cycle)
        return BitSeq.periodic(bits, [int(ch) for ch in cycle])
    raise ValueError("unrecognized tail %r" % tail)
