"""Detection of eventual integral linear recursions in integer sequences.

A model of order k asserts u(n+k) = c1*u(n+k-1) + ... + ck*u(n) with integer
coefficients from some onset index onward.  Detection solves a small exact
linear system on trailing terms and then verifies the relation across the
whole tail, including a mandatory holdout block.
"""

from __future__ import annotations

from fractions import Fraction


class NoRecurrenceFound(RuntimeError):
    pass


class RecurrenceModel:
    """Order, integer coefficients (c1..ck), and onset index."""

    __slots__ = ("order", "coeffs", "onset")

    def __init__(self, order: int, coeffs: list[int], onset: int):
        self.order = order
        self.coeffs = list(coeffs)
        self.onset = onset

    def predicts(self, seq, n: int) -> bool:
        """Does the relation hold at position n (predicting seq[n + order])?"""
        k = self.order
        return seq[n + k] == sum(
            self.coeffs[i] * seq[n + k - 1 - i] for i in range(k)
        )

    def char_poly(self) -> list[int]:
        """Monic characteristic polynomial, highest degree first."""
        return [1] + [-c for c in self.coeffs]

    def extend(self, seq, extra: int) -> list:
        out = list(seq)
        k = self.order
        for _ in range(extra):
            out.append(sum(self.coeffs[i] * out[-1 - i] for i in range(k)))
        return out

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "coeffs": [str(c) for c in self.coeffs],
            "onset": self.onset,
            "char_poly": [str(c) for c in self.char_poly()],
        }

    def __repr__(self):
        return "RecurrenceModel(order=%d, coeffs=%r, onset=%d)" % (
            self.order,
            self.coeffs,
            self.onset,
        )


def _solve_exact(rows: list[list[Fraction]], rhs: list[Fraction]):
    """Gaussian elimination over the rationals; None when singular."""
    k = len(rhs)
    aug = [list(rows[i]) + [rhs[i]] for i in range(k)]
    for col in range(k):
        piv = None
        for r in range(col, k):
            if aug[r][col] != 0:
                piv = r
                break
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(k):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [aug[i][k] for i in range(k)]


def detect_recursion(seq: list[int], max_order: int, holdout: int) -> RecurrenceModel:
    """Minimal-order integral recursion validated on the final holdout terms.

    Orders are tried in increasing order; for each, the coefficients come
    from an exact solve on the last equations before the holdout block, the
    onset is the least index after which the relation is exact, and the
    model must reproduce every holdout term.
    """
    seq = list(seq)
    if len(seq) < 2 * max_order + holdout:
        raise ValueError("sequence too short for requested order and holdout")
    if all(v == 0 for v in seq):
        return RecurrenceModel(1, [0], 0)
    fit_end = len(seq) - holdout  # equations use indices < fit_end
    for k in range(1, max_order + 1):
        model = _fit_order(seq, k, fit_end)
        if model is None:
            continue
        # validate on everything from the onset, holdout included
        ok = all(
            model.predicts(seq, n) for n in range(model.onset, len(seq) - k)
        )
        if ok and model.onset + k <= fit_end:
            return model
    raise NoRecurrenceFound(
        "no integral recursion of order <= %d fits" % max_order
    )


def _fit_order(seq, k, fit_end):
    # slide the k-equation window backwards until the system is solvable
    top = fit_end - k  # last usable equation index n satisfies n + k < fit_end
    for start in range(top - k, -1, -1):
        rows = []
        rhs = []
        for n in range(start, start + k):
            rows.append([Fraction(seq[n + k - 1 - i]) for i in range(k)])
            rhs.append(Fraction(seq[n + k]))
        sol = _solve_exact(rows, rhs)
        if sol is None:
            continue
        if any(c.denominator != 1 for c in sol):
            return None
        coeffs = [int(c) for c in sol]
        model = RecurrenceModel(k, coeffs, 0)
        onset = _minimal_onset(model, seq)
        if onset is None:
            return None
        model.onset = onset
        return model
    return None


def _minimal_onset(model, seq):
    k = model.order
    last_bad = -1
    for n in range(len(seq) - k):
        if not model.predicts(seq, n):
            last_bad = n
    onset = last_bad + 1
    if onset + k >= len(seq):
        return None
    return onset
