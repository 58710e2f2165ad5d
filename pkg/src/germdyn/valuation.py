"""Monomial valuations and attraction rates under iteration.

A monomial valuation weights the two coordinates and evaluates a polynomial
as the minimal weighted degree over its support.  Pulling back along a map
germ and renormalizing gives the attraction rate; its growth along iterates
is summarized either by an exact rational asymptotic rate (when a detected
recursion has a rational dominant root) or by an algebraic certificate.
"""

from __future__ import annotations

from fractions import Fraction

from .bipoly import BiPoly, ZeroPolynomial
from .intersect import MapGerm
from .recurrence import NoRecurrenceFound, RecurrenceModel, detect_recursion


class MonomialValuation:
    """Weights (s, t) on (x, y) with min(s, t) = 1."""

    __slots__ = ("sx", "ty")

    def __init__(self, sx, ty):
        sx, ty = Fraction(sx), Fraction(ty)
        if min(sx, ty) != 1:
            raise ValueError("weights must be normalized: min(s, t) = 1")
        self.sx = sx
        self.ty = ty

    @classmethod
    def order(cls):
        return cls(1, 1)

    def __call__(self, P: BiPoly) -> Fraction:
        if P.is_zero():
            raise ZeroPolynomial("valuation of the zero polynomial")
        return min(self.sx * i + self.ty * j for i, j in P.terms)

    def __repr__(self):
        return "MonomialValuation(%s, %s)" % (self.sx, self.ty)


def val_eval(nu: MonomialValuation, P: BiPoly) -> Fraction:
    return nu(P)


def attraction_rate(F: MapGerm, nu: MonomialValuation) -> Fraction:
    """min of the valuation on the two pulled-back coordinates."""
    return min(nu(F.fx), nu(F.fy))


def c_sequence(F: MapGerm, nu: MonomialValuation, n_max: int,
               budget: int | None = 10**6) -> list[Fraction]:
    """Attraction rates along iterates F, F^2, ..., F^n_max, exact."""
    out = []
    Fn = F
    for n in range(1, n_max + 1):
        out.append(attraction_rate(Fn, nu))
        if n < n_max:
            Fn = F.compose(Fn, budget)
    return out


class AsymptoticRate:
    """Result of the asymptotic-rate extraction.

    Either ``value`` is an exact rational, or ``certificate`` holds the
    recursion's characteristic polynomial together with an integer bracket
    for its dominant root and the n-th-root bound pair from the last
    computed rate.  Floats never enter; callers format as they wish.
    """

    __slots__ = ("value", "certificate", "model")

    def __init__(self, value=None, certificate=None, model=None):
        self.value = value
        self.certificate = certificate
        self.model = model

    @property
    def is_exact(self):
        return self.value is not None

    def to_json(self):
        out = {}
        if self.value is not None:
            out["value"] = str(self.value)
        if self.certificate is not None:
            out["certificate"] = {
                "char_poly": [str(c) for c in self.certificate["char_poly"]],
                "dominant_root_bracket": [
                    str(v) for v in self.certificate["dominant_root_bracket"]
                ],
                "nth_root_bound": {
                    "radicand": str(self.certificate["nth_root_bound"][0]),
                    "degree": self.certificate["nth_root_bound"][1],
                },
            }
        if self.model is not None:
            out["recursion"] = self.model.to_json()
        return out

    def __repr__(self):
        if self.value is not None:
            return "AsymptoticRate(%s)" % self.value
        return "AsymptoticRate(certificate=%r)" % (self.certificate,)


def c_infinity(F: MapGerm, n_max: int, budget: int | None = 10**6,
               max_order: int = 3, holdout: int = 1) -> AsymptoticRate:
    """Asymptotic attraction rate from the rate sequence of the iterates.

    Detects an eventual integral recursion in c(F^n, ord); its dominant
    root is the rate.  A monic integer characteristic polynomial has only
    integer rational roots, so either the dominant root is an exact integer
    or an algebraic certificate with an integer bracket is returned.
    """
    if n_max < 3:
        raise ValueError("n_max must be >= 3")
    max_order = min(max_order, (n_max - holdout) // 2)
    if max_order < 1:
        raise ValueError("n_max too small for any recursion order")
    rates = c_sequence(F, MonomialValuation.order(), n_max, budget)
    ints = []
    for r in rates:
        if r.denominator != 1:
            raise AssertionError("order valuation rates must be integers")
        ints.append(int(r))
    model = detect_recursion(ints, max_order, holdout)  # may raise
    cp = model.char_poly()
    lo, hi = _dominant_root_bracket(cp)
    if lo == hi:
        return AsymptoticRate(value=Fraction(lo), model=model)
    return AsymptoticRate(
        certificate={
            "char_poly": cp,
            "dominant_root_bracket": (lo, hi),
            "nth_root_bound": (ints[-1], n_max),
        },
        model=model,
    )


def growth_envelope_check(mu: list[int], c_inf: Fraction, max_order: int = 3,
                          holdout: int = 1) -> dict:
    """Check a computed multiplicity sequence against its asymptotic rate:
    detect the recursion and report exact min/max of mu(n) / c_inf^n.

    Returns {"pass": bool, "model": ..., "ratio_min": ..., "ratio_max": ...,
    "onset": int}; ratios are taken from the recursion onset onward.
    """
    if not mu:
        raise ValueError("empty sequence")
    c_inf = Fraction(c_inf)
    if c_inf <= 1:
        raise ValueError("asymptotic rate must exceed 1")
    report = {"pass": False, "model": None, "ratio_min": None,
              "ratio_max": None, "onset": None}
    try:
        model = detect_recursion(mu, max_order, holdout)
    except (NoRecurrenceFound, ValueError) as exc:
        report["error"] = str(exc)
        return report
    ratios = [
        Fraction(mu[n]) / c_inf**n for n in range(model.onset, len(mu))
    ]
    report.update(
        {
            "pass": True,
            "model": model,
            "ratio_min": min(ratios),
            "ratio_max": max(ratios),
            "onset": model.onset,
        }
    )
    return report


def _eval_int_poly(cp: list[int], x: int) -> int:
    acc = 0
    for c in cp:
        acc = acc * x + c
    return acc


def _dominant_root_bracket(cp: list[int]):
    """Integers (a, b) with the largest real root of the monic polynomial in
    [a, b]; a == b when that root is an exact integer.

    The recursions detected here come from positive growing sequences, whose
    dominant characteristic root is the largest real root.
    """
    bound = 1 + max(abs(c) for c in cp)
    a = None
    for x in range(bound, -bound - 1, -1):
        v = _eval_int_poly(cp, x)
        if v == 0:
            return x, x
        if v < 0:
            a = x
            break
    if a is None:
        # no sign change on integers: fall back to the Cauchy bound
        return -bound, bound
    return a, a + 1
