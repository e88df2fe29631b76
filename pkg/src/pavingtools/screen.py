"""Exact lower bound on independent hyperplanes and the non-orientability screen.

An orientable paving matroid of rank ``r >= 3`` on ``n >= r + 5`` elements
has at least ``12 * C(n, r-2) / (13 * (r-1))`` independent hyperplanes.  An
applicable matroid with fewer cannot be orientable.  The screen never
claims orientability; a count at or above the bound is only inconclusive.

One element short of that range (``n == r + 4``, ``r >= 4``) every chain of
contractions ends in a 7-element rank-3 matroid, which may be the seven-line
configuration with only ``3n/7`` simple points.  Running the same induction
from that weaker base gives ``6 * C(n, r-2) / (7 * (r-1))``; the screen
compares against this smaller threshold there and reports both numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .bits import insert_bit
from .census import CensusReport, census
from .core import Matroid, is_paving
from .errors import LoopContraction, ParameterOutOfRange, RankOutOfRange

SCREEN_SCHEMA = "pav-screen-v1"

# smallest n - r for which the bound is guaranteed
MIN_EXCESS = 5

NOT_PAVING = "not_paving"
RANK_TOO_SMALL = "rank_too_small"
TOO_FEW_ELEMENTS = "too_few_elements"

NOT_ORIENTABLE = "not_orientable"
INCONCLUSIVE = "inconclusive"

GENERAL = "general"
SEVEN_LINE_BASE = "seven_line_base"


def bound(n: int, r: int) -> Fraction:
    if r < 3:
        raise RankOutOfRange(f"the bound needs r >= 3, got r={r}")
    if n < r:
        raise ParameterOutOfRange(f"the bound needs n >= r, got n={n}, r={r}")
    return Fraction(12 * comb(n, r - 2), 13 * (r - 1))


def seven_line_bound(n: int, r: int) -> Fraction:
    """The bound obtained from the 3n/7 base case instead of 6n/13."""
    if r < 3:
        raise RankOutOfRange(f"the bound needs r >= 3, got r={r}")
    if n < r:
        raise ParameterOutOfRange(f"the bound needs n >= r, got n={n}, r={r}")
    return Fraction(6 * comb(n, r - 2), 7 * (r - 1))


def format_fraction(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


@dataclass
class ScreenVerdict:
    applicable: bool
    reason_if_not: str | None
    bound: Fraction | None
    independent_count: int | None
    verdict: str
    certificate: CensusReport | None = None
    threshold: Fraction | None = None
    threshold_kind: str | None = None
    matroid_name: str | None = None
    n: int | None = None
    r: int | None = None

    def to_dict(self) -> dict:
        return {
            "schema": SCREEN_SCHEMA,
            "matroid_name": self.matroid_name,
            "n": self.n,
            "r": self.r,
            "applicable": self.applicable,
            "reason_if_not": self.reason_if_not,
            "bound": format_fraction(self.bound) if self.bound is not None else None,
            "independent_count": self.independent_count,
            "threshold": format_fraction(self.threshold) if self.threshold is not None else None,
            "threshold_kind": self.threshold_kind,
            "verdict": self.verdict,
            "certificate": self.certificate.to_dict() if self.certificate is not None else None,
        }


def screen(M: Matroid, report: CensusReport | None = None) -> ScreenVerdict:
    n, r = M.n, M.r
    threshold = kind = None
    if not is_paving(M):
        reason = NOT_PAVING
    elif r < 3:
        reason = RANK_TOO_SMALL
    elif n >= r + MIN_EXCESS:
        reason = None
        threshold, kind = bound(n, r), GENERAL
    elif n == r + MIN_EXCESS - 1 and r >= 4:
        reason = None
        threshold, kind = seven_line_bound(n, r), SEVEN_LINE_BASE
    else:
        reason = TOO_FEW_ELEMENTS

    f = bound(n, r) if r >= 3 and n >= r else None
    count = None
    if r >= 1:
        report = report or census(M)
        count = report.independent_count

    applicable = reason is None
    violated = applicable and count < threshold
    return ScreenVerdict(
        applicable=applicable,
        reason_if_not=reason,
        bound=f,
        independent_count=count,
        verdict=NOT_ORIENTABLE if violated else INCONCLUSIVE,
        certificate=report if violated else None,
        threshold=threshold,
        threshold_kind=kind,
        matroid_name=M.name,
        n=n,
        r=r,
    )


def _independent_hyperplane_masks(M: Matroid) -> set:
    if M.r < 1:
        return set()
    out = set()
    for h in census(M).independent_hyperplanes():
        m = 0
        for e in h:
            m |= 1 << (e - 1)
        out.add(m)
    return out


def verify_extension(M: Matroid, e: int) -> bool:
    """Check that adding ``e`` maps the independent hyperplanes of ``M / e``
    bijectively onto the independent hyperplanes of ``M`` that contain ``e``.
    """
    if M.is_loop(e):
        raise LoopContraction(f"element {e} is a loop")
    minor = M.contract(e)
    bit = 1 << (e - 1)
    upstairs = _independent_hyperplane_masks(M)
    lifted = set()
    for h in _independent_hyperplane_masks(minor):
        lift = insert_bit(h, e) | bit
        if lift not in upstairs:
            return False
        lifted.add(lift)
    containing = {H for H in upstairs if H & bit}
    return lifted == containing


def double_count(M: Matroid) -> tuple:
    """Return ``(sum over e of indep(M/e), (r-1) * indep(M))``; loops are skipped."""
    total = 0
    for e in range(1, M.n + 1):
        if not M.is_loop(e):
            total += len(_independent_hyperplane_masks(M.contract(e)))
    return total, (M.r - 1) * len(_independent_hyperplane_masks(M))


def verify_recurrence(r_max: int, n_max: int) -> bool:
    """Check ``bound(n, r) == n / (r-1) * bound(n-1, r-1)`` exactly over the grid."""
    for r in range(4, r_max + 1):
        for n in range(r, n_max + 1):
            if bound(n, r) != Fraction(n, r - 1) * bound(n - 1, r - 1):
                return False
    return True
