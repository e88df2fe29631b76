"""Hyperplane enumeration and the independent / simple / multiple census."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations, islice
from math import comb

from .bits import popcount, sort_key, subsets_of_size, to_mask, to_tuple
from .core import Matroid, hyperplane_masks
from .errors import NotAHyperplane, RankZero, WrongSubsetSize

CENSUS_SCHEMA = "pav-census-v1"


class Classification(str, Enum):
    INDEPENDENT = "independent"
    SIMPLE = "simple"
    MULTIPLE = "multiple"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class HyperplaneRecord:
    elements: tuple
    size: int
    classification: Classification

    def to_dict(self) -> dict:
        return {"elements": list(self.elements), "size": self.size, "classification": self.classification.value}


@dataclass
class CensusReport:
    """Every hyperplane of a matroid with its classification.

    ``counts`` follows the definitions literally: an independent hyperplane
    is simple as well, so ``counts["simple"]`` includes the independent ones
    and ``counts["simple"] + counts["multiple"]`` is the total.  Each record's
    own ``classification`` is exclusive (the most specific label).
    """

    matroid_name: str | None
    n: int
    r: int
    hyperplanes: list
    counts: dict
    per_subset_profiles: dict | None = field(default=None)

    @property
    def independent_count(self) -> int:
        return self.counts["independent"]

    @property
    def total(self) -> int:
        return len(self.hyperplanes)

    def independent_hyperplanes(self) -> list:
        return [h.elements for h in self.hyperplanes if h.classification is Classification.INDEPENDENT]

    def to_dict(self) -> dict:
        out = {
            "schema": CENSUS_SCHEMA,
            "matroid_name": self.matroid_name,
            "n": self.n,
            "r": self.r,
            "total": self.total,
            "counts": {k.value: self.counts[k.value] for k in Classification},
            "hyperplanes": [h.to_dict() for h in self.hyperplanes],
        }
        if self.per_subset_profiles is not None:
            out["per_subset_profiles"] = [
                {"subset": list(S), "simple": s, "multiple": m} for S, (s, m) in self.per_subset_profiles.items()
            ]
        return out


def _require_rank(M: Matroid) -> None:
    if M.r < 1:
        raise RankZero(f"{M!r} has rank 0 and no hyperplanes")


def hyperplanes(M: Matroid) -> list:
    """All hyperplanes of ``M`` as sorted element tuples, in lexicographic order."""
    _require_rank(M)
    return [to_tuple(H) for H in hyperplane_masks(M)]


def _classify_mask(M: Matroid, H: int) -> Classification:
    if popcount(H) == M.r - 1:
        return Classification.INDEPENDENT
    m = H
    while m:
        low = m & -m
        m ^= low
        if M.is_flat_mask(H & ~low):
            return Classification.SIMPLE
    return Classification.MULTIPLE


def classify(M: Matroid, H) -> Classification:
    h = to_mask(H, M.n)
    if M.r < 1 or M.rank_mask(h) != M.r - 1 or not M.is_flat_mask(h):
        raise NotAHyperplane(f"{to_tuple(h)} is not a hyperplane of {M!r}")
    return _classify_mask(M, h)


def _closures_of_slice(args):
    M, start, stop = args
    r = M.r
    out = set()
    for S in islice(subsets_of_size(M.n, r - 1), start, stop):
        if M.rank_mask(S) == r - 1:
            out.add(M.closure_mask(S))
    return out


def _hyperplane_masks_parallel(M: Matroid, workers: int) -> list:
    total = comb(M.n, M.r - 1)
    step = -(-total // workers)
    jobs = [(M, i, min(i + step, total)) for i in range(0, total, step)]
    found = set()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_closures_of_slice, jobs):
            found |= part
    return sorted(found, key=sort_key)


def census(M: Matroid, profiles: bool = False, workers: int = 1) -> CensusReport:
    """Enumerate and classify every hyperplane of ``M``.

    With ``workers > 1`` the (r-1)-subsets are split into contiguous slices
    closed in separate processes; the merged result is identical.
    """
    _require_rank(M)
    masks = _hyperplane_masks_parallel(M, workers) if workers > 1 else hyperplane_masks(M)
    records = []
    counts = {c.value: 0 for c in Classification}
    for H in masks:
        cls = _classify_mask(M, H)
        records.append(HyperplaneRecord(to_tuple(H), popcount(H), cls))
        if cls is Classification.MULTIPLE:
            counts["multiple"] += 1
        else:
            counts["simple"] += 1
            if cls is Classification.INDEPENDENT:
                counts["independent"] += 1
    report = CensusReport(M.name, M.n, M.r, records, counts)
    if profiles and M.r >= 2:
        report.per_subset_profiles = profile_table(M, report)
    return report


def _profile_from_records(S: int, records) -> tuple:
    simple = multiple = 0
    for mask, cls in records:
        if S & ~mask == 0:
            if cls is Classification.MULTIPLE:
                multiple += 1
            else:
                simple += 1
    return simple, multiple


def _mask_records(report: CensusReport) -> list:
    out = []
    for h in report.hyperplanes:
        m = 0
        for e in h.elements:
            m |= 1 << (e - 1)
        out.append((m, h.classification))
    return out


def subset_profile(M: Matroid, S, report: CensusReport | None = None) -> tuple:
    """(simple, multiple) counts over the hyperplanes containing all of ``S``."""
    s = to_mask(S, M.n)
    if popcount(s) != M.r - 2:
        raise WrongSubsetSize(f"expected {M.r - 2} elements, got {popcount(s)}")
    if report is None:
        report = census(M)
    return _profile_from_records(s, _mask_records(report))


def profile_table(M: Matroid, report: CensusReport | None = None) -> dict:
    """Profiles of every (r-2)-subset, keyed by element tuple in lexicographic order."""
    if report is None:
        report = census(M)
    records = _mask_records(report)
    return {
        tuple(c + 1 for c in combo): _profile_from_records(sum(1 << i for i in combo), records)
        for combo in combinations(range(M.n), M.r - 2)
    }
