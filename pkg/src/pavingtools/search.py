"""Sparse paving generation and scans for extremal independent-hyperplane counts.

A sparse paving matroid of rank r is determined by its circuit-hyperplanes:
a family of r-subsets no two of which share r-1 elements, i.e. a stable set
in the Johnson graph J(n, r).  Generation works directly on those families.
"""

from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .bits import popcount, subsets_of_size, to_tuple
from .census import CensusReport, census, profile_table
from .core import Matroid, PavingFamily, from_paving, is_paving
from .errors import ExhaustiveTooLarge, NotPaving, ParameterOutOfRange, RankOutOfRange
from .screen import NOT_ORIENTABLE, bound, format_fraction, screen

SEARCH_SCHEMA = "pav-search-v1"
SEARCH_VERSION = 1
MODES = ("random", "greedy", "exhaustive")
MAX_N = 16
MAX_EXHAUSTIVE_N = 8


def _check_params(n, r, mode, budget):
    if mode not in MODES:
        raise ParameterOutOfRange(f"mode must be one of {MODES}, got {mode!r}")
    if not 3 <= r <= n <= MAX_N:
        raise ParameterOutOfRange(f"need 3 <= r <= n <= {MAX_N}, got n={n}, r={r}")
    if budget is not None and budget < 1:
        raise ParameterOutOfRange(f"budget must be at least 1, got {budget}")
    if mode == "exhaustive" and n > MAX_EXHAUSTIVE_N:
        raise ExhaustiveTooLarge(f"exhaustive mode supports n <= {MAX_EXHAUSTIVE_N}, got n={n}")


def _johnson(n: int, r: int):
    """r-subsets in lexicographic order and, per subset, a bitset of its neighbours.

    The whole ground set (when r == n) is never a nontrivial hyperplane, so it is left out.
    """
    verts = [S for S in subsets_of_size(n, r) if r < n]
    conflict = []
    for a in verts:
        row = 0
        for j, b in enumerate(verts):
            if popcount(a & b) == r - 1:
                row |= 1 << j
        conflict.append(row)
    return verts, conflict


def _greedy(order, conflict) -> list:
    chosen = []
    blocked = 0
    for i in order:
        if not blocked >> i & 1:
            chosen.append(i)
            blocked |= conflict[i]
    return sorted(chosen)


def _stable_sets(conflict, m: int):
    """All stable sets as sorted index lists, in lexicographic (DFS prefix) order."""
    chosen = []

    def rec(start, blocked):
        yield list(chosen)
        for i in range(start, m):
            if not blocked >> i & 1:
                chosen.append(i)
                yield from rec(i + 1, blocked | conflict[i])
                chosen.pop()

    yield from rec(0, 0)


def block_families(n: int, r: int, mode: str = "random", seed: int | None = 0, budget: int | None = 1):
    """Yield circuit-hyperplane families (tuples of masks) per ``mode``."""
    _check_params(n, r, mode, budget)
    verts, conflict = _johnson(n, r)
    m = len(verts)
    if mode == "greedy":
        yield tuple(verts[i] for i in _greedy(range(m), conflict))
        return
    if mode == "random":
        rng = random.Random(seed)
        order = list(range(m))
        for _ in range(budget):
            rng.shuffle(order)
            yield tuple(verts[i] for i in _greedy(order, conflict))
        return
    for emitted, family in enumerate(_stable_sets(conflict, m)):
        if budget is not None and emitted >= budget:
            return
        yield tuple(verts[i] for i in family)


def sparse_paving_matroid(n: int, r: int, blocks, name: str | None = None) -> Matroid:
    # families from block_families satisfy the paving invariants by construction
    return Matroid(n, r, PavingFamily(r, tuple(blocks)), name=name)


def generate_sparse_paving(n: int, r: int, mode: str = "random", seed: int | None = 0, budget: int | None = 1):
    """Stream sparse paving matroids of rank ``r`` on ``n`` elements.

    ``random`` reshuffles the r-subsets with a seeded RNG and inserts
    greedily, once per unit of budget; ``greedy`` emits the single
    lexicographic maximal family; ``exhaustive`` (n <= 8) walks every valid
    family, starting from the empty one, in lexicographic order.
    """
    for i, blocks in enumerate(block_families(n, r, mode, seed, budget)):
        yield sparse_paving_matroid(n, r, blocks, name=f"sp-{mode}-{n}-{r}-{i}")


def problem2_scan(M: Matroid, report: CensusReport | None = None):
    """Lexicographically first (r-2)-subset lying in at least as many simple
    as multiple hyperplanes, or ``None``."""
    if not is_paving(M):
        raise NotPaving(f"{M!r} is not paving")
    if M.r < 3:
        raise RankOutOfRange(f"need r >= 3, got r={M.r}")
    for S, (simple, multiple) in profile_table(M, report).items():
        if simple >= multiple:
            return S
    return None


@dataclass
class SearchRecord:
    n: int
    r: int
    blocks: list
    independent_count: int
    hyperplane_total: int
    bound: Fraction
    per_pair: Fraction
    per_cube: Fraction
    problem2_witness: tuple | None
    not_orientable: bool
    seed: int | None
    generation_mode: str

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "blocks": [list(b) for b in self.blocks],
            "independent_count": self.independent_count,
            "hyperplane_total": self.hyperplane_total,
            "bound": format_fraction(self.bound),
            "per_pair": format_fraction(self.per_pair),
            "per_cube": format_fraction(self.per_cube),
            "problem2_witness": list(self.problem2_witness) if self.problem2_witness is not None else None,
            "not_orientable": self.not_orientable,
            "seed": self.seed,
            "generation_mode": self.generation_mode,
        }

    @classmethod
    def from_dict(cls, d: dict) -> SearchRecord:
        witness = d["problem2_witness"]
        return cls(
            n=d["n"],
            r=d["r"],
            blocks=[tuple(b) for b in d["blocks"]],
            independent_count=d["independent_count"],
            hyperplane_total=d["hyperplane_total"],
            bound=Fraction(d["bound"]),
            per_pair=Fraction(d["per_pair"]),
            per_cube=Fraction(d["per_cube"]),
            problem2_witness=tuple(witness) if witness is not None else None,
            not_orientable=d["not_orientable"],
            seed=d["seed"],
            generation_mode=d["generation_mode"],
        )

    def matroid(self) -> Matroid:
        return from_paving(self.n, self.r, self.blocks)


def record_for(n: int, r: int, blocks, seed=None, mode: str = "random") -> SearchRecord:
    M = sparse_paving_matroid(n, r, blocks)
    report = census(M)
    count = report.independent_count
    return SearchRecord(
        n=n,
        r=r,
        blocks=[to_tuple(b) for b in blocks],
        independent_count=count,
        hyperplane_total=report.total,
        bound=bound(n, r),
        per_pair=Fraction(count, comb(n, 2)),
        per_cube=Fraction(count, n**3),
        problem2_witness=problem2_scan(M, report),
        not_orientable=screen(M, report).verdict == NOT_ORIENTABLE,
        seed=seed,
        generation_mode=mode,
    )


def _record_job(args):
    return record_for(*args)


def scan(n: int, r: int, mode: str = "random", seed: int | None = 0, budget: int | None = 1, workers: int = 1) -> list:
    """Records for every generated matroid, in generation order.

    Families are generated serially (so the RNG stream never depends on
    ``workers``); only the census work is farmed out, and ``map`` keeps order.
    """
    jobs = [(n, r, blocks, seed, mode) for blocks in block_families(n, r, mode, seed, budget)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_record_job, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    return [_record_job(j) for j in jobs]


def problem1_scan(n_range, r: int = 4, mode: str = "random", seed: int | None = 0, budget: int | None = 1, workers: int = 1):
    """Scan rank-4 sparse paving matroids, lowest independent counts first per n."""
    if r != 4:
        raise ParameterOutOfRange(f"the scan is defined for rank 4, got r={r}")
    out = []
    for n in n_range:
        records = scan(n, r, mode, seed, budget, workers)
        out.extend(sorted(records, key=lambda rec: rec.independent_count))
    return out


def header(params: dict) -> dict:
    return {"schema": SEARCH_SCHEMA, "version": SEARCH_VERSION, "params": params}


def write_jsonl(path, params: dict, records) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(json.dumps(header(params)) + "\n")
        for rec in records:
            fh.write(json.dumps(rec.to_dict()) + "\n")


def read_jsonl(path):
    """Return ``(header, records)`` from a results file."""
    with open(path, encoding="utf-8") as fh:
        lines = [json.loads(line) for line in fh if line.strip()]
    if not lines or lines[0].get("schema") != SEARCH_SCHEMA:
        raise ValueError(f"{path}: missing {SEARCH_SCHEMA} header")
    return lines[0], [SearchRecord.from_dict(d) for d in lines[1:]]
