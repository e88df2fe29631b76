"""Brute-force reference computations and the property suites behind ``verify``.

Nothing here calls the closed-form paving formulas or the closure-based
hyperplane enumeration; ranks come from a dynamic program over the whole
subset lattice and flats from a scan of all 2^n subsets.  Intended for
n <= 10 or so.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .bits import full_mask, popcount, to_tuple
from .catalog import standard_entries
from .census import census, hyperplanes
from .core import Matroid, from_circuits, is_paving
from .search import generate_sparse_paving
from .screen import bound, double_count, verify_extension, verify_recurrence


def rank_table(n: int, circuits) -> list:
    """``table[S]`` = size of a largest circuit-free subset of S, for every mask S."""
    circuits = list(circuits)
    size = 1 << n
    table = [0] * size
    for S in range(1, size):
        if not any(C & S == C for C in circuits):
            table[S] = popcount(S)
            continue
        best = 0
        m = S
        while m:
            low = m & -m
            m ^= low
            v = table[S ^ low]
            if v > best:
                best = v
        table[S] = best
    return table


def rank_table_from(M: Matroid) -> list:
    return rank_table(M.n, M.circuit_masks)


def flats(n: int, table: list) -> list:
    out = []
    for S in range(1 << n):
        rk = table[S]
        if all(table[S | (1 << i)] > rk for i in range(n) if not S >> i & 1):
            out.append(S)
    return out


def maximal_proper_flats(n: int, table: list) -> list:
    """Hyperplanes as element tuples, sorted."""
    r = table[full_mask(n)]
    return sorted(to_tuple(F) for F in flats(n, table) if table[F] == r - 1)


def circuits_from_rank(n: int, rank) -> list:
    """Minimal dependent sets of any rank function on masks."""
    out = []
    for S in sorted(range(1, 1 << n), key=popcount):
        if rank(S) < popcount(S) and not any(C & S == C for C in out):
            out.append(S)
    return sorted(to_tuple(C) for C in out)


def dual_circuits(n: int, table: list) -> list:
    """Circuits of the dual via its rank function r*(S) = |S| + r(E - S) - r(E)."""
    E = full_mask(n)
    r = table[E]
    return circuits_from_rank(n, lambda S: popcount(S) + table[E & ~S] - r)


def bases(n: int, table: list) -> list:
    r = table[full_mask(n)]
    return sorted(to_tuple(S) for S in range(1 << n) if popcount(S) == r and table[S] == r)


# -- property suites ------------------------------------------------------------


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: list = field(default_factory=list)

    def check(self, label: str, ok: bool) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed.append(label)

    @property
    def ok(self) -> bool:
        return not self.failed


def _sample_matroids(seed: int = 0, count: int = 10):
    yield from (e.matroid for e in standard_entries())
    yield from generate_sparse_paving(8, 4, "random", seed, count)


def suite_axioms(seed: int = 0, pairs: int = 300) -> SuiteResult:
    """Rank and closure axioms plus agreement with the brute-force oracles."""
    res = SuiteResult("axioms")
    rng = random.Random(seed)
    for M in _sample_matroids(seed):
        tag = M.name or repr(M)
        table = rank_table_from(M)
        fast = [M.rank_mask(S) for S in range(1 << M.n)]
        res.check(f"{tag}: rank agrees with oracle", fast == table)
        res.check(f"{tag}: full rank", fast[M.ground] == M.r)
        res.check(f"{tag}: hyperplanes agree with oracle", hyperplanes(M) == maximal_proper_flats(M.n, table))
        ok_bounds = ok_mono = ok_sub = ok_cl = True
        for _ in range(pairs):
            A = rng.getrandbits(M.n)
            B = rng.getrandbits(M.n)
            ok_bounds &= 0 <= fast[A] <= popcount(A)
            ok_mono &= fast[A & B] <= fast[A]
            ok_sub &= fast[A] + fast[B] >= fast[A | B] + fast[A & B]
            cA = M.closure_mask(A)
            ok_cl &= A & cA == A and M.closure_mask(cA) == cA and cA & M.closure_mask(A | B) == cA
        res.check(f"{tag}: 0 <= rank(A) <= |A|", ok_bounds)
        res.check(f"{tag}: rank monotone", ok_mono)
        res.check(f"{tag}: rank submodular", ok_sub)
        res.check(f"{tag}: closure extensive, idempotent, monotone", ok_cl)
        if is_paving(M):
            rebuilt = from_circuits(M.n, M.circuits(), validate=M.n <= 10)
            res.check(f"{tag}: paving formula equals circuit rank", all(
                rebuilt.rank_mask(S) == fast[S] for S in range(1 << M.n)
            ))
    return res


def suite_extension(seed: int = 0) -> SuiteResult:
    res = SuiteResult("extension")
    for M in _sample_matroids(seed):
        if not M.is_simple():
            continue
        tag = M.name or repr(M)
        for e in range(1, M.n + 1):
            res.check(f"{tag}: extension through {e}", verify_extension(M, e))
        total, expected = double_count(M)
        res.check(f"{tag}: double count {total} == {expected}", total == expected)
    return res


def suite_recurrence() -> SuiteResult:
    res = SuiteResult("recurrence")
    res.check("recurrence r<=8, n<=25", verify_recurrence(8, 25))
    res.check("bound(8,4) == 336/39", bound(8, 4) == Fraction(336, 39))
    for n in range(8, 31):
        res.check(f"bound({n},3) == 6n/13", bound(n, 3) == Fraction(6 * n, 13))
    for r in range(3, 9):
        for n in range(r, 26):
            res.check(f"bound({n + 1},{r}) > bound({n},{r})", bound(n + 1, r) > bound(n, r))
    return res


def suite_minors(seed: int = 0) -> SuiteResult:
    res = SuiteResult("minors")
    for M in _sample_matroids(seed, count=3):
        tag = M.name or repr(M)
        if is_paving(M):
            for e in range(1, M.n + 1):
                res.check(f"{tag}: deletion of {e} paving", M.delete(e).is_paving())
                if not M.is_loop(e):
                    res.check(f"{tag}: contraction of {e} paving", M.contract(e).is_paving())
        D = M.dual()
        res.check(f"{tag}: rank of dual", D.r == M.n - M.r)
        res.check(f"{tag}: dual involution", D.dual().circuits() == M.circuits())
        res.check(f"{tag}: dual circuits agree with oracle", D.circuits() == dual_circuits(M.n, rank_table_from(M)))
        res.check(f"{tag}: sparse paving iff dual paving", M.is_sparse_paving() == (is_paving(M) and D.is_paving()))
    return res


SUITES = {
    "axioms": suite_axioms,
    "extension": suite_extension,
    "recurrence": suite_recurrence,
    "minors": suite_minors,
}


def catalog_regressions() -> SuiteResult:
    res = SuiteResult("catalog")
    for entry in standard_entries():
        if entry.expected_census is not None:
            res.check(entry.name, census(entry.matroid).counts == entry.expected_census)
    return res
