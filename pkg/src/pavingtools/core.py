"""Matroid representations, rank/closure oracles, minors and predicates.

A :class:`Matroid` on ground set ``{1..n}`` is backed by one of two
representations:

* :class:`PavingFamily` -- the nontrivial hyperplanes (blocks of size >= r)
  of a paving matroid.  Rank and closure have closed forms.
* :class:`CircuitList` -- an explicit antichain of circuits, for arbitrary
  matroids.

Sets are passed in as iterables of 1-based ids and come back as frozensets;
internally everything is a bitmask (see :mod:`pavingtools.bits`).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .bits import (
    check_size,
    full_mask,
    popcount,
    remove_bit,
    sort_key,
    submasks_of_size,
    subsets_of_size,
    to_mask,
    to_tuple,
)
from .errors import (
    AxiomViolation,
    BlockIsGroundSet,
    BlockOverlap,
    BlockTooSmall,
    ElementOutOfRange,
    LoopContraction,
    MatroidError,
    NotAnAntichain,
    NotPaving,
)

# weak elimination is checked exhaustively only up to this ground-set size
AXIOM_CHECK_LIMIT = 12


@dataclass(frozen=True)
class PavingFamily:
    r: int
    blocks: tuple  # masks, lexicographically sorted by element tuple

    def sets(self) -> list:
        return [to_tuple(b) for b in self.blocks]


@dataclass(frozen=True)
class CircuitList:
    circuits: tuple  # masks, lexicographically sorted by element tuple

    def sets(self) -> list:
        return [to_tuple(c) for c in self.circuits]


def _sorted_masks(masks) -> tuple:
    return tuple(sorted(set(masks), key=sort_key))


class Matroid:
    """An immutable matroid on ``{1..n}``.

    ``labels[i - 1]`` is the original name of element ``i``; minors drop
    and renumber elements but keep the labels so reports can refer back to
    the matroid the minor came from.
    """

    def __init__(self, n: int, r: int, rep, name: str | None = None, labels=None):
        self.n = n
        self.r = r
        self.rep = rep
        self.name = name
        self.labels = tuple(labels) if labels is not None else tuple(range(1, n + 1))
        self.ground = full_mask(n)

    def __repr__(self) -> str:
        kind = "paving" if isinstance(self.rep, PavingFamily) else "circuits"
        label = f" {self.name!r}" if self.name else ""
        return f"<Matroid{label} n={self.n} r={self.r} rep={kind}>"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.n == other.n and self.r == other.r and self.circuit_masks == other.circuit_masks

    def __hash__(self) -> int:
        return hash((self.n, self.r, self.circuit_masks))

    # -- mask-level oracles -------------------------------------------------

    def mask(self, S) -> int:
        return to_mask(S, self.n)

    def rank_mask(self, S: int) -> int:
        rep = self.rep
        if isinstance(rep, PavingFamily):
            r = self.r
            size = popcount(S)
            if size < r - 1:
                return size
            for B in rep.blocks:
                if S & ~B == 0:
                    return r - 1
            return min(size, r)
        return self._circuit_rank(S)

    def _circuit_rank(self, S: int) -> int:
        by_elem = self._circuits_by_element
        indep = 0
        rank = 0
        m = S
        while m:
            low = m & -m
            m ^= low
            trial = indep | low
            for C in by_elem[low.bit_length() - 1]:
                if C & ~trial == 0:
                    break
            else:
                indep = trial
                rank += 1
        return rank

    def closure_mask(self, S: int) -> int:
        rep = self.rep
        if isinstance(rep, PavingFamily):
            r = self.r
            if r == 0:
                return self.ground
            size = popcount(S)
            if size < r - 1:
                return S
            for B in rep.blocks:
                if S & ~B == 0:
                    return B
            return S if size == r - 1 else self.ground
        # x is in cl(S) iff some circuit C has x in C and C - x inside S
        cl = S
        for C in self.circuit_masks:
            outside = C & ~S
            if outside and outside & (outside - 1) == 0:
                cl |= outside
        return cl

    def is_flat_mask(self, S: int) -> bool:
        return self.closure_mask(S) == S

    @cached_property
    def circuit_masks(self) -> tuple:
        rep = self.rep
        if isinstance(rep, CircuitList):
            return rep.circuits
        return _paving_circuits(self.n, self.r, rep.blocks)

    @cached_property
    def _circuits_by_element(self) -> list:
        table = [[] for _ in range(self.n)]
        for C in self.circuit_masks:
            m = C
            while m:
                low = m & -m
                m ^= low
                table[low.bit_length() - 1].append(C)
        return table

    # -- public set-level API --------------------------------------------

    def rank(self, S) -> int:
        return self.rank_mask(self.mask(S))

    def closure(self, S) -> frozenset:
        return frozenset(to_tuple(self.closure_mask(self.mask(S))))

    def is_independent(self, S) -> bool:
        m = self.mask(S)
        return self.rank_mask(m) == popcount(m)

    def circuits(self) -> list:
        return [to_tuple(c) for c in self.circuit_masks]

    def bases(self) -> list:
        return [to_tuple(b) for b in subsets_of_size(self.n, self.r) if self.rank_mask(b) == self.r]

    def is_loop(self, e: int) -> bool:
        return self.rank_mask(self.mask([e])) == 0

    def contract(self, e: int) -> Matroid:
        return contract(self, e)

    def delete(self, e: int) -> Matroid:
        return delete(self, e)

    def dual(self) -> Matroid:
        return dual(self)

    def is_paving(self) -> bool:
        return is_paving(self)

    def is_sparse_paving(self) -> bool:
        return is_sparse_paving(self)

    def is_simple(self) -> bool:
        return is_simple(self)


def _paving_circuits(n: int, r: int, blocks) -> tuple:
    if r == 0:
        return tuple(1 << i for i in range(n))
    small = set()
    for B in blocks:
        small.update(submasks_of_size(B, r))
    out = list(small)
    for S in subsets_of_size(n, r + 1):
        if any(S & ~B == 0 for B in blocks):
            continue
        if small and any(S & C == C for C in small):
            continue
        out.append(S)
    return _sorted_masks(out)


# -- constructors -------------------------------------------------------------


def from_paving(n: int, r: int, blocks=(), name: str | None = None, labels=None) -> Matroid:
    """Build a paving matroid from its nontrivial hyperplanes.

    Each block needs at least ``r`` elements and two blocks may share at
    most ``r - 2``.  Blocks are deduplicated and stored sorted.
    """
    check_size(n)
    if not 0 <= r <= n:
        raise ElementOutOfRange(f"rank {r} outside 0..{n}")
    masks = _sorted_masks(to_mask(B, n) for B in blocks)
    if r == 0 and masks:
        raise BlockOverlap("a rank-0 matroid has no nontrivial hyperplanes")
    ground = full_mask(n)
    for B in masks:
        if popcount(B) < r:
            raise BlockTooSmall(f"block {to_tuple(B)} has fewer than r={r} elements")
        if B == ground:
            raise BlockIsGroundSet("a block cannot be the whole ground set (it would drop the rank)")
    for A, B in combinations(masks, 2):
        if popcount(A & B) > r - 2:
            raise BlockOverlap(f"blocks {to_tuple(A)} and {to_tuple(B)} share more than r-2={r - 2} elements")
    return Matroid(n, r, PavingFamily(r, masks), name=name, labels=labels)


def from_circuits(n: int, circuits, name: str | None = None, labels=None, validate: bool | None = None) -> Matroid:
    """Build a matroid from its circuits; the rank is inferred.

    The circuit axioms are checked exhaustively when ``n <= 12`` (or when
    ``validate`` is forced on); see :func:`check_circuit_axioms`.
    """
    check_size(n)
    masks = _sorted_masks(to_mask(C, n) for C in circuits)
    if 0 in masks:
        raise NotAnAntichain("the empty set cannot be a circuit")
    for A, B in combinations(masks, 2):
        if A & B in (A, B):
            raise NotAnAntichain(f"circuits {to_tuple(A)} and {to_tuple(B)} are nested")
    if validate is None:
        validate = n <= AXIOM_CHECK_LIMIT
    if validate:
        check_circuit_axioms(masks)
    return _from_circuit_masks(n, masks, name=name, labels=labels)


def _from_circuit_masks(n: int, masks, name=None, labels=None) -> Matroid:
    # trusted path: masks are already a valid circuit family
    M = Matroid(n, 0, CircuitList(_sorted_masks(masks)), name=name, labels=labels)
    M.r = M._circuit_rank(M.ground)
    return M


def check_circuit_axioms(masks) -> None:
    """Raise :class:`AxiomViolation` unless weak circuit elimination holds."""
    masks = list(masks)
    for A, B in combinations(masks, 2):
        common = A & B
        union = A | B
        while common:
            low = common & -common
            common ^= low
            target = union & ~low
            if not any(C & ~target == 0 for C in masks):
                e = low.bit_length()
                raise AxiomViolation(
                    f"eliminating {e} from {to_tuple(A)} and {to_tuple(B)} leaves no circuit inside {to_tuple(target)}"
                )


# -- minors and duality -------------------------------------------------------


def _check_element(M: Matroid, e: int) -> None:
    if not isinstance(e, int) or not 1 <= e <= M.n:
        raise ElementOutOfRange(f"element {e!r} not in 1..{M.n}")


def _minor_labels(M: Matroid, e: int) -> tuple:
    return M.labels[: e - 1] + M.labels[e:]


def _minor_name(M: Matroid, op: str, e: int) -> str | None:
    return f"{M.name}{op}{M.labels[e - 1]}" if M.name else None


def contract(M: Matroid, e: int) -> Matroid:
    """Return ``M / e`` on ``1..n-1``; ``result.labels`` maps back to ``M``."""
    _check_element(M, e)
    bit = 1 << (e - 1)
    if M.rank_mask(bit) == 0:
        raise LoopContraction(f"element {e} is a loop")
    labels = _minor_labels(M, e)
    name = _minor_name(M, "/", e)
    if isinstance(M.rep, PavingFamily) and M.r >= 2:
        blocks = [remove_bit(B & ~bit, e) for B in M.rep.blocks if B & bit]
        return Matroid(M.n - 1, M.r - 1, PavingFamily(M.r - 1, _sorted_masks(blocks)), name=name, labels=labels)
    reduced = {remove_bit(C & ~bit, e) for C in M.circuit_masks}
    reduced.discard(0)
    minimal = [C for C in reduced if not any(D != C and D & C == D for D in reduced)]
    return _from_circuit_masks(M.n - 1, minimal, name=name, labels=labels)


def delete(M: Matroid, e: int) -> Matroid:
    """Return ``M \\ e`` on ``1..n-1``; ``result.labels`` maps back to ``M``."""
    _check_element(M, e)
    bit = 1 << (e - 1)
    labels = _minor_labels(M, e)
    name = _minor_name(M, "\\", e)
    is_coloop = M.rank_mask(M.ground & ~bit) < M.r
    if isinstance(M.rep, PavingFamily) and not is_coloop:
        blocks = [remove_bit(B & ~bit, e) for B in M.rep.blocks if popcount(B & ~bit) >= M.r]
        return Matroid(M.n - 1, M.r, PavingFamily(M.r, _sorted_masks(blocks)), name=name, labels=labels)
    kept = [remove_bit(C, e) for C in M.circuit_masks if not C & bit]
    return _from_circuit_masks(M.n - 1, kept, name=name, labels=labels)


def hyperplane_masks(M: Matroid) -> list:
    """Masks of all rank-(r-1) flats, lexicographically sorted (r >= 1)."""
    r = M.r
    found = set()
    for S in subsets_of_size(M.n, r - 1):
        if any(S & ~H == 0 for H in found):
            continue
        if M.rank_mask(S) != r - 1:
            continue
        found.add(M.closure_mask(S))
    return sorted(found, key=sort_key)


def dual(M: Matroid) -> Matroid:
    """The dual matroid; its circuits are the complements of M's hyperplanes."""
    if M.r == 0:
        cocircuits = []
    else:
        cocircuits = [M.ground & ~H for H in hyperplane_masks(M)]
    name = f"{M.name}*" if M.name else None
    D = _from_circuit_masks(M.n, cocircuits, name=name, labels=M.labels)
    if D.r != M.n - M.r:
        raise MatroidError(f"dual rank {D.r} != n - r = {M.n - M.r}")
    return D


def relax(M: Matroid, H) -> Matroid:
    """Declare the circuit-hyperplane ``H`` of a paving matroid a basis."""
    if not isinstance(M.rep, PavingFamily):
        raise MatroidError("relaxation is implemented for paving representations only")
    h = M.mask(H)
    if h not in M.rep.blocks or popcount(h) != M.r:
        raise MatroidError(f"{to_tuple(h)} is not a circuit-hyperplane")
    blocks = tuple(B for B in M.rep.blocks if B != h)
    return Matroid(M.n, M.r, PavingFamily(M.r, blocks), name=M.name, labels=M.labels)


# -- predicates ---------------------------------------------------------------


def is_paving(M: Matroid) -> bool:
    """Every circuit has at least r elements (so r or r+1)."""
    if isinstance(M.rep, PavingFamily):
        return True
    return all(popcount(C) >= M.r for C in M.circuit_masks)


def is_sparse_paving(M: Matroid) -> bool:
    if not is_paving(M):
        return False
    r = M.r
    if isinstance(M.rep, PavingFamily):
        return all(popcount(B) == r for B in M.rep.blocks)
    small = [C for C in M.circuit_masks if popcount(C) == r]
    return all(popcount(A & B) <= r - 2 for A, B in combinations(small, 2))


def is_simple(M: Matroid) -> bool:
    return all(popcount(C) > 2 for C in M.circuit_masks)


def to_paving(M: Matroid) -> Matroid:
    """Re-encode a paving matroid through its nontrivial hyperplanes."""
    if isinstance(M.rep, PavingFamily):
        return M
    if not is_paving(M):
        raise NotPaving(f"{M!r} is not paving")
    if M.r == 0:
        return Matroid(M.n, 0, PavingFamily(0, ()), name=M.name, labels=M.labels)
    blocks = [H for H in hyperplane_masks(M) if popcount(H) >= M.r]
    return Matroid(M.n, M.r, PavingFamily(M.r, _sorted_masks(blocks)), name=M.name, labels=M.labels)


def uniform(n: int, r: int) -> Matroid:
    return from_paving(n, r, (), name=f"U{r},{n}")
