"""Named reference matroids and the point-configuration converter."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb

from . import linalg
from .bits import subsets_of_size, to_tuple
from .core import Matroid, _from_circuit_masks, from_circuits, from_paving, relax, uniform
from .errors import DimensionMismatch, ParameterOutOfRange, UnknownName


@dataclass(frozen=True)
class PointConfiguration:
    points: tuple
    mode: str = "affine"

    def __post_init__(self):
        pts = tuple(tuple(Fraction(x) for x in p) for p in self.points)
        if not pts:
            raise DimensionMismatch("a configuration needs at least one point")
        dims = {len(p) for p in pts}
        if len(dims) != 1:
            raise DimensionMismatch(f"points have mixed dimensions {sorted(dims)}")
        if self.mode not in ("affine", "linear"):
            raise ValueError(f"unknown mode {self.mode!r}")
        object.__setattr__(self, "points", pts)

    @property
    def dimension(self) -> int:
        return len(self.points[0])

    def vectors(self) -> list:
        if self.mode == "affine":
            return [(Fraction(1),) + p for p in self.points]
        return list(self.points)


def from_points(P, mode: str = "affine", name: str | None = None) -> Matroid:
    """Matroid of a rational point (or vector) configuration, elements 1..m.

    Circuits are found as the minimal dependent subsets, scanning subsets
    by size up to ``rank + 1``.
    """
    if not isinstance(P, PointConfiguration):
        P = PointConfiguration(tuple(P), mode)
    vecs = P.vectors()
    m = len(vecs)
    r = linalg.rank(vecs)
    circuits = []
    for k in range(1, r + 2):
        for S in subsets_of_size(m, k):
            if any(C & S == C for C in circuits):
                continue
            rows = [vecs[i - 1] for i in to_tuple(S)]
            if linalg.rank(rows) < k:
                circuits.append(S)
    M = _from_circuit_masks(m, circuits, name=name)
    assert M.r == r
    return M


def graphic(num_vertices: int, edges, name: str | None = None) -> Matroid:
    """Cycle matroid of a small graph; edge ``i`` of ``edges`` is element ``i + 1``."""

    def forest_rank(S):
        parent = list(range(num_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        rk = 0
        for i in to_tuple(S):
            a, b = find(edges[i - 1][0]), find(edges[i - 1][1])
            if a != b:
                parent[a] = b
                rk += 1
        return rk

    m = len(edges)
    circuits = []
    for k in range(1, m + 1):
        for S in subsets_of_size(m, k):
            if any(C & S == C for C in circuits):
                continue
            if forest_rank(S) < k:
                circuits.append(S)
    return from_circuits(m, [to_tuple(C) for C in circuits], name=name)


# -- the named matroids ---------------------------------------------------------

# cube labeling of the binary affine cube: vertex label -> (x, y, z) in {0,1}^3
CUBE = {
    1: (0, 0, 1),
    2: (1, 0, 1),
    3: (1, 0, 0),
    4: (0, 0, 0),
    5: (0, 1, 1),
    6: (1, 1, 1),
    7: (1, 1, 0),
    8: (0, 1, 0),
}

RELAXED_PLANE = (2, 4, 5, 7)

HANSEN_POINTS = (
    (0, 0, 0),
    (0, -1, 0),
    (0, Fraction(-1, 2), 0),
    (0, 0, -1),
    (Fraction(-1, 2), 0, -1),
    (-1, 0, -1),
)

# lines a*x + b*y + c*z = 0 of the projective plane, given by (a, b, c):
# four lines in general position, then the three diagonals of their
# complete quadrilateral
KELLY_MOSER_LINES = (
    (1, 0, 0),
    (0, 1, 0),
    (0, 0, 1),
    (1, 1, 1),
    (1, 1, 0),
    (1, 0, 1),
    (0, 1, 1),
)

K4_EDGES = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def ag32() -> Matroid:
    """Binary affine cube: its planes are the 4-sets whose coordinates sum to 0 mod 2."""
    planes = []
    for quad in combinations(sorted(CUBE), 4):
        if all(sum(CUBE[v][i] for v in quad) % 2 == 0 for i in range(3)):
            planes.append(quad)
    return from_paving(8, 4, planes, name="ag32")


def ag32_prime() -> Matroid:
    M = relax(ag32(), RELAXED_PLANE)
    M.name = "ag32_prime"
    return M


def hansen() -> Matroid:
    return from_points(PointConfiguration(HANSEN_POINTS, "affine"), name="hansen")


def kelly_moser() -> Matroid:
    return from_points(PointConfiguration(KELLY_MOSER_LINES, "linear"), name="kelly_moser")


def k4() -> Matroid:
    return graphic(4, K4_EDGES, name="k4")


def moment_curve_points(d: int, count: int) -> list:
    """``count`` points (t, t^2, ..., t^(d-1), 0) for t = 1..count, in dimension d."""
    return [tuple(Fraction(t) ** k for k in range(1, d)) + (Fraction(0),) for t in range(1, count + 1)]


def apex_configuration(d: int, n: int) -> PointConfiguration:
    if d < 2 or n < d + 2:
        raise ParameterOutOfRange(f"apex needs d >= 2 and n >= d + 2, got d={d}, n={n}")
    base = moment_curve_points(d, n - 1)
    top = tuple(Fraction(0) for _ in range(d - 1)) + (Fraction(1),)
    return PointConfiguration(tuple(base) + (top,), "affine")


def apex(d: int, n: int) -> Matroid:
    """n-1 points in general position in a (d-1)-flat plus one apex off it; rank d+1."""
    return from_points(apex_configuration(d, n), name=f"apex-{d}-{n}")


# -- registry -------------------------------------------------------------------


@dataclass
class CatalogEntry:
    name: str
    matroid: Matroid
    provenance: str
    expected_census: dict | None = None
    points: PointConfiguration | None = field(default=None, repr=False)


def _counts(independent: int, simple: int, multiple: int) -> dict:
    return {"independent": independent, "simple": simple, "multiple": multiple}


def _uniform_entry(n: int, r: int) -> CatalogEntry:
    if not 1 <= r <= n:
        raise ParameterOutOfRange(f"uniform needs 1 <= r <= n, got n={n}, r={r}")
    M = uniform(n, r)
    M.name = f"uniform-{n}-{r}"
    k = comb(n, r - 1)
    return CatalogEntry(M.name, M, "uniform matroid: every r-subset is a basis", _counts(k, k, 0))


def _apex_entry(d: int, n: int) -> CatalogEntry:
    P = apex_configuration(d, n)
    M = from_points(P, name=f"apex-{d}-{n}")
    k = comb(n - 1, d - 1)
    return CatalogEntry(
        M.name,
        M,
        "general position points on the rational moment curve in a (d-1)-flat plus one apex point",
        _counts(k, k, 1),
        P,
    )


_FIXED = {
    "ag32": lambda: CatalogEntry(
        "ag32", ag32(), "binary affine cube AG(3,2): all 14 four-point planes", _counts(0, 0, 14)
    ),
    "ag32_prime": lambda: CatalogEntry(
        "ag32_prime",
        ag32_prime(),
        "AG(3,2) with the twisted plane {2,4,5,7} relaxed; {1,3,6,8} stays a plane",
        _counts(4, 4, 13),
    ),
    "hansen": lambda: CatalogEntry(
        "hansen",
        hansen(),
        "six points, three on each of two skew lines (affine 3-space)",
        _counts(0, 6, 0),
        PointConfiguration(HANSEN_POINTS, "affine"),
    ),
    "kelly_moser": lambda: CatalogEntry(
        "kelly_moser",
        kelly_moser(),
        "complete quadrilateral plus its three diagonals; elements are the seven lines",
        _counts(3, 3, 6),
        PointConfiguration(KELLY_MOSER_LINES, "linear"),
    ),
    "k4": lambda: CatalogEntry("k4", k4(), "cycle matroid of the complete graph on four vertices", _counts(3, 3, 4)),
}

DEFAULT_PARAMS = {"uniform": {"n": 8, "r": 4}, "apex": {"d": 3, "n": 8}}

_PARAMETRIC = re.compile(r"^(uniform|apex)-(\d+)-(\d+)$")


def names() -> list:
    """Published names; parametric families are listed with their defaults."""
    return sorted(_FIXED) + ["uniform-N-R", "apex-D-N"]


def get(name: str, **params) -> CatalogEntry:
    if name in _FIXED:
        return _FIXED[name]()
    m = _PARAMETRIC.match(name)
    if m:
        family, a, b = m.group(1), int(m.group(2)), int(m.group(3))
        return _uniform_entry(a, b) if family == "uniform" else _apex_entry(a, b)
    if name in DEFAULT_PARAMS:
        p = {**DEFAULT_PARAMS[name], **params}
        return _uniform_entry(p["n"], p["r"]) if name == "uniform" else _apex_entry(p["d"], p["n"])
    raise UnknownName(f"no catalog entry named {name!r}")


def standard_entries() -> list:
    """The fixed entries plus a few members of each family, used by the verify suites."""
    out = [get(k) for k in sorted(_FIXED)]
    out += [get(f"uniform-{n}-{r}") for n, r in [(5, 3), (8, 4), (9, 4)]]
    out += [get(f"apex-{d}-{n}") for d, n in [(2, 5), (3, 8), (3, 9)]]
    return out
