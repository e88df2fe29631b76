"""The line-oriented ``.pav`` matroid file format.

::

    # comment
    name ag32_prime
    elements 8
    rank 4
    rep paving
    set { 1 2 3 4 }
    ...

``name`` is optional; the other header lines are required and must appear
in this order before any ``set`` line.  Serialization is canonical: sets are
sorted internally and the set list is sorted lexicographically.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import Matroid, from_circuits, from_paving, to_paving
from .errors import MatroidError

REPS = ("paving", "circuits")
_TOKEN = re.compile(r"^\S+$")
_SET = re.compile(r"^set\s*\{([^{}]*)\}$")


class FileSyntaxError(ValueError):
    def __init__(self, line: int | None, message: str):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")


class SemanticError(ValueError):
    def __init__(self, cause: Exception):
        self.cause = cause
        super().__init__(f"{type(cause).__name__}: {cause}")


@dataclass(frozen=True)
class MatroidFile:
    name: str | None
    elements: int
    rank: int
    rep: str
    sets: tuple

    def canonical(self) -> MatroidFile:
        sets = tuple(sorted({tuple(sorted(s)) for s in self.sets}))
        return MatroidFile(self.name, self.elements, self.rank, self.rep, sets)


def parse(data) -> MatroidFile:
    text = data.decode("utf-8") if isinstance(data, (bytes, bytearray)) else data
    fields = {}
    order = ("name", "elements", "rank", "rep")
    sets = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _SET.match(line)
        if m:
            if "rep" not in fields:
                missing = next(k for k in order[1:] if k not in fields)
                raise FileSyntaxError(lineno, f"missing field '{missing}' before set lines")
            try:
                sets.append(tuple(int(tok) for tok in m.group(1).split()))
            except ValueError:
                raise FileSyntaxError(lineno, "set members must be integers") from None
            continue
        key, _, value = line.partition(" ")
        value = value.strip()
        if key not in order:
            raise FileSyntaxError(lineno, f"unknown directive '{key}'")
        if key in fields:
            raise FileSyntaxError(lineno, f"duplicate field '{key}'")
        if sets:
            raise FileSyntaxError(lineno, f"field '{key}' after set lines")
        position = order.index(key)
        for earlier in order[1:position]:
            if earlier not in fields:
                raise FileSyntaxError(lineno, f"missing field '{earlier}' before '{key}'")
        if any(order.index(k) > position for k in fields):
            raise FileSyntaxError(lineno, f"field '{key}' out of order")
        if not value or not _TOKEN.match(value):
            raise FileSyntaxError(lineno, f"field '{key}' needs a single token")
        if key in ("elements", "rank"):
            if not value.isdigit():
                raise FileSyntaxError(lineno, f"field '{key}' must be a nonnegative integer")
            fields[key] = int(value)
        elif key == "rep":
            if value not in REPS:
                raise FileSyntaxError(lineno, f"rep must be one of {'|'.join(REPS)}")
            fields[key] = value
        else:
            fields[key] = value
    for key in order[1:]:
        if key not in fields:
            raise FileSyntaxError(None, f"missing field '{key}'")
    return MatroidFile(fields.get("name"), fields["elements"], fields["rank"], fields["rep"], tuple(sets))


def serialize(mf: MatroidFile) -> str:
    mf = mf.canonical()
    lines = []
    if mf.name is not None:
        lines.append(f"name {mf.name}")
    lines += [f"elements {mf.elements}", f"rank {mf.rank}", f"rep {mf.rep}"]
    lines += ["set { " + " ".join(map(str, s)) + " }" for s in mf.sets]
    return "\n".join(lines) + "\n"


def to_matroid(mf: MatroidFile) -> Matroid:
    """Build the matroid; validation failures surface as :class:`SemanticError`."""
    try:
        if mf.rep == "paving":
            return from_paving(mf.elements, mf.rank, mf.sets, name=mf.name)
        M = from_circuits(mf.elements, mf.sets, name=mf.name)
    except MatroidError as exc:
        raise SemanticError(exc) from exc
    if M.r != mf.rank:
        raise SemanticError(MatroidError(f"declared rank {mf.rank} but circuits give rank {M.r}"))
    return M


def from_matroid(M: Matroid, name: str | None = None) -> MatroidFile:
    """Describe ``M``; paving matroids are always exported through their blocks."""
    if M.is_paving():
        P = to_paving(M)
        rep, sets = "paving", P.rep.sets()
    else:
        rep, sets = "circuits", M.circuits()
    token = name if name is not None else M.name
    if token is not None and not _TOKEN.match(token):
        token = re.sub(r"\s+", "_", token)
    return MatroidFile(token, M.n, M.r, rep, tuple(sets)).canonical()


def load(path) -> Matroid:
    with open(path, "rb") as fh:
        return to_matroid(parse(fh.read()))


def dump(M: Matroid, path, name: str | None = None) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize(from_matroid(M, name)))

