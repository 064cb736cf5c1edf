"""m-partitions, standard m-tableaux and content strings."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import NamedTuple, Sequence


class ShapeError(ValueError):
    """Malformed m-partition or tableau text."""

    def __init__(self, message: str, pos: int | None = None):
        super().__init__(message if pos is None else f"{message} (at position {pos})")
        self.pos = pos


class MNode(NamedTuple):
    """A box: row, column (both from 1) and component (from 1)."""

    row: int
    col: int
    pos: int

    @property
    def key(self):
        return (self.pos, self.row, self.col)

    @property
    def diagonal(self) -> int:
        return self.col - self.row


def _check_partition(p: Sequence[int]) -> tuple:
    p = tuple(p)
    for a, b in zip(p, p[1:]):
        if b > a:
            raise ShapeError(f"parts {p} are not weakly decreasing")
    if any(x <= 0 for x in p):
        raise ShapeError(f"parts {p} must be positive")
    return p


@dataclass(frozen=True, order=True)
class MPartition:
    """An m-tuple of partitions."""

    parts: tuple

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(_check_partition(p) for p in self.parts))
        if not self.parts:
            raise ShapeError("an m-partition needs at least one component")

    @classmethod
    def of(cls, *parts) -> "MPartition":
        return cls(tuple(tuple(p) for p in parts))

    @classmethod
    def parse(cls, text: str, m: int | None = None) -> "MPartition":
        """Read the notation ``[[2,1],[],[1]]``."""
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ShapeError(f"cannot parse shape {text!r}: {e.msg}", e.pos) from None
        if not isinstance(data, list) or not data:
            raise ShapeError(f"shape {text!r} must be a nonempty list of lists", 0)
        for i, comp in enumerate(data):
            if not isinstance(comp, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in comp):
                raise ShapeError(f"component {i + 1} of {text!r} is not a list of integers", _locate(text, i))
        try:
            shape = cls(tuple(tuple(c) for c in data))
        except ShapeError as e:
            raise ShapeError(f"invalid shape {text!r}: {e}", 0) from None
        if m is not None and shape.m != m:
            raise ShapeError(f"shape {text!r} has {shape.m} components but m = {m}", 0)
        return shape

    @property
    def m(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(sum(p) for p in self.parts)

    def nodes(self) -> list[MNode]:
        return [MNode(r + 1, c + 1, k + 1) for k, p in enumerate(self.parts)
                for r, length in enumerate(p) for c in range(length)]

    def removable(self) -> list[MNode]:
        out = []
        for k, p in enumerate(self.parts):
            for r, length in enumerate(p):
                if r + 1 == len(p) or p[r + 1] < length:
                    out.append(MNode(r + 1, length, k + 1))
        return out

    def addable(self) -> list[MNode]:
        out = []
        for k, p in enumerate(self.parts):
            for r in range(len(p) + 1):
                length = p[r] if r < len(p) else 0
                if r == 0 or p[r - 1] > length:
                    out.append(MNode(r + 1, length + 1, k + 1))
        return out

    def add(self, node: MNode) -> "MPartition":
        parts = [list(p) for p in self.parts]
        p = parts[node.pos - 1]
        if node.row == len(p) + 1 and node.col == 1:
            p.append(1)
        elif node.row <= len(p) and p[node.row - 1] + 1 == node.col:
            p[node.row - 1] += 1
        else:
            raise ShapeError(f"{node} is not addable to {self}")
        return MPartition(tuple(tuple(x) for x in parts))

    def remove(self, node: MNode) -> "MPartition":
        if node not in self.removable():
            raise ShapeError(f"{node} is not removable from {self}")
        parts = [list(p) for p in self.parts]
        p = parts[node.pos - 1]
        p[node.row - 1] -= 1
        if p[node.row - 1] == 0:
            p.pop()
        return MPartition(tuple(tuple(x) for x in parts))

    def to_text(self) -> str:
        return "[" + ",".join("[" + ",".join(map(str, p)) + "]" for p in self.parts) + "]"

    def __str__(self):
        return self.to_text()


def _locate(text: str, index: int) -> int:
    depth = 0
    count = -1
    for i, ch in enumerate(text):
        if ch == "[":
            depth += 1
            if depth == 2:
                count += 1
                if count == index:
                    return i
        elif ch == "]":
            depth -= 1
    return 0


def mpartitions(m: int, n: int) -> list[MPartition]:
    """All m-partitions of n, in a fixed deterministic order."""
    return list(_mpartitions(m, n))


@lru_cache(maxsize=None)
def _partitions(n: int, maxpart: int | None = None) -> tuple:
    if maxpart is None:
        maxpart = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, maxpart), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions(n: int) -> list[tuple]:
    return list(_partitions(n))


@lru_cache(maxsize=None)
def _mpartitions(m: int, n: int) -> tuple:
    if m == 1:
        return tuple(MPartition((p,)) for p in _partitions(n))
    out = []
    for a in range(n, -1, -1):
        for p in _partitions(a):
            for rest in _mpartitions(m - 1, n - a):
                out.append(MPartition((p,) + rest.parts))
    return tuple(out)


@dataclass(frozen=True)
class StandardMTableau:
    """A standard filling; ``cells[i-1]`` is the node holding entry i."""

    shape: MPartition
    cells: tuple

    @property
    def n(self) -> int:
        return len(self.cells)

    @property
    def key(self):
        return tuple(c.key for c in self.cells)

    def __lt__(self, other):
        return self.key < other.key

    def node(self, i: int) -> MNode:
        return self.cells[i - 1]

    def content(self, i: int) -> tuple:
        """(k, z): the content of entry i is vk * q^(2z)."""
        c = self.cells[i - 1]
        return (c.pos, c.diagonal)

    def content_string(self) -> tuple:
        return tuple((c.pos, c.diagonal) for c in self.cells)

    def rows(self) -> list:
        grid = [[[0] * length for length in p] for p in self.shape.parts]
        for i, c in enumerate(self.cells, start=1):
            grid[c.pos - 1][c.row - 1][c.col - 1] = i
        return grid

    def restrict(self) -> "StandardMTableau":
        """Remove the largest entry."""
        last = self.cells[-1]
        return StandardMTableau(self.shape.remove(last), self.cells[:-1])

    def to_text(self) -> str:
        return json.dumps(self.rows(), separators=(",", ":"))

    def __str__(self):
        return self.to_text()

    @classmethod
    def from_rows(cls, rows) -> "StandardMTableau":
        shape = MPartition(tuple(tuple(len(r) for r in comp) for comp in rows))
        n = shape.size
        cells: list = [None] * n
        for k, comp in enumerate(rows):
            for r, row in enumerate(comp):
                for c, x in enumerate(row):
                    if not isinstance(x, int) or not 1 <= x <= n or cells[x - 1] is not None:
                        raise ShapeError(f"entries must be 1..{n} each used once, found {x!r}")
                    cells[x - 1] = MNode(r + 1, c + 1, k + 1)
        t = cls(shape, tuple(cells))
        if not is_standard(t):
            raise ShapeError(f"tableau {t.to_text()} is not standard")
        return t

    @classmethod
    def parse(cls, text: str) -> "StandardMTableau":
        """Read the notation ``[[[1,2],[3]],[[4]]]``."""
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ShapeError(f"cannot parse tableau {text!r}: {e.msg}", e.pos) from None
        if not isinstance(data, list) or not all(isinstance(c, list) and all(isinstance(r, list) for r in c) for c in data):
            raise ShapeError(f"tableau {text!r} must be a list of lists of rows", 0)
        return cls.from_rows(data)


def is_standard(t: StandardMTableau) -> bool:
    grid = t.rows()
    for comp in grid:
        for r, row in enumerate(comp):
            for c, x in enumerate(row):
                if c > 0 and row[c - 1] >= x:
                    return False
                if r > 0 and comp[r - 1][c] >= x:
                    return False
    return True


def standard_tableaux(shape: MPartition) -> list[StandardMTableau]:
    """All standard m-tableaux of ``shape`` in canonical order."""
    return list(_standard(shape))


def tableau_order_key(t: StandardMTableau):
    """Canonical order: lexicographic in the (component, row, column) of 1, 2, ..., n."""
    return t.key


@lru_cache(maxsize=None)
def _standard(shape: MPartition) -> tuple:
    if shape.size == 0:
        return (StandardMTableau(shape, ()),)
    out = []
    for node in shape.removable():
        for t in _standard(shape.remove(node)):
            out.append(StandardMTableau(shape, t.cells + (node,)))
    out.sort(key=tableau_order_key)
    return tuple(out)


def apply_adjacent_transposition(t: StandardMTableau, i: int):
    """Swap i and i+1; None when the result is not standard."""
    if not 1 <= i < t.n:
        raise ValueError(f"s_{i} is not defined for n = {t.n}")
    a, b = t.cells[i - 1], t.cells[i]
    if a.pos == b.pos and (a.row == b.row or a.col == b.col):
        return None
    cells = list(t.cells)
    cells[i - 1], cells[i] = b, a
    return StandardMTableau(t.shape, tuple(cells))


def hook_dimension(p: Sequence[int]) -> int:
    n = sum(p)
    prod = 1
    conj = [sum(1 for x in p if x > c) for c in range(p[0])] if p else []
    for r, length in enumerate(p):
        for c in range(length):
            prod *= (length - c - 1) + (conj[c] - r - 1) + 1
    return factorial(n) // prod


def dim_mpartition(shape: MPartition) -> int:
    """Number of standard m-tableaux: multinomial times hook-length dimensions."""
    n = shape.size
    out = factorial(n)
    for p in shape.parts:
        out = out // factorial(sum(p)) * hook_dimension(p)
    return out


class ContentCheck(NamedTuple):
    ok: bool
    condition: str | None = None
    index: int | None = None

    def __bool__(self):
        return self.ok


def is_content_string(s: Sequence[tuple], m: int) -> ContentCheck:
    """Check (c1)-(c3) for a string of contents (k, z) = vk * q^(2z).

    (c1) the first entry is some vk;
    (c2) if entry j is vk q^(2z) with z != 0, vk q^(2(z-1)) or vk q^(2(z+1)) occurs earlier;
    (c3) between two equal entries vk q^(2z) both vk q^(2(z-1)) and vk q^(2(z+1)) occur.
    Indices in the report count from 1.
    """
    last: dict = {}
    for j, (k, z) in enumerate(s, start=1):
        if not 1 <= k <= m:
            return ContentCheck(False, "range", j)
        if j == 1:
            if z != 0:
                return ContentCheck(False, "c1", 1)
        elif z != 0 and (k, z - 1) not in last and (k, z + 1) not in last:
            return ContentCheck(False, "c2", j)
        prev = last.get((k, z))
        if prev is not None:
            lo, hi = (k, z - 1), (k, z + 1)
            between = set(s[prev:j - 1])
            if lo not in between or hi not in between:
                return ContentCheck(False, "c3", j)
        last[(k, z)] = j
    return ContentCheck(True)


def string_to_tableau(s: Sequence[tuple], m: int) -> StandardMTableau:
    """Inverse of content_string: fill each diagonal from its top end down."""
    check = is_content_string(s, m)
    if not check:
        raise ShapeError(f"not a content string: condition {check.condition} fails at index {check.index}")
    taken: dict = {}
    cells = []
    for k, z in s:
        r = taken.get((k, z), max(1, 1 - z))
        cells.append(MNode(r, r + z, k))
        taken[(k, z)] = r + 1
    parts = []
    for k in range(1, m + 1):
        rows: dict = {}
        for c in cells:
            if c.pos == k:
                rows[c.row] = max(rows.get(c.row, 0), c.col)
        parts.append(tuple(rows[r] for r in sorted(rows)))
    shape = MPartition(tuple(parts))
    t = StandardMTableau(shape, tuple(cells))
    if sorted(c for c in cells) != sorted(shape.nodes()) or not is_standard(t):
        raise ShapeError("content string does not produce a standard tableau")
    return t
