"""Sparse matrices over an exact field (RatFn or Fraction) and exact linear algebra."""

from __future__ import annotations

from fractions import Fraction


class Matrix:
    """Row-sparse matrix: ``rows[i]`` maps a column index to a nonzero entry.

    Entries may be any exact field elements supporting + - * / and truthiness
    as a zero test. ``zero`` and ``one`` supply the field constants.
    """

    __slots__ = ("nrows", "ncols", "rows", "zero", "one")

    def __init__(self, nrows: int, ncols: int, rows=None, zero=Fraction(0), one=Fraction(1)):
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows if rows is not None else [dict() for _ in range(nrows)]
        self.zero = zero
        self.one = one

    # construction
    @classmethod
    def identity(cls, n: int, zero, one) -> "Matrix":
        return cls(n, n, [{i: one} for i in range(n)], zero, one)

    @classmethod
    def diagonal(cls, entries, zero, one) -> "Matrix":
        entries = list(entries)
        return cls(len(entries), len(entries), [{i: x} if x else {} for i, x in enumerate(entries)], zero, one)

    @classmethod
    def from_dense(cls, data, zero=Fraction(0), one=Fraction(1)) -> "Matrix":
        data = [list(r) for r in data]
        ncols = len(data[0]) if data else 0
        rows = []
        for r in data:
            if len(r) != ncols:
                raise ValueError("ragged matrix")
            rows.append({j: x for j, x in enumerate(r) if x})
        return cls(len(rows), ncols, rows, zero, one)

    def like(self, nrows=None, ncols=None) -> "Matrix":
        return Matrix(self.nrows if nrows is None else nrows, self.ncols if ncols is None else ncols,
                      None, self.zero, self.one)

    def copy(self) -> "Matrix":
        return Matrix(self.nrows, self.ncols, [dict(r) for r in self.rows], self.zero, self.one)

    # access
    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i].get(j, self.zero)

    def __setitem__(self, ij, x):
        i, j = ij
        if x:
            self.rows[i][j] = x
        else:
            self.rows[i].pop(j, None)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def to_dense(self) -> list:
        return [[r.get(j, self.zero) for j in range(self.ncols)] for r in self.rows]

    def column(self, j: int) -> dict:
        return {i: r[j] for i, r in enumerate(self.rows) if j in r}

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows)

    # arithmetic
    def _same_shape(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        out = self.copy()
        for i, r in enumerate(other.rows):
            row = out.rows[i]
            for j, x in r.items():
                s = row[j] + x if j in row else x
                if s:
                    row[j] = s
                else:
                    row.pop(j, None)
        return out

    def __neg__(self):
        return Matrix(self.nrows, self.ncols, [{j: -x for j, x in r.items()} for r in self.rows], self.zero, self.one)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, c) -> "Matrix":
        if not c:
            return self.like()
        return Matrix(self.nrows, self.ncols, [{j: x * c for j, x in r.items()} for r in self.rows], self.zero, self.one)

    def __mul__(self, c):
        if isinstance(c, Matrix):
            return self @ c
        return self.scale(c)

    __rmul__ = scale

    def add_scalar(self, c) -> "Matrix":
        """self + c * Id."""
        if self.nrows != self.ncols:
            raise ValueError("add_scalar needs a square matrix")
        out = self.copy()
        if c:
            for i, row in enumerate(out.rows):
                s = row[i] + c if i in row else c
                if s:
                    row[i] = s
                else:
                    row.pop(i, None)
        return out

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        orows = other.rows
        out = []
        for r in self.rows:
            acc: dict = {}
            for k, a in r.items():
                for j, b in orows[k].items():
                    p = a * b
                    acc[j] = acc[j] + p if j in acc else p
            out.append({j: x for j, x in acc.items() if x})
        return Matrix(self.nrows, other.ncols, out, self.zero, self.one)

    def apply(self, vec: dict) -> dict:
        """Matrix times a sparse column vector {index: value}."""
        acc: dict = {}
        cols = self.transpose().rows
        for j, x in vec.items():
            for i, a in cols[j].items():
                p = a * x
                acc[i] = acc[i] + p if i in acc else p
        return {i: x for i, x in acc.items() if x}

    def transpose(self) -> "Matrix":
        out = [dict() for _ in range(self.ncols)]
        for i, r in enumerate(self.rows):
            for j, x in r.items():
                out[j][i] = x
        return Matrix(self.ncols, self.nrows, out, self.zero, self.one)

    @property
    def T(self):
        return self.transpose()

    def map(self, fn, zero=None, one=None) -> "Matrix":
        rows = []
        for r in self.rows:
            nr = {}
            for j, x in r.items():
                y = fn(x)
                if y:
                    nr[j] = y
            rows.append(nr)
        return Matrix(self.nrows, self.ncols, rows,
                      self.zero if zero is None else zero, self.one if one is None else one)

    def submatrix(self, idx) -> "Matrix":
        pos = {g: l for l, g in enumerate(idx)}
        rows = [{pos[j]: x for j, x in self.rows[i].items() if j in pos} for i in idx]
        return Matrix(len(idx), len(idx), rows, self.zero, self.one)

    # predicates
    def is_zero(self) -> bool:
        return all(not r for r in self.rows)

    def is_diagonal(self) -> bool:
        return all(all(j == i for j in r) for i, r in enumerate(self.rows))

    def diagonal_entries(self) -> list:
        return [r.get(i, self.zero) for i, r in enumerate(self.rows)]

    def trace(self):
        t = self.zero
        for i, r in enumerate(self.rows):
            if i in r:
                t = t + r[i]
        return t

    def first_difference(self, other: "Matrix"):
        """(i, j) of the first entry where the matrices differ, or None."""
        self._same_shape(other)
        for i, (a, b) in enumerate(zip(self.rows, other.rows)):
            for j in sorted(set(a) | set(b)):
                x = a.get(j)
                y = b.get(j)
                if x is None or y is None:
                    if (x if x is not None else y):
                        return (i, j)
                elif not x == y:
                    return (i, j)
        return None

    def equals(self, other: "Matrix") -> bool:
        return self.first_difference(other) is None

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.equals(other)

    __hash__ = None

    def inverse(self) -> "Matrix":
        if self.nrows != self.ncols:
            raise ValueError("only square matrices are invertible")
        if self.is_diagonal():
            d = self.diagonal_entries()
            if any(not x for x in d):
                raise ZeroDivisionError("singular matrix")
            return Matrix.diagonal([self.one / x for x in d], self.zero, self.one)
        n = self.nrows
        a = [dict(r) for r in self.rows]
        inv = [{i: self.one} for i in range(n)]
        for c in range(n):
            piv = None
            for r in range(c, n):
                if a[r].get(c):
                    piv = r
                    break
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            a[c], a[piv] = a[piv], a[c]
            inv[c], inv[piv] = inv[piv], inv[c]
            p = a[c][c]
            a[c] = {j: x / p for j, x in a[c].items()}
            inv[c] = {j: x / p for j, x in inv[c].items()}
            for r in range(n):
                if r != c and c in a[r]:
                    f = a[r][c]
                    _axpy(a[r], a[c], f)
                    _axpy(inv[r], inv[c], f)
        return Matrix(n, n, inv, self.zero, self.one)

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"


def _axpy(row: dict, piv: dict, f):
    """row -= f * piv, dropping zeros."""
    for j, x in piv.items():
        s = row[j] - f * x if j in row else -(f * x)
        if s:
            row[j] = s
        else:
            row.pop(j, None)


def row_echelon(rows: list, ncols: int | None = None):
    """Reduce sparse rows (dicts) over an exact field; returns the pivot rows.

    Each returned row is normalized to 1 at its pivot, and pivots are distinct.
    """
    pivots: dict = {}
    for r in rows:
        r = {j: x for j, x in r.items() if x}
        while r:
            c = min(r)
            if c in pivots:
                _axpy(r, pivots[c], r[c])
            else:
                p = r[c]
                pivots[c] = {j: x / p for j, x in r.items()}
                break
    return pivots


def rank(rows: list) -> int:
    return len(row_echelon(rows))


def matrix_rank(a: Matrix) -> int:
    return rank([dict(r) for r in a.rows])


def nullspace(rows: list, ncols: int, one=Fraction(1)) -> list:
    """Basis of {x : r . x = 0 for every row r}, as sparse dicts."""
    piv = row_echelon(rows)
    # back-substitute to reduced form, last pivot first
    reduced: dict = {}
    for c in sorted(piv, reverse=True):
        row = dict(piv[c])
        for c2 in sorted(j for j in row if j != c and j in reduced):
            if c2 in row:
                _axpy(row, reduced[c2], row[c2])
        reduced[c] = row
    free = [j for j in range(ncols) if j not in reduced]
    basis = []
    for f in free:
        vec = {f: one}
        for c, row in reduced.items():
            if f in row:
                vec[c] = -row[f]
        basis.append(vec)
    return basis
