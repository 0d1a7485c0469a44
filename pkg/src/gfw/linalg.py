"""Exact rational linear algebra on sparse matrices.

Entries are :class:`fractions.Fraction`; every routine is exact.  Elimination
works on integer rows (each row is scaled to clear denominators) and picks,
column by column, the pivot of smallest absolute value among the remaining
rows.  Rows are kept primitive (content divided out) to curb coefficient
growth.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

__all__ = ["Matrix", "rank", "kernel_basis", "solve", "row_reduce"]


class Matrix:
    """A ``rows x cols`` rational matrix stored as ``{(i, j): value}``.

    Zero entries are never stored.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int,
                 entries: Mapping[tuple[int, int], object] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        self.rows = rows
        self.cols = cols
        self.entries: dict[tuple[int, int], Fraction] = {}
        for (i, j), v in (entries or {}).items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise IndexError(f"entry ({i}, {j}) outside {rows}x{cols} matrix")
            v = Fraction(v)
            if v:
                self.entries[i, j] = v

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[object]]) -> "Matrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(nrows, ncols, {(i, j): v for i, r in enumerate(rows)
                                  for j, v in enumerate(r) if v})

    @classmethod
    def from_columns(cls, nrows: int,
                     columns: Sequence[Mapping[int, object]]) -> "Matrix":
        """Build from sparse columns given as ``{row: value}`` mappings."""
        return cls(nrows, len(columns), {(i, j): v for j, col in enumerate(columns)
                                         for i, v in col.items()})

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        return self.entries.get(key, Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols}, nnz={len(self.entries)})"

    def to_rows(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def apply(self, v: Sequence[object]) -> list[Fraction]:
        """Return ``self @ v``."""
        if len(v) != self.cols:
            raise ValueError(f"vector of length {len(v)} for {self.cols} columns")
        out = [Fraction(0)] * self.rows
        for (i, j), a in self.entries.items():
            if v[j]:
                out[i] += a * v[j]
        return out

    def hstack(self, other: "Matrix") -> "Matrix":
        if other.rows != self.rows:
            raise ValueError("row counts differ")
        ent = dict(self.entries)
        ent.update({(i, j + self.cols): v for (i, j), v in other.entries.items()})
        return Matrix(self.rows, self.cols + other.cols, ent)


def _integer_rows(m: Matrix, extra: Sequence[object] | None = None) -> list[dict[int, int]]:
    rows: list[dict[int, Fraction]] = [{} for _ in range(m.rows)]
    for (i, j), v in m.entries.items():
        rows[i][j] = v
    if extra is not None:
        for i, v in enumerate(extra):
            v = Fraction(v)
            if v:
                rows[i][m.cols] = v
    out = []
    for r in rows:
        if not r:
            out.append({})
            continue
        den = lcm(*(v.denominator for v in r.values()))
        out.append(_primitive({j: int(v * den) for j, v in r.items()}))
    return out


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {j: v // g for j, v in row.items()}
    return row


def _echelon(rows: list[dict[int, int]], ncols: int) -> list[tuple[int, dict[int, int]]]:
    """Fraction-free forward elimination over columns ``0..ncols-1``.

    Returns ``(pivot column, row)`` pairs in pivot order.  Non-pivot rows left
    over are appended with pivot column ``-1`` (they are zero on the first
    ``ncols`` columns but may carry an augmented entry).
    """
    # column -> set of live row indices having a nonzero there
    live = {i for i, r in enumerate(rows) if r}
    by_col: dict[int, set[int]] = {}
    for i in live:
        for j in rows[i]:
            by_col.setdefault(j, set()).add(i)
    pivots: list[tuple[int, dict[int, int]]] = []
    for j in range(ncols):
        cand = by_col.get(j)
        if not cand:
            continue
        p = min(cand, key=lambda i: (abs(rows[i][j]), i))
        prow = rows[p]
        a = prow[j]
        live.discard(p)
        for j2 in prow:
            by_col[j2].discard(p)
        for i in sorted(by_col[j]):
            row = rows[i]
            b = row[j]
            g = gcd(a, b)
            fa, fb = a // g, b // g
            new = {k: v * fa for k, v in row.items()}
            for k, v in prow.items():
                w = new.get(k, 0) - fb * v
                if w:
                    new[k] = w
                else:
                    new.pop(k, None)
            new = _primitive(new)
            for k in row:
                if k not in new:
                    by_col[k].discard(i)
            for k in new:
                by_col.setdefault(k, set()).add(i)
            rows[i] = new
            if not new:
                live.discard(i)
        pivots.append((j, prow))
    for i in sorted(live):
        pivots.append((-1, rows[i]))
    return pivots


def rank(m: Matrix) -> int:
    """Rank of ``m`` over the rationals."""
    ech = _echelon(_integer_rows(m), m.cols)
    return sum(1 for j, _ in ech if j >= 0)


def _back_substitute(pivots, ncols, free_values: Mapping[int, Fraction],
                     rhs_col: int | None) -> list[Fraction]:
    x = [Fraction(0)] * ncols
    for j, v in free_values.items():
        x[j] = v
    for j, row in reversed(pivots):
        s = Fraction(row.get(rhs_col, 0)) if rhs_col is not None else Fraction(0)
        for k, v in row.items():
            if k != j and k != rhs_col and x[k]:
                s -= v * x[k]
        x[j] = s / row[j]
    return x


def kernel_basis(m: Matrix) -> list[list[Fraction]]:
    """Basis of the null space, one vector per free column.

    The vector for free column ``f`` has a 1 in position ``f`` and zeros at the
    other free columns, so the basis is the reduced-echelon one and does not
    depend on how the matrix was assembled.
    """
    ech = [(j, r) for j, r in _echelon(_integer_rows(m), m.cols) if j >= 0]
    pivot_cols = {j for j, _ in ech}
    basis = []
    for f in range(m.cols):
        if f in pivot_cols:
            continue
        basis.append(_back_substitute(ech, m.cols, {f: Fraction(1)}, None))
    return basis


def solve(m: Matrix, b: Sequence[object]) -> list[Fraction] | None:
    """Some ``x`` with ``m @ x == b``, or ``None`` if ``b`` is not in the column span.

    Free variables are set to zero.
    """
    if len(b) != m.rows:
        raise ValueError(f"right-hand side has length {len(b)}, expected {m.rows}")
    ech = _echelon(_integer_rows(m, b), m.cols)
    pivots = []
    for j, row in ech:
        if j < 0:
            if row.get(m.cols, 0):
                return None
        else:
            pivots.append((j, row))
    return _back_substitute(pivots, m.cols, {}, m.cols)


def row_reduce(vectors: Iterable[Sequence[object]], length: int) -> list[list[Fraction]]:
    """Reduced row echelon basis of the span of ``vectors``."""
    vectors = list(vectors)
    if not vectors:
        return []
    m = Matrix.from_rows([list(v) for v in vectors]) if length else Matrix(len(vectors), 0)
    ech = [(j, r) for j, r in _echelon(_integer_rows(m), length) if j >= 0]
    rref: list[dict[int, Fraction]] = []
    for j, row in ech:
        rref.append({k: Fraction(v, row[j]) for k, v in row.items()})
    # clear above pivots, bottom-up
    for a in range(len(rref) - 1, -1, -1):
        j = ech[a][0]
        for b in range(a):
            c = rref[b].get(j)
            if c:
                for k, v in rref[a].items():
                    w = rref[b].get(k, 0) - c * v
                    if w:
                        rref[b][k] = w
                    else:
                        rref[b].pop(k, None)
    out = []
    for r in rref:
        vec = [Fraction(0)] * length
        for k, v in r.items():
            vec[k] = v
        out.append(vec)
    return out
