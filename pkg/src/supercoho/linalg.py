"""Exact sparse linear algebra over the rationals.

Entries are Python ints when integral and ``fractions.Fraction`` otherwise;
zero entries are never stored.  Elimination is fraction-free: every row is
scaled to a primitive integer vector before it enters the echelon, rows are
combined by integer cross-multiplication and divided by their content, and
pivots are chosen by a fixed rule (leading column of each incoming row, rows
in index order).  All results are therefore deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

Rat = Fraction

DENSE_LIMIT = 64


def rat(x) -> int | Fraction:
    """Normalize a number (or "num/den" string) to int or reduced Fraction."""
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        x = Fraction(x.strip())
    elif not isinstance(x, Fraction):
        x = Fraction(x)
    if x.denominator == 1:
        return x.numerator
    return x


def rat_str(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rat(s) -> int | Fraction:
    if isinstance(s, (int, Fraction)):
        return rat(s)
    return rat(Fraction(str(s)))


class Mat:
    """Immutable sparse rational matrix, stored row-wise.

    ``Mat(rows, cols, entries)`` accepts a mapping ``{(i, j): value}``.
    """

    __slots__ = ("rows", "cols", "_rows", "_hash")

    def __init__(self, rows: int, cols: int, entries=None):
        self.rows = int(rows)
        self.cols = int(cols)
        self._hash = None
        data: dict[int, dict[int, int | Fraction]] = {}
        if entries:
            items = entries.items() if hasattr(entries, "items") else entries
            for (i, j), v in items:
                if not (0 <= i < self.rows and 0 <= j < self.cols):
                    raise IndexError(f"entry ({i}, {j}) outside {self.rows}x{self.cols}")
                v = rat(v)
                if v:
                    row = data.setdefault(i, {})
                    s = row.get(j, 0) + v
                    if s:
                        row[j] = s
                    else:
                        del row[j]
                        if not row:
                            del data[i]
        self._rows = data

    @classmethod
    def _from_rows(cls, rows: int, cols: int, data: dict) -> "Mat":
        m = cls.__new__(cls)
        m.rows, m.cols, m._hash = rows, cols, None
        m._rows = {i: r for i, r in data.items() if r}
        return m

    # -- constructors ----------------------------------------------------
    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Mat":
        return cls._from_rows(rows, cols, {})

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls._from_rows(n, n, {i: {i: 1} for i in range(n)})

    @classmethod
    def diag(cls, values: Sequence) -> "Mat":
        n = len(values)
        return cls._from_rows(n, n, {i: {i: rat(v)} for i, v in enumerate(values) if v})

    @classmethod
    def from_dense(cls, rows_list: Sequence[Sequence], cols: Optional[int] = None) -> "Mat":
        nr = len(rows_list)
        nc = cols if cols is not None else (len(rows_list[0]) if nr else 0)
        data = {}
        for i, r in enumerate(rows_list):
            if len(r) != nc:
                raise ValueError("ragged dense matrix")
            row = {j: rat(v) for j, v in enumerate(r) if v}
            if row:
                data[i] = row
        return cls._from_rows(nr, nc, data)

    @classmethod
    def from_columns(cls, columns: Sequence, rows: Optional[int] = None) -> "Mat":
        """Columns may be dense sequences or sparse ``{index: value}`` dicts."""
        if rows is None:
            if not columns:
                raise ValueError("row count needed for an empty column list")
            first = columns[0]
            if isinstance(first, dict):
                raise ValueError("row count needed for sparse columns")
            rows = len(first)
        data: dict[int, dict] = {}
        for j, c in enumerate(columns):
            items = c.items() if isinstance(c, dict) else enumerate(c)
            for i, v in items:
                if v:
                    if not 0 <= i < rows:
                        raise IndexError("column entry out of range")
                    data.setdefault(i, {})[j] = rat(v)
        return cls._from_rows(rows, len(columns), data)

    # -- access ------------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> dict[tuple[int, int], int | Fraction]:
        return {(i, j): v for i, r in self._rows.items() for j, v in r.items()}

    def nnz(self) -> int:
        return sum(len(r) for r in self._rows.values())

    def __getitem__(self, key):
        i, j = key
        return self._rows.get(i, {}).get(j, 0)

    def row(self, i: int) -> dict:
        return dict(self._rows.get(i, {}))

    def row_items(self):
        return ((i, self._rows[i]) for i in sorted(self._rows))

    def column(self, j: int) -> dict:
        return {i: r[j] for i, r in self._rows.items() if j in r}

    def columns(self) -> list[dict]:
        cols: list[dict] = [{} for _ in range(self.cols)]
        for i in sorted(self._rows):
            for j, v in self._rows[i].items():
                cols[j][i] = v
        return cols

    def to_dense(self) -> list[list]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for i, r in self._rows.items():
            for j, v in r.items():
                out[i][j] = v
        return out

    def is_zero(self) -> bool:
        return not self._rows

    def is_diagonal(self) -> bool:
        return all(len(r) == 1 and i in r for i, r in self._rows.items())

    def diagonal(self) -> list:
        return [self._rows.get(i, {}).get(i, 0) for i in range(min(self.rows, self.cols))]

    # -- arithmetic --------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, tuple(sorted(self.entries.items()))))
        return self._hash

    def __repr__(self) -> str:
        return f"Mat({self.rows}x{self.cols}, nnz={self.nnz()})"

    def _check_same(self, other: "Mat"):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "Mat") -> "Mat":
        self._check_same(other)
        data = {i: dict(r) for i, r in self._rows.items()}
        for i, r in other._rows.items():
            row = data.setdefault(i, {})
            for j, v in r.items():
                s = row.get(j, 0) + v
                if s:
                    row[j] = rat(s)
                else:
                    row.pop(j, None)
        return Mat._from_rows(self.rows, self.cols, data)

    def __neg__(self) -> "Mat":
        return Mat._from_rows(self.rows, self.cols,
                              {i: {j: -v for j, v in r.items()} for i, r in self._rows.items()})

    def __sub__(self, other: "Mat") -> "Mat":
        return self + (-other)

    def scale(self, c) -> "Mat":
        c = rat(c)
        if not c:
            return Mat.zeros(self.rows, self.cols)
        return Mat._from_rows(self.rows, self.cols,
                              {i: {j: rat(v * c) for j, v in r.items()} for i, r in self._rows.items()})

    def __rmul__(self, c) -> "Mat":
        return self.scale(c)

    def __matmul__(self, other):
        if isinstance(other, Mat):
            if self.cols != other.rows:
                raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
            orows = other._rows
            data = {}
            for i, r in self._rows.items():
                acc: dict = {}
                for k, a in r.items():
                    ok = orows.get(k)
                    if ok is None:
                        continue
                    for j, b in ok.items():
                        acc[j] = acc.get(j, 0) + a * b
                acc = {j: rat(v) for j, v in acc.items() if v}
                if acc:
                    data[i] = acc
            return Mat._from_rows(self.rows, other.cols, data)
        return self.apply(other)

    def apply(self, vec):
        """Multiply by a vector given densely (list) or sparsely (dict)."""
        if isinstance(vec, dict):
            out = {}
            for i, r in self._rows.items():
                s = 0
                for j, a in r.items():
                    b = vec.get(j)
                    if b:
                        s += a * b
                if s:
                    out[i] = rat(s)
            return out
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        out = [0] * self.rows
        for i, r in self._rows.items():
            s = 0
            for j, a in r.items():
                b = vec[j]
                if b:
                    s += a * b
            out[i] = rat(s)
        return out

    @property
    def T(self) -> "Mat":
        data: dict[int, dict] = {}
        for i, r in self._rows.items():
            for j, v in r.items():
                data.setdefault(j, {})[i] = v
        return Mat._from_rows(self.cols, self.rows, data)

    def kron(self, other: "Mat") -> "Mat":
        """Kronecker product; row index of the result is ``i * other.rows + k``."""
        orr, oc = other.rows, other.cols
        data = {}
        for i, r in self._rows.items():
            for k, ro in other._rows.items():
                row = {}
                for j, a in r.items():
                    base = j * oc
                    for l, b in ro.items():
                        row[base + l] = rat(a * b)
                data[i * orr + k] = row
        return Mat._from_rows(self.rows * orr, self.cols * oc, data)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Mat":
        cpos = {c: n for n, c in enumerate(cols)}
        data = {}
        for n, i in enumerate(rows):
            r = self._rows.get(i)
            if not r:
                continue
            row = {cpos[j]: v for j, v in r.items() if j in cpos}
            if row:
                data[n] = row
        return Mat._from_rows(len(rows), len(cols), data)

    def select_columns(self, cols: Sequence[int]) -> "Mat":
        return self.submatrix(range(self.rows), cols)

    def hstack(self, other: "Mat") -> "Mat":
        if self.rows != other.rows:
            raise ValueError("row count mismatch in hstack")
        data = {i: dict(r) for i, r in self._rows.items()}
        for i, r in other._rows.items():
            row = data.setdefault(i, {})
            for j, v in r.items():
                row[self.cols + j] = v
        return Mat._from_rows(self.rows, self.cols + other.cols, data)

    def vstack(self, other: "Mat") -> "Mat":
        if self.cols != other.cols:
            raise ValueError("column count mismatch in vstack")
        data = {i: dict(r) for i, r in self._rows.items()}
        for i, r in other._rows.items():
            data[self.rows + i] = dict(r)
        return Mat._from_rows(self.rows + other.rows, self.cols, data)

    @staticmethod
    def stack(mats: Sequence["Mat"], cols: Optional[int] = None) -> "Mat":
        if not mats:
            return Mat.zeros(0, cols or 0)
        data = {}
        off = 0
        for m in mats:
            if m.cols != mats[0].cols:
                raise ValueError("column count mismatch in stack")
            for i, r in m._rows.items():
                data[off + i] = dict(r)
            off += m.rows
        return Mat._from_rows(off, mats[0].cols, data)

    def power(self, k: int) -> "Mat":
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        out = Mat.identity(self.rows)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    # -- serialization ---------------------------------------------------
    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[i, j, rat_str(v)] for (i, j), v in sorted(self.entries.items())],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Mat":
        return cls(obj["rows"], obj["cols"], {(int(i), int(j)): parse_rat(v) for i, j, v in obj["entries"]})


# ---------------------------------------------------------------------------
# fraction-free elimination

def _primitive(row: dict) -> dict:
    """Scale a sparse rational row to a primitive integer row with positive lead."""
    den = 1
    for v in row.values():
        if isinstance(v, Fraction):
            d = v.denominator
            den = den * d // gcd(den, d)
    if den != 1:
        row = {j: int(v * den) for j, v in row.items()}
    elif any(type(v) is not int for v in row.values()):
        row = {j: int(v) for j, v in row.items()}
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g != 1:
        row = {j: v // g for j, v in row.items()}
    return row


def _combine(row: dict, prow: dict, c: int) -> dict:
    """Integer elimination of column ``c`` from ``row`` using pivot row ``prow``."""
    a = prow[c]
    b = row[c]
    g = gcd(a, b)
    a //= g
    b //= g
    out = {j: a * v for j, v in row.items()} if a != 1 else dict(row)
    for j, v in prow.items():
        s = out.get(j, 0) - b * v
        if s:
            out[j] = s
        else:
            out.pop(j, None)
    if out:
        out = _primitive(out)
    return out


class Echelon:
    """Incremental row echelon form over the integers (fraction-free).

    Rows are inserted one at a time; each is reduced against existing pivots
    in increasing column order until its leading column is new.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: dict[int, dict] = {}

    def reduce(self, row: dict) -> dict:
        row = {j: v for j, v in row.items() if v}
        if not row:
            return row
        row = _primitive(row)
        pivots = self.pivots
        while row:
            c = min(row)
            prow = pivots.get(c)
            if prow is None:
                break
            row = _combine(row, prow, c)
        return row

    def reduce_full(self, row: dict) -> dict:
        """Reduce every pivot column of ``row`` (not just the leading ones)."""
        row = {j: v for j, v in row.items() if v}
        if not row:
            return row
        row = _primitive(row)
        pivots = self.pivots
        done = -1
        while True:
            cs = [j for j in row if j > done and j in pivots]
            if not cs:
                return row
            c = min(cs)
            row = _combine(row, pivots[c], c)
            if not row:
                return row
            done = c

    def insert(self, row: dict) -> bool:
        row = self.reduce(row)
        if not row:
            return False
        self.pivots[min(row)] = row
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def rref(self) -> dict[int, dict]:
        """Reduced rows keyed by pivot column, pivots scaled to 1."""
        cols = sorted(self.pivots)
        rows = {c: dict(self.pivots[c]) for c in cols}
        for c in reversed(cols):
            prow = rows[c]
            for c2 in cols:
                if c2 >= c:
                    break
                r = rows[c2]
                if c in r:
                    rows[c2] = _combine(r, prow, c)
        out = {}
        for c in cols:
            r = rows[c]
            p = r[c]
            out[c] = {j: rat(Fraction(v, p)) for j, v in r.items()}
        return out


def _echelon_of(m: Mat) -> Echelon:
    ech = Echelon(m.cols)
    for _, r in m.row_items():
        ech.insert(r)
    return ech


def rank(m: Mat) -> int:
    """Exact rank over Q."""
    return _echelon_of(m if m.cols <= m.rows else m.T).rank


def rref(m: Mat) -> tuple[dict[int, dict], list[int]]:
    """Return (pivot rows keyed by pivot column, free columns)."""
    ech = _echelon_of(m)
    red = ech.rref()
    free = [j for j in range(m.cols) if j not in red]
    return red, free


def kernel_from_rref(red: dict[int, dict], free: Sequence[int]) -> list[dict]:
    """Sparse kernel vectors; vector ``k`` is 1 at ``free[k]`` and 0 at the other free columns."""
    by_free: dict[int, dict] = {f: {f: 1} for f in free}
    for c, r in red.items():
        for j, v in r.items():
            if j != c:
                by_free[j][c] = rat(-v)
    return [by_free[f] for f in free]


def kernel_basis(m: Mat) -> list[list]:
    """Basis of the right kernel as dense column vectors, deterministic."""
    red, free = rref(m)
    out = []
    for vec in kernel_from_rref(red, free):
        dense = [0] * m.cols
        for j, v in vec.items():
            dense[j] = v
        out.append(dense)
    return out


def kernel_matrix(m: Mat) -> tuple[Mat, list[int]]:
    """Kernel basis as the columns of a matrix, plus the free (coordinate) columns."""
    red, free = rref(m)
    return Mat.from_columns(kernel_from_rref(red, free), rows=m.cols), free


def solve(m: Mat, b: Sequence) -> Optional[list]:
    """A solution ``x`` of ``m x = b`` (free variables set to 0), or None."""
    if len(b) != m.rows:
        raise ValueError(f"right-hand side has length {len(b)}, expected {m.rows}")
    aug = m.hstack(Mat.from_columns([list(b)], rows=m.rows))
    red, _ = rref(aug)
    if m.cols in red:
        return None
    x = [0] * m.cols
    for c, r in red.items():
        x[c] = rat(r.get(m.cols, 0))
    return x


def span_basis(vectors: Iterable[Sequence], length: Optional[int] = None) -> list[list]:
    """Canonical (reduced echelon) basis of the span of the given vectors."""
    vectors = [list(v) for v in vectors]
    if length is None:
        if not vectors:
            return []
        length = len(vectors[0])
    ech = Echelon(length)
    for v in vectors:
        if len(v) != length:
            raise ValueError("vectors of unequal length")
        ech.insert({j: rat(x) for j, x in enumerate(v) if x})
    out = []
    for c, r in sorted(ech.rref().items()):
        dense = [0] * length
        for j, v in r.items():
            dense[j] = v
        out.append(dense)
    return out


def intersect(span_a: Sequence[Sequence], span_b: Sequence[Sequence]) -> list[list]:
    """Canonical basis of span(A) ∩ span(B)."""
    a = span_basis(span_a)
    b = span_basis(span_b)
    if not a or not b:
        return []
    n = len(a[0])
    if len(b[0]) != n:
        raise ValueError("vectors of unequal length")
    big = Mat.from_columns(a, rows=n).hstack(-Mat.from_columns(b, rows=n))
    red, free = rref(big)
    amat = Mat.from_columns(a, rows=n)
    vecs = []
    for k in kernel_from_rref(red, free):
        coeff = [k.get(j, 0) for j in range(len(a))]
        vecs.append(amat.apply(coeff))
    return span_basis(vecs, n)


def in_span(basis: Mat, vec: dict | Sequence) -> bool:
    """Membership test of a vector in the column span of ``basis``."""
    if not isinstance(vec, dict):
        vec = {i: v for i, v in enumerate(vec) if v}
    ech = _echelon_of(basis.T)
    return not ech.reduce_full(vec)


def independent_columns(m: Mat) -> list[int]:
    """Greedy (left-to-right) maximal independent subset of columns."""
    ech = Echelon(m.rows)
    keep = []
    for j, col in enumerate(m.columns()):
        if ech.insert(col):
            keep.append(j)
    return keep


def left_annihilator(basis: Mat) -> Mat:
    """Rows spanning the functionals that vanish on the column span of ``basis``."""
    if basis.cols == 0:
        return Mat.identity(basis.rows)
    km, _ = kernel_matrix(basis.T)
    return km.T
