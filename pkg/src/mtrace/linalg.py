"""Exact linear algebra over a :class:`~mtrace.scalars.FieldSpec`.

Matrices keep only their nonzero entries (a dict of nonzero rows, each a dict
column -> value).  Tensor-product morphisms in this package are mostly
identities kronecker'd with something small, so this keeps composites of
dimension 10^5 and up cheap while the public surface stays that of a dense
row-major matrix.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from .errors import DimensionMismatch, FieldMismatch
from .scalars import FieldSpec

__all__ = ["Matrix", "SolutionSet", "rref", "solve_all", "kron", "id_kron", "nullspace_rows", "echelon"]


class Matrix:
    __slots__ = ("field", "rows", "cols", "_d", "_hash")

    def __init__(self, field: FieldSpec, rows: int, cols: int, data: dict | None = None):
        if rows < 0 or cols < 0:
            raise DimensionMismatch("negative matrix dimension")
        self.field = field
        self.rows = rows
        self.cols = cols
        self._d = data if data is not None else {}
        self._hash = None

    # -- constructors ----------------------------------------------------------
    @classmethod
    def from_lists(cls, field: FieldSpec, lists: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = len(lists)
        if cols is None:
            cols = len(lists[0]) if rows else 0
        data = {}
        for i, row in enumerate(lists):
            if len(row) != cols:
                raise DimensionMismatch(f"row {i} has length {len(row)}, expected {cols}")
            r = {}
            for j, x in enumerate(row):
                v = field.coerce(x)
                if v:
                    r[j] = v
            if r:
                data[i] = r
        return cls(field, rows, cols, data)

    @classmethod
    def from_flat(cls, field: FieldSpec, rows: int, cols: int, entries: Sequence) -> "Matrix":
        if len(entries) != rows * cols:
            raise DimensionMismatch(f"{len(entries)} entries for a {rows}x{cols} matrix")
        return cls.from_lists(field, [entries[i * cols:(i + 1) * cols] for i in range(rows)], cols)

    @classmethod
    def from_dict(cls, field: FieldSpec, rows: int, cols: int, entries: dict) -> "Matrix":
        """Build from {(i, j): value}; zero values are dropped."""
        data: dict = {}
        for (i, j), x in entries.items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise DimensionMismatch(f"entry {(i, j)} outside {rows}x{cols}")
            v = field.coerce(x)
            if v:
                data.setdefault(i, {})[j] = v
        return cls(field, rows, cols, data)

    @classmethod
    def from_columns(cls, field: FieldSpec, rows: int, columns: Sequence[dict]) -> "Matrix":
        data: dict = {}
        for j, col in enumerate(columns):
            for i, v in col.items():
                if v:
                    data.setdefault(i, {})[j] = v
        return cls(field, rows, len(columns), data)

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "Matrix":
        return cls(field, rows, cols, {})

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        one = field.one()
        return cls(field, n, n, {i: {i: one} for i in range(n)})

    @classmethod
    def scalar(cls, field: FieldSpec, c) -> "Matrix":
        c = field.coerce(c)
        return cls(field, 1, 1, {0: {0: c}} if c else {})

    # -- access ------------------------------------------------------------------
    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        row = self._d.get(i)
        if row is not None:
            v = row.get(j)
            if v is not None:
                return v
        return self.field.zero()

    def row_dict(self, i: int) -> dict:
        return self._d.get(i, {})

    def items(self):
        for i, row in self._d.items():
            for j, v in row.items():
                yield (i, j), v

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self._d.values())

    def to_lists(self) -> list:
        z = self.field.zero()
        out = [[z] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.items():
            out[i][j] = v
        return out

    @property
    def entries(self) -> list:
        """Row-major flat list of all entries."""
        return [x for row in self.to_lists() for x in row]

    def column_dicts(self) -> list:
        cols = [dict() for _ in range(self.cols)]
        for (i, j), v in self.items():
            cols[j][i] = v
        return cols

    def column(self, j: int) -> "Matrix":
        data = {i: {0: r[j]} for i, r in self._d.items() if j in r}
        return Matrix(self.field, self.rows, 1, data)

    def is_zero(self) -> bool:
        return not self._d

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == Matrix.identity(self.field, self.rows)

    def to_json(self):
        return [[self.field.encode(x) for x in row] for row in self.to_lists()]

    @classmethod
    def from_json(cls, field: FieldSpec, doc, cols: int | None = None) -> "Matrix":
        return cls.from_lists(field, [[field.parse(x) for x in row] for row in doc], cols)

    # -- algebra -----------------------------------------------------------------
    def _check(self, o: "Matrix"):
        if not isinstance(o, Matrix):
            raise TypeError(f"expected Matrix, got {type(o).__name__}")
        if o.field != self.field:
            raise FieldMismatch(f"{self.field} vs {o.field}")

    def __add__(self, o: "Matrix") -> "Matrix":
        self._check(o)
        if self.shape != o.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {o.shape}")
        data = {i: dict(r) for i, r in self._d.items()}
        for i, r in o._d.items():
            tgt = data.setdefault(i, {})
            for j, v in r.items():
                nv = tgt.get(j, 0) + v
                if nv:
                    tgt[j] = nv
                else:
                    tgt.pop(j, None)
            if not tgt:
                del data[i]
        return Matrix(self.field, self.rows, self.cols, data)

    def __neg__(self) -> "Matrix":
        return Matrix(self.field, self.rows, self.cols, {i: {j: -v for j, v in r.items()} for i, r in self._d.items()})

    def __sub__(self, o: "Matrix") -> "Matrix":
        return self + (-o)

    def scale(self, c) -> "Matrix":
        c = self.field.coerce(c)
        if not c:
            return Matrix.zeros(self.field, self.rows, self.cols)
        if c == 1:
            return self
        return Matrix(self.field, self.rows, self.cols, {i: {j: c * v for j, v in r.items()} for i, r in self._d.items()})

    def __rmul__(self, c) -> "Matrix":
        if isinstance(c, Matrix):
            return NotImplemented
        return self.scale(c)

    def __mul__(self, c) -> "Matrix":
        if isinstance(c, Matrix):
            raise TypeError("use @ for matrix products")
        return self.scale(c)

    def __matmul__(self, o: "Matrix") -> "Matrix":
        self._check(o)
        if self.cols != o.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {o.shape}")
        od = o._d
        out = {}
        for i, row in self._d.items():
            acc: dict = {}
            for k, a in row.items():
                orow = od.get(k)
                if orow:
                    for j, b in orow.items():
                        acc[j] = acc.get(j, 0) + a * b
            acc = {j: v for j, v in acc.items() if v}
            if acc:
                out[i] = acc
        return Matrix(self.field, self.rows, o.cols, out)

    @property
    def T(self) -> "Matrix":
        data: dict = {}
        for (i, j), v in self.items():
            data.setdefault(j, {})[i] = v
        return Matrix(self.field, self.cols, self.rows, data)

    def transpose(self) -> "Matrix":
        return self.T

    def __eq__(self, o) -> bool:
        if not isinstance(o, Matrix):
            return NotImplemented
        return self.field == o.field and self.shape == o.shape and self._d == o._d

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, frozenset((k, v) for k, v in self.items())))
        return self._hash

    def __repr__(self):
        if self.rows * self.cols <= 36:
            return f"Matrix({self.to_lists()})"
        return f"Matrix<{self.rows}x{self.cols}, nnz={self.nnz}>"

    def trace(self):
        if self.rows != self.cols:
            raise DimensionMismatch("trace of a non-square matrix")
        t = self.field.zero()
        for i, r in self._d.items():
            v = r.get(i)
            if v is not None:
                t = t + v
        return t

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        cmap = {c: k for k, c in enumerate(cols)}
        data = {}
        for a, i in enumerate(rows):
            r = self._d.get(i)
            if r:
                nr = {cmap[j]: v for j, v in r.items() if j in cmap}
                if nr:
                    data[a] = nr
        return Matrix(self.field, len(rows), len(cols), data)

    def hstack(self, *others: "Matrix") -> "Matrix":
        data = {i: dict(r) for i, r in self._d.items()}
        off = self.cols
        for o in others:
            self._check(o)
            if o.rows != self.rows:
                raise DimensionMismatch("hstack row mismatch")
            for i, r in o._d.items():
                tgt = data.setdefault(i, {})
                for j, v in r.items():
                    tgt[j + off] = v
            off += o.cols
        return Matrix(self.field, self.rows, off, data)

    def vstack(self, *others: "Matrix") -> "Matrix":
        data = {i: dict(r) for i, r in self._d.items()}
        off = self.rows
        for o in others:
            self._check(o)
            if o.cols != self.cols:
                raise DimensionMismatch("vstack column mismatch")
            for i, r in o._d.items():
                data[i + off] = dict(r)
            off += o.rows
        return Matrix(self.field, off, self.cols, data)

    def vec(self) -> dict:
        """Row-major vectorization as a sparse dict index -> value."""
        return {i * self.cols + j: v for (i, j), v in self.items()}

    def rank(self) -> int:
        return rref(self)[1]

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise DimensionMismatch("inverse of a non-square matrix")
        sol = solve_all(self, Matrix.identity(self.field, self.rows))
        if sol.particular is None or sol.kernel_basis:
            raise ZeroDivisionError("matrix is singular")
        return sol.particular

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def nullspace(self) -> list:
        """Basis of {x : self @ x = 0} as column matrices."""
        vecs = nullspace_rows([r for _, r in sorted(self._d.items())], self.cols, self.field)
        return [Matrix.from_columns(self.field, self.cols, [v]) for v in vecs]

    def column_space(self) -> "Matrix":
        """Matrix whose columns form a basis of the column space (pivot columns)."""
        _, _, pivots = rref(self)
        return self.submatrix(range(self.rows), pivots)


# -- elimination core -----------------------------------------------------------

def echelon(rows: Iterable[dict], ncols: int, limit: int | None = None):
    """Incremental reduced row echelon form with leading-column pivots.

    ``rows`` are sparse dicts; columns >= ``limit`` never become pivots (they
    carry right-hand sides).  Returns ``(pivots, occ, consistent)`` where
    ``pivots`` maps pivot column -> normalized reduced row and ``occ`` maps a
    non-pivot column to the set of pivot rows that mention it.
    """
    if limit is None:
        limit = ncols
    piv: dict = {}
    occ: dict = defaultdict(set)
    consistent = True
    for src in rows:
        r = dict(src)
        for c in [c for c in r if c in piv]:
            v = r.get(c)
            if not v:
                continue
            for cc, pv in piv[c].items():
                nv = r.get(cc, 0) - v * pv
                if nv:
                    r[cc] = nv
                else:
                    r.pop(cc, None)
        if not r:
            continue
        lead = min(r)
        if lead >= limit:
            consistent = False
            continue
        inv = 1 / r[lead]
        if inv != 1:
            r = {c: v * inv for c, v in r.items()}
        for pc in occ.pop(lead, ()):
            prow = piv[pc]
            v = prow.pop(lead)
            for cc, rv in r.items():
                if cc == lead:
                    continue
                nv = prow.get(cc, 0) - v * rv
                if nv:
                    prow[cc] = nv
                    occ[cc].add(pc)
                else:
                    prow.pop(cc, None)
                    s = occ.get(cc)
                    if s is not None:
                        s.discard(pc)
        piv[lead] = r
        for cc in r:
            if cc != lead:
                occ[cc].add(lead)
    return piv, occ, consistent


def nullspace_rows(rows: Iterable[dict], ncols: int, field: FieldSpec) -> list:
    """Kernel basis (sparse dict vectors) of the homogeneous system given by ``rows``."""
    piv, occ, _ = echelon(rows, ncols)
    one = field.one()
    out = []
    for f in range(ncols):
        if f in piv:
            continue
        v = {f: one}
        for p in occ.get(f, ()):
            v[p] = -piv[p][f]
        out.append(v)
    return out


def rref(m: Matrix):
    """Reduced row echelon form: ``(R, rank, pivot_columns)``."""
    piv, _, _ = echelon((r for _, r in sorted(m._d.items())), m.cols)
    pivots = sorted(piv)
    data = {k: piv[c] for k, c in enumerate(pivots)}
    return Matrix(m.field, m.rows, m.cols, data), len(pivots), pivots


@dataclass
class SolutionSet:
    """Affine solution set ``particular + span(kernel_basis)`` of A X = B."""

    particular: Matrix | None
    kernel_basis: list = dc_field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return self.particular is not None


def solve_all(A: Matrix, B: Matrix) -> SolutionSet:
    """Full solution set of A X = B (column by column).

    The particular solution is the RREF back-substitution with every free
    variable set to zero, so it is canonical.
    """
    A._check(B)
    if A.rows != B.rows:
        raise DimensionMismatch(f"A has {A.rows} rows, B has {B.rows}")
    n = A.cols
    rows = []
    for i in range(A.rows):
        r = dict(A._d.get(i, {}))
        for j, v in B._d.get(i, {}).items():
            r[n + j] = v
        if r:
            rows.append(r)
    piv, occ, consistent = echelon(rows, n + B.cols, limit=n)
    kernel = []
    for f in range(n):
        if f in piv:
            continue
        col = {f: A.field.one()}
        for p in occ.get(f, ()):
            col[p] = -piv[p][f]
        kernel.append(Matrix.from_columns(A.field, n, [col]))
    if not consistent:
        return SolutionSet(None, kernel)
    data = {}
    for p, r in piv.items():
        pr = {j - n: v for j, v in r.items() if j >= n}
        if pr:
            data[p] = pr
    return SolutionSet(Matrix(A.field, n, B.cols, data), kernel)


def kron(A: Matrix, B: Matrix) -> Matrix:
    """Kronecker product; basis pair (i, j) sits at index i * dim_B + j."""
    A._check(B)
    data = {}
    br, bc = B.rows, B.cols
    for i, ra in A._d.items():
        for k, rb in B._d.items():
            row = {}
            for j, a in ra.items():
                base = j * bc
                for l, b in rb.items():
                    row[base + l] = a * b
            data[i * br + k] = row
    return Matrix(A.field, A.rows * br, A.cols * bc, data)


def id_kron(left: int, M: Matrix, right: int) -> Matrix:
    """kron(I_left, M, I_right) without materializing the identities."""
    data = {}
    mr, mc = M.rows, M.cols
    for l in range(left):
        for i, r in M._d.items():
            rbase = (l * mr + i) * right
            for t in range(right):
                data[rbase + t] = {(l * mc + j) * right + t: v for j, v in r.items()}
    return Matrix(M.field, left * mr * right, left * mc * right, data)
