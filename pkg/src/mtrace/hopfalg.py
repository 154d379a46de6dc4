"""Finite-dimensional pivotal Hopf algebras and associative algebras on a basis.

Elements are dense coordinate lists over the basis.  Structure constants are
kept sparse: ``mult[(i, j)]`` is a list of ``(k, c)`` pairs meaning
``e_i e_j = sum c e_k``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .errors import AxiomViolation, DimensionMismatch, NotSplit, SchemaError
from .linalg import Matrix, echelon, nullspace_rows, solve_all
from .scalars import FieldSpec, roots_in_field

__all__ = [
    "AlgebraOnBasis", "HopfAlgebra", "load_hopf", "radical", "primitive_idempotents",
    "nilpotency_index",
]


def _span_basis(vectors, dim):
    """Row-reduced basis (dense lists) of the span of ``vectors``."""
    rows = [{i: x for i, x in enumerate(v) if x} for v in vectors]
    piv, _, _ = echelon(rows, dim)
    return piv


def _dense(d: dict, dim: int, zero):
    out = [zero] * dim
    for i, v in d.items():
        out[i] = v
    return out


class AlgebraOnBasis:
    """Associative unital algebra given by structure constants."""

    def __init__(self, field: FieldSpec, dim: int, mult: dict, unit: Sequence, matrices: list | None = None,
                 check: bool = True):
        self.field = field
        self.dim = dim
        self.mult = mult
        self.unit = [field.coerce(x) for x in unit]
        # optional faithful realization (e.g. End(M) as actual matrices)
        self.matrices = matrices
        if check:
            self.check_axioms()

    # -- element arithmetic ----------------------------------------------------
    def zero(self):
        return [self.field.zero()] * self.dim

    def basis_vector(self, i: int):
        v = self.zero()
        v[i] = self.field.one()
        return v

    def mul(self, u, v):
        out = self.zero()
        nz_u = [(i, a) for i, a in enumerate(u) if a]
        nz_v = [(j, b) for j, b in enumerate(v) if b]
        for i, a in nz_u:
            for j, b in nz_v:
                ab = a * b
                for k, c in self.mult.get((i, j), ()):
                    out[k] = out[k] + ab * c
        return out

    def add(self, u, v):
        return [a + b for a, b in zip(u, v)]

    def sub(self, u, v):
        return [a - b for a, b in zip(u, v)]

    def scale(self, c, u):
        return [c * a for a in u]

    def is_zero(self, u) -> bool:
        return not any(u)

    def left_mult_matrix(self, u) -> Matrix:
        cols = [{k: x for k, x in enumerate(self.mul(u, self.basis_vector(j))) if x} for j in range(self.dim)]
        return Matrix.from_columns(self.field, self.dim, cols)

    def right_mult_matrix(self, u) -> Matrix:
        cols = [{k: x for k, x in enumerate(self.mul(self.basis_vector(j), u)) if x} for j in range(self.dim)]
        return Matrix.from_columns(self.field, self.dim, cols)

    def to_matrix(self, u) -> Matrix:
        """Image of ``u`` in the stored matrix realization."""
        if self.matrices is None:
            raise ValueError("algebra has no matrix realization")
        out = Matrix.zeros(self.field, self.matrices[0].rows, self.matrices[0].cols) if self.matrices else None
        for c, m in zip(u, self.matrices):
            if c:
                out = out + m.scale(c)
        return out

    def check_axioms(self):
        n = self.dim
        for i in range(n):
            e = self.basis_vector(i)
            if self.mul(self.unit, e) != e or self.mul(e, self.unit) != e:
                raise AxiomViolation("unitality", (i,))
        for i in range(n):
            for j in range(n):
                eij = self.mul(self.basis_vector(i), self.basis_vector(j))
                for k in range(n):
                    ek = self.basis_vector(k)
                    if self.mul(eij, ek) != self.mul(self.basis_vector(i), self.mul(self.basis_vector(j), ek)):
                        raise AxiomViolation("associativity", (i, j, k))

    # -- construction from matrices -------------------------------------------
    @classmethod
    def from_matrices(cls, field: FieldSpec, mats: list) -> "AlgebraOnBasis":
        """Algebra spanned by linearly independent square matrices closed under product."""
        if not mats:
            raise ValueError("empty basis")
        coords = _Coordinates(field, mats)
        mult = {}
        for i, a in enumerate(mats):
            for j, b in enumerate(mats):
                c = coords(a @ b)
                nz = [(k, x) for k, x in enumerate(c) if x]
                if nz:
                    mult[(i, j)] = nz
        unit = coords(Matrix.identity(field, mats[0].rows))
        alg = cls(field, len(mats), mult, unit, matrices=list(mats), check=False)
        alg.coords = coords
        return alg


class _Coordinates:
    """Reads coordinates of a matrix in the span of a fixed independent family."""

    def __init__(self, field, mats):
        self.field = field
        self.k = len(mats)
        self.shape = mats[0].shape
        cols = mats[0].cols
        stacked = Matrix(field, self.k, mats[0].rows * cols,
                         {i: m.vec() for i, m in enumerate(mats) if not m.is_zero()})
        piv, _, _ = echelon([stacked.row_dict(i) for i in range(self.k)], stacked.cols)
        if len(piv) != self.k:
            raise ValueError("matrices are linearly dependent")
        self.positions = sorted(piv)
        # solve c . M[:, positions] = target[positions]
        sub = stacked.submatrix(range(self.k), self.positions)
        self.inv = sub.inverse()
        self.mats = mats

    def __call__(self, m: Matrix, check: bool = True):
        v = m.vec()
        row = {a: v[p] for a, p in enumerate(self.positions) if p in v}
        c = [self.field.zero()] * self.k
        for a, x in row.items():
            for j, y in self.inv.row_dict(a).items():
                c[j] = c[j] + x * y
        if check:
            recon = Matrix.zeros(self.field, *self.shape)
            for x, b in zip(c, self.mats):
                if x:
                    recon = recon + b.scale(x)
            if recon != m:
                raise ValueError("matrix is not in the span")
        return c


# -- radical / idempotents -----------------------------------------------------

def radical(A: AlgebraOnBasis) -> list:
    """Basis of the Jacobson radical via the kernel of the trace form (char 0)."""
    A.field.require_char0("radical")
    n = A.dim
    zero = A.field.zero()
    # tr(L_c) = sum_i coefficient of e_i in e_c e_i
    trL = [zero] * n
    for c in range(n):
        t = zero
        for i in range(n):
            for k, x in A.mult.get((c, i), ()):
                if k == i:
                    t = t + x
        trL[c] = t
    rows = []
    for a in range(n):
        r = {}
        for b in range(n):
            t = zero
            for k, x in A.mult.get((a, b), ()):
                t = t + x * trL[k]
            if t:
                r[b] = t
        if r:
            rows.append(r)
    vecs = nullspace_rows(rows, n, A.field)
    basis = [_dense(v, n, zero) for v in vecs]
    if nilpotency_index(A, basis) is None:
        raise AssertionError("trace-form kernel is not nilpotent")
    return basis


def nilpotency_index(A: AlgebraOnBasis, ideal: list):
    """Least k with ideal^k = 0 (1 for the zero ideal), or None if not nilpotent."""
    k = 1
    power = _reduced(ideal, A.dim)
    while power:
        if k > A.dim + 1:
            return None
        prods = [A.mul(j, p) for j in ideal for p in power]
        power = _reduced(prods, A.dim)
        k += 1
    return k


def _reduced(vectors, dim):
    piv = _span_basis(vectors, dim)
    if not piv:
        return []
    zero = next(x for v in vectors for x in v) * 0
    return [_dense(r, dim, zero) for _, r in sorted(piv.items())]


class _Quotient:
    """A/J presented on the complement of the pivot columns of J's RREF."""

    def __init__(self, A: AlgebraOnBasis, J: list):
        self.A = A
        n = A.dim
        self.jpiv = _span_basis(J, n)
        self.comp = [c for c in range(n) if c not in self.jpiv]
        self.index = {c: a for a, c in enumerate(self.comp)}
        m = len(self.comp)
        mult = {}
        for a, c in enumerate(self.comp):
            for b, d in enumerate(self.comp):
                w = self.project(A.mul(A.basis_vector(c), A.basis_vector(d)))
                nz = [(k, x) for k, x in enumerate(w) if x]
                if nz:
                    mult[(a, b)] = nz
        self.B = AlgebraOnBasis(A.field, m, mult, self.project(A.unit), check=False)

    def project(self, v):
        v = list(v)
        for p, row in self.jpiv.items():
            c = v[p]
            if c:
                for j, x in row.items():
                    v[j] = v[j] - c * x
        return [v[c] for c in self.comp]

    def lift(self, w):
        v = self.A.zero()
        for a, c in enumerate(self.comp):
            v[c] = w[a]
        return v


def _span_dim(vectors, dim):
    return len(_span_basis(vectors, dim))


def _min_poly(B: AlgebraOnBasis, z, e):
    """Coefficients (low first, monic) of the minimal polynomial of z in the unital corner with unit e."""
    powers = [e]
    while True:
        nxt = B.mul(powers[-1], z)
        cand = powers + [nxt]
        A = Matrix.from_columns(B.field, B.dim, [{i: x for i, x in enumerate(p) if x} for p in powers])
        rhs = Matrix.from_columns(B.field, B.dim, [{i: x for i, x in enumerate(nxt) if x}])
        sol = solve_all(A, rhs)
        if sol.particular is not None:
            c = [sol.particular[i, 0] for i in range(len(powers))]
            return [-x for x in c] + [B.field.one()]
        powers = cand
        if len(powers) > B.dim + 1:
            raise AssertionError("minimal polynomial degree exceeds dimension")


def _idempotent_generator(B: AlgebraOnBasis, L: list):
    """f in span(L) with l f = l for all l in L (exists when B is semisimple)."""
    d = len(L)
    rows, rhs = [], []
    prods = [[B.mul(l, m) for m in L] for l in L]
    cols = []
    for i, l in enumerate(L):
        for t in range(B.dim):
            cols.append(({m: prods[i][m][t] for m in range(d) if prods[i][m][t]}, l[t]))
    A = Matrix(B.field, len(cols), d, {r: c for r, (c, _) in enumerate(cols) if c})
    bvec = Matrix(B.field, len(cols), 1, {r: {0: v} for r, (_, v) in enumerate(cols) if v})
    sol = solve_all(A, bvec)
    if sol.particular is None:
        return None
    f = B.zero()
    for m in range(d):
        c = sol.particular[m, 0]
        if c:
            f = B.add(f, B.scale(c, L[m]))
    return f


def _split_semisimple(B: AlgebraOnBasis, e, rng: random.Random) -> list:
    n = B.dim
    corner = _reduced([B.mul(B.mul(e, B.basis_vector(i)), e) for i in range(n)], n)
    dimC = len(corner)
    if dimC <= 1:
        return [e]

    def proportional_to_e(z):
        return _span_dim([e, z], n) <= 1

    def try_element(z):
        if not any(z) or proportional_to_e(z):
            return None
        L = _reduced([B.mul(c, z) for c in corner], n)
        if 0 < len(L) < dimC:
            return L
        return None

    candidates = list(corner)
    candidates += [B.mul(a, b) for a in corner for b in corner]
    for _ in range(6):
        z = B.zero()
        for c in corner:
            z = B.add(z, B.scale(B.field.coerce(rng.randint(-3, 3)), c))
        candidates.append(z)
    # zero divisors first, then eigenvalue shifts
    for z in candidates:
        L = try_element(z)
        if L:
            break
    else:
        L = None
        for z in candidates:
            if not any(z) or proportional_to_e(z):
                continue
            for lam in roots_in_field(_min_poly(B, z, e), B.field):
                L = try_element(B.sub(z, B.scale(lam, e)))
                if L:
                    break
            if L:
                break
    if not L:
        raise NotSplit(f"semisimple corner of dimension {dimC} has no zero divisor over {B.field}; "
                       "enlarge the field")
    f = _idempotent_generator(B, L)
    if f is None or B.mul(f, f) != f:
        raise NotSplit("could not extract an idempotent (algebra not semisimple?)")
    return _split_semisimple(B, f, rng) + _split_semisimple(B, B.sub(e, f), rng)


def _lift_idempotent(A: AlgebraOnBasis, x):
    for _ in range(A.dim + 2):
        x2 = A.mul(x, x)
        if x2 == x:
            return x
        x3 = A.mul(x2, x)
        x = A.sub(A.scale(A.field.coerce(3), x2), A.scale(A.field.coerce(2), x3))
    if A.mul(x, x) != x:
        raise AssertionError("idempotent lifting did not converge")
    return x


def primitive_idempotents(A: AlgebraOnBasis, seed: int = 0) -> list:
    """Complete set of orthogonal primitive idempotents (char 0, A/J split)."""
    A.field.require_char0("primitive_idempotents")
    J = radical(A)
    Q = _Quotient(A, J)
    B = Q.B
    rng = random.Random(seed)
    if B.dim == 0:
        return []
    ebar = _split_semisimple(B, B.unit, rng)
    if len(ebar) == 1:
        return [list(A.unit)]
    lifted = []
    rest = list(A.unit)
    for eb in ebar[:-1]:
        x = Q.lift(eb)
        x = A.mul(A.mul(rest, x), rest)
        f = _lift_idempotent(A, x)
        lifted.append(f)
        rest = A.sub(rest, f)
    lifted.append(rest)
    return lifted


# -- Hopf algebras -------------------------------------------------------------

def _sparse_mult_from_table(field, dim, table):
    out = {}
    for (i, j), lst in table.items():
        nz = [(k, field.coerce(c)) for k, c in lst if field.coerce(c)]
        if nz:
            out[(i, j)] = nz
    return out


@dataclass
class HopfAlgebra:
    """Structure constants of a finite-dimensional Hopf algebra with a pivot."""

    name: str
    field: FieldSpec
    dim: int
    basis: list
    mult: dict          # (i, j) -> [(k, c)]
    unit: list
    comult: dict        # i -> [((j, k), c)]
    counit: list
    antipode: Matrix    # column j holds S(e_j)
    pivot: list
    _cache: dict = dc_field(default_factory=dict, repr=False, compare=False)

    def __hash__(self):
        return id(self)

    def __eq__(self, other):
        return self is other

    @property
    def algebra(self) -> AlgebraOnBasis:
        if "algebra" not in self._cache:
            self._cache["algebra"] = AlgebraOnBasis(self.field, self.dim, self.mult, self.unit, check=False)
        return self._cache["algebra"]

    # element helpers (dense lists)
    def zero(self):
        return [self.field.zero()] * self.dim

    def e(self, i):
        v = self.zero()
        v[i] = self.field.one()
        return v

    def mul(self, u, v):
        return self.algebra.mul(u, v)

    def counit_of(self, u):
        t = self.field.zero()
        for a, c in zip(u, self.counit):
            if a and c:
                t = t + a * c
        return t

    def S(self, u):
        out = self.zero()
        for j, a in enumerate(u):
            if a:
                for i, c in self._antipode_cols[j].items():
                    out[i] = out[i] + a * c
        return out

    @property
    def _antipode_cols(self):
        if "S_cols" not in self._cache:
            self._cache["S_cols"] = self.antipode.column_dicts()
        return self._cache["S_cols"]

    def delta(self, u) -> dict:
        out: dict = {}
        for i, a in enumerate(u):
            if a:
                for jk, c in self.comult.get(i, ()):
                    out[jk] = out.get(jk, 0) + a * c
        return {k: v for k, v in out.items() if v}

    def index(self, name: str) -> int:
        return self.basis.index(name)

    @property
    def pivot_inverse(self) -> list:
        if "pivot_inv" not in self._cache:
            inv = _algebra_inverse(self.algebra, self.pivot)
            if inv is None:
                raise AxiomViolation("pivot invertible", ())
            self._cache["pivot_inv"] = inv
        return self._cache["pivot_inv"]

    @property
    def generators(self) -> list:
        """Basis indices generating the algebra (greedy), used to cut intertwiner systems."""
        if "gens" not in self._cache:
            self._cache["gens"] = _algebra_generators(self.algebra)
        return self._cache["gens"]

    # -- validation --------------------------------------------------------------
    def validate(self, check_pivot: bool = True) -> "HopfAlgebra":
        A = self.algebra
        A.check_axioms()
        n = self.dim
        one = self.field.one()

        def tensor3(d1, d2):
            out = {}
            for (a, b), c in d1.items():
                for t, x in d2(a, b).items():
                    out[t] = out.get(t, 0) + c * x
            return {k: v for k, v in out.items() if v}

        for i in range(n):
            d = self.delta(self.e(i))
            left = tensor3(d, lambda a, b: {(j, k, b): c for (j, k), c in self.delta(self.e(a)).items()})
            right = tensor3(d, lambda a, b: {(a, j, k): c for (j, k), c in self.delta(self.e(b)).items()})
            if left != right:
                raise AxiomViolation("coassociativity", (i,))
            lc = self.zero()
            rc = self.zero()
            for (a, b), c in d.items():
                lc[b] = lc[b] + c * self.counit[a]
                rc[a] = rc[a] + c * self.counit[b]
            if lc != self.e(i) or rc != self.e(i):
                raise AxiomViolation("counitality", (i,))
        if self.delta(self.unit) != {(j, k): a * b for j, a in enumerate(self.unit) for k, b in enumerate(self.unit) if a * b}:
            raise AxiomViolation("comultiplication unital", ())
        if self.counit_of(self.unit) != one:
            raise AxiomViolation("counit unital", ())
        for i in range(n):
            for j in range(n):
                prod = self.mul(self.e(i), self.e(j))
                if self.delta(prod) != _tensor_mul(self, self.delta(self.e(i)), self.delta(self.e(j))):
                    raise AxiomViolation("bialgebra compatibility", (i, j))
                if self.counit_of(prod) != self.counit[i] * self.counit[j]:
                    raise AxiomViolation("counit multiplicative", (i, j))
        for i in range(n):
            eu = [x * self.counit[i] for x in self.unit]
            l = self.zero()
            r = self.zero()
            for (a, b), c in self.delta(self.e(i)).items():
                l = A.add(l, [c * x for x in self.mul(self.S(self.e(a)), self.e(b))])
                r = A.add(r, [c * x for x in self.mul(self.e(a), self.S(self.e(b)))])
            if l != eu or r != eu:
                raise AxiomViolation("antipode", (i,))
        if check_pivot:
            g = self.pivot
            if self.delta(g) != {(j, k): a * b for j, a in enumerate(g) for k, b in enumerate(g) if a * b}:
                raise AxiomViolation("pivot grouplike", ())
            if self.counit_of(g) != one:
                raise AxiomViolation("pivot counit", ())
            ginv = _algebra_inverse(A, g)
            if ginv is None:
                raise AxiomViolation("pivot invertible", ())
            for i in range(n):
                if self.S(self.S(self.e(i))) != self.mul(self.mul(g, self.e(i)), ginv):
                    raise AxiomViolation("S^2 = conjugation by pivot", (i,),
                                         f"basis element {self.basis[i]!r}")
        return self

    # -- JSON ----------------------------------------------------------------------
    def to_json(self) -> dict:
        F = self.field
        return {
            "name": self.name,
            "field": F.to_json(),
            "dim": self.dim,
            "basis": list(self.basis),
            "unit": [F.encode(x) for x in self.unit],
            "mult": [{"i": i, "j": j, "out": [{"k": k, "c": F.encode(c)} for k, c in lst]}
                     for (i, j), lst in sorted(self.mult.items())],
            "comult": [{"i": i, "out": [{"j": j, "k": k, "c": F.encode(c)} for (j, k), c in lst]}
                       for i, lst in sorted(self.comult.items())],
            "counit": [F.encode(x) for x in self.counit],
            "antipode": self.antipode.to_json(),
            "pivot": [F.encode(x) for x in self.pivot],
        }

    def with_pivot(self, pivot: Sequence, validate: bool = True) -> "HopfAlgebra":
        H = HopfAlgebra(self.name, self.field, self.dim, list(self.basis), self.mult, list(self.unit),
                        self.comult, list(self.counit), self.antipode, [self.field.coerce(x) for x in pivot])
        return H.validate() if validate else H


def _tensor_mul(H, d1, d2):
    out = {}
    for (a, b), x in d1.items():
        for (c, d), y in d2.items():
            xy = x * y
            for k, u in H.mult.get((a, c), ()):
                for l, v in H.mult.get((b, d), ()):
                    out[(k, l)] = out.get((k, l), 0) + xy * u * v
    return {k: v for k, v in out.items() if v}


def _algebra_inverse(A: AlgebraOnBasis, u):
    L = A.left_mult_matrix(u)
    rhs = Matrix.from_columns(A.field, A.dim, [{i: x for i, x in enumerate(A.unit) if x}])
    sol = solve_all(L, rhs)
    if sol.particular is None or sol.kernel_basis:
        return None
    v = [sol.particular[i, 0] for i in range(A.dim)]
    if A.mul(v, u) != A.unit:
        return None
    return v


def _algebra_generators(A: AlgebraOnBasis) -> list:
    n = A.dim
    gens: list = []

    def closure(idx):
        span = _reduced([A.unit] + [A.basis_vector(i) for i in idx], n)
        while True:
            prods = [A.mul(a, b) for a in span for b in span]
            new = _reduced(span + prods, n)
            if len(new) == len(span):
                return len(span)
            span = new

    current = closure(gens)
    for i in range(n):
        if current == n:
            break
        if _span_dim([A.unit] + [A.basis_vector(j) for j in gens] + [A.basis_vector(i)], n) == \
                _span_dim([A.unit] + [A.basis_vector(j) for j in gens], n):
            continue
        trial = closure(gens + [i])
        if trial > current:
            gens.append(i)
            current = trial
    if current != n:
        raise AssertionError("basis does not generate the algebra")
    return gens


def load_hopf(doc: dict, validate: bool = True) -> HopfAlgebra:
    """Parse and (by default) fully validate a Hopf algebra JSON document."""
    if not isinstance(doc, dict):
        raise SchemaError("document must be a JSON object")
    for key in ("field", "dim", "basis", "unit", "counit", "antipode", "pivot"):
        if key not in doc:
            raise SchemaError(f"missing key {key!r}")
    F = FieldSpec.from_json(doc["field"])
    n = doc["dim"]
    if not isinstance(n, int) or n < 1:
        raise SchemaError("dim must be a positive integer")
    basis = doc["basis"]
    if len(basis) != n or len(set(basis)) != n:
        raise SchemaError("basis must list dim distinct names")

    def vec(key):
        v = doc[key]
        if not isinstance(v, list) or len(v) != n:
            raise SchemaError(f"{key} must have length {n}")
        return [F.parse(x) for x in v]

    def idx(x, what):
        if not isinstance(x, int) or not 0 <= x < n:
            raise SchemaError(f"bad index {x!r} in {what}")
        return x

    mult: dict = {}
    for ent in doc.get("mult", []):
        i, j = idx(ent["i"], "mult"), idx(ent["j"], "mult")
        acc: dict = {}
        for o in ent.get("out", []):
            k = idx(o["k"], "mult")
            acc[k] = acc.get(k, 0) + F.parse(o["c"])
        nz = [(k, F.coerce(c)) for k, c in sorted(acc.items()) if c]
        if nz:
            mult[(i, j)] = nz
    comult: dict = {}
    for ent in doc.get("comult", []):
        i = idx(ent["i"], "comult")
        acc = {}
        for o in ent.get("out", []):
            jk = (idx(o["j"], "comult"), idx(o["k"], "comult"))
            acc[jk] = acc.get(jk, 0) + F.parse(o["c"])
        nz = [(jk, F.coerce(c)) for jk, c in sorted(acc.items()) if c]
        if nz:
            comult[i] = nz
    S = doc["antipode"]
    if len(S) != n or any(len(r) != n for r in S):
        raise SchemaError("antipode must be an n x n matrix")
    H = HopfAlgebra(doc.get("name", "H"), F, n, list(basis), mult, vec("unit"), comult, vec("counit"),
                    Matrix.from_json(F, S, n), vec("pivot"))
    return H.validate() if validate else H


# -- builtin algebras ------------------------------------------------------------

def _monomial_name(i, j):
    g = "" if i == 0 else ("g" if i == 1 else f"g^{i}")
    x = "" if j == 0 else ("x" if j == 1 else f"x^{j}")
    return (g + x) or "1"


def _taft_like(n: int, F: FieldSpec, zeta, name: str) -> HopfAlgebra:
    """Generated by g, x with g^n = 1, x^n = 0, xg = zeta gx; Dx = x(x)1 + g(x)x."""
    dim = n * n
    index = lambda i, j: j * n + i  # noqa: E731 - basis g^i x^j
    basis = [None] * dim
    for j in range(n):
        for i in range(n):
            basis[index(i, j)] = _monomial_name(i, j)
    zpow = [F.coerce(1)]
    for _ in range(n * n):
        zpow.append(zpow[-1] * zeta)
    mult = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    if j + l < n:
                        mult[(index(i, j), index(k, l))] = [(index((i + k) % n, j + l), zpow[(j * k) % n])]
    unit = [F.zero()] * dim
    unit[index(0, 0)] = F.one()
    A = AlgebraOnBasis(F, dim, mult, unit, check=False)
    x = A.basis_vector(index(0, 1))

    def tmul(d1, d2):
        out = {}
        for (a, b), p in d1.items():
            for (c, d), q in d2.items():
                for k, u in mult.get((a, c), ()):
                    for l, v in mult.get((b, d), ()):
                        out[(k, l)] = out.get((k, l), 0) + p * q * u * v
        return {k: v for k, v in out.items() if v}

    dg = {(index(1, 0), index(1, 0)): F.one()}
    dx = {(index(0, 1), index(0, 0)): F.one(), (index(1, 0), index(0, 1)): F.one()}
    comult = {}
    for i in range(n):
        for j in range(n):
            d = {(index(0, 0), index(0, 0)): F.one()}
            for _ in range(i):
                d = tmul(d, dg)
            for _ in range(j):
                d = tmul(d, dx)
            comult[index(i, j)] = sorted(d.items())
    counit = [F.one() if j == 0 else F.zero() for j in range(n) for i in range(n)]
    ginv = A.basis_vector(index((n - 1) % n, 0))
    Sx = A.scale(-F.one(), A.mul(ginv, x))
    cols = []
    for j in range(n):
        for i in range(n):
            v = list(unit)
            for _ in range(j):
                v = A.mul(v, Sx)
            for _ in range(i):
                v = A.mul(v, ginv)
            cols.append((index(i, j), v))
    S = Matrix.from_columns(F, dim, [{r: c for r, c in enumerate(v) if c} for _, v in sorted(cols)])
    H = HopfAlgebra(name, F, dim, basis, mult, unit, comult, counit, S, list(ginv))
    return H.validate()


def sweedler() -> HopfAlgebra:
    """Sweedler's 4-dimensional algebra H4 over Q with pivot g."""
    from .scalars import QQ
    return _taft_like(2, QQ, QQ.coerce(-1), "sweedler")


def taft(n: int) -> HopfAlgebra:
    """Taft algebra of dimension n^2 over Q(zeta_n) with pivot g^{-1}."""
    from .scalars import Cyclotomic
    if n < 2:
        raise SchemaError("taft(n) needs n >= 2")
    F = Cyclotomic(n)
    return _taft_like(n, F, F.zeta(), f"taft{n}")


def group_z(n: int) -> HopfAlgebra:
    """Group algebra of Z/n (over Q for n <= 2, else Q(zeta_n)) with trivial pivot."""
    from .scalars import QQ, Cyclotomic
    if n < 1:
        raise SchemaError("group_z(n) needs n >= 1")
    F = QQ if n <= 2 else Cyclotomic(n)
    basis = [_monomial_name(i, 0) for i in range(n)]
    mult = {(i, j): [((i + j) % n, F.one())] for i in range(n) for j in range(n)}
    unit = [F.one()] + [F.zero()] * (n - 1)
    comult = {i: [((i, i), F.one())] for i in range(n)}
    counit = [F.one()] * n
    S = Matrix.from_columns(F, n, [{(-i) % n: F.one()} for i in range(n)])
    return HopfAlgebra(f"group_z{n}", F, n, basis, mult, unit, comult, counit, S, list(unit)).validate()


BUILTINS = {"sweedler": lambda *a: sweedler(), "taft": lambda n=3: taft(int(n)),
            "group_z": lambda n=2: group_z(int(n))}


def builtin(name: str, *args) -> HopfAlgebra:
    if name not in BUILTINS:
        raise SchemaError(f"unknown builtin algebra {name!r}; choose from {sorted(BUILTINS)}")
    return BUILTINS[name](*args)
