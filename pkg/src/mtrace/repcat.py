"""Finite-dimensional modules over a Hopf algebra and their morphisms."""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .errors import (AlgebraMismatch, NotARepresentation, SchemaError, ShapeMismatch,
                     DimensionMismatch)
from .hopfalg import AlgebraOnBasis, HopfAlgebra, nilpotency_index, primitive_idempotents, radical
from .linalg import Matrix, echelon, kron, nullspace_rows, solve_all

__all__ = [
    "Module", "Morphism", "Decomposition", "check_module", "trivial", "regular", "tensor", "dual",
    "direct_sum", "hom_space", "end_algebra", "decompose", "abs_indec_report", "socle_head",
    "projective_cover_unit", "indecomposable_projectives", "is_isomorphic", "find_isomorphism",
    "submodule", "quotient", "tensor_all", "random_morphism", "base_change", "is_simple", "load_module",
]


class Module:
    """A representation: one ``dim x dim`` matrix per algebra basis element.

    Plain modules hold their matrices.  Tensor products and duals of composite
    modules are built lazily: an action matrix is produced only when some code
    asks for that basis element.  Equality is structural (flattened tensor
    factors, dual nodes) with plain modules compared by their matrices; the
    name is a label only.
    """

    __slots__ = ("algebra", "dim", "_action", "name", "_hash", "kind", "parts", "key")

    def __init__(self, algebra: HopfAlgebra, action: Sequence[Matrix] | None = None, name: str = "M",
                 *, dim: int | None = None, kind: str = "atom", parts: tuple = ()):
        self.algebra = algebra
        self.name = name
        self.kind = kind
        self.parts = parts
        self._hash = None
        if kind == "atom":
            self._action = list(action)
            self.dim = self._action[0].rows if self._action else 0
            self.key = ("A", tuple(self._action))
        else:
            self._action = [None] * algebra.dim
            self.dim = dim
            if kind == "tensor":
                self.key = ("T",) + tuple(p.key for p in parts)
            else:
                self.key = ("D", parts[0].key)

    @property
    def field(self):
        return self.algebra.field

    @property
    def factors(self) -> tuple:
        return self.parts if self.kind == "tensor" else (self,)

    def act(self, i: int) -> Matrix:
        m = self._action[i]
        if m is None:
            H = self.algebra
            if self.kind == "tensor":
                left = self.parts[0] if len(self.parts) == 2 else _tensor_of(self.parts[:-1])
                right = self.parts[-1]
                m = Matrix.zeros(H.field, self.dim, self.dim)
                for (j, k), c in H.comult.get(i, ()):
                    a, b = left.act(j), right.act(k)
                    if a.is_zero() or b.is_zero():
                        continue
                    t = kron(a, b)
                    m = m + (t if c == 1 else t.scale(c))
            else:
                m = self.parts[0].rho(H.S(H.e(i))).T
            self._action[i] = m
        return m

    @property
    def action(self) -> tuple:
        return tuple(self.act(i) for i in range(self.algebra.dim))

    def rho(self, u) -> Matrix:
        """Action matrix of an algebra element given by coordinates."""
        out = Matrix.zeros(self.field, self.dim, self.dim)
        for i, c in enumerate(u):
            if c:
                m = self.act(i)
                out = out + (m if c == 1 else m.scale(c))
        return out

    def __eq__(self, other):
        if not isinstance(other, Module):
            return NotImplemented
        return self is other or (self.algebra is other.algebra and self.key == other.key)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((id(self.algebra), self.key))
        return self._hash

    def __repr__(self):
        return f"Module({self.name!r}, dim={self.dim})"

    def renamed(self, name: str) -> "Module":
        if self.kind == "atom":
            return Module(self.algebra, self._action, name)
        M = Module(self.algebra, name=name, dim=self.dim, kind=self.kind, parts=self.parts)
        M._action = self._action
        return M

    def materialized(self, name: str | None = None) -> "Module":
        """A plain module with the same action (drops the tensor/dual structure)."""
        return Module(self.algebra, self.action, name or self.name)

    def identity(self) -> "Morphism":
        return Morphism(self, self, Matrix.identity(self.field, self.dim), check=False)

    def to_json(self) -> dict:
        return {"name": self.name, "dim": self.dim, "action": [m.to_json() for m in self.action]}


class Morphism:
    """Intertwiner ``dom -> cod`` stored as a ``cod.dim x dom.dim`` matrix."""

    __slots__ = ("dom", "cod", "matrix")

    def __init__(self, dom: Module, cod: Module, matrix: Matrix, check: bool = True):
        if dom.algebra is not cod.algebra:
            raise AlgebraMismatch("domain and codomain live over different algebras")
        if matrix.shape != (cod.dim, dom.dim):
            raise ShapeMismatch(f"matrix {matrix.shape} does not fit {dom.name} -> {cod.name}")
        self.dom = dom
        self.cod = cod
        self.matrix = matrix
        if check:
            bad = intertwiner_defect(dom, cod, matrix)
            if bad is not None:
                raise NotARepresentation((bad,), f"matrix does not intertwine the action of "
                                                 f"{dom.algebra.basis[bad]!r}")

    @property
    def field(self):
        return self.dom.field

    def __matmul__(self, other: "Morphism") -> "Morphism":
        """Composition ``self o other``."""
        if other.cod != self.dom:
            raise ShapeMismatch(f"cannot compose {other.cod.name} with {self.dom.name}")
        return Morphism(other.dom, self.cod, self.matrix @ other.matrix, check=False)

    def __add__(self, other: "Morphism") -> "Morphism":
        self._same_shape(other)
        return Morphism(self.dom, self.cod, self.matrix + other.matrix, check=False)

    def __sub__(self, other: "Morphism") -> "Morphism":
        self._same_shape(other)
        return Morphism(self.dom, self.cod, self.matrix - other.matrix, check=False)

    def __neg__(self):
        return Morphism(self.dom, self.cod, -self.matrix, check=False)

    def scale(self, c) -> "Morphism":
        return Morphism(self.dom, self.cod, self.matrix.scale(c), check=False)

    def _same_shape(self, other):
        if self.dom != other.dom or self.cod != other.cod:
            raise ShapeMismatch("morphisms have different domain or codomain")

    def tensor(self, other: "Morphism") -> "Morphism":
        return Morphism(tensor(self.dom, other.dom), tensor(self.cod, other.cod),
                        kron(self.matrix, other.matrix), check=False)

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def is_invertible(self) -> bool:
        return self.dom.dim == self.cod.dim and self.matrix.is_invertible()

    def inverse(self) -> "Morphism":
        return Morphism(self.cod, self.dom, self.matrix.inverse(), check=False)

    def __eq__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        return self.dom == other.dom and self.cod == other.cod and self.matrix == other.matrix

    def __hash__(self):
        return hash((self.dom, self.cod, self.matrix))

    def __repr__(self):
        return f"Morphism({self.dom.name} -> {self.cod.name})"


def intertwiner_defect(dom: Module, cod: Module, m: Matrix, indices=None):
    """First basis index whose action ``m`` fails to intertwine (None if all do).

    Checking algebra generators suffices since both sides are representations.
    """
    if indices is None:
        indices = dom.algebra.generators
    for i in indices:
        if m @ dom.act(i) != cod.act(i) @ m:
            return i
    return None


@dataclass
class Decomposition:
    """Direct sum decomposition of ``module``; optional ``link`` ties it to a parent module."""

    module: Module
    summands: list
    injections: list
    projections: list
    link: Morphism | None = None

    def check(self) -> bool:
        M = self.module
        total = Matrix.zeros(M.field, M.dim, M.dim)
        for i, p in zip(self.injections, self.projections):
            if not (p @ i).matrix.is_identity():
                return False
            total = total + (i @ p).matrix
        return total.is_identity()


# -- construction ------------------------------------------------------------------

def check_module(H: HopfAlgebra, action: Sequence[Matrix], name: str = "M") -> Module:
    """Validate the representation law and wrap the matrices in a Module."""
    if len(action) != H.dim:
        raise SchemaError(f"need {H.dim} action matrices, got {len(action)}")
    d = action[0].rows
    for m in action:
        if m.shape != (d, d):
            raise DimensionMismatch("action matrices must be square of uniform size")
        if m.field != H.field:
            raise SchemaError("action matrix over the wrong field")
    M = Module(H, action, name)
    if M.rho(H.unit) != Matrix.identity(H.field, d):
        raise NotARepresentation((), "unit does not act as the identity")
    for i in range(H.dim):
        for j in range(H.dim):
            lhs = action[i] @ action[j]
            rhs = Matrix.zeros(H.field, d, d)
            for k, c in H.mult.get((i, j), ()):
                rhs = rhs + action[k].scale(c)
            if lhs != rhs:
                raise NotARepresentation((i, j))
    return M


def load_module(H: HopfAlgebra, doc: dict) -> Module:
    try:
        d = doc["dim"]
        mats = [Matrix.from_json(H.field, m, d) for m in doc["action"]]
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"malformed module document: {exc}") from exc
    if any(m.rows != d for m in mats):
        raise DimensionMismatch("action matrices do not match dim")
    return check_module(H, mats, doc.get("name", "M"))


def character(H: HopfAlgebra, values: Sequence, name: str) -> Module:
    """One-dimensional module with basis element i acting by ``values[i]``."""
    return check_module(H, [Matrix.scalar(H.field, v) for v in values], name)


def trivial(H: HopfAlgebra) -> Module:
    if "trivial" not in H._cache:
        H._cache["trivial"] = Module(H, [Matrix.scalar(H.field, c) for c in H.counit], "1")
    return H._cache["trivial"]


def regular(H: HopfAlgebra) -> Module:
    if "regular" not in H._cache:
        A = H.algebra
        H._cache["regular"] = Module(H, [A.left_mult_matrix(A.basis_vector(i)) for i in range(H.dim)], "reg")
    return H._cache["regular"]


def _is_trivial(M: Module) -> bool:
    return M.kind == "atom" and M.dim == 1 and M == trivial(M.algebra)


@lru_cache(maxsize=None)
def _tensor_of(factors: tuple) -> Module:
    H = factors[0].algebra
    dim = 1
    for f in factors:
        dim *= f.dim
    name = " (x) ".join(_paren(f.name) for f in factors)
    return Module(H, name=name, dim=dim, kind="tensor", parts=factors)


def tensor(M: Module, N: Module) -> Module:
    """M (x) N with Kronecker ordering; a acts through the coproduct.

    Products are strictly associative (factor lists are flattened) and the
    unit module is dropped.
    """
    if M.algebra is not N.algebra:
        raise AlgebraMismatch("tensor of modules over different algebras")
    factors = tuple(f for f in M.factors + N.factors if not _is_trivial(f))
    if not factors:
        return trivial(M.algebra)
    if len(factors) == 1:
        return factors[0]
    return _tensor_of(factors)


def tensor_all(mods) -> Module:
    out = None
    for m in mods:
        out = m if out is None else tensor(out, m)
    return out


def _paren(name: str) -> str:
    return f"({name})" if " " in name else name


@lru_cache(maxsize=None)
def dual(M: Module) -> Module:
    """Dual module: a acts by the transpose of S(a)."""
    H = M.algebra
    name = f"{_paren(M.name)}*"
    if M.kind == "atom":
        if _is_trivial(M):
            return M
        return Module(H, [M.rho(H.S(H.e(i))).T for i in range(H.dim)], name)
    return Module(H, name=name, dim=M.dim, kind="dual", parts=(M,))


def direct_sum(*mods: Module) -> Decomposition:
    H = mods[0].algebra
    n = sum(m.dim for m in mods)
    acts = []
    for i in range(H.dim):
        data = {}
        off = 0
        for m in mods:
            for (r, c), v in m.act(i).items():
                data.setdefault(off + r, {})[off + c] = v
            off += m.dim
        acts.append(Matrix(H.field, n, n, data))
    S = Module(H, acts, " (+) ".join(_paren(m.name) for m in mods))
    inj, proj = [], []
    off = 0
    one = H.field.one()
    for m in mods:
        inj.append(Morphism(m, S, Matrix(H.field, n, m.dim, {off + r: {r: one} for r in range(m.dim)}), check=False))
        proj.append(Morphism(S, m, Matrix(H.field, m.dim, n, {r: {off + r: one} for r in range(m.dim)}), check=False))
        off += m.dim
    return Decomposition(S, list(mods), inj, proj)


# -- hom spaces -----------------------------------------------------------------------

def _intertwiner_rows(M: Module, N: Module, gens):
    """Rows of the linear system X rho_M(a) = rho_N(a) X, X indexed r * dim M + c."""
    dm = M.dim
    rows = []
    for a in gens:
        A = M.act(a)
        B = N.act(a)
        colsA = A.column_dicts()
        for r in range(N.dim):
            brow = B.row_dict(r)
            for cp in range(dm):
                row = {}
                for c, v in colsA[cp].items():
                    row[r * dm + c] = row.get(r * dm + c, 0) + v
                for s, v in brow.items():
                    key = s * dm + cp
                    row[key] = row.get(key, 0) - v
                row = {k: v for k, v in row.items() if v}
                if row:
                    rows.append(row)
    return rows


@lru_cache(maxsize=4096)
def hom_space(M: Module, N: Module) -> tuple:
    """Basis of Hom(M, N) as a tuple of Morphisms."""
    if M.algebra is not N.algebra:
        raise AlgebraMismatch("hom between modules over different algebras")
    H = M.algebra
    n = M.dim * N.dim
    if n == 0:
        return ()
    rows = _intertwiner_rows(M, N, H.generators)
    out = []
    for v in nullspace_rows(rows, n, H.field):
        data = {}
        for k, x in v.items():
            r, c = divmod(k, M.dim)
            data.setdefault(r, {})[c] = x
        out.append(Morphism(M, N, Matrix(H.field, N.dim, M.dim, data), check=False))
    return tuple(out)


def random_morphism(M: Module, N: Module, rng: random.Random, basis=None) -> Morphism:
    """Small-integer combination (coefficients in [-3, 3]) of a Hom basis."""
    basis = hom_space(M, N) if basis is None else basis
    F = M.field
    out = Matrix.zeros(F, N.dim, M.dim)
    for b in basis:
        c = rng.randint(-3, 3)
        if c:
            out = out + b.matrix.scale(F.coerce(c))
    return Morphism(M, N, out, check=False)


def combine(basis, coeffs, dom: Module, cod: Module) -> Morphism:
    out = Matrix.zeros(dom.field, cod.dim, dom.dim)
    for b, c in zip(basis, coeffs):
        if c:
            out = out + b.matrix.scale(c)
    return Morphism(dom, cod, out, check=False)


def coordinates(f: Morphism, basis) -> list | None:
    """Coordinates of ``f`` in a Hom basis (None if not in the span)."""
    F = f.field
    if not basis:
        return [] if f.is_zero() else None
    cols = [b.matrix.vec() for b in basis]
    size = f.matrix.rows * f.matrix.cols
    A = Matrix.from_columns(F, size, cols)
    rhs = Matrix.from_columns(F, size, [f.matrix.vec()])
    sol = solve_all(A, rhs)
    if sol.particular is None:
        return None
    return [sol.particular[i, 0] for i in range(len(basis))]


@lru_cache(maxsize=1024)
def end_algebra(M: Module) -> AlgebraOnBasis:
    basis = hom_space(M, M)
    return AlgebraOnBasis.from_matrices(M.field, [b.matrix for b in basis])


# -- isomorphism --------------------------------------------------------------------------

def find_isomorphism(M: Module, N: Module, seed: int = 0, retries: int = 8) -> Morphism | None:
    if M.dim != N.dim or M.algebra is not N.algebra:
        return None
    basis = hom_space(M, N)
    if not basis:
        return None
    for b in basis:
        if b.is_invertible():
            return b
    F = M.field
    for r in range(2, min(len(basis), 4) + 1):
        for combo in combinations(basis, r):
            f = combine(combo, [F.one()] * r, M, N)
            if f.is_invertible():
                return f
    rng = random.Random(seed)
    for _ in range(retries):
        f = combine(basis, [F.coerce(rng.randint(-7, 7)) for _ in basis], M, N)
        if f.is_invertible():
            return f
    return None


def is_isomorphic(M: Module, N: Module, seed: int = 0) -> bool:
    return find_isomorphism(M, N, seed) is not None


def base_change(M: Module, T: Matrix, name: str | None = None) -> Module:
    """Module conjugated by an invertible T (new basis = columns of T)."""
    Ti = T.inverse()
    return Module(M.algebra, [Ti @ a @ T for a in M.action], name or M.name)


# -- sub and quotient modules ----------------------------------------------------------

def _columns_basis(F, vectors: list, dim: int) -> list:
    """Canonical basis (RREF rows) of a span of sparse column vectors."""
    piv, _, _ = echelon(vectors, dim)
    return [piv[p] for p in sorted(piv)]


def submodule(M: Module, vectors: list, name: str = "sub") -> tuple:
    """Submodule spanned by sparse vectors (assumed invariant); returns (module, inclusion)."""
    F = M.field
    basis = _columns_basis(F, vectors, M.dim)
    B = Matrix.from_columns(F, M.dim, basis)
    if not basis:
        raise ValueError("zero submodule")
    acts = []
    for a in M.action:
        sol = solve_all(B, a @ B)
        if sol.particular is None:
            raise ValueError("subspace is not a submodule")
        acts.append(sol.particular)
    S = Module(M.algebra, acts, name)
    return S, Morphism(S, M, B, check=False)


def quotient(M: Module, vectors: list, name: str = "quot") -> tuple:
    """Quotient by an invariant subspace; complement = non-pivot coordinates of its RREF.

    Returns (module, projection).
    """
    F = M.field
    piv, _, _ = echelon(vectors, M.dim)
    comp = [c for c in range(M.dim) if c not in piv]

    def project(v: dict) -> dict:
        v = dict(v)
        for p in sorted(piv):
            x = v.get(p)
            if x:
                for j, y in piv[p].items():
                    nv = v.get(j, 0) - x * y
                    if nv:
                        v[j] = nv
                    else:
                        v.pop(j, None)
        return {a: v[c] for a, c in enumerate(comp) if c in v}

    q = Matrix.from_columns(F, len(comp), [project({i: F.one()}) for i in range(M.dim)])
    acts = []
    for a in M.action:
        cols = a.column_dicts()
        acts.append(Matrix.from_columns(F, len(comp), [project(cols[c]) for c in comp]))
    Q = Module(M.algebra, acts, name)
    return Q, Morphism(M, Q, q, check=False)


def _radical_of_H(H: HopfAlgebra) -> list:
    if "radical" not in H._cache:
        H._cache["radical"] = radical(H.algebra)
    return H._cache["radical"]


def radical_action(M: Module) -> list:
    return [M.rho(j) for j in _radical_of_H(M.algebra)]


# -- decomposition ---------------------------------------------------------------------------

def decompose(M: Module, seed: int = 0) -> Decomposition:
    """Indecomposable decomposition via primitive idempotents of End(M)."""
    M.field.require_char0("decompose")
    E = end_algebra(M)
    idems = primitive_idempotents(E, seed)
    if len(idems) <= 1:
        return Decomposition(M, [M], [M.identity()], [M.identity()])
    summands, inj, proj = [], [], []
    F = M.field
    for t, e in enumerate(idems):
        em = E.to_matrix(e)
        cols = _columns_basis(F, [c for c in em.column_dicts() if c], M.dim)
        iota = Matrix.from_columns(F, M.dim, cols)
        pi = solve_all(iota, em).particular
        acts = [pi @ a @ iota for a in M.action]
        S = Module(M.algebra, acts, f"{_paren(M.name)}[{t}]")
        summands.append(S)
        inj.append(Morphism(S, M, iota, check=False))
        proj.append(Morphism(M, S, pi, check=False))
    return Decomposition(M, summands, inj, proj)


@dataclass
class AbsIndecReport:
    is_abs_indec: bool
    dim_end: int
    dim_rad: int
    nilpotency_index: int

    def as_tuple(self):
        return (self.is_abs_indec, self.dim_end, self.dim_rad, self.nilpotency_index)


def abs_indec_report(M: Module) -> AbsIndecReport:
    M.field.require_char0("abs_indec_report")
    E = end_algebra(M)
    J = radical(E)
    k = nilpotency_index(E, J)
    return AbsIndecReport(E.dim - len(J) == 1, E.dim, len(J), k)


def is_simple(M: Module) -> bool:
    """Absolutely irreducible: End(M) = k and the radical of H acts as zero (M semisimple)."""
    if M.dim == 0:
        return False
    if len(hom_space(M, M)) != 1:
        return False
    return all(m.is_zero() for m in radical_action(M))


def socle_head(M: Module) -> tuple:
    """(socle, head) as Decompositions; ``link`` is the socle inclusion / head projection."""
    M.field.require_char0("socle_head")
    F = M.field
    J = radical_action(M)
    if not J or all(j.is_zero() for j in J):
        soc, inc = M, M.identity()
        head, prj = M, M.identity()
    else:
        stacked = Matrix.zeros(F, 0, M.dim).vstack(*J)
        kernel = stacked.nullspace()
        soc, inc = submodule(M, [k.column_dicts()[0] for k in kernel], f"soc({M.name})")
        image = [c for j in J for c in j.column_dicts() if c]
        head, prj = quotient(M, image, f"head({M.name})")
    sd = decompose(soc)
    hd = decompose(head)
    sd.link, hd.link = inc, prj
    return sd, hd


# -- projectives -----------------------------------------------------------------------------

@dataclass
class ProjectiveData:
    P: Module
    head: Module
    socle: Module
    eps: Morphism      # P -> head
    eta: Morphism      # socle -> P


def _projective_data(P: Module) -> ProjectiveData:
    sd, hd = socle_head(P)
    if len(sd.summands) != 1 or len(hd.summands) != 1:
        raise AssertionError("indecomposable projective with non-simple socle or head")
    return ProjectiveData(P, hd.module, sd.module, hd.link, sd.link)


def indecomposable_projectives(H: HopfAlgebra, seed: int = 0) -> list:
    """One representative per isoclass; the cover of the trivial module comes first."""
    if "projectives" in H._cache:
        return H._cache["projectives"]
    dec = decompose(regular(H), seed)
    reps: list = []
    for S in dec.summands:
        if not any(is_isomorphic(S, R.P, seed) for R in reps):
            reps.append(_projective_data(S))
    one = trivial(H)
    reps.sort(key=lambda R: 0 if is_isomorphic(R.head, one) else 1)
    named = []
    for t, R in enumerate(reps):
        P = R.P.renamed(f"P{t}")
        head = R.head.renamed(f"S{t}")
        soc = R.socle.renamed(f"soc(P{t})")
        named.append(ProjectiveData(P, head, soc,
                                    Morphism(P, head, R.eps.matrix, check=False),
                                    Morphism(soc, P, R.eta.matrix, check=False)))
    H._cache["projectives"] = named
    return named


def projective_cover_unit(H: HopfAlgebra, seed: int = 0) -> tuple:
    """(P, alpha, beta, eta, eps): cover of the unit, its socle and head with the canonical maps."""
    H.field.require_char0("projective_cover_unit")
    R = indecomposable_projectives(H, seed)[0]
    one = trivial(H)
    if not is_isomorphic(R.head, one):
        raise AssertionError("no indecomposable projective has trivial head")
    beta = R.head
    if beta == one:
        beta = one
    alpha = R.socle
    if alpha == one:
        alpha = one
    eta = Morphism(alpha, R.P, R.eta.matrix, check=False)
    eps = Morphism(R.P, beta, R.eps.matrix, check=False)
    return R.P, alpha, beta, eta, eps
