"""Brute-force reference values for the fixture file.

This script does not import the package under test.  It rebuilds the Sweedler,
Taft(3) and Z/2 examples from hand-written relations (q-binomial coproducts,
normal ordering of g and x), works with dense sympy DomainMatrix objects and
checks every intertwiner equation on all basis elements.  Trace values come
from the two-witness formula with witnesses chosen by setting every free
parameter to 1, so they differ from the ones the library picks.

Run:  python3 tests/oracle/build_fixtures.py   (writes tests/fixtures/derived.json)
"""
from __future__ import annotations

import itertools
import json
from fractions import Fraction
from pathlib import Path

from sympy import I, exp, pi
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

HERE = Path(__file__).resolve().parent
FIXTURES = HERE.parent / "fixtures"


# -- scalars -----------------------------------------------------------------------------------

def cyclotomic(n):
    if n <= 2:
        return QQ, (QQ(-1) if n == 2 else QQ(1))
    K = QQ.algebraic_field(exp(2 * pi * I / n))
    return K, K.from_sympy(exp(2 * pi * I / n))


def enc(K, x):
    """Rationals as strings; algebraic numbers as low-first coefficient lists."""
    if K == QQ:
        return str(Fraction(int(x.numerator), int(x.denominator)))
    coeffs = list(reversed(x.to_list()))
    return [str(Fraction(int(c.numerator), int(c.denominator))) for c in coeffs] or ["0"]


def power(K, z, k):
    r = K.one
    for _ in range(k):
        r = r * z
    return r


# -- the Hopf algebras, from relations -----------------------------------------------------

class Hopf:
    """Basis g^i x^j (stored at j*n + i) with x g = q g x, x^n = 0 (n > 1 only if nilpotent)."""

    def __init__(self, n, nilpotent=True):
        self.n = n
        self.K, self.q = cyclotomic(n)
        K = self.K
        self.top = n if nilpotent else 1            # x^j exists for j < top
        self.dim = n * self.top
        self.idx = {}
        for j in range(self.top):
            for i in range(n):
                self.idx[(i, j)] = j * n + i
        self.mono = {v: k for k, v in self.idx.items()}
        zero = [K.zero] * self.dim
        self.zero = zero

    def vec(self, terms):
        v = list(self.zero)
        for (i, j), c in terms:
            if j < self.top:
                v[self.idx[(i % self.n, j)]] += c
        return v

    def basis(self, a):
        v = list(self.zero)
        v[a] = self.K.one
        return v

    def mono_mul(self, a, b):
        """Normal-order x^j g^k = q^{jk} g^k x^j one letter at a time."""
        (i, j), (k, l) = self.mono[a], self.mono[b]
        c = self.K.one
        for _ in range(j):
            for _ in range(k):
                c = c * self.q
        return self.vec([((i + k, j + l), c)])

    def mul(self, u, v):
        out = list(self.zero)
        for a, x in enumerate(u):
            if not x:
                continue
            for b, y in enumerate(v):
                if not y:
                    continue
                w = self.mono_mul(a, b)
                for c, z in enumerate(w):
                    if z:
                        out[c] += x * y * z
        return out

    def delta(self, a):
        """Delta(g^i x^j) = (g^i (x) g^i) * sum_r [j, r]_{1/q} x^r g^{j-r} (x) x^{j-r}."""
        K = self.K
        i, j = self.mono[a]
        out = {}
        qi = K.one / self.q
        for r in range(j + 1):
            c = self._qbinom_counting(j, r, qi)
            if not c:
                continue
            # x^r g^{j-r} = q^{r(j-r)} g^{j-r} x^r
            c = c * power(K, self.q, r * (j - r))
            left = self.idx[((i + j - r) % self.n, r)]
            right = self.idx[(i, j - r)] if (j - r) < self.top else None
            if right is None:
                continue
            out[(left, right)] = out.get((left, right), K.zero) + c
        return out

    def _qbinom_counting(self, m, r, q):
        """Gaussian binomial as a sum over r-subsets (no division: safe at roots of unity)."""
        K = self.K
        total = K.zero
        for S in itertools.combinations(range(m), r):
            inv = sum(1 for s in S for t in range(m) if t not in S and t < s)
            total += power(K, q, inv)
        return total

    def counit(self, a):
        i, j = self.mono[a]
        return self.K.one if j == 0 else self.K.zero

    def antipode(self, a):
        """S(g) = g^-1, S(x) = -g^-1 x, anti-multiplicative."""
        K = self.K
        i, j = self.mono[a]
        Sg = self.vec([((-1, 0), K.one)])
        Sx = self.vec([((-1, 1), -K.one)])
        r = self.basis(self.idx[(0, 0)])
        for _ in range(j):
            r = self.mul(r, Sx)
        for _ in range(i):
            r = self.mul(r, Sg)
        return r

    def lin(self, f, v):
        out = list(self.zero)
        for a, x in enumerate(v):
            if x:
                for c, y in enumerate(f(a)):
                    if y:
                        out[c] += x * y
        return out

    def pivot(self):
        return self.vec([((-1, 0), self.K.one)]) if self.top > 1 else self.basis(0)


def check_axioms(H, pivot=None):
    """Return (name, index) of the first violated axiom or None; brute force on the basis."""
    K = H.K
    d = H.dim
    for a in range(d):
        # coassociativity
        lhs, rhs = {}, {}
        for (b, c), x in H.delta(a).items():
            for (b1, b2), y in H.delta(b).items():
                lhs[(b1, b2, c)] = lhs.get((b1, b2, c), K.zero) + x * y
            for (c1, c2), y in H.delta(c).items():
                rhs[(b, c1, c2)] = rhs.get((b, c1, c2), K.zero) + x * y
        if {k: v for k, v in lhs.items() if v} != {k: v for k, v in rhs.items() if v}:
            return ("coassociativity", a)
    for a in range(d):
        for b in range(d):
            ab = H.mono_mul(a, b)
            lhs = {}
            for c, z in enumerate(ab):
                if z:
                    for k, v in H.delta(c).items():
                        lhs[k] = lhs.get(k, K.zero) + z * v
            rhs = {}
            for (a1, a2), x in H.delta(a).items():
                for (b1, b2), y in H.delta(b).items():
                    l, r = H.mono_mul(a1, b1), H.mono_mul(a2, b2)
                    for p, u in enumerate(l):
                        for s, w in enumerate(r):
                            if u and w:
                                rhs[(p, s)] = rhs.get((p, s), K.zero) + x * y * u * w
            if {k: v for k, v in lhs.items() if v} != {k: v for k, v in rhs.items() if v}:
                return ("bialgebra", (a, b))
    for a in range(d):
        acc = list(H.zero)
        for (b, c), x in H.delta(a).items():
            acc = [p + x * q for p, q in zip(acc, H.mul(H.antipode(b), H.basis(c)))]
        if acc != [H.counit(a) * u for u in H.basis(0)]:
            return ("antipode", a)
    g = H.pivot() if pivot is None else pivot
    gi = H.lin(H.antipode, g)
    if H.mul(g, gi) != H.basis(0):
        return ("pivot invertible", None)
    for a in range(d):
        s2 = H.lin(H.antipode, H.antipode(a))
        if s2 != H.mul(H.mul(g, H.basis(a)), gi):
            return ("S^2 conjugation", a)
    return None


def check_json_coassociativity(doc):
    """First basis index where a JSON coproduct fails coassociativity (rational scalars)."""
    delta = {e["i"]: {(o["j"], o["k"]): Fraction(o["c"]) for o in e["out"]} for e in doc["comult"]}
    for a in range(doc["dim"]):
        lhs, rhs = {}, {}
        for (b, c), x in delta.get(a, {}).items():
            for (b1, b2), y in delta.get(b, {}).items():
                lhs[(b1, b2, c)] = lhs.get((b1, b2, c), 0) + x * y
            for (c1, c2), y in delta.get(c, {}).items():
                rhs[(b, c1, c2)] = rhs.get((b, c1, c2), 0) + x * y
        if {k: v for k, v in lhs.items() if v} != {k: v for k, v in rhs.items() if v}:
            return a
    return None


# -- dense linear algebra ----------------------------------------------------------------------

def dm(K, rows):
    rows = [list(r) for r in rows]
    m = len(rows)
    n = len(rows[0]) if rows else 0
    return DomainMatrix(rows, (m, n), K)


def eye(K, n):
    return dm(K, [[K.one if i == j else K.zero for j in range(n)] for i in range(n)])


def zeros(K, m, n):
    return DomainMatrix([[K.zero] * n for _ in range(m)], (m, n), K)


def kron(K, A, B):
    a, b = A.to_list(), B.to_list()
    ra, ca = A.shape
    rb, cb = B.shape
    out = [[K.zero] * (ca * cb) for _ in range(ra * rb)]
    for i in range(ra):
        for j in range(ca):
            if a[i][j]:
                for k in range(rb):
                    for l in range(cb):
                        out[i * rb + k][j * cb + l] = a[i][j] * b[k][l]
    return DomainMatrix(out, (ra * rb, ca * cb), K)


def kernel(K, rows, ncols):
    """Basis of {y : R y = 0} as lists."""
    if not rows:
        return [[K.one if i == j else K.zero for i in range(ncols)] for j in range(ncols)]
    R = dm(K, rows)
    ns = R.nullspace().to_list() if R.rank() < ncols else []
    return ns


def solve_free_one(K, A_cols, b):
    """Solve sum y_k A_k = b with every free variable set to 1; None if inconsistent."""
    n = len(A_cols)
    m = len(b)
    aug = dm(K, [[A_cols[k][i] for k in range(n)] + [b[i]] for i in range(m)])
    R, piv = aug.rref()
    R = R.to_list()
    if n in piv:
        return None
    y = [K.one] * n
    for p in piv:
        y[p] = K.zero
    for r, p in enumerate(piv):
        val = R[r][n]
        for k in range(n):
            if k != p and k not in piv:
                val -= R[r][k] * y[k]
        y[p] = val / R[r][p]
    return y


def same(A, B):
    """Entrywise equality (DomainMatrix == also compares internal formats)."""
    return A.shape == B.shape and A.to_list() == B.to_list()


def vecm(M):
    return [x for row in M.to_list() for x in row]


# -- modules -----------------------------------------------------------------------------------

class Mod:
    def __init__(self, H, acts):
        self.H = H
        self.acts = acts
        self.dim = acts[0].shape[0]

    def rho(self, v):
        K = self.H.K
        out = zeros(K, self.dim, self.dim)
        for a, x in enumerate(v):
            if x:
                out = out + self.acts[a] * x
        return out


def is_rep(M):
    H = M.H
    for a in range(H.dim):
        for b in range(H.dim):
            if not same(M.acts[a] * M.acts[b], M.rho(H.mono_mul(a, b))):
                return False
    return same(M.acts[0], eye(H.K, M.dim))


def regular(H):
    K = H.K
    acts = []
    for a in range(H.dim):
        cols = [H.mono_mul(a, b) for b in range(H.dim)]
        acts.append(dm(K, [[cols[b][c] for b in range(H.dim)] for c in range(H.dim)]))
    return Mod(H, acts)


def character(H, values):
    return Mod(H, [dm(H.K, [[v]]) for v in values])


def tensor(M, N):
    H = M.H
    K = H.K
    acts = []
    for a in range(H.dim):
        out = zeros(K, M.dim * N.dim, M.dim * N.dim)
        for (b, c), x in H.delta(a).items():
            out = out + kron(K, M.acts[b], N.acts[c]) * x
        acts.append(out)
    return Mod(H, acts)


def dual(M):
    H = M.H
    return Mod(H, [M.rho(H.antipode(a)).transpose() for a in range(H.dim)])


def hom(M, N):
    """Basis of intertwiners M -> N; every basis element of H is imposed."""
    K = M.H.K
    dM, dN = M.dim, N.dim
    rows = []
    for a in range(M.H.dim):
        A, B = M.acts[a].to_list(), N.acts[a].to_list()
        for r in range(dN):
            for c in range(dM):
                row = [K.zero] * (dN * dM)
                for k in range(dM):
                    if A[k][c]:
                        row[r * dM + k] += A[k][c]
                for k in range(dN):
                    if B[r][k]:
                        row[k * dM + c] -= B[r][k]
                if any(row):
                    rows.append(row)
    out = []
    for v in kernel(K, rows, dN * dM):
        out.append(dm(K, [v[r * dM:(r + 1) * dM] for r in range(dN)]))
    return out


def cyclic_submodule(H, M, vec):
    """Span of H.vec inside M, with the induced action (columns = chosen basis)."""
    K = H.K
    gens = [M.acts[a] * dm(K, [[x] for x in vec]) for a in range(H.dim)]
    cols = []
    for g in gens:
        col = [r[0] for r in g.to_list()]
        trial = cols + [col]
        if dm(K, trial).rank() == len(trial):
            cols.append(col)
    B = dm(K, cols).transpose()
    acts = []
    for a in range(H.dim):
        img = M.acts[a] * B
        coords = []
        for j in range(len(cols)):
            target = [r[j] for r in img.to_list()]
            y = solve_free_one(K, cols, target)
            coords.append(y)
        acts.append(dm(K, coords).transpose())
    return Mod(H, acts)


def trace_form_radical_dim(K, algebra_basis):
    """Dimension of the trace-form kernel of the algebra spanned by the given matrices."""
    n = len(algebra_basis)
    flat = [vecm(b) for b in algebra_basis]

    def coords(Mx):
        return solve_free_one(K, flat, vecm(Mx))

    L = []
    for a in algebra_basis:
        L.append([coords(a * b) for b in algebra_basis])
    Ltr = []
    for a in range(n):
        Ltr.append(dm(K, [[L[a][b][c] for b in range(n)] for c in range(n)]))
    form = [[sum((Ltr[a] * Ltr[b]).to_list()[i][i] for i in range(n)) for b in range(n)] for a in range(n)]
    return n - dm(K, form).rank() if n else 0


def idempotent(H, k):
    """(1/n) sum_i q^{-ki} g^i."""
    K = H.K
    terms = []
    for i in range(H.n):
        terms.append(((i, 0), power(K, K.one / H.q, (k * i) % H.n) / K.convert(H.n)))
    return H.vec(terms)


# -- pivotal structure (literal composites) ----------------------------------------------------

def ev_l(K, d):
    return dm(K, [[K.one if (c // d) == (c % d) else K.zero for c in range(d * d)]])


def coev_l(K, d):
    return ev_l(K, d).transpose()


def ev_r(M):
    """v (x) f -> f(g v)."""
    K = M.H.K
    d = M.dim
    G = M.rho(M.H.pivot()).to_list()
    return dm(K, [[G[c % d][c // d] for c in range(d * d)]])


def coev_r(M):
    """1 -> sum e^i (x) g^-1 e_i."""
    K = M.H.K
    d = M.dim
    gi = M.H.lin(M.H.antipode, M.H.pivot())
    Gi = M.rho(gi).to_list()
    return dm(K, [[Gi[c % d][c // d]] for c in range(d * d)])


def ptr_r(K, W, f, dV, dX):
    """(Id_X (x) ev_r)(f (x) Id_W*)(Id_V (x) coev_l)."""
    w = W.dim
    a = kron(K, eye(K, dV), coev_l(K, w))
    b = kron(K, f, eye(K, w))
    c = kron(K, eye(K, dX), ev_r(W))
    return c * b * a


# -- trace tuples ------------------------------------------------------------------------------

class Tuple:
    def __init__(self, H, P, alpha, beta, eta, eps):
        self.H, self.P, self.alpha, self.beta, self.eta, self.eps = H, P, alpha, beta, eta, eps

    def ratio(self, g, gen):
        gl, hl = g.to_list(), gen.to_list()
        for i, row in enumerate(hl):
            for j, x in enumerate(row):
                if x:
                    c = gl[i][j] / x
                    assert same(g, gen * c)
                    return c
        raise AssertionError("zero generator")

    def witnesses(self, V):
        K = self.H.K
        P, a, b = self.P, self.alpha, self.beta
        eta_V = kron(K, self.eta, eye(K, V.dim))
        eps_V = kron(K, self.eps, eye(K, V.dim))
        sb = hom(tensor(P, V), tensor(a, V))
        tb = hom(tensor(b, V), tensor(P, V))
        s = t = None
        if sb:
            y = solve_free_one(K, [vecm(B * eta_V) for B in sb], vecm(eye(K, a.dim * V.dim)))
            if y is not None:
                s = sum((B * c for B, c in zip(sb[1:], y[1:])), sb[0] * y[0])
        if tb:
            y = solve_free_one(K, [vecm(eps_V * B) for B in tb], vecm(eye(K, b.dim * V.dim)))
            if y is not None:
                t = sum((B * c for B, c in zip(tb[1:], y[1:])), tb[0] * y[0])
        return s, t

    def value(self, V, f):
        K = self.H.K
        s, t = self.witnesses(V)
        via_t = self.ratio(ptr_r(K, V, t * f, self.alpha.dim, self.P.dim), self.eta)
        via_s = self.ratio(ptr_r(K, V, f * s, self.P.dim, self.beta.dim), self.eps)
        assert via_t == via_s, (via_t, via_s)
        return via_t


def projective_data(H, k):
    """P_k = H e_k, its socle (kernel of x) and the head functional."""
    K = H.K
    R = regular(H)
    P = cyclic_submodule(H, R, idempotent(H, k))
    if H.top == 1:
        one = eye(K, 1)
        return P, P, P, one, one
    x = H.idx[(0, 1)]
    g = H.idx[(1, 0)]
    X = P.acts[x]
    soc = kernel(K, X.to_list(), P.dim)
    assert len(soc) == 1
    v = soc[0]
    gv = (P.acts[g] * dm(K, [[c] for c in v])).to_list()
    lam = next(gv[i][0] / v[i] for i in range(P.dim) if v[i])
    alpha_vals = []
    for a in range(H.dim):
        i, j = H.mono[a]
        alpha_vals.append(power(K, lam, i) if j == 0 else K.zero)
    alpha = character(H, alpha_vals)
    eta = dm(K, [[c] for c in v])
    # head: functional vanishing on the image of x, normalised on the generator (first column)
    img = [list(col) for col in zip(*X.to_list())]
    cols = [c for c in img if any(c)]
    rows = [c for c in cols]
    func = kernel(K, rows, P.dim) if rows else [[K.one] + [K.zero] * (P.dim - 1)]
    assert len(func) == 1
    eps = dm(K, [func[0]])
    mu_vals = []
    ge = (eps * P.acts[g]).to_list()[0]
    mu = next(ge[i] / func[0][i] for i in range(P.dim) if func[0][i])
    for a in range(H.dim):
        i, j = H.mono[a]
        mu_vals.append(power(K, mu, i) if j == 0 else K.zero)
    beta = character(H, mu_vals)
    return P, alpha, beta, eta, eps


def is_member(T, V):
    s, t = T.witnesses(V)
    return s is not None, t is not None


# -- fixture assembly --------------------------------------------------------------------------

def build():
    out = {}
    rational = lambda x: enc(QQ, x)  # noqa: E731

    # Sweedler's algebra
    H = Hopf(2)
    K = H.K
    out["sweedler.valid"] = check_axioms(H) is None
    bad = check_axioms(H, pivot=H.basis(0))
    out["sweedler.pivot_one.violation_index"] = bad[1]
    doc = json.loads((FIXTURES / "bad.json").read_text())
    out["bad_json.coassociativity_index"] = check_json_coassociativity(doc)

    triv = character(H, [H.counit(a) for a in range(H.dim)])
    sign_vals = [(-K.one) ** H.mono[a][0] if H.mono[a][1] == 0 else K.zero for a in range(H.dim)]
    sign = character(H, sign_vals)
    out["sweedler.sign_is_module"] = is_rep(sign)
    out["sweedler.hom_dim.triv_sign"] = len(hom(triv, sign))
    ss = hom(tensor(sign, sign), triv)
    out["sweedler.hom_dim.signsign_triv"] = len(ss)
    out["sweedler.signsign_iso_triv"] = len(ss) == 1 and ss[0].rank() == 1
    dd = hom(dual(sign), sign)
    out["sweedler.dual_sign_iso_sign"] = len(dd) == 1 and dd[0].rank() == 1

    P0, a0, b0, eta0, eps0 = projective_data(H, 0)
    P1, a1, b1, eta1, eps1 = projective_data(H, 1)
    E = hom(P0, P0)
    out["sweedler.hom_dim.Peps_Peps"] = len(E)
    rad = trace_form_radical_dim(K, E)
    out["sweedler.radical_dim.End_Peps"] = rad
    out["sweedler.abs_indec.Peps"] = [len(E) - rad == 1, len(E), rad, 1 if rad == 0 else None]
    reg = regular(H)
    ranks = []
    for k in range(2):
        e = idempotent(H, k)
        Rm = dm(K, [[H.mul(H.basis(b), e)[c] for b in range(H.dim)] for c in range(H.dim)])
        ranks.append(Rm.rank())
    out["sweedler.regular.summand_dims"] = sorted(ranks)
    out["sweedler.primitive_idempotents"] = len(ranks)
    out["sweedler.Peps.socle_char"] = [rational(x) for x in (a0.acts[a].to_list()[0][0] for a in range(H.dim))]
    out["sweedler.Peps.head_char"] = [rational(x) for x in (b0.acts[a].to_list()[0][0] for a in range(H.dim))]
    out["sweedler.P_dim"] = P0.dim
    out["sweedler.ev_r.sign"] = rational(ev_r(sign).to_list()[0][0])

    def qdim(M):
        G = M.rho(M.H.pivot()).to_list()
        return sum(G[i][i] for i in range(M.dim))

    out["sweedler.dims"] = {"triv": rational(qdim(triv)), "sign": rational(qdim(sign)),
                            "Peps": rational(qdim(P0)), "Psig": rational(qdim(P1)), "reg": rational(qdim(reg))}
    # phi by the literal composite equals rho(g) in the canonical basis of V**
    ok = True
    for M in (P0, P1, sign, reg):
        d = M.dim
        Ms = dual(M)
        step1 = kron(K, eye(K, d), coev_l(K, d))
        step2 = kron(K, ev_r(M), eye(K, d))
        ok = ok and same(step2 * step1, M.rho(H.pivot()))
    out["sweedler.phi_equals_rho_pivot"] = ok
    out["sweedler.tuple_unit_unit.hom_alpha_dim"] = len(hom(triv, P0))

    T = Tuple(H, P0, a0, b0, eta0, eps0)
    out["sweedler.t_eta_eps"] = rational(T.value(P0, kron(K, eta0, eps0)))
    basis = hom(tensor(a0, P0), tensor(b0, P0))
    vals = [T.value(P0, f) for f in basis]
    out["sweedler.t_basis.dim"] = len(basis)
    out["sweedler.t_basis.nonzero"] = any(vals)
    PW = tensor(P0, sign)
    out["sweedler.t_eta_eps_sign"] = rational(T.value(PW, kron(K, kron(K, eta0, eps0), eye(K, 1))))
    out["sweedler.membership"] = {"Peps": list(is_member(T, P0)), "Psig": list(is_member(T, P1)),
                                  "triv": list(is_member(T, triv))}
    grams = {}
    for qn, Q in (("Peps", P0), ("Psig", P1)):
        for vn, V in (("Peps", P0), ("Psig", P1)):
            G = hom(V, tensor(b0, Q))
            F = hom(tensor(a0, Q), V)
            gram = [[T.value(Q, g * f) for f in F] for g in G]
            r = dm(K, gram).rank() if G and F else 0
            grams[f"{qn},{vn}"] = [len(G), len(F), r]
    out["sweedler.gram"] = grams
    # cut identities and compatibility on the oracle's own construction
    out.update(_cut_checks(T, [P0, P1], "sweedler"))

    # Frobenius: End(P0 + P1) via block hom spaces
    Q = [P0, P1]
    dimE = sum(len(hom(A, B)) for A in Q for B in Q)
    out["sweedler.frobenius.dim_end"] = dimE

    # Taft(3)
    H3 = Hopf(3)
    K3 = H3.K
    out["taft3.valid"] = check_axioms(H3) is None
    P, a, b, eta, eps = projective_data(H3, 0)
    out["taft3.P_dim"] = P.dim
    g = H3.idx[(1, 0)]
    out["taft3.alpha_g"] = enc(K3, a.acts[g].to_list()[0][0])
    out["taft3.beta_g"] = enc(K3, b.acts[g].to_list()[0][0])
    T3 = Tuple(H3, P, a, b, eta, eps)
    out["taft3.t_eta_eps"] = enc(K3, T3.value(P, kron(K3, eta, eps)))
    sizes = []
    for k in range(3):
        e = idempotent(H3, k)
        Rm = dm(K3, [[H3.mul(H3.basis(bb), e)[c] for bb in range(H3.dim)] for c in range(H3.dim)])
        sizes.append(Rm.rank())
    out["taft3.regular.summand_dims"] = sorted(sizes)
    simples = []
    for k in range(3):
        Pk, ak, bk, _, _ = projective_data(H3, k)
        simples.append(bk)
    out["taft3.simple_dims"] = sorted(json.dumps(enc(K3, qdim(S))) for S in simples)
    out["taft3.t_eta_eps_simple"] = sorted(
        json.dumps(enc(K3, T3.value(tensor(P, S), kron(K3, kron(K3, eta, eps), eye(K3, 1)))))
        for S in simples)

    # Z/2
    H2 = Hopf(2, nilpotent=False)
    K2 = H2.K
    out["group_z2.valid"] = check_axioms(H2) is None
    P, a, b, eta, eps = projective_data(H2, 0)
    out["group_z2.P_dim"] = P.dim
    triv2 = character(H2, [K2.one, K2.one])
    sgn2 = character(H2, [K2.one, -K2.one])
    T2 = Tuple(H2, P, a, b, eta, eps)
    out["group_z2.triv_member"] = list(is_member(T2, triv2))
    out["group_z2.frobenius.dim_end"] = sum(len(hom(A, B)) for A in (triv2, sgn2) for B in (triv2, sgn2))
    reg2 = regular(H2)
    out["group_z2.t_id_reg"] = rational(T2.value(reg2, eye(K2, 2)))
    # f* is the transpose in dual bases (literal snake formula, random morphism)
    fz = hom(reg2, reg2)
    f = fz[0] * K2.convert(2) + fz[-1] * K2.convert(-3)
    d = 2
    fs = kron(K2, ev_l(K2, d), eye(K2, d)) * kron(K2, eye(K2, d), kron(K2, f, eye(K2, d))) \
        * kron(K2, eye(K2, d), coev_l(K2, d))
    out["group_z2.f_star_is_transpose"] = same(fs, f.transpose())
    return out


def _cut_checks(T, projs, tag):
    K = T.H.K
    out = {}
    ok = True
    for V in projs:
        P = T.P
        for f in hom(tensor(P, V), tensor(T.beta, V)):
            lhs = T.value(V, f * kron(K, T.eta, eye(K, V.dim)))
            rhs = T.ratio(ptr_r(K, V, f, P.dim, T.beta.dim), T.eps)
            ok = ok and lhs == rhs
        for g in hom(tensor(T.alpha, V), tensor(P, V)):
            lhs = T.value(V, kron(K, T.eps, eye(K, V.dim)) * g)
            rhs = T.ratio(ptr_r(K, V, g, T.alpha.dim, P.dim), T.eta)
            ok = ok and lhs == rhs
    out[f"{tag}.cut_identities_on_basis"] = ok
    return out


def main():
    FIXTURES.mkdir(parents=True, exist_ok=True)
    data = build()
    (FIXTURES / "derived.json").write_text(json.dumps(data, indent=1, sort_keys=True) + "\n")
    print(f"wrote {len(data)} values to {FIXTURES / 'derived.json'}")


if __name__ == "__main__":
    main()
