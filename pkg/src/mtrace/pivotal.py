"""Left and right dualities, dual morphisms, gamma, phi and partial traces.

Every structure map is built from the pivot of the underlying Hopf algebra and
then certified by the snake and compatibility identities.  Composites are
formed literally as products of sparse matrices (``id_kron`` keeps the
identity factors cheap).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import AxiomViolation, ShapeMismatch
from .linalg import Matrix, id_kron
from .repcat import Module, Morphism, dual, intertwiner_defect, tensor, trivial

__all__ = [
    "DualityData", "duality", "dual_morphism", "dual_morphism_right", "gamma", "gamma_prime",
    "phi", "ptr_r", "ptr_l", "ptr_r_composite", "ptr_l_composite", "dimension", "id_tensor",
    "gamma_direct", "double_dual_morphism", "check_duality",
]


def id_tensor(left: Module | None, f: Morphism, right: Module | None) -> Morphism:
    """Id_left (x) f (x) Id_right."""
    l = left.dim if left is not None else 1
    r = right.dim if right is not None else 1
    dom, cod = f.dom, f.cod
    if left is not None:
        dom, cod = tensor(left, dom), tensor(left, cod)
    if right is not None:
        dom, cod = tensor(dom, right), tensor(cod, right)
    return Morphism(dom, cod, id_kron(l, f.matrix, r), check=False)


@dataclass(frozen=True)
class DualityData:
    V: Module
    Vstar: Module
    ev_l: Morphism     # V* (x) V -> 1
    coev_l: Morphism   # 1 -> V (x) V*
    ev_r: Morphism     # V (x) V* -> 1
    coev_r: Morphism   # 1 -> V* (x) V


def _pivot_matrices(V: Module):
    H = V.algebra
    return V.rho(H.pivot), V.rho(H.pivot_inverse)


@lru_cache(maxsize=2048)
def duality(V: Module, check: bool = True) -> DualityData:
    """ev_l(f(x)v) = f(v), coev_l = sum e_i(x)e^i, ev_r(v(x)f) = f(gv), coev_r = sum e^i(x)g^-1 e_i."""
    F = V.field
    d = V.dim
    one = F.one()
    unit = trivial(V.algebra)
    Vs = dual(V)
    G, Gi = _pivot_matrices(V)
    diag = {i * d + i: one for i in range(d)}
    ev_l = Matrix(F, 1, d * d, {0: diag} if d else {})
    coev_l = Matrix(F, d * d, 1, {k: {0: one} for k in diag})
    evr = {}
    for (j, i), v in G.items():
        evr[i * d + j] = v
    ev_r = Matrix(F, 1, d * d, {0: evr} if evr else {})
    coevr = {}
    for (k, i), v in Gi.items():
        coevr[i * d + k] = {0: v}
    coev_r = Matrix(F, d * d, 1, coevr)
    D = DualityData(V, Vs,
                    Morphism(tensor(Vs, V), unit, ev_l, check=False),
                    Morphism(unit, tensor(V, Vs), coev_l, check=False),
                    Morphism(tensor(V, Vs), unit, ev_r, check=False),
                    Morphism(unit, tensor(Vs, V), coev_r, check=False))
    if check:
        check_duality(D)
    return D


def check_duality(D: DualityData) -> None:
    """Raise AxiomViolation unless all four maps intertwine and both snake pairs hold."""
    for name in ("ev_l", "coev_l", "ev_r", "coev_r"):
        f = getattr(D, name)
        bad = intertwiner_defect(f.dom, f.cod, f.matrix)
        if bad is not None:
            raise AxiomViolation(f"{name} is a morphism", (bad,), f"module {D.V.name}")
    V, Vs = D.V, D.Vstar
    I, Is = V.identity(), Vs.identity()
    if (id_tensor(V, D.ev_l, None) @ id_tensor(None, D.coev_l, V)) != I:
        raise AxiomViolation("left snake on V", (), V.name)
    if (id_tensor(None, D.ev_l, Vs) @ id_tensor(Vs, D.coev_l, None)) != Is:
        raise AxiomViolation("left snake on V*", (), V.name)
    if (id_tensor(Vs, D.ev_r, None) @ id_tensor(None, D.coev_r, Vs)) != Is:
        raise AxiomViolation("right snake on V*", (), V.name)
    if (id_tensor(None, D.ev_r, V) @ id_tensor(V, D.coev_r, None)) != I:
        raise AxiomViolation("right snake on V", (), V.name)


def dual_morphism(f: Morphism, check: bool = True) -> Morphism:
    """f*: W* -> V* from the left duality; with ``check`` also compares against f-bullet."""
    V, W = f.dom, f.cod
    DV, DW = duality(V), duality(W)
    Ws, Vs = DW.Vstar, DV.Vstar
    step1 = id_tensor(Ws, DV.coev_l, None)             # W* -> W* V V*
    step2 = id_tensor(Ws, f, Vs)                       # -> W* W V*
    step3 = id_tensor(None, DW.ev_l, Vs)               # -> V*
    fs = step3 @ step2 @ step1
    if check:
        fb = dual_morphism_right(f)
        if fb.matrix != fs.matrix:
            raise AxiomViolation("f* = f-bullet", (), f"{V.name} -> {W.name}")
    return fs


def dual_morphism_right(f: Morphism) -> Morphism:
    """f-bullet: W* -> V* from the right duality."""
    V, W = f.dom, f.cod
    DV, DW = duality(V), duality(W)
    Ws, Vs = DW.Vstar, DV.Vstar
    step1 = id_tensor(None, DV.coev_r, Ws)             # W* -> V* V W*
    step2 = id_tensor(Vs, f, Ws)                       # -> V* W W*
    step3 = id_tensor(Vs, DW.ev_r, None)               # -> V*
    return step3 @ step2 @ step1


@lru_cache(maxsize=1024)
def gamma(V: Module, W: Module) -> Morphism:
    """gamma_{V,W}: W* (x) V* -> (V (x) W)* from the left duality."""
    VW = tensor(V, W)
    DV, DW, DVW = duality(V), duality(W), duality(VW)
    Ws, Vs, VWs = DW.Vstar, DV.Vstar, DVW.Vstar
    a = id_tensor(tensor(Ws, Vs), DVW.coev_l, None)            # -> W* V* V W (VW)*
    b = id_tensor(Ws, DV.ev_l, tensor(W, VWs))                 # -> W* W (VW)*
    c = id_tensor(None, DW.ev_l, VWs)                          # -> (VW)*
    return c @ b @ a


@lru_cache(maxsize=1024)
def gamma_prime(V: Module, W: Module) -> Morphism:
    """gamma'_{V,W}: W* (x) V* -> (V (x) W)* from the right duality."""
    VW = tensor(V, W)
    DV, DW, DVW = duality(V), duality(W), duality(VW)
    Ws, Vs, VWs = DW.Vstar, DV.Vstar, DVW.Vstar
    a = id_tensor(None, DVW.coev_r, tensor(Ws, Vs))            # -> (VW)* V W W* V*
    b = id_tensor(tensor(VWs, V), DW.ev_r, Vs)                 # -> (VW)* V V*
    c = id_tensor(VWs, DV.ev_r, None)                          # -> (VW)*
    return c @ b @ a


def gamma_direct(V: Module, W: Module) -> Morphism:
    """Closed form of gamma: e^j (x) e^i  ->  (e_i (x) e_j)^*, a permutation matrix."""
    F = V.field
    dv, dw = V.dim, W.dim
    one = F.one()
    data = {(i * dw + j): {j * dv + i: one} for i in range(dv) for j in range(dw)}
    return Morphism(tensor(dual(W), dual(V)), dual(tensor(V, W)), Matrix(F, dv * dw, dv * dw, data), check=False)


@lru_cache(maxsize=1024)
def phi(V: Module) -> Morphism:
    """phi_V = (ev_r (x) Id_{V**})(Id_V (x) coev_l(V*)) : V -> V**."""
    D = duality(V)
    DD = duality(D.Vstar)
    Vss = DD.Vstar
    step1 = id_tensor(V, DD.coev_l, None)                      # V -> V V* V**
    step2 = id_tensor(None, D.ev_r, Vss)                       # -> V**
    return step2 @ step1


def _split_check(f: Morphism, V: Module, X: Module, W: Module, side: str):
    if side == "r":
        dom, cod = tensor(V, W), tensor(X, W)
    else:
        dom, cod = tensor(W, V), tensor(W, X)
    if f.dom != dom or f.cod != cod:
        raise ShapeMismatch(f"morphism {f.dom.name} -> {f.cod.name} does not factor over {W.name}")


def ptr_r_composite(W: Module, f: Morphism, V: Module, X: Module) -> Morphism:
    """(Id_X (x) ev_r)(f (x) Id_{W*})(Id_V (x) coev_l), formed literally."""
    _split_check(f, V, X, W, "r")
    D = duality(W)
    a = id_tensor(V, D.coev_l, None)
    b = id_tensor(None, f, D.Vstar)
    c = id_tensor(X, D.ev_r, None)
    return c @ b @ a


def ptr_l_composite(W: Module, f: Morphism, V: Module, X: Module) -> Morphism:
    """(ev_l (x) Id_X)(Id_{W*} (x) f)(coev_r (x) Id_V), formed literally."""
    _split_check(f, V, X, W, "l")
    D = duality(W)
    a = id_tensor(None, D.coev_r, V)
    b = id_tensor(D.Vstar, f, None)
    c = id_tensor(None, D.ev_l, X)
    return c @ b @ a


def ptr_r(W: Module, f: Morphism, V: Module, X: Module, check: bool = False) -> Morphism:
    """Right partial trace over W: entry (x, v) = sum_{i,k} f[(x,k),(v,i)] rho_W(g)[i,k]."""
    _split_check(f, V, X, W, "r")
    F = f.field
    w = W.dim
    G, _ = _pivot_matrices(W)
    Gd = {}
    for (i, k), v in G.items():
        Gd.setdefault(k, {})[i] = v
    data: dict = {}
    for (r, c), val in f.matrix.items():
        x, k = divmod(r, w)
        v, i = divmod(c, w)
        gik = Gd.get(k, {}).get(i)
        if gik:
            row = data.setdefault(x, {})
            row[v] = row.get(v, 0) + val * gik
    data = {x: {v: y for v, y in row.items() if y} for x, row in data.items()}
    data = {x: row for x, row in data.items() if row}
    out = Morphism(V, X, Matrix(F, X.dim, V.dim, data), check=False)
    if check and out != ptr_r_composite(W, f, V, X):
        raise AxiomViolation("right partial trace closed form", ())
    return out


def ptr_l(W: Module, f: Morphism, V: Module, X: Module, check: bool = False) -> Morphism:
    """Left partial trace over W: entry (x, j) = sum_{i,k} rho_W(g^-1)[k,i] f[(i,x),(k,j)]."""
    _split_check(f, V, X, W, "l")
    F = f.field
    vd, xd = V.dim, X.dim
    _, Gi = _pivot_matrices(W)
    data: dict = {}
    for (r, c), val in f.matrix.items():
        i, x = divmod(r, xd)
        k, j = divmod(c, vd)
        gki = Gi[k, i]
        if gki:
            row = data.setdefault(x, {})
            row[j] = row.get(j, 0) + val * gki
    data = {x: {v: y for v, y in row.items() if y} for x, row in data.items()}
    data = {x: row for x, row in data.items() if row}
    out = Morphism(V, X, Matrix(F, X.dim, V.dim, data), check=False)
    if check and out != ptr_l_composite(W, f, V, X):
        raise AxiomViolation("left partial trace closed form", ())
    return out


def dimension(W: Module):
    """Quantum dimension: the scalar ptr_r(W, Id_W) = trace of the pivot on W."""
    return _pivot_matrices(W)[0].trace()


def double_dual_morphism(f: Morphism) -> Morphism:
    return dual_morphism(dual_morphism(f))

