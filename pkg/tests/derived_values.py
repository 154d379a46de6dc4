"""Recompute every oracle fixture with the package itself.

Each entry maps a fixture key to ``(field, value)``.  Scalars are returned as
field elements and compared after parsing the fixture, never as strings.
"""
import json
from pathlib import Path

from mtrace.errors import AxiomViolation, HomNotLine
from mtrace.hopfalg import group_z, load_hopf, primitive_idempotents, sweedler, taft
from mtrace.pivotal import dimension, dual_morphism, duality, phi, ptr_r
from mtrace.repcat import (abs_indec_report, character, decompose, dual, hom_space,
                           indecomposable_projectives, is_isomorphic, regular, tensor, trivial)
from mtrace.traces import (RightTrace, frobenius_extension_check, ideal_member, make_trace_tuple,
                           nondeg_pairing, projective_tuple)

FIXTURES = Path(__file__).resolve().parent / "fixtures"

SCALAR = "scalar"
MULTISET = "multiset"


def _violation(fn):
    try:
        fn()
    except AxiomViolation as exc:
        return exc.witness[0]
    return None


def _sweedler(out):
    H = sweedler()
    F = H.field
    out["sweedler.valid"] = H.validate() is H
    out["sweedler.pivot_one.violation_index"] = _violation(lambda: H.with_pivot(H.unit))
    bad = json.loads((FIXTURES / "bad.json").read_text())
    out["bad_json.coassociativity_index"] = _violation(lambda: load_hopf(bad))
    triv = trivial(H)
    sign = character(H, [1, -1, 0, 0], "sign")
    out["sweedler.sign_is_module"] = sign.dim == 1
    out["sweedler.hom_dim.triv_sign"] = len(hom_space(triv, sign))
    out["sweedler.hom_dim.signsign_triv"] = len(hom_space(tensor(sign, sign), triv))
    out["sweedler.signsign_iso_triv"] = is_isomorphic(tensor(sign, sign), triv)
    out["sweedler.dual_sign_iso_sign"] = is_isomorphic(dual(sign), sign)
    projs = indecomposable_projectives(H)
    P0, P1 = projs[0].P, projs[1].P
    rep = abs_indec_report(P0)
    out["sweedler.hom_dim.Peps_Peps"] = len(hom_space(P0, P0))
    out["sweedler.radical_dim.End_Peps"] = rep.dim_rad
    out["sweedler.abs_indec.Peps"] = list(rep.as_tuple())
    out["sweedler.regular.summand_dims"] = sorted(S.dim for S in decompose(regular(H)).summands)
    out["sweedler.primitive_idempotents"] = len(primitive_idempotents(H.algebra))
    out["sweedler.Peps.socle_char"] = (SCALAR, [projs[0].socle.action[a][0, 0] for a in range(H.dim)])
    out["sweedler.Peps.head_char"] = (SCALAR, [projs[0].head.action[a][0, 0] for a in range(H.dim)])
    out["sweedler.P_dim"] = P0.dim
    out["sweedler.ev_r.sign"] = (SCALAR, duality(sign).ev_r.matrix[0, 0])
    reg = regular(H)
    out["sweedler.dims"] = {k: (SCALAR, dimension(M)) for k, M in
                            (("triv", triv), ("sign", sign), ("Peps", P0), ("Psig", P1), ("reg", reg))}
    out["sweedler.phi_equals_rho_pivot"] = all(phi(M).matrix == M.rho(H.pivot)
                                               for M in (P0, P1, sign, reg))
    try:
        make_trace_tuple(P0, triv, triv)
        out["sweedler.tuple_unit_unit.hom_alpha_dim"] = None
    except HomNotLine as exc:
        out["sweedler.tuple_unit_unit.hom_alpha_dim"] = exc.dim
    T = projective_tuple(H)
    tr = RightTrace(T)
    out["sweedler.t_eta_eps"] = (SCALAR, tr(P0, T.eta.tensor(T.eps)))
    basis = hom_space(tensor(T.alpha, P0), tensor(T.beta, P0))
    out["sweedler.t_basis.dim"] = len(basis)
    out["sweedler.t_basis.nonzero"] = any(tr(P0, f) for f in basis)
    out["sweedler.t_eta_eps_sign"] = (SCALAR, tr(tensor(P0, sign),
                                                 T.eta.tensor(T.eps).tensor(sign.identity())))
    out["sweedler.membership"] = {}
    for k, M in (("Peps", P0), ("Psig", P1), ("triv", triv)):
        w = ideal_member(T, M)
        out["sweedler.membership"][k] = [w.in_I_alpha, w.in_I_beta]
    out["sweedler.gram"] = {}
    for qn, Q in (("Peps", P0), ("Psig", P1)):
        for vn, V in (("Peps", P0), ("Psig", P1)):
            rep = nondeg_pairing(T, Q, V, tr)
            out["sweedler.gram"][f"{qn},{vn}"] = [rep.dims[0], rep.dims[1], rep.gram.rank()]
    ok = True
    for V in (P0, P1):
        IdV = V.identity()
        for f in hom_space(tensor(T.P, V), tensor(T.beta, V)):
            ok = ok and tr(V, f @ T.eta.tensor(IdV)) == T.bracket_eps(ptr_r(V, f, T.P, T.beta))
        for g in hom_space(tensor(T.alpha, V), tensor(T.P, V)):
            ok = ok and tr(V, T.eps.tensor(IdV) @ g) == T.bracket_eta(ptr_r(V, g, T.alpha, T.P))
    out["sweedler.cut_identities_on_basis"] = ok
    out["sweedler.frobenius.dim_end"] = frobenius_extension_check(H)["dim_end"]
    return F


def _taft(out):
    H = taft(3)
    F = H.field
    out["taft3.valid"] = H.validate() is H
    T = projective_tuple(H)
    g = H.index("g")
    out["taft3.P_dim"] = T.P.dim
    out["taft3.alpha_g"] = (SCALAR, T.alpha.action[g][0, 0])
    out["taft3.beta_g"] = (SCALAR, T.beta.action[g][0, 0])
    tr = RightTrace(T)
    out["taft3.t_eta_eps"] = (SCALAR, tr(T.P, T.eta.tensor(T.eps)))
    out["taft3.regular.summand_dims"] = sorted(S.dim for S in decompose(regular(H)).summands)
    simples = [R.head for R in indecomposable_projectives(H)]
    out["taft3.simple_dims"] = (MULTISET, [dimension(S) for S in simples])
    out["taft3.t_eta_eps_simple"] = (MULTISET, [
        tr(tensor(T.P, S), T.eta.tensor(T.eps).tensor(S.identity())) for S in simples])
    return F


def _group(out):
    import random
    from mtrace.repcat import random_morphism
    H = group_z(2)
    F = H.field
    out["group_z2.valid"] = H.validate() is H
    T = projective_tuple(H)
    out["group_z2.P_dim"] = T.P.dim
    w = ideal_member(T, trivial(H))
    out["group_z2.triv_member"] = [w.in_I_alpha, w.in_I_beta]
    out["group_z2.frobenius.dim_end"] = frobenius_extension_check(H)["dim_end"]
    reg = regular(H)
    out["group_z2.t_id_reg"] = (SCALAR, RightTrace(T)(reg, reg.identity()))
    f = random_morphism(reg, reg, random.Random(0))
    out["group_z2.f_star_is_transpose"] = dual_morphism(f).matrix == f.matrix.T
    return F


def compute() -> dict:
    """key -> (field, value) for every fixture key the package can produce."""
    result = {}
    for build in (_sweedler, _taft, _group):
        part: dict = {}
        F = build(part)
        for k, v in part.items():
            result[k] = (F, v)
    return result


def matches(F, expected, got) -> bool:
    if isinstance(got, dict):
        return (isinstance(expected, dict) and expected.keys() == got.keys()
                and all(matches(F, expected[k], got[k]) for k in got))
    if isinstance(got, tuple) and got and got[0] == SCALAR:
        value = got[1]
        if isinstance(value, list):
            return (isinstance(expected, list) and len(expected) == len(value)
                    and all(F.parse(e) == v for e, v in zip(expected, value)))
        return F.parse(expected) == value
    if isinstance(got, tuple) and got and got[0] == MULTISET:
        want = sorted(json.dumps(F.encode(F.parse(json.loads(s)))) for s in expected)
        have = sorted(json.dumps(F.encode(v)) for v in got[1])
        return want == have
    return expected == got and type(expected) is type(got)
