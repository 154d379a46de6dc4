"""Named invariant suites (pivotal, mtrace, cy) run over a session's corpus.

Every check is a boolean; any exception inside a check is recorded as a
failure together with its message so that a report is always produced.
"""
from __future__ import annotations

import random
from typing import Callable

from .errors import MtraceError
from .pivotal import (check_duality, dimension, dual_morphism, dual_morphism_right, duality, gamma,
                      gamma_prime, phi, ptr_l, ptr_l_composite, ptr_r, ptr_r_composite)
from .repcat import (decompose, dual, hom_space, random_morphism, tensor, trivial)
from .traces import (DualTrace, LeftTrace, Pushforward, RightTrace, compat_check, cut_identities,
                     frobenius_extension_check, make_trace_tuple, mtrace, nondeg_pairing, toy_trace,
                     twisted_cy_check, uniqueness_probe)

__all__ = ["SuiteRunner", "SUITES", "run_suites"]

SUITES = ("pivotal", "mtrace", "cy")


class SuiteRunner:
    def __init__(self, session, n: int = 10, seed: int | None = None):
        self.S = session
        self.H = session.algebra
        self.n = n
        self.seed = session.seed if seed is None else seed
        self.results: dict = {}
        self.errors: dict = {}

    # bookkeeping

    def record(self, name: str, fn: Callable[[], bool]):
        try:
            ok = bool(fn())
        except (MtraceError, AssertionError, ArithmeticError) as exc:
            ok = False
            self.errors[name] = f"{type(exc).__name__}: {exc}"
        self.results[name] = ok
        return ok

    def rng(self, tag: str) -> random.Random:
        return random.Random(f"{self.seed}:{tag}")

    def corpus(self) -> list:
        """Unit, simples, indecomposable projectives and the regular module."""
        S = self.S
        S.projectives()
        mods = [S.modules["triv"]]
        names = sorted(k for k in S.modules if k[0] in "SP" and k[1:].isdigit())
        mods += [S.modules[k] for k in names]
        mods.append(S.modules["reg"])
        seen, out = set(), []
        for M in mods:
            if M not in seen:
                seen.add(M)
                out.append(M)
        return out

    # pivotal suite

    def pivotal(self):
        H = self.H
        try:
            mods = self.corpus()
        except (MtraceError, AssertionError) as exc:
            self.results["pivotal.corpus"] = False
            self.errors["pivotal.corpus"] = f"{type(exc).__name__}: {exc}"
            return
        rng = self.rng("pivotal")

        def snakes():
            for M in mods:
                check_duality(duality(M, check=False))
            return True

        self.record("pivotal.snakes", snakes)

        def f_star():
            for _ in range(self.n):
                V, W = rng.choice(mods), rng.choice(mods)
                f = random_morphism(V, W, rng)
                if dual_morphism(f, check=False) != dual_morphism_right(f):
                    return False
                if dual_morphism(f, check=False).matrix != f.matrix.T:
                    return False
            return True

        self.record("pivotal.f_star_equals_f_bullet", f_star)

        def gammas():
            for V in mods:
                for W in mods:
                    g, gp = gamma(V, W), gamma_prime(V, W)
                    if g != gp or not g.is_invertible():
                        return False
            return True

        self.record("pivotal.gamma_equals_gamma_prime", gammas)

        def naturality():
            for M in mods:
                if not phi(M).is_invertible():
                    return False
            for _ in range(self.n):
                V, W = rng.choice(mods), rng.choice(mods)
                f = random_morphism(V, W, rng)
                ff = dual_morphism(dual_morphism(f, check=False), check=False)
                if phi(W) @ f != ff @ phi(V):
                    return False
            return True

        self.record("pivotal.phi_natural", naturality)

        def monoidal():
            small = [M for M in mods if M.dim <= 4]
            for V in small:
                for W in small:
                    VW = tensor(V, W)
                    # phi_{VW} = (gamma_{V,W}*)^-1 gamma_{W*,V*} (phi_V (x) phi_W)
                    lhs = phi(VW)
                    g1 = gamma(V, W)                                 # W* V* -> (VW)*
                    g2 = gamma(dual(W), dual(V))                     # V** W** -> (W* V*)*
                    rhs = dual_morphism(g1, check=False).inverse() @ g2 @ phi(V).tensor(phi(W))
                    if lhs != rhs:
                        return False
            return True

        self.record("pivotal.phi_monoidal", monoidal)

        def partial_traces():
            for _ in range(max(1, self.n // 2)):
                V, W, X = rng.choice(mods[:4]), rng.choice(mods[:4]), rng.choice(mods[:4])
                f = random_morphism(tensor(V, W), tensor(X, W), rng)
                if ptr_r(W, f, V, X) != ptr_r_composite(W, f, V, X):
                    return False
                g = random_morphism(tensor(W, V), tensor(W, X), rng)
                if ptr_l(W, g, V, X) != ptr_l_composite(W, g, V, X):
                    return False
                h = random_morphism(V, X, rng)
                if ptr_r(W, h.tensor(W.identity()), V, X) != h.scale(dimension(W)):
                    return False
            return True

        self.record("pivotal.partial_trace_formulas", partial_traces)

    # mtrace suite

    def _tuple(self):
        if self.S.tuple is None:
            self.S.auto_tuple()
        return self.S.tuple

    def mtrace(self):
        H = self.H
        try:
            T = self._tuple()
        except (MtraceError, AssertionError) as exc:
            self.results["mtrace.tuple"] = False
            self.errors["mtrace.tuple"] = f"{type(exc).__name__}: {exc}"
            return
        self.results["mtrace.tuple"] = True
        tr, lt = RightTrace(T), LeftTrace(T)
        projs = [R.P for R in self.S.projectives()]
        rng = self.rng("mtrace")
        one = trivial(H)
        a, b, P = T.alpha, T.beta, T.P

        self.record("mtrace.projectives_in_ideal",
                    lambda: all(tr.witness(Q).member and lt.witness(Q).member for Q in projs))

        def nonprojective():
            semisimple = all(R.P.dim == R.head.dim for R in self.S.projectives())
            return tr.witness(one).member == semisimple

        self.record("mtrace.unit_membership_matches_semisimplicity", nonprojective)

        def existence():
            ok = True
            for Q in projs:
                basis = hom_space(tensor(a, Q), tensor(b, Q))
                for _ in range(self.n):
                    f = random_morphism(tensor(a, Q), tensor(b, Q), rng, basis)
                    r = mtrace(T, Q, f, tr=tr)
                    ok = ok and r.via_s == r.via_t
            return ok

        self.record("mtrace.two_formula_agreement", existence)

        def choice():
            for Q in projs:
                f = random_morphism(tensor(a, Q), tensor(b, Q), rng)
                if not uniqueness_probe(T, Q, f, n=10, seed=rng.randrange(1 << 30), tr=tr).perturbation_ok:
                    return False
            return True

        self.record("mtrace.choice_independence", choice)

        def partial_trace():
            Ws = [M for M in self.corpus() if M.dim <= 3]
            for _ in range(self.n):
                U, W = rng.choice(projs), rng.choice(Ws)
                UW = tensor(U, W)
                f = random_morphism(tensor(a, UW), tensor(b, UW), rng)
                if tr(UW, f) != tr(U, ptr_r(W, f, tensor(a, U), tensor(b, U))):
                    return False
            return True

        self.record("mtrace.partial_trace", partial_trace)

        def cyclicity():
            for _ in range(self.n):
                U, V = rng.choice(projs), rng.choice(projs)
                gb = hom_space(U, V)
                fb = hom_space(tensor(a, V), tensor(b, U))
                if not gb or not fb:
                    continue
                g = random_morphism(U, V, rng, gb)
                f = random_morphism(tensor(a, V), tensor(b, U), rng, fb)
                if tr(V, b.identity().tensor(g) @ f) != tr(U, f @ a.identity().tensor(g)):
                    return False
            return True

        self.record("mtrace.cyclicity", cyclicity)

        def brackets():
            for _ in range(self.n):
                f = random_morphism(P, P, rng)
                c = T.bracket(f)
                if T.eps @ f != T.eps.scale(c) or f @ T.eta != T.eta.scale(c):
                    return False
                if T.bracket_eps(T.eps @ f) != c or T.bracket_eta(f @ T.eta) != c:
                    return False
            return T.bracket(P.identity()) == 1 and T.bracket_eps(T.eps) == 1

        self.record("mtrace.bracket_lemma", brackets)

        def normalization():
            if b == one:
                return tr(P, T.eta.tensor(T.eps)) == 1
            if a == one:
                return tr(P, T.eps.tensor(T.eta)) == 1
            return True

        self.record("mtrace.normalization", normalization)

        def scaling():
            F = H.field
            five = F.coerce(5)
            rep = uniqueness_probe(T, P, T.eta.tensor(T.eps) if b == one else T.eps.tensor(T.eta),
                                   n=0, alt=lambda V, f: five * tr(V, f), tr=tr,
                                   samples=[(Q, random_morphism(tensor(a, Q), tensor(b, Q), rng)) for Q in projs])
            return rep.scalar == five and rep.scaling_ok
        if b == one or a == one:
            self.record("mtrace.uniqueness_scaling", scaling)

        def cut():
            for _ in range(self.n):
                V = rng.choice(projs)
                f = random_morphism(tensor(P, V), tensor(b, V), rng)
                g = random_morphism(tensor(a, V), tensor(P, V), rng)
                h = random_morphism(tensor(P, V), tensor(P, V), rng)
                if not all(cut_identities(T, V, f, g, h, tr)):
                    return False
            return True

        self.record("mtrace.cut_identities", cut)

        def nondeg():
            for Q in projs:
                for V in projs:
                    rep = nondeg_pairing(T, Q, V, tr)
                    if rep.dims[0] != rep.dims[1] or not rep.nondegenerate:
                        return False
            return True

        self.record("mtrace.nondegenerate_pairing", nondeg)

        def compat():
            V = W = P
            dom = tensor(tensor(V, a), W)
            cod = tensor(tensor(V, b), W)
            basis = hom_space(dom, cod)
            for _ in range(self.n):
                f = random_morphism(dom, cod, rng, basis)
                if not compat_check(T, V, W, f, tr, lt):
                    return False
            return True

        self.record("mtrace.compatibility", compat)

        def closure():
            for Q in projs:
                for W in self.corpus():
                    if W.dim > 4:
                        continue
                    if not tr.witness(tensor(Q, W)).member:
                        return False
            big = tensor(P, P)
            for summand in decompose(big, self.seed).summands:
                if not tr.witness(summand).member:
                    return False
            return True

        self.record("mtrace.ideal_closure", closure)

        def double_dual():
            D = DualTrace(tr)
            DD = DualTrace(D)
            for _ in range(self.n):
                V = rng.choice(projs)
                f = random_morphism(tensor(a, V), tensor(b, V), rng)
                g = phi(b).tensor(V.identity()) @ f @ phi(a).inverse().tensor(V.identity())
                if tr(V, f) != DD(V, g):
                    return False
            return True

        self.record("mtrace.double_dual", double_dual)

        def dual_left_cyclicity():
            D = DualTrace(tr)
            a2, b2 = D.alpha, D.beta
            for _ in range(self.n):
                U, V = rng.choice(projs), rng.choice(projs)
                gb, fb = hom_space(U, V), hom_space(tensor(V, a2), tensor(U, b2))
                if not gb or not fb:
                    continue
                g = random_morphism(U, V, rng, gb)
                f = random_morphism(tensor(V, a2), tensor(U, b2), rng, fb)
                if D(V, g.tensor(b2.identity()) @ f) != D(U, f @ g.tensor(a2.identity())):
                    return False
            return True

        self.record("mtrace.dual_left_cyclicity", dual_left_cyclicity)

        def pushforward():
            F = H.field
            ab = tensor(dual(a), b)
            for _ in range(self.n):
                c1, c2 = F.coerce(rng.randint(1, 9)), F.coerce(rng.randint(-9, -1))
                h, hp = ab.identity().scale(c1), ab.identity().scale(c2)
                t1 = Pushforward(tr, h, a, b)
                t2 = Pushforward(t1, hp, a, b)
                t12 = Pushforward(tr, h @ hp, a, b)
                V = rng.choice(projs)
                f = random_morphism(tensor(a, V), tensor(b, V), rng)
                if not (t2(V, f) == t12(V, f) == c1 * c2 * tr(V, f)):
                    return False
            return True

        self.record("mtrace.pushforward_composition", pushforward)

        def bijection():
            ab = tensor(dual(a), b)
            there = Pushforward(tr, ab.identity(), one, ab)       # (1, a* b)-trace
            back = Pushforward(there, ab.identity(), a, b)        # back to (a, b)
            for _ in range(self.n):
                V = rng.choice(projs)
                f = random_morphism(tensor(a, V), tensor(b, V), rng)
                if back(V, f) != tr(V, f):
                    return False
                g = random_morphism(tensor(one, V), tensor(ab, V), rng)
                if there(V, g) != tr(V, there.push(V, g)):
                    return False
            return True

        self.record("mtrace.bijection_round_trip", bijection)

        def toy():
            T0 = make_trace_tuple(one, one, one, one.identity(), one.identity())
            t0 = RightTrace(T0)
            for _ in range(self.n):
                V = rng.choice(projs)
                f = random_morphism(V, V, rng)
                if toy_trace(one, V, f) != t0(V, f):
                    return False
            return True

        self.record("mtrace.toy_trace", toy)

    # cy suite

    def cy(self):
        try:
            T = self._tuple()
        except (MtraceError, AssertionError) as exc:
            self.results["cy.tuple"] = False
            self.errors["cy.tuple"] = f"{type(exc).__name__}: {exc}"
            return
        tr = RightTrace(T)
        projs = [R.P for R in self.S.projectives()]

        def pairs():
            for U in projs:
                for V in projs:
                    r = twisted_cy_check(T, U, V, n=self.n, seed=self.seed, tr=tr)
                    if not (r["dims_equal"] and r["full_rank"] and r["cyclicity"]):
                        return False
            return True

        self.record("cy.twisted_calabi_yau", pairs)
        frob = {}

        def frobenius():
            frob.update(frobenius_extension_check(self.H, self.seed))
            return (frob["alpha_Q_iso_Q"] and frob["nondegenerate"] and frob["twisted_symmetric"]
                    and frob["nu_is_algebra_map"])

        self.record("cy.frobenius_extension", frobenius)

        def control():
            zero = self.H.field.zero()
            r = frobenius_extension_check(self.H, self.seed, functional=lambda m: zero)
            return not r["nondegenerate"]

        self.record("cy.zero_functional_rejected", control)
        if frob:
            self.results["cy.twist_is_identity"] = frob.get("nu_is_identity")
            self.results["cy.alpha_is_unit"] = T.alpha == trivial(self.H)

    def run(self, suites) -> dict:
        for s in suites:
            getattr(self, s)()
        return self.results


INFO_KEYS = ("cy.twist_is_identity", "cy.alpha_is_unit")


def run_suites(session, suites, n: int = 10, seed: int | None = None) -> dict:
    R = SuiteRunner(session, n, seed)
    R.run(suites)
    verdicts = {k: v for k, v in R.results.items() if k not in INFO_KEYS}
    return {"checks": verdicts, "info": {k: R.results[k] for k in INFO_KEYS if k in R.results},
            "errors": R.errors, "ok": all(verdicts.values())}
