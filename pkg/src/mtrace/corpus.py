"""Named modules, morphisms and trace tuples for one algebra (a CLI session)."""
from __future__ import annotations

import json
from pathlib import Path

from .diagdsl import Env
from .hopfalg import HopfAlgebra, builtin, load_hopf
from .repcat import Module, indecomposable_projectives, load_module, regular, trivial
from .traces import TraceTuple, make_trace_tuple

__all__ = ["Session", "load_algebra"]


def load_algebra(path: str | None = None, builtin_spec: list | None = None,
                 sabotage: str | None = None) -> HopfAlgebra:
    """Load from a JSON file or a builtin; ``sabotage='pivot'`` replaces the pivot by 1 unchecked."""
    if builtin_spec:
        H = builtin(builtin_spec[0], *builtin_spec[1:])
    elif path:
        H = load_hopf(json.loads(Path(path).read_text()))
    else:
        raise ValueError("no algebra given")
    if sabotage == "pivot":
        H = H.with_pivot(H.unit, validate=False)
    elif sabotage:
        raise ValueError(f"unknown sabotage {sabotage!r}")
    return H


class Session:
    """One algebra, a module registry and an optional trace tuple."""

    def __init__(self, H: HopfAlgebra, seed: int = 0):
        self.algebra = H
        self.seed = seed
        self.modules: dict = {"triv": trivial(H), "reg": regular(H)}
        self.morphisms: dict = {}
        self.tuple: TraceTuple | None = None
        self._projectives = None

    def projectives(self) -> list:
        if self._projectives is None:
            self._projectives = indecomposable_projectives(self.algebra, self.seed)
            one = trivial(self.algebra)
            nontrivial_chars = []
            for t, R in enumerate(self._projectives):
                self.modules.setdefault(f"P{t}", R.P)
                self.modules.setdefault(f"S{t}", R.head)
                if R.head.dim == 1 and R.head != one:
                    nontrivial_chars.append(R.head)
            if len(nontrivial_chars) == 1:
                self.modules.setdefault("sign", nontrivial_chars[0])
        return self._projectives

    def load_module_file(self, name: str, path: str) -> Module:
        M = load_module(self.algebra, json.loads(Path(path).read_text())).renamed(name)
        self.modules[name] = M
        return M

    def auto_tuple(self) -> TraceTuple:
        R = self.projectives()[0]
        one = trivial(self.algebra)
        alpha = one if R.socle == one else R.socle
        beta = one if R.head == one else R.head
        from .repcat import Morphism
        T = make_trace_tuple(R.P, alpha, beta, Morphism(alpha, R.P, R.eta.matrix, check=False),
                             Morphism(R.P, beta, R.eps.matrix, check=False))
        self.set_tuple(T)
        return T

    def named_tuple(self, P: str, alpha: str, beta: str) -> TraceTuple:
        self.projectives()
        T = make_trace_tuple(self.module(P), self.module(alpha), self.module(beta))
        self.set_tuple(T)
        return T

    def set_tuple(self, T: TraceTuple):
        self.tuple = T
        self.modules["a"] = T.alpha
        self.modules["b"] = T.beta
        self.morphisms["eta"] = T.eta
        self.morphisms["eps"] = T.eps

    def module(self, name: str) -> Module:
        if name not in self.modules:
            self.projectives()
        if name not in self.modules:
            raise KeyError(f"unknown module {name!r}; known: {sorted(self.modules)}")
        return self.modules[name]

    def env(self) -> Env:
        self.projectives()
        return Env(self.algebra, dict(self.modules), dict(self.morphisms))
