"""Exact scalars over Q, GF(p) and cyclotomic fields Q(zeta_n).

Rationals are plain :class:`fractions.Fraction` values.  Prime-field and
cyclotomic elements are small immutable classes that carry their modulus and
refuse to mix with elements of a different field.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Sequence

from .errors import DivisionByZero, FieldMismatch, SchemaError, UnsupportedCharacteristic

__all__ = [
    "FieldSpec", "GFElement", "CycElement", "QQ", "GF", "Cyclotomic",
    "cyclotomic_poly", "scalar_arith", "roots_in_field", "field_of",
]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


# -- integer polynomial helpers (coefficient lists, lowest degree first) -----

def _poly_divmod_int(num, den):
    num = list(num)
    out = [0] * max(len(num) - len(den) + 1, 1)
    lead = den[-1]
    for k in range(len(num) - len(den), -1, -1):
        q, r = divmod(num[k + len(den) - 1], lead)
        assert r == 0
        out[k] = q
        for i, d in enumerate(den):
            num[k + i] -= q * d
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return out, num


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple:
    """Integer coefficients of Phi_n, lowest degree first.

    Computed by dividing x^n - 1 by Phi_d for every proper divisor d of n.
    """
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod_int(poly, list(cyclotomic_poly(d)))
            assert all(c == 0 for c in rem)
    return tuple(poly)


# -- GF(p) -------------------------------------------------------------------

class GFElement:
    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _other(self, o):
        if isinstance(o, GFElement):
            if o.p != self.p:
                raise FieldMismatch(f"GF({self.p}) vs GF({o.p})")
            return o.v
        if isinstance(o, int):
            return o % self.p
        if isinstance(o, Fraction):
            if o.denominator % self.p == 0:
                raise DivisionByZero(f"{o} has no image in GF({self.p})")
            return o.numerator * pow(o.denominator, -1, self.p) % self.p
        if isinstance(o, CycElement):
            raise FieldMismatch(f"GF({self.p}) vs cyclotomic({o.n})")
        return None

    def __add__(self, o):
        w = self._other(o)
        return NotImplemented if w is None else GFElement(self.v + w, self.p)

    __radd__ = __add__

    def __sub__(self, o):
        w = self._other(o)
        return NotImplemented if w is None else GFElement(self.v - w, self.p)

    def __rsub__(self, o):
        w = self._other(o)
        return NotImplemented if w is None else GFElement(w - self.v, self.p)

    def __mul__(self, o):
        w = self._other(o)
        return NotImplemented if w is None else GFElement(self.v * w, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return GFElement(-self.v, self.p)

    def inverse(self):
        if self.v == 0:
            raise DivisionByZero(f"0 has no inverse in GF({self.p})")
        return GFElement(pow(self.v, self.p - 2, self.p), self.p)

    def __truediv__(self, o):
        w = self._other(o)
        if w is None:
            return NotImplemented
        return self * GFElement(w, self.p).inverse()

    def __rtruediv__(self, o):
        w = self._other(o)
        if w is None:
            return NotImplemented
        return GFElement(w, self.p) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return GFElement(pow(self.v, k, self.p), self.p)

    def __eq__(self, o):
        try:
            w = self._other(o)
        except (FieldMismatch, DivisionByZero):
            return False
        return w is not None and w == self.v

    def __hash__(self):
        return hash(self.v)

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"GF{self.p}({self.v})"


# -- Q(zeta_n) ---------------------------------------------------------------

@lru_cache(maxsize=None)
def _reduction_table(n: int):
    """Rows x^k mod Phi_n for k < 2*phi(n) - 1, as Fraction tuples."""
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    rows = []
    cur = [Fraction(0)] * deg
    if deg:
        cur[0] = Fraction(1)
    for _ in range(max(2 * deg - 1, 1)):
        rows.append(tuple(cur))
        # multiply by x and reduce with the monic Phi_n
        top = cur[-1] if deg else Fraction(0)
        nxt = [Fraction(0)] + cur[:-1]
        for i in range(deg):
            nxt[i] -= top * phi[i]
        cur = nxt
    return rows


class CycElement:
    """Element of Q(zeta_n) as a polynomial in zeta of degree < phi(n)."""

    __slots__ = ("c", "n")

    def __init__(self, coeffs: Sequence, n: int):
        deg = len(cyclotomic_poly(n)) - 1
        cs = [Fraction(x) for x in coeffs]
        if len(cs) > deg:
            cs = _reduce_poly(cs, n)
        cs += [Fraction(0)] * (deg - len(cs))
        self.c = tuple(cs)
        self.n = n

    @classmethod
    def _raw(cls, coeffs: tuple, n: int):
        obj = object.__new__(cls)
        obj.c = coeffs
        obj.n = n
        return obj

    def _other(self, o):
        if isinstance(o, CycElement):
            if o.n != self.n:
                raise FieldMismatch(f"cyclotomic({self.n}) vs cyclotomic({o.n})")
            return o.c
        if isinstance(o, (int, Fraction)):
            return (Fraction(o),) + (Fraction(0),) * (len(self.c) - 1)
        if isinstance(o, GFElement):
            raise FieldMismatch(f"cyclotomic({self.n}) vs GF({o.p})")
        return None

    def __add__(self, o):
        w = self._other(o)
        if w is None:
            return NotImplemented
        return CycElement._raw(tuple(a + b for a, b in zip(self.c, w)), self.n)

    __radd__ = __add__

    def __sub__(self, o):
        w = self._other(o)
        if w is None:
            return NotImplemented
        return CycElement._raw(tuple(a - b for a, b in zip(self.c, w)), self.n)

    def __rsub__(self, o):
        w = self._other(o)
        if w is None:
            return NotImplemented
        return CycElement._raw(tuple(b - a for a, b in zip(self.c, w)), self.n)

    def __neg__(self):
        return CycElement._raw(tuple(-a for a in self.c), self.n)

    def __mul__(self, o):
        if isinstance(o, (int, Fraction)):
            return CycElement._raw(tuple(a * o for a in self.c), self.n)
        w = self._other(o)
        if w is None:
            return NotImplemented
        deg = len(self.c)
        if deg == 1:
            return CycElement._raw((self.c[0] * w[0],), self.n)
        conv = [Fraction(0)] * (2 * deg - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(w):
                    if b:
                        conv[i + j] += a * b
        table = _reduction_table(self.n)
        out = list(conv[:deg])
        for k in range(deg, 2 * deg - 1):
            ck = conv[k]
            if ck:
                for i, t in enumerate(table[k]):
                    if t:
                        out[i] += ck * t
        return CycElement._raw(tuple(out), self.n)

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise DivisionByZero(f"0 has no inverse in cyclotomic({self.n})")
        u = _poly_inverse_mod(list(self.c), [Fraction(c) for c in cyclotomic_poly(self.n)])
        return CycElement(u, self.n)

    def __truediv__(self, o):
        w = self._other(o)
        if w is None:
            return NotImplemented
        return self * CycElement._raw(w, self.n).inverse()

    def __rtruediv__(self, o):
        w = self._other(o)
        if w is None:
            return NotImplemented
        return CycElement._raw(w, self.n) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = CycElement((1,), self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, o):
        try:
            w = self._other(o)
        except FieldMismatch:
            return False
        return w is not None and w == self.c

    def __hash__(self):
        if all(not a for a in self.c[1:]):
            return hash(self.c[0])
        return hash(self.c)

    def __bool__(self):
        return any(self.c)

    def __repr__(self):
        terms = []
        for i, a in enumerate(self.c):
            if a:
                terms.append(f"{a}" if i == 0 else f"{a}*z^{i}")
        return f"Cyc{self.n}(" + (" + ".join(terms) or "0") + ")"


def _reduce_poly(cs, n):
    phi = [Fraction(c) for c in cyclotomic_poly(n)]
    deg = len(phi) - 1
    cs = list(cs)
    for k in range(len(cs) - 1, deg - 1, -1):
        top = cs[k]
        if top:
            for i in range(deg + 1):
                cs[k - deg + i] -= top * phi[i]
    return cs[:deg]


def _trim(p):
    while p and not p[-1]:
        p.pop()
    return p


def _poly_divmod(a, b):
    a = _trim(list(a))
    b = _trim(list(b))
    if not a or len(a) < len(b):
        return [], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        coef = a[k + len(b) - 1] / lead
        q[k] = coef
        if coef:
            for i, bi in enumerate(b):
                a[k + i] -= coef * bi
    return q, _trim(a[: len(b) - 1])


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def _poly_inverse_mod(a, m):
    """u with u*a = 1 mod m (extended Euclid over Q[x])."""
    r0, r1 = _trim(list(m)), _trim(list(a))
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    if not r1:
        raise DivisionByZero("element is not invertible")
    c = r1[0]
    return [x / c for x in s1]


# -- field specification -------------------------------------------------------

@dataclass(frozen=True)
class FieldSpec:
    """One of the three supported exact fields."""

    kind: str  # "Q" | "GF" | "cyclotomic"
    p: int | None = None
    n: int | None = None

    def __post_init__(self):
        if self.kind == "GF":
            if self.p is None or not _is_prime(self.p):
                raise SchemaError(f"GF modulus must be prime, got {self.p}")
        elif self.kind == "cyclotomic":
            if self.n is None or self.n < 1:
                raise SchemaError(f"cyclotomic index must be >= 1, got {self.n}")
        elif self.kind != "Q":
            raise SchemaError(f"unknown field kind {self.kind!r}")

    def __str__(self):
        if self.kind == "Q":
            return "Q"
        if self.kind == "GF":
            return f"GF({self.p})"
        return f"Q(zeta_{self.n})"

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == "GF" else 0

    def require_char0(self, what: str = "this operation"):
        if self.characteristic != 0:
            raise UnsupportedCharacteristic(f"{what} needs characteristic 0, field is {self}")

    def zero(self):
        return self.coerce(0)

    def one(self):
        return self.coerce(1)

    def zeta(self):
        if self.kind != "cyclotomic":
            raise FieldMismatch(f"{self} has no distinguished root of unity")
        return CycElement((0, 1), self.n) if self.n > 2 else CycElement((1 if self.n == 1 else -1,), self.n)

    def coerce(self, x):
        """Bring ``x`` into canonical form for this field (or raise FieldMismatch)."""
        if self.kind == "Q":
            if isinstance(x, Fraction):
                return x
            if isinstance(x, int):
                return Fraction(x)
            if isinstance(x, str):
                return Fraction(x)
            raise FieldMismatch(f"{x!r} is not an element of Q")
        if self.kind == "GF":
            if isinstance(x, GFElement):
                if x.p != self.p:
                    raise FieldMismatch(f"GF({x.p}) element used in GF({self.p})")
                return x
            if isinstance(x, str):
                x = Fraction(x)
            if isinstance(x, int):
                return GFElement(x, self.p)
            if isinstance(x, Fraction):
                return GFElement(0, self.p) + x
            raise FieldMismatch(f"{x!r} is not an element of GF({self.p})")
        if isinstance(x, CycElement):
            if x.n != self.n:
                raise FieldMismatch(f"cyclotomic({x.n}) element used in cyclotomic({self.n})")
            return x
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, (int, Fraction)):
            return CycElement((x,), self.n)
        if isinstance(x, (list, tuple)):
            return CycElement([Fraction(c) for c in x], self.n)
        raise FieldMismatch(f"{x!r} is not an element of {self}")

    def contains(self, x) -> bool:
        if self.kind == "Q":
            return isinstance(x, (int, Fraction))
        if self.kind == "GF":
            return isinstance(x, GFElement) and x.p == self.p
        return isinstance(x, CycElement) and x.n == self.n

    # -- JSON --------------------------------------------------------------
    @classmethod
    def from_json(cls, doc: dict) -> "FieldSpec":
        if not isinstance(doc, dict) or "kind" not in doc:
            raise SchemaError("field must be an object with a 'kind'")
        kind = doc["kind"]
        if kind == "Q":
            return cls("Q")
        if kind == "GF":
            return cls("GF", p=doc.get("p"))
        if kind == "cyclotomic":
            return cls("cyclotomic", n=doc.get("n"))
        raise SchemaError(f"unknown field kind {kind!r}")

    def to_json(self) -> dict:
        if self.kind == "Q":
            return {"kind": "Q"}
        if self.kind == "GF":
            return {"kind": "GF", "p": self.p}
        return {"kind": "cyclotomic", "n": self.n}

    def parse(self, doc: Any):
        try:
            if self.kind == "GF":
                if isinstance(doc, bool) or not isinstance(doc, (int, str)):
                    raise SchemaError(f"GF scalar must be an integer, got {doc!r}")
                return self.coerce(int(doc) if isinstance(doc, str) else doc)
            if self.kind == "Q":
                if isinstance(doc, bool) or not isinstance(doc, (int, str)):
                    raise SchemaError(f"rational scalar must be 'p/q' or int, got {doc!r}")
                return self.coerce(doc)
            if isinstance(doc, list):
                return self.coerce([Fraction(c) for c in doc])
            if isinstance(doc, (int, str)) and not isinstance(doc, bool):
                return self.coerce(doc)
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"bad scalar {doc!r}: {exc}") from None
        raise SchemaError(f"bad cyclotomic scalar {doc!r}")

    def encode(self, x):
        x = self.coerce(x)
        if self.kind == "Q":
            return str(x)
        if self.kind == "GF":
            return x.v
        return [str(c) for c in x.c]


QQ = FieldSpec("Q")


def GF(p: int) -> FieldSpec:
    return FieldSpec("GF", p=p)


def Cyclotomic(n: int) -> FieldSpec:
    return FieldSpec("cyclotomic", n=n)


def field_of(x) -> FieldSpec:
    if isinstance(x, GFElement):
        return GF(x.p)
    if isinstance(x, CycElement):
        return Cyclotomic(x.n)
    if isinstance(x, (int, Fraction)):
        return QQ
    raise FieldMismatch(f"{x!r} is not a scalar")


def scalar_arith(op: str, a, b=None):
    """Exact field arithmetic: add, sub, mul, div, neg, inv, eq, is_zero."""
    fa = field_of(a)
    a = fa.coerce(a)
    if b is not None:
        fb = field_of(b)
        if fb != fa and not (fb == QQ and fa.characteristic == 0):
            raise FieldMismatch(f"{fa} vs {fb}")
        b = fa.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return fa.coerce(a * b)
    if op == "div":
        if not b:
            raise DivisionByZero("division by zero")
        return a / b
    if op == "neg":
        return -a
    if op == "inv":
        if not a:
            raise DivisionByZero("zero has no inverse")
        return fa.one() / a
    if op == "eq":
        return a == b
    if op == "is_zero":
        return not a
    raise ValueError(f"unknown scalar op {op!r}")


def inverse(field: FieldSpec, x):
    if not x:
        raise DivisionByZero("zero has no inverse")
    if field.kind == "Q":
        return 1 / x
    return x.inverse()


# -- roots -------------------------------------------------------------------

def _sympy_domain(field: FieldSpec):
    import sympy
    from sympy.polys.domains import QQ as SQQ

    if field.kind == "Q" or len(cyclotomic_poly(field.n)) == 2:
        return SQQ
    return SQQ.algebraic_field(sympy.exp(2 * sympy.pi * sympy.I / field.n))


def _to_sympy(field: FieldSpec, dom, x):
    from sympy.polys.domains import QQ as SQQ

    if dom is SQQ:
        if field.kind == "cyclotomic":
            x = x.c[0]
        return SQQ(x.numerator, x.denominator)
    return dom([SQQ(c.numerator, c.denominator) for c in reversed(x.c)])


def _from_sympy(field: FieldSpec, dom, v):
    from sympy.polys.domains import QQ as SQQ

    if dom is SQQ:
        return field.coerce(Fraction(int(v.numerator), int(v.denominator)))
    coeffs = [Fraction(int(c.numerator), int(c.denominator)) for c in reversed(v.to_list())]
    return field.coerce(coeffs)


def roots_in_field(coeffs: Sequence, field: FieldSpec) -> list:
    """Distinct roots lying in ``field`` of the polynomial sum coeffs[i] x^i."""
    field.require_char0("root finding")
    cs = [field.coerce(c) for c in coeffs]
    while cs and not cs[-1]:
        cs.pop()
    if len(cs) <= 1:
        return []
    # cheap candidates first: 0, +-1 and roots of unity
    cands = [field.zero(), field.one(), -field.one()]
    if field.kind == "cyclotomic" and field.n > 2:
        z = field.zeta()
        cands += [z ** k for k in range(2, field.n)] + [z]
    found = []
    for c in cands:
        val = field.zero()
        for a in reversed(cs):
            val = val * c + a
        if not val and c not in found:
            found.append(c)
    if len(found) >= len(cs) - 1:
        return found
    import sympy

    x = sympy.Symbol("x")
    dom = _sympy_domain(field)
    poly = sympy.Poly.from_list([_to_sympy(field, dom, c) for c in reversed(cs)], x, domain=dom)
    out = []
    for fac, _ in poly.factor_list()[1]:
        if fac.degree() == 1:
            a, b = fac.rep.to_list()
            r = _from_sympy(field, dom, dom.quo(-b, a))
            if r not in out:
                out.append(r)
    return out
