"""Exact polynomial arithmetic.

Three value types, all immutable:

``BivarPoly``
    integer polynomial in ``x`` and ``a`` (the convexity parameter alpha).
``RatPoly``
    univariate polynomial in ``x`` with ``Fraction`` coefficients; this is what
    a bivariate polynomial becomes once alpha is fixed.
``RatFunc``
    a normalized quotient of two polynomials of the same kind.

Univariate integer polynomials in ``a`` are handled by module-level helpers
(prefix ``zp_``) on plain tuples of ints, lowest degree first, with no
trailing zeros.  They are the coefficient ring of ``BivarPoly`` viewed as a
polynomial in ``x``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

Rational = Fraction
ZPoly = tuple  # tuple[int, ...], ascending powers of a


def as_rational(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, float):
        raise TypeError("floats are not exact; pass a Fraction or a 'p/q' string")
    return Fraction(v)


# ------------------------------------------------------------ Z[a] helpers


def zp_trim(c: Sequence[int]) -> ZPoly:
    k = len(c)
    while k and c[k - 1] == 0:
        k -= 1
    return tuple(c[:k])


def zp_add(p: ZPoly, q: ZPoly) -> ZPoly:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return zp_trim(out)


def zp_sub(p: ZPoly, q: ZPoly) -> ZPoly:
    out = list(p) + [0] * max(0, len(q) - len(p))
    for i, c in enumerate(q):
        out[i] -= c
    return zp_trim(out)


def zp_neg(p: ZPoly) -> ZPoly:
    return tuple(-c for c in p)


def zp_scale(p: ZPoly, k: int) -> ZPoly:
    return zp_trim([c * k for c in p]) if k else ()


def zp_mul(p: ZPoly, q: ZPoly) -> ZPoly:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return tuple(out)


def zp_shift(p: ZPoly, k: int) -> ZPoly:
    return (0,) * k + p if p else ()


def zp_divmod_exact(p: ZPoly, q: ZPoly) -> ZPoly:
    """Quotient p / q in Z[a]; raises ArithmeticError if q does not divide p."""
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    r = list(p)
    dq = len(q) - 1
    lq = q[-1]
    quo = [0] * max(0, len(p) - dq)
    for k in range(len(r) - 1, dq - 1, -1):
        c = r[k]
        if c == 0:
            continue
        t, rem = divmod(c, lq)
        if rem:
            raise ArithmeticError("inexact division in Z[a]")
        quo[k - dq] = t
        for j, b in enumerate(q):
            r[k - dq + j] -= t * b
    if any(r):
        raise ArithmeticError("inexact division in Z[a]")
    return zp_trim(quo)


def zp_content(p: ZPoly) -> int:
    g = 0
    for c in p:
        g = gcd(g, c)
    return g


def zp_primitive(p: ZPoly) -> ZPoly:
    if not p:
        return ()
    g = zp_content(p)
    if p[-1] < 0:
        g = -g
    return tuple(c // g for c in p)


def zp_prem(p: ZPoly, q: ZPoly) -> ZPoly:
    r = list(p)
    dq = len(q) - 1
    lq = q[-1]
    while len(r) - 1 >= dq and r:
        lr = r[-1]
        k = len(r) - 1 - dq
        r = [c * lq for c in r]
        for j, b in enumerate(q):
            r[k + j] -= lr * b
        r = list(zp_trim(r))
    return tuple(r)


def zp_gcd(p: ZPoly, q: ZPoly) -> ZPoly:
    """Gcd in Z[a] with positive leading coefficient."""
    if not p:
        return zp_scale(zp_primitive(q), zp_content(q))
    if not q:
        return zp_scale(zp_primitive(p), zp_content(p))
    c = gcd(zp_content(p), zp_content(q))
    a, b = zp_primitive(p), zp_primitive(q)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = zp_prem(a, b)
        a, b = b, zp_primitive(r)
    return zp_scale(a, c)


def zp_eval(p: ZPoly, a0) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * a0 + c
    return acc


# ------------------------------------------------------------ BivarPoly


class BivarPoly:
    """Integer polynomial in x and a, stored as {(deg_x, deg_a): coeff} without zeros."""

    __slots__ = ("_t", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        t: dict[tuple[int, int], int] = {}
        for (i, j), c in items:
            c = int(c)
            if c:
                k = (int(i), int(j))
                v = t.get(k, 0) + c
                if v:
                    t[k] = v
                else:
                    t.pop(k, None)
        self._t = t
        self._hash = None

    @classmethod
    def _raw(cls, t: dict) -> "BivarPoly":
        p = object.__new__(cls)
        p._t = t
        p._hash = None
        return p

    @classmethod
    def const(cls, c: int) -> "BivarPoly":
        return cls({(0, 0): c})

    @classmethod
    def x(cls) -> "BivarPoly":
        return cls({(1, 0): 1})

    @classmethod
    def alpha(cls) -> "BivarPoly":
        return cls({(0, 1): 1})

    @classmethod
    def from_x_coeffs(cls, coeffs: Sequence[ZPoly]) -> "BivarPoly":
        """Build from coefficients of x^0, x^1, ... each an element of Z[a]."""
        t = {}
        for i, zp in enumerate(coeffs):
            for j, c in enumerate(zp):
                if c:
                    t[(i, j)] = c
        return cls._raw(t)

    # -- inspection

    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._t)

    def coeff(self, dx: int, da: int = 0) -> int:
        return self._t.get((dx, da), 0)

    def is_zero(self) -> bool:
        return not self._t

    @property
    def degree_x(self) -> int:
        return max((i for i, _ in self._t), default=-1)

    @property
    def degree_a(self) -> int:
        return max((j for _, j in self._t), default=-1)

    def x_coeffs(self) -> list[ZPoly]:
        """Coefficients of x^0..x^deg as elements of Z[a]."""
        dx = self.degree_x
        rows = [[0] * (self.degree_a + 1) for _ in range(dx + 1)]
        for (i, j), c in self._t.items():
            rows[i][j] = c
        return [zp_trim(r) for r in rows]

    def leading_term(self) -> tuple[tuple[int, int], int]:
        k = max(self._t)
        return k, self._t[k]

    def content(self) -> int:
        g = 0
        for c in self._t.values():
            g = gcd(g, c)
        return g

    # -- ring operations

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        t = dict(self._t)
        for k, c in other._t.items():
            v = t.get(k, 0) + c
            if v:
                t[k] = v
            else:
                t.pop(k, None)
        return BivarPoly._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return BivarPoly._raw({k: -c for k, c in self._t.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        t: dict = {}
        for (i1, j1), c1 in self._t.items():
            for (i2, j2), c2 in other._t.items():
                k = (i1 + i2, j1 + j2)
                t[k] = t.get(k, 0) + c1 * c2
        return BivarPoly._raw({k: c for k, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        out, base = BivarPoly.const(1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._t == other._t

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __bool__(self):
        return bool(self._t)

    # -- substitution

    def eval(self, x0, a0) -> Fraction:
        x0, a0 = as_rational(x0), as_rational(a0)
        return sum((c * x0**i * a0**j for (i, j), c in self._t.items()), Fraction(0))

    def eval_alpha(self, a0) -> "RatPoly":
        a0 = as_rational(a0)
        return RatPoly([zp_eval(zp, a0) for zp in self.x_coeffs()])

    def subs_x(self, q: "BivarPoly") -> "BivarPoly":
        """Composition p(q(x, a), a)."""
        out = BivarPoly()
        for zp in reversed(self.x_coeffs()):
            out = out * q + BivarPoly.from_x_coeffs([zp])
        return out

    def shift_x(self, c_alpha: int, c_const: int = 0) -> "BivarPoly":
        """p(x - c_alpha*a - c_const, a)."""
        return self.subs_x(BivarPoly({(1, 0): 1, (0, 1): -c_alpha, (0, 0): -c_const}))

    # -- division and gcd

    def exact_div(self, other: "BivarPoly") -> "BivarPoly":
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        r = self.x_coeffs()
        b = other.x_coeffs()
        db = len(b) - 1
        lb = b[-1]
        q = [()] * max(0, len(r) - db)
        for k in range(len(r) - 1, db - 1, -1):
            if not r[k]:
                continue
            t = zp_divmod_exact(r[k], lb)
            q[k - db] = t
            for j, bj in enumerate(b):
                r[k - db + j] = zp_sub(r[k - db + j], zp_mul(t, bj))
        if any(r):
            raise ArithmeticError("polynomial does not divide exactly")
        return BivarPoly.from_x_coeffs(q)

    def divides(self, other: "BivarPoly") -> bool:
        try:
            other.exact_div(self)
        except ArithmeticError:
            return False
        return True

    def gcd(self, other: "BivarPoly") -> "BivarPoly":
        """Greatest common divisor in Z[x, a], leading coefficient positive."""
        if self.is_zero():
            return other.canonical_sign()
        if other.is_zero():
            return self.canonical_sign()
        a, b = self.x_coeffs(), other.x_coeffs()
        ca, cb = _xcontent(a), _xcontent(b)
        c = zp_gcd(ca, cb)
        a = [zp_divmod_exact(z, ca) for z in a]
        b = [zp_divmod_exact(z, cb) for z in b]
        if len(a) < len(b):
            a, b = b, a
        while b:
            r = _x_prem(a, b)
            if not r:
                a, b = b, []
                break
            cr = _xcontent(r)
            a, b = b, [zp_divmod_exact(z, cr) for z in r]
        g = BivarPoly.from_x_coeffs([zp_mul(c, z) for z in a])
        return g.canonical_sign()

    def canonical_sign(self) -> "BivarPoly":
        if self._t and self.leading_term()[1] < 0:
            return -self
        return self

    def primitive(self) -> "BivarPoly":
        g = self.content()
        if g in (0, 1):
            return self
        return BivarPoly._raw({k: c // g for k, c in self._t.items()})

    # -- rendering

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        return [(i, j, self._t[(i, j)]) for i, j in sorted(self._t, reverse=True)]

    def render(self) -> str:
        return _render_terms([(i, j, c) for i, j, c in self.sorted_terms()])

    def to_json(self) -> list[list]:
        return [[i, j, str(c)] for i, j, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data) -> "BivarPoly":
        return cls({(int(i), int(j)): int(c) for i, j, c in data})

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"BivarPoly({self.render()!r})"


def _coerce(v):
    if isinstance(v, BivarPoly):
        return v
    if isinstance(v, int):
        return BivarPoly.const(v)
    return NotImplemented


def _xcontent(coeffs: Sequence[ZPoly]) -> ZPoly:
    g: ZPoly = ()
    for z in coeffs:
        if z:
            g = zp_gcd(g, z) if g else zp_scale(zp_primitive(z), zp_content(z))
            if g == (1,):
                break
    return g


def _x_prem(a: list[ZPoly], b: list[ZPoly]) -> list[ZPoly]:
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while r and len(r) - 1 >= db:
        lr = r[-1]
        k = len(r) - 1 - db
        r = [zp_mul(z, lb) for z in r]
        for j, bj in enumerate(b):
            r[k + j] = zp_sub(r[k + j], zp_mul(lr, bj))
        while r and not r[-1]:
            r.pop()
    return r


def _fmt_coeff(c) -> str:
    return str(c) if not isinstance(c, Fraction) or c.denominator != 1 else str(c.numerator)


def _render_terms(terms: Sequence[tuple[int, int, object]]) -> str:
    """terms: (deg_x, deg_a, coeff) already in display order."""
    if not terms:
        return "0"
    parts = []
    for k, (i, j, c) in enumerate(terms):
        neg = c < 0
        mag = -c if neg else c
        factors = []
        if mag != 1 or (i == 0 and j == 0):
            factors.append(_fmt_coeff(mag))
        if j:
            factors.append("a" if j == 1 else f"a^{j}")
        if i:
            factors.append("x" if i == 1 else f"x^{i}")
        body = "*".join(factors)
        if k == 0:
            parts.append("-" + body if neg else body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


X = BivarPoly.x()
A = BivarPoly.alpha()


# ------------------------------------------------------------ RatPoly


class RatPoly:
    """Univariate polynomial in x over Q; coefficients ascending."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable = ()):
        c = [as_rational(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.c: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def from_desc(cls, coeffs: Iterable) -> "RatPoly":
        return cls(list(coeffs)[::-1])

    @classmethod
    def monomial(cls, k: int, c=1) -> "RatPoly":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    def __bool__(self):
        return bool(self.c)

    def lead(self) -> Fraction:
        return self.c[-1]

    def coeff(self, k: int) -> Fraction:
        return self.c[k] if 0 <= k < len(self.c) else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatPoly([other])
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __add__(self, other):
        other = _rcoerce(other)
        n = max(len(self.c), len(other.c))
        return RatPoly([self.coeff(k) + other.coeff(k) for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return RatPoly([-v for v in self.c])

    def __sub__(self, other):
        return self + (-_rcoerce(other))

    def __rsub__(self, other):
        return _rcoerce(other) - self

    def __mul__(self, other):
        other = _rcoerce(other)
        if not self.c or not other.c:
            return RatPoly()
        out = [Fraction(0)] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(other.c):
                    out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = RatPoly([1])
        for _ in range(e):
            out = out * self
        return out

    def __call__(self, x0) -> Fraction:
        x0 = as_rational(x0)
        acc = Fraction(0)
        for v in reversed(self.c):
            acc = acc * x0 + v
        return acc

    def eval_float(self, x0: float) -> float:
        acc = 0.0
        for v in reversed(self.c):
            acc = acc * x0 + float(v)
        return acc

    def divmod(self, other: "RatPoly") -> tuple["RatPoly", "RatPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        r = list(self.c)
        d = other.degree
        lb = other.lead()
        q = [Fraction(0)] * max(0, len(r) - d)
        for k in range(len(r) - 1, d - 1, -1):
            t = r[k] / lb
            if t:
                q[k - d] = t
                for j, b in enumerate(other.c):
                    r[k - d + j] -= t * b
        return RatPoly(q), RatPoly(r[:d] if d > 0 else [])

    def exact_div(self, other: "RatPoly") -> "RatPoly":
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError("polynomial does not divide exactly")
        return q

    def monic(self) -> "RatPoly":
        if not self.c:
            return self
        lc = self.lead()
        return RatPoly([v / lc for v in self.c])

    def canonical_sign(self) -> "RatPoly":
        return self.monic()

    def gcd(self, other: "RatPoly") -> "RatPoly":
        a, b = self, other
        while b:
            a, b = b, a.divmod(b)[1]
        return a.monic()

    def derivative(self) -> "RatPoly":
        return RatPoly([k * v for k, v in enumerate(self.c)][1:])

    def shift(self, t) -> "RatPoly":
        """p(x - t)."""
        t = as_rational(t)
        out = RatPoly()
        lin = RatPoly([-t, 1])
        for v in reversed(self.c):
            out = out * lin + RatPoly([v])
        return out

    def root_multiplicity(self, r) -> int:
        """Multiplicity of the rational number r as a root."""
        r = as_rational(r)
        if self.is_zero():
            raise ValueError("zero polynomial has every root")
        lin = RatPoly([-r, 1])
        p, k = self, 0
        while True:
            q, rem = p.divmod(lin)
            if rem:
                return k
            p, k = q, k + 1

    def squarefree_factors(self) -> list[tuple["RatPoly", int]]:
        """Yun's decomposition: [(f_i, i)] with self ~ prod f_i^i, f_i squarefree and coprime."""
        if self.degree < 1:
            return []
        out = []
        f = self.monic()
        a = f.gcd(f.derivative())
        b = f.exact_div(a)
        c = f.derivative().exact_div(a) if a.degree > 0 else f.derivative()
        d = c - b.derivative()
        i = 1
        while b.degree > 0:
            g = b.gcd(d)
            if g.degree > 0:
                out.append((g, i))
            b = b.exact_div(g)
            c = d.exact_div(g)
            d = c - b.derivative()
            i += 1
        return out

    def desc(self) -> list[Fraction]:
        return list(reversed(self.c))

    def render(self) -> str:
        return _render_terms([(i, 0, v) for i, v in reversed(list(enumerate(self.c))) if v])

    def to_json(self) -> list[list]:
        return [[i, 0, str(v)] for i, v in reversed(list(enumerate(self.c))) if v]

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"RatPoly({self.render()!r})"


def _rcoerce(v) -> RatPoly:
    if isinstance(v, RatPoly):
        return v
    if isinstance(v, (int, Fraction)):
        return RatPoly([v])
    raise TypeError(f"cannot use {type(v).__name__} as a polynomial")


# ------------------------------------------------------------ RatFunc


class RatFunc:
    """num/den over BivarPoly or RatPoly, reduced by the polynomial gcd.

    Normal form: gcd(num, den) = 1, den carries the canonical sign (positive
    lexicographic leading coefficient for BivarPoly, monic for RatPoly).
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, normalize: bool = True):
        if den is None:
            den = type(num)([1]) if isinstance(num, RatPoly) else BivarPoly.const(1)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if type(num) is not type(den):
            raise TypeError("numerator and denominator must be the same polynomial kind")
        self.num, self.den = num, den
        if normalize:
            self.num, self.den = _normalize(num, den)

    @property
    def kind(self):
        return type(self.num)

    def _unit(self):
        return RatPoly([1]) if self.kind is RatPoly else BivarPoly.const(1)

    def __add__(self, other):
        other = self._lift(other)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, normalize=False)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def _lift(self, v) -> "RatFunc":
        if isinstance(v, RatFunc):
            return v
        if isinstance(v, (BivarPoly, RatPoly)):
            return RatFunc(v, normalize=False) if type(v) is self.kind else RatFunc(v)
        if isinstance(v, int) or isinstance(v, Fraction):
            if self.kind is BivarPoly:
                if isinstance(v, Fraction) and v.denominator != 1:
                    return RatFunc(BivarPoly.const(v.numerator), BivarPoly.const(v.denominator))
                return RatFunc(BivarPoly.const(int(v)), normalize=False)
            return RatFunc(RatPoly([v]), normalize=False)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            try:
                other = self._lift(other)
            except TypeError:
                return NotImplemented
            if other is NotImplemented:
                return other
        if other.kind is not self.kind:
            return False
        # cross-multiplication does not depend on reduced form
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def normalize(self) -> "RatFunc":
        return RatFunc(self.num, self.den)

    def is_polynomial(self) -> bool:
        return self.den == self._unit()

    def eval(self, x0, a0=None) -> Fraction:
        if self.kind is BivarPoly:
            d = self.den.eval(x0, a0)
            if d == 0:
                raise ZeroDivisionError("pole of the rational function")
            return self.num.eval(x0, a0) / d
        d = self.den(x0)
        if d == 0:
            raise ZeroDivisionError("pole of the rational function")
        return self.num(x0) / d

    def eval_alpha(self, a0) -> "RatFunc":
        if self.kind is not BivarPoly:
            raise TypeError("already univariate")
        return RatFunc(self.num.eval_alpha(a0), self.den.eval_alpha(a0))

    def subs_x(self, q: BivarPoly) -> "RatFunc":
        return RatFunc(self.num.subs_x(q), self.den.subs_x(q))

    def render(self) -> str:
        if self.is_polynomial():
            return self.num.render()
        return f"({self.num.render()}) / ({self.den.render()})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    def __repr__(self):
        return f"RatFunc({self.render()!r})"


def _normalize(num, den):
    if num.is_zero():
        return num, (RatPoly([1]) if isinstance(den, RatPoly) else BivarPoly.const(1))
    g = num.gcd(den)
    num, den = num.exact_div(g), den.exact_div(g)
    if isinstance(den, RatPoly):
        lc = den.lead()
        return RatPoly([v / lc for v in num.c]), den.monic()
    if den.leading_term()[1] < 0:
        num, den = -num, -den
    return num, den


def ratfunc_add(f: RatFunc, g: RatFunc) -> RatFunc:
    return f + g


def ratfunc_mul(f: RatFunc, g: RatFunc) -> RatFunc:
    return f * g


def ratfunc_normalize(f: RatFunc) -> RatFunc:
    return f.normalize()


def poly_add(a: BivarPoly, b: BivarPoly) -> BivarPoly:
    return a + b


def poly_sub(a: BivarPoly, b: BivarPoly) -> BivarPoly:
    return a - b


def poly_mul(a: BivarPoly, b: BivarPoly) -> BivarPoly:
    return a * b


def poly_eval(p: BivarPoly, x0, a0) -> Fraction:
    return p.eval(x0, a0)


def poly_eval_alpha(p: BivarPoly, a0) -> RatPoly:
    return p.eval_alpha(a0)


def parse_rational(text: str) -> Fraction:
    """'3/4', '0.75' or '1' -> Fraction (decimal strings convert exactly)."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc
