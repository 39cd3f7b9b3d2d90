"""Exact arithmetic on classes that are rational functions of the Lefschetz symbol L.

Every class this package produces is a ratio of integer Laurent polynomials
in ``L``.  ``LPoly`` stores such a polynomial densely (an exponent offset plus
a coefficient tuple), ``LClass`` stores a reduced fraction of two of them, and
``CycloProduct`` keeps products of ``L^a`` and cyclotomic polynomials in
factored form so that quotients like ``[GL_m]/[GL_s]`` cancel without any
polynomial gcd.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping

__all__ = [
    "LPoly",
    "LClass",
    "CycloProduct",
    "cyclotomic",
    "lclass_eval",
    "lclass_order_at_one",
    "lclass_euler",
    "format_expanded",
    "format_factored",
    "parse_lclass",
    "lclass_to_json",
    "lclass_from_json",
    "PoleAtOneError",
]


class PoleAtOneError(ValueError):
    """Raised when a class with a pole at L = 1 is sent to its Euler characteristic."""


def _trim(coeffs: list[int], offset: int) -> tuple[int, tuple[int, ...]]:
    lo = 0
    hi = len(coeffs)
    while lo < hi and coeffs[lo] == 0:
        lo += 1
    while hi > lo and coeffs[hi - 1] == 0:
        hi -= 1
    if lo == hi:
        return 0, ()
    return offset + lo, tuple(coeffs[lo:hi])


def _content(coeffs: Iterable[int]) -> int:
    g = 0
    for c in coeffs:
        g = gcd(g, c)
        if g == 1:
            break
    return g


class LPoly:
    """Integer Laurent polynomial ``sum c_k L^k``.

    The coefficient tuple never has zero entries at either end, so the
    representation is canonical and ``==``/``hash`` compare structurally.
    """

    __slots__ = ("offset", "coeffs")

    def __init__(self, coeffs: Iterable[int] = (), offset: int = 0):
        off, cs = _trim(list(coeffs), offset)
        self.offset = off
        self.coeffs = cs

    @classmethod
    def _raw(cls, offset: int, coeffs: tuple[int, ...]) -> "LPoly":
        p = object.__new__(cls)
        p.offset = offset
        p.coeffs = coeffs
        return p

    @classmethod
    def from_terms(cls, terms: Mapping[int, int] | Iterable[tuple[int, int]]) -> "LPoly":
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            acc[e] = acc.get(e, 0) + c
        acc = {e: c for e, c in acc.items() if c}
        if not acc:
            return cls()
        lo, hi = min(acc), max(acc)
        return cls([acc.get(k, 0) for k in range(lo, hi + 1)], lo)

    @classmethod
    def constant(cls, c: int) -> "LPoly":
        return cls._raw(0, (c,)) if c else cls._raw(0, ())

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "LPoly":
        return cls._raw(e, (c,)) if c else cls._raw(0, ())

    # -- queries ---------------------------------------------------------
    def terms(self) -> dict[int, int]:
        """Exponent -> coefficient mapping (nonzero entries only)."""
        return {self.offset + k: c for k, c in enumerate(self.coeffs) if c}

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.offset == 0 and self.coeffs == (1,)

    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    def is_constant(self) -> bool:
        return self.offset == 0 and len(self.coeffs) <= 1

    @property
    def lowest(self) -> int:
        return self.offset

    @property
    def highest(self) -> int:
        return self.offset + len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def content(self) -> int:
        return _content(self.coeffs)

    def __call__(self, x):
        """Evaluate at ``x`` (an int or Fraction); exact."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        if self.offset >= 0:
            return acc * x**self.offset
        return Fraction(acc) / Fraction(x) ** (-self.offset)

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other: "LPoly | int") -> "LPoly":
        if isinstance(other, int):
            other = LPoly.constant(other)
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        lo = min(self.offset, other.offset)
        hi = max(self.highest, other.highest)
        out = [0] * (hi - lo + 1)
        a = self.offset - lo
        for k, c in enumerate(self.coeffs):
            out[a + k] += c
        b = other.offset - lo
        for k, c in enumerate(other.coeffs):
            out[b + k] += c
        return LPoly(out, lo)

    __radd__ = __add__

    def __neg__(self) -> "LPoly":
        return LPoly._raw(self.offset, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "LPoly | int") -> "LPoly":
        if isinstance(other, int):
            other = LPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other: int) -> "LPoly":
        return LPoly.constant(other) - self

    def __mul__(self, other: "LPoly | int") -> "LPoly":
        if isinstance(other, int):
            if other == 0:
                return LPoly()
            return LPoly._raw(self.offset, tuple(c * other for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return LPoly()
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = [0] * (len(a) + len(b) - 1)
        for j, cb in enumerate(b):
            if cb:
                for i, ca in enumerate(a):
                    out[i + j] += ca * cb
        return LPoly._raw(self.offset + other.offset, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "LPoly":
        if e < 0:
            raise ValueError("negative power of a polynomial; use LClass")
        result = LPoly.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> "LPoly":
        """Multiply by ``L^k``."""
        if not self.coeffs:
            return self
        return LPoly._raw(self.offset + k, self.coeffs)

    def scale_down(self, c: int) -> "LPoly":
        """Exact division of every coefficient by the integer ``c``."""
        return LPoly._raw(self.offset, tuple(x // c for x in self.coeffs))

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LPoly.constant(other)
        if not isinstance(other, LPoly):
            return NotImplemented
        return self.offset == other.offset and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.offset, self.coeffs))

    def __repr__(self) -> str:
        return f"LPoly({format_poly(self)!r})"


# -- dense integer polynomial helpers (lists, lowest degree first) ---------


def _divmod_exact(num: tuple[int, ...], den: tuple[int, ...]) -> tuple[int, ...] | None:
    """Quotient of ``num`` by ``den`` in Z[x] if the division is exact, else None."""
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    if len(num) < len(den):
        return None if any(num) else ()
    rem = list(num)
    dl = den[-1]
    dn = len(den) - 1
    q = [0] * (len(num) - dn)
    for k in range(len(num) - 1, dn - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        qc, r = divmod(c, dl)
        if r:
            return None
        q[k - dn] = qc
        base = k - dn
        for i, d in enumerate(den):
            rem[base + i] -= qc * d
    if any(rem[:dn]):
        return None
    return tuple(q)


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of ``a`` by ``b`` (both nonzero, lowest degree first)."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and any(r):
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for i, c in enumerate(b):
            r[shift + i] -= lr * c
        while r and r[-1] == 0:
            r.pop()
        if not r:
            break
    return r


def _primitive(a: list[int]) -> list[int]:
    c = _content(a)
    if c > 1:
        a = [x // c for x in a]
    if a and a[-1] < 0:
        a = [-x for x in a]
    return a


def _poly_gcd(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """gcd in Z[x] via the primitive pseudo-remainder sequence."""
    if not a:
        return tuple(_primitive(list(b))) if b else ()
    if not b:
        return tuple(_primitive(list(a)))
    cont = gcd(_content(a), _content(b))
    x = _primitive(list(a))
    y = _primitive(list(b))
    if len(x) < len(y):
        x, y = y, x
    while len(y) > 1:
        r = _prem(x, y)
        if not r:
            break
        x, y = y, _primitive(r)
    else:
        # y is a nonzero constant: primitive parts are coprime
        return (cont,)
    return tuple(c * cont for c in y)


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> tuple[int, ...]:
    """Coefficients (lowest first) of the d-th cyclotomic polynomial."""
    if d < 1:
        raise ValueError("cyclotomic index must be positive")
    num = tuple([-1] + [0] * (d - 1) + [1])
    for e in range(1, d):
        if d % e == 0:
            num = _divmod_exact(num, cyclotomic(e))
    return num


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


# -- LClass ------------------------------------------------------------------


class LClass:
    """Reduced fraction ``num / den`` of integer Laurent polynomials in L.

    Canonical form: ``den`` is nonzero, has no factor of L (lowest exponent
    0) and a positive leading coefficient, and shares no factor with ``num``.
    Equal classes therefore have identical fields.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LPoly | int = 0, den: LPoly | int = 1):
        if isinstance(num, int):
            num = LPoly.constant(num)
        if isinstance(den, int):
            den = LPoly.constant(den)
        if den.is_zero():
            raise ZeroDivisionError("class with zero denominator")
        self.num, self.den = _reduce(num, den)

    @classmethod
    def _raw(cls, num: LPoly, den: LPoly) -> "LClass":
        c = object.__new__(cls)
        c.num = num
        c.den = den
        return c

    @classmethod
    def L(cls, power: int = 1) -> "LClass":
        return cls._raw(LPoly.monomial(power), _ONE_POLY)

    @classmethod
    def poly(cls, p: LPoly) -> "LClass":
        return cls._raw(p, _ONE_POLY)

    # -- queries -----------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        """True when the class is a Laurent polynomial (denominator 1)."""
        return self.den.is_one()

    # -- arithmetic ----------------------------------------------------------
    @staticmethod
    def _coerce(x) -> "LClass":
        if isinstance(x, LClass):
            return x
        if isinstance(x, int):
            return LClass._raw(LPoly.constant(x), _ONE_POLY)
        if isinstance(x, LPoly):
            return LClass._raw(x, _ONE_POLY)
        if isinstance(x, Fraction):
            return LClass(x.numerator, x.denominator)
        raise TypeError(f"cannot coerce {type(x).__name__} to LClass")

    def __add__(self, other) -> "LClass":
        other = LClass._coerce(other)
        if self.den == other.den:
            if self.den.is_one():
                return LClass._raw(self.num + other.num, _ONE_POLY)
            return LClass(self.num + other.num, self.den)
        return LClass(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "LClass":
        return LClass._raw(-self.num, self.den)

    def __sub__(self, other) -> "LClass":
        return self + (-LClass._coerce(other))

    def __rsub__(self, other) -> "LClass":
        return LClass._coerce(other) - self

    def __mul__(self, other) -> "LClass":
        other = LClass._coerce(other)
        if self.den.is_one() and other.den.is_one():
            return LClass._raw(self.num * other.num, _ONE_POLY)
        if other.num.is_monomial() and other.den.is_one():
            return LClass._raw(self.num * other.num, self.den) if other.num.leading in (1, -1) \
                else LClass(self.num * other.num, self.den)
        return LClass(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "LClass":
        other = LClass._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero class")
        return LClass(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "LClass":
        return LClass._coerce(other) / self

    def __pow__(self, e: int) -> "LClass":
        if e >= 0:
            return LClass._raw(self.num**e, self.den**e)
        if self.is_zero():
            raise ZeroDivisionError("negative power of the zero class")
        return LClass(self.den ** (-e), self.num ** (-e))

    def shift(self, k: int) -> "LClass":
        """Multiply by ``L^k``."""
        return LClass._raw(self.num.shift(k), self.den)

    def __eq__(self, other) -> bool:
        try:
            other = LClass._coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"LClass({format_expanded(self)!r})"

    def __str__(self) -> str:
        return format_expanded(self)


_ONE_POLY = LPoly.constant(1)


def _reduce(num: LPoly, den: LPoly) -> tuple[LPoly, LPoly]:
    if num.is_zero():
        return LPoly(), _ONE_POLY
    shift = num.offset - den.offset
    a, b = num.coeffs, den.coeffs
    if len(b) > 1:
        g = _poly_gcd(a, b)
        if len(g) > 1:
            a = _divmod_exact(a, g)
            b = _divmod_exact(b, g)
    c = gcd(_content(a), _content(b))
    if b[-1] < 0:
        c = -c
    if c != 1:
        a = tuple(x // c for x in a)
        b = tuple(x // c for x in b)
    return LPoly._raw(shift, a), LPoly._raw(0, b)


# -- factored products of L^a and cyclotomic polynomials -------------------


class CycloProduct:
    """``sign * L^a * prod Phi_d(L)^{e_d}`` kept in exponent-vector form.

    ``L^b - 1`` is ``prod_{d | b} Phi_d``, so group classes, Grassmannians
    and their quotients multiply and divide here by adding exponents.
    """

    __slots__ = ("lpow", "exps", "sign")

    def __init__(self, lpow: int = 0, exps: Mapping[int, int] | None = None, sign: int = 1):
        self.lpow = lpow
        self.exps = {d: e for d, e in (exps or {}).items() if e}
        self.sign = sign

    @classmethod
    def L_power_minus_one(cls, b: int) -> "CycloProduct":
        """``L^b - 1`` for b >= 1."""
        return cls(0, {d: 1 for d in _divisors(b)})

    @classmethod
    def L(cls, a: int = 1) -> "CycloProduct":
        return cls(a)

    def __mul__(self, other: "CycloProduct") -> "CycloProduct":
        exps = dict(self.exps)
        for d, e in other.exps.items():
            exps[d] = exps.get(d, 0) + e
        return CycloProduct(self.lpow + other.lpow, exps, self.sign * other.sign)

    def __truediv__(self, other: "CycloProduct") -> "CycloProduct":
        return self * other ** -1

    def __pow__(self, k: int) -> "CycloProduct":
        sign = self.sign if k % 2 else 1
        return CycloProduct(self.lpow * k, {d: e * k for d, e in self.exps.items()}, sign)

    def order_at_one(self) -> int:
        return self.exps.get(1, 0)

    def to_lclass(self) -> LClass:
        num = LPoly.monomial(self.lpow, self.sign)
        den = _ONE_POLY
        for d in sorted(self.exps):
            e = self.exps[d]
            phi = LPoly._raw(0, cyclotomic(d))
            if e > 0:
                num = num * phi**e
            else:
                den = den * phi ** (-e)
        if den.is_one():
            return LClass._raw(num, den)
        return LClass(num, den)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycloProduct):
            return NotImplemented
        return (self.lpow, self.exps, self.sign) == (other.lpow, other.exps, other.sign)

    def __repr__(self) -> str:
        return f"CycloProduct(lpow={self.lpow}, exps={self.exps}, sign={self.sign})"


# -- specializations -----------------------------------------------------------


def lclass_eval(c: LClass, q) -> int | Fraction:
    """Value of ``c`` at ``L = q``; ``ZeroDivisionError`` if the denominator vanishes there."""
    d = c.den(q)
    if d == 0:
        raise ZeroDivisionError(f"denominator of {format_expanded(c)} vanishes at L={q}")
    v = Fraction(c.num(q)) / d
    return v.numerator if v.denominator == 1 else v


def _order_one(coeffs: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Multiplicity of (x - 1) in a nonzero polynomial, and the cofactor."""
    k = 0
    cur = coeffs
    while len(cur) > 1 and sum(cur) == 0:
        # synthetic division by (x - 1), highest degree first
        out = [0] * (len(cur) - 1)
        acc = 0
        for i in range(len(cur) - 1, 0, -1):
            acc += cur[i]
            out[i - 1] = acc
        cur = tuple(out)
        k += 1
    return k, cur


def lclass_order_at_one(c: LClass) -> int:
    """(L - 1)-adic valuation of a nonzero class."""
    if c.is_zero():
        raise ValueError("order at L = 1 is undefined for the zero class")
    kn, _ = _order_one(c.num.coeffs)
    kd, _ = _order_one(c.den.coeffs)
    return kn - kd


def lclass_euler(c: LClass) -> int | Fraction:
    """Euler characteristic specialization: cancel (L - 1) factors, set L = 1."""
    if c.is_zero():
        return 0
    kn, num = _order_one(c.num.coeffs)
    kd, den = _order_one(c.den.coeffs)
    if kn < kd:
        raise PoleAtOneError(f"class {format_expanded(c)} has a pole of order {kd - kn} at L = 1")
    if kn > kd:
        return 0
    v = Fraction(sum(num), sum(den))
    return v.numerator if v.denominator == 1 else v


# -- text forms ----------------------------------------------------------------


def _monomial_text(e: int, c: int, var: str, first: bool, spaced: bool) -> str:
    sign = "-" if c < 0 else "+"
    a = abs(c)
    if e == 0:
        body = str(a)
    else:
        powpart = var if e == 1 else f"{var}^{e}"
        body = powpart if a == 1 else f"{a}*{powpart}"
    if first:
        return ("-" if c < 0 else "") + body
    return f" {sign} {body}" if spaced else f"{sign}{body}"


def format_poly(p: LPoly, var: str = "L", spaced: bool = True) -> str:
    """Highest-degree-first rendering, e.g. ``3*L^2 - L + 1``."""
    if p.is_zero():
        return "0"
    parts = []
    terms = sorted(p.terms().items(), reverse=True)
    for k, (e, c) in enumerate(terms):
        parts.append(_monomial_text(e, c, var, k == 0, spaced))
    return "".join(parts)


def _wrap(text: str, p: LPoly) -> str:
    return text if len(p.coeffs) == 1 and p.coeffs[0] > 0 or p.is_constant() else f"({text})"


def format_expanded(c: LClass, var: str = "L") -> str:
    """``num`` or ``num / den`` with expanded polynomials."""
    num = format_poly(c.num, var)
    if c.den.is_one():
        return num
    return f"{_wrap(num, c.num)} / {_wrap(format_poly(c.den, var), c.den)}"


def _factor_cyclotomic(coeffs: tuple[int, ...], max_index: int) -> tuple[dict[int, int], tuple[int, ...]]:
    exps: dict[int, int] = {}
    cur = coeffs
    for d in range(1, max_index + 1):
        phi = cyclotomic(d)
        if len(phi) > len(cur):
            if len(cur) <= 1:
                break
            continue
        while len(cur) >= len(phi):
            q = _divmod_exact(cur, phi)
            if q is None:
                break
            exps[d] = exps.get(d, 0) + 1
            cur = q
    return exps, cur


def _factored_side(p: LPoly, var: str) -> tuple[list[str], int]:
    """Factor strings for one side (power of L excluded) plus the leftover integer."""
    max_index = max(2 * len(p.coeffs), 12)
    exps, rest = _factor_cyclotomic(p.coeffs, max_index)
    factors = []
    for d in sorted(exps):
        body = format_poly(LPoly._raw(0, cyclotomic(d)), var, spaced=False)
        e = exps[d]
        factors.append(f"({body})" + (f"^{e}" if e > 1 else ""))
    const = 1
    if len(rest) == 1:
        const = rest[0]
    else:
        cont = _content(rest)
        if rest[-1] < 0:
            cont = -cont
        rest = tuple(x // cont for x in rest)
        const = cont
        factors.append(f"({format_poly(LPoly._raw(0, rest), var, spaced=False)})")
    return factors, const


def format_factored(c: LClass, var: str = "L") -> str:
    """Product form such as ``L^3*(L-1)^2*(L+1)^2``.

    Cyclotomic factors are pulled out in order of index; whatever does not
    split that way is printed expanded inside one more pair of parentheses.
    """
    if c.is_zero():
        return "0"

    def side(p: LPoly) -> list[str]:
        factors, const = _factored_side(p, var)
        items = []
        if const == -1:
            items.append("-1")
        elif const != 1:
            items.append(str(const))
        if p.offset:
            items.append(var if p.offset == 1 else f"{var}^{p.offset}")
        items.extend(factors)
        return items

    top = side(c.num)
    text = "*".join(top) if top else "1"
    if top and top[0] == "-1" and len(top) > 1:
        text = "-" + "*".join(top[1:])
    if c.den.is_one():
        return text
    bottom = side(c.den)
    btext = "*".join(bottom)
    if len(bottom) > 1:
        btext = f"({btext})"
    return f"{text}/{btext}"


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]\w*)|(.))")


def parse_lclass(text: str, var: str = "L") -> LClass:
    """Parse a class written with integers, ``L``, ``+ - * / ^`` and parentheses.

    Accepts both :func:`format_expanded` and :func:`format_factored` output.
    """
    tokens: list[tuple[str, str]] = []
    for m in _TOKEN.finditer(text):
        num, name, op = m.groups()
        if num is not None:
            tokens.append(("int", num))
        elif name is not None:
            if name != var:
                raise ValueError(f"unknown symbol {name!r} in {text!r}")
            tokens.append(("var", name))
        elif op is not None and not op.isspace():
            if op not in "+-*/^()":
                raise ValueError(f"unexpected character {op!r} in {text!r}")
            tokens.append(("op", op))
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else ("end", "")

    def take(kind, value=None):
        nonlocal pos
        tok = peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            raise ValueError(f"expected {value or kind} at token {pos} in {text!r}, got {tok[1]!r}")
        pos += 1
        return tok

    def expr():
        val = term()
        while peek() in (("op", "+"), ("op", "-")):
            op = take("op")[1]
            rhs = term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term():
        val = unary()
        while peek() in (("op", "*"), ("op", "/")):
            op = take("op")[1]
            rhs = unary()
            val = val * rhs if op == "*" else val / rhs
        return val

    def unary():
        if peek() == ("op", "-"):
            take("op", "-")
            return -unary()
        return power()

    def power():
        base = atom()
        if peek() == ("op", "^"):
            take("op", "^")
            sign = 1
            if peek() == ("op", "-"):
                take("op", "-")
                sign = -1
            e = sign * int(take("int")[1])
            base = base**e
        return base

    def atom():
        tok = peek()
        if tok[0] == "int":
            take("int")
            return LClass(int(tok[1]))
        if tok[0] == "var":
            take("var")
            return LClass.L()
        if tok == ("op", "("):
            take("op", "(")
            val = expr()
            take("op", ")")
            return val
        raise ValueError(f"unexpected token {tok[1]!r} at position {pos} in {text!r}")

    result = expr()
    if pos != len(tokens):
        raise ValueError(f"trailing input at token {pos} in {text!r}")
    return result


def lclass_to_json(c: LClass) -> dict:
    """``{"num": [[exp, coeff], ...], "den": [...]}`` with exponent-sorted pairs."""
    return {
        "num": [[e, k] for e, k in sorted(c.num.terms().items())],
        "den": [[e, k] for e, k in sorted(c.den.terms().items())],
    }


def lclass_from_json(obj: dict | str) -> LClass:
    if isinstance(obj, str):
        obj = json.loads(obj)
    num = LPoly.from_terms((int(e), int(k)) for e, k in obj["num"])
    den = LPoly.from_terms((int(e), int(k)) for e, k in obj["den"])
    return LClass(num, den)
