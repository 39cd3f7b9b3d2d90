"""Motivic, topological, twisted and monodromy zeta functions of Z_r, and the two conjecture checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import gcd
from typing import Iterable, Optional, Sequence

from .lring import LClass, LPoly, format_poly, lclass_euler
from .orbits import PointClass, TOP, class_orbit, enumerate_orbits
from .strata import (
    ResolutionData,
    StratumClass,
    all_strata,
    determinantal_resolution,
    fiber_class,
    fiber_euler_closed,
)

__all__ = [
    "ZetaRat",
    "MotivicZeta",
    "CycloFactored",
    "topological_zeta",
    "topological_zeta_from_strata",
    "twisted_topological_zeta",
    "twisted_topological_zeta_from_strata",
    "motivic_zeta_rational",
    "motivic_zeta_series",
    "monodromy_zeta_at_point",
    "point_classes",
    "eigenvalue_set",
    "check_monodromy_conjecture",
    "check_holomorphy",
    "bernstein_sato_maximal",
    "bernstein_sato_roots",
    "ConjectureReport",
]


def _frac_text(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _linear(N: int, nu: int) -> LClass:
    return LClass(LPoly([nu, N]))


class ZetaRat:
    """``constant * prod (N s + nu)^e * residual`` with exact rational data.

    Linear factors are stored primitive (gcd(N, nu) = 1, N > 0).  The
    residual is a reduced fraction of integer polynomials in s, kept only
    when a sum refuses to factor over the known linear terms; it is 1
    otherwise.  Factors keep their insertion order for printing; equality compares the fully expanded reduced fraction.
    """

    __slots__ = ("constant", "_factors", "residual")

    def __init__(self, constant=1, factors: dict | Iterable = (), residual: Optional[LClass] = None):
        const = Fraction(constant)
        acc: dict[tuple[int, int], int] = {}
        items = factors.items() if isinstance(factors, dict) else factors
        for (N, nu), e in items:
            if N <= 0:
                raise ValueError(f"linear factor needs N > 0, got ({N}, {nu})")
            g = gcd(N, nu)
            const *= Fraction(g) ** e
            key = (N // g, nu // g)
            acc[key] = acc.get(key, 0) + e
        if const == 0:
            acc = {}
            residual = None
        self.constant = const
        self._factors = tuple((k, e) for k, e in acc.items() if e)
        res = residual if residual is not None else LClass(1)
        if res.is_zero():
            self.constant, self._factors, res = Fraction(0), (), LClass(1)
        self.residual = res

    @classmethod
    def zero(cls) -> "ZetaRat":
        return cls(0)

    @property
    def factors(self) -> dict:
        return dict(self._factors)

    def is_zero(self) -> bool:
        return self.constant == 0

    def expanded(self) -> LClass:
        """The same function as one reduced fraction of integer polynomials in s."""
        c = self.constant
        out = LClass(c.numerator, c.denominator) * self.residual
        for (N, nu), e in self._factors:
            out = out * _linear(N, nu) ** e
        return out

    @classmethod
    def from_expanded(cls, frac: LClass, hints: Iterable[tuple[int, int]] = ()) -> "ZetaRat":
        """Refactor a fraction, pulling out every hinted linear factor it contains."""
        if frac.is_zero():
            return cls.zero()
        num, den = frac.num, frac.den
        factors: dict[tuple[int, int], int] = {}
        for N, nu in dict.fromkeys(hints):
            g = gcd(N, nu)
            N, nu = N // g, nu // g
            lin = LPoly([nu, N])
            for side, sign in ((0, -1), (1, 1)):
                while True:
                    poly = den if side == 0 else num
                    q = LClass(poly, lin)
                    if not q.den.is_constant() or q.den.leading != 1:
                        break
                    if side == 0:
                        den = q.num
                    else:
                        num = q.num
                    factors[(N, nu)] = factors.get((N, nu), 0) + sign
        rest = LClass(num, den)
        const = Fraction(1)
        if rest.num.is_constant() and rest.den.is_constant():
            const = Fraction(rest.num.leading, rest.den.leading)
            rest = None
        else:
            cn, cd = rest.num.content(), rest.den.content()
            if rest.num.leading < 0:
                cn = -cn
            const = Fraction(cn, cd)
            rest = LClass(rest.num.scale_down(cn), rest.den.scale_down(cd))
        return cls(const, factors, rest)

    def _hints(self) -> list:
        return [k for k, _ in self._factors]

    def __add__(self, other: "ZetaRat") -> "ZetaRat":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        return ZetaRat.from_expanded(self.expanded() + other.expanded(), self._hints() + other._hints())

    def __mul__(self, other) -> "ZetaRat":
        if not isinstance(other, ZetaRat):
            return ZetaRat(self.constant * Fraction(other), self.factors, self.residual)
        acc = self.factors
        for k, e in other._factors:
            acc[k] = acc.get(k, 0) + e
        return ZetaRat(self.constant * other.constant, acc, self.residual * other.residual)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZetaRat):
            return NotImplemented
        return self.expanded() == other.expanded()

    def __hash__(self) -> int:
        return hash(self.expanded())

    def is_polynomial(self) -> bool:
        return all(e > 0 for _, e in self._factors) and self.residual.den.is_constant()

    def poles(self) -> list[Fraction]:
        """Poles coming from linear factors with negative exponent, ascending."""
        return sorted(Fraction(-nu, N) for (N, nu), e in self._factors if e < 0)

    def has_factor(self, N: int, nu: int) -> int:
        """Exponent of the primitive linear factor proportional to N s + nu."""
        g = gcd(N, nu)
        return dict(self._factors).get((N // g, nu // g), 0)

    def to_text(self) -> str:
        """Render as ``c * prod (1 + N s/nu)^e``, e.g. ``1/((1+2s/9)(1+s/4))``."""
        if self.is_zero():
            return "0"
        c = self.constant
        pieces_up: list[str] = []
        pieces_down: list[str] = []
        for (N, nu), e in self._factors:
            c *= Fraction(nu) ** e
            if N == nu:
                body = "1+s"
            elif nu == 1:
                body = f"1+{N}s"
            elif N == 1:
                body = f"1+s/{nu}"
            else:
                body = f"1+{N}s/{nu}"
            piece = f"({body})" + (f"^{abs(e)}" if abs(e) > 1 else "")
            (pieces_up if e > 0 else pieces_down).append(piece)
        if not self.residual.is_laurent() or not self.residual == 1:
            r = self.residual
            pieces_up.append(f"({format_poly(r.num, 's', spaced=False)})")
            if not r.den.is_one():
                pieces_down.append(f"({format_poly(r.den, 's', spaced=False)})")
        top = "".join(pieces_up)
        if c != 1 or not top:
            ctext = str(c.numerator) if c.denominator == 1 else _frac_text(c)
            if (top or pieces_down) and (c.denominator != 1 or c < 0):
                ctext = f"({ctext})"
            top = ctext + top
        if not pieces_down:
            return top
        bottom = "".join(pieces_down)
        if len(pieces_down) > 1:
            bottom = f"({bottom})"
        return f"{top}/{bottom}"

    def to_product_string(self) -> str:
        """Canonical ``c * prod((N*s+nu)^e)`` form used in JSON reports."""
        if self.is_zero():
            return "0"
        parts = [f"(({N}*s+{nu})^{e})" for (N, nu), e in self._factors]
        text = f"{_frac_text(self.constant)} * prod({', '.join(parts)})" if parts else _frac_text(self.constant)
        if not self.residual == 1:
            text += f" * ({format_poly(self.residual.num, 's')})"
            if not self.residual.den.is_one():
                text += f" / ({format_poly(self.residual.den, 's')})"
        return text

    def __repr__(self) -> str:
        return f"ZetaRat({self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()


def _shape(m: int, n: int, r: int) -> None:
    if not 1 <= r <= m <= n:
        raise ValueError(f"need 1 <= r <= m <= n, got m={m}, n={n}, r={r}")


def topological_zeta(m: int, n: int, r: int) -> ZetaRat:
    """Closed product ``prod_j nu_j / (N_j s + nu_j)``."""
    res = determinantal_resolution(m, n, r)
    const = Fraction(1)
    factors: dict = {}
    for N, nu in res.pairs:
        const *= nu
        factors[(N, nu)] = factors.get((N, nu), 0) - 1
    return ZetaRat(const, list(factors.items()))


def _sum_over_subsets(res: ResolutionData, euler: dict, d: int = 1) -> ZetaRat:
    total = ZetaRat.zero()
    for J, chi in sorted(euler.items(), key=lambda kv: (len(kv[0]), sorted(kv[0]))):
        if chi == 0:
            continue
        mJ = 0
        for j in J:
            mJ = gcd(mJ, res.pairs[j - 1][0])
        if mJ % d:
            continue
        term = ZetaRat(chi, [(res.pairs[j - 1], -1) for j in sorted(J)])
        total = total + term
    return total


def _strata_euler(m: int, n: int, r: int) -> dict:
    return {s.J: lclass_euler(s.value) for s in all_strata(m, n, r)}


def topological_zeta_from_strata(m: int, n: int, r: int) -> ZetaRat:
    """``sum_J chi(E_J) prod_{j in J} 1/(N_j s + nu_j)`` with Euler characteristics from the strata classes."""
    _shape(m, n, r)
    return _sum_over_subsets(determinantal_resolution(m, n, r), _strata_euler(m, n, r))


def twisted_topological_zeta(m: int, n: int, r: int, d: int) -> ZetaRat:
    """Closed form: zero for d >= 2, the topological zeta function for d = 1."""
    if d < 1:
        raise ValueError("twist order d must be >= 1")
    _shape(m, n, r)
    return topological_zeta(m, n, r) if d == 1 else ZetaRat.zero()


def twisted_topological_zeta_from_strata(m: int, n: int, r: int, d: int) -> ZetaRat:
    """The subset sum restricted to J with d | gcd(N_j : j in J)."""
    if d < 1:
        raise ValueError("twist order d must be >= 1")
    _shape(m, n, r)
    return _sum_over_subsets(determinantal_resolution(m, n, r), _strata_euler(m, n, r), d)


# -- motivic zeta ---------------------------------------------------------------------


@dataclass
class MotivicZeta:
    """Denef--Loeser form ``sum_J [E_J] prod_{j in J} (L-1) L^-nu_j T^N_j / (1 - L^-nu_j T^N_j)``, T = L^-s."""

    strata_form: list[tuple[frozenset, LClass]]
    pairs: ResolutionData
    series: Optional[list[LClass]] = None

    def expand(self, order: int) -> list[LClass]:
        """Coefficients of T^0 .. T^order of the strata form."""
        coeffs = [LClass(0) for _ in range(order + 1)]
        Lm1 = LClass.L() - 1
        for J, cls in self.strata_form:
            if cls.is_zero():
                continue
            idx = sorted(J)
            base = cls * Lm1 ** len(idx)
            Ns = [self.pairs.pairs[j - 1][0] for j in idx]
            nus = [self.pairs.pairs[j - 1][1] for j in idx]
            for a in _compositions(Ns, order):
                k = sum(x * N for x, N in zip(a, Ns))
                coeffs[k] = coeffs[k] + base.shift(-sum(x * nu for x, nu in zip(a, nus)))
        return coeffs

    def euler_specialization(self) -> ZetaRat:
        euler = {J: lclass_euler(cls) for J, cls in self.strata_form}
        return _sum_over_subsets(self.pairs, euler)

    def candidate_poles(self) -> list[Fraction]:
        return sorted({Fraction(-nu, N) for N, nu in self.pairs.pairs})


def _compositions(Ns: Sequence[int], order: int):
    """Tuples a >= 1 (componentwise) with sum a_j N_j <= order."""
    if not Ns:
        yield ()
        return
    N, rest = Ns[0], Ns[1:]
    floor = sum(rest)
    a = 1
    while a * N + floor <= order:
        for tail in _compositions(rest, order - a * N):
            yield (a,) + tail
        a += 1


def motivic_zeta_rational(m: int, n: int, r: int) -> MotivicZeta:
    _shape(m, n, r)
    strata = all_strata(m, n, r)
    return MotivicZeta([(s.J, s.value) for s in strata], determinantal_resolution(m, n, r))


def motivic_zeta_series(m: int, n: int, r: int, order: int) -> list[LClass]:
    """Coefficients ``[X^k_k] L^(-k mn)`` for k = 0..order, summed directly over jet orbits."""
    _shape(m, n, r)
    if order < 0:
        raise ValueError("series order must be nonnegative")
    out = []
    for k in range(order + 1):
        def on_locus(lam, k=k):
            head = lam.entries[:r]
            return all(e is not TOP for e in head) and sum(head) == k

        total = LClass(0)
        for lam in enumerate_orbits(m, n, k, on_locus):
            total = total + class_orbit(m, n, lam)
        out.append(total.shift(-k * m * n))
    return out


# -- monodromy ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CycloFactored:
    """``prod (1 - t^a)^e_a``; the empty product is 1."""

    factors: tuple = ()

    def __post_init__(self):
        acc: dict[int, int] = {}
        items = self.factors.items() if isinstance(self.factors, dict) else self.factors
        for a, e in items:
            if a < 1:
                raise ValueError("exponent of t must be positive")
            acc[a] = acc.get(a, 0) + e
        object.__setattr__(self, "factors", tuple(sorted((a, e) for a, e in acc.items() if e)))

    def is_one(self) -> bool:
        return not self.factors

    def roots(self) -> set:
        """Zeros and poles as fractions k/a in [0, 1) (t = exp(2 pi i k/a))."""
        out = set()
        for a, _ in self.factors:
            out.update(Fraction(k, a) for k in range(a))
        return out

    def to_text(self) -> str:
        if not self.factors:
            return "1"
        parts = []
        for a, e in self.factors:
            body = "1 - t" if a == 1 else f"1 - t^{a}"
            if e == 1 and len(self.factors) == 1:
                parts.append(body)
            else:
                parts.append(f"({body})" + (f"^{e}" if e != 1 else ""))
        return "*".join(parts)

    def __str__(self) -> str:
        return self.to_text()


def monodromy_zeta_at_point(p: PointClass, *, sign: int = 1, method: str = "closed") -> CycloFactored:
    """Monodromy zeta function at a point of the exceptional divisor of type p.

    ``sign`` is the exponent convention of the generalized A'Campo formula:
    +1 gives ``(1 - t^N)^chi``, -1 gives ``(1 - t^N)^-chi``.  ``method``
    picks the fibre Euler characteristic from the closed criterion or from
    the fibre class itself.
    """
    if sign not in (1, -1):
        raise ValueError("sign convention must be +1 or -1")
    if p.q is None:
        return CycloFactored()
    if method == "closed":
        chi = fiber_euler_closed(p.m, p.n, p.r, p.i, p.q)
    elif method == "classes":
        chi = lclass_euler(fiber_class(p.m, p.n, p.r, p.i, p.q, p.r + 3))
    else:
        raise ValueError(f"unknown method {method!r}")
    if chi == 0:
        return CycloFactored()
    return CycloFactored(((p.r + 1 - p.i, sign * chi),))


def point_classes(m: int, n: int, r: int) -> list[PointClass]:
    """Every admissible (i, q) label, with q = None last for each i."""
    _shape(m, n, r)
    out = []
    for i in range(1, r + 1):
        for q in list(range(r, m + 1)) + [None]:
            out.append(PointClass(m, n, r, i, q))
    return out


def eigenvalue_set(m: int, n: int, r: int, *, sign: int = 1) -> list[Fraction]:
    """Union of zeros and poles of the monodromy zeta functions over all point types, as k/a mod 1."""
    roots: set = set()
    for p in point_classes(m, n, r):
        roots |= monodromy_zeta_at_point(p, sign=sign).roots()
    return sorted(roots)


def _witness(m: int, n: int, r: int, target: Fraction, sign: int) -> Optional[PointClass]:
    for p in point_classes(m, n, r):
        if target in monodromy_zeta_at_point(p, sign=sign).roots():
            return p
    return None


@dataclass
class ConjectureReport:
    kind: str
    shape: tuple[int, int, int]
    verdict: bool
    poles: list = field(default_factory=list)
    eigenvalues: list = field(default_factory=list)
    witnesses: list = field(default_factory=list)
    checks: list = field(default_factory=list)

    @property
    def verdict_text(self) -> str:
        return "PASS" if self.verdict else "FAIL"

    def to_json(self) -> dict:
        m, n, r = self.shape
        doc = {
            "shape": {"m": m, "n": n, "r": r},
            "eigenvalues": [_frac_text(x) for x in self.eigenvalues],
            "verdict": self.verdict_text,
            "witnesses": self.witnesses,
        }
        if self.kind == "monodromy":
            doc["poles"] = self.poles
        else:
            doc["checks"] = self.checks
        return doc


def check_monodromy_conjecture(m: int, n: int, r: int, *, sign: int = 1) -> ConjectureReport:
    """Every pole s0 of the zeta function must have exp(2 pi i s0) among the monodromy eigenvalues."""
    res = determinantal_resolution(m, n, r)
    zeta = topological_zeta(m, n, r)
    eig = eigenvalue_set(m, n, r, sign=sign)
    eig_set = set(eig)
    poles, witnesses = [], []
    ok = True
    for N, nu in res.pairs:
        s0 = Fraction(-nu, N)
        actual = zeta.has_factor(N, nu) < 0
        reduced = s0 - (s0.numerator // s0.denominator)
        hit = reduced in eig_set
        ok = ok and hit and actual
        poles.append({"N": N, "nu": nu, "s0": _frac_text(s0), "actual": actual})
        w = _witness(m, n, r, reduced, sign) if hit else None
        witnesses.append(
            {
                "s0": _frac_text(s0),
                "eigenvalue": _frac_text(reduced),
                "member": hit,
                "point": None if w is None else {"i": w.i, "q": w.q},
            }
        )
    return ConjectureReport("monodromy", (m, n, r), ok, poles, eig, witnesses)


def check_holomorphy(m: int, n: int, r: int, d_max: int, *, sign: int = 1) -> ConjectureReport:
    """For each d <= d_max: the twisted zeta is a polynomial, or some eigenvalue has order divisible by d."""
    if d_max < 1:
        raise ValueError("d_max must be >= 1")
    eig = eigenvalue_set(m, n, r, sign=sign)
    orders = sorted({x.denominator for x in eig})
    checks = []
    ok = True
    for d in range(1, d_max + 1):
        z = twisted_topological_zeta(m, n, r, d)
        poly = z.is_polynomial()
        divisible = [o for o in orders if o % d == 0]
        passed = poly or bool(divisible)
        ok = ok and passed
        checks.append(
            {
                "d": d,
                "twisted_zeta": z.to_text(),
                "polynomial": poly,
                "eigenvalue_orders_divisible": divisible,
                "verdict": "PASS" if passed else "FAIL",
            }
        )
    return ConjectureReport("holomorphy", (m, n, r), ok, eigenvalues=eig, checks=checks)


def bernstein_sato_maximal(m: int, n: int, r: Optional[int] = None) -> LPoly:
    """``prod_{j=n-m+1}^{n} (s + j)`` for the ideal of maximal minors, as an integer polynomial in s."""
    if r is not None and r != m:
        raise ValueError(f"closed Bernstein-Sato form only for maximal minors (r = m = {m}), got r={r}")
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
    out = LPoly.constant(1)
    for j in range(n - m + 1, n + 1):
        out = out * LPoly([j, 1])
    return out


def bernstein_sato_roots(m: int, n: int) -> list[int]:
    return [-j for j in range(n - m + 1, n + 1)]
