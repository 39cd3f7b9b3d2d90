"""Jet orbits of m x n matrices and their classes in the Grothendieck ring.

An orbit of ``J_l(GL_m) x J_l(GL_n)`` on level-l matrix jets is indexed by
the exponents of its diagonal standard form ``diag(t^lam_1, ..., t^lam_m)``;
an exponent that reaches ``l + 1`` (the zero entry) is stored as ``TOP``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Callable, Iterator, Optional, Sequence

from .lring import CycloProduct, LClass

__all__ = [
    "TOP",
    "OrbitIndex",
    "JumpData",
    "PointClass",
    "NotInDomainError",
    "jump_data",
    "class_gl",
    "class_grassmannian",
    "class_grassmannian_sum",
    "class_parabolic_and_levi",
    "class_orbit",
    "class_alpha_orbit",
    "image_signature",
    "enumerate_orbits",
    "parse_lambda",
    "format_lambda",
]


class _Top:
    """Sentinel exponent greater than every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("TOP")

    def __repr__(self):
        return "TOP"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (_Top, ())


TOP = _Top()


class NotInDomainError(ValueError):
    """The orbit index does not have the 0...0 1...1 prefix an alpha-image needs."""


@dataclass(frozen=True)
class OrbitIndex:
    entries: tuple
    level: int

    def __post_init__(self):
        ents = tuple(TOP if e is TOP or e is None else int(e) for e in self.entries)
        object.__setattr__(self, "entries", ents)
        if self.level < 0:
            raise ValueError("jet level must be nonnegative")
        prev = -1
        for e in ents:
            if e is not TOP:
                if e < 0 or e > self.level:
                    raise ValueError(f"entry {e} outside 0..{self.level} in {self}")
                if prev is TOP or e < prev:
                    raise ValueError(f"entries must be nondecreasing: {self}")
            prev = e

    @property
    def m(self) -> int:
        return len(self.entries)

    @property
    def s(self) -> int:
        """Number of finite entries."""
        return sum(1 for e in self.entries if e is not TOP)

    @property
    def finite(self) -> tuple[int, ...]:
        return tuple(e for e in self.entries if e is not TOP)

    def __str__(self) -> str:
        return format_lambda(self.entries)


def format_lambda(entries: Sequence) -> str:
    return ",".join("inf" if e is TOP or e is None else str(e) for e in entries)


def parse_lambda(text: str, level: Optional[int] = None) -> OrbitIndex:
    """Parse ``0,1,inf``; the level defaults to the largest finite entry."""
    parts = [p.strip() for p in text.split(",") if p.strip()]
    entries = [TOP if p.lower() in ("inf", "top", "null") else int(p) for p in parts]
    if level is None:
        level = max((e for e in entries if e is not TOP), default=0)
    return OrbitIndex(tuple(entries), level)


@dataclass(frozen=True)
class JumpData:
    s: int
    jumps: tuple[int, ...]
    jump_positions: frozenset
    ladder: tuple[int, ...]

    @property
    def p(self) -> int:
        return len(self.ladder)

    @property
    def sentinel(self) -> int:
        return self.s + 1

    def block_sizes(self) -> tuple[int, ...]:
        """``i_{j-1} - i_j`` for j = 1..p, with i_0 = s + 1."""
        prev = self.s + 1
        out = []
        for i in self.ladder:
            out.append(prev - i)
            prev = i
        return tuple(out)

    def partial_sums(self) -> tuple[int, ...]:
        out, acc = [], 0
        for a in self.jumps:
            acc += a
            out.append(acc)
        return tuple(out)


def jump_data(lam: OrbitIndex | Sequence) -> JumpData:
    if isinstance(lam, OrbitIndex):
        fin = lam.finite
    else:
        fin = tuple(e for e in lam if e is not TOP and e is not None)
    s = len(fin)
    jumps = tuple(fin[j] - (fin[j - 1] if j else 0) for j in range(s))
    positions = frozenset(i for i in range(2, s + 1) if jumps[i - 1] != 0)
    ladder = tuple(sorted(positions | {1}, reverse=True))
    return JumpData(s, jumps, positions, ladder)


# -- group and flag-variety classes --------------------------------------------


@lru_cache(maxsize=None)
def _gl(d: int) -> CycloProduct:
    if d < 0:
        raise ValueError("GL_d needs d >= 0")
    out = CycloProduct.L(d * (d - 1) // 2)
    for j in range(1, d + 1):
        out = out * CycloProduct.L_power_minus_one(j)
    return out


@lru_cache(maxsize=None)
def _grass(d: int, k: int) -> CycloProduct:
    if not 0 <= d <= k:
        raise ValueError(f"G({d},{k}) needs 0 <= d <= k")
    out = CycloProduct()
    for j in range(1, d + 1):
        out = out * CycloProduct.L_power_minus_one(j + k - d) / CycloProduct.L_power_minus_one(j)
    return out


def class_gl(d: int) -> LClass:
    """``[GL_d] = L^(d(d-1)/2) * prod_{j<=d} (L^j - 1)``."""
    return _gl(d).to_lclass()


def class_grassmannian(d: int, k: int) -> LClass:
    """Class of the Grassmannian of d-planes in k-space (product formula)."""
    return _grass(d, k).to_lclass()


def class_grassmannian_sum(d: int, k: int) -> LClass:
    """Same class via the cell count ``sum L^(lam_1+...+lam_d)`` over 0 <= lam_1 <= ... <= lam_d <= k-d."""
    if not 0 <= d <= k:
        raise ValueError(f"G({d},{k}) needs 0 <= d <= k")
    total = LClass(0)
    for lam in combinations_with_replacement(range(k - d + 1), d):
        total = total + LClass.L(sum(lam))
    return total


def _blocks(values: Sequence[int]) -> list[int]:
    sizes: list[int] = []
    prev = None
    for v in values:
        if sizes and v == prev:
            sizes[-1] += 1
        else:
            sizes.append(1)
        prev = v
    return sizes


def class_parabolic_and_levi(lam_prime: Sequence[int], ambient: Optional[int] = None) -> tuple[LClass, LClass]:
    """Classes of the parabolic subgroup of ``GL_s`` fixing the flag of ``lam_prime`` and of its Levi factor."""
    vals = list(lam_prime)
    if ambient is not None and ambient != len(vals):
        raise ValueError(f"lambda' has {len(vals)} entries, ambient GL_{ambient}")
    if any(b < a for a, b in zip(vals, vals[1:])):
        raise ValueError("lambda' must be nondecreasing")
    sizes = _blocks(vals)
    levi = CycloProduct()
    for c in sizes:
        levi = levi * _gl(c)
    upper = sum(sizes[a] * sizes[b] for a in range(len(sizes)) for b in range(a + 1, len(sizes)))
    return (levi * CycloProduct.L(upper)).to_lclass(), levi.to_lclass()


# -- orbit classes ---------------------------------------------------------------


@lru_cache(maxsize=65536)
def _orbit_base(m: int, n: int, finite: tuple[int, ...]) -> CycloProduct:
    """Level-independent part of the orbit class; the level enters as ``L^(l*s*(m+n-s))``."""
    jd = jump_data(finite)
    s = jd.s
    num = _gl(m) * _gl(n)
    prev = s + 1
    for i in jd.ladder:
        size = prev - i
        num = num * _grass(size, s + 1 - i) ** 2 * _gl(size)
        prev = i
    den = _gl(s) ** 2 * _gl(m - s) * _gl(n - s)
    expo = s * (m + n - 2 * s) + sum((m + n + 1 - 2 * j) * lam for j, lam in enumerate(finite, start=1))
    return num / den / CycloProduct.L(expo)


def _orbit_product(m: int, n: int, lam: OrbitIndex) -> CycloProduct:
    if m > n:
        m, n = n, m
    if lam.m != m:
        raise ValueError(f"orbit index {lam} has {lam.m} entries, expected min(m, n) = {m}")
    s = lam.s
    return _orbit_base(m, n, lam.finite) * CycloProduct.L(lam.level * s * (m + n - s))


@lru_cache(maxsize=65536)
def _orbit_class_cached(m: int, n: int, entries: tuple, level: int) -> LClass:
    return _orbit_product(m, n, OrbitIndex(entries, level)).to_lclass()


def class_orbit(m: int, n: int, lam: OrbitIndex) -> LClass:
    """Class of the level-l orbit with standard form ``diag(t^lam_i)``.

    Shapes with m > n are transposed; ``lam`` always has min(m, n) entries.
    """
    if m > n:
        m, n = n, m
    if lam.m != m:
        raise ValueError(f"orbit index {lam} has {lam.m} entries, expected min(m, n) = {m}")
    return _orbit_class_cached(m, n, lam.entries, lam.level)


def orbit_order_at_one(m: int, n: int, lam: OrbitIndex) -> int:
    """(L - 1)-adic valuation of the orbit class, read off the factored form."""
    return _orbit_product(m, n, lam).order_at_one()


@dataclass(frozen=True)
class PointClass:
    """Classification of a point e of the exceptional divisor of the blow-up of Z_r.

    ``i - 1`` is the rank of h(e); ``q`` is the A_q label of the orbit whose
    alpha-image contains e, or None when no such orbit exists.
    """

    m: int
    n: int
    r: int
    i: int
    q: Optional[int] = None

    def __post_init__(self):
        if not 1 <= self.r <= self.m <= self.n:
            raise ValueError(f"need 1 <= r <= m <= n, got r={self.r}, m={self.m}, n={self.n}")
        if not 1 <= self.i <= self.r:
            raise ValueError(f"need 1 <= i <= r, got i={self.i}")
        if self.q is not None and not self.r <= self.q <= self.m:
            raise ValueError(f"need r <= q <= m, got q={self.q}")


def _alpha_product(m: int, n: int, r: int, i: int, q: int) -> CycloProduct:
    if not 1 <= i <= r <= q <= m <= n:
        raise ValueError(f"need 1 <= i <= r <= q <= m <= n, got i={i}, r={r}, q={q}, m={m}, n={n}")
    num = _gl(m) * _gl(n)
    if q == r:
        den = _gl(i - 1) * _gl(r - i + 1) ** 2 * _gl(m - r) * _gl(n - r)
        den = den * CycloProduct.L((m + n - 2 * i + 2) * (i - 1) + (r - i + 1) * (m + n - 2 * r))
    else:
        den = _gl(i - 1) * _gl(q - i + 1) * _gl(m - q) * _gl(n - q)
        den = den * CycloProduct.L((m + n - 2 * i + 2) * (i - 1) + (q - i + 1) * (m + n - 2 * q))
        den = den * CycloProduct.L_power_minus_one(1)
    return num / den


def class_alpha_orbit(m: int, n: int, r: int, i: int, q: int) -> LClass:
    """Class of the image in the blow-up of any orbit in A_q with prefix 0^(i-1) 1^(r-i+1)."""
    return _alpha_product(m, n, r, i, q).to_lclass()


def alpha_order_at_one(m: int, n: int, r: int, i: int, q: int) -> int:
    return _alpha_product(m, n, r, i, q).order_at_one()


def image_signature(lam: OrbitIndex | Sequence, r: int) -> tuple[int, int]:
    """The pair (i, u_lambda) that decides the alpha-image of the orbit."""
    ents = lam.entries if isinstance(lam, OrbitIndex) else tuple(TOP if e is None else e for e in lam)
    if not 1 <= r <= len(ents):
        raise NotInDomainError(f"r={r} out of range for {format_lambda(ents)}")
    i = 1
    while i <= len(ents) and ents[i - 1] == 0:
        i += 1
    if i > r or any(ents[j - 1] != 1 for j in range(i, r + 1)):
        raise NotInDomainError(f"{format_lambda(ents)} has no prefix 0^(i-1) 1^(r-i+1) with i <= r={r}")
    q = r
    while q < len(ents) and ents[q] == 1:
        q += 1
    return i, q


def enumerate_orbits(
    m: int, n: int, l: int, constraint: Optional[Callable[[OrbitIndex], bool]] = None
) -> Iterator[OrbitIndex]:
    """Every orbit index at level l, in lexicographic order with TOP last."""
    k = min(m, n)
    values = list(range(l + 1)) + [TOP]
    for ents in combinations_with_replacement(values, k):
        lam = OrbitIndex(ents, l)
        if constraint is None or constraint(lam):
            yield lam


def orbits_with_prefix(m: int, n: int, l: int, prefix: Sequence[int], tail_min: int) -> Iterator[OrbitIndex]:
    """Orbit indices starting with ``prefix`` whose remaining entries lie in {tail_min..l} or TOP."""
    k = min(m, n)
    values = list(range(tail_min, l + 1)) + [TOP]
    for tail in combinations_with_replacement(values, k - len(prefix)):
        yield OrbitIndex(tuple(prefix) + tail, l)
