"""Contact loci, exceptional strata and fibre classes for the resolution of Z_r.

The canonical resolution of (C^{mn}, Z_r) has exceptional divisors
E_1..E_r with data (N_j, nu_j) = (r + 1 - j, (m + 1 - j)(n + 1 - j)).  An
arc with Smith exponents lam lifts with ord_{E_j} = lam_j - lam_{j-1}, so
every set below is a finite union of jet orbits.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .lring import LClass, lclass_euler
from .orbits import (
    TOP,
    OrbitIndex,
    class_alpha_orbit,
    class_orbit,
    enumerate_orbits,
    orbits_with_prefix,
)

__all__ = [
    "LevelTooSmallError",
    "InstabilityError",
    "ResolutionData",
    "ContactProfile",
    "StratumClass",
    "determinantal_resolution",
    "working_level",
    "contact_locus_class",
    "stratum_class",
    "all_strata",
    "fiber_class",
    "fiber_summands",
    "fiber_euler_closed",
    "determinantal_class",
]


class LevelTooSmallError(ValueError):
    """The requested jet level cannot see the prescribed contact orders."""


class InstabilityError(RuntimeError):
    """A class that must be level-independent changed between consecutive levels."""


def _check_shape(m: int, n: int, r: int) -> None:
    if not 1 <= r <= m <= n:
        raise ValueError(f"need 1 <= r <= m <= n, got m={m}, n={n}, r={r}")


@dataclass(frozen=True)
class ResolutionData:
    pairs: tuple[tuple[int, int], ...]
    source: str = "user-supplied"

    def __post_init__(self):
        pairs = tuple((int(N), int(nu)) for N, nu in self.pairs)
        if any(N < 1 or nu < 1 for N, nu in pairs):
            raise ValueError(f"resolution data must be positive: {pairs}")
        object.__setattr__(self, "pairs", pairs)

    @property
    def N(self) -> tuple[int, ...]:
        return tuple(p[0] for p in self.pairs)

    @property
    def nu(self) -> tuple[int, ...]:
        return tuple(p[1] for p in self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)


def determinantal_resolution(m: int, n: int, r: int) -> ResolutionData:
    _check_shape(m, n, r)
    pairs = tuple((r + 1 - j, (m + 1 - j) * (n + 1 - j)) for j in range(1, r + 1))
    return ResolutionData(pairs, source=f"determinantal({m},{n},{r})")


@dataclass(frozen=True)
class ContactProfile:
    u: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "u", tuple(int(x) for x in self.u))
        if any(x < 0 for x in self.u):
            raise ValueError(f"contact orders must be nonnegative: {self.u}")

    @classmethod
    def indicator(cls, r: int, J: Iterable[int]) -> "ContactProfile":
        J = set(J)
        if not J <= set(range(1, r + 1)):
            raise ValueError(f"J={sorted(J)} is not a subset of 1..{r}")
        return cls(tuple(1 if j in J else 0 for j in range(1, r + 1)))

    @property
    def support(self) -> frozenset:
        return frozenset(j for j, x in enumerate(self.u, start=1) if x)

    def smith_prefix(self) -> tuple[int, ...]:
        out, acc = [], 0
        for x in self.u:
            acc += x
            out.append(acc)
        return tuple(out)


@dataclass(frozen=True)
class StratumClass:
    J: frozenset
    value: LClass
    witnessed_level: int

    @property
    def euler(self):
        return lclass_euler(self.value)


def working_level(res: ResolutionData, u: ContactProfile) -> int:
    """Level at which the fibration formulas are applied: 2 * sum N_j u_j + 2."""
    return 2 * sum(N * x for N, x in zip(res.N, u.u)) + 2


def contact_locus_class(m: int, n: int, r: int, l: int, u: ContactProfile | Sequence[int]) -> LClass:
    """Class of the level-l truncation of the multiple contact locus with orders u along E_1..E_r."""
    _check_shape(m, n, r)
    if not isinstance(u, ContactProfile):
        u = ContactProfile(tuple(u))
    if len(u.u) != r:
        raise ValueError(f"contact profile needs {r} entries, got {len(u.u)}")
    prefix = u.smith_prefix()
    if prefix[-1] > l:
        raise LevelTooSmallError(f"level {l} cannot see Smith exponent {prefix[-1]}")
    total = LClass(0)
    for lam in orbits_with_prefix(m, n, l, prefix, prefix[-1]):
        total = total + class_orbit(m, n, lam)
    return total


def determinantal_class(m: int, n: int, r: int) -> LClass:
    """Class of Z_r (matrices of rank < r) as a sum of level-0 orbits."""
    total = LClass(0)
    for lam in enumerate_orbits(m, n, 0, lambda lam: lam.entries[r - 1] is TOP):
        total = total + class_orbit(m, n, lam)
    return total


def _stratum_at(m: int, n: int, r: int, u: ContactProfile, res: ResolutionData, l: int) -> LClass:
    # Y^l_u -> X^l_u has fibre A^{sum u_i(nu_i - 1)}; Y^l_u -> E_J has fibre
    # G_m^{|J|} x A^{mnl - sum u_i}; the two together give this exponent.
    shift = sum(x * nu for x, nu in zip(u.u, res.nu)) - m * n * l
    cls = contact_locus_class(m, n, r, l, u).shift(shift)
    return cls / (LClass.L() - 1) ** len(u.support)


def stratum_class(m: int, n: int, r: int, J: Iterable[int], *, level: Optional[int] = None) -> StratumClass:
    """Class of the open stratum of the exceptional divisors indexed exactly by J.

    The class is computed at the working level and at the next level; a
    mismatch raises :class:`InstabilityError`.
    """
    _check_shape(m, n, r)
    J = frozenset(J)
    res = determinantal_resolution(m, n, r)
    if not J:
        value = LClass.L(m * n) - determinantal_class(m, n, r)
        return StratumClass(J, value, 0)
    u = ContactProfile.indicator(r, J)
    l0 = working_level(res, u) if level is None else level
    a = _stratum_at(m, n, r, u, res, l0)
    b = _stratum_at(m, n, r, u, res, l0 + 1)
    if a != b:
        raise InstabilityError(f"stratum J={sorted(J)} of ({m},{n},{r}) differs between levels {l0} and {l0 + 1}")
    return StratumClass(J, a, l0)


def all_strata(m: int, n: int, r: int) -> list[StratumClass]:
    """Strata for every J in {1..r}, ordered by size then lexicographically."""
    out = []
    for k in range(r + 1):
        for J in combinations(range(1, r + 1), k):
            out.append(stratum_class(m, n, r, J))
    return out


def _check_point(m: int, n: int, r: int, i: int, q: int) -> None:
    if not 1 <= i <= r <= q <= m <= n:
        raise ValueError(f"need 1 <= i <= r <= q <= m <= n, got i={i}, r={r}, q={q}, m={m}, n={n}")


def fiber_summands(m: int, n: int, r: int, i: int, q: int, l: int) -> list[tuple[OrbitIndex, LClass]]:
    """The orbit-by-orbit terms of the fibre class at a point of type (i, q)."""
    _check_point(m, n, r, i, q)
    if l < r + 2:
        raise LevelTooSmallError(f"fibre classes need level >= r + 2 = {r + 2}, got {l}")
    res = determinantal_resolution(m, n, r)
    nu_i = res.nu[i - 1]
    alpha = class_alpha_orbit(m, n, r, i, q)
    scale = (LClass.L() - 1) * alpha
    prefix = (0,) * (i - 1) + (1,) * (q - i + 1)
    out = []
    for lam in orbits_with_prefix(m, n, l, prefix, 2):
        term = class_orbit(m, n, lam).shift(nu_i - m * n * l) / scale
        out.append((lam, term))
    return out


def fiber_class(m: int, n: int, r: int, i: int, q: int, l: int) -> LClass:
    """Class of the part of E_i (off the other divisors) over a point of type (i, q)."""
    total = LClass(0)
    for _, term in fiber_summands(m, n, r, i, q, l):
        total = total + term
    return total


def fiber_euler_closed(m: int, n: int, r: int, i: int, q: int) -> int:
    """Euler characteristic of the fibre: 1 when i = r or i < r < q, else 0."""
    _check_point(m, n, r, i, q)
    return 1 if i == r or i < r < q else 0
