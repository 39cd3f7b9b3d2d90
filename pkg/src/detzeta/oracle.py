"""Exhaustive point counts over F_q[t]/(t^(l+1)).

Ring elements are encoded as integers ``sum c_k q^k`` (``c_k`` the
coefficient of ``t^k``) and all arithmetic goes through precomputed tables,
so a Smith reduction of a small jet matrix is a few dozen list lookups.
"""

from __future__ import annotations

import csv
import io
import json
import os
import random
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterable, Optional, Sequence

from .lring import lclass_eval
from .orbits import TOP, OrbitIndex, class_orbit, format_lambda

__all__ = [
    "BudgetExceededError",
    "DEFAULT_BUDGET",
    "TruncatedRing",
    "TruncatedElement",
    "JetMatrix",
    "OrbitCensus",
    "Verdict",
    "smith_invariants",
    "count_orbits",
    "count_contact",
    "verify_class",
    "census_to_csv",
    "census_to_json",
]

DEFAULT_BUDGET = 2**30


class BudgetExceededError(RuntimeError):
    def __init__(self, required: int, budget: int):
        super().__init__(f"enumeration needs {required} jets, budget is {budget} (set DETZETA_BUDGET to override)")
        self.required = required
        self.budget = budget


def _budget(explicit: Optional[int]) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get("DETZETA_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % d for d in range(2, int(q**0.5) + 1))


class TruncatedRing:
    """Lookup tables for F_q[t]/(t^(l+1)), q prime."""

    def __init__(self, q: int, l: int):
        if not _is_prime(q):
            raise ValueError(f"only prime fields are supported, got q={q}")
        if l < 0:
            raise ValueError("level must be nonnegative")
        self.q = q
        self.l = l
        self.size = N = q ** (l + 1)
        digits = [self.decode(x) for x in range(N)]
        enc = self.encode
        self.val = [next((k for k, c in enumerate(d) if c), l + 1) for d in digits]
        self.sub = [[enc([(a - b) % q for a, b in zip(da, db)]) for db in digits] for da in digits]
        self.mul = [[enc(_trunc_mul(da, db, q, l)) for db in digits] for da in digits]
        # shift[v][x] = x / t^v, keeping only the coefficients that survive
        self.shift = [[enc(d[v:] + [0] * v) for d in digits] for v in range(l + 1)]
        self.inv = [0] * N
        for x in range(N):
            if digits[x][0]:
                row = self.mul[x]
                self.inv[x] = row.index(1)

    def encode(self, coeffs: Sequence[int]) -> int:
        x = 0
        for c in reversed(list(coeffs)[: self.l + 1]):
            x = x * self.q + (c % self.q)
        return x

    def decode(self, x: int) -> list[int]:
        out = []
        for _ in range(self.l + 1):
            x, c = divmod(x, self.q)
            out.append(c)
        return out

    def is_unit(self, x: int) -> bool:
        return self.val[x] == 0


def _trunc_mul(a: Sequence[int], b: Sequence[int], q: int, l: int) -> list[int]:
    out = [0] * (l + 1)
    for i, x in enumerate(a):
        if x:
            for j in range(l + 1 - i):
                out[i + j] += x * b[j]
    return [c % q for c in out]


@lru_cache(maxsize=None)
def _ring(q: int, l: int) -> TruncatedRing:
    return TruncatedRing(q, l)


@dataclass(frozen=True)
class TruncatedElement:
    """An element of F_q[t]/(t^(l+1)) given by its l+1 coefficients."""

    coefficients: tuple[int, ...]
    q: int

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(c % self.q for c in self.coefficients))

    @property
    def level(self) -> int:
        return len(self.coefficients) - 1

    def _code(self) -> int:
        return _ring(self.q, self.level).encode(self.coefficients)

    def _from(self, code: int) -> "TruncatedElement":
        return TruncatedElement(tuple(_ring(self.q, self.level).decode(code)), self.q)

    def __add__(self, other: "TruncatedElement") -> "TruncatedElement":
        return TruncatedElement(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)), self.q)

    def __sub__(self, other: "TruncatedElement") -> "TruncatedElement":
        return TruncatedElement(tuple(a - b for a, b in zip(self.coefficients, other.coefficients)), self.q)

    def __mul__(self, other: "TruncatedElement") -> "TruncatedElement":
        return TruncatedElement(tuple(_trunc_mul(self.coefficients, other.coefficients, self.q, self.level)), self.q)

    def is_unit(self) -> bool:
        return self.coefficients[0] != 0

    def valuation(self) -> int:
        """Order in t; ``level + 1`` for zero."""
        return next((k for k, c in enumerate(self.coefficients) if c), self.level + 1)


@dataclass(frozen=True)
class JetMatrix:
    """An m x n matrix of level-l jets over F_q, entries stored in ring encoding."""

    m: int
    n: int
    q: int
    l: int
    codes: tuple[int, ...]

    @classmethod
    def from_coefficients(cls, rows: Sequence[Sequence[Sequence[int]]], q: int, l: int) -> "JetMatrix":
        """``rows[i][j]`` is the coefficient list of entry (i, j), lowest degree first."""
        ring = _ring(q, l)
        m, n = len(rows), len(rows[0])
        codes = tuple(ring.encode(list(entry) + [0] * (l + 1 - len(entry))) for row in rows for entry in row)
        return cls(m, n, q, l, codes)

    @classmethod
    def from_layers(cls, layers: Sequence[Sequence[Sequence[int]]], q: int) -> "JetMatrix":
        """Build ``A_0 + A_1 t + ... + A_l t^l`` from the constant matrices ``A_k``."""
        l = len(layers) - 1
        m, n = len(layers[0]), len(layers[0][0])
        rows = [[[layers[k][i][j] for k in range(l + 1)] for j in range(n)] for i in range(m)]
        return cls.from_coefficients(rows, q, l)

    def entry(self, i: int, j: int) -> TruncatedElement:
        return TruncatedElement(tuple(_ring(self.q, self.l).decode(self.codes[i * self.n + j])), self.q)

    def __matmul__(self, other: "JetMatrix") -> "JetMatrix":
        if self.n != other.m or (self.q, self.l) != (other.q, other.l):
            raise ValueError("incompatible jet matrices")
        ring = _ring(self.q, self.l)
        add = ring.sub  # a + b == a - (0 - b)
        neg = ring.sub[0]
        mul = ring.mul
        out = []
        for i in range(self.m):
            for j in range(other.n):
                acc = 0
                for k in range(self.n):
                    acc = add[acc][neg[mul[self.codes[i * self.n + k]][other.codes[k * other.n + j]]]]
                out.append(acc)
        return JetMatrix(self.m, other.n, self.q, self.l, tuple(out))

    def transpose(self) -> "JetMatrix":
        codes = tuple(self.codes[i * self.n + j] for j in range(self.n) for i in range(self.m))
        return JetMatrix(self.n, self.m, self.q, self.l, codes)


def _smith_codes(codes: Sequence[int], m: int, n: int, ring: TruncatedRing) -> tuple:
    """Smith exponents of a jet matrix given as row-major ring codes.

    Pivot: the entry of least t-valuation, first in row-major order.  Only
    row operations are applied; once the pivot column is cleared the column
    operations touch the pivot row alone, which is then discarded.
    """
    val, sub, mul, shift, inv = ring.val, ring.sub, ring.mul, ring.shift, ring.inv
    top = ring.l + 1
    rows = [list(codes[i * n:(i + 1) * n]) for i in range(m)]
    out = []
    k = min(m, n)
    while len(out) < k:
        best, bi, bj = top, -1, -1
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                v = val[x]
                if v < best:
                    best, bi, bj = v, i, j
                    if v == 0:
                        break
            if best == 0:
                break
        if best == top:
            out.extend([TOP] * (k - len(out)))
            break
        out.append(best)
        prow = rows.pop(bi)
        uinv = inv[shift[best][prow[bj]]]
        sh = shift[best]
        for row in rows:
            a = row[bj]
            if a:
                c = mul[sh[a]][uinv]
                mc = mul[c]
                for j in range(len(row)):
                    row[j] = sub[row[j]][mc[prow[j]]]
        for row in rows:
            del row[bj]
    return tuple(out)


def smith_invariants(A: JetMatrix) -> OrbitIndex:
    """Exponents of the diagonal form of A under invertible row and column operations."""
    ring = _ring(A.q, A.l)
    return OrbitIndex(_smith_codes(A.codes, A.m, A.n, ring), A.l)


@dataclass(frozen=True)
class OrbitCensus:
    m: int
    n: int
    l: int
    q: int
    counts: dict

    def __getitem__(self, lam) -> int:
        key = lam.entries if isinstance(lam, OrbitIndex) else tuple(lam)
        return self.counts.get(key, 0)

    def total(self) -> int:
        return sum(self.counts.values())

    def items(self):
        return sorted(self.counts.items(), key=lambda kv: kv[0])


def _shard(args) -> Counter:
    m, n, q, l, first = args
    ring = _ring(q, l)
    N = ring.size
    counts: Counter = Counter()
    smith = _smith_codes
    for rest in product(range(N), repeat=m * n - 1):
        counts[smith((first,) + rest, m, n, ring)] += 1
    return counts


def _fiber_census(m: int, n: int, q: int, l: int, rank: int) -> Counter:
    """Census of the jets whose constant term is the rank-``rank`` identity block."""
    ring = _ring(q, l)
    const = [[1 if i == j and i < rank else 0 for j in range(n)] for i in range(m)]
    higher = q ** l
    counts: Counter = Counter()
    for rest in product(range(higher), repeat=m * n):
        codes = tuple(const[i][j] + q * rest[i * n + j] for i in range(m) for j in range(n))
        counts[_smith_codes(codes, m, n, ring)] += 1
    return counts


def count_orbits(
    m: int,
    n: int,
    l: int,
    q: int,
    *,
    jobs: int = 1,
    budget: Optional[int] = None,
    method: str = "exhaustive",
) -> OrbitCensus:
    """Count level-l jets by Smith class.

    ``method="exhaustive"`` runs every jet through the Smith reduction,
    sharded by the value of the first entry.  ``method="fibered"``
    enumerates all constant terms, then all higher coefficients over one
    representative constant term per rank; constant ``GL_m x GL_n`` elements
    preserve Smith classes and permute the fibres, so the counts agree.
    """
    _ring(q, l)
    limit = _budget(budget)
    if method == "exhaustive":
        required = q ** (m * n * (l + 1))
        if required > limit:
            raise BudgetExceededError(required, limit)
        N = q ** (l + 1)
        shards = [(m, n, q, l, first) for first in range(N)]
        if jobs > 1:
            from multiprocessing import Pool

            with Pool(jobs) as pool:
                parts = pool.map(_shard, shards)
        else:
            parts = [_shard(s) for s in shards]
        total: Counter = Counter()
        for part in parts:
            total.update(part)
    elif method == "fibered":
        k = min(m, n)
        required = q ** (m * n) + (k + 1) * q ** (m * n * l)
        if required > limit:
            raise BudgetExceededError(required, limit)
        ranks: Counter = Counter()
        ring0 = _ring(q, 0)
        for codes in product(range(q), repeat=m * n):
            lam = _smith_codes(codes, m, n, ring0)
            ranks[sum(1 for e in lam if e is not TOP)] += 1
        total = Counter()
        for rank, mult in sorted(ranks.items()):
            for key, c in _fiber_census(m, n, q, l, rank).items():
                total[key] += mult * c
    else:
        raise ValueError(f"unknown census method {method!r}")
    return OrbitCensus(m, n, l, q, dict(total))


@lru_cache(maxsize=32)
def _cached_census(m: int, n: int, l: int, q: int, method: str) -> OrbitCensus:
    return count_orbits(m, n, l, q, method=method)


# -- contact loci by direct minor evaluation ------------------------------------


def _perm_sign(p: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = p[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


def _minor_order(codes: Sequence[int], n: int, r: int, ring: TruncatedRing, row_sets, col_sets, perms) -> int:
    """Least t-valuation of the r x r minors (``l + 1`` if all vanish)."""
    sub, mul, val = ring.sub, ring.mul, ring.val
    neg = sub[0]
    best = ring.l + 1
    for rows in row_sets:
        for cols in col_sets:
            det = 0
            for p, sgn in perms:
                term = 1
                for a in range(r):
                    term = mul[term][codes[rows[a] * n + cols[p[a]]]]
                    if term == 0:
                        break
                if term:
                    det = sub[det][neg[term]] if sgn > 0 else sub[det][term]
            v = val[det]
            if v < best:
                best = v
                if best == 0:
                    return 0
    return best


def count_contact(m: int, n: int, l: int, q: int, r: int, target, *, budget: Optional[int] = None) -> int:
    """Number of level-l jets whose r x r minors have t-order ``target``.

    ``target`` is an integer in 0..l or the string ``">l"`` for jets on
    which every r-minor vanishes to order beyond the level.
    """
    if not 1 <= r <= min(m, n):
        raise ValueError(f"minor size r={r} out of range for {m}x{n}")
    limit = _budget(budget)
    required = q ** (m * n * (l + 1))
    if required > limit:
        raise BudgetExceededError(required, limit)
    if target == ">l" or target == f">{l}":
        want = l + 1
    else:
        want = int(target)
        if not 0 <= want <= l:
            raise ValueError(f"target order {want} outside 0..{l}")
    ring = _ring(q, l)
    row_sets = list(combinations(range(m), r))
    col_sets = list(combinations(range(n), r))
    perms = [(p, _perm_sign(p)) for p in permutations(range(r))]
    count = 0
    for codes in product(range(ring.size), repeat=m * n):
        if _minor_order(codes, n, r, ring, row_sets, col_sets, perms) == want:
            count += 1
    return count


def contact_from_census(census: OrbitCensus, r: int, target) -> int:
    """Same count as :func:`count_contact`, summed over Smith classes."""
    l = census.l
    total = 0
    for key, c in census.counts.items():
        head = key[:r]
        if any(e is TOP for e in head) or sum(head) > l:
            if target == ">l" or target == f">{l}":
                total += c
        elif target not in (">l", f">{l}") and sum(head) == int(target):
            total += c
    return total


@dataclass(frozen=True)
class Verdict:
    passed: bool
    symbolic: object
    counted: int
    detail: str = ""

    def __bool__(self) -> bool:
        return self.passed


def verify_class(lam: OrbitIndex, m: int, n: int, q: int, *, method: str = "exhaustive") -> Verdict:
    """Compare the orbit class at L = q with the exhaustive count."""
    census = _cached_census(m, n, lam.level, q, method)
    counted = census[lam]
    symbolic = lclass_eval(class_orbit(m, n, lam), q)
    return Verdict(symbolic == counted, symbolic, counted, f"lambda={format_lambda(lam.entries)} q={q}")


# -- export -----------------------------------------------------------------------


def census_to_csv(census: OrbitCensus) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["lambda", "count"])
    for key, c in census.items():
        w.writerow([format_lambda(key), c])
    return buf.getvalue()


def census_to_json(census: OrbitCensus) -> dict:
    return {
        "shape": {"m": census.m, "n": census.n},
        "level": census.l,
        "q": census.q,
        "total": census.total(),
        "census": [
            {"lambda": [None if e is TOP else e for e in key], "count": c} for key, c in census.items()
        ],
    }


def random_invertible(m: int, q: int, l: int, rng: random.Random) -> JetMatrix:
    """Uniform random element of J_l(GL_m)(F_q)."""
    ring = _ring(q, l)
    ring0 = _ring(q, 0)
    while True:
        const = [rng.randrange(q) for _ in range(m * m)]
        if TOP not in _smith_codes(const, m, m, ring0):
            break
    codes = tuple(const[k] + q * rng.randrange(q**l) for k in range(m * m))
    return JetMatrix(m, m, q, l, codes)


def census_json_dumps(census: OrbitCensus) -> str:
    return json.dumps(census_to_json(census), sort_keys=True)
