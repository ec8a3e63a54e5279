"""Exact integer linear algebra and coefficient rings.

Everything uses Python integers, so entries never overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

Rows = list[list[int]]

UNIT_SEARCH_BUDGET = 200_000


class IntMatrix:
    """Immutable integer matrix."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable[int]], cols: int | None = None):
        data = tuple(tuple(int(x) for x in row) for row in entries)
        if cols is None:
            cols = len(data[0]) if data else 0
        if any(len(row) != cols for row in data):
            raise ValueError("ragged matrix")
        self.entries = data
        self.rows = len(data)
        self.cols = cols

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)], cols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntMatrix):
            return self.entries == other.entries and self.cols == other.cols
        if isinstance(other, (list, tuple)):
            return self.entries == tuple(tuple(r) for r in other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.cols, self.entries))

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self.entries]})"

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        tcols = list(zip(*other.entries)) if other.rows else [()] * other.cols
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in tcols] for row in self.entries],
            other.cols,
        )

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def transpose(self) -> "IntMatrix":
        return IntMatrix([[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)], self.rows)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "IntMatrix":
        return IntMatrix([[self.entries[i][j] for j in cols] for i in rows], len(cols))

    def tolist(self) -> Rows:
        return [list(r) for r in self.entries]

    def is_diagonal(self) -> bool:
        return all(x == 0 for i, row in enumerate(self.entries) for j, x in enumerate(row) if i != j)


def as_matrix(m) -> IntMatrix:
    return m if isinstance(m, IntMatrix) else IntMatrix(m)


def determinant(m) -> int:
    """Fraction-free Bareiss elimination."""
    m = as_matrix(m)
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    a = m.tolist()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def smith_normal_form(m) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return ``(U, D, V)`` with ``U M V = D``, ``U, V`` unimodular and
    ``D`` diagonal with ``D[0,0] | D[1,1] | ...`` and nonnegative entries."""
    m = as_matrix(m)
    rows, cols = m.shape
    a = m.tolist()
    u = IntMatrix.identity(rows).tolist()
    v = IntMatrix.identity(cols).tolist()

    def swap_rows(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst: int, src: int, k: int) -> None:
        # row_dst += k * row_src
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(dst: int, src: int, k: int) -> None:
        for row in a:
            row[dst] += k * row[src]
        for row in v:
            row[dst] += k * row[src]

    for t in range(min(rows, cols)):
        while True:
            nonzero = [
                (abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]
            ]
            if not nonzero:
                break
            _, i, j = min(nonzero)
            swap_rows(t, i)
            swap_cols(t, j)
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    dirty |= a[i][t] != 0
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    dirty |= a[t][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if t < rows and t < cols and a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    return IntMatrix(u, rows), IntMatrix(a, cols), IntMatrix(v, cols)


def elementary_divisors(m) -> list[int]:
    _, d, _ = smith_normal_form(m)
    return [d[i, i] for i in range(min(d.shape)) if d[i, i]]


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> Rows:
    """Row-style Hermite normal form of the lattice spanned by ``rows``.

    Zero rows are dropped; pivots are positive and entries above each pivot
    are reduced into ``[0, pivot)``.
    """
    a = [list(r) for r in rows if any(r)]
    if not a:
        return []
    ncols = len(a[0])
    out: Rows = []
    r = 0
    for col in range(ncols):
        while True:
            live = [i for i in range(r, len(a)) if a[i][col]]
            if not live:
                break
            piv = min(live, key=lambda i: (abs(a[i][col]), i))
            a[r], a[piv] = a[piv], a[r]
            done = True
            for i in range(r + 1, len(a)):
                if a[i][col]:
                    q = a[i][col] // a[r][col]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    done &= a[i][col] == 0
            if done:
                break
        if r < len(a) and a[r][col]:
            if a[r][col] < 0:
                a[r] = [-x for x in a[r]]
            for i in range(r):
                q = a[i][col] // a[r][col]
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
            r += 1
    out = [row for row in a[:r]]
    return out


def integer_kernel(m) -> list[tuple[int, ...]]:
    """A basis of ``{x in Z^cols : M x = 0}``, in Hermite normal form.

    Column operations bring ``M`` to echelon form while the same operations
    are recorded on an identity block; columns whose image is zero span the
    kernel, which is saturated.
    """
    m = as_matrix(m)
    rows, cols = m.shape
    # work with columns as lists: col j = (M e_j, e_j)
    work = [
        [m[i, j] for i in range(rows)] + [int(k == j) for k in range(cols)] for j in range(cols)
    ]
    pivot_count = 0
    for i in range(rows):
        while True:
            live = [j for j in range(pivot_count, cols) if work[j][i]]
            if not live:
                break
            piv = min(live, key=lambda j: (abs(work[j][i]), j))
            work[pivot_count], work[piv] = work[piv], work[pivot_count]
            p = work[pivot_count][i]
            done = True
            for j in range(pivot_count + 1, cols):
                if work[j][i]:
                    q = work[j][i] // p
                    work[j] = [x - q * y for x, y in zip(work[j], work[pivot_count])]
                    done &= work[j][i] == 0
            if done:
                pivot_count += 1
                break
        if pivot_count == cols:
            break
    basis = [w[rows:] for w in work[pivot_count:]]
    return [tuple(r) for r in hermite_normal_form(basis)]


def matrix_rank(m) -> int:
    return len(elementary_divisors(m))


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class CoeffRing:
    """``Z[1/S]`` for a finite set of primes ``S``, or the prime field ``F_p``."""

    kind: str = "localized"
    primes: frozenset[int] = frozenset()
    p: int | None = None

    def __post_init__(self) -> None:
        if self.kind == "localized":
            bad = sorted(q for q in self.primes if not _is_prime(q))
            if bad:
                raise ValueError(f"not prime: {bad}")
        elif self.kind == "prime_field":
            if self.p is None or not _is_prime(self.p):
                raise ValueError(f"prime field needs a prime, got {self.p}")
        else:
            raise ValueError(f"unknown coefficient ring kind {self.kind!r}")

    @classmethod
    def integers(cls, inverted: Iterable[int] = ()) -> "CoeffRing":
        return cls("localized", frozenset(int(q) for q in inverted))

    @classmethod
    def prime_field(cls, p: int) -> "CoeffRing":
        return cls("prime_field", frozenset(), int(p))

    @classmethod
    def parse_inverted(cls, text: str) -> "CoeffRing":
        """``""`` -> Z, ``"2,3"`` -> Z[1/2, 1/3]."""
        parts = [s.strip() for s in text.split(",") if s.strip()]
        try:
            return cls.integers(int(s) for s in parts)
        except ValueError as exc:
            raise ValueError(f"bad prime list {text!r}: {exc}") from None

    @property
    def label(self) -> str:
        if self.kind == "prime_field":
            return f"F_{self.p}"
        if not self.primes:
            return "Z"
        return "Z[" + ",".join(f"1/{q}" for q in sorted(self.primes)) + "]"

    def is_unit(self, x: int) -> bool:
        return is_unit(x, self)


def is_unit(x: int, ring: CoeffRing) -> bool:
    if ring.kind == "prime_field":
        return x % ring.p != 0
    if x == 0:
        return False
    x = abs(x)
    for q in ring.primes:
        while x % q == 0:
            x //= q
    return x == 1


def _frac_is_unit(x: Fraction, ring: CoeffRing) -> bool:
    # denominators are S-units by construction
    return is_unit(x.numerator, ring)


def _greedy_unit_columns(m: IntMatrix, ring: CoeffRing, order: Sequence[int]) -> list[int] | None:
    if ring.kind == "prime_field":
        p = ring.p
        a = [[x % p for x in row] for row in m.entries]
        inv = lambda x: pow(x, -1, p)  # noqa: E731
    else:
        a = [[Fraction(x) for x in row] for row in m.entries]
        inv = lambda x: 1 / x  # noqa: E731
    rows_left = list(range(m.rows))
    cols_left = list(order)
    chosen = []
    while rows_left:
        pick = None
        for r in rows_left:
            best = None
            for c in cols_left:
                x = a[r][c]
                ok = x % ring.p != 0 if ring.kind == "prime_field" else (x != 0 and _frac_is_unit(x, ring))
                if ok and (best is None or abs(x) > abs(a[r][best])):
                    best = c
            if best is not None:
                pick = (r, best)
                break
        if pick is None:
            return None
        r, c = pick
        piv_inv = inv(a[r][c])
        for r2 in rows_left:
            if r2 != r and a[r2][c]:
                f = a[r2][c] * piv_inv
                a[r2] = [x - f * y for x, y in zip(a[r2], a[r])]
                if ring.kind == "prime_field":
                    a[r2] = [x % ring.p for x in a[r2]]
        rows_left.remove(r)
        cols_left.remove(c)
        chosen.append(c)
    return sorted(chosen)


def select_unit_columns(m, ring: CoeffRing, order: Sequence[int] | None = None) -> list[int] | None:
    """Pick ``rows`` columns whose square submatrix has a unit determinant in ``ring``.

    Greedy elimination with unit pivots first (largest pivot, lowest column on
    ties, columns visited in ``order``); if that stalls, an exhaustive search
    over column subsets in lexicographic order.  Returns ``None`` if no such
    set of columns exists.
    """
    m = as_matrix(m)
    if m.rows > m.cols:
        raise ValueError("select_unit_columns needs rows <= cols")
    if m.rows == 0:
        return []
    order = list(range(m.cols)) if order is None else list(order)
    found = _greedy_unit_columns(m, ring, order)
    if found is not None:
        return found
    budget = UNIT_SEARCH_BUDGET
    for cols in combinations(sorted(order), m.rows):
        budget -= 1
        if budget < 0:
            raise RuntimeError(
                f"unit column search exceeded {UNIT_SEARCH_BUDGET} subsets"
            )
        if is_unit(determinant(m.submatrix(range(m.rows), cols)), ring):
            return list(cols)
    return None


def maximal_minors_gcd(m) -> int:
    """gcd of all maximal minors, read off the Smith form."""
    m = as_matrix(m)
    divs = elementary_divisors(m)
    if len(divs) < min(m.shape):
        return 0
    out = 1
    for d in divs:
        out *= d
    return out


def gcd_all(values: Iterable[int]) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
    return g
