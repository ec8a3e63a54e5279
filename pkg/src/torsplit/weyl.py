"""Weyl groups as integer matrix groups acting on the character lattice."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .rootdata import RootDatum, RootDatumError

Matrix = tuple[tuple[int, ...], ...]

WEYL_BOUND = 50_000


class WeylError(ValueError):
    pass


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def _apply(m: Matrix, v: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in m)


def _identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def reflection_matrix(root: Sequence[int], coroot: Sequence[int]) -> Matrix:
    """Matrix of ``x -> x - <x, coroot> root`` on column vectors."""
    n = len(root)
    return tuple(
        tuple(int(i == j) - root[i] * coroot[j] for j in range(n)) for i in range(n)
    )


def inversion_count(rd: RootDatum, matrix: Matrix) -> int:
    negatives = _negative_roots(rd)
    return sum(1 for rt in rd.positive_roots if _apply(matrix, rt.root) in negatives)


@lru_cache(maxsize=None)
def _negative_roots(rd: RootDatum) -> frozenset:
    return frozenset(tuple(-x for x in rt.root) for rt in rd.positive_roots)


@dataclass(frozen=True)
class WeylElement:
    """An element of W, identified by its matrix on X*(T)."""

    matrix: Matrix
    length: int = field(compare=False)
    datum: RootDatum = field(compare=False, repr=False)

    def __post_init__(self) -> None:
        if __debug__ and self.length != inversion_count(self.datum, self.matrix):
            raise AssertionError("cached length disagrees with inversion count")

    def __matmul__(self, other: "WeylElement") -> "WeylElement":
        return compose(self, other)

    def act(self, weight: Sequence[int]) -> tuple[int, ...]:
        return _apply(self.matrix, weight)

    @property
    def is_identity(self) -> bool:
        return self.matrix == _identity(len(self.matrix))

    def sort_key(self) -> tuple:
        return (self.length, tuple(x for row in self.matrix for x in row))


def _element(rd: RootDatum, matrix: Matrix) -> WeylElement:
    return WeylElement(matrix, inversion_count(rd, matrix), rd)


def identity(rd: RootDatum) -> WeylElement:
    return WeylElement(_identity(rd.lattice_rank), 0, rd)


def simple_reflection(rd: RootDatum, i: int) -> WeylElement:
    try:
        rd._check_index(i)
    except RootDatumError as exc:
        raise WeylError(str(exc)) from None
    return WeylElement(
        reflection_matrix(rd.simple_roots[i - 1], rd.simple_coroots[i - 1]), 1, rd
    )


def compose(u: WeylElement, w: WeylElement) -> WeylElement:
    """The product ``u w`` (apply ``w`` first)."""
    if u.datum != w.datum:
        raise WeylError("cannot compose elements of different root data")
    return _element(u.datum, _matmul(u.matrix, w.matrix))


class WeylGroup:
    """Enumerated Weyl group with a matrix lookup table."""

    def __init__(self, rd: RootDatum, bound: int = WEYL_BOUND):
        self.datum = rd
        r = rd.semisimple_rank
        gens = [simple_reflection(rd, i).matrix for i in range(1, r + 1)]
        start = _identity(rd.lattice_rank)
        level = {start: 0}
        frontier = [start]
        depth = 0
        while frontier:
            depth += 1
            nxt = []
            for m in frontier:
                for g in gens:
                    p = _matmul(g, m)
                    if p not in level:
                        level[p] = depth
                        nxt.append(p)
                        if len(level) > bound:
                            raise WeylError(f"Weyl group enumeration exceeds {bound} elements")
            frontier = nxt
        # WeylElement.__post_init__ cross-checks the BFS level against the inversion count
        elements = [WeylElement(m, k, rd) for m, k in level.items()]
        elements.sort(key=WeylElement.sort_key)
        self.elements: list[WeylElement] = elements
        self.by_matrix: dict[Matrix, WeylElement] = {w.matrix: w for w in elements}
        self.simple = [self.by_matrix[g] for g in gens]
        self.longest = elements[-1]
        self.reflections = [
            (rt, self.by_matrix[reflection_matrix(rt.root, rt.coroot)])
            for rt in rd.positive_roots
        ]

    def __len__(self) -> int:
        return len(self.elements)

    def lookup(self, matrix: Matrix) -> WeylElement:
        return self.by_matrix[matrix]

    def mul(self, u: WeylElement, w: WeylElement) -> WeylElement:
        return self.by_matrix[_matmul(u.matrix, w.matrix)]

    def of_length(self, k: int) -> list[WeylElement]:
        return [w for w in self.elements if w.length == k]


@lru_cache(maxsize=64)
def weyl_group(rd: RootDatum) -> WeylGroup:
    return WeylGroup(rd)


def enumerate_weyl(rd: RootDatum) -> list[WeylElement]:
    """All elements of W ordered by length, then by matrix entries."""
    return list(weyl_group(rd).elements)


def longest_element(rd: RootDatum) -> WeylElement:
    return weyl_group(rd).longest


@lru_cache(maxsize=None)
def _reduced_word(rd: RootDatum, matrix: Matrix) -> tuple[int, ...]:
    group = weyl_group(rd)
    word = []
    cur = group.lookup(matrix)
    while cur.length:
        for i, s in enumerate(group.simple, start=1):
            nxt = group.mul(s, cur)
            if nxt.length < cur.length:
                word.append(i)
                cur = nxt
                break
    return tuple(word)


def reduced_word(w: WeylElement) -> list[int]:
    """Reduced word ``[i_1, ..., i_k]`` with ``w = s_{i_1} ... s_{i_k}``.

    Each letter is the smallest left descent of what remains.
    """
    # keyed by datum too: equal matrices can occur in different root data
    return list(_reduced_word(w.datum, w.matrix))


def word_to_element(rd: RootDatum, word: Iterable[int]) -> WeylElement:
    m = _identity(rd.lattice_rank)
    for i in word:
        m = _matmul(m, simple_reflection(rd, i).matrix)
    return _element(rd, m)


class LaurentPoly:
    """Finitely supported integer Laurent polynomial in one variable ``q``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v}

    @classmethod
    def q_integer(cls, d: int) -> "LaurentPoly":
        """``1 + q + ... + q^(d-1)``."""
        return cls({k: 1 for k in range(d)})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(sorted(self.coeffs.items()))})"

    def __getitem__(self, k: int) -> int:
        return self.coeffs.get(k, 0)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[int, int] = {}
        for a, x in self.coeffs.items():
            for b, y in other.coeffs.items():
                out[a + b] = out.get(a + b, 0) + x * y
        return LaurentPoly(out)

    @property
    def degree(self) -> int:
        return max(self.coeffs) if self.coeffs else -1

    @property
    def low_degree(self) -> int:
        return min(self.coeffs) if self.coeffs else 0

    def is_palindromic(self) -> bool:
        lo, hi = self.low_degree, self.degree
        return all(self[lo + k] == self[hi - k] for k in range(hi - lo + 1))

    def divmod(self, other: "LaurentPoly") -> tuple["LaurentPoly", "LaurentPoly"]:
        """Long division by a polynomial with leading coefficient +-1."""
        if not other.coeffs:
            raise ZeroDivisionError("division by zero polynomial")
        lead_deg = other.degree
        lead = other[lead_deg]
        if lead not in (1, -1):
            raise WeylError("divisor must have unit leading coefficient")
        rem = dict(self.coeffs)
        quo: dict[int, int] = {}
        while rem and max(rem) >= lead_deg:
            top = max(rem)
            c = rem[top] * lead
            shift = top - lead_deg
            quo[shift] = c
            for k, v in other.coeffs.items():
                rem[k + shift] = rem.get(k + shift, 0) - c * v
                if rem[k + shift] == 0:
                    del rem[k + shift]
        return LaurentPoly(quo), LaurentPoly(rem)

    def to_list(self) -> list[int]:
        return [self[k] for k in range(self.low_degree, self.degree + 1)]


def poincare_polynomial(rd: RootDatum) -> LaurentPoly:
    out: dict[int, int] = {}
    for w in weyl_group(rd).elements:
        out[w.length] = out.get(w.length, 0) + 1
    return LaurentPoly(out)


def fundamental_degrees(rd: RootDatum) -> list[int]:
    """Degrees ``d_i`` with ``W(q) = prod [d_i]_q``, recovered by exact division.

    The largest ``d`` for which ``[d]_q`` divides ``W(q)`` is always a degree,
    so peeling off the largest divisor first is safe.
    """
    poly = poincare_polynomial(rd)
    degrees = []
    while poly.degree > 0:
        for d in range(poly.degree + 1, 1, -1):
            q, r = poly.divmod(LaurentPoly.q_integer(d))
            if not r.coeffs:
                degrees.append(d)
                poly = q
                break
        else:
            raise WeylError(f"W(q) does not factor into q-integers: {poly!r}")
    if poly != LaurentPoly({0: 1}):
        raise WeylError(f"W(q) does not factor into q-integers (leftover {poly!r})")
    if len(degrees) != rd.semisimple_rank:
        raise WeylError(
            f"found {len(degrees)} degrees for semisimple rank {rd.semisimple_rank}"
        )
    return sorted(degrees)


def all_reduced_words(w: WeylElement) -> list[list[int]]:
    """Every reduced word of ``w``, in lexicographic order."""
    group = weyl_group(w.datum)
    memo: dict[Matrix, list[tuple[int, ...]]] = {}

    def words(cur: WeylElement) -> list[tuple[int, ...]]:
        if cur.length == 0:
            return [()]
        if cur.matrix not in memo:
            out = []
            for i, s in enumerate(group.simple, start=1):
                nxt = group.mul(s, cur)
                if nxt.length < cur.length:
                    out.extend((i,) + rest for rest in words(nxt))
            memo[cur.matrix] = out
        return memo[cur.matrix]

    return [list(t) for t in sorted(words(w))]
