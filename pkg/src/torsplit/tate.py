"""Pure Tate series: formal sums ``sum_j m_j L(j)[2j]`` recorded as ``{j: m_j}``.

Motives of classifying spaces are infinite downward, so every series carries
a ``truncation``: coefficients are known for ``j >= truncation`` and unknown
below.  ``truncation=None`` means the series is exact (finite).  Operations
propagate truncation pessimistically, and equality only compares the range
both sides know.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Mapping

from .rootdata import RootDatum
from .weyl import poincare_polynomial


class SeriesError(ArithmeticError):
    pass


def _max_trunc(a: int | None, b: int | None) -> int | None:
    if a is None:
        return b
    if b is None:
        return a
    return max(a, b)


@dataclass(frozen=True)
class TateSeries:
    coefficients: Mapping[int, int] = field(default_factory=dict)
    truncation: int | None = None

    def __post_init__(self) -> None:
        clean = {}
        for j, m in self.coefficients.items():
            if m < 0:
                raise SeriesError(f"negative multiplicity {m} at twist {j}")
            if m and (self.truncation is None or j >= self.truncation):
                clean[int(j)] = int(m)
        object.__setattr__(self, "coefficients", clean)

    @classmethod
    def unit(cls) -> "TateSeries":
        return cls({0: 1})

    @classmethod
    def zero(cls) -> "TateSeries":
        return cls({})

    @classmethod
    def from_cells(cls, dims: Iterable[int]) -> "TateSeries":
        out: dict[int, int] = {}
        for c in dims:
            out[c] = out.get(c, 0) + 1
        return cls(out)

    def __getitem__(self, j: int) -> int:
        if self.truncation is not None and j < self.truncation:
            raise KeyError(f"twist {j} is below the truncation {self.truncation}")
        return self.coefficients.get(j, 0)

    @property
    def upper_support(self) -> int | None:
        """Largest twist with a nonzero coefficient (all higher ones vanish)."""
        if self.coefficients:
            return max(self.coefficients)
        if self.truncation is not None:
            return self.truncation - 1
        return None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TateSeries):
            return NotImplemented
        lo = _max_trunc(self.truncation, other.truncation)
        keys = set(self.coefficients) | set(other.coefficients)
        return all(
            self.coefficients.get(j, 0) == other.coefficients.get(j, 0)
            for j in keys
            if lo is None or j >= lo
        )

    def __hash__(self) -> int:
        raise TypeError("TateSeries equality is truncation-aware and not hashable")

    def __add__(self, other: "TateSeries") -> "TateSeries":
        return tate_sum(self, other)

    def __mul__(self, other: "TateSeries") -> "TateSeries":
        return tate_tensor(self, other)

    def shift(self, c: int) -> "TateSeries":
        """Tensor with ``L(c)[2c]``."""
        t = None if self.truncation is None else self.truncation + c
        return TateSeries({j + c: m for j, m in self.coefficients.items()}, t)

    def truncate(self, t: int) -> "TateSeries":
        return TateSeries(self.coefficients, _max_trunc(self.truncation, t))

    def to_pairs(self) -> list[tuple[int, int]]:
        """Nonzero ``(twist, multiplicity)`` pairs, highest twist first."""
        return sorted(self.coefficients.items(), reverse=True)

    def to_dict(self) -> dict:
        return {
            "terms": [[j, m] for j, m in self.to_pairs()],
            "truncation": self.truncation,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "TateSeries":
        return cls({int(j): int(m) for j, m in data["terms"]}, data.get("truncation"))


def tate_sum(a: TateSeries, b: TateSeries) -> TateSeries:
    out = dict(a.coefficients)
    for j, m in b.coefficients.items():
        out[j] = out.get(j, 0) + m
    return TateSeries(out, _max_trunc(a.truncation, b.truncation))


def tate_tensor(a: TateSeries, b: TateSeries) -> TateSeries:
    """Convolution.  The product coefficient at ``j`` is known once every
    contributing pair is known, i.e. for ``j >= max(t_a + u_b, t_b + u_a)``."""
    ua, ub = a.upper_support, b.upper_support
    if ua is None or ub is None:
        return TateSeries.zero()
    bounds = []
    if a.truncation is not None:
        bounds.append(a.truncation + ub)
    if b.truncation is not None:
        bounds.append(b.truncation + ua)
    trunc = max(bounds) if bounds else None
    out: dict[int, int] = {}
    for i, x in a.coefficients.items():
        for k, y in b.coefficients.items():
            out[i + k] = out.get(i + k, 0) + x * y
    return TateSeries(out, trunc)


def flag_motive(rd: RootDatum) -> TateSeries:
    """Bruhat cells of ``G/B``: multiplicity of ``L(j)[2j]`` is ``#{w : l(w) = j}``."""
    return TateSeries(poincare_polynomial(rd).coeffs)


def classifying_torus_motive(rank: int, truncation: int) -> TateSeries:
    """``M^c(BT)`` for a split torus of the given rank, down to ``truncation``."""
    if rank < 1:
        raise ValueError("torus rank must be positive")
    if truncation > -rank:
        raise ValueError(f"truncation must be <= -rank = {-rank}")
    return TateSeries(
        {-k: comb(k - 1, rank - 1) for k in range(rank, -truncation + 1)}, truncation
    )


def _divide_by_flag(bt: TateSeries, rd: RootDatum) -> TateSeries:
    """Solve ``g * W(q) = bt`` for ``g`` from the top twist down.

    ``W(q)`` has constant and leading coefficient 1, so each step determines
    one new coefficient of ``g``; ``g`` is known down to ``t(bt) - dim G/B``.
    """
    wq = poincare_polynomial(rd).coeffs
    n = max(wq)
    top = bt.upper_support
    g: dict[int, int] = {}
    for j in range(top, bt.truncation - 1, -1):
        k = j - n
        value = bt[j] - sum(wq.get(m, 0) * g.get(j - m, 0) for m in range(n))
        if value < 0:
            raise SeriesError(
                f"series does not divide: coefficient {value} at twist {k}"
            )
        if value:
            g[k] = value
    return TateSeries(g, bt.truncation - n)


def classifying_group_motive(rd: RootDatum, truncation: int) -> TateSeries:
    """``M^c(BG)`` as the quotient ``M^c(BT) / M^c(G/B)``, down to ``truncation``."""
    bt = classifying_torus_motive(rd.lattice_rank, min(truncation, -rd.lattice_rank))
    return _divide_by_flag(bt, rd).truncate(truncation)


def verify_motive_splitting(rd: RootDatum, truncation: int) -> bool:
    """``M^c(BB) = M^c(BG) (x) M^c(G/B)`` coefficientwise down to ``truncation``."""
    t = min(truncation, -rd.lattice_rank)
    bt = classifying_torus_motive(rd.lattice_rank, t)
    product = tate_tensor(_divide_by_flag(bt, rd), flag_motive(rd))
    if product.truncation is None or product.truncation > t:
        return False
    return product == bt


def cellular_equivariant_motive(cells: Iterable[int], base: TateSeries) -> TateSeries:
    """Sum of ``base`` twisted by each cell dimension."""
    out = TateSeries.zero()
    first = True
    for c in cells:
        if c < 0:
            raise ValueError("cell dimensions are nonnegative")
        shifted = base.shift(c)
        out = shifted if first else tate_sum(out, shifted)
        first = False
    return out


def generator_series(degrees: Iterable[int], truncation: int) -> TateSeries:
    """``prod_i q^{-d_i} / (1 - q^{-d_i})``.

    The coefficient at twist ``-(sum(d_i) + k)`` counts monomials of degree
    ``k`` in generators of degrees ``d_i``.
    """
    out = {0: 1}
    for d in degrees:
        nxt: dict[int, int] = {}
        for j, m in out.items():
            k = j - d
            while k >= truncation:
                nxt[k] = nxt.get(k, 0) + m
                k -= d
        out = nxt
    return TateSeries(out, truncation)
