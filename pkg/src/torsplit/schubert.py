"""Divided differences, the characteristic map ``Sym(X*) -> CH*(G/B)`` in the
Schubert basis, and Chevalley's formula as an independent route to it.

Schubert convention: the coefficient of ``sigma_w`` in the image of a
homogeneous ``f`` is the constant ``d_{i_1} ... d_{i_k} f`` where
``w = s_{i_1} ... s_{i_k}`` is reduced.  With this convention the image of
a product of weights agrees with iterated Chevalley multiplication
``c(lambda) sigma_w = sum <lambda, beta^vee> sigma_{w s_beta}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .polynomial import Exps, Polynomial, PolynomialError
from .rootdata import RootDatum, RootDatumError
from .weyl import WeylElement, identity, reduced_word, weyl_group


class SchubertError(ValueError):
    pass


@dataclass(frozen=True)
class SchubertExpansion:
    """A homogeneous class ``sum c_w sigma_w`` in ``CH^degree(G/B)``."""

    degree: int
    coefficients: Mapping[WeylElement, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {w: c for w, c in self.coefficients.items() if c}
        for w in clean:
            if w.length != self.degree:
                raise SchubertError(
                    f"element of length {w.length} in an expansion of degree {self.degree}"
                )
        object.__setattr__(self, "coefficients", clean)

    def __getitem__(self, w: WeylElement) -> int:
        return self.coefficients.get(w, 0)

    def __bool__(self) -> bool:
        return bool(self.coefficients)

    def __add__(self, other: "SchubertExpansion") -> "SchubertExpansion":
        if other.degree != self.degree and other and self:
            raise SchubertError("cannot add expansions of different degrees")
        out = dict(self.coefficients)
        for w, c in other.coefficients.items():
            out[w] = out.get(w, 0) + c
        return SchubertExpansion(self.degree if self else other.degree, out)

    def scale(self, k: int) -> "SchubertExpansion":
        return SchubertExpansion(self.degree, {w: k * c for w, c in self.coefficients.items()})

    def items(self) -> list[tuple[WeylElement, int]]:
        return sorted(self.coefficients.items(), key=lambda t: t[0].sort_key())

    def to_dict(self) -> dict[str, int]:
        """Keys are reduced words such as ``"s1s2"``; the identity is ``"e"``."""
        return {word_label(w): c for w, c in self.items()}


def word_label(w: WeylElement) -> str:
    word = reduced_word(w)
    return "".join(f"s{i}" for i in word) if word else "e"


def _check(rd: RootDatum, f: Polynomial) -> None:
    if f.nvars != rd.lattice_rank:
        raise SchubertError(
            f"polynomial in {f.nvars} variables but lattice rank is {rd.lattice_rank}"
        )


def weyl_action(w: WeylElement, f: Polynomial) -> Polynomial:
    """``w . f``: substitute the action of ``w`` on X* into ``f``."""
    _check(w.datum, f)
    return f.substitute_linear(w.matrix)


@lru_cache(maxsize=None)
def _dd_monomial(rd: RootDatum, i: int, exps: Exps) -> Polynomial:
    f = Polynomial.monomial(exps)
    s = weyl_group(rd).simple[i - 1]
    diff = f - f.substitute_linear(s.matrix)
    try:
        return diff.divide_linear(rd.simple_roots[i - 1])
    except PolynomialError as exc:
        raise AssertionError(f"divided difference left a remainder: {exc}") from exc


def divided_difference(rd: RootDatum, i: int, f: Polynomial) -> Polynomial:
    """``(f - s_i f) / alpha_i``, by exact division."""
    try:
        rd._check_index(i)
    except RootDatumError as exc:
        raise SchubertError(str(exc)) from None
    _check(rd, f)
    out: dict[Exps, int] = {}
    for m, c in f.terms.items():
        for m2, c2 in _dd_monomial(rd, i, m).terms.items():
            out[m2] = out.get(m2, 0) + c * c2
    return Polynomial(rd.lattice_rank, out)


def demazure(rd: RootDatum, word: Sequence[int], f: Polynomial) -> Polynomial:
    """``d_{i_1} o ... o d_{i_k} (f)`` for ``word = [i_1, ..., i_k]``."""
    for i in reversed(word):
        if not f:
            break
        f = divided_difference(rd, i, f)
    return f


def _homogeneous_degree(f: Polynomial, degree: int | None) -> int:
    if not f.is_homogeneous():
        raise SchubertError(f"{f} is not homogeneous")
    if f:
        if degree is not None and degree != f.degree:
            raise SchubertError(f"{f} has degree {f.degree}, not {degree}")
        return f.degree
    return degree or 0


def characteristic_map(rd: RootDatum, f: Polynomial, degree: int | None = None) -> SchubertExpansion:
    """Image of a homogeneous polynomial in ``CH*(G/B)``, in the Schubert basis."""
    _check(rd, f)
    d = _homogeneous_degree(f, degree)
    out = {}
    for w in weyl_group(rd).of_length(d):
        value = demazure(rd, reduced_word(w), f)
        if value:
            out[w] = value.constant_value()
    return SchubertExpansion(d, out)


def chevalley_multiply(rd: RootDatum, weight: Sequence[int], x: SchubertExpansion) -> SchubertExpansion:
    """Multiply by the divisor class ``c_1(weight)`` using Chevalley's formula."""
    if len(weight) != rd.lattice_rank:
        raise SchubertError("weight has wrong dimension")
    group = weyl_group(rd)
    out: dict[WeylElement, int] = {}
    for w, c in x.coefficients.items():
        for rt, s_beta in group.reflections:
            k = sum(a * b for a, b in zip(weight, rt.coroot))
            if not k:
                continue
            v = group.mul(w, s_beta)
            if v.length == w.length + 1:
                out[v] = out.get(v, 0) + c * k
    return SchubertExpansion(x.degree + 1, out)


def unit_class(rd: RootDatum) -> SchubertExpansion:
    return SchubertExpansion(0, {identity(rd): 1})


@lru_cache(maxsize=None)
def _chevalley_monomial(rd: RootDatum, exps: Exps) -> SchubertExpansion:
    if not any(exps):
        return unit_class(rd)
    j = max(k for k, e in enumerate(exps) if e)
    prev = exps[:j] + (exps[j] - 1,) + exps[j + 1:]
    weight = tuple(int(k == j) for k in range(rd.lattice_rank))
    return chevalley_multiply(rd, weight, _chevalley_monomial(rd, prev))


def characteristic_map_via_chevalley(rd: RootDatum, monomial: Sequence[int]) -> SchubertExpansion:
    """Image of ``x^monomial`` computed as ``c(x_1)^{a_1} ... c(x_n)^{a_n} sigma_e``."""
    exps = tuple(int(e) for e in monomial)
    if len(exps) != rd.lattice_rank or min(exps, default=0) < 0:
        raise SchubertError(f"bad exponent vector {monomial!r}")
    return _chevalley_monomial(rd, exps)


def characteristic_matrix(rd: RootDatum, degree: int, columns: Iterable[Exps]) -> tuple[list[WeylElement], list[list[int]]]:
    """Rows: length-``degree`` elements; columns: images of the given monomials."""
    rows = weyl_group(rd).of_length(degree)
    cols = list(columns)
    matrix = [[0] * len(cols) for _ in rows]
    for c, m in enumerate(cols):
        image = characteristic_map(rd, Polynomial.monomial(m), degree)
        for r, w in enumerate(rows):
            matrix[r][c] = image[w]
    return rows, matrix
