"""Torsion index ``t(G)``: the index of the image of ``Sym^d(X*)`` in
``CH^d(G/B) = Z [pt]`` with ``d = dim G/B``.

Two independent routes: the longest divided difference ``d_{w_0}`` applied to
every degree-``d`` monomial, and iterated Chevalley multiplication.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import gcd

from .polynomial import Exps, Polynomial, count_monomials, monomials
from .rootdata import RootDatum
from .schubert import characteristic_map_via_chevalley, demazure
from .weyl import longest_element, reduced_word

log = logging.getLogger(__name__)

MONOMIAL_BUDGET = 10**6


class TorsionBudgetError(RuntimeError):
    pass


@dataclass(frozen=True)
class TorsionReport:
    torsion_index: int
    generators_examined: int
    # prime -> (monomial, d_{w0}(monomial)) with minimal p-adic valuation
    witness: dict[int, tuple[Exps, int]] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "torsion_index": self.torsion_index,
            "generators_examined": self.generators_examined,
            "witness": {
                str(p): {"monomial": list(m), "value": v} for p, (m, v) in sorted(self.witness.items())
            },
        }


def _check_budget(rd: RootDatum, budget: int) -> None:
    n = count_monomials(rd.lattice_rank, rd.num_positive_roots)
    if n > budget:
        raise TorsionBudgetError(
            f"{n} monomials of degree {rd.num_positive_roots} exceed the budget of {budget}"
        )


def _valuation(x: int, p: int) -> int:
    k = 0
    while x % p == 0:
        x //= p
        k += 1
    return k


def _prime_factors(n: int) -> list[int]:
    out, k = [], 2
    while k * k <= n:
        if n % k == 0:
            out.append(k)
            while n % k == 0:
                n //= k
        k += 1
    if n > 1:
        out.append(n)
    return out


def top_coefficient(rd: RootDatum, exps: Exps) -> int:
    """``d_{w_0}(x^exps)`` for a monomial of degree ``dim G/B``."""
    value = demazure(rd, reduced_word(longest_element(rd)), Polynomial.monomial(exps))
    return value.constant_value() if value else 0


def torsion_index(rd: RootDatum, budget: int = MONOMIAL_BUDGET) -> TorsionReport:
    _check_budget(rd, budget)
    d = rd.num_positive_roots
    g = 0
    values: list[tuple[Exps, int]] = []
    examined = 0
    for m in monomials(rd.lattice_rank, d):
        examined += 1
        v = top_coefficient(rd, m)
        if v:
            values.append((m, v))
            g = gcd(g, v)
            if g == 1:
                break
    if g == 0:
        raise ArithmeticError("characteristic map misses the top degree entirely")
    witness = {}
    for p in _prime_factors(g):
        target = _valuation(g, p)
        witness[p] = next((m, v) for m, v in values if _valuation(v, p) == target)
    log.debug("torsion index of %s is %d after %d monomials", rd.label, g, examined)
    return TorsionReport(g, examined, witness)


def torsion_index_via_chevalley(rd: RootDatum, budget: int = MONOMIAL_BUDGET) -> int:
    _check_budget(rd, budget)
    w0 = longest_element(rd)
    g = 0
    for m in monomials(rd.lattice_rank, rd.num_positive_roots):
        g = gcd(g, characteristic_map_via_chevalley(rd, m)[w0])
        if g == 1:
            break
    return g
