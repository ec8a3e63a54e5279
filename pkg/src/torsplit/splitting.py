"""Chow-level splitting ``Sym(X*) (x) L  ~=  Sym(X*)^W (x) L  (x)  CH*(G/B)``.

Homogeneous monomials ``e_1..e_n`` whose Schubert images form a basis of
``CH*(G/B) (x) L`` are chosen degree by degree; then for each degree ``k`` the
map ``(f_i) -> sum f_i e_i`` from ``sum_i Sym^{k-d_i}(X*)^W`` to ``Sym^k(X*)``
is written as an integer matrix and its determinant tested for
invertibility in the coefficient ring ``L``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Sequence

from .intlat import CoeffRing, determinant, elementary_divisors, integer_kernel, is_unit, select_unit_columns
from .polynomial import Exps, Polynomial, count_monomials, monomials
from .rootdata import RootDatum
from .schubert import characteristic_matrix
from .weyl import poincare_polynomial, weyl_group


class NoSplittingBasis(ArithmeticError):
    """No monomial basis exists in some degree: ``t(G)`` is not invertible in the ring."""

    def __init__(self, degree: int, ring: CoeffRing, divisors: list[int]):
        self.degree = degree
        self.ring = ring
        self.elementary_divisors = divisors
        super().__init__(
            f"t(G) not invertible in {ring.label}: no basis of CH^{degree}(G/B) "
            f"among monomial images (elementary divisors {divisors})"
        )


@dataclass(frozen=True)
class SplittingBasis:
    elements: tuple[Polynomial, ...]
    degrees: tuple[int, ...]
    coefficient_ring: CoeffRing

    def to_dict(self) -> dict:
        return {
            "ring": self.coefficient_ring.label,
            "elements": [str(e) for e in self.elements],
            "degrees": list(self.degrees),
        }


@dataclass(frozen=True)
class DegreeRecord:
    degree: int
    rows: int
    cols: int
    determinant: int | None
    unit: bool

    @property
    def passed(self) -> bool:
        return self.rows == self.cols and self.unit

    def to_dict(self) -> dict:
        return {
            "k": self.degree,
            "rows": self.rows,
            "cols": self.cols,
            "det": self.determinant,
            "unit": self.unit,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class SplittingReport:
    records: tuple[DegreeRecord, ...]
    basis: SplittingBasis | None = None
    failure: str | None = None
    failed_degree: int | None = field(default=None)

    @property
    def verdict(self) -> bool:
        return self.failure is None and all(r.passed for r in self.records)

    def to_dict(self) -> dict:
        return {
            "verdict": "pass" if self.verdict else "fail",
            "failure": self.failure,
            "failed_degree": self.failed_degree,
            "basis": self.basis.to_dict() if self.basis else None,
            "degrees": [r.to_dict() for r in self.records],
        }


@lru_cache(maxsize=None)
def _invariant_basis(rd: RootDatum, m: int) -> tuple[Polynomial, ...]:
    n = rd.lattice_rank
    basis = list(monomials(n, m))
    index = {b: k for k, b in enumerate(basis)}
    rows: list[list[int]] = []
    for s in weyl_group(rd).simple:
        images = [Polynomial.monomial(b).substitute_linear(s.matrix) - Polynomial.monomial(b) for b in basis]
        block = [[0] * len(basis) for _ in basis]
        for col, img in enumerate(images):
            for mono, c in img.terms.items():
                block[index[mono]][col] = c
        rows.extend(block)
    kernel = integer_kernel(rows) if rows else [tuple(int(i == j) for j in range(len(basis))) for i in range(len(basis))]
    return tuple(Polynomial(n, {basis[k]: c for k, c in enumerate(vec) if c}) for vec in kernel)


def invariant_basis(rd: RootDatum, m: int) -> list[Polynomial]:
    """A Z-basis of the W-invariant polynomials of degree ``m``."""
    if m < 0:
        return []
    return list(_invariant_basis(rd, m))


def choose_basis(
    rd: RootDatum,
    ring: CoeffRing,
    order_key: Callable[[Exps], object] | None = None,
) -> SplittingBasis:
    """Monomials whose Schubert images form a ``ring``-basis of ``CH*(G/B)``.

    ``order_key`` reorders candidate monomials in each degree; the default is
    decreasing graded-lex.  Raises :class:`NoSplittingBasis` at the first
    degree where no basis exists.
    """
    elements: list[Polynomial] = []
    degrees: list[int] = []
    for k in range(rd.num_positive_roots + 1):
        cols = list(monomials(rd.lattice_rank, k))
        if order_key is not None:
            cols.sort(key=order_key)
        _, matrix = characteristic_matrix(rd, k, cols)
        chosen = select_unit_columns(matrix, ring)
        if chosen is None:
            raise NoSplittingBasis(k, ring, elementary_divisors(matrix))
        for c in chosen:
            elements.append(Polynomial.monomial(cols[c]))
            degrees.append(k)
    return SplittingBasis(tuple(elements), tuple(degrees), ring)


def theta_matrix(rd: RootDatum, basis: SplittingBasis, k: int) -> list[list[int]]:
    """Matrix of ``(f_i) -> sum f_i e_i`` in degree ``k``, in monomial coordinates.

    Columns run over pairs ``(i, f)`` with ``f`` in the invariant basis of
    degree ``k - d_i``; rows over monomials of degree ``k``.
    """
    rows = list(monomials(rd.lattice_rank, k))
    index = {m: r for r, m in enumerate(rows)}
    columns = []
    for e, d in zip(basis.elements, basis.degrees):
        for f in invariant_basis(rd, k - d):
            product = f * e
            col = [0] * len(rows)
            for mono, c in product.terms.items():
                col[index[mono]] = c
            columns.append(col)
    return [[col[r] for col in columns] for r in range(len(rows))]


def verify_splitting(
    rd: RootDatum,
    ring: CoeffRing,
    cutoff: int | None = None,
    order_key: Callable[[Exps], object] | None = None,
) -> SplittingReport:
    """Check degree by degree, up to ``cutoff`` (default ``2 dim G/B``), that the
    splitting map is square with a unit determinant in ``ring``."""
    if cutoff is None:
        cutoff = 2 * rd.num_positive_roots
    try:
        basis = choose_basis(rd, ring, order_key)
    except NoSplittingBasis as exc:
        return SplittingReport((), None, str(exc), exc.degree)
    records = []
    for k in range(cutoff + 1):
        matrix = theta_matrix(rd, basis, k)
        nrows = count_monomials(rd.lattice_rank, k)
        ncols = len(matrix[0]) if matrix else 0
        if nrows != ncols:
            records.append(DegreeRecord(k, nrows, ncols, None, False))
            continue
        det = determinant(matrix)
        if ring.kind == "prime_field":
            det %= ring.p
        records.append(DegreeRecord(k, nrows, ncols, det, is_unit(det, ring)))
    return SplittingReport(tuple(records), basis)


def hilbert_series_check(rd: RootDatum, cutoff: int) -> list[tuple[int, int, int]]:
    """Per degree: ``(k, dim Sym^k, sum_w dim Sym^{k - l(w)}(X*)^W)``."""
    wq = poincare_polynomial(rd)
    out = []
    for k in range(cutoff + 1):
        rhs = sum(c * len(invariant_basis(rd, k - j)) for j, c in wq.coeffs.items())
        out.append((k, count_monomials(rd.lattice_rank, k), rhs))
    return out


def splitting_series_identity(rd: RootDatum, cutoff: int) -> bool:
    return all(lhs == rhs for _, lhs, rhs in hilbert_series_check(rd, cutoff))
