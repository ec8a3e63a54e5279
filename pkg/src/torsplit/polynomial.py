"""Sparse integer polynomials on the character lattice, ``Sym(X*) = Z[x_1..x_n]``.

Variable ``x_j`` is the j-th basis vector of X*(T).  Monomials are exponent
tuples; the monomial order is graded lexicographic with ``x_1 > x_2 > ...``.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping, Sequence

Exps = tuple[int, ...]


class PolynomialError(ValueError):
    pass


def grlex_key(m: Exps) -> tuple:
    return (sum(m), m)


def monomials(nvars: int, degree: int) -> Iterator[Exps]:
    """All exponent vectors of the given degree, in decreasing graded-lex order."""
    if nvars == 0:
        if degree == 0:
            yield ()
        return
    if nvars == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in monomials(nvars - 1, degree - first):
            yield (first,) + rest


def count_monomials(nvars: int, degree: int) -> int:
    from math import comb

    return comb(degree + nvars - 1, nvars - 1) if degree >= 0 else 0


class Polynomial:
    """Immutable sparse polynomial with integer coefficients."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exps, int] | None = None):
        self.nvars = nvars
        clean = {}
        for m, c in (terms or {}).items():
            if c:
                if len(m) != nvars:
                    raise PolynomialError(f"exponent {m} has wrong length for {nvars} variables")
                clean[tuple(m)] = c
        self.terms: dict[Exps, int] = clean
        self._hash = None

    # constructors

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c: int) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: int = 1) -> "Polynomial":
        return cls(len(exps), {tuple(exps): coeff})

    @classmethod
    def variable(cls, nvars: int, j: int) -> "Polynomial":
        """The 0-based variable ``x_{j+1}``."""
        return cls.monomial(tuple(int(k == j) for k in range(nvars)))

    @classmethod
    def linear(cls, coeffs: Sequence[int]) -> "Polynomial":
        """Degree-1 polynomial of a weight: ``sum c_j x_j``."""
        n = len(coeffs)
        return cls(n, {tuple(int(k == j) for k in range(n)): c for j, c in enumerate(coeffs)})

    # protocol

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self == Polynomial.constant(self.nvars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"Polynomial({self.nvars}, {self.to_str()!r})"

    def __str__(self) -> str:
        return self.to_str()

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, int):
            return Polynomial.constant(self.nvars, other)
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise PolynomialError(
                    f"variable count mismatch: {self.nvars} vs {other.nvars}"
                )
            return other
        return NotImplemented

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, int):
            return Polynomial(self.nvars, {m: c * other for m, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exps, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        out = Polynomial.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # queries

    def items(self) -> list[tuple[Exps, int]]:
        """Terms in decreasing graded-lex order."""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def coefficient(self, exps: Sequence[int]) -> int:
        return self.terms.get(tuple(exps), 0)

    @property
    def degree(self) -> int:
        """Total degree; ``-1`` for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self.terms)

    def constant_value(self) -> int:
        if not self.is_constant():
            raise PolynomialError(f"{self} is not constant")
        return self.terms.get((0,) * self.nvars, 0)

    # linear algebra on variables

    def substitute_linear(self, matrix: Sequence[Sequence[int]]) -> "Polynomial":
        """Substitute ``x_j -> sum_r matrix[r][j] x_r`` (the matrix acts on X*)."""
        n = self.nvars
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise PolynomialError("substitution matrix has wrong shape")
        images = [Polynomial.linear([matrix[r][j] for r in range(n)]) for j in range(n)]
        powers: dict[tuple[int, int], Polynomial] = {}

        def power(j: int, k: int) -> Polynomial:
            if (j, k) not in powers:
                powers[(j, k)] = images[j] ** k
            return powers[(j, k)]

        out = Polynomial.zero(n)
        for m, c in self.terms.items():
            term = Polynomial.constant(n, c)
            for j, k in enumerate(m):
                if k:
                    term = term * power(j, k)
            out = out + term
        return out

    def divide_linear(self, form: Sequence[int]) -> "Polynomial":
        """Exact quotient by the linear form ``sum form[j] x_j``.

        Long division on graded-lex leading terms; raises if a remainder
        would be left over or a quotient coefficient would not be integral.
        """
        lead = next((j for j, a in enumerate(form) if a), None)
        if lead is None:
            raise ZeroDivisionError("division by the zero linear form")
        a = form[lead]
        rem = dict(self.terms)
        quo: dict[Exps, int] = {}
        while rem:
            m = max(rem, key=grlex_key)
            c = rem[m]
            if m[lead] == 0 or c % a:
                raise PolynomialError(
                    f"{self} is not divisible by the linear form {tuple(form)}"
                )
            q = c // a
            qm = m[:lead] + (m[lead] - 1,) + m[lead + 1:]
            quo[qm] = quo.get(qm, 0) + q
            for j, b in enumerate(form):
                if b:
                    t = qm[:j] + (qm[j] + 1,) + qm[j + 1:]
                    v = rem.get(t, 0) - q * b
                    if v:
                        rem[t] = v
                    else:
                        rem.pop(t, None)
        return Polynomial(self.nvars, quo)

    # text form

    def to_str(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.items():
            factors = [
                f"x{j + 1}" if k == 1 else f"x{j + 1}^{k}" for j, k in enumerate(m) if k
            ]
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(c))] + factors)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    @classmethod
    def parse(cls, text: str, nvars: int) -> "Polynomial":
        """Parse ``c*x1^a1*...*xn^an + ...`` (whitespace insensitive)."""
        s = re.sub(r"\s+", "", text)
        if not s:
            raise PolynomialError("empty polynomial")
        if s[0] not in "+-":
            s = "+" + s
        out = Polynomial.zero(nvars)
        pos = 0
        term_re = re.compile(r"([+-])([^+-]+)")
        for match in term_re.finditer(s):
            if match.start() != pos:
                raise PolynomialError(f"cannot parse polynomial {text!r}")
            pos = match.end()
            sign = -1 if match.group(1) == "-" else 1
            coeff = sign
            exps = [0] * nvars
            for factor in match.group(2).split("*"):
                if re.fullmatch(r"\d+", factor):
                    coeff *= int(factor)
                    continue
                fm = re.fullmatch(r"x(\d+)(?:\^(\d+))?", factor)
                if not fm:
                    raise PolynomialError(f"bad factor {factor!r} in {text!r}")
                j = int(fm.group(1))
                if not 1 <= j <= nvars:
                    raise PolynomialError(f"variable x{j} out of range 1..{nvars}")
                exps[j - 1] += int(fm.group(2) or 1)
            out = out + Polynomial(nvars, {tuple(exps): coeff})
        if pos != len(s):
            raise PolynomialError(f"cannot parse polynomial {text!r}")
        return out


def monomial_str(exps: Iterable[int]) -> str:
    return Polynomial.monomial(tuple(exps)).to_str()
