"""Root data of split reductive groups.

A root datum is stored in coordinates: the character lattice X*(T) is
``Z^lattice_rank``, simple roots are integer vectors in it and simple coroots
are integer vectors in the dual lattice, paired by the dot product.

Built-in root data come in three isogeny flavours:

* ``simply_connected`` -- X* is the weight lattice, written in the basis of
  fundamental weights, so the simple coroots are the dual basis vectors.
* ``adjoint`` -- X* is the root lattice, written in the basis of simple roots.
* ``gl`` -- type A only, the ``GL_{n+1}`` conventions with roots ``e_i - e_{i+1}``.

Simple indices are 1-based throughout the public API.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Sequence

Vector = tuple[int, ...]

ROOT_BOUND = 1000

ISOGENY_ALIASES = {
    "sc": "simply_connected",
    "simply_connected": "simply_connected",
    "simply-connected": "simply_connected",
    "ad": "adjoint",
    "adjoint": "adjoint",
    "gl": "gl",
}


class RootDatumError(ValueError):
    """Raised for invalid or inconsistent root data."""


def cartan_matrix(series: str, rank: int) -> list[list[int]]:
    """Cartan matrix with entries ``C[i][j] = <alpha_i, alpha_j^vee>`` (Bourbaki numbering)."""
    series = series.upper()
    valid = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 3,
        "G": rank == 2,
        "F": rank == 4,
    }
    if series not in valid:
        raise RootDatumError(f"unknown series {series!r}; expected one of A, B, C, D, G2, F4")
    if not valid[series]:
        raise RootDatumError(f"invalid (series, rank) pair ({series}, {rank})")

    c = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def link(i: int, j: int, cij: int = -1, cji: int = -1) -> None:
        c[i][j] = cij
        c[j][i] = cji

    if series == "G":
        # alpha_1 short, alpha_2 long
        link(0, 1, -1, -3)
        return c
    if series == "F":
        link(0, 1)
        link(1, 2, -2, -1)
        link(2, 3)
        return c
    if series == "D":
        for i in range(rank - 2):
            link(i, i + 1)
        link(rank - 3, rank - 1)
        return c
    for i in range(rank - 1):
        link(i, i + 1)
    if series == "B":
        # alpha_n short
        link(rank - 2, rank - 1, -2, -1)
    elif series == "C":
        # alpha_n long
        link(rank - 2, rank - 1, -1, -2)
    return c


def parse_type(text: str) -> tuple[str, int]:
    """Split a Cartan type such as ``"A2"`` or ``"G2"`` into ``("A", 2)``."""
    text = text.strip().upper()
    if len(text) < 2 or not text[0].isalpha() or not text[1:].isdigit():
        raise RootDatumError(f"cannot parse Cartan type {text!r}")
    return text[0], int(text[1:])


def pairing(weight: Sequence[int], coweight: Sequence[int]) -> int:
    """The dual pairing between X* and its dual lattice."""
    if len(weight) != len(coweight):
        raise RootDatumError(
            f"dimension mismatch in pairing: {len(weight)} vs {len(coweight)}"
        )
    return sum(a * b for a, b in zip(weight, coweight))


def _rank(rows: Sequence[Sequence[int]]) -> int:
    m = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col] / m[rank][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


@dataclass(frozen=True)
class Root:
    """A positive root with its coroot and its coordinates in the simple roots."""

    root: Vector
    coroot: Vector
    simple_coords: Vector

    @property
    def height(self) -> int:
        return sum(self.simple_coords)


@dataclass(frozen=True)
class RootDatum:
    lattice_rank: int
    simple_roots: tuple[Vector, ...]
    simple_coroots: tuple[Vector, ...]
    label: str = ""
    cartan_type: str | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        self.validate()

    @property
    def semisimple_rank(self) -> int:
        return len(self.simple_roots)

    @cached_property
    def cartan(self) -> tuple[Vector, ...]:
        return tuple(
            tuple(pairing(a, c) for c in self.simple_coroots) for a in self.simple_roots
        )

    def validate(self) -> None:
        n, r = self.lattice_rank, len(self.simple_roots)
        if n < 1:
            raise RootDatumError("lattice_rank must be positive")
        if r > n:
            raise RootDatumError(f"semisimple rank {r} exceeds lattice_rank {n}")
        if len(self.simple_coroots) != r:
            raise RootDatumError("number of simple roots and simple coroots differ")
        for name, vecs in (("simple_roots", self.simple_roots), ("simple_coroots", self.simple_coroots)):
            for k, v in enumerate(vecs):
                if len(v) != n:
                    raise RootDatumError(f"{name}[{k}] has length {len(v)}, expected {n}")
        c = self.cartan
        for i in range(r):
            if c[i][i] != 2:
                raise RootDatumError(f"Cartan entry ({i + 1},{i + 1}) is {c[i][i]}, expected 2")
            for j in range(r):
                if i == j:
                    continue
                if c[i][j] > 0:
                    raise RootDatumError(f"Cartan entry ({i + 1},{j + 1}) is {c[i][j]} > 0")
                if (c[i][j] == 0) != (c[j][i] == 0):
                    raise RootDatumError(
                        f"Cartan entry ({i + 1},{j + 1}) is {c[i][j]} but ({j + 1},{i + 1}) is {c[j][i]}"
                    )
                if c[i][j] * c[j][i] > 3:
                    raise RootDatumError(
                        f"Cartan entries ({i + 1},{j + 1}),({j + 1},{i + 1}) give bond order "
                        f"{c[i][j] * c[j][i]} > 3"
                    )
        if self.cartan_type is not None:
            expected = cartan_matrix(*parse_type(self.cartan_type))
            for i in range(r):
                for j in range(r):
                    if c[i][j] != expected[i][j]:
                        raise RootDatumError(
                            f"Cartan entry ({i + 1},{j + 1}) is {c[i][j]}, "
                            f"type {self.cartan_type} requires {expected[i][j]}"
                        )
        if r and _rank(self.simple_roots) != r:
            raise RootDatumError("simple roots are linearly dependent")
        if r and _rank(self.simple_coroots) != r:
            raise RootDatumError("simple coroots are linearly dependent")
        # forces the finiteness check
        self.positive_roots

    def reflect(self, i: int, weight: Sequence[int]) -> Vector:
        """Apply the simple reflection ``s_i`` to a weight."""
        self._check_index(i)
        a, c = self.simple_roots[i - 1], self.simple_coroots[i - 1]
        k = pairing(weight, c)
        return tuple(x - k * y for x, y in zip(weight, a))

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.semisimple_rank:
            raise RootDatumError(f"simple index {i} out of range 1..{self.semisimple_rank}")

    @cached_property
    def positive_roots(self) -> tuple[Root, ...]:
        """Positive roots sorted by height, then by simple-root coordinates.

        Computed as the closure of the simple roots under simple reflections,
        tracked in simple-root and simple-coroot coordinates at the same time.
        """
        r = self.semisimple_rank
        c = self.cartan
        basis = [tuple(1 if k == i else 0 for k in range(r)) for i in range(r)]
        seen = {b: b for b in basis}
        frontier = list(basis)
        while frontier:
            nxt = []
            for root in frontier:
                co = seen[root]
                for i in range(r):
                    k = sum(root[j] * c[j][i] for j in range(r))
                    new_root = tuple(x - (k if m == i else 0) for m, x in enumerate(root))
                    kc = sum(co[j] * c[i][j] for j in range(r))
                    new_co = tuple(x - (kc if m == i else 0) for m, x in enumerate(co))
                    if new_root not in seen:
                        seen[new_root] = new_co
                        nxt.append(new_root)
                        if len(seen) > ROOT_BOUND:
                            raise RootDatumError(
                                f"root closure exceeds {ROOT_BOUND} roots; "
                                "the Cartan matrix is not of finite type"
                            )
            frontier = nxt
        out = []
        for coords, co in seen.items():
            if all(x >= 0 for x in coords):
                out.append(
                    Root(
                        root=self._combine(self.simple_roots, coords),
                        coroot=self._combine(self.simple_coroots, co),
                        simple_coords=coords,
                    )
                )
        out.sort(key=lambda rt: (rt.height, tuple(-x for x in rt.simple_coords)))
        return tuple(out)

    def _combine(self, vecs: Sequence[Vector], coords: Sequence[int]) -> Vector:
        return tuple(
            sum(k * v[m] for k, v in zip(coords, vecs)) for m in range(self.lattice_rank)
        )

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "lattice_rank": self.lattice_rank,
            "simple_roots": [list(v) for v in self.simple_roots],
            "simple_coroots": [list(v) for v in self.simple_coroots],
        }


def build_root_datum(series: str, rank: int, isogeny: str = "simply_connected") -> RootDatum:
    """Build the root datum of a split group of type ``series``/``rank``.

    >>> build_root_datum("A", 1, "sc").simple_roots
    ((2,),)
    >>> build_root_datum("A", 1, "adjoint").simple_roots
    ((1,),)
    """
    iso = ISOGENY_ALIASES.get(isogeny.lower())
    if iso is None:
        raise RootDatumError(
            f"unknown isogeny {isogeny!r}; expected simply_connected (sc), adjoint (ad) or gl"
        )
    series = series.upper()
    if series in ("G2", "F4"):
        series, rank = series[0], int(series[1])
    c = cartan_matrix(series, rank)
    name = f"{series}{rank}"
    if iso == "gl":
        if series != "A":
            raise RootDatumError(f"isogeny gl is only valid for series A, not {series}")
        n = rank + 1
        roots = tuple(
            tuple(1 if k == i else -1 if k == i + 1 else 0 for k in range(n)) for i in range(rank)
        )
        return RootDatum(n, roots, roots, label=f"{name} gl (GL_{n})", cartan_type=name)
    if iso == "simply_connected":
        roots = tuple(tuple(row) for row in c)
        coroots = tuple(tuple(1 if k == j else 0 for k in range(rank)) for j in range(rank))
    else:
        roots = tuple(tuple(1 if k == i else 0 for k in range(rank)) for i in range(rank))
        coroots = tuple(tuple(c[i][j] for i in range(rank)) for j in range(rank))
    return RootDatum(rank, roots, coroots, label=f"{name} {iso}", cartan_type=name)


def torus_datum(rank: int) -> RootDatum:
    """A split torus of the given rank: no roots, trivial Weyl group."""
    return RootDatum(rank, (), (), label=f"T{rank} torus")


def root_datum_from_dict(data: dict) -> RootDatum:
    missing = [k for k in ("lattice_rank", "simple_roots", "simple_coroots") if k not in data]
    if missing:
        raise RootDatumError(f"root datum description missing fields: {', '.join(missing)}")
    try:
        return RootDatum(
            lattice_rank=int(data["lattice_rank"]),
            simple_roots=tuple(tuple(int(x) for x in v) for v in data["simple_roots"]),
            simple_coroots=tuple(tuple(int(x) for x in v) for v in data["simple_coroots"]),
            label=str(data.get("label", "custom")),
        )
    except (TypeError, ValueError) as exc:
        if isinstance(exc, RootDatumError):
            raise
        raise RootDatumError(f"malformed root datum description: {exc}") from exc


def load_root_datum(path: str | Path) -> RootDatum:
    """Read a JSON root-datum description file and validate it."""
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise RootDatumError(f"{path}: not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise RootDatumError(f"{path}: expected a JSON object")
    return root_datum_from_dict(data)


def reflect(rd: RootDatum, i: int, weight: Sequence[int]) -> Vector:
    return rd.reflect(i, weight)


def positive_roots(rd: RootDatum) -> list[tuple[Vector, Vector]]:
    """``(root, coroot)`` pairs, sorted by height then by simple-root coordinates."""
    return [(rt.root, rt.coroot) for rt in rd.positive_roots]
