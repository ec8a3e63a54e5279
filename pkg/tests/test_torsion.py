import pytest

from torsplit.intlat import CoeffRing, select_unit_columns
from torsplit.polynomial import monomials
from torsplit.rootdata import build_root_datum
from torsplit.schubert import characteristic_matrix
from torsplit.torsion import (
    TorsionBudgetError,
    top_coefficient,
    torsion_index,
    torsion_index_via_chevalley,
)

from conftest import RANK3_TYPES, SMALL_TYPES, type_id


@pytest.mark.parametrize("n", [1, 2, 3])
def test_general_linear_has_torsion_index_one(n):
    # GL_2, GL_3, GL_4
    rd = build_root_datum("A", n, "gl")
    assert torsion_index(rd).torsion_index == 1


def test_rank_one_hand_values(sl2, pgl2):
    assert torsion_index(sl2).torsion_index == 1
    assert top_coefficient(sl2, (1,)) == 1
    assert torsion_index(pgl2).torsion_index == 2
    assert top_coefficient(pgl2, (1,)) == 2
    assert torsion_index_via_chevalley(sl2) == 1
    assert torsion_index_via_chevalley(pgl2) == 2


def test_pgl2_witness(pgl2):
    report = torsion_index(pgl2)
    assert report.witness == {2: ((1,), 2)}
    assert report.to_dict()["witness"] == {"2": {"monomial": [1], "value": 2}}


def test_short_circuit_counts_examined(gl3):
    report = torsion_index(gl3)
    assert 1 <= report.generators_examined <= sum(1 for _ in monomials(3, 3))
    assert report.witness == {}


def test_sl3_matches_chevalley():
    rd = build_root_datum("A", 2, "sc")
    assert torsion_index(rd).torsion_index == torsion_index_via_chevalley(rd) == 1


@pytest.mark.parametrize("t", SMALL_TYPES + RANK3_TYPES, ids=type_id)
def test_dual_route(t):
    rd = build_root_datum(*t)
    assert torsion_index(rd).torsion_index == torsion_index_via_chevalley(rd)


@pytest.mark.parametrize("t", SMALL_TYPES + RANK3_TYPES, ids=type_id)
def test_witness_realises_valuation(t):
    rd = build_root_datum(*t)
    report = torsion_index(rd)
    for p, (mono, value) in report.witness.items():
        assert top_coefficient(rd, mono) == value
        assert value % report.torsion_index == 0
        assert (value // report.torsion_index) % p != 0


@pytest.mark.parametrize("series,rank", [("A", 1), ("A", 2), ("A", 3), ("C", 2), ("C", 3)])
def test_simply_connected_unimodular(series, rank):
    rd = build_root_datum(series, rank, "sc")
    assert torsion_index(rd).torsion_index == 1
    top = rd.num_positive_roots
    cols = list(monomials(rd.lattice_rank, top))
    _, matrix = characteristic_matrix(rd, top, cols)
    assert select_unit_columns(matrix, CoeffRing.integers()) is not None


# External cross-check against published tables; the computed dual route is
# the ground truth, these only guard against a shared convention slip.
PUBLISHED = {
    ("A", 3, "adjoint"): 4,
    ("B", 2, "adjoint"): 4,
    ("B", 3, "sc"): 2,
    ("B", 3, "adjoint"): 8,
    ("C", 3, "adjoint"): 2,
    ("G", 2, "sc"): 2,
}


@pytest.mark.parametrize("t", sorted(PUBLISHED), ids=type_id)
def test_published_values(t):
    assert torsion_index(build_root_datum(*t)).torsion_index == PUBLISHED[t]


def test_budget_rejected():
    rd = build_root_datum("B", 3, "sc")
    with pytest.raises(TorsionBudgetError, match="budget of 10"):
        torsion_index(rd, budget=10)
    with pytest.raises(TorsionBudgetError):
        torsion_index_via_chevalley(rd, budget=10)


def test_torus_has_trivial_index():
    from torsplit.rootdata import torus_datum

    assert torsion_index(torus_datum(2)).torsion_index == 1


@pytest.mark.slow
def test_f4_published_value():
    assert torsion_index(build_root_datum("F", 4, "sc")).torsion_index == 6
