import pytest

from torsplit.intlat import CoeffRing, elementary_divisors
from torsplit.polynomial import Polynomial, count_monomials, monomials
from torsplit.rootdata import build_root_datum
from torsplit.schubert import characteristic_matrix, weyl_action
from torsplit.splitting import (
    NoSplittingBasis,
    choose_basis,
    hilbert_series_check,
    invariant_basis,
    splitting_series_identity,
    theta_matrix,
    verify_splitting,
)
from torsplit.torsion import _prime_factors, torsion_index
from torsplit.weyl import enumerate_weyl, weyl_group

from conftest import RANK3_TYPES, SMALL_TYPES, type_id

Z = CoeffRing.integers()
P = Polynomial


def test_invariant_basis_examples(sl2, pgl2):
    a2 = build_root_datum("A", 2, "sc")
    for rd in (sl2, pgl2, a2):
        assert invariant_basis(rd, 0) == [P.constant(rd.lattice_rank, 1)]
    assert invariant_basis(pgl2, 1) == []
    assert invariant_basis(pgl2, 2) == [P.parse("x1^2", 1)]
    assert invariant_basis(pgl2, -1) == []


@pytest.mark.parametrize("t", SMALL_TYPES, ids=type_id)
def test_invariant_basis_is_invariant(t):
    rd = build_root_datum(*t)
    group = weyl_group(rd)
    for m in range(5):
        for f in invariant_basis(rd, m):
            assert all(weyl_action(s, f) == f for s in group.simple)


def test_gl_invariants_are_symmetric_functions(gl3):
    # the elementary symmetric polynomials of degree 1 and 2 span
    assert invariant_basis(gl3, 1) == [P.parse("x1 + x2 + x3", 3)]
    assert len(invariant_basis(gl3, 2)) == 2


def test_choose_basis_examples(sl2, pgl2):
    b = choose_basis(sl2, Z)
    assert [str(e) for e in b.elements] == ["1", "x1"]
    assert b.degrees == (0, 1)
    with pytest.raises(NoSplittingBasis) as info:
        choose_basis(pgl2, Z)
    assert info.value.degree == 1
    assert info.value.elementary_divisors == [2]
    assert "not invertible in Z" in str(info.value)
    b = choose_basis(pgl2, CoeffRing.integers([2]))
    assert [str(e) for e in b.elements] == ["1", "x1"]


@pytest.mark.parametrize("t", SMALL_TYPES, ids=type_id)
def test_basis_degrees_are_lengths(t):
    rd = build_root_datum(*t)
    t_g = torsion_index(rd).torsion_index
    b = choose_basis(rd, CoeffRing.integers(_prime_factors(t_g)))
    assert sorted(b.degrees) == sorted(w.length for w in enumerate_weyl(rd))
    assert all(e.is_homogeneous() and e.degree == d for e, d in zip(b.elements, b.degrees))


def test_sl2_hand_check(sl2):
    report = verify_splitting(sl2, Z, 6)
    assert report.verdict
    assert all(abs(r.determinant) == 1 for r in report.records)
    # degree 3: x^3 = x^2 * x, single column
    assert theta_matrix(sl2, report.basis, 3) == [[1]]


def test_pgl2_over_half(pgl2):
    report = verify_splitting(pgl2, CoeffRing.integers([2]), 6)
    assert report.verdict
    assert report.records[1].determinant in (1, -1)


def test_pgl2_fails_over_integers(pgl2):
    report = verify_splitting(pgl2, Z, 6)
    assert not report.verdict
    assert report.failed_degree == 1
    assert report.to_dict()["verdict"] == "fail"


def test_pgl2_prime_fields(pgl2):
    assert verify_splitting(pgl2, CoeffRing.prime_field(3)).verdict
    assert not verify_splitting(pgl2, CoeffRing.prime_field(2)).verdict


def test_sl3_over_integers():
    assert verify_splitting(build_root_datum("A", 2, "sc"), Z, 6).verdict


@pytest.mark.parametrize("t", SMALL_TYPES + RANK3_TYPES[:2], ids=type_id)
def test_splits_once_torsion_inverted(t):
    rd = build_root_datum(*t)
    primes = _prime_factors(torsion_index(rd).torsion_index)
    report = verify_splitting(rd, CoeffRing.integers(primes))
    assert report.verdict, report.failure
    assert len(report.records) == 2 * rd.num_positive_roots + 1


@pytest.mark.parametrize("t", SMALL_TYPES + RANK3_TYPES, ids=type_id)
def test_failure_over_integers_sees_torsion_primes(t):
    rd = build_root_datum(*t)
    t_g = torsion_index(rd).torsion_index
    if t_g == 1:
        pytest.skip("torsion index 1")
    with pytest.raises(NoSplittingBasis) as info:
        choose_basis(rd, Z)
    k = info.value.degree
    _, matrix = characteristic_matrix(rd, k, list(monomials(rd.lattice_rank, k)))
    divisors = elementary_divisors(matrix)
    assert any(d % p == 0 for d in divisors for p in _prime_factors(t_g))


@pytest.mark.parametrize("t", [("A", 2, "sc"), ("B", 2, "adjoint"), ("G", 2, "sc"), ("A", 1, "adjoint")], ids=type_id)
@pytest.mark.parametrize("ring", [Z, CoeffRing.integers([2]), CoeffRing.integers([2, 3])], ids=lambda r: r.label)
def test_verdict_independent_of_monomial_order(t, ring):
    rd = build_root_datum(*t)
    default = verify_splitting(rd, ring)
    reversed_order = verify_splitting(rd, ring, order_key=lambda m: m)
    rotated = verify_splitting(rd, ring, order_key=lambda m: m[1:] + m[:1])
    assert default.verdict == reversed_order.verdict == rotated.verdict


@pytest.mark.parametrize("t", [("A", 2, "sc"), ("C", 2, "sc")], ids=type_id)
def test_module_structure_shadow(t):
    rd = build_root_datum(*t)
    b = choose_basis(rd, Z)
    for e, d in zip(b.elements, b.degrees):
        for f in invariant_basis(rd, 2):
            for g in invariant_basis(rd, 2):
                # (g f) e = g (f e), and g f is again invariant of degree 4
                assert (g * f) * e == g * (f * e)
                assert all(weyl_action(s, g * f) == g * f for s in weyl_group(rd).simple)
        k = d + 2
        assert len(theta_matrix(rd, b, k)) == count_monomials(rd.lattice_rank, k)


def test_series_identity_examples(sl2):
    assert splitting_series_identity(sl2, 4)
    assert [row[2] for row in hilbert_series_check(sl2, 4)] == [1] * 5
    assert splitting_series_identity(build_root_datum("A", 2, "sc"), 5)
    assert splitting_series_identity(build_root_datum("G", 2, "sc"), 8)


def test_report_dict_layout(sl2):
    doc = verify_splitting(sl2, Z, 2).to_dict()
    assert doc["degrees"][0] == {"k": 0, "rows": 1, "cols": 1, "det": 1, "unit": True, "pass": True}
    assert doc["basis"] == {"ring": "Z", "elements": ["1", "x1"], "degrees": [0, 1]}
