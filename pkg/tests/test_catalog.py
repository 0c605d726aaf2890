"""Tests for the identity registry: ordering, serialization,
determinism, a sample of hand-checked instances, and the structural
verifiers."""

import json
from fractions import Fraction

import pytest

from detkit import catalog
from detkit.catalog import (UnknownIdentityError, build_matrix, closed_form,
                            condensation_recurrence_check, get_record,
                            identification_workflow_mrr, lu_vandermonde_check,
                            ode_method_check, registry_ids,
                            verify_goulden_jackson, verify_group_determinant,
                            verify_identity, verify_izergin_korepin,
                            verify_nc_suite, verify_okada, verify_strehl_wilf,
                            verify_turnbull)
from detkit.linalg import det


def test_registry_is_populated_and_ordered():
    ids = registry_ids()
    assert len(ids) == len(set(ids)) == 76
    assert ids[0] == "vandermonde"
    assert "macmahon" in ids and "izergin-korepin" in ids


def test_unknown_identity():
    with pytest.raises(UnknownIdentityError):
        get_record("nosuch")


def test_macmahon_hand_value():
    # [PAPER] a = b = 2, n = 2 evaluates to 20 on both sides
    m = build_matrix("macmahon", 2, a=2, b=2)
    assert det(m) == 20
    assert closed_form("macmahon", 2, a=2, b=2) == 20


def test_meander_hand_value():
    # [PAPER] n = 2 determinant is q^4 - q^2; 72 at q = 3
    report = verify_identity("meander", trials=1, seed=0, max_n=2)
    assert report.overall
    from detkit.combinat import components, nc_matchings
    from detkit.linalg import MatrixR
    matchings = nc_matchings(4)
    for q in (Fraction(3), Fraction(1, 2)):
        m = MatrixR.build(len(matchings), len(matchings),
                          lambda i, j: q ** components(matchings[i],
                                                       matchings[j]))
        assert det(m) == q ** 4 - q ** 2
    assert Fraction(3) ** 4 - Fraction(3) ** 2 == 72


def test_verify_identity_deterministic():
    r1 = verify_identity("cauchy", trials=3, seed=5)
    r2 = verify_identity("cauchy", trials=3, seed=5)
    assert json.dumps(r1.to_json_dict()) == json.dumps(r2.to_json_dict())
    assert r1.overall


def test_verify_identity_max_n_clamp():
    record = get_record("vandermonde")
    report = verify_identity("vandermonde", trials=2, seed=1, max_n=100)
    assert all(t.params["n"] <= record.max_n for t in report.trials)
    report = verify_identity("vandermonde", trials=2, seed=1, max_n=0)
    assert all(t.params["n"] >= record.min_n for t in report.trials)


def test_report_serialization_schema():
    report = verify_identity("weyl-c", trials=2, seed=3)
    d = report.to_json_dict()
    assert set(d) >= {"id", "trials", "overall"}
    for t in d["trials"]:
        assert set(t) == {"params", "lhs", "rhs", "pass", "micros"}
        assert t["micros"] is None  # deterministic serialization
    json.dumps(d)  # must be JSON-clean


@pytest.mark.parametrize("identity_id", [
    "vandermonde", "cauchy", "borchardt", "macmahon", "krat1", "abel",
    "qkrat", "mrr", "hankel-bernoulli", "circulant", "zagier-maj",
    "nc-suite", "okada", "izergin-korepin",
])
def test_spot_verification(identity_id):
    report = verify_identity(identity_id, trials=2, seed=17)
    assert report.overall, report.to_json_dict()


# ---------------------------------------------------------------------------
# structural verifiers


def test_group_determinants():
    for q in (Fraction(1, 2), Fraction(-1, 3)):
        for kind in ("inv", "maj"):
            assert verify_group_determinant(kind, 3, q).overall


def test_maj_spectrum():
    report = verify_group_determinant("maj", 3, Fraction(2, 5),
                                      with_spectrum=True)
    assert report.overall


def test_nc_suite_and_okada():
    assert verify_nc_suite(3, Fraction(1, 2)).overall
    report = verify_okada(3, Fraction(1, 3))
    assert report.overall
    assert "conjecture-consistent" in report.notes


def test_turnbull_goulden_jackson_strehl_wilf():
    assert verify_turnbull(3, 4, seed=2).overall
    assert verify_goulden_jackson(3, trunc=16, seed=2).overall
    assert verify_strehl_wilf(3, trunc=16, seed=2).overall


def test_izergin_korepin():
    assert verify_izergin_korepin(3, seed=2).overall


def test_condensation_check():
    assert condensation_recurrence_check(2, 3, 4).overall


def test_ode_method_check():
    assert ode_method_check(3, 1, 2).overall


def test_lu_vandermonde_check():
    X = [Fraction(i + 1, 2) for i in range(5)]
    assert lu_vandermonde_check(5, X).overall
    with pytest.raises(ValueError):
        lu_vandermonde_check(2, [Fraction(1), Fraction(1)])


def test_identification_workflow():
    report = identification_workflow_mrr(3)
    assert report.overall
