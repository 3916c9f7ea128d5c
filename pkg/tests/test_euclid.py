"""Verdict cascade: abelianity of the Hilbert class field and Euclidean status."""

import pytest

from genuslab.biquadratic import from_radicands
from genuslab.errors import EvenRadicand, ShapeMismatch
from genuslab.euclid import (
    STATUS_EXISTS,
    STATUS_NO_NON_CYCLIC,
    STATUS_OUTSIDE,
    euclidean_verdict,
    exceptional_pattern,
    hilbert_abelian,
    index_L_over_K,
)

TABLE_FIELDS = [
    (5, 11 * 19), (5, 19 * 31), (13, 3 * 23), (37, 3 * 7), (37, 3 * 11),
    (37, 7 * 11), (37, 11 * 7),
]


def test_hilbert_abelian_examples():
    assert hilbert_abelian(from_radicands(5, 13))  # h = 1, L = K
    assert hilbert_abelian(from_radicands(3, 7))
    assert not hilbert_abelian(from_radicands(5, 209))  # h = 2 but L = K


def test_index_L_over_K():
    assert index_L_over_K(from_radicands(21, 209)) == 2
    assert index_L_over_K(from_radicands(5, 209)) == 1
    assert index_L_over_K(from_radicands(3, 7)) == 1


def test_exceptional_pattern():
    assert exceptional_pattern(from_radicands(5, 209))  # q=5, r=11, s=19
    assert exceptional_pattern(from_radicands(37, 21))  # q=37, r=3, s=7
    assert not exceptional_pattern(from_radicands(13, 15))  # q=13, rs=15, s=5
    with pytest.raises(ShapeMismatch):
        exceptional_pattern(from_radicands(5, 13))  # TwoPrimes shape


def test_verdict_exists():
    v = euclidean_verdict(from_radicands(5, 13))
    assert v.status == STATUS_EXISTS
    assert v.h_K == 1
    assert "class_number_one" in v.reasons
    v = euclidean_verdict(from_radicands(3, 5))
    assert v.status == STATUS_EXISTS
    assert v.omega == 3


def test_verdict_omega_gt_4():
    v = euclidean_verdict(from_radicands(1155, 13))
    assert v.status == STATUS_NO_NON_CYCLIC
    assert v.reasons == ("omega_gt_4",)
    assert v.h_K is None  # not computed in this branch


def test_verdict_table_fields():
    for d1, d2 in TABLE_FIELDS:
        v = euclidean_verdict(from_radicands(d1, d2))
        assert v.status == STATUS_OUTSIDE, (d1, d2)
        assert v.h_K == 2
        assert v.exceptional_pattern is True
        assert "d8_obstruction" in v.reasons


def test_verdict_json_shape():
    v = euclidean_verdict(from_radicands(5, 209))
    payload = v.to_json()
    assert list(payload.keys()) == [
        "status", "h_K", "omega", "hilbert_abelian", "exceptional_pattern", "reasons",
    ]
    assert payload["status"] == "OutsideTheorem"
    assert payload["reasons"] == ["d8_obstruction"]


def test_verdict_domain():
    K = from_radicands(3, 5).__class__(2, 5, (1, 2, 5), 4, 1600)
    with pytest.raises(EvenRadicand):
        euclidean_verdict(K)


def test_no_exists_with_large_h(shared_cache):
    """Cascade invariant on a small sweep: Exists forces h <= 2 and omega <= 4."""
    from genuslab.arith import is_squarefree

    for a in range(3, 60, 2):
        for b in range(a + 2, 60, 2):
            if not (is_squarefree(a) and is_squarefree(b)):
                continue
            try:
                K = from_radicands(a, b)
            except Exception:
                continue
            v = euclidean_verdict(K, cache=shared_cache)
            if v.status == STATUS_EXISTS:
                assert v.omega <= 4 and v.h_K <= 2
            if v.omega > 4:
                assert v.status == STATUS_NO_NON_CYCLIC
