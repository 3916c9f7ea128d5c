"""Acceptance suite: one pass/fail line per criterion.

Each test prints `ACCEPT <n> <name>: PASS` on success; a failure raises with
the offending values.  Tolerances are pinned in the asserts, never loosened
at runtime.
"""

import math

import pytest

from genuslab.biquadratic import (
    discriminant_of,
    from_radicands,
    from_triple,
    genus_field,
    genus_number,
)
from genuslab.brauer import class_number_biquadratic
from genuslab.census import (
    coefficient_experiment,
    count_S,
    density_report,
    enumerate_triples,
    ordered_factorization_check,
    sathe_selberg_count,
)
from genuslab.euclid import euclidean_verdict
from genuslab.quadratic import (
    class_number,
    class_number_forms,
    discriminant,
    is_fundamental,
)

TABLE_ROWS = (
    (5, 11, 19), (5, 19, 11), (5, 19, 31), (5, 31, 19),
    (13, 3, 23), (13, 23, 3), (37, 3, 7), (37, 3, 11),
    (37, 7, 3), (37, 7, 11), (37, 11, 3), (37, 11, 7),
)


def _report(n, name):
    print(f"ACCEPT {n} {name}: PASS")


def test_accept_1_table_reproduction(shared_cache):
    """All 12 q / rs rows give (h1, h2, h3, h_K) = (1, 1, 4, 2) exactly."""
    for q, r, s in TABLE_ROWS:
        K = from_radicands(q, r * s)
        h1 = class_number(discriminant(q), cache=shared_cache)
        h2 = class_number(discriminant(r * s), cache=shared_cache)
        h3 = class_number(discriminant(q * r * s), cache=shared_cache)
        h_K = class_number_biquadratic(K, cache=shared_cache)
        assert (h1, h2, h3, h_K) == (1, 1, 4, 2), (q, r, s, h1, h2, h3, h_K)
    _report(1, "table_reproduction")


def test_accept_2_class_number_oracle_equivalence(shared_cache):
    """Analytic class numbers equal reduced-forms counts on both ranges."""
    for D in range(-3, -10**4 - 1, -1):
        if not is_fundamental(D):
            continue
        a = class_number(D, cache=shared_cache)
        f = class_number_forms(D)
        assert a == f, (D, a, f)
    for D in range(5, 5001):
        if not is_fundamental(D):
            continue
        a = class_number(D, cache=shared_cache)
        f = class_number_forms(D)
        assert a == f, (D, a, f)
    _report(2, "class_number_oracle_equivalence")


def test_accept_3_genus_identities():
    """genus_number * 4 = genus-field degree and conductor-discriminant,
    for every field with discriminant <= 10^7."""
    checked = 0
    for m1, m2, m3, _c, delta in enumerate_triples(10**7):
        K = from_triple(m1, m2, m3)
        assert genus_number(K) * 4 == genus_field(K).degree, K.triple
        assert discriminant_of(K) == delta, K.triple
        checked += 1
    assert checked == count_S(10**7).total
    _report(3, "genus_identities")


def test_accept_4_small_census_ground_truth():
    assert count_S(3600).total == 1
    assert count_S(4225).total == 2
    assert count_S(3599).total == 0
    _report(4, "small_census_ground_truth")


def test_accept_5_ordered_factorization_identity():
    from genuslab.arith import is_squarefree

    for M in range(1, 10**4 + 1):
        if is_squarefree(M):
            ordered_factorization_check(M)  # asserts count = 3^omega internally
    _report(5, "ordered_factorization_identity")


def test_accept_6_sathe_selberg_bracket():
    for n in (2, 3):
        exact, main, ratio = sathe_selberg_count(10**7, n)
        assert 0.5 <= ratio <= 2.0, (n, exact, main, ratio)
    _report(6, "sathe_selberg_bracket")


def test_accept_7_coefficient_experiment():
    """S(X)/(sqrt(X) log^2 X) at 10^8, 10^10, 10^12; the report must name the
    constant the data trends toward (no limit is asserted)."""
    out = coefficient_experiment([10**8, 10**10, 10**12])
    assert out["trend"] in ("7/1920", "7/768")
    for row in out["rows"]:
        assert row["ratio"] > 0
        print(
            f"  X=10^{len(str(row['X'])) - 1}: S={row['S']}, "
            f"ratio={row['ratio']:.6f}, /7_1920={row['ratio_over_7_1920']:.3f}, "
            f"/7_768={row['ratio_over_7_768']:.3f}"
        )
    print(f"  trend: toward the {out['trend']} constant")
    _report(7, "coefficient_experiment")


def test_accept_8_density_zero_trend():
    """omega <= 4 fraction in the top decade of 10^10 is below the 10^6 decade."""
    rep = density_report(10**10)
    frac = {row["decade"]: row["eligible_fraction"] for row in rep["decades"]}
    assert frac[9] < frac[6], frac
    _report(8, "density_zero_trend")


def test_accept_9_verdict_consistency(shared_cache):
    """All fields with discriminant <= 10^6, full h_K where the cascade needs it."""
    table_triples = {tuple(sorted((1, q, r * s))) for q, r, s in TABLE_ROWS}
    seen_table = 0
    for m1, m2, m3, _c, _delta in enumerate_triples(10**6):
        K = from_triple(m1, m2, m3)
        v = euclidean_verdict(K, cache=shared_cache)
        if v.omega > 4:
            assert v.status == "NoNonCyclic", K.triple
        if v.status == "Exists":
            assert v.omega <= 4 and v.h_K <= 2, K.triple
        if K.triple in table_triples:
            seen_table += 1
            assert v.status == "OutsideTheorem", K.triple
            assert v.exceptional_pattern is True, K.triple
    # table fields mostly sit above 10^6; check all twelve directly as well
    for q, r, s in TABLE_ROWS:
        v = euclidean_verdict(from_radicands(q, r * s), cache=shared_cache)
        assert v.status == "OutsideTheorem" and v.exceptional_pattern is True
    _report(9, "verdict_consistency")
