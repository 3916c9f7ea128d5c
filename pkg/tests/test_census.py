"""Census: enumeration, dedup, sieve counts, constants, density."""

import json
import math

import pytest
import sympy

from genuslab.census import (
    CensusReport,
    coefficient_experiment,
    count_S,
    count_S_by_genus,
    density_report,
    enumerate_triples,
    euler_constant,
    odd_squarefree_table,
    ordered_factorization_check,
    sathe_selberg_count,
)
from genuslab.errors import NotSquarefree


def test_small_census_ground_truth():
    assert count_S(3600).total == 1
    assert count_S(4225).total == 2
    assert count_S(3599).total == 0


def test_first_fields():
    triples = [(m1, m2, m3) for m1, m2, m3, _, _ in enumerate_triples(4225)]
    assert triples == [(1, 3, 5), (1, 5, 13)]


def test_by_genus_partition():
    r = count_S(10**7)
    assert r.total == sum(r.by_omega.values())
    assert sum(r.by_genus.values()) == r.total
    for n in range(0, 6):
        assert count_S_by_genus(10**7, n) == r.by_omega.get(n + 2, 0)
    assert count_S_by_genus(4225, 0) == 1
    assert count_S_by_genus(4225, 1) == 1


def test_dedup_against_ordered_enumeration():
    """Ordered triples counted with multiplicity 6 reproduce the census."""
    X = 10**6
    s = math.isqrt(X)
    squarefree, _ = odd_squarefree_table(s)
    osf = [m for m in range(1, s + 1, 2) if squarefree[m]]
    ordered = 0
    for m1 in osf:
        for m2 in osf:
            if m2 == m1 and m1 != 1:
                continue
            if math.gcd(m1, m2) != 1:
                continue
            if m1 * m2 > s:
                break
            for m3 in osf:
                if m3 in (m1, m2) and m3 != 1:
                    continue
                if math.gcd(m3, m1 * m2) != 1:
                    continue
                M = m1 * m2 * m3
                if M > s:
                    break
                if sorted((m1, m2, m3))[1] == 1:
                    continue  # two unit entries
                c = 1 if m1 % 4 == m2 % 4 == m3 % 4 else 4
                if c * M <= s:
                    ordered += 1
    assert ordered == 6 * count_S(X).total


def test_enumerated_fields_pass_delegated_checks():
    from genuslab.biquadratic import discriminant_of, from_triple, genus_number

    for m1, m2, m3, c, delta in enumerate_triples(10**6):
        K = from_triple(m1, m2, m3)
        assert K.c == c and K.discriminant == delta
        assert discriminant_of(K) == delta  # conductor-discriminant identity
        genus_number(K)  # raises on genus-rank mismatch


def test_checkpoint_resume(tmp_path):
    path = str(tmp_path / "census.ckpt")
    full = count_S(10**8)
    partial = {"X": 10**8, "last_m1": 1, "total": 0, "by_omega": {}}
    om = odd_squarefree_table(math.isqrt(10**8))[1]
    for m1, m2, m3, c, _ in enumerate_triples(10**8):
        if m1 > 1:
            break
        w = int(om[m1] + om[m2] + om[m3]) + (1 if c == 4 else 0)
        partial["total"] += 1
        w = str(w)
        partial["by_omega"][w] = partial["by_omega"].get(w, 0) + 1
    with open(path, "w") as fh:
        json.dump(partial, fh)
    resumed = count_S(10**8, checkpoint_path=path)
    assert resumed.total == full.total
    assert resumed.by_omega == full.by_omega


def test_sathe_selberg_small():
    assert sathe_selberg_count(100, 2)[0] == 30
    assert sathe_selberg_count(100, 1)[0] == 25
    with pytest.raises(ValueError):
        sathe_selberg_count(50, 1)


def test_sathe_selberg_against_factorization_scan():
    N = 10**5
    direct = {}
    for m in range(2, N + 1):
        fac = sympy.factorint(m)
        if all(e == 1 for e in fac.values()):
            n = len(fac)
            direct[n] = direct.get(n, 0) + 1
    for n in sorted(direct):
        assert sathe_selberg_count(N, n)[0] == direct[n], n


def test_euler_constant_single_factor():
    # only p = 3 contributes below 5: (2/3)^3 * 2 = 16/27
    est = euler_constant(4)
    assert abs(est.truncated_product - 16 / 27) < 1e-12


def test_euler_constant_monotone_and_stable():
    e1 = euler_constant(10**4)
    e2 = euler_constant(2 * 10**4)
    assert e2.truncated_product <= e1.truncated_product
    assert e1.truncated_product - e2.truncated_product < e1.tail_bound
    assert e1.candidate_A["7/768"] / e1.candidate_A["7/1920"] == pytest.approx(2.5)


def test_ordered_factorization_check():
    assert ordered_factorization_check(1) == 1
    assert ordered_factorization_check(15) == 9
    assert ordered_factorization_check(105) == 27
    with pytest.raises(NotSquarefree):
        ordered_factorization_check(12)


def test_ordered_factorization_sweep():
    from genuslab.arith import factor_squarefree, is_squarefree

    for M in range(1, 2000):
        if is_squarefree(M):
            assert ordered_factorization_check(M) == 3 ** factor_squarefree(M).omega


def test_coefficient_experiment_shape():
    out = coefficient_experiment([10**5, 10**6, 10**7])
    assert [row["X"] for row in out["rows"]] == [10**5, 10**6, 10**7]
    assert out["trend"] in ("7/1920", "7/768")
    for row in out["rows"]:
        assert row["ratio"] > 0


def test_density_report_partition():
    rep = density_report(10**8)
    for row in rep["decades"]:
        assert sum(row["by_omega"].values()) == row["total"]
        assert 0 <= row["eligible_fraction"] <= 1
        # eligible means omega <= 4, i.e. genus number <= 4
        assert row["eligible"] == sum(
            n for w, n in row["by_omega"].items() if w <= 4
        )


def test_report_invariants():
    r = count_S(10**8)
    assert isinstance(r, CensusReport)
    assert r.euclid_eligible == sum(n for w, n in r.by_omega.items() if w <= 4)
    assert r.X == 10**8
    payload = r.to_json()
    assert payload["total"] == r.total
