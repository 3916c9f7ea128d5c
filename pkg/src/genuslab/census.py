"""Census of odd biquadratic fields by discriminant bound.

Fields are enumerated as canonical coprime triples (m1, m2, m3) of odd
squarefree integers with at most one entry 1; the discriminant is
c^2 (m1 m2 m3)^2 with c = 1 when the entries agree mod 4 and c = 4
otherwise.  Also: squarefree-with-k-prime-factors counts, the odd Euler
product constant, the leading-coefficient experiment, and the density
report over omega classes.
"""

import json
import math
import os
import time
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .arith import factor_squarefree

EULER_PRODUCT_CANDIDATES = ("7/1920", "7/768")


# ---------------------------------------------------------------------------
# sieves


def odd_squarefree_table(limit):
    """(squarefree, omega) numpy arrays indexed 0..limit."""
    squarefree = np.ones(limit + 1, dtype=bool)
    omega = np.zeros(limit + 1, dtype=np.int8)
    squarefree[0] = False
    for p in range(2, limit + 1):
        if omega[p] == 0:
            omega[p::p] += 1
            if p * p <= limit:
                squarefree[p * p :: p * p] = False
    return squarefree, omega


def squarefree_omega_sieve(limit):
    """(squarefree, omega) over all primes, for Sathe-Selberg style counts."""
    return odd_squarefree_table(limit)


# ---------------------------------------------------------------------------
# enumeration


def enumerate_triples(X, checkpoint=None):
    """Yield (m1, m2, m3, c, delta) for every field with discriminant <= X.

    Canonical order: m1 < m2 < m3 with m1 possibly 1.  The cutoff is
    m1 m2 m3 <= sqrt(X)/c, applied per residue pattern.
    """
    s = math.isqrt(X)
    if s < 15:
        return
    squarefree, _ = odd_squarefree_table(s)
    osf = [int(m) for m in np.flatnonzero(squarefree) if m % 2]  # odd squarefree, incl 1
    s4 = s // 4
    start_m1 = -1
    if checkpoint is not None:
        start_m1 = checkpoint
    for m1 in osf:
        if m1 * (m1 + 2) * (m1 + 4) > s and m1 > 1:
            break
        if m1 <= start_m1:
            continue
        r1 = m1 % 4
        for m2 in osf:
            if m2 <= m1 or m2 == 1:
                continue
            if m1 * m2 * (m2 + 2) > s:
                break
            if math.gcd(m1, m2) != 1:
                continue
            r2 = m2 % 4
            same12 = r1 == r2
            bound = s // (m1 * m2)
            for m3 in osf:
                if m3 <= m2:
                    continue
                if m3 > bound:
                    break
                if math.gcd(m3, m1 * m2) != 1:
                    continue
                M = m1 * m2 * m3
                if same12 and m3 % 4 == r1:
                    c = 1
                else:
                    c = 4
                    if M > s4:
                        continue
                yield m1, m2, m3, c, c * c * M * M


@dataclass
class CensusReport:
    """Aggregate counts of a census run up to discriminant bound X."""

    X: int
    total: int = 0
    by_omega: dict = field(default_factory=dict)
    timing: float = 0.0

    @property
    def by_genus(self):
        return {1 << (w - 2): n for w, n in sorted(self.by_omega.items())}

    @property
    def euclid_eligible(self):
        return sum(n for w, n in self.by_omega.items() if w <= 4)

    @property
    def eligible_fraction(self):
        return self.euclid_eligible / self.total if self.total else 0.0

    def to_json(self):
        return {
            "X": self.X,
            "total": self.total,
            "by_omega": {str(k): v for k, v in sorted(self.by_omega.items())},
            "by_genus": {str(k): v for k, v in self.by_genus.items()},
            "euclid_eligible": self.euclid_eligible,
            "eligible_fraction": self.eligible_fraction,
            "timing": self.timing,
        }


def count_S(X, checkpoint_path=None):
    """Exact census up to discriminant X, with optional resumable checkpoint."""
    t0 = time.monotonic()
    report = CensusReport(X)
    last_m1 = None
    if checkpoint_path is not None and os.path.exists(checkpoint_path):
        with open(checkpoint_path) as fh:
            state = json.load(fh)
        if state.get("X") == X:
            last_m1 = state["last_m1"]
            report.total = state["total"]
            report.by_omega = {int(k): v for k, v in state["by_omega"].items()}
    s = math.isqrt(X)
    omega_tab = odd_squarefree_table(s)[1] if s >= 15 else None
    current_m1 = None
    for m1, m2, m3, c, _delta in enumerate_triples(X, checkpoint=last_m1):
        if checkpoint_path is not None and m1 != current_m1:
            if current_m1 is not None:
                _write_checkpoint(checkpoint_path, X, current_m1, report)
            current_m1 = m1
        w = int(omega_tab[m1] + omega_tab[m2] + omega_tab[m3]) + (1 if c == 4 else 0)
        report.total += 1
        report.by_omega[w] = report.by_omega.get(w, 0) + 1
    if checkpoint_path is not None and current_m1 is not None:
        _write_checkpoint(checkpoint_path, X, current_m1, report)
    report.timing = time.monotonic() - t0
    return report


def _write_checkpoint(path, X, last_m1, report):
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(
            {
                "X": X,
                "last_m1": last_m1,
                "total": report.total,
                "by_omega": {str(k): v for k, v in report.by_omega.items()},
            },
            fh,
        )
    os.replace(tmp, path)


def count_S_by_genus(X, n):
    """Fields with discriminant <= X and genus number exactly 2^n."""
    return count_S(X).by_omega.get(n + 2, 0)


# ---------------------------------------------------------------------------
# Sathe-Selberg empirical check


def sathe_selberg_count(N, n):
    """(exact count, main term, ratio) for squarefree m <= N with omega(m) = n."""
    if N < 100 or n < 1:
        raise ValueError("need N >= 100 and n >= 1")
    squarefree, omega = squarefree_omega_sieve(N)
    exact = int(np.count_nonzero(squarefree[2:] & (omega[2:] == n)))
    loglog = math.log(math.log(N))
    main = N / math.log(N) * loglog ** (n - 1) / math.factorial(n - 1)
    return exact, main, exact / main


# ---------------------------------------------------------------------------
# the Euler-product constant


@dataclass(frozen=True)
class ConstantEstimate:
    """Truncated odd Euler product (1 - 1/p)^3 (1 + 3/p) with a tail bound."""

    prime_bound: int
    truncated_product: float
    tail_bound: float
    candidate_A: dict

    def __str__(self):
        lines = [
            f"odd Euler product over p <= {self.prime_bound}: "
            f"{self.truncated_product:.10f} (tail < {self.tail_bound:.2e})"
        ]
        for name, val in self.candidate_A.items():
            lines.append(f"  leading-coefficient candidate {name} * product = {val:.10g}")
        return "\n".join(lines)


def euler_constant(P):
    """Truncated product over odd primes p <= P, with compensated log-summation.

    Each factor is 1 - 6/p^2 + 8/p^3 - 3/p^4, so the log-tail beyond P is
    below sum_{p > P} 6/p^2 < 6/P.
    """
    from .arith import primes_up_to

    logs = []
    for p in primes_up_to(P):
        if p == 2:
            continue
        logs.append(3 * math.log1p(-1.0 / p) + math.log1p(3.0 / p))
    product = math.exp(math.fsum(logs))
    tail = 6.0 / P
    candidates = {
        "7/1920": 7 / 1920 * product,
        "7/768": 7 / 768 * product,
    }
    return ConstantEstimate(P, product, tail, candidates)


# ---------------------------------------------------------------------------
# coefficient experiment and density report


def collect_discriminants(X):
    """Sorted array of (delta, omega) over all fields with discriminant <= X."""
    s = math.isqrt(X)
    omega_tab = odd_squarefree_table(s)[1] if s >= 15 else None
    out = []
    for m1, m2, m3, c, delta in enumerate_triples(X):
        w = int(omega_tab[m1] + omega_tab[m2] + omega_tab[m3]) + (1 if c == 4 else 0)
        out.append((delta, w))
    out.sort()
    return out


def coefficient_experiment(X_grid):
    """Empirical S(X)/(sqrt(X) log^2 X) against the two candidate constants.

    Returns a dict with one row per grid point and a trend verdict naming
    which of the two inconsistent printed constants the data approaches.
    """
    X_grid = sorted(X_grid)
    data = collect_discriminants(X_grid[-1])
    deltas = [d for d, _ in data]
    G1 = euler_constant(10**6).truncated_product
    candidates = {
        name: Fraction(name) * G1 for name in EULER_PRODUCT_CANDIDATES
    }
    import bisect

    rows = []
    for X in X_grid:
        count = bisect.bisect_right(deltas, X)
        ratio = count / (math.sqrt(X) * math.log(X) ** 2)
        rows.append(
            {
                "X": X,
                "S": count,
                "ratio": ratio,
                "ratio_over_7_1920": ratio / candidates["7/1920"],
                "ratio_over_7_768": ratio / candidates["7/768"],
            }
        )
    last = rows[-1]
    trend = min(
        EULER_PRODUCT_CANDIDATES,
        key=lambda name: abs(math.log(last["ratio"] / candidates[name])),
    )
    return {"rows": rows, "candidates": candidates, "trend": trend}


def density_report(X):
    """Per-decade fractions of fields with omega(Delta) <= 4 (the provable
    superset of Euclidean-eligible fields); the trend should decrease."""
    data = collect_discriminants(X)
    decades = {}
    for delta, w in data:
        d = len(str(delta)) - 1  # decade: 10^d <= delta < 10^(d+1)
        bucket = decades.setdefault(d, {})
        bucket[w] = bucket.get(w, 0) + 1
    rows = []
    for d in sorted(decades):
        bucket = decades[d]
        total = sum(bucket.values())
        eligible = sum(n for w, n in bucket.items() if w <= 4)
        rows.append(
            {
                "decade": d,
                "total": total,
                "eligible": eligible,
                "eligible_fraction": eligible / total,
                "by_omega": dict(sorted(bucket.items())),
            }
        )
    overall = sum(r["eligible"] for r in rows) / max(1, sum(r["total"] for r in rows))
    return {"X": X, "overall_eligible_fraction": overall, "decades": rows}


# ---------------------------------------------------------------------------


def ordered_factorization_check(M):
    """Count ordered coprime triples with product M; equals 3^omega(M)."""
    fac = factor_squarefree(M)  # raises NotSquarefree
    count = 0
    divisors = [1]
    for p in fac.primes:
        divisors += [d * p for d in divisors]
    for d1 in divisors:
        rest = M // d1
        for d2 in divisors:
            if rest % d2 == 0:
                count += 1
    expected = 3 ** fac.omega
    assert count == expected, (M, count, expected)
    return count
