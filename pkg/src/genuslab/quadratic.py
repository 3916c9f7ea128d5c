"""Quadratic-field layer.

Discriminants, genus generators, abelian Hilbert-field candidates, fundamental
units by continued fractions, and two independent exact class-number routes:
an analytic one (character sums) and a reduced-forms oracle.
"""

import math
import os
import threading
from dataclasses import dataclass

import mpmath

from .arith import factor_squarefree, is_perfect_square, kronecker_symbol
from .errors import (
    CacheConflict,
    DegenerateRadicand,
    NotFundamental,
    NotSquarefree,
    OracleBoundExceeded,
    PrecisionFailure,
)

DEFAULT_ORACLE_BOUND = 10**6


def discriminant(m):
    """Fundamental discriminant of Q(sqrt(m)): m if m = 1 mod 4, else 4m."""
    if m in (0, 1):
        raise DegenerateRadicand(f"radicand {m} does not define a quadratic field")
    factor_squarefree(abs(m))  # raises NotSquarefree on bad input
    return m if m % 4 == 1 else 4 * m


def is_fundamental(D):
    """Whether D is the discriminant of a quadratic field."""
    if D == 1 or D == 0:
        return False
    if D % 4 == 1:
        try:
            factor_squarefree(abs(D))
        except NotSquarefree:
            return False
        return True
    if D % 4 == 0:
        m = D // 4
        if m % 4 == 1:
            return False
        try:
            factor_squarefree(abs(m))
        except NotSquarefree:
            return False
        return True
    return False


def radicand_of(D):
    """The squarefree radicand of a fundamental discriminant."""
    if not is_fundamental(D):
        raise NotFundamental(f"{D} is not a fundamental discriminant")
    return D if D % 4 == 1 else D // 4


def prime_star(p):
    """p* = (-1)^((p-1)/2) p for an odd prime p."""
    return p if p % 4 == 1 else -p


def genus_generators(m):
    """Signed radicands generating the genus field of Q(sqrt(m)).

    Odd primes p | D contribute p*.  The 2-part follows the mod-8 split for
    even m; for odd m = 3 mod 4 (where 2 | D but 2 does not divide m) the
    generator is -1, i.e. the radicand form of the discriminant -4.
    """
    D = discriminant(m)
    gens = set()
    for p in factor_squarefree(abs(m)).primes:
        if p != 2:
            gens.add(prime_star(p))
    if m % 2 == 0:
        gens.add(2 if m % 8 == 2 else -2)
    elif m % 4 == 3:
        gens.add(-1)
    return frozenset(gens)


def hilbert_radicands_if_abelian(d):
    """Generator radicands of the candidate Hilbert class field of Q(sqrt(d)).

    The candidate equals H(K) only when H(K)/Q is abelian; callers validate
    via the class number.  Branches select on d mod 4 and mod 8.
    """
    if d <= 1:
        raise DegenerateRadicand(f"expected a real radicand > 1, got {d}")
    fac = factor_squarefree(d)
    odd = [p for p in fac.primes if p != 2]
    ones = [p for p in odd if p % 4 == 1]
    threes = [p for p in odd if p % 4 == 3]
    gens = set(ones)
    if d % 4 == 1:
        for p in threes[1:]:
            gens.add(threes[0] * p)
    elif d % 4 == 3:
        gens.update(threes)
    elif d % 8 == 6:
        for p in threes:
            gens.add(2 * p)
    else:  # d = 2 mod 8
        for p in threes[1:]:
            gens.add(threes[0] * p)
        gens.add(2)
    if not gens:
        gens.add(d)
    return frozenset(gens)


@dataclass(frozen=True)
class FundamentalUnit:
    """The unit (x + y*sqrt(d0))/scale > 1 of the order of discriminant D.

    d0 is the radicand (D for odd D, D/4 otherwise); scale is 2 exactly when
    the minimal unit is half-integral, which requires D = 1 mod 4.
    """

    x: int
    y: int
    scale: int
    norm: int
    d0: int

    def log_value(self, prec=80):
        with mpmath.workprec(prec + max(self.x.bit_length(), 64)):
            val = (self.x + self.y * mpmath.sqrt(self.d0)) / self.scale
            return mpmath.log(val)


def fundamental_unit(D):
    """Minimal unit > 1 of discriminant D > 0, via the PQa continued fraction.

    Runs the PQa recurrence on sqrt(d0) (even D) or (1 + sqrt(D))/2 (odd D);
    the first return of Q to its initial value yields the minimal solution of
    x^2 - d0 y^2 = +-1, resp. t^2 - D u^2 = +-4.
    """
    if D <= 0 or not is_fundamental(D):
        raise NotFundamental(f"{D} is not a real fundamental discriminant")
    if D % 4 == 0:
        d0, P0, Q0 = D // 4, 0, 1
    else:
        d0, P0, Q0 = D, 1, 2
    s = math.isqrt(d0)
    P, Q = P0, Q0
    a_prev2, a_prev1 = 0, 1  # convergent numerators A_{-2}, A_{-1}
    b_prev2, b_prev1 = 1, 0  # convergent denominators B_{-2}, B_{-1}
    while True:
        a = (P + s) // Q
        A = a * a_prev1 + a_prev2
        B = a * b_prev1 + b_prev2
        a_prev2, a_prev1 = a_prev1, A
        b_prev2, b_prev1 = b_prev1, B
        P = a * Q - P
        Q = (d0 - P * P) // Q
        if Q == Q0:
            G = Q0 * A - P0 * B
            break
    t = G * G - d0 * B * B  # equals +-Q0^2
    norm = 1 if t > 0 else -1
    x, y, scale = G, B, Q0
    if scale == 2 and x % 2 == 0 and y % 2 == 0:
        x, y, scale = x // 2, y // 2, 1
    return FundamentalUnit(x, y, scale, norm, d0)


# ---------------------------------------------------------------------------
# class numbers


class ClassNumberCache:
    """Memo for class numbers, optionally persisted as an append-only TSV.

    File records are ``D<TAB>h<TAB>method``; duplicate D lines must agree.
    """

    def __init__(self, path=None):
        self.path = path
        self._data = {}
        self._lock = threading.Lock()
        if path is not None and os.path.exists(path):
            self.load(path)

    def load(self, path):
        with open(path) as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                d_str, h_str, _method = line.split("\t")
                D, h = int(d_str), int(h_str)
                if D in self._data and self._data[D] != h:
                    raise CacheConflict(
                        f"cache records disagree for D={D}: {self._data[D]} vs {h}"
                    )
                self._data[D] = h

    def get(self, D):
        return self._data.get(D)

    def put(self, D, h, method="analytic"):
        with self._lock:
            old = self._data.get(D)
            if old is not None:
                if old != h:
                    raise CacheConflict(f"conflicting class numbers for D={D}")
                return
            self._data[D] = h
            if self.path is not None:
                os.makedirs(os.path.dirname(self.path) or ".", exist_ok=True)
                with open(self.path, "a") as fh:
                    fh.write(f"{D}\t{h}\t{method}\n")


_default_cache = ClassNumberCache()


def set_cache(cache):
    """Install the process-wide class-number cache (single-writer contract)."""
    global _default_cache
    _default_cache = cache


def get_cache():
    return _default_cache


def _character_table(D):
    """chi_D(a) for a in 0..|D|-1, built multiplicatively from an SPF sieve."""
    n = abs(D)
    chi = [0] * n
    chi[1 % n] = 1
    spf = list(range(n))
    for p in range(2, math.isqrt(n - 1) + 1 if n > 1 else 2):
        if spf[p] == p:
            for k in range(p * p, n, p):
                if spf[k] == k:
                    spf[k] = p
    chi_p = {}
    for a in range(2, n):
        p = spf[a]
        if p == a:
            chi[a] = kronecker_symbol(D, a)
            chi_p[a] = chi[a]
        else:
            chi[a] = chi[a // p] * chi_p[p]
    return chi


def class_number(D, cache=None):
    """Exact class number of the quadratic field of discriminant D.

    Imaginary fields use the finite character sum w/(2|D|) |sum chi(a) a|;
    real fields use L(1, chi) as a log-sin sum against the regulator, rounded
    with a verified gap to the nearest integer.
    """
    if not is_fundamental(D):
        raise NotFundamental(f"{D} is not a fundamental discriminant")
    cache = cache if cache is not None else _default_cache
    cached = cache.get(D)
    if cached is not None:
        return cached
    if D < 0:
        h = _class_number_imaginary(D)
    else:
        h = _class_number_real(D)
    cache.put(D, h, "analytic")
    return h


def _class_number_imaginary(D):
    chi = _character_table(D)
    total = sum(chi[a % -D] * a for a in range(1, -D))
    w = 6 if D == -3 else 4 if D == -4 else 2
    num = w * abs(total)
    den = 2 * -D
    if num % den:
        raise PrecisionFailure(f"character sum for D={D} is not divisible as expected")
    return num // den


def _class_number_real(D, tol=1e-4):
    chi = _character_table(D)
    unit = fundamental_unit(D)
    # double precision first; D <= a few 10^5 keeps the residual far below tol
    log_eps = float(unit.log_value())
    total = math.fsum(
        -chi[a] * math.log(math.sin(math.pi * a / D)) for a in range(1, D) if chi[a]
    )
    approx = total / (2.0 * log_eps)
    h = round(approx)
    if abs(approx - h) < tol and h >= 1:
        return h
    # escalate precision; h is an integer, so a verified gap certifies it
    for prec in (128, 256, 512):
        with mpmath.workprec(prec):
            log_eps = unit.log_value(prec)
            pi = mpmath.pi
            total = mpmath.fsum(
                -chi[a] * mpmath.log(mpmath.sin(pi * a / D))
                for a in range(1, D)
                if chi[a]
            )
            approx = total / (2 * log_eps)
            h = int(mpmath.nint(approx))
            if abs(approx - h) < tol and h >= 1:
                return h
    raise PrecisionFailure(f"class number of D={D} did not stabilize")


def class_number_forms(D, oracle_bound=DEFAULT_ORACLE_BOUND):
    """Independent class-number oracle by reduced binary quadratic forms.

    Imaginary: count reduced primitive forms.  Real: count cycles of reduced
    indefinite forms (the narrow class number h+), then convert to h using
    the norm of the fundamental unit.
    """
    if not is_fundamental(D):
        raise NotFundamental(f"{D} is not a fundamental discriminant")
    if abs(D) > oracle_bound:
        raise OracleBoundExceeded(f"|D| = {abs(D)} exceeds oracle bound {oracle_bound}")
    if D < 0:
        return _forms_count_imaginary(D)
    h_plus = _forms_count_real(D)
    if fundamental_unit(D).norm == -1:
        return h_plus
    assert h_plus % 2 == 0
    return h_plus // 2


def _forms_count_imaginary(D):
    count = 0
    a_max = math.isqrt(-D // 3)
    for a in range(1, a_max + 1):
        for b in range(-a + 1, a + 1):
            if (b - D) % 2:
                continue
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if b < 0 and (abs(b) == a or a == c):
                continue
            if math.gcd(math.gcd(a, abs(b)), c) == 1:
                count += 1
    return count


def _reduced_indefinite_forms(D):
    forms = set()
    s = math.isqrt(D)
    for b in range(1, s + 1):
        if (b - D) % 2:
            continue
        n = (D - b * b) // 4  # = |a c| with a, c of opposite sign
        if n <= 0:
            continue
        for a_abs in range(1, math.isqrt(n) + 1):
            if n % a_abs:
                continue
            c_abs = n // a_abs
            for aa, cc in ((a_abs, -c_abs), (-a_abs, c_abs), (c_abs, -a_abs), (-c_abs, a_abs)):
                if _is_reduced_indefinite(aa, b, cc, D) and math.gcd(
                    math.gcd(abs(aa), b), abs(cc)
                ) == 1:
                    forms.add((aa, b, cc))
    return forms


def _lt_sqrt(D, v):
    # v < sqrt(D), exactly
    return v < 0 or v * v < D


def _is_reduced_indefinite(a, b, c, D):
    # 0 < b < sqrt(D) and sqrt(D) - 2|a| < b  (equivalently |sqrt(D)-2|a|| < b)
    if b <= 0 or not _lt_sqrt(D, b):
        return False
    t = 2 * abs(a) - b  # need t < sqrt(D)  (from sqrt(D) < b + 2|a|)
    u = 2 * abs(a) + b  # need sqrt(D) < u
    return _lt_sqrt(D, t) and not _lt_sqrt(D, u) and u * u != D


def _rho_step(a, b, c, D):
    """One reduction step on an indefinite form: (a,b,c) -> (c, b', c')."""
    s = math.isqrt(D)
    ac = abs(c)
    # b' = -b mod 2|c|, maximized subject to b' < sqrt(D), b' > sqrt(D)-2|c|
    r = (-b) % (2 * ac)
    # shift r into the window (sqrt(D) - 2|c|, sqrt(D))
    bp = r + 2 * ac * ((s - r) // (2 * ac))
    if not _lt_sqrt(D, bp):
        bp -= 2 * ac
    cp = (bp * bp - D) // (4 * c)
    return (c, bp, cp)


def _forms_count_real(D):
    forms = _reduced_indefinite_forms(D)
    seen = set()
    cycles = 0
    for f in sorted(forms):
        if f in seen:
            continue
        cycles += 1
        g = f
        while True:
            g = _rho_step(*g, D)
            if g == f:
                break
            if g in seen:  # should not happen for disjoint cycles
                break
            seen.add(g)
        seen.add(f)
    return cycles
