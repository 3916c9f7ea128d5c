"""Exact integer kernel: primality, squarefree factorization, and quadratic symbols.

Everything here is pure and exact.  Primality is deterministic Miller-Rabin
(64-bit inputs only), factorization is trial division backed by Pollard rho,
and the Kronecker symbol is computed by quadratic reciprocity.
"""

import math
from dataclasses import dataclass

from .errors import NonPositive, NotSquarefree

_TRIAL_BOUND = 10**6
_trial_primes = None  # built once, shared read-only

# Deterministic witness set for n < 3.3 * 10**24, comfortably covers 64 bits.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def primes_up_to(limit):
    """All primes <= limit, by a byte sieve."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i in range(2, limit + 1) if sieve[i]]


def _small_primes():
    global _trial_primes
    if _trial_primes is None:
        _trial_primes = primes_up_to(_TRIAL_BOUND)
    return _trial_primes


def is_prime(n):
    """Deterministic Miller-Rabin for 64-bit integers."""
    if n >= 1 << 64:
        raise OverflowError("primality testing is limited to 64-bit inputs")
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n):
    # n odd composite, not a prime power of a trial prime
    if n % 2 == 0:
        return 2
    c = 1
    while True:
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
        c += 1


def _factor(n):
    """Prime factorization of n >= 1 as a sorted list with multiplicity."""
    factors = []
    for p in _small_primes():
        if p * p > n:
            break
        while n % p == 0:
            factors.append(p)
            n //= p
    if n > 1:
        stack = [n]
        while stack:
            m = stack.pop()
            if is_prime(m):
                factors.append(m)
                continue
            d = _pollard_rho(m)
            stack.append(d)
            stack.append(m // d)
    factors.sort()
    return factors


@dataclass(frozen=True)
class FactoredSquarefree:
    """A squarefree positive integer with its sorted prime factorization."""

    value: int
    primes: tuple

    @property
    def omega(self):
        return len(self.primes)

    @property
    def mu(self):
        return -1 if self.omega % 2 else 1


def factor_squarefree(n):
    """Factor a squarefree positive integer; n = 1 gives the empty product."""
    if n < 1:
        raise NonPositive(f"expected a positive integer, got {n}")
    primes = _factor(n)
    for a, b in zip(primes, primes[1:]):
        if a == b:
            raise NotSquarefree(f"{n} is divisible by {a}**2")
    return FactoredSquarefree(n, tuple(primes))


def is_squarefree(n):
    """Squarefreeness of |n|; 0 is not squarefree."""
    if n == 0:
        return False
    try:
        factor_squarefree(abs(n))
    except NotSquarefree:
        return False
    return True


def is_perfect_square(n):
    """(True, r) with r*r == n, or (False, None)."""
    if n < 0:
        raise NonPositive(f"expected a nonnegative integer, got {n}")
    r = math.isqrt(n)
    if r * r == n:
        return True, r
    return False, None


def kronecker_symbol(D, n):
    """The Kronecker symbol (D/n), totally multiplicative in n."""
    if n == 0:
        return 1 if D in (1, -1) else 0
    if n < 0:
        return (-1 if D < 0 else 1) * kronecker_symbol(D, -n)
    result = 1
    # peel off the even part of n via the (D/2) supplement
    while n % 2 == 0:
        n //= 2
        if D % 2 == 0:
            return 0
        if D % 8 in (3, 5):
            result = -result
    if n == 1:
        return result
    # now n is odd: Jacobi symbol with reciprocity
    a = D % n
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def chi4(n):
    """The non-principal character mod 4: 0 on evens, +1 on 1 mod 4, -1 on 3 mod 4."""
    if n % 2 == 0:
        return 0
    return 1 if n % 4 == 1 else -1
