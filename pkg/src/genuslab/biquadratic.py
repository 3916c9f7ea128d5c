"""Biquadratic-field layer.

Canonical triple parametrization, discriminants, the genus field G(K) and its
totally real subfield L as F2-spans of signed radicands, genus numbers, and
the four-form classification.
"""

import math
from dataclasses import dataclass
from enum import Enum
from .arith import factor_squarefree
from .errors import (
    DegenerateField,
    EvenRadicand,
    InternalInconsistency,
)
from .quadratic import discriminant as quad_discriminant, prime_star

# ---------------------------------------------------------------------------
# F2 linear algebra on signed squarefree radicands.
# A radicand r maps to the set of its prime divisors, plus the marker -1 for
# the sign; multiplication modulo squares is symmetric difference.

_SIGN = -1


def radicand_vector(r):
    """The F2 coordinate set of a signed squarefree radicand."""
    if r == 0:
        raise DegenerateField("radicand 0 is not allowed")
    vec = set(factor_squarefree(abs(r)).primes)
    if r < 0:
        vec.add(_SIGN)
    return frozenset(vec)


def vector_radicand(vec):
    """Inverse of radicand_vector."""
    r = 1
    for p in vec:
        r *= p
    return r


def f2_basis(radicands):
    """Row-reduced basis (as vectors) of the span of the given radicands."""
    basis = {}  # pivot -> vector
    for r in radicands:
        vec = radicand_vector(r)
        vec = _reduce_vec(vec, basis)
        if vec:
            basis[max(vec)] = vec
    return basis


def _reduce_vec(vec, basis):
    changed = True
    while changed:
        changed = False
        for pivot, row in basis.items():
            if pivot in vec:
                vec = vec ^ row
                changed = True
    return vec


@dataclass(frozen=True)
class MultiquadraticField:
    """A compositum of quadratic fields, as an F2-span of signed radicands."""

    generators: frozenset

    @property
    def basis(self):
        return f2_basis(self.generators)

    @property
    def rank(self):
        return len(self.basis)

    @property
    def degree(self):
        return 1 << self.rank

    def contains(self, radicand):
        if radicand == 1:
            return True
        return not _reduce_vec(radicand_vector(radicand), self.basis)

    def contains_field(self, other):
        return all(self.contains(g) for g in other.generators)

    def reduced_generators(self):
        """A deterministic generating set of radicands, one per basis row."""
        return tuple(sorted(vector_radicand(v) for v in self.basis.values()))


def multiquadratic(radicands):
    return MultiquadraticField(frozenset(radicands))


# ---------------------------------------------------------------------------


class FormClass(Enum):
    """Shapes from the classification of cyclic-class-group candidates.

    Keyed by the multiset of omega-values of the three quadratic subfield
    radicands: {1,1,2} two primes; {1,2,3} one prime against a product of two
    (the q / rs shape); {2,2,2} and {2,2,4} two products of two; {1,3,4} a
    product of three against a prime.  Anything else is outside the list.
    """

    TWO_PRIMES = "TwoPrimes"
    SHARED_PRIME = "SharedPrime"
    TWO_TIMES_TWO = "TwoTimesTwo"
    THREE_TIMES_ONE = "ThreeTimesOne"
    NONE = "None"


@dataclass(frozen=True)
class BiquadraticField:
    """Q(sqrt(d1), sqrt(d2)) with odd positive radicands, canonicalized.

    The triple (m1, m2, m3) is the sorted coprime decomposition; two input
    pairs generating the same field share the same triple.
    """

    d1: int
    d2: int
    triple: tuple
    c: int
    discriminant: int

    @property
    def subfield_radicands(self):
        m1, m2, m3 = self.triple
        return tuple(sorted((m1 * m2, m1 * m3, m2 * m3)))

    @property
    def product(self):
        m1, m2, m3 = self.triple
        return m1 * m2 * m3

    @property
    def omega_disc(self):
        """omega(Delta): prime count of m1 m2 m3, plus one for 2 when c = 4."""
        return factor_squarefree(self.product).omega + (1 if self.c == 4 else 0)


def _validate_odd_squarefree(r, name):
    if r <= 1:
        raise DegenerateField(f"{name} must be an integer > 1, got {r}")
    factor_squarefree(r)  # raises NotSquarefree
    if r % 2 == 0:
        raise EvenRadicand(f"{name} = {r} is even; only odd radicands are in scope")


def _triple_c(triple):
    m1, m2, m3 = triple
    return 1 if m1 % 4 == m2 % 4 == m3 % 4 else 4


def from_radicands(a, b):
    """Canonical field from two odd squarefree radicands a != b."""
    _validate_odd_squarefree(a, "d1")
    _validate_odd_squarefree(b, "d2")
    if a == b:
        raise DegenerateField(f"radicands coincide (a = b = {a}); field is quadratic")
    m = math.gcd(a, b)
    triple = tuple(sorted((m, a // m, b // m)))
    if triple[1] == 1:
        raise DegenerateField(f"triple {triple} has two unit entries")
    return _build(a, b, triple)


def from_triple(m1, m2, m3):
    """Field from a coprime odd squarefree triple; entries sorted, at most one 1."""
    triple = tuple(sorted((m1, m2, m3)))
    if triple[0] < 1 or triple[1] == 1:
        raise DegenerateField(f"triple {triple} is degenerate")
    for x in triple:
        if x > 1:
            _validate_odd_squarefree(x, "triple entry")
    if (
        math.gcd(triple[0], triple[1]) != 1
        or math.gcd(triple[0], triple[2]) != 1
        or math.gcd(triple[1], triple[2]) != 1
    ):
        raise DegenerateField(f"triple {triple} is not pairwise coprime")
    t1, t2, t3 = triple
    return _build(t1 * t2, t1 * t3, triple)


def _build(d1, d2, triple):
    c = _triple_c(triple)
    m1, m2, m3 = triple
    delta = c * c * (m1 * m2 * m3) ** 2
    return BiquadraticField(d1, d2, triple, c, delta)


def discriminant_of(K):
    """c^2 (m1 m2 m3)^2, cross-checked against the conductor-discriminant product."""
    delta = K.c * K.c * K.product**2
    cond = 1
    for n in K.subfield_radicands:
        cond *= quad_discriminant(n)
    if delta != cond:
        raise InternalInconsistency(
            f"discriminant mismatch for {K.triple}: {delta} != {cond}"
        )
    return delta


def genus_field(K):
    """G(K): p* for every odd prime dividing d1 d2, plus -1 unless c = 1."""
    gens = {prime_star(p) for p in factor_squarefree(K.product).primes}
    if K.c == 4:
        gens.add(_SIGN)
    return multiquadratic(gens)


def genus_number(K):
    """2^(omega(Delta) - 2), validated against the F2-rank of the genus field."""
    g = 1 << (K.omega_disc - 2)
    G = genus_field(K)
    if g * 4 != G.degree:
        raise InternalInconsistency(
            f"genus number {g} disagrees with genus field rank {G.rank}"
        )
    return g


def real_genus_subfield(K):
    """L: the kernel of the sign character on the genus group.

    Generated by the positive genus generators together with pairwise
    products of the negative ones; contains K with index <= 2 in G(K).
    """
    gens = sorted(genus_field(K).generators)
    pos = [g for g in gens if g > 0]
    neg = [g for g in gens if g < 0]
    kernel = list(pos)
    for n in neg[1:]:
        prod = neg[0] * n
        g = math.gcd(abs(neg[0]), abs(n))
        kernel.append(prod // (g * g))
    L = multiquadratic(kernel)
    for d in (K.d1, K.d2):
        if not L.contains(d):
            raise InternalInconsistency(f"L does not contain K for triple {K.triple}")
    return L


def classify_form(K):
    """Match K against the four listed shapes by subfield omega-multiset.

    The listed forms presuppose omega(Delta) <= 4 (cyclic class group), so a
    larger discriminant support is outside every shape.
    """
    if K.omega_disc > 4:
        return FormClass.NONE
    pattern = tuple(
        sorted(factor_squarefree(n).omega for n in K.subfield_radicands)
    )
    if pattern == (1, 1, 2):
        return FormClass.TWO_PRIMES
    if pattern == (1, 2, 3):
        return FormClass.SHARED_PRIME
    if pattern in ((2, 2, 2), (2, 2, 4)):
        return FormClass.TWO_TIMES_TWO
    if pattern == (1, 3, 4):
        return FormClass.THREE_TIMES_ONE
    return FormClass.NONE


def field_record(K):
    """The stable JSON record for a field (fixed key order)."""
    G = genus_field(K)
    L = real_genus_subfield(K)
    return {
        "d1": K.d1,
        "d2": K.d2,
        "triple": list(K.triple),
        "c": K.c,
        "discriminant": K.discriminant,
        "subfields": list(K.subfield_radicands),
        "genus_generators": sorted(G.generators),
        "genus_number": genus_number(K),
        "L_generators": list(L.reduced_generators()),
        "form": classify_form(K).value,
    }
