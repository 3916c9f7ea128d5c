"""Biquadratic class numbers via the Brauer relation h_K = h1 h2 h3 Q / 4.

The unit index Q = [E_K : E1 E2 E3] is found Kubota-style: for each
nontrivial product of subfield fundamental units, decide exactly whether it
is a square in K.  All arithmetic is exact (Fraction coefficients); the
square test in K reduces to square tests inside one quadratic subfield, so
no quartic-field machinery is needed.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InternalInconsistency, NotTotallyReal
from .quadratic import class_number, discriminant, fundamental_unit

# ---------------------------------------------------------------------------
# exact arithmetic in Q(sqrt(d))


@dataclass(frozen=True)
class QuadraticElement:
    """(p + q*sqrt(d))/denom with integer p, q and denom in {1, 2}."""

    p: int
    q: int
    d: int
    denom: int = 1

    def __post_init__(self):
        if self.denom == 2 and (self.p - self.q) % 2:
            raise ValueError("denom 2 requires p = q (mod 2)")

    def as_fractions(self):
        return Fraction(self.p, self.denom), Fraction(self.q, self.denom)


def _rational_sqrt(f):
    """Exact square root of a nonnegative Fraction, or None."""
    if f < 0:
        return None
    num, den = f.numerator, f.denominator
    rn = math.isqrt(num)
    rd = math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def _sign_quad(a, b, d):
    """Exact sign of a + b*sqrt(d) for d > 0."""
    if b == 0:
        return (a > 0) - (a < 0)
    if a == 0:
        return 1 if b > 0 else -1
    if a > 0 and b > 0:
        return 1
    if a < 0 and b < 0:
        return -1
    # opposite signs: compare a^2 with d b^2
    lhs, rhs = a * a, d * b * b
    if a > 0:  # b < 0
        return 1 if lhs > rhs else -1
    return 1 if lhs < rhs else -1


def sqrt_in_quadratic(a, b, d):
    """A root (x, y) with (x + y*sqrt(d))^2 = a + b*sqrt(d), or None.

    a, b are Fractions, d a positive squarefree integer.  Complete decision
    procedure: the norm must be a rational square, and the two candidate
    values of x^2 are tried exactly.
    """
    a, b = Fraction(a), Fraction(b)
    if a == 0 and b == 0:
        return Fraction(0), Fraction(0)
    # a square must be totally positive
    if _sign_quad(a, b, d) < 0 or _sign_quad(a, -b, d) < 0:
        return None
    if b == 0:
        r = _rational_sqrt(a)
        if r is not None:
            return r, Fraction(0)
        r = _rational_sqrt(a / d)
        if r is not None:
            return Fraction(0), r
        return None
    s = _rational_sqrt(a * a - d * b * b)
    if s is None:
        return None
    for g in (s, -s):
        x2 = (a + g) / 2
        x = _rational_sqrt(x2)
        if x is not None and x != 0:
            y = b / (2 * x)
            if x * x + d * y * y == a and 2 * x * y == b:
                return x, y
    return None


def is_square_in_quadratic(u):
    """(True, root QuadraticElement-style pair) if u is a square in Q(sqrt(d))."""
    a, b = u.as_fractions()
    root = sqrt_in_quadratic(a, b, u.d)
    if root is None:
        return False, None
    return True, root


# ---------------------------------------------------------------------------
# exact arithmetic in K = Q(sqrt(n1), sqrt(n2)), basis (1, rt1, rt2, rt3)


class BiquadraticAlgebra:
    """The field K as a 4-dimensional Q-algebra over its subfield radicands.

    Basis (1, sqrt(n1), sqrt(n2), sqrt(n3)); products of two roots fold into
    the third via sqrt(n_i) sqrt(n_j) = g_ij sqrt(n_k) with integer g_ij.
    """

    def __init__(self, triple):
        m1, m2, m3 = triple
        self.triple = triple
        self.n = (m1 * m2, m1 * m3, m2 * m3)
        # sqrt(n1)sqrt(n2) = m1 sqrt(n3), etc.
        self.fold = {(0, 1): (2, m1), (0, 2): (1, m2), (1, 2): (0, m3)}

    def element(self, coords):
        return tuple(Fraction(c) for c in coords)

    def one(self):
        return self.element((1, 0, 0, 0))

    def embed_subfield(self, idx, a, b):
        """a + b*sqrt(n_idx) as an element of K."""
        coords = [Fraction(a), Fraction(0), Fraction(0), Fraction(0)]
        coords[1 + idx] = Fraction(b)
        return tuple(coords)

    def mul(self, u, v):
        out = [Fraction(0)] * 4
        out[0] = u[0] * v[0]
        for i in range(3):
            out[0] += u[1 + i] * v[1 + i] * self.n[i]
            out[1 + i] += u[0] * v[1 + i] + u[1 + i] * v[0]
        for (i, j), (k, g) in self.fold.items():
            out[1 + k] += (u[1 + i] * v[1 + j] + u[1 + j] * v[1 + i]) * g
        return tuple(out)

    def neg(self, u):
        return tuple(-c for c in u)

    def power_product(self, units, exponents):
        out = self.one()
        for u, e in zip(units, exponents):
            if e:
                out = self.mul(out, u)
        return out

    def is_square(self, u):
        """Whether u has a square root in K (exact).

        Decompose K = K1(sqrt(n2)) with K1 = Q(sqrt(n1)): u = A + B sqrt(n2)
        with A, B in K1.  If B = 0 the question drops into K1; otherwise the
        candidate root components solve z^2 - A z + n2 B^2/4 = 0, whose
        discriminant is the relative norm A^2 - n2 B^2.
        """
        n1, n2, n3 = self.n
        m3 = self.fold[(1, 2)][1]
        A = (u[0], u[1])
        # x2*sqrt(n2) + x3*sqrt(n3) = (x2 + x3*m3/n2*sqrt(n1)) * sqrt(n2)
        B = (u[2], u[3] * Fraction(m3, n2))
        if B == (0, 0):
            if sqrt_in_quadratic(A[0], A[1], n1) is not None:
                return True
            return sqrt_in_quadratic(A[0] * n2, A[1] * n2, n1) is not None
        w = _q_sub(_q_mul(A, A, n1), _q_scale(_q_mul(B, B, n1), n2))
        g = sqrt_in_quadratic(w[0], w[1], n1)
        if g is None:
            return False
        for gg in (g, (-g[0], -g[1])):
            t = ((A[0] + gg[0]) / 2, (A[1] + gg[1]) / 2)
            alpha = sqrt_in_quadratic(t[0], t[1], n1)
            if alpha is None or alpha == (0, 0):
                continue
            beta = _q_div(B, _q_scale(alpha, 2), n1)
            lhs = _q_add(_q_mul(alpha, alpha, n1), _q_scale(_q_mul(beta, beta, n1), n2))
            if lhs == A and _q_mul(alpha, _q_scale(beta, 2), n1) == B:
                return True
        return False


def _q_mul(u, v, d):
    return (u[0] * v[0] + u[1] * v[1] * d, u[0] * v[1] + u[1] * v[0])


def _q_add(u, v):
    return (u[0] + v[0], u[1] + v[1])


def _q_sub(u, v):
    return (u[0] - v[0], u[1] - v[1])


def _q_scale(u, s):
    return (u[0] * s, u[1] * s)


def _q_div(u, v, d):
    norm = v[0] * v[0] - v[1] * v[1] * d
    conj = (v[0], -v[1])
    num = _q_mul(u, conj, d)
    return (num[0] / norm, num[1] / norm)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class UnitIndexResult:
    """Q = [E_K : E1 E2 E3] with the exponent triples found to give squares."""

    Q: int
    square_products: tuple


def subfield_units(K):
    """Fundamental units of the three quadratic subfields, embedded in K."""
    alg = BiquadraticAlgebra(K.triple)
    units = []
    raw = []
    for idx, n in enumerate(alg.n):
        eps = fundamental_unit(discriminant(n))
        raw.append(eps)
        units.append(
            alg.embed_subfield(idx, Fraction(eps.x, eps.scale), Fraction(eps.y, eps.scale))
        )
    return alg, units, raw


def unit_index(K):
    """Kubota-style unit index of a totally real biquadratic field."""
    if any(n <= 0 for n in (K.d1, K.d2)):
        raise NotTotallyReal("unit index requires a totally real field")
    alg, units, _ = subfield_units(K)
    squares = []
    for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1)):
        u = alg.power_product(units, e)
        if alg.is_square(u) or alg.is_square(alg.neg(u)):
            squares.append(e)
    rank = _f2_rank(squares)
    return UnitIndexResult(1 << rank, tuple(squares))


def _f2_rank(vectors):
    # rank via the size of the generated subgroup of (Z/2)^3
    span = {0}
    for v in vectors:
        x = v[0] | v[1] << 1 | v[2] << 2
        span |= {x ^ s for s in span}
    return len(span).bit_length() - 1


def class_number_biquadratic(K, cache=None):
    """h_K = h1 h2 h3 Q / 4, an exact positive integer."""
    if any(n <= 0 for n in (K.d1, K.d2)):
        raise NotTotallyReal("class number relation requires a totally real field")
    h_prod = 1
    for n in K.subfield_radicands:
        h_prod *= class_number(discriminant(n), cache=cache)
    Q = unit_index(K).Q
    num = h_prod * Q
    if num % 4:
        raise InternalInconsistency(
            f"Brauer relation gives non-integral class number for {K.triple}"
        )
    h = num // 4
    omega = K.omega_disc
    if omega >= 3 and h % (1 << (omega - 3)):
        raise InternalInconsistency(
            f"class number {h} of {K.triple} misses the 2-rank divisibility bound"
        )
    return h
