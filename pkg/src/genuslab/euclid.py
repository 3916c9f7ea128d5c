"""Euclidean-ideal decision procedure for odd real biquadratic fields.

The verdict cascade: omega(Delta) > 4 rules out a cyclic class group and so
any Euclidean ideal class; otherwise abelianity of H(K)/Q (decided by
comparing h_K to [L:K]) together with h_K <= 2 gives unconditional
existence; abelian with h_K > 2 means the class group is a nontrivial
2-elementary group, hence non-cyclic; non-abelian cases are left open.
"""

from dataclasses import dataclass

from .arith import factor_squarefree
from .biquadratic import genus_field, real_genus_subfield
from .brauer import class_number_biquadratic
from .errors import EvenRadicand, InternalInconsistency, NotTotallyReal, ShapeMismatch

STATUS_EXISTS = "Exists"
STATUS_NO_NON_CYCLIC = "NoNonCyclic"
STATUS_OUTSIDE = "OutsideTheorem"

TAG_OMEGA_GT_4 = "omega_gt_4"
TAG_ABELIAN_CYCLIC = "abelian_cyclic"
TAG_ABELIAN_NONCYCLIC = "abelian_noncyclic"
TAG_D8 = "d8_obstruction"
TAG_H1 = "class_number_one"


@dataclass(frozen=True)
class Verdict:
    status: str
    reasons: tuple
    omega: int
    h_K: int = None
    hilbert_abelian: bool = None
    exceptional_pattern: bool = None

    def to_json(self):
        return {
            "status": self.status,
            "h_K": self.h_K,
            "omega": self.omega,
            "hilbert_abelian": self.hilbert_abelian,
            "exceptional_pattern": self.exceptional_pattern,
            "reasons": list(self.reasons),
        }


def _check_domain(K):
    if K.product % 2 == 0:
        raise EvenRadicand("even radicands are out of scope")
    if K.d1 <= 0 or K.d2 <= 0:
        raise NotTotallyReal("verdicts apply to totally real fields only")


def index_L_over_K(K):
    """[L : K] for the totally real genus subfield L."""
    return real_genus_subfield(K).degree // 4


def hilbert_abelian(K, h_K=None, cache=None):
    """Whether H(K)/Q is abelian: h_K must equal [L:K].

    L sits inside H(K) always; H(K)/Q abelian forces H(K) = L, so equality
    of degrees decides.  When the sign character is nontrivial on the genus
    group, [L:K] = 2^(omega(Delta)-3) for omega >= 3 and 1 for omega = 2.
    """
    _check_domain(K)
    if h_K is None:
        h_K = class_number_biquadratic(K, cache=cache)
    return h_K == index_L_over_K(K)


def exceptional_pattern(K):
    """The q = 1, r = s = 3 (mod 4) congruence pattern of the q/rs shape."""
    subs = K.subfield_radicands
    omegas = sorted(factor_squarefree(n).omega for n in subs)
    if omegas != [1, 2, 3]:
        raise ShapeMismatch(
            f"field {K.triple} is not of the prime / two-prime-product shape"
        )
    q = next(n for n in subs if factor_squarefree(n).omega == 1)
    rs = next(n for n in subs if factor_squarefree(n).omega == 2)
    r, s = factor_squarefree(rs).primes
    return q % 4 == 1 and r % 4 == 3 and s % 4 == 3


def euclidean_verdict(K, cache=None):
    """Total, deterministic decision cascade; exactly one status per field."""
    _check_domain(K)
    omega = K.omega_disc
    if omega > 4:
        return Verdict(STATUS_NO_NON_CYCLIC, (TAG_OMEGA_GT_4,), omega)
    h_K = class_number_biquadratic(K, cache=cache)
    try:
        exceptional = exceptional_pattern(K)
    except ShapeMismatch:
        exceptional = None
    abelian = h_K == index_L_over_K(K)
    if abelian:
        # post-hoc consistency rather than trusting the flag
        G = genus_field(K)
        expected = 1 if omega == 2 else 1 << (omega - 3)
        if any(g < 0 for g in G.generators) and h_K != expected:
            raise InternalInconsistency(
                f"abelian field {K.triple} has h_K={h_K}, expected {expected}"
            )
        if h_K <= 2:
            tag = TAG_H1 if h_K == 1 else TAG_ABELIAN_CYCLIC
            return Verdict(STATUS_EXISTS, (tag,), omega, h_K, True, exceptional)
        return Verdict(
            STATUS_NO_NON_CYCLIC, (TAG_ABELIAN_NONCYCLIC,), omega, h_K, True, exceptional
        )
    reasons = (TAG_D8,) if (exceptional and h_K == 2) else ()
    return Verdict(STATUS_OUTSIDE, reasons, omega, h_K, False, exceptional)
