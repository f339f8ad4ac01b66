import logging
from math import gcd, isqrt
from typing import Dict, List, Optional, Tuple

from pythforms.core.errors import InvariantViolation, NotPrime
from pythforms.models.form import FormKind, Representation
from pythforms.models.segregated import (
    ResiduePrediction,
    SegregatedKind,
    SegregatedMembership,
    SegregatedRep,
    SegregatedSet,
)
from pythforms.models.triple import TripleParams
from pythforms.utils.arith import factorize, is_prime, sqrt_exact
from pythforms.utils.validators import require_odd

logger = logging.getLogger(__name__)

KINDS_BY_RESIDUE: Dict[int, Tuple[SegregatedKind, ...]] = {
    1: (SegregatedKind.F1A, SegregatedKind.F1B, SegregatedKind.F1C),
    3: (SegregatedKind.F3,),
    5: (SegregatedKind.F5,),
    7: (SegregatedKind.F7,),
}


def _solve_s(kind: SegregatedKind, p: int, t: int) -> Optional[int]:
    """The positive s with kind(s, t) = p, if one exists."""
    _, beta, gamma = kind.coefficients
    if beta == 0:
        return sqrt_exact(p - gamma * t * t)
    # s² + βst + γt² = (s + βt/2)² - (β²/4 - γ)t²
    half = beta // 2
    root = sqrt_exact(p + (half * half - gamma) * t * t)
    if root is None:
        return None
    return root - half * t


def _t_limit(kind: SegregatedKind, p: int) -> int:
    # s >= 1 forces gamma·t² + beta·t < p, hence gamma·t² < p
    return isqrt((p - 1) // kind.coefficients[2])


class SegregationService:
    @staticmethod
    def seg_eval(rep: SegregatedRep) -> int:
        return rep.kind.value_of(rep.s, rep.t)

    @staticmethod
    def search(kind: SegregatedKind, n: int) -> List[SegregatedRep]:
        """Every (s, t) meeting the kind's parity and coprimality rules, by t ascending"""
        reps = []
        step = 2 if kind.odd_t_only else 1
        for t in range(1, _t_limit(kind, n) + 1, step):
            s = _solve_s(kind, n, t)
            if s is None or s <= 0 or s % 2 == 0 or gcd(s, t) != 1:
                continue
            reps.append(SegregatedRep(kind=kind, s=s, t=t))
        return reps

    @staticmethod
    def seg_represent(p: int) -> List[SegregatedRep]:
        """
        The segregated representations of an odd prime.

        p ≡ 3, 5, 7 (mod 8) yields one rep of F3, F5, F7 respectively; p ≡ 1 yields
        one rep for each of F1a, F1b and F1c, in that order.
        """
        require_odd(p)
        if not is_prime(p):
            raise NotPrime(p)
        reps = []
        for kind in KINDS_BY_RESIDUE[p % 8]:
            reps.extend(SegregationService.search(kind, p))
        return reps

    @staticmethod
    def residue_prediction(p: TripleParams) -> ResiduePrediction:
        """
        Residues mod 8 of (n17, n13, n15) predicted from the parities of a and b.

        a odd gives n17 ≡ n13 ≡ 1, a even gives 7 and 3. For n15 the even member
        of the pair is written 2m: m odd gives 5, m even gives 1.
        """
        if p.a % 2 == 1:
            n17, n13 = 1, 1
        else:
            n17, n13 = 7, 3
        even = p.b if p.b % 2 == 0 else p.a
        n15 = 5 if (even // 2) % 2 == 1 else 1
        return ResiduePrediction(n17=n17, n13=n13, n15=n15)

    @staticmethod
    def seg_classify(n: int) -> SegregatedMembership:
        """
        S1/S3/S5/S7 membership with the residue predicted by exponent-sum parity.

        The prediction is cross-checked against n mod 8; a disagreement raises
        InvariantViolation.
        """
        require_odd(n)
        fact = factorize(n)
        residues = {q % 8 for q in fact.primes}
        residue = n % 8
        if len(residues) != 1:
            return SegregatedMembership(n=n, exponent_sum=fact.exponent_sum, residue=residue)

        seg_set = SegregatedSet(f"S{residues.pop()}")
        predicted = 1 if fact.exponent_sum % 2 == 0 else seg_set.residue
        if predicted != residue:
            raise InvariantViolation(
                f"{n} in {seg_set.value}: parity rule predicts {predicted}, actual residue {residue}"
            )
        return SegregatedMembership(
            n=n,
            set=seg_set,
            exponent_sum=fact.exponent_sum,
            residue=residue,
            predicted_residue=predicted,
        )

    @staticmethod
    def to_form_representation(rep: SegregatedRep) -> Representation:
        """Map a segregated rep back onto the Pythagorean form it restates"""
        s, t = rep.s, rep.t
        if rep.kind is SegregatedKind.F3:
            return Representation(kind=FormKind.PLUS_TWO, a=s + t, b=t)
        if rep.kind is SegregatedKind.F7:
            return Representation(kind=FormKind.MINUS_TWO, a=s + t, b=t)
        if rep.kind is SegregatedKind.F1A:
            return Representation(kind=FormKind.PLUS_TWO, a=s + 2 * t, b=2 * t)
        if rep.kind is SegregatedKind.F1C:
            return Representation(kind=FormKind.MINUS_TWO, a=s + 2 * t, b=2 * t)
        other = 2 * t if rep.kind is SegregatedKind.F5 else 4 * t
        return Representation(kind=FormKind.TWO_SQUARES, a=max(s, other), b=min(s, other))
