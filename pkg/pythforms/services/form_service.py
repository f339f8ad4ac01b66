import logging
from math import gcd, isqrt
from typing import List, Tuple, Union

import numpy as np

from pythforms.core.errors import KindMismatch, NotInSet, NotNormalizable
from pythforms.models.form import (
    Degenerate,
    DegenerateReason,
    FormDescriptor,
    FormKind,
    RawPair,
    Representation,
    ResidueSet,
    SetMembership,
)
from pythforms.utils.arith import factorize, sqrt_exact
from pythforms.utils.lattice import tally_values
from pythforms.utils.validators import require_odd, require_positive

logger = logging.getLogger(__name__)

_DESCRIPTORS = {
    FormKind.TWO_SQUARES: FormDescriptor(kind=FormKind.TWO_SQUARES, discriminant=-4, automorphs=4),
    FormKind.MINUS_TWO: FormDescriptor(kind=FormKind.MINUS_TWO, discriminant=8, automorphs=2),
    FormKind.PLUS_TWO: FormDescriptor(kind=FormKind.PLUS_TWO, discriminant=-8, automorphs=2),
}


class FormService:
    @staticmethod
    def eval(rep: Representation) -> int:
        return rep.kind.value_of(rep.a, rep.b)

    @staticmethod
    def descriptor(kind: FormKind) -> FormDescriptor:
        return _DESCRIPTORS[kind]

    @staticmethod
    def represent(kind: FormKind, n: int) -> List[Representation]:
        """
        Every constrained representation of n by the form, sorted by b ascending.

        b is scanned up to sqrt(n/2) in all three cases; a follows from an exact
        square root, so each query costs O(sqrt(n)) integer steps.
        """
        require_odd(n)
        reps = []
        for b in range(1, isqrt(n // 2) + 1):
            if kind is FormKind.TWO_SQUARES:
                root = sqrt_exact(n - b * b)
                a = root
            elif kind is FormKind.MINUS_TWO:
                root = sqrt_exact(n + 2 * b * b)
                a = None if root is None else root - b
            else:
                root = sqrt_exact(n - 2 * b * b)
                a = None if root is None else root + b
            if a is None or a <= b:
                continue
            if gcd(a, b) == 1 and (a - b) % 2 == 1:
                reps.append(Representation(kind=kind, a=a, b=b))
        return reps

    @staticmethod
    def classify(n: int) -> SetMembership:
        """S13/S15/S17 membership from the residues of the prime divisors mod 8"""
        require_odd(n)
        fact = factorize(n)
        residues = {p % 8 for p in fact.primes}
        sets = tuple(rs for rs in ResidueSet if residues <= rs.residues)
        return SetMembership(n=n, sets=sets, distinct_primes=fact.distinct_primes)

    @staticmethod
    def expected_count(membership: SetMembership) -> int:
        """2^(n-1) representations for a member with n distinct primes"""
        if not membership.is_member:
            raise NotInSet(f"{membership.n} mixes residue classes mod 8")
        return 2 ** (membership.distinct_primes - 1)

    @staticmethod
    def compose(kind: FormKind, rep_p: Representation, rep_q: Representation) -> Tuple[RawPair, RawPair]:
        """
        The two raw pairs representing the product of two represented values.

        minus-two uses A = ac + bd, B = b(c + d) + d(a + b), C = a(c + d) + d(a - b),
        D = bc - ad. The other two forms take both sign choices of the product
        identity (ac ∓ kbd)² + k(ad ± bc)² on their reduced parameters, k = 1 for
        two-squares and k = 2 for plus-two.
        """
        if rep_p.kind is not kind or rep_q.kind is not kind:
            raise KindMismatch(
                f"cannot compose {rep_p.kind.value} with {rep_q.kind.value} under {kind.value}"
            )
        a, b = rep_p.a, rep_p.b
        c, d = rep_q.a, rep_q.b

        if kind is FormKind.MINUS_TWO:
            first = (a * c + b * d, b * (c + d) + d * (a + b))
            second = (a * (c + d) + d * (a - b), b * c - a * d)
        elif kind is FormKind.TWO_SQUARES:
            first = (a * c - b * d, a * d + b * c)
            second = (a * c + b * d, a * d - b * c)
        else:
            # Reduced parameters a' = a - b, b' = b; raw pairs go back via u = x + y, v = y
            (a1, b1), (c1, d1) = rep_p.reduced, rep_q.reduced
            x1, y1 = a1 * c1 - 2 * b1 * d1, a1 * d1 + b1 * c1
            x2, y2 = a1 * c1 + 2 * b1 * d1, a1 * d1 - b1 * c1
            first = (x1 + y1, y1)
            second = (x2 + y2, y2)

        return RawPair(kind=kind, u=first[0], v=first[1]), RawPair(kind=kind, u=second[0], v=second[1])

    @staticmethod
    def normalize(kind: FormKind, raw: RawPair) -> Union[Representation, Degenerate]:
        """
        Move a raw pair into the region a > b > 0 without changing its value.

        Signs are flipped freely. For minus-two the reduced pair (a', b') is then
        pushed through the automorph (a', b') -> (3a' - 4b', 2a' - 3b') while
        a' < 2b'; this is the B' = 2A - B step, and |b'| strictly drops each time.
        """
        if raw.kind is not kind:
            raise KindMismatch(f"raw pair of {raw.kind.value} normalized as {kind.value}")
        value = raw.value
        if value <= 0:
            raise NotNormalizable(f"value {value} of {raw.as_tuple()} is not positive")

        if kind is FormKind.TWO_SQUARES:
            hi, lo = sorted((abs(raw.u), abs(raw.v)), reverse=True)
            if lo == 0:
                return Degenerate(kind=kind, value=value, reason=DegenerateReason.PERFECT_SQUARE)
            if hi == lo:
                return Degenerate(kind=kind, value=value, reason=DegenerateReason.TWICE_SQUARE)
            a, b = hi, lo
        elif kind is FormKind.MINUS_TWO:
            x, y = abs(raw.u + raw.v), abs(raw.v)
            if y == 0:
                return Degenerate(kind=kind, value=value, reason=DegenerateReason.PERFECT_SQUARE)
            while x < 2 * y:
                x, y = abs(3 * x - 4 * y), abs(2 * x - 3 * y)
            if y == 0:
                return Degenerate(kind=kind, value=value, reason=DegenerateReason.PERFECT_SQUARE)
            if x == 2 * y:
                return Degenerate(kind=kind, value=value, reason=DegenerateReason.TWICE_SQUARE)
            a, b = x - y, y
        else:
            x, y = abs(raw.u - raw.v), abs(raw.v)
            if y == 0:
                return Degenerate(kind=kind, value=value, reason=DegenerateReason.PERFECT_SQUARE)
            if x == 0:
                return Degenerate(kind=kind, value=value, reason=DegenerateReason.TWICE_SQUARE)
            a, b = x + y, y

        if value % 2 == 0 or gcd(a, b) != 1:
            raise NotNormalizable(
                f"{raw.as_tuple()} moves to ({a}, {b}), which is not a constrained representation of {value}"
            )
        return Representation(kind=kind, a=a, b=b)

    @staticmethod
    def double(rep: Representation) -> RawPair:
        """
        The primitive odd-odd pair representing 2N, built from 2 = F(1, 1).

        All three forms end at (a + b, a - b); minus-two passes through the
        product pair (a + b, a + 3b) and its B' = 2A - B move.
        """
        a, b = rep.a, rep.b
        if rep.kind is FormKind.MINUS_TWO:
            big_a, big_b = a + b, a + 3 * b
            if big_a < big_b:
                big_b = 2 * big_a - big_b
            return RawPair(kind=rep.kind, u=big_a, v=big_b)
        return RawPair(kind=rep.kind, u=a + b, v=a - b)

    @staticmethod
    def represent_doubled(kind: FormKind, m: int) -> List[RawPair]:
        """Brute force: every coprime odd pair A > B > 0 with form value m, by B ascending"""
        require_positive(m, "m")
        pairs = []
        for big_b in range(1, isqrt(m // 2) + 1, 2):
            if kind is FormKind.TWO_SQUARES:
                root = sqrt_exact(m - big_b * big_b)
                big_a = root
            elif kind is FormKind.MINUS_TWO:
                root = sqrt_exact(m + 2 * big_b * big_b)
                big_a = None if root is None else root - big_b
            else:
                root = sqrt_exact(m - 2 * big_b * big_b)
                big_a = None if root is None else root + big_b
            if big_a is None or big_a <= big_b or big_a % 2 == 0:
                continue
            if gcd(big_a, big_b) == 1:
                pairs.append(RawPair(kind=kind, u=big_a, v=big_b))
        return pairs

    @staticmethod
    def count_table(kind: FormKind, bound: int) -> np.ndarray:
        """c[N] = number of constrained representations of N, for every N < bound"""
        require_positive(bound, "bound")
        if kind is FormKind.TWO_SQUARES:
            a_limit = lambda b: isqrt(max(bound - 1 - b * b, 0))  # noqa: E731
        elif kind is FormKind.MINUS_TWO:
            a_limit = lambda b: isqrt(bound - 1 + 2 * b * b) - b  # noqa: E731
        else:
            a_limit = lambda b: isqrt(max(bound - 1 - 2 * b * b, 0)) + b  # noqa: E731
        counts = tally_values(bound, a_limit, lambda a, b: kind.value_of(a, b))
        logger.debug(f"Tallied {int(counts.sum())} {kind.value} representations below {bound}")
        return counts
