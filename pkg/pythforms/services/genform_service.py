import logging
from math import gcd, isqrt
from typing import List

import numpy as np

from pythforms.models.general import GeneralForm, UniquenessReport
from pythforms.models.triple import TripleParams
from pythforms.utils.arith import sqrt_exact
from pythforms.utils.lattice import tally_values
from pythforms.utils.sieve import odd_primes_below
from pythforms.utils.validators import require_odd, require_positive

logger = logging.getLogger(__name__)


def _smallest_value(f: GeneralForm, b: int) -> int:
    """F at a = b + 1, the least value any valid pair with this b can take."""
    return f.slack * b * b + 2 * (f.l + 1) * b + 1


class GenFormService:
    @staticmethod
    def make_form(k: int, l: int) -> GeneralForm:  # noqa: E741
        return GeneralForm(k=k, l=l)

    @staticmethod
    def gf_eval(f: GeneralForm, p: TripleParams) -> int:
        return f.value_of(p.a, p.b)

    @staticmethod
    def gf_represent(f: GeneralForm, n: int) -> List[TripleParams]:
        """
        Every valid pair with F(a, b, k, l) = n, sorted by b ascending.

        b runs while F(b + 1, b) <= n; for (l + 1)² = k that bound is linear in b,
        not sqrt(n).
        """
        require_odd(n)
        reps = []
        b = 1
        while _smallest_value(f, b) <= n:
            root = sqrt_exact(n + f.k * b * b)
            if root is not None:
                a = root - f.l * b
                if a > b and gcd(a, b) == 1 and (a - b) % 2 == 1:
                    reps.append(TripleParams(a=a, b=b))
            b += 1
        return reps

    @staticmethod
    def gf_residue_check(f: GeneralForm, p: TripleParams) -> int:
        return f.value_of(p.a, p.b) % 8

    @staticmethod
    def count_table(f: GeneralForm, bound: int) -> np.ndarray:
        """c[N] = number of valid pairs with F(a, b, k, l) = N, for every N < bound"""
        require_positive(bound, "bound")

        def a_limit(b: int) -> int:
            if _smallest_value(f, b) >= bound:
                return b
            return isqrt(bound - 1 + f.k * b * b) - f.l * b

        return tally_values(bound, a_limit, lambda a, b: f.value_of(a, b))

    @staticmethod
    def gf_uniqueness_report(f: GeneralForm, prime_bound: int) -> UniquenessReport:
        """
        Representation counts of every odd prime below the bound.

        Primes with two or more representations are listed as counterexamples;
        the report never raises on them.
        """
        if prime_bound < 3:
            raise ValueError(f"prime_bound must be at least 3, got {prime_bound}")
        counts = GenFormService.count_table(f, prime_bound)
        primes = odd_primes_below(prime_bound)
        per_prime = counts[primes]
        offenders = primes[per_prime >= 2].tolist()
        counterexamples = [
            (p, [rep.as_tuple() for rep in GenFormService.gf_represent(f, p)]) for p in offenders
        ]
        if counterexamples:
            logger.warning(f"{f.label()}: {len(counterexamples)} primes below {prime_bound} have several representations")
        return UniquenessReport(
            k=f.k,
            l=f.l,
            prime_bound=prime_bound,
            primes_checked=int(primes.size),
            primes_represented=int((per_prime >= 1).sum()),
            counterexamples=counterexamples,
        )
