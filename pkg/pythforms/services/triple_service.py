import logging
from itertools import combinations
from math import gcd, isqrt, prod
from typing import Iterator, List

import numpy as np

from pythforms.models.triple import FormValues, PrimitiveTriple, TripleParams
from pythforms.utils.arith import factorize
from pythforms.utils.lattice import tally_values
from pythforms.utils.validators import check_params, require_odd, require_positive

logger = logging.getLogger(__name__)


class TripleService:
    @staticmethod
    def make_params(a: int, b: int) -> TripleParams:
        """Validate a generator pair, raising the first violated constraint"""
        check_params(a, b)
        return TripleParams(a=a, b=b)

    @staticmethod
    def triple_from_params(p: TripleParams) -> PrimitiveTriple:
        a, b = p.a, p.b
        return PrimitiveTriple(x=2 * a * b, y=a * a - b * b, z=a * a + b * b, r=b * (a - b))

    @staticmethod
    def forms_from_params(p: TripleParams) -> FormValues:
        a, b = p.a, p.b
        return FormValues(
            n13=(a - b) ** 2 + 2 * b * b,
            n15=a * a + b * b,
            n17=(a + b) ** 2 - 2 * b * b,
        )

    @staticmethod
    def forms_from_triple(t: PrimitiveTriple) -> FormValues:
        """The same three values read off the triangle: x+y-4r, x+y-2r, x+y"""
        return FormValues(n13=t.x + t.y - 4 * t.r, n15=t.x + t.y - 2 * t.r, n17=t.x + t.y)

    @staticmethod
    def enumerate_params(a_max: int) -> Iterator[TripleParams]:
        """Every valid pair with 2 <= a <= a_max, ordered by (a, b)"""
        if a_max < 2:
            raise ValueError(f"a_max must be at least 2, got {a_max}")
        for a in range(2, a_max + 1):
            for b in range(1 + a % 2, a, 2):
                if gcd(a, b) == 1:
                    yield TripleParams.model_construct(a=a, b=b)

    @staticmethod
    def check_pairwise_coprime(fv: FormValues) -> bool:
        return gcd(fv.n13, fv.n15) == 1 and gcd(fv.n13, fv.n17) == 1 and gcd(fv.n15, fv.n17) == 1

    @staticmethod
    def represent_odd_leg(n: int) -> List[TripleParams]:
        """
        All pairs with a² - b² = n, sorted by b ascending.

        Each coprime split n = d·e with d < e gives a = (d + e)/2, b = (e - d)/2;
        an odd n with k distinct primes has 2^(k-1) such splits.
        """
        require_odd(n)
        fact = factorize(n)
        powers = [p**k for p, k in fact.factors]
        reps = []
        for size in range(len(powers) + 1):
            for chosen in combinations(powers, size):
                d = prod(chosen)
                e = n // d
                if d < e:
                    reps.append(TripleParams(a=(d + e) // 2, b=(e - d) // 2))
        reps.sort(key=lambda p: p.b)
        return reps


    @staticmethod
    def odd_leg_count_table(bound: int) -> np.ndarray:
        """c[N] = number of valid pairs with a² - b² = N, for every N < bound"""
        require_positive(bound, "bound")
        return tally_values(
            bound,
            lambda b: isqrt(bound - 1 + b * b),
            lambda a, b: a * a - b * b,
        )
