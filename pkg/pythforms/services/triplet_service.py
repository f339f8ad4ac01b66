import heapq
import logging
from collections import Counter
from math import gcd
from typing import Iterable, List, Optional

from pythforms.core.pool import chunk_ranges, run_partitioned
from pythforms.models.triple import TripleParams
from pythforms.models.triplet import Flavor, FlavorFilter, GapStats, TripletRecord
from pythforms.utils.arith import is_prime
from pythforms.utils.validators import require_positive

logger = logging.getLogger(__name__)


def _decade(r: int) -> str:
    lo = 10 ** (len(str(r)) - 1)
    return f"{lo}-{10 * lo - 1}"


def _search_chunk(a_lo: int, a_hi: int, r_max: int, flavor_filter: FlavorFilter) -> List[TripletRecord]:
    """Triplets for a in [a_lo, a_hi), sorted by (r, p13)"""
    found = []
    for a in range(a_lo, a_hi):
        for b in range(1 + a % 2, a, 2):
            if b * (a - b) > r_max or gcd(a, b) != 1:
                continue
            params = TripleParams.model_construct(a=a, b=b)
            if not TripletService.necessary_condition(params, flavor_filter):
                continue
            record = TripletService.detect(params)
            if record is not None and flavor_filter.accepts(record.flavor):
                found.append(record)
    found.sort(key=lambda rec: rec.sort_key)
    return found


class TripletService:
    @staticmethod
    def detect(p: TripleParams) -> Optional[TripletRecord]:
        """A record when n13, n15 and n17 are all prime; n13, the smallest, is tested first"""
        a, b = p.a, p.b
        p13 = (a - b) ** 2 + 2 * b * b
        if not is_prime(p13):
            return None
        p15 = a * a + b * b
        if not is_prime(p15):
            return None
        p17 = (a + b) ** 2 - 2 * b * b
        if not is_prime(p17):
            return None
        return TripletRecord(
            params=p,
            r=b * (a - b),
            p13=p13,
            p15=p15,
            p17=p17,
            flavor=Flavor.from_residues(p13 % 8, p15 % 8, p17 % 8),
        )

    @staticmethod
    def necessary_condition(p: TripleParams, flavor_filter: Optional[FlavorFilter] = None) -> bool:
        """
        False only when the pair cannot produce a triplet of the requested flavor.

        Any triplet other than (3, 5, 7) has 3 | r; all-one triplets need r ≡ 0
        (mod 12) and none-one triplets need r ≡ 9 (mod 12).
        """
        flavor_filter = flavor_filter or FlavorFilter.ALL
        r = p.b * (p.a - p.b)
        first = (p.a, p.b) == (2, 1)
        if flavor_filter is FlavorFilter.ALL_ONE:
            return r % 12 == 0
        if flavor_filter is FlavorFilter.NONE_ONE:
            return r % 12 == 9 or first
        return r % 3 == 0 or first

    @staticmethod
    def search(r_max: int, flavor_filter: Optional[FlavorFilter] = None, jobs: int = 1) -> List[TripletRecord]:
        """
        Every triplet with inradius r <= r_max, sorted by (r, p13).

        r = b(a - b) >= a - 1, so a never needs to exceed r_max + 1. The a-range
        is cut into chunks, each chunk sorted locally, and the chunks merged.
        """
        require_positive(r_max, "r_max")
        flavor_filter = flavor_filter or FlavorFilter.ALL
        chunks = [
            (lo, hi, r_max, flavor_filter)
            for lo, hi in chunk_ranges(2, r_max + 2, max(1, jobs) * 4)
        ]
        logger.info(f"Searching triplets with r <= {r_max} ({flavor_filter.value}) in {len(chunks)} chunks")
        parts = run_partitioned(_search_chunk, chunks, jobs)
        return list(heapq.merge(*parts, key=lambda rec: rec.sort_key))

    @staticmethod
    def gap_stats(records: Iterable[TripletRecord]) -> GapStats:
        """
        Counts per flavor, the 2r mod 24 histogram and counts per band of r.

        all-one gaps must be ≡ 0 (mod 24) and none-one gaps ≡ 18 (mod 24), the
        (3, 5, 7) triplet aside; breaches are listed in `violations`.
        """
        per_flavor: Counter = Counter()
        residues: Counter = Counter()
        decades: Counter = Counter()
        violations = []
        total = 0
        for rec in records:
            total += 1
            per_flavor[rec.flavor.value] += 1
            residue = rec.gap % 24
            residues[residue] += 1
            decades[_decade(rec.r)] += 1
            if rec.params.as_tuple() == (2, 1):
                continue
            if rec.flavor is Flavor.ALL_ONE and residue != 0:
                violations.append(f"all-one triplet at {rec.params.as_tuple()} has gap {rec.gap} ≢ 0 (mod 24)")
            if rec.flavor is Flavor.NONE_ONE and residue != 18:
                violations.append(f"none-one triplet at {rec.params.as_tuple()} has gap {rec.gap} ≢ 18 (mod 24)")
        return GapStats(
            total=total,
            per_flavor={flavor.value: per_flavor.get(flavor.value, 0) for flavor in Flavor},
            gap_residues=dict(sorted(residues.items())),
            per_decade=dict(sorted(decades.items(), key=lambda item: int(item[0].split("-")[0]))),
            violations=violations,
        )
