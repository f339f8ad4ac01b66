"""
Exhaustive and sampled checks of the representation laws.

Each check takes (bound, samples, seed, jobs) and returns a SweepReport; the
registry maps CLI check names to the function and the Settings field holding
its default bound.
"""
import logging
import time
from functools import partial
from typing import Callable, Dict, List, NamedTuple, Optional, Tuple

import numpy as np

from pythforms.core.config import get_settings
from pythforms.core.errors import OutOfRange, PythformsError, UnknownCheck
from pythforms.core.pool import chunk_ranges, run_partitioned
from pythforms.models.form import FormKind, Representation
from pythforms.models.general import GeneralForm
from pythforms.models.report import Counterexample, SweepReport
from pythforms.models.triplet import FlavorFilter
from pythforms.services.form_service import FormService
from pythforms.services.genform_service import GenFormService
from pythforms.services.segregation_service import KINDS_BY_RESIDUE, SegregationService
from pythforms.services.table_service import TableService
from pythforms.services.triple_service import TripleService
from pythforms.services.triplet_service import TripletService
from pythforms.utils.arith import is_prime, is_qr_mod_p, squares_mod
from pythforms.utils.lattice import param_grid
from pythforms.utils.sieve import class_bits, odd_primes_below, residue_profile
from pythforms.utils.validators import require_positive

logger = logging.getLogger(__name__)

CheckFn = Callable[[int, int, int, int], SweepReport]

# Largest prime for which quadratic-residue facts are also confirmed by exhaustive squaring
EXHAUSTIVE_QR_LIMIT = 2000
UNIQUENESS_FORMS = ((8, 3), (32, 5), (2, 1))


class CheckEntry(NamedTuple):
    fn: CheckFn
    bound_setting: Optional[str]
    default_bound: int = 0


_CHECKS: Dict[str, CheckEntry] = {}


def register(name: str, bound_setting: Optional[str] = None, default_bound: int = 0):
    def wrap(fn: CheckFn) -> CheckFn:
        _CHECKS[name] = CheckEntry(fn, bound_setting, default_bound)
        return fn

    return wrap


def _failures(values: np.ndarray, counts: np.ndarray, expected: np.ndarray, what: str) -> List[Counterexample]:
    bad = np.flatnonzero(counts != expected)
    return [
        Counterexample(value=int(values[i]), detail=f"{int(counts[i])} {what}, expected {int(expected[i])}")
        for i in bad
    ]


# ---- representation counts -------------------------------------------------


def _uniqueness(kind: FormKind, bound: int, samples: int, seed: int, jobs: int) -> SweepReport:
    counts = FormService.count_table(kind, bound)
    primes = odd_primes_below(bound)
    expected = np.isin(primes % 8, sorted(kind.residue_set.residues)).astype(np.int64)
    return SweepReport(
        check=f"uniqueness-{kind.value}",
        bound=bound,
        checked=int(primes.size),
        counterexamples=_failures(primes, counts[primes], expected, f"{kind.value} representations"),
    )


def _count_law(kind: FormKind, bound: int, samples: int, seed: int, jobs: int) -> SweepReport:
    """2^(n-1) representations for members of the residue set, none for mixed integers."""
    counts = FormService.count_table(kind, bound)
    omega, class_mask, _ = residue_profile(bound)
    n = np.arange(3, bound, 2, dtype=np.int64)
    member = (class_mask[n] & ~class_bits(*kind.residue_set.residues)) == 0
    expected = np.where(member, np.left_shift(1, omega[n] - 1), 0)
    return SweepReport(
        check=f"count-law-{kind.value}",
        bound=bound,
        checked=int(n.size),
        counterexamples=_failures(n, counts[n], expected, f"{kind.value} representations"),
    )


for _kind in FormKind:
    register(f"uniqueness-{_kind.value}", "uniqueness_bound")(partial(_uniqueness, _kind))
    register(f"count-law-{_kind.value}", "count_law_bound")(partial(_count_law, _kind))


@register("count-law-odd-leg", "count_law_bound")
def _count_law_odd_leg(bound: int, samples: int, seed: int, jobs: int) -> SweepReport:
    counts = TripleService.odd_leg_count_table(bound)
    omega, _, _ = residue_profile(bound)
    n = np.arange(3, bound, 2, dtype=np.int64)
    expected = np.left_shift(1, omega[n] - 1)
    return SweepReport(
        check="count-law-odd-leg",
        bound=bound,
        checked=int(n.size),
        counterexamples=_failures(n, counts[n], expected, "odd-leg representations"),
    )


@register("set-identities", "segregated_sweep_bound")
def _set_identities(bound: int, samples: int, seed: int, jobs: int) -> SweepReport:
    """Every odd prime is represented by some form; any two forms share exactly the primes ≡ 1 (mod 8)."""
    primes = odd_primes_below(bound)
    hit = {kind: FormService.count_table(kind, bound)[primes] > 0 for kind in FormKind}
    one_mod_8 = primes % 8 == 1
    plus, squares, minus = hit[FormKind.PLUS_TWO], hit[FormKind.TWO_SQUARES], hit[FormKind.MINUS_TWO]
    identities = {
        "union covers every odd prime": plus | squares | minus,
        "plus-two ∩ two-squares": (plus & squares) == one_mod_8,
        "plus-two ∩ minus-two": (plus & minus) == one_mod_8,
        "two-squares ∩ minus-two": (squares & minus) == one_mod_8,
        "all three": (plus & squares & minus) == one_mod_8,
    }
    counterexamples = [
        Counterexample(value=int(primes[i]), detail=f"breaks {label}")
        for label, holds in identities.items()
        for i in np.flatnonzero(~holds)
    ]
    return SweepReport(check="set-identities", bound=bound, checked=int(primes.size), counterexamples=counterexamples)


# ---- segregated forms --------------------------------------------------------


def _segregated_chunk(primes: Tuple[int, ...], with_forms: bool) -> List[Tuple[int, str]]:
    found = []
    for p in primes:
        reps = SegregationService.seg_represent(p)
        kinds = tuple(rep.kind for rep in reps)
        if kinds != KINDS_BY_RESIDUE[p % 8]:
            found.append((p, f"forms {[k.value for k in kinds]}, expected one each of {[k.value for k in KINDS_BY_RESIDUE[p % 8]]}"))
            continue
        if not with_forms:
            continue
        for rep in reps:
            mapped = SegregationService.to_form_representation(rep)
            if mapped.value != p or mapped not in FormService.represent(mapped.kind, p):
                found.append((p, f"{rep.kind.value}({rep.s}, {rep.t}) maps to {mapped.kind.value}{mapped.as_tuple()}"))
    return found


def _segregated(check: str, with_forms: bool, bound: int, jobs: int) -> SweepReport:
    primes = odd_primes_below(bound).tolist()
    chunks = [
        (tuple(primes[lo:hi]), with_forms)
        for lo, hi in chunk_ranges(0, len(primes), max(1, jobs) * 4)
    ]
    found = [hit for part in run_partitioned(_segregated_chunk, chunks, jobs) for hit in part]
    return SweepReport(
        check=check,
        bound=bound,
        checked=len(primes),
        counterexamples=[Counterexample(value=p, detail=detail) for p, detail in found],
    )


@register("uniqueness-segregated", "segregated_sweep_bound")
def _uniqueness_segregated(bound: int, samples: int, seed: int, jobs: int) -> SweepReport:
    return _segregated("uniqueness-segregated", False, bound, jobs)


@register("segregated-consistency", "segregated_sweep_bound")
def _segregated_consistency(bound: int, samples: int, seed: int, jobs: int) -> SweepReport:
    return _segregated("segregated-consistency", True, bound, jobs)


# ---- structure of the triangle ----------------------------------------------


@register("structural", "structural_a_max")
def _structural(bound: int, samples: int, seed: int, jobs: int) -> SweepReport:
    """Identities, coprimality and residue predictions over every pair with a <= bound."""
    a, b = param_grid(bound)
    x, y, z, r = 2 * a * b, a * a - b * b, a * a + b * b, b * (a - b)
    n13 = (a - b) ** 2 + 2 * b * b
    n15 = a * a + b * b
    n17 = (a + b) ** 2 - 2 * b * b

    a_odd = a % 2 == 1
    even = np.where(b % 2 == 0, b, a)
    predicted = (
        np.where(a_odd, 1, 7),
        np.where(a_odd, 1, 3),
        np.where((even // 2) % 2 == 1, 5, 1),
    )
    failures = {
        "x² + y² != z²": x * x + y * y != z * z,
        "triple not primitive": np.gcd(np.gcd(x, y), z) != 1,
        "z != x + y - 2r": z != x + y - 2 * r,
        "form values differ from x + y - 4r, x + y": (n13 != x + y - 4 * r) | (n17 != x + y),
        "not an arithmetic progression with step 2r": (n15 - n13 != 2 * r) | (n17 - n15 != 2 * r),
        "form values not pairwise coprime": (np.gcd(n13, n15) != 1) | (np.gcd(n13, n17) != 1) | (np.gcd(n15, n17) != 1),
        "r shares a factor with a form value": (np.gcd(r, n13) != 1) | (np.gcd(r, n15) != 1) | (np.gcd(r, n17) != 1),
        "residues mod 8 differ from the parity prediction": (
            (n17 % 8 != predicted[0]) | (n13 % 8 != predicted[1]) | (n15 % 8 != predicted[2])
        ),
    }
    counterexamples = [
        Counterexample(value=int(n15[i]), detail=f"(a, b) = ({a[i]}, {b[i]}): {label}")
        for label, mask in failures.items()
        for i in np.flatnonzero(mask)
    ]
    return SweepReport(check="structural", bound=bound, checked=int(a.size), counterexamples=counterexamples)


# ---- composition and doubling -----------------------------------------------


def _sample_pairs(grid: Tuple[np.ndarray, np.ndarray], rng: np.random.Generator, size: int) -> List[Tuple[int, int]]:
    a, b = grid
    if a.size == 0:
        raise OutOfRange("no generator pairs to sample from; the bound must be at least 2")
    picks = rng.integers(0, a.size, size=size)
    return [(int(a[i]), int(b[i])) for i in picks]


def _coprime_draws(
    kind: FormKind, grid: Tuple[np.ndarray, np.ndarray], rng: np.random.Generator, size: int
) -> List[Tuple[Tuple[int, int], Tuple[int, int]]]:
    """
    `size` draws of two pairs whose form values are coprime.

    The first pair is uniform over the pairs that have a coprime partner, the
    second uniform over its partners. A pick without partners leaves the pool for
    good, so the loop ends or the pool runs dry.
    """
    a, b = grid
    values = kind.value_of(a, b)
    open_picks = np.ones(a.size, dtype=bool)
    draws = []
    while len(draws) < size:
        pool = np.flatnonzero(open_picks)
        if pool.size == 0:
            raise OutOfRange(f"no two {kind.value} values in the sampled range are coprime")
        i = int(pool[rng.integers(0, pool.size)])
        partners = np.flatnonzero(np.gcd(values, values[i]) == 1)
        if partners.size == 0:
            open_picks[i] = False
            continue
        j = int(partners[rng.integers(0, partners.size)])
        draws.append(((int(a[i]), int(b[i])), (int(a[j]), int(b[j]))))
    return draws


@register("closure", "sample_a_max")
def _closure(bound: int, samples: int, seed: int, jobs: int) -> SweepReport:
    """
    Compose random pairs of representations with coprime values and normalize both results.

    Also replays the worked product 7 · 17 = 119, which must give exactly
    {(8, 5), (10, 1)} under minus-two.
    """
    rng = np.random.default_rng(seed)
    grid = param_grid(bound)
    counterexamples = []
    checked = 0

    for kind in FormKind:
        for (a, b), (c, d) in _coprime_draws(kind, grid, rng, samples):
            rep_p = Representation(kind=kind, a=a, b=b)
            rep_q = Representation(kind=kind, a=c, b=d)
            product = rep_p.value * rep_q.value
            for raw in FormService.compose(kind, rep_p, rep_q):
                try:
                    norm = FormService.normalize(kind, raw)
                except PythformsError as exc:
                    norm = exc
                if not isinstance(norm, Representation) or norm.value != product:
                    counterexamples.append(
                        Counterexample(
                            value=product,
                            detail=f"{kind.value} {rep_p.as_tuple()} x {rep_q.as_tuple()}: {raw.as_tuple()} normalizes to {norm}",
                        )
                    )
        checked += samples

    worked = FormService.compose(
        FormKind.MINUS_TWO,
        Representation(kind=FormKind.MINUS_TWO, a=2, b=1),
        Representation(kind=FormKind.MINUS_TWO, a=3, b=2),
    )
    pairs = {FormService.normalize(FormKind.MINUS_TWO, raw).as_tuple() for raw in worked}
    if pairs != {(8, 5), (10, 1)}:
        counterexamples.append(Counterexample(value=119, detail=f"worked product gives {sorted(pairs)}"))
    return SweepReport(check="closure", bound=bound, checked=checked + 1, counterexamples=counterexamples)


@register("doubling", "sample_a_max")
def _doubling(bound: int, samples: int, seed: int, jobs: int) -> SweepReport:
    """Doubled pairs are odd, coprime, worth 2N, and match a brute-force listing for 2N."""
    rng = np.random.default_rng(seed)
    grid = param_grid(bound)
    counterexamples = []
    for kind in FormKind:
        for a, b in _sample_pairs(grid, rng, samples):
            rep = Representation(kind=kind, a=a, b=b)
            n = rep.value
            doubled = FormService.double(rep)
            if not (doubled.is_primitive_odd_pair and doubled.u > doubled.v > 0 and doubled.value == 2 * n):
                counterexamples.append(
                    Counterexample(value=n, detail=f"{kind.value}{rep.as_tuple()} doubles to {doubled.as_tuple()}")
                )
                continue
            expected = {FormService.double(r).as_tuple() for r in FormService.represent(kind, n)}
            brute = {pair.as_tuple() for pair in FormService.represent_doubled(kind, 2 * n)}
            if brute != expected or (is_prime(n) and len(brute) != 1):
                counterexamples.append(
                    Counterexample(value=n, detail=f"{kind.value}: 2N has pairs {sorted(brute)}, doubling gives {sorted(expected)}")
                )
    return SweepReport(check="doubling", bound=bound, checked=samples * len(FormKind), counterexamples=counterexamples)


# ---- generalized forms --------------------------------------------------------


def _gf_chunk(k: int, l: int, bound: int) -> Tuple[int, List[Tuple[int, List[Tuple[int, int]]]]]:  # noqa: E741
    report = GenFormService.gf_uniqueness_report(GeneralForm(k=k, l=l), bound)
    return report.primes_checked, report.counterexamples


def _gf_counterexamples(forms: List[GeneralForm], bound: int, jobs: int) -> Tuple[int, List[Counterexample]]:
    results = run_partitioned(_gf_chunk, [(f.k, f.l, bound) for f in forms], jobs)
    checked = 0
    counterexamples = []
    for f, (primes_checked, found) in zip(forms, results):
        checked += primes_checked
        counterexamples.extend(
            Counterexample(value=p, detail=f"{f.label()}: {len(reps)} representations {reps}") for p, reps in found
        )
    return checked, counterexamples


@register("gf-uniqueness", "general_bound")
def _gf_uniqueness(bound: int, samples: int, seed: int, jobs: int) -> SweepReport:
    forms = [GeneralForm(k=k, l=l) for k, l in UNIQUENESS_FORMS]
    checked, counterexamples = _gf_counterexamples(forms, bound, jobs)
    return SweepReport(check="gf-uniqueness", bound=bound, checked=checked, counterexamples=counterexamples)


@register("gf-grid", "general_grid_bound")
def _gf_grid(bound: int, samples: int, seed: int, jobs: int) -> SweepReport:
    """Every admissible (k, l) on the configured grid; findings are reported, never failed."""
    settings = get_settings()
    forms = [
        GeneralForm(k=k, l=l)
        for l in range(1, settings.general_grid_l_max + 1)  # noqa: E741
        for k in range(1, settings.general_grid_k_max + 1)
        if (l + 1) ** 2 >= k
    ]
    checked, counterexamples = _gf_counterexamples(forms, bound, jobs)
    return SweepReport(
        check="gf-grid",
        bound=bound,
        checked=checked,
        counterexamples=counterexamples,
        exploratory=True,
        notes=[f"{len(forms)} forms with k <= {settings.general_grid_k_max}, l <= {settings.general_grid_l_max}"],
    )


# ---- arithmetic facts and the triplet prefilter ----------------------------------


@register("quadratic-residues", default_bound=10_000)
def _quadratic_residues(bound: int, samples: int, seed: int, jobs: int) -> SweepReport:
    """2 is a square mod p iff p ≡ ±1 (mod 8); -2 iff p ≡ 1, 3 (mod 8); -1 iff p ≡ 1 (mod 4)."""
    counterexamples = []
    primes = odd_primes_below(bound).tolist()
    for p in primes:
        facts = {
            2: p % 8 in (1, 7),
            -2: p % 8 in (1, 3),
            -1: p % 4 == 1,
        }
        squares = set(squares_mod(p)) if p < EXHAUSTIVE_QR_LIMIT else None
        for c, expected in facts.items():
            euler = is_qr_mod_p(c, p)
            if euler != expected or (squares is not None and (c % p in squares) != expected):
                counterexamples.append(Counterexample(value=p, detail=f"{c} residue test gave {euler}, expected {expected}"))
    return SweepReport(check="quadratic-residues", bound=bound, checked=len(primes), counterexamples=counterexamples)


@register("prefilter", default_bound=1000)
def _prefilter(bound: int, samples: int, seed: int, jobs: int) -> SweepReport:
    """Pairs rejected by the prefilter never carry a triplet of the rejected flavor."""
    counterexamples = []
    checked = 0
    filters = (FlavorFilter.ALL, FlavorFilter.ALL_ONE, FlavorFilter.NONE_ONE)
    for p in TripleService.enumerate_params(bound):
        checked += 1
        rejected = [f for f in filters if not TripletService.necessary_condition(p, f)]
        if not rejected:
            continue
        record = TripletService.detect(p)
        if record is None:
            continue
        for f in rejected:
            if f.accepts(record.flavor):
                counterexamples.append(
                    Counterexample(value=record.p15, detail=f"{p.as_tuple()} rejected for {f.value} but is {record.flavor.value}")
                )
    return SweepReport(check="prefilter", bound=bound, checked=checked, counterexamples=counterexamples)


@register("tables")
def _tables(bound: int, samples: int, seed: int, jobs: int) -> SweepReport:
    checked, mismatches, notes = TableService.compare_published(jobs)
    return SweepReport(check="tables", bound=bound, checked=checked, counterexamples=mismatches, notes=notes)


class SweepService:
    @staticmethod
    def checks() -> List[str]:
        return sorted(_CHECKS)

    @staticmethod
    def default_bound(name: str) -> int:
        entry = SweepService._entry(name)
        if entry.bound_setting is None:
            return entry.default_bound
        return getattr(get_settings(), entry.bound_setting)

    @staticmethod
    def _entry(name: str) -> CheckEntry:
        if name not in _CHECKS:
            raise UnknownCheck(name, _CHECKS)
        return _CHECKS[name]

    @staticmethod
    def run(
        name: str,
        bound: Optional[int] = None,
        samples: Optional[int] = None,
        seed: Optional[int] = None,
        jobs: int = 1,
    ) -> SweepReport:
        """Run one named check, filling unset arguments from Settings"""
        entry = SweepService._entry(name)
        settings = get_settings()
        bound = SweepService.default_bound(name) if bound is None else require_positive(bound, "bound")
        samples = settings.sample_size if samples is None else require_positive(samples, "samples")
        seed = settings.seed if seed is None else seed

        logger.info(f"Starting {name} (bound={bound}, samples={samples}, seed={seed}, jobs={jobs})")
        started = time.perf_counter()
        report = entry.fn(bound, samples, seed, jobs)
        report.elapsed = time.perf_counter() - started

        if report.counterexamples and not report.exploratory:
            logger.warning(f"{name}: {len(report.counterexamples)} counterexamples")
        logger.info(f"Finished {name}: {report.status}, {report.checked} checked in {report.elapsed:.2f}s")
        return report
