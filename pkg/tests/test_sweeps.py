import pytest

from pythforms.core.config import get_settings
from pythforms.core.errors import OutOfRange, UnknownCheck
from pythforms.models.report import OutputFormat
from pythforms.services.sweep_service import SweepService
from pythforms.utils.render import render_report


@pytest.mark.parametrize(
    "check, bound",
    [
        ("uniqueness-two-squares", 20_000),
        ("uniqueness-minus-two", 20_000),
        ("uniqueness-plus-two", 20_000),
        ("uniqueness-segregated", 5_000),
        ("segregated-consistency", 3_000),
        ("count-law-two-squares", 10_000),
        ("count-law-minus-two", 5_000),
        ("count-law-plus-two", 5_000),
        ("count-law-odd-leg", 5_000),
        ("set-identities", 5_000),
        ("structural", 120),
        ("quadratic-residues", 3_000),
        ("prefilter", 80),
        ("gf-uniqueness", 5_000),
    ],
)
def test_exhaustive_checks_pass(check, bound):
    report = SweepService.run(check, bound=bound)
    assert report.status == "passed", report.counterexamples[:5]
    assert report.checked > 0
    assert report.bound == bound


@pytest.mark.parametrize("check", ["closure", "doubling"])
def test_sampled_checks_pass(check):
    report = SweepService.run(check, bound=40, samples=50, seed=7)
    assert report.passed, report.counterexamples[:5]


def test_sampled_checks_are_reproducible():
    first = SweepService.run("closure", bound=30, samples=20, seed=3)
    second = SweepService.run("closure", bound=30, samples=20, seed=3)
    assert first.checked == second.checked
    assert first.counterexamples == second.counterexamples


def test_grid_is_exploratory():
    report = SweepService.run("gf-grid", bound=500)
    assert report.exploratory
    assert report.status == "exploratory"
    assert report.passed


def test_published_tables_check_notes_omissions_and_annotation():
    report = SweepService.run("tables")
    assert report.passed, report.counterexamples
    assert len(report.notes) == 3
    all_note, all_one_note, annotation = report.notes
    assert all_note == "all triplets to r=105: the printed listing omits (73, 72) r=72"
    assert all_one_note == "all-one triplets to r=216: the printed listing omits (73, 72) r=72, (55, 4) r=204"
    assert annotation == "329 is printed as 7·43; computed factorization is 7·47"


@pytest.mark.parametrize("bound", [2, 3])
def test_closure_rejects_ranges_without_coprime_values(bound):
    with pytest.raises(OutOfRange):
        SweepService.run("closure", bound=bound, samples=5, seed=1)


def test_closure_smallest_workable_range():
    report = SweepService.run("closure", bound=4, samples=5, seed=1)
    assert report.passed, report.counterexamples
    assert report.checked == 16


@pytest.mark.parametrize(
    "check, bound",
    [
        ("uniqueness-segregated", 3_000),
        ("segregated-consistency", 2_000),
        ("gf-uniqueness", 3_000),
        ("gf-grid", 400),
        ("closure", 30),
        ("tables", None),
    ],
)
def test_reports_are_independent_of_workers(check, bound):
    single = SweepService.run(check, bound=bound, samples=20, seed=5, jobs=1)
    pooled = SweepService.run(check, bound=bound, samples=20, seed=5, jobs=3)
    for fmt in OutputFormat:
        assert render_report(pooled, fmt) == render_report(single, fmt)
    assert pooled.notes == single.notes


def test_unknown_check():
    with pytest.raises(UnknownCheck):
        SweepService.run("unknown-check")


def test_bad_bound():
    with pytest.raises(OutOfRange):
        SweepService.run("structural", bound=0)


def test_default_bounds_come_from_settings(monkeypatch):
    assert SweepService.default_bound("uniqueness-minus-two") == 1_000_000
    assert SweepService.default_bound("quadratic-residues") == 10_000
    monkeypatch.setenv("PYTHFORMS_STRUCTURAL_A_MAX", "50")
    get_settings.cache_clear()
    assert SweepService.default_bound("structural") == 50
    assert SweepService.run("structural").bound == 50


def test_registry_lists_every_check():
    assert set(SweepService.checks()) >= {
        "uniqueness-minus-two",
        "count-law-odd-leg",
        "structural",
        "closure",
        "doubling",
        "gf-uniqueness",
        "gf-grid",
        "tables",
    }
