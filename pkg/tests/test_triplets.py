import pytest

from pythforms.core import published_tables as published
from pythforms.models.triplet import Flavor, FlavorFilter
from pythforms.services.triple_service import TripleService
from pythforms.services.triplet_service import TripletService


def rows(records):
    return [(r.params.a, r.params.b, r.r, r.p13, r.p15, r.p17) for r in records]


def test_detect():
    record = TripletService.detect(TripleService.make_params(4, 1))
    assert (record.p13, record.p15, record.p17, record.r) == (11, 17, 23, 3)
    assert record.flavor is Flavor.MIXED

    record = TripletService.detect(TripleService.make_params(25, 24))
    assert (record.p13, record.p15, record.p17, record.r) == (1153, 1201, 1249, 24)
    assert record.flavor is Flavor.ALL_ONE

    assert TripletService.detect(TripleService.make_params(3, 2)) is None


def test_search_small_radius():
    assert [r.params.as_tuple() for r in TripletService.search(9)] == [(2, 1), (4, 1), (5, 2), (10, 9)]


@pytest.mark.parametrize(
    "r_max, flavor_filter, expected",
    [
        (105, FlavorFilter.ALL, published.TRIPLETS),
        (216, FlavorFilter.ALL_ONE, published.ALL_ONE_TRIPLETS),
        (273, FlavorFilter.NONE_ONE, published.NONE_ONE_TRIPLETS),
    ],
)
def test_search_contains_printed_listings_in_order(r_max, flavor_filter, expected):
    found = rows(TripletService.search(r_max, flavor_filter))
    remaining = iter(found)
    assert all(row in remaining for row in expected)


def test_search_finds_triplets_the_printed_listings_omit():
    extra = [row for row in rows(TripletService.search(105)) if row not in published.TRIPLETS]
    assert extra == [(73, 72, 72, 10369, 10513, 10657)]

    all_one = rows(TripletService.search(216, FlavorFilter.ALL_ONE))
    assert [row for row in all_one if row not in published.ALL_ONE_TRIPLETS] == [
        (73, 72, 72, 10369, 10513, 10657),
        (55, 4, 204, 2633, 3041, 3449),
    ]
    assert rows(TripletService.search(273, FlavorFilter.NONE_ONE)) == published.NONE_ONE_TRIPLETS


def test_search_is_independent_of_workers():
    assert rows(TripletService.search(150, jobs=2)) == rows(TripletService.search(150, jobs=1))


@pytest.mark.parametrize(
    "a, b, flavor_filter, expected",
    [
        (3, 2, None, False),
        (2, 1, None, True),
        (31, 4, FlavorFilter.ALL_ONE, True),
        (4, 1, FlavorFilter.ALL_ONE, False),
        (10, 9, FlavorFilter.NONE_ONE, True),
        (2, 1, FlavorFilter.NONE_ONE, True),
    ],
)
def test_necessary_condition(a, b, flavor_filter, expected):
    assert TripletService.necessary_condition(TripleService.make_params(a, b), flavor_filter) is expected


def test_prefilter_never_drops_a_triplet():
    for p in TripleService.enumerate_params(150):
        record = TripletService.detect(p)
        if record is None:
            continue
        for flavor_filter in FlavorFilter:
            if flavor_filter.accepts(record.flavor):
                assert TripletService.necessary_condition(p, flavor_filter)


def test_gap_stats():
    all_one = TripletService.search(216, FlavorFilter.ALL_ONE)
    stats = TripletService.gap_stats(all_one)
    assert sorted(r.gap for r in all_one) == [48, 120, 144, 216, 264, 408, 432]
    assert stats.gap_residues == {0: 7}
    assert stats.per_flavor["all-one"] == 7
    assert stats.per_decade == {"10-99": 3, "100-999": 4}
    assert not stats.violations

    none_one = TripletService.gap_stats(TripletService.search(273, FlavorFilter.NONE_ONE))
    assert none_one.gap_residues == {2: 1, 18: 9}
    assert not none_one.violations


def test_gap_stats_empty_and_bands():
    empty = TripletService.gap_stats([])
    assert empty.total == 0
    assert set(empty.per_flavor.values()) == {0}
    assert TripletService.gap_stats(TripletService.search(9)).per_decade == {"1-9": 4}
