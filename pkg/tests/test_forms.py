from math import gcd

import pytest

from pythforms.core.errors import EvenInput, KindMismatch, NotInSet, NotNormalizable
from pythforms.models.form import Degenerate, DegenerateReason, FormKind, RawPair, Representation, ResidueSet
from pythforms.services.form_service import FormService
from pythforms.services.triple_service import TripleService

MINUS = FormKind.MINUS_TWO
SQUARES = FormKind.TWO_SQUARES
PLUS = FormKind.PLUS_TWO


def rep(kind, a, b):
    return Representation(kind=kind, a=a, b=b)


@pytest.mark.parametrize(
    "kind, a, b, value",
    [(MINUS, 10, 7, 191), (SQUARES, 2, 1, 5), (PLUS, 25, 24, 1153)],
)
def test_eval(kind, a, b, value):
    assert FormService.eval(rep(kind, a, b)) == value


@pytest.mark.parametrize(
    "kind, n, pairs",
    [
        (MINUS, 7, [(2, 1)]),
        (PLUS, 9, [(3, 2)]),
        (MINUS, 119, [(10, 1), (8, 5)]),
        (SQUARES, 65, [(8, 1), (7, 4)]),
        (SQUARES, 7, []),
    ],
)
def test_represent(kind, n, pairs):
    assert [r.as_tuple() for r in FormService.represent(kind, n)] == pairs


def test_represent_even_input():
    with pytest.raises(EvenInput):
        FormService.represent(SQUARES, 4)


def test_classify():
    assert FormService.classify(49).sets == (ResidueSet.S17,)
    assert FormService.classify(49).distinct_primes == 1
    assert FormService.classify(27).set is ResidueSet.S13
    assert not FormService.classify(15).is_member
    assert FormService.classify(17).sets == (ResidueSet.S13, ResidueSet.S15, ResidueSet.S17)


def test_expected_count():
    assert FormService.expected_count(FormService.classify(119)) == 2
    assert FormService.expected_count(FormService.classify(5 * 13 * 17)) == 4
    with pytest.raises(NotInSet):
        FormService.expected_count(FormService.classify(15))


def test_descriptor():
    assert FormService.descriptor(SQUARES).discriminant == -4
    assert FormService.descriptor(SQUARES).automorphs == 4
    assert FormService.descriptor(MINUS).discriminant == 8
    assert FormService.descriptor(PLUS).automorphs == 2


def test_compose_worked_product():
    first, second = FormService.compose(MINUS, rep(MINUS, 2, 1), rep(MINUS, 3, 2))
    assert (first.as_tuple(), second.as_tuple()) == ((8, 11), (12, -1))
    assert first.value == second.value == 119
    assert FormService.normalize(MINUS, first).as_tuple() == (8, 5)
    assert FormService.normalize(MINUS, RawPair(kind=MINUS, u=12, v=-1)).as_tuple() == (10, 1)
    normalized = {FormService.normalize(MINUS, raw).as_tuple() for raw in (first, second)}
    assert normalized == {(8, 5), (10, 1)}


def test_compose_kind_mismatch():
    with pytest.raises(KindMismatch):
        FormService.compose(MINUS, rep(MINUS, 2, 1), rep(PLUS, 2, 1))


def test_compose_closure_small_pairs():
    params = [p.as_tuple() for p in TripleService.enumerate_params(9)]
    for kind in FormKind:
        for a, b in params:
            for c, d in params:
                p, q = rep(kind, a, b), rep(kind, c, d)
                if gcd(p.value, q.value) != 1:
                    continue
                product = p.value * q.value
                listed = FormService.represent(kind, product)
                for raw in FormService.compose(kind, p, q):
                    assert raw.value == product
                    norm = FormService.normalize(kind, raw)
                    assert isinstance(norm, Representation)
                    assert norm in listed


def test_normalize_cases():
    assert FormService.normalize(SQUARES, RawPair(kind=SQUARES, u=-1, v=2)).as_tuple() == (2, 1)
    assert FormService.normalize(PLUS, RawPair(kind=PLUS, u=-1, v=-2)).as_tuple() == (3, 2)

    square = FormService.normalize(SQUARES, RawPair(kind=SQUARES, u=3, v=0))
    assert isinstance(square, Degenerate) and square.reason is DegenerateReason.PERFECT_SQUARE
    twice = FormService.normalize(MINUS, RawPair(kind=MINUS, u=1, v=1))
    assert isinstance(twice, Degenerate) and twice.reason is DegenerateReason.TWICE_SQUARE


def test_normalize_rejects():
    with pytest.raises(NotNormalizable):
        FormService.normalize(MINUS, RawPair(kind=MINUS, u=0, v=1))
    with pytest.raises(NotNormalizable):
        FormService.normalize(SQUARES, RawPair(kind=SQUARES, u=6, v=3))
    with pytest.raises(KindMismatch):
        FormService.normalize(SQUARES, RawPair(kind=PLUS, u=3, v=1))


@pytest.mark.parametrize(
    "kind, a, b, pair",
    [(SQUARES, 2, 1, (3, 1)), (MINUS, 2, 1, (3, 1)), (PLUS, 3, 2, (5, 1)), (PLUS, 4, 1, (5, 3))],
)
def test_double(kind, a, b, pair):
    r = rep(kind, a, b)
    doubled = FormService.double(r)
    assert doubled.as_tuple() == pair
    assert doubled.is_primitive_odd_pair
    assert doubled.value == 2 * r.value


def test_doubling_is_a_bijection():
    for kind in FormKind:
        for n in range(3, 1500, 2):
            doubled = {FormService.double(r).as_tuple() for r in FormService.represent(kind, n)}
            assert {p.as_tuple() for p in FormService.represent_doubled(kind, 2 * n)} == doubled


def test_count_table_agrees_with_represent():
    for kind in FormKind:
        counts = FormService.count_table(kind, 3000)
        for n in range(3, 3000, 2):
            assert counts[n] == len(FormService.represent(kind, n)), (kind, n)
