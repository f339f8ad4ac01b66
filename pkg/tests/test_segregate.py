import pytest

from pythforms.core import published_tables as published
from pythforms.core.errors import EvenInput, NotPrime
from pythforms.models.form import FormKind
from pythforms.models.segregated import SegregatedKind, SegregatedRep, SegregatedSet
from pythforms.services.form_service import FormService
from pythforms.services.segregation_service import SegregationService
from pythforms.services.triple_service import TripleService
from pythforms.utils.sieve import odd_primes_below


def test_seg_eval_and_render():
    rep = SegregatedRep(kind=SegregatedKind.F7, s=3, t=1)
    assert SegregationService.seg_eval(rep) == 23
    assert SegregatedKind.F7.render(3, 1) == "23 = 3² + 4·3·1 + 2·1²"
    assert SegregatedKind.F5.render(1, 3) == "37 = 1² + 4·3²"


def test_rep_parity_rules():
    with pytest.raises(ValueError):
        SegregatedRep(kind=SegregatedKind.F3, s=1, t=2)
    with pytest.raises(ValueError):
        SegregatedRep(kind=SegregatedKind.F1A, s=2, t=1)
    assert SegregatedRep(kind=SegregatedKind.F1A, s=3, t=2).value == 41


def test_seg_represent():
    assert [(r.kind, r.s, r.t) for r in SegregationService.seg_represent(23)] == [(SegregatedKind.F7, 3, 1)]
    assert [(r.kind.value, r.s, r.t) for r in SegregationService.seg_represent(17)] == [
        ("f1a", 3, 1),
        ("f1b", 1, 1),
        ("f1c", 1, 1),
    ]


def test_seg_represent_rejects():
    with pytest.raises(NotPrime):
        SegregationService.seg_represent(9)
    with pytest.raises(EvenInput):
        SegregationService.seg_represent(4)


def test_primes_below_hundred_match_printed_table():
    computed = {
        p: [(r.kind.value, r.s, r.t) for r in SegregationService.seg_represent(p)]
        for p in odd_primes_below(100).tolist()
    }
    assert computed == published.SEGREGATED


def test_each_prime_has_one_rep_per_form():
    for p in odd_primes_below(5000).tolist():
        kinds = [r.kind.residue for r in SegregationService.seg_represent(p)]
        assert kinds == ([1, 1, 1] if p % 8 == 1 else [p % 8])


@pytest.mark.parametrize(
    "a, b, residues",
    [(2, 1, (7, 3, 5)), (3, 2, (1, 1, 5)), (5, 4, (1, 1, 1)), (4, 1, (7, 3, 1))],
)
def test_residue_prediction(a, b, residues):
    params = TripleService.make_params(a, b)
    assert SegregationService.residue_prediction(params).as_tuple() == residues
    fv = TripleService.forms_from_params(params)
    assert (fv.n17 % 8, fv.n13 % 8, fv.n15 % 8) == residues


def test_seg_classify():
    m27 = SegregationService.seg_classify(27)
    assert (m27.set, m27.exponent_sum, m27.predicted_residue) == (SegregatedSet.S3, 3, 3)
    m49 = SegregationService.seg_classify(49)
    assert (m49.set, m49.predicted_residue, m49.residue) == (SegregatedSet.S7, 1, 1)
    assert SegregationService.seg_classify(15).set is None
    assert SegregationService.seg_classify(15).predicted_residue is None


def test_parity_rule_over_odd_integers():
    for n in range(3, 5000, 2):
        membership = SegregationService.seg_classify(n)
        if membership.set is not None:
            assert membership.predicted_residue == n % 8


@pytest.mark.parametrize(
    "kind, s, t, form, pair",
    [
        (SegregatedKind.F7, 3, 1, FormKind.MINUS_TWO, (4, 1)),
        (SegregatedKind.F3, 1, 1, FormKind.PLUS_TWO, (2, 1)),
        (SegregatedKind.F5, 1, 1, FormKind.TWO_SQUARES, (2, 1)),
        (SegregatedKind.F1B, 1, 1, FormKind.TWO_SQUARES, (4, 1)),
        (SegregatedKind.F1A, 3, 1, FormKind.PLUS_TWO, (5, 2)),
        (SegregatedKind.F1C, 1, 1, FormKind.MINUS_TWO, (3, 2)),
    ],
)
def test_to_form_representation(kind, s, t, form, pair):
    seg = SegregatedRep(kind=kind, s=s, t=t)
    mapped = SegregationService.to_form_representation(seg)
    assert (mapped.kind, mapped.as_tuple()) == (form, pair)
    assert mapped.value == seg.value
    assert mapped in FormService.represent(form, seg.value)
