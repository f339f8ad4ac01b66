import pytest
from pydantic import ValidationError

from pythforms.core import published_tables as published
from pythforms.core.errors import EvenInput
from pythforms.models.form import FormKind
from pythforms.services.genform_service import GenFormService
from pythforms.services.triple_service import TripleService
from pythforms.utils.arith import factorize

TABLE_FORMS = [GenFormService.make_form(k, l) for k, l in published.GENERAL_FORMS]


@pytest.mark.parametrize("k, l, a, b, value", [(8, 3, 3, 2, 49), (32, 5, 2, 1, 17), (8, 3, 10, 3, 289)])
def test_gf_eval(k, l, a, b, value):  # noqa: E741
    assert GenFormService.gf_eval(GenFormService.make_form(k, l), TripleService.make_params(a, b)) == value


def test_positivity_condition():
    with pytest.raises(ValidationError):
        GenFormService.make_form(17, 3)
    assert GenFormService.make_form(16, 3).slack == 0


@pytest.mark.parametrize(
    "k, l, n, pairs",
    [(8, 3, 17, [(2, 1)]), (8, 3, 161, [(10, 1), (5, 4)]), (32, 5, 15, [])],
)
def test_gf_represent(k, l, n, pairs):  # noqa: E741
    reps = GenFormService.gf_represent(GenFormService.make_form(k, l), n)
    assert [p.as_tuple() for p in reps] == pairs


def test_gf_represent_even_input():
    with pytest.raises(EvenInput):
        GenFormService.gf_represent(GenFormService.make_form(8, 3), 16)


@pytest.mark.parametrize("k, l", [(8, 3), (32, 5), (4, 1), (2, 1), (9, 2)])
def test_count_table_agrees_with_represent(k, l):  # noqa: E741
    f = GenFormService.make_form(k, l)
    counts = GenFormService.count_table(f, 3000)
    for n in range(3, 3000, 2):
        assert counts[n] == len(GenFormService.gf_represent(f, n)), n


def test_uniqueness_reports():
    for k, l in [(8, 3), (2, 1)]:  # noqa: E741
        report = GenFormService.gf_uniqueness_report(GenFormService.make_form(k, l), 10_000)
        assert report.unique
        assert report.primes_represented > 0

    trivial = GenFormService.gf_uniqueness_report(GenFormService.make_form(1, 1), 100)
    assert trivial.primes_checked == 24
    assert trivial.primes_represented == 0


@pytest.mark.parametrize("k, l, a, b, residue", [(8, 3, 4, 1, 1), (32, 5, 8, 7, 1), (2, 1, 4, 1, 7)])
def test_gf_residue_check(k, l, a, b, residue):  # noqa: E741
    f = GenFormService.make_form(k, l)
    assert GenFormService.gf_residue_check(f, TripleService.make_params(a, b)) == residue


def test_specializes_to_minus_two():
    f = GenFormService.make_form(2, 1)
    for p in TripleService.enumerate_params(120):
        assert GenFormService.gf_eval(f, p) == FormKind.MINUS_TWO.value_of(p.a, p.b)


def test_table_forms_values():
    for p in TripleService.enumerate_params(20):
        for f in TABLE_FORMS:
            value = GenFormService.gf_eval(f, p)
            assert value % 8 == 1
            assert all(q % 8 in (1, 7) for q in factorize(value).primes)
        # (a + 3b)² - 8b² restated as a'² - 2b'²
        assert GenFormService.gf_eval(TABLE_FORMS[0], p) == (p.a + 3 * p.b) ** 2 - 2 * (2 * p.b) ** 2


def test_printed_general_table_values():
    for a, b, v83, v325 in published.GENERAL_VALUES:
        params = TripleService.make_params(a, b)
        assert [GenFormService.gf_eval(f, params) for f in TABLE_FORMS] == [v83, v325]
