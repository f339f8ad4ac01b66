from pythforms.core.ledger import list_runs, record_run
from pythforms.models.report import Counterexample, SweepReport


def test_record_and_list_runs(ledger_path):
    first = record_run(SweepReport(check="structural", bound=100, checked=10), ledger_path)
    second = record_run(
        SweepReport(
            check="closure",
            bound=40,
            checked=5,
            counterexamples=[Counterexample(value=119, detail="example")],
        ),
        ledger_path,
    )
    assert second > first

    runs = list_runs(ledger_path)
    assert [run["check"] for run in runs] == ["structural", "closure"]
    assert runs[0]["status"] == "passed"
    assert runs[1]["status"] == "failed"
    assert runs[1]["counterexamples"] == 1

    only = list_runs(ledger_path, check="closure")
    assert len(only) == 1 and only[0]["id"] == second


def test_runs_are_stamped_in_utc(ledger_path):
    record_run(SweepReport(check="structural", bound=100), ledger_path)
    assert list_runs(ledger_path)[0]["finished_at"].endswith("+00:00")
