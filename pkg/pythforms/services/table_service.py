import logging
from typing import Dict, List, Optional, Sequence, Tuple

from pythforms.core import published_tables as published
from pythforms.models.form import FormKind
from pythforms.models.general import GeneralForm
from pythforms.models.report import Counterexample, TableData
from pythforms.models.segregated import SegregatedKind
from pythforms.models.triplet import FlavorFilter, TripletRecord
from pythforms.services.form_service import FormService
from pythforms.services.genform_service import GenFormService
from pythforms.services.segregation_service import SegregationService
from pythforms.services.triple_service import TripleService
from pythforms.services.triplet_service import TripletService
from pythforms.utils.arith import factorize
from pythforms.utils.render import annotate, factor_pairs
from pythforms.utils.sieve import odd_primes_below
from pythforms.utils.validators import require_odd

logger = logging.getLogger(__name__)

SEGREGATED_HEADERS = {
    SegregatedKind.F3: "s² + 2t²",
    SegregatedKind.F5: "s² + 4t²",
    SegregatedKind.F7: "s² + 4st + 2t²",
    SegregatedKind.F1A: "s² + 8t²",
    SegregatedKind.F1B: "s² + 16t²",
    SegregatedKind.F1C: "s² + 8st + 8t²",
}

TRIPLET_COLUMNS = ["a", "b", "r", "p13", "p15", "p17", "flavor"]


def _form_column(f: GeneralForm) -> str:
    return f"f_{f.k}_{f.l}"


def _is_subsequence(rows: Sequence[tuple], found: Sequence[tuple]) -> bool:
    remaining = iter(found)
    return all(row in remaining for row in rows)


class TableService:
    @staticmethod
    def triples_table(a_max: int) -> TableData:
        """One row per generator pair with a <= a_max; composite form values annotated."""
        columns = ["a", "b", "x", "y", "z", "r", "n13", "n15", "n17"]
        records, display = [], []
        for p in TripleService.enumerate_params(a_max):
            t = TripleService.triple_from_params(p)
            fv = TripleService.forms_from_params(p)
            row = [p.a, p.b, t.x, t.y, t.z, t.r, fv.n13, fv.n15, fv.n17]
            record = dict(zip(columns, row))
            for name, value in zip(("n13", "n15", "n17"), fv.as_tuple()):
                record[f"{name}_factors"] = factor_pairs(value)
            records.append(record)
            display.append([str(v) for v in row[:6]] + [annotate(v) for v in fv.as_tuple()])
        return TableData(
            columns=columns,
            records=records,
            display=display,
            title=f"Primitive triples and their form values, a <= {a_max}",
        )

    @staticmethod
    def segregated_table(bound: int) -> TableData:
        """
        Segregated representations of the odd primes below `bound`.

        Markdown lays the six forms side by side, one column each, primes ascending
        within a column; csv and json-lines carry one (p, kind, s, t) row per rep.
        """
        columns_by_kind: Dict[SegregatedKind, List[str]] = {kind: [] for kind in SegregatedKind}
        records = []
        for p in odd_primes_below(bound).tolist():
            for rep in SegregationService.seg_represent(p):
                records.append({"p": p, "kind": rep.kind.value, "s": rep.s, "t": rep.t})
                columns_by_kind[rep.kind].append(rep.kind.render(rep.s, rep.t))

        height = max((len(cells) for cells in columns_by_kind.values()), default=0)
        display = [
            [cells[i] if i < len(cells) else "" for cells in columns_by_kind.values()]
            for i in range(height)
        ]
        return TableData(
            columns=["p", "kind", "s", "t"],
            records=records,
            headers=[SEGREGATED_HEADERS[kind] for kind in SegregatedKind],
            display=display,
            title=f"Segregated representations of the odd primes below {bound}",
        )

    @staticmethod
    def representation_table(
        kind: str,
        n: Optional[int] = None,
        bound: Optional[int] = None,
        form: Optional[GeneralForm] = None,
    ) -> TableData:
        """
        Representations of a single odd N, or of every odd prime below a bound.

        `kind` is a FormKind value, "segregated" or "general" (which needs `form`).
        """
        if kind == "segregated" and n is None:
            return TableService.segregated_table(bound)

        targets = [n] if n is not None else odd_primes_below(bound).tolist()
        records = []
        if kind == "segregated":
            columns = ["n", "kind", "s", "t"]
            for value in targets:
                for rep in SegregationService.seg_represent(value):
                    records.append({"n": value, "kind": rep.kind.value, "s": rep.s, "t": rep.t})
        elif kind == "general":
            columns = ["n", "k", "l", "a", "b"]
            for value in targets:
                for p in GenFormService.gf_represent(form, value):
                    records.append({"n": value, "k": form.k, "l": form.l, "a": p.a, "b": p.b})
        else:
            columns = ["n", "kind", "a", "b"]
            form_kind = FormKind(kind)
            for value in targets:
                for rep in FormService.represent(form_kind, value):
                    records.append({"n": value, "kind": form_kind.value, "a": rep.a, "b": rep.b})
        return TableData(columns=columns, records=records)

    @staticmethod
    def classify_table(n: Optional[int] = None, bound: Optional[int] = None) -> TableData:
        """Factorization and set memberships of one odd N or every odd N in [3, bound)."""
        columns = ["n", "factorization", "pythagorean_sets", "segregated_set", "residue", "predicted_residue"]
        targets = [require_odd(n)] if n is not None else range(3, bound, 2)
        records = []
        for value in targets:
            membership = FormService.classify(value)
            segregated = SegregationService.seg_classify(value)
            records.append(
                {
                    "n": value,
                    "factorization": factorize(value).annotation(),
                    "pythagorean_sets": "+".join(s.value for s in membership.sets) or "-",
                    "segregated_set": segregated.set.value if segregated.set else "-",
                    "residue": segregated.residue,
                    "predicted_residue": segregated.predicted_residue if segregated.predicted_residue else "-",
                    "factors": factor_pairs(value),
                }
            )
        return TableData(columns=columns, records=records)

    @staticmethod
    def triplet_table(records: Sequence[TripletRecord], r_max: int, flavor_filter: FlavorFilter) -> TableData:
        rows = [
            {
                "a": rec.params.a,
                "b": rec.params.b,
                "r": rec.r,
                "p13": rec.p13,
                "p15": rec.p15,
                "p17": rec.p17,
                "flavor": rec.flavor.value,
            }
            for rec in records
        ]
        stats = TripletService.gap_stats(records)
        notes = [f"{stats.total} triplets with r <= {r_max} ({flavor_filter.value})"]
        notes.append("per flavor: " + ", ".join(f"{k} {v}" for k, v in stats.per_flavor.items()))
        notes.append("2r mod 24: " + ", ".join(f"{k}: {v}" for k, v in stats.gap_residues.items()))
        notes.append("per band of r: " + ", ".join(f"{k}: {v}" for k, v in stats.per_decade.items()))
        notes.extend(f"violation: {v}" for v in stats.violations)
        return TableData(
            columns=TRIPLET_COLUMNS,
            records=rows,
            summary={"r_max": r_max, "flavor": flavor_filter.value, **stats.model_dump()},
            title=f"Pythagorean prime triplets, r <= {r_max}",
            notes=notes,
        )

    @staticmethod
    def general_table(forms: Sequence[GeneralForm], a_max: int, limit: int) -> TableData:
        """
        Values of each form over the first `limit` generator pairs with a <= a_max.

        Printed annotations that disagree with the computed factorization are
        listed as notes for the two published forms.
        """
        columns = ["a", "b"] + [_form_column(f) for f in forms]
        records, display = [], []
        disagreements = []
        for i, p in enumerate(TripleService.enumerate_params(a_max)):
            if i >= limit:
                break
            values = [GenFormService.gf_eval(f, p) for f in forms]
            record = {"a": p.a, "b": p.b}
            for f, value in zip(forms, values):
                record[_form_column(f)] = value
                record[f"{_form_column(f)}_factors"] = factor_pairs(value)
            records.append(record)
            display.append([str(p.a), str(p.b)] + [annotate(v) for v in values])
            for f, value in zip(forms, values):
                printed = published.GENERAL_ANNOTATIONS.get(value)
                if (f.k, f.l) in published.GENERAL_FORMS and printed and printed != factorize(value).annotation():
                    disagreements.append(value)

        notes = [
            f"{value}: printed as {published.GENERAL_ANNOTATIONS[value]}, computed {factorize(value).annotation()}"
            for value in sorted(set(disagreements))
        ]
        return TableData(
            columns=columns,
            records=records,
            headers=["a", "b"] + [f.label() for f in forms],
            display=display,
            title="Generalized forms over Pythagorean generator pairs",
            notes=notes,
        )

    @staticmethod
    def compare_published(jobs: int = 1) -> Tuple[int, List[Counterexample], List[str]]:
        """
        Recompute every published listing and compare it with the printed values.

        Returns (rows compared, value mismatches, notes). The triplet listings are
        partial: each must appear in order inside the full search, and the triplets
        they leave out are notes. A printed factorization that disagrees with the
        computed one is also a note, not a mismatch.
        """
        mismatches: List[Counterexample] = []
        notes: List[str] = []
        compared = 0

        triple_rows = []
        for p in TripleService.enumerate_params(7):
            t = TripleService.triple_from_params(p)
            triple_rows.append((p.a, p.b, t.x, t.y, t.z, t.r) + TripleService.forms_from_params(p).as_tuple())
        compared += len(triple_rows)
        if triple_rows != published.TRIPLES:
            mismatches.append(Counterexample(value=1, detail="triple rows differ from the printed values"))
        composites = {v for row in triple_rows for v in row[6:] if not factorize(v).is_prime}
        for value in sorted(composites | set(published.TRIPLE_ANNOTATIONS)):
            computed = factorize(value).annotation()
            printed = published.TRIPLE_ANNOTATIONS.get(value)
            if printed != computed:
                mismatches.append(
                    Counterexample(value=value, detail=f"triple annotation {printed}, computed {computed}")
                )

        for p in odd_primes_below(100).tolist():
            compared += 1
            reps = [(rep.kind.value, rep.s, rep.t) for rep in SegregationService.seg_represent(p)]
            if reps != published.SEGREGATED.get(p):
                mismatches.append(
                    Counterexample(value=p, detail=f"segregated listing has {published.SEGREGATED.get(p)}, computed {reps}")
                )

        searches = (
            (105, FlavorFilter.ALL, published.TRIPLETS),
            (216, FlavorFilter.ALL_ONE, published.ALL_ONE_TRIPLETS),
            (273, FlavorFilter.NONE_ONE, published.NONE_ONE_TRIPLETS),
        )
        for r_max, flavor_filter, rows in searches:
            found = [
                (rec.params.a, rec.params.b, rec.r, rec.p13, rec.p15, rec.p17)
                for rec in TripletService.search(r_max, flavor_filter, jobs)
            ]
            compared += len(rows)
            label = f"{flavor_filter.value} triplets to r={r_max}"
            if not _is_subsequence(rows, found):
                missing = [row[:2] for row in rows if row not in found]
                mismatches.append(
                    Counterexample(value=r_max, detail=f"{label}: printed rows {missing} not found in search order")
                )
                continue
            extra = [row for row in found if row not in rows]
            if extra:
                listed = ", ".join(f"({a}, {b}) r={r}" for a, b, r, *_ in extra)
                notes.append(f"{label}: the printed listing omits {listed}")

        forms = [GeneralForm(k=k, l=l) for k, l in published.GENERAL_FORMS]
        for a, b, *printed_values in published.GENERAL_VALUES:
            compared += 1
            params = TripleService.make_params(a, b)
            values = [GenFormService.gf_eval(f, params) for f in forms]
            if values != printed_values:
                mismatches.append(
                    Counterexample(value=values[0], detail=f"general forms at ({a}, {b}): printed {printed_values}, computed {values}")
                )
        for value, printed in sorted(published.GENERAL_ANNOTATIONS.items()):
            computed = factorize(value).annotation()
            if printed != computed:
                notes.append(f"{value} is printed as {printed}; computed factorization is {computed}")

        logger.info(f"Compared {compared} published rows: {len(mismatches)} mismatches, {len(notes)} annotation notes")
        return compared, mismatches, notes
