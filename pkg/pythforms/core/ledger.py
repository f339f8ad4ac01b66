import logging
from typing import Any, Dict, List, Optional

from tinydb import Query, TinyDB

from pythforms.models.report import SweepReport

logger = logging.getLogger(__name__)


def record_run(report: SweepReport, path: str) -> int:
    """Append one sweep outcome to the ledger and return its document id"""
    document = {
        "check": report.check,
        "bound": report.bound,
        "status": report.status,
        "checked": report.checked,
        "counterexamples": len(report.counterexamples),
        "elapsed": round(report.elapsed, 3),
        "finished_at": report.finished_at.isoformat(),
    }
    with TinyDB(path) as db:
        doc_id = db.insert(document)
    logger.info(f"Recorded {report.check} run as #{doc_id} in {path}")
    return doc_id


def list_runs(path: str, check: Optional[str] = None) -> List[Dict[str, Any]]:
    """Stored runs in insertion order, optionally only those of one check"""
    with TinyDB(path) as db:
        if check is None:
            docs = db.all()
        else:
            docs = db.search(Query().check == check)
    return [{"id": doc.doc_id, **doc} for doc in sorted(docs, key=lambda d: d.doc_id)]
