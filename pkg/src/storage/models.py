# src/storage/models.py

from dataclasses import dataclass, field
from datetime import datetime
from typing import Dict, List, Optional


def _timestamp(value) -> Optional[datetime]:
    """SQLite CURRENT_TIMESTAMP text to datetime."""
    if value is None or isinstance(value, datetime):
        return value
    return datetime.fromisoformat(value)


@dataclass
class RunRecord:
    id: int
    command: str
    status: str

    checked: int
    systems: int
    errors: List[str]

    started_at: Optional[datetime] = None
    finished_at: Optional[datetime] = None
    report_count: int = 0

    @classmethod
    def from_row(cls, row: Dict) -> "RunRecord":
        return cls(
            id=row["id"],
            command=row["command"],
            status=row["status"],
            checked=row["checked"] or 0,
            systems=row["systems"] or 0,
            errors=row["errors"],
            started_at=_timestamp(row.get("started_at")),
            finished_at=_timestamp(row.get("finished_at")),
            report_count=row.get("report_count", 0),
        )


@dataclass
class ReportRecord:
    id: int
    run_id: Optional[int]
    kind: str                # "max-genus", "alg1", "alg2", "verify", ...
    subject: str             # family spec, input path or suite name

    max_genus: Optional[int]
    euler_bound: Optional[int]
    payload: Dict = field(default_factory=dict)

    created_at: Optional[datetime] = None

    @classmethod
    def from_row(cls, row: Dict) -> "ReportRecord":
        return cls(
            id=row["id"],
            run_id=row["run_id"],
            kind=row["kind"],
            subject=row["subject"],
            max_genus=row["max_genus"],
            euler_bound=row["euler_bound"],
            payload=row["payload"],
            created_at=_timestamp(row.get("created_at")),
        )
