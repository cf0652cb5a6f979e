from datetime import datetime

import pytest

from src.storage.database import ReportDatabase
from src.storage.models import ReportRecord, RunRecord


@pytest.fixture
def db(tmp_path):
    return ReportDatabase(str(tmp_path / "nested" / "reports.db"))


class TestRuns:
    def test_create_and_finish(self, db):
        run_id = db.create_run("max-genus")
        db.finish_run(run_id, "completed", checked=3, systems=16)
        (row,) = db.get_recent_runs()
        assert row["id"] == run_id
        assert row["status"] == "completed"
        assert row["systems"] == 16
        assert row["errors"] == []
        assert row["report_count"] == 0

    def test_errors_round_trip(self, db):
        run_id = db.create_run("verify")
        db.finish_run(run_id, "failed", errors=["counterexample"])
        assert db.get_recent_runs()[0]["errors"] == ["counterexample"]

    def test_newest_first(self, db):
        first = db.create_run("reduce")
        second = db.create_run("family")
        assert [r["id"] for r in db.get_recent_runs()] == [second, first]
        assert len(db.get_recent_runs(limit=1)) == 1


class TestReports:
    def test_genus_column(self, db):
        run_id = db.create_run("max-genus")
        db.save_report(run_id, "max-genus", "k4", {"max_genus": 1, "euler_bound": 1})
        db.save_report(run_id, "alg1", "k4", {"total": 1})
        db.save_report(None, "verify", "words", {"checked": 4})
        rows = db.get_reports()
        assert [r["kind"] for r in rows] == ["verify", "alg1", "max-genus"]
        assert [r["max_genus"] for r in rows] == [None, 1, 1]
        assert rows[2]["payload"] == {"euler_bound": 1, "max_genus": 1}

    def test_filter_by_run(self, db):
        run_id = db.create_run("max-genus")
        db.save_report(run_id, "max-genus", "k4", {"max_genus": 1})
        db.save_report(None, "reduce", "a b a^-1 b^-1", {"genus": 1})
        (row,) = db.get_reports(run_id)
        assert row["subject"] == "k4"
        assert db.get_recent_runs()[0]["report_count"] == 1


class TestRecords:
    def test_run_record(self, db):
        run_id = db.create_run("verify")
        db.finish_run(run_id, "completed", checked=7)
        (record,) = db.get_run_records()
        assert isinstance(record, RunRecord)
        assert record.checked == 7
        assert isinstance(record.started_at, datetime)
        assert isinstance(record.finished_at, datetime)

    def test_unfinished_run(self, db):
        db.create_run("max-genus")
        (record,) = db.get_run_records()
        assert record.status == "running"
        assert record.finished_at is None

    def test_report_record(self, db):
        run_id = db.create_run("max-genus")
        db.save_report(run_id, "max-genus", "mobius:3", {"max_genus": 2, "euler_bound": 2})
        (record,) = db.get_report_records(run_id)
        assert isinstance(record, ReportRecord)
        assert (record.kind, record.subject, record.max_genus) == ("max-genus", "mobius:3", 2)
        assert record.payload["euler_bound"] == 2
        assert isinstance(record.created_at, datetime)
