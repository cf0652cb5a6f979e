# src/storage/database.py

import sqlite3
import json
import os
from typing import List, Dict, Optional
from contextlib import contextmanager

from src.config import DEFAULT_DB_PATH
from src.storage.models import ReportRecord, RunRecord


class ReportDatabase:
    """SQLite archive of CLI runs and the reports they produced."""

    def __init__(self, db_path: str = DEFAULT_DB_PATH):
        self.db_path = db_path
        self._ensure_data_dir()
        self._init_db()

    def _ensure_data_dir(self):
        """Ensure the data directory exists."""
        directory = os.path.dirname(self.db_path)
        if directory:
            os.makedirs(directory, exist_ok=True)

    @contextmanager
    def _get_connection(self):
        conn = sqlite3.connect(self.db_path)
        conn.row_factory = sqlite3.Row
        try:
            yield conn
        finally:
            conn.close()

    def _init_db(self):
        with self._get_connection() as conn:
            conn.execute("""
                CREATE TABLE IF NOT EXISTS runs (
                    id INTEGER PRIMARY KEY AUTOINCREMENT,
                    command TEXT NOT NULL,
                    started_at TIMESTAMP DEFAULT CURRENT_TIMESTAMP,
                    finished_at TIMESTAMP,
                    status TEXT DEFAULT 'running',

                    checked INTEGER DEFAULT 0,
                    systems INTEGER DEFAULT 0,
                    errors TEXT
                )
            """)

            conn.execute("""
                CREATE TABLE IF NOT EXISTS reports (
                    id INTEGER PRIMARY KEY AUTOINCREMENT,
                    run_id INTEGER,
                    kind TEXT NOT NULL,
                    subject TEXT,

                    max_genus INTEGER,
                    euler_bound INTEGER,
                    payload TEXT NOT NULL,

                    created_at TIMESTAMP DEFAULT CURRENT_TIMESTAMP,
                    FOREIGN KEY (run_id) REFERENCES runs(id)
                )
            """)

            conn.execute("CREATE INDEX IF NOT EXISTS idx_reports_run ON reports(run_id)")
            conn.commit()

    def create_run(self, command: str) -> int:
        """Create a new run and return its ID."""
        with self._get_connection() as conn:
            cursor = conn.execute(
                "INSERT INTO runs (command, status) VALUES (?, 'running')", (command,)
            )
            conn.commit()
            return cursor.lastrowid

    def finish_run(
        self,
        run_id: int,
        status: str,
        checked: int = 0,
        systems: int = 0,
        errors: Optional[List[str]] = None
    ):
        """Finish a run with its counters."""
        with self._get_connection() as conn:
            conn.execute("""
                UPDATE runs SET
                    finished_at = CURRENT_TIMESTAMP,
                    status = ?,
                    checked = ?,
                    systems = ?,
                    errors = ?
                WHERE id = ?
            """, (
                status,
                checked,
                systems,
                json.dumps(errors or []),
                run_id
            ))
            conn.commit()

    def save_report(self, run_id: Optional[int], kind: str, subject: str, report: Dict) -> int:
        """Store one report dict (GenusReport, ReductionTrace or SuiteResult)."""
        with self._get_connection() as conn:
            cursor = conn.execute("""
                INSERT INTO reports (run_id, kind, subject, max_genus, euler_bound, payload)
                VALUES (?, ?, ?, ?, ?, ?)
            """, (
                run_id,
                kind,
                subject,
                report.get("max_genus", report.get("total")),
                report.get("euler_bound"),
                json.dumps(report, sort_keys=True),
            ))
            conn.commit()
            return cursor.lastrowid

    def get_reports(self, run_id: Optional[int] = None, limit: int = 50) -> List[Dict]:
        with self._get_connection() as conn:
            query = "SELECT * FROM reports"
            params: List = []
            if run_id is not None:
                query += " WHERE run_id = ?"
                params.append(run_id)
            query += " ORDER BY id DESC LIMIT ?"
            params.append(limit)

            results = []
            for row in conn.execute(query, params).fetchall():
                d = dict(row)
                d["payload"] = json.loads(d["payload"])
                results.append(d)
            return results

    def get_recent_runs(self, limit: int = 10) -> List[Dict]:
        """Get recent runs with their report counts."""
        with self._get_connection() as conn:
            rows = conn.execute("""
                SELECT r.*,
                    (SELECT COUNT(*) FROM reports WHERE run_id = r.id) as report_count
                FROM runs r
                ORDER BY r.id DESC
                LIMIT ?
            """, (limit,)).fetchall()

            results = []
            for row in rows:
                d = dict(row)
                # Parse JSON fields
                try:
                    d["errors"] = json.loads(d["errors"]) if d.get("errors") else []
                except json.JSONDecodeError:
                    d["errors"] = []
                results.append(d)

            return results

    def get_run_records(self, limit: int = 10) -> List[RunRecord]:
        return [RunRecord.from_row(row) for row in self.get_recent_runs(limit)]

    def get_report_records(self, run_id: Optional[int] = None, limit: int = 50) -> List[ReportRecord]:
        return [ReportRecord.from_row(row) for row in self.get_reports(run_id, limit)]
