# src/tracking/progress.py

import sys
import time
from dataclasses import dataclass, field
from datetime import datetime
from typing import Dict, List, Optional

REFRESH_SECONDS = 0.2


@dataclass
class RunProgress:
    run_id: int
    label: str
    started_at: datetime

    # Rotation systems scanned by the engine, checks finished by suites
    systems: int = 0
    checked: int = 0
    counters: Dict[str, int] = field(default_factory=dict)

    errors: List[str] = field(default_factory=list)

    @property
    def elapsed_seconds(self) -> float:
        return (datetime.now() - self.started_at).total_seconds()

    def systems_per_second(self) -> float:
        elapsed = self.elapsed_seconds
        return self.systems / elapsed if elapsed > 0 else 0.0


class ProgressTracker:
    """Live counters for one CLI run, written to stderr and optionally archived."""

    def __init__(self, db=None, stream=None):
        self.db = db
        self.stream = stream or sys.stderr
        self._current_run: Optional[RunProgress] = None
        self._show_progress = True
        self._last_refresh = 0.0

    def set_db(self, db):
        self.db = db

    def set_show_progress(self, show: bool):
        self._show_progress = show

    def start_run(self, label: str) -> int:
        run_id = self.db.create_run(label) if self.db else 1
        self._current_run = RunProgress(run_id=run_id, label=label, started_at=datetime.now())
        self._last_refresh = 0.0
        self._print(f"\n🚀 Run #{run_id} started: {label}\n")
        return run_id

    def finish_run(self, status: str = "completed") -> Optional[RunProgress]:
        """Close the run, archive its counters and return them."""
        run = self._current_run
        if run is None:
            return None

        if self.db:
            self.db.finish_run(
                run_id=run.run_id,
                status=status,
                checked=run.checked,
                systems=run.systems,
                errors=run.errors,
            )
        self._print_summary(run, status)
        self._current_run = None
        return run

    def get_run_id(self) -> Optional[int]:
        return self._current_run.run_id if self._current_run else None

    def increment(self, count: int = 1):
        """Engine callback: `count` more rotation systems scanned."""
        if self._current_run is None:
            return
        self._current_run.systems += count
        self._refresh()

    def increment_checked(self, name: str = "", count: int = 1):
        """Suite callback: `count` more checks finished, grouped under `name`."""
        run = self._current_run
        if run is None:
            return
        run.checked += count
        if name:
            run.counters[name] = run.counters.get(name, 0) + count
        self._refresh()

    def add_error(self, error: str):
        if self._current_run is None:
            return
        self._current_run.errors.append(error)
        self._print(f"\n❌ {error}")

    def _refresh(self, force: bool = False):
        """Rewrite the progress line, at most every REFRESH_SECONDS."""
        if not self._show_progress or self._current_run is None:
            return
        now = time.monotonic()
        if not force and now - self._last_refresh < REFRESH_SECONDS:
            return
        self._last_refresh = now

        r = self._current_run
        parts = [f"Checked: {r.checked}", f"Systems: {r.systems}"]
        if r.systems:
            parts.append(f"{r.systems_per_second():,.0f}/s")
        parts.append(f"Failures: {len(r.errors)}")
        self.stream.write("\r📊 " + " | ".join(parts) + "    ")
        self.stream.flush()

    def _print_summary(self, r: RunProgress, status: str):
        icon = "✅" if status == "completed" else "⚠️"
        self._print(f"\n\n{'=' * 60}")
        self._print(f"{icon} Run #{r.run_id} {status} in {r.elapsed_seconds:.2f}s: {r.label}")
        self._print("=" * 60)
        if r.checked:
            self._print(f"🔍 Checked: {r.checked}")
            for name, count in sorted(r.counters.items()):
                self._print(f"   • {name}: {count}")
        if r.systems:
            self._print(f"🔁 Rotation systems: {r.systems} ({r.systems_per_second():,.0f}/s)")
        if r.errors:
            self._print(f"❌ Failures: {len(r.errors)}")
        self._print(f"{'=' * 60}\n")

    def _print(self, text: str):
        if self._show_progress:
            print(text, file=self.stream)
