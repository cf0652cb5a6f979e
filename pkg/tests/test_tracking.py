import io

import pytest

from src import config
from src.engine.search import max_genus_exhaustive
from src.errors import BudgetExceededError
from src.families.fixtures import k4
from src.families.ladders import mobius_ladder
from src.storage.database import ReportDatabase
from src.tracking.budget import EnumerationBudget
from src.tracking.progress import ProgressTracker


class TestEnumerationBudget:
    def test_cost_is_the_rotation_count(self):
        budget = EnumerationBudget()
        assert budget.calculate_cost(k4()) == 16
        assert budget.calculate_cost(mobius_ladder(3)) == 64

    def test_check(self):
        budget = EnumerationBudget(limit=16)
        budget.check(16)
        with pytest.raises(BudgetExceededError) as excinfo:
            budget.check(17)
        assert excinfo.value.systems == 17
        assert "--force" in str(excinfo.value)
        budget.check(17, force=True)

    def test_track(self):
        budget = EnumerationBudget()
        budget.set_run_id(5)
        g = k4()
        usage = budget.track("k4", g, max_genus_exhaustive(g, early_exit=False))
        assert usage.systems == 16
        assert usage.rotation_systems == 16
        assert usage.run_id == 5
        assert not usage.early_exit
        budget.track("k4", g, max_genus_exhaustive(g, early_exit=False))
        assert budget.total_systems == 32

    def test_default_limit_is_read_at_construction(self, monkeypatch):
        monkeypatch.setattr(config, "ENUMERATION_BUDGET", 4)
        with pytest.raises(BudgetExceededError):
            EnumerationBudget().check(5)

    def test_engine_uses_the_guard(self, monkeypatch):
        checked = []
        original = EnumerationBudget.check

        def spy(self, cost, force=False):
            checked.append((cost, self.limit, force))
            return original(self, cost, force)

        monkeypatch.setattr(EnumerationBudget, "check", spy)
        max_genus_exhaustive(k4(), early_exit=False, budget=100)
        assert checked[0] == (16, 100, False)


class TestProgressTracker:
    def test_counters(self):
        stream = io.StringIO()
        tracker = ProgressTracker(stream=stream)
        assert tracker.start_run("verify") == 1
        tracker.increment(16)
        tracker.increment_checked("k4")
        tracker.increment_checked("k4")
        tracker.add_error("k4: genus mismatch")
        run = tracker.finish_run("failed")
        assert run.systems == 16
        assert run.checked == 2
        assert run.counters == {"k4": 2}
        assert run.errors == ["k4: genus mismatch"]
        assert "Run #1" in stream.getvalue()
        assert tracker.get_run_id() is None

    def test_quiet(self):
        stream = io.StringIO()
        tracker = ProgressTracker(stream=stream)
        tracker.set_show_progress(False)
        tracker.start_run("max-genus")
        tracker.increment()
        tracker.finish_run()
        assert stream.getvalue() == ""

    def test_no_run_is_a_no_op(self):
        tracker = ProgressTracker(stream=io.StringIO())
        tracker.increment()
        tracker.add_error("ignored")
        assert tracker.finish_run() is None

    def test_writes_through_to_the_database(self, tmp_path):
        db = ReportDatabase(str(tmp_path / "reports.db"))
        tracker = ProgressTracker(db=db, stream=io.StringIO())
        run_id = tracker.start_run("alg1")
        tracker.increment(64)
        tracker.finish_run("completed")
        (row,) = db.get_recent_runs()
        assert row["id"] == run_id
        assert (row["status"], row["systems"]) == ("completed", 64)
