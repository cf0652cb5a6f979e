import json

import pytest

from src import config
from src.main import EXIT_BUDGET, EXIT_INPUT, EXIT_OK, main
from src.storage.database import ReportDatabase


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestReduce:
    def test_torus(self, capsys):
        code, out, _ = run(capsys, "reduce", "a b a^-1 b^-1")
        assert code == EXIT_OK
        assert "genus=1" in out.splitlines()

    def test_json_with_trace(self, capsys):
        code, out, _ = run(capsys, "reduce", "a b c a^-1 b^-1 c^-1", "--json", "--trace")
        data = json.loads(out)
        assert data["genus"] == 1
        assert data["trace"]

    def test_non_orientable(self, capsys):
        code, _, err = run(capsys, "reduce", "a b a b")
        assert code == EXIT_INPUT
        assert "Error:" in err

    def test_missing_argument(self, capsys):
        code, _, _ = run(capsys, "reduce")
        assert code == EXIT_INPUT


class TestMaxGenus:
    def test_family(self, capsys):
        code, out, _ = run(capsys, "max-genus", "--family", "mobius:3")
        lines = out.splitlines()
        assert code == EXIT_OK
        assert "max_genus=2" in lines
        assert "upper_embeddable=true" in lines

    def test_edge_list_input(self, capsys, tmp_path):
        path = tmp_path / "k4.txt"
        path.write_text("1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n")
        code, out, _ = run(capsys, "max-genus", "--input", str(path), "--no-timing")
        assert code == EXIT_OK
        assert "max_genus=1" in out.splitlines()
        assert "elapsed_ms" not in out

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "max-genus", "--input", str(tmp_path / "nope.txt"))
        assert code == EXIT_INPUT

    def test_bad_family(self, capsys):
        code, _, err = run(capsys, "max-genus", "--family", "spiral:5")
        assert code == EXIT_INPUT
        assert "spiral" in err

    def test_budget(self, capsys, monkeypatch):
        monkeypatch.setattr(config, "ENUMERATION_BUDGET", 10)
        code, _, err = run(capsys, "max-genus", "--family", "neckband:4", "--no-early-exit")
        assert code == EXIT_BUDGET
        assert "--force" in err

    def test_force(self, capsys, monkeypatch):
        monkeypatch.setattr(config, "ENUMERATION_BUDGET", 10)
        code, out, _ = run(capsys, "max-genus", "--family", "neckband:4", "--no-early-exit", "--force")
        assert code == EXIT_OK
        assert "max_genus=2" in out.splitlines()

    def test_json_is_stable_across_jobs(self, capsys, monkeypatch):
        monkeypatch.setattr(config, "PARALLEL_MIN_SYSTEMS", 1)
        argv = ["max-genus", "--family", "k4", "--json", "--no-timing", "--no-early-exit"]
        _, single, _ = run(capsys, *argv, "--jobs", "1")
        _, pooled, _ = run(capsys, *argv, "--jobs", "2")
        assert single == pooled
        assert "elapsed_ms" not in json.loads(single)

    def test_alg1(self, capsys):
        code, out, _ = run(capsys, "max-genus", "--family", "k4", "--method", "alg1", "--check")
        lines = out.splitlines()
        assert code == EXIT_OK
        assert "total=1" in lines
        assert "check=pass" in lines

    def test_alg2(self, capsys):
        code, out, _ = run(capsys, "max-genus", "--family", "spiral:5,6", "--method", "alg2", "--check")
        lines = out.splitlines()
        assert code == EXIT_OK
        assert lines[1] == "STEP 1 spiral v15 -> v=8 e=12"
        assert "total=3" in lines
        assert "check=pass" in lines

    def test_alg2_extended(self, capsys):
        code, out, _ = run(capsys, "max-genus", "--family", "extspiral:5,6:13-14", "--method", "alg2", "--json")
        data = json.loads(out)
        assert code == EXIT_OK
        assert data["total"] == 5
        assert data["i"] == 2

    def test_alg2_extended_check(self, capsys):
        code, out, _ = run(capsys, "max-genus", "--family", "extspiral:5,6:13-14", "--method", "alg2", "--check")
        lines = out.splitlines()
        assert code == EXIT_OK
        assert "total=5" in lines
        assert "check=pass" in lines

    def test_alg2_needs_labels(self, capsys, tmp_path):
        path = tmp_path / "k4.txt"
        path.write_text("1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n")
        code, _, _ = run(capsys, "max-genus", "--input", str(path), "--method", "alg2")
        assert code == EXIT_INPUT

    def test_alg2_wrong_family(self, capsys):
        code, _, _ = run(capsys, "max-genus", "--family", "mobius:3", "--method", "alg2")
        assert code == EXIT_INPUT


class TestJointTree:
    def test_wheel(self, capsys):
        code, out, _ = run(capsys, "joint-tree", "--family", "wheel", "--tree", "3,4,5")
        lines = out.splitlines()
        assert code == EXIT_OK
        genus_word = next(line for line in lines if line.startswith("genus_word="))
        genus_faces = next(line for line in lines if line.startswith("genus_faces="))
        assert genus_word.split("=")[1] == genus_faces.split("=")[1]

    def test_bad_tree(self, capsys):
        code, _, _ = run(capsys, "joint-tree", "--family", "k4", "--tree", "0,1")
        assert code == EXIT_INPUT

    def test_rotation_out_of_range(self, capsys):
        code, _, _ = run(capsys, "joint-tree", "--family", "k4", "--rotation-index", "16")
        assert code == EXIT_INPUT

    def test_json(self, capsys):
        code, out, _ = run(capsys, "joint-tree", "--family", "mobius:3", "--rotation-index", "5", "--json")
        data = json.loads(out)
        assert data["cotree"] == [5, 6, 7, 8]
        assert data["rotation_index"] == 5


class TestFamily:
    def test_edge_list(self, capsys):
        code, out, _ = run(capsys, "family", "neckband:4")
        lines = out.splitlines()
        assert code == EXIT_OK
        assert len(lines) == 12
        assert lines[-1] == "7 2"

    def test_report(self, capsys):
        code, out, _ = run(capsys, "family", "spiral:5,6", "--report")
        lines = out.splitlines()
        assert "vertices=17" in lines
        assert "edges=23" in lines
        assert "betti=7" in lines

    def test_labels_file(self, capsys, tmp_path):
        path = tmp_path / "labels.json"
        code, _, _ = run(capsys, "family", "extspiral:5,6:13-14", "--labels", str(path))
        data = json.loads(path.read_text())
        assert code == EXIT_OK
        assert data["gadgets"][0]["vertices"]["v1"] == 21


class TestVerify:
    def test_correspondence(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "correspondence", "--range", "k4")
        lines = out.splitlines()
        assert code == EXIT_OK
        assert "status=pass" in lines
        assert "checked=16" in lines

    @pytest.mark.parametrize("name, range_text", [
        ("lemma1.1", "1..5"),
        ("lemma1.2", "3..4"),
        ("lemma1.3", "k4"),
        ("thm2.1", "neckband:2..4"),
        ("thm3.1", "1..5"),
        ("thm3.2", "3..4"),
    ])
    def test_statement_names(self, capsys, name, range_text):
        code, out, _ = run(capsys, "verify", "--suite", name, "--range", range_text)
        assert code == EXIT_OK
        assert out.splitlines()[-1] == "status=pass"

    def test_word_census_reports_floor_half(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "lemma1.2", "--range", "3..4")
        lines = out.splitlines()
        assert code == EXIT_OK
        assert "n=3 max_genus=1" in lines
        assert "n=4 max_genus=2" in lines

    def test_unknown_suite(self, capsys):
        code, _, _ = run(capsys, "verify", "--suite", "no-such-suite")
        assert code == EXIT_INPUT

    def test_bad_range(self, capsys):
        code, _, _ = run(capsys, "verify", "--suite", "word-census", "--range", "x..y")
        assert code == EXIT_INPUT


class TestSave:
    def test_reports_are_archived(self, capsys, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        code, _, _ = run(capsys, "max-genus", "--family", "k4", "--save")
        assert code == EXIT_OK
        db = ReportDatabase(config.DEFAULT_DB_PATH)
        (report,) = db.get_reports()
        assert report["kind"] == "max-genus"
        assert report["subject"] == "k4"
        assert report["max_genus"] == 1
        (run_row,) = db.get_recent_runs()
        assert run_row["status"] == "completed"
        assert run_row["report_count"] == 1

    def test_history_lists_saved_runs(self, capsys, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        run(capsys, "max-genus", "--family", "mobius:3", "--save")
        code, out, _ = run(capsys, "history")
        lines = out.splitlines()
        assert code == EXIT_OK
        assert lines[0] == "run 1 max-genus completed reports=1"
        assert lines[1] == "  max-genus mobius:3 max_genus=2"

    def test_history_json(self, capsys, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        run(capsys, "reduce", "a b a^-1 b^-1", "--save")
        code, out, _ = run(capsys, "history", "--json")
        (entry,) = json.loads(out)
        assert entry["command"] == "reduce"
        assert entry["reports"][0]["max_genus"] is None
