"""Command-line interface: exit codes, JSON stability, file input."""

import json

import pytest

from axial.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExitCodes:
    def test_verified_is_zero(self, capsys):
        code, out, _ = run(capsys, "check-axial", "--catalog", "B",
                           "--axes", "X12", "--law", "FB")
        assert code == 0 and "certified: True" in out

    def test_violation_is_one(self, capsys):
        # D's spectrum {1, 5} does not fit B's law {1, -1}
        code, out, _ = run(capsys, "check-axial", "--catalog", "D",
                           "--axes", "X12", "--law", "FD2")
        assert code == 1

    def test_usage_error_is_two(self, capsys):
        code, _, err = run(capsys, "check-axial", "--catalog", "nope",
                           "--axes", "X12", "--law", "FB")
        assert code == 2 and "error" in err

    def test_missing_subcommand_is_two(self, capsys):
        assert run(capsys, "bogus")[0] == 2

    def test_io_error_is_two(self, capsys):
        code, _, err = run(capsys, "jordan", "--file", "/nonexistent/x.alg")
        assert code == 2

    def test_radical_unavailable_is_one(self, capsys):
        code, out, _ = run(capsys, "radical", "--catalog", "F",
                           "--axes", "X12")
        assert code == 1


class TestJson:
    def test_byte_identical(self, capsys):
        args = ("cocycles", "--catalog", "Monster4", "--axes", "X01",
                "--law", "M2half", "--json")
        _, out1, _ = run(capsys, *args)
        _, out2, _ = run(capsys, *args)
        assert out1 == out2
        doc = json.loads(out1)
        assert doc["quotient_dim"] == 1 and doc["space_dim"] == 5

    def test_sorted_keys(self, capsys):
        _, out, _ = run(capsys, "jordan", "--catalog", "JordanA",
                        "--param", "n=2", "--json")
        doc = json.loads(out)
        assert list(doc) == sorted(doc)
        assert doc["jordan"] is True


class TestCap:
    def test_cap_exceeded_exit_zero_completed_false(self, capsys):
        code, out, _ = run(capsys, "miyamoto", "--catalog", "I",
                           "--axes", "Xab", "--law", "FI",
                           "--cap", "20", "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["axes_completed"] is False
        assert doc["group_completed"] is False


class TestFileAndExport:
    def test_export_parses_back(self, capsys, tmp_path):
        code, out, _ = run(capsys, "catalog", "--export", "D")
        assert code == 0
        path = tmp_path / "d.alg"
        path.write_text(out)
        code, out2, _ = run(capsys, "check-axial", "--file", str(path),
                            "--axes", "X16", "--law", "FD2")
        assert code == 0 and "certified: True" in out2

    def test_catalog_listing_includes_stubs(self, capsys):
        code, out, _ = run(capsys, "catalog", "--json")
        doc = json.loads(out)
        names = {e["name"] for e in doc["entries"]}
        assert "Monster4" in names and "Albert" in names
        assert any(e["stub"] for e in doc["entries"])

    def test_stub_build_is_error(self, capsys):
        code, _, err = run(capsys, "jordan", "--catalog", "T5")
        assert code == 2


class TestReproduce:
    def test_unknown_bundle(self, capsys):
        assert run(capsys, "reproduce", "nope")[0] == 2

    def test_table3_passes(self, capsys):
        code, out, _ = run(capsys, "reproduce", "table3")
        assert code == 0
        assert "FAIL" not in out and "all checks passed" in out
