import json
import pathlib

import pytest

from gltlab import cli

ROOT = pathlib.Path(__file__).resolve().parent.parent


def run(argv, capsys):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


class TestExitCodes:
    def test_pass_is_zero(self, capsys):
        code, out, _ = run(["ugl"], capsys)
        assert code == 0
        assert json.loads(out)["summary"]["pass"]

    def test_check_failure_is_one(self, capsys, monkeypatch):
        monkeypatch.setitem(
            cli.SUITE_FNS, "ugl",
            lambda cfg: [{"check": "forced failure", "parameters": {},
                          "expected": 0, "got": 1, "pass": False}])
        code, out, _ = run(["ugl"], capsys)
        assert code == 1
        assert json.loads(out)["summary"]["failed"] == 1

    def test_usage_error_is_two(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run(["nosuchsuite"], capsys)
        assert exc.value.code == 2

    def test_bad_config_is_two(self, capsys):
        code, _, err = run(["ugl", "--field", "GF", "--prime", "9"], capsys)
        assert code == 2 and "prime" in err

    def test_resource_guard_is_three(self, capsys):
        code, _, err = run(["all", "--n", "3", "--m", "9"], capsys)
        assert code == 3 and "resource guard" in err


class TestConfig:
    def test_file_plus_flag_override(self, tmp_path, capsys):
        cfgfile = tmp_path / "cfg.json"
        cfgfile.write_text(json.dumps({"n": 1, "N": [2], "m": 2, "seed": 5}))
        code, out, _ = run(["yangian", "--config", str(cfgfile), "--m", "3"],
                           capsys)
        assert code == 0
        assert json.loads(out)["config"]["m"] == 3

    def test_unknown_key_rejected(self, tmp_path, capsys):
        cfgfile = tmp_path / "cfg.json"
        cfgfile.write_text(json.dumps({"bogus": 1}))
        code, _, err = run(["ugl", "--config", str(cfgfile)], capsys)
        assert code == 2 and "bogus" in err


class TestReports:
    def test_empty_result_set(self):
        text = cli.emit_report(
            {"schema_version": cli.SCHEMA_VERSION, "checks": [],
             "summary": {"total": 0, "passed": 0, "failed": 0, "pass": True}},
            None)
        data = json.loads(text)
        assert data["summary"]["total"] == 0

    def test_schema_fields(self, capsys):
        _, out, _ = run(["invariants"], capsys)
        data = json.loads(out)
        assert data["schema_version"] == 1
        for check in data["checks"]:
            assert {"check", "pass", "suite"} <= set(check)

    def test_determinism(self, tmp_path, capsys):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        run(["centralizer", "--seed", "1", "--out", str(a)], capsys)
        run(["centralizer", "--seed", "1", "--out", str(b)], capsys)
        assert a.read_bytes() == b.read_bytes()

    def test_out_flag_writes_stdout_too(self, tmp_path, capsys):
        path = tmp_path / "r.json"
        _, out, _ = run(["ugl", "--out", str(path)], capsys)
        assert path.read_text() == out


class TestGolden:
    @pytest.mark.parametrize("suite", ["brauer", "all"])
    def test_matches_stored_report(self, suite, tmp_path, capsys):
        golden = ROOT / "reports" / f"golden_{suite}.json"
        path = tmp_path / "now.json"
        code, _, _ = run([suite, "--out", str(path)], capsys)
        assert code == 0
        assert path.read_bytes() == golden.read_bytes()
