"""Command-line interface: exit codes, JSON output, determinism."""

import json

import pytest

from abelcentral import cli


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


class TestExitCodes:
    def test_ffrak_ok(self, capsys):
        code, out, _ = run(["ffrak", "--p", "7", "--n", "3"], capsys)
        assert code == cli.EXIT_OK
        doc = json.loads(out)
        assert doc["invariant_factors"] == [3]

    def test_field_missing_roots_of_unity(self, capsys):
        # mu_4 is not contained in F_7.
        code, _, err = run(["field", "--p", "7", "--n", "4"], capsys)
        assert code == cli.EXIT_USAGE
        assert err

    def test_unknown_subcommand(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["frobnicate"])
        assert exc.value.code == cli.EXIT_USAGE

    def test_verify_propA1(self, capsys):
        code, out, _ = run(["verify", "--suite", "propA1", "--n", "3", "--rank", "2"], capsys)
        assert code == cli.EXIT_OK
        assert json.loads(out)["violations"] == 0

    def test_verify_heisenberg(self, capsys):
        code, out, _ = run(["verify", "--suite", "heisenberg", "--n", "2"], capsys)
        assert code == cli.EXIT_OK
        assert json.loads(out)["ok"]

    def test_missing_input_file(self, capsys, tmp_path):
        code, _, err = run(
            ["relations", "--p", "13", "--n", "3", "--input", str(tmp_path / "nope.json")],
            capsys,
        )
        assert code == cli.EXIT_USAGE


class TestReports:
    def test_empty_report_shape(self, capsys):
        cli.emit_report({}, None)
        assert capsys.readouterr().out.strip() == "{}"

    def test_deterministic_output(self, capsys):
        a = run(["ffrak", "--p", "13", "--n", "4"], capsys)
        b = run(["ffrak", "--p", "13", "--n", "4"], capsys)
        assert a == b

    def test_relations_roundtrip(self, capsys, tmp_path):
        inp = tmp_path / "fam.json"
        inp.write_text(json.dumps({"pairs": [{"sigma": 1, "tau": 1}, {"sigma": 2, "tau": 2}]}))
        out = tmp_path / "rep.json"
        code = cli.main(["relations", "--p", "13", "--n", "3", "--input", str(inp), "--output", str(out)])
        assert code == cli.EXIT_OK
        doc = json.loads(out.read_text())
        assert doc["1"] is True and doc["5"] is True and doc["7"] is True

    def test_groupcoh_on_exported_heisenberg(self, capsys, tmp_path):
        table = tmp_path / "heis2.json"
        code = cli.main(["heisenberg", "--n", "2", "--output", str(table)])
        assert code == cli.EXIT_OK
        code = cli.main(["groupcoh", "--input", str(table), "--n", "2", "--output", str(tmp_path / "rep.json")])
        assert code == cli.EXIT_OK
        doc = json.loads((tmp_path / "rep.json").read_text())
        assert doc["ok"] is True
