"""The braidforge command line: exit codes, JSON output, and determinism."""

import csv
import io
import json
import pathlib

import jsonschema
import pytest

from braidforge.cli import main

SCHEMA = json.loads(
    (
        pathlib.Path(__file__).resolve().parents[1]
        / "docs"
        / "invariant_report.schema.json"
    ).read_text()
)


def run_cli(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestVerifyRelations:
    def test_series_pass(self, capsys):
        code, out, _ = run_cli(["verify", "--mode", "relations"], capsys)
        assert code == 0
        assert "PASS BRAID_ALGEBRA" in out

    def test_degenerate_fails(self, capsys):
        code, out, _ = run_cli(
            ["verify", "--mode", "relations", "--degenerate"], capsys
        )
        assert code == 1
        assert "FAIL 2.2(i)" in out

    def test_series_vi(self, capsys):
        code, out, _ = run_cli(
            ["verify", "--mode", "relations", "--series", "VI"], capsys
        )
        assert code == 0
        assert "PASS" in out

    def test_unknown_set_is_config_error(self, capsys):
        code, _, err = run_cli(
            ["verify", "--mode", "relations", "--set", "NOPE"], capsys
        )
        assert code == 2
        assert "error:" in err


class TestVerifyBraidEquation:
    def test_standard_tensor(self, capsys):
        code, out, _ = run_cli(
            ["verify", "--mode", "braid-equation", "--m", "2", "--seed", "3"], capsys
        )
        assert code == 0
        assert "PASS braid-equation" in out

    def test_swap_tensor(self, capsys):
        code, out, _ = run_cli(
            ["verify", "--mode", "braid-equation", "--tensor", "swap"], capsys
        )
        assert code == 0


class TestVerifyMarkov:
    def test_tensor_trace(self, capsys):
        code, out, _ = run_cli(
            [
                "verify", "--mode", "markov", "--type", "tensor-trace",
                "--strands", "2", "--word", "1 1 1", "--trials", "4",
                "--seed", "5",
            ],
            capsys,
        )
        assert code == 0
        assert out.startswith("PASS markov tensor-trace")


class TestInvariantCommand:
    ARGS = [
        "invariant", "--type", "tensor-trace", "--strands", "2",
        "--word", "1 1 1", "--seed", "31", "--json",
    ]

    def test_json_schema(self, capsys):
        code, out, _ = run_cli(self.ARGS, capsys)
        assert code == 0
        report = json.loads(out)
        jsonschema.validate(report, SCHEMA)
        assert report["invariant"] == "tensor-trace"
        assert report["braid"] == {"strands": 2, "letters": [1, 1, 1]}

    def test_all_invariants_validate(self, capsys):
        for inv in (
            "tensor-trace",
            "charpoly-class",
            "charpoly-family",
            "group-trace",
            "bracket",
        ):
            code, out, _ = run_cli(
                [
                    "invariant", "--type", inv, "--strands", "2",
                    "--word", "1 1 1", "--seed", "31", "--json",
                ],
                capsys,
            )
            assert code == 0
            jsonschema.validate(json.loads(out), SCHEMA)

    def test_deterministic_bytes(self, capsys):
        _, out_a, _ = run_cli(self.ARGS, capsys)
        _, out_b, _ = run_cli(self.ARGS, capsys)
        assert out_a == out_b

    def test_seed_changes_value(self, capsys):
        base = self.ARGS[:-1]
        _, out_a, _ = run_cli(base, capsys)
        other = [x if x != "31" else "32" for x in base]
        _, out_b, _ = run_cli(other, capsys)
        # Different seeds give different tensors; the normalized value may
        # coincide, but at minimum both runs succeed and print something.
        assert out_a.strip() and out_b.strip()

    def test_env_seed_override(self, capsys, monkeypatch):
        monkeypatch.setenv("BRAIDFORGE_SEED", "31")
        other = [x if x != "31" else "99" for x in self.ARGS]
        _, out_env, _ = run_cli(other, capsys)
        monkeypatch.delenv("BRAIDFORGE_SEED")
        _, out_plain, _ = run_cli(self.ARGS, capsys)
        assert json.loads(out_env)["value"] == json.loads(out_plain)["value"]
        assert json.loads(out_env)["parameters"]["seed"] == 31

    def test_unknot_equality(self, capsys):
        values = []
        for strands, word in (("1", ""), ("2", "1"), ("3", "1 2")):
            _, out, _ = run_cli(
                [
                    "invariant", "--type", "tensor-trace", "--strands", strands,
                    "--word", word, "--seed", "31",
                ],
                capsys,
            )
            values.append(out.strip())
        assert values[0] == values[1] == values[2]

    def test_bad_word_is_config_error(self, capsys):
        code, _, err = run_cli(
            [
                "invariant", "--type", "tensor-trace", "--strands", "2",
                "--word", "7",
            ],
            capsys,
        )
        assert code == 2
        assert "error:" in err


class TestTableCommand:
    @pytest.mark.parametrize(
        "inv", ["tensor-trace", "charpoly-class", "group-trace", "bracket"]
    )
    def test_all_rows_match(self, inv, capsys):
        code, out, _ = run_cli(
            ["table", "--type", inv, "--seed", "31"], capsys
        )
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["fixture", "strands", "word", "value", "matches_base"]
        data = rows[1:]
        assert len(data) == 15  # five fixtures, each with two variants
        for row in data:
            assert row[4] in ("", "yes")

    def test_values_present(self, capsys):
        _, out, _ = run_cli(["table", "--type", "tensor-trace", "--seed", "31"], capsys)
        rows = list(csv.reader(io.StringIO(out)))[1:]
        assert all(row[3] for row in rows)


def test_console_script_installed():
    import shutil

    assert shutil.which("braidforge") is not None
