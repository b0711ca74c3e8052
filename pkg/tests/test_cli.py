"""CLI surface: golden outputs, formats, round trips, exit codes."""

import json

import pytest

from idsballs import cli

PAPER_ENUM_LINES = [
    "0000",
    "0001",
    "0010",
    "0011",
    "0100",
    "0101",
    "0110",
    "1000",
    "1001",
    "1010",
    "1100",
]


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestSize:
    def test_reference_example(self, capsys):
        code, out, _ = run(capsys, "size", "--x", "0000", "--q", "2", "-t", "1", "-s", "1", "-p", "1")
        assert code == 0
        assert out == (
            "x=0000 q=2 t=1 s=1 p=1\n"
            "size=11 bound=11 minimal_predicted=yes minimal_observed=yes fired=r(x)=1\n"
        )

    def test_strict_case(self, capsys):
        code, out, _ = run(capsys, "size", "--x", "01", "--q", "2", "-t", "1", "-s", "1", "-p", "0")
        assert code == 0
        assert "size=4 bound=3 minimal_predicted=no minimal_observed=no fired=none" in out

    def test_unit_alphabet(self, capsys):
        code, out, _ = run(capsys, "size", "--x", "0", "--q", "1")
        assert code == 0
        assert "size=1 bound=1" in out


class TestEnum:
    def test_reference_example(self, capsys):
        code, out, _ = run(capsys, "enum", "--x", "0000", "--q", "2", "-t", "1", "-s", "1", "-p", "1")
        assert code == 0
        assert out.splitlines() == PAPER_ENUM_LINES

    def test_single_insertion(self, capsys):
        code, out, _ = run(capsys, "enum", "--x", "0", "--q", "2", "-t", "1")
        assert code == 0
        assert out.splitlines() == ["00", "01", "10"]

    def test_empty_word_argument(self, capsys):
        code, out, _ = run(capsys, "enum", "--x", "", "--q", "2", "-t", "1")
        assert code == 0
        assert out.splitlines() == ["0", "1"]


class TestMap:
    def test_bijection_example(self, capsys):
        code, out, _ = run(capsys, "map", "bijection", "--y", "20100100", "--x", "1001",
                           "--q", "3", "-t", "4")
        assert code == 0
        assert out == "match={2,4,5,7} output=01100210\n"

    def test_injection_example(self, capsys):
        code, out, _ = run(capsys, "map", "injection", "--y", "20100100", "--x", "1001",
                           "--q", "3", "-t", "4", "-p", "2")
        assert code == 0
        assert out == "match={2,4} fill={1,3} anchor={1,2,3,4} output=00110100\n"

    def test_trivial_bijection(self, capsys):
        code, out, _ = run(capsys, "map", "bijection", "--y", "000", "--x", "111",
                           "--q", "2", "-t", "0")
        assert code == 0
        assert out == "match={1,2,3} output=111\n"


class TestWitness:
    def test_swap_flip(self, capsys):
        code, out, _ = run(capsys, "witness", "swap-flip", "--x", "01", "--q", "2",
                           "-t", "1", "-p", "0")
        assert code == 0
        assert out == "witness=10 hamming=2 member=yes\n"

    def test_deletion_pair(self, capsys):
        code, out, _ = run(capsys, "witness", "deletion-pair", "--x", "01", "--q", "2", "-s", "1")
        assert code == 0
        assert out == "u=0 v=1 distinct=yes members=yes\n"

    def test_nonsurjective(self, capsys):
        code, out, _ = run(capsys, "witness", "nonsurjective", "--x", "1001", "--q", "3",
                           "-t", "4", "-p", "2")
        assert code == 0
        assert out == ("witness=21022222 member=yes prefix_mismatch=yes"
                       " tail_not_embeddable=yes\n")

    @pytest.mark.parametrize("alias,canonical", [
        ("lemma41", ["swap-flip", "--x", "01", "--q", "2", "-t", "1", "-p", "0"]),
        ("lemma51", ["deletion-pair", "--x", "01", "--q", "2", "-s", "1"]),
        ("lemma61", ["nonsurjective", "--x", "1001", "--q", "3", "-t", "4", "-p", "2"]),
    ])
    def test_aliases_match_canonical_kinds(self, capsys, alias, canonical):
        _, out_canonical, _ = run(capsys, "witness", *canonical)
        _, out_alias, _ = run(capsys, "witness", alias, *canonical[1:])
        assert out_alias == out_canonical


class TestJsonRoundTrip:
    CASES = [
        ["size", "--x", "0000", "--q", "2", "-t", "1", "-s", "1", "-p", "1"],
        ["enum", "--x", "01", "--q", "2", "-t", "1"],
        ["map", "injection", "--y", "20100100", "--x", "1001", "--q", "3", "-t", "4", "-p", "2"],
        ["witness", "swap-flip", "--x", "01", "--q", "2", "-t", "1", "-p", "0"],
        ["verify", "--q-list", "2", "--n-max", "2", "--budget-max", "1"],
    ]

    @pytest.mark.parametrize("argv", CASES, ids=[c[0] for c in CASES])
    def test_json_rerenders_to_identical_text(self, capsys, argv):
        _, text_direct, _ = run(capsys, *argv)
        _, json_out, _ = run(capsys, *argv, "--format", "json")
        payload = json.loads(json_out)
        assert cli.render_payload(payload, "text") == text_direct


class TestVerifyCommand:
    def test_clean_run_exit_zero(self, capsys):
        code, out, _ = run(capsys, "verify", "--q-list", "2", "--n-max", "3",
                           "--budget-max", "1")
        assert code == 0
        assert "failures=0" in out

    def test_csv_format(self, capsys):
        code, out, _ = run(capsys, "verify", "--q-list", "2", "--n-max", "2",
                           "--budget-max", "1", "--format", "csv")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "check,q,n,t,s,p,x,ok,detail"
        assert all(line.count(",") >= 8 for line in lines[1:])

    def test_deterministic_bytes(self, capsys):
        argv = ["verify", "--q-list", "2", "--n-max", "2", "--budget-max", "1",
                "--format", "json"]
        _, first, _ = run(capsys, *argv)
        _, second, _ = run(capsys, *argv)
        assert first == second

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "report.json"
        code, out, _ = run(capsys, "verify", "--q-list", "2", "--n-max", "2",
                           "--budget-max", "1", "--format", "json", "--out", str(target))
        assert code == 0
        assert str(target) in out
        payload = json.loads(target.read_text())
        assert payload["summary"]["failures"] == 0

    def test_failures_exit_two(self, capsys, monkeypatch):
        import idsballs.verify as verify_mod

        grid = verify_mod.GridSpec(q_values=(2,), n_max=1, budget_max=0)
        fake = verify_mod.VerificationReport(
            grid=grid,
            cases=(verify_mod.CaseRecord("theorem", 2, 1, 0, 0, 0, "0", False, {}),),
            skipped=(),
        )
        monkeypatch.setattr(cli, "run_grid", lambda _grid: fake)
        code, out, _ = run(capsys, "verify", "--q-list", "2", "--n-max", "1",
                           "--budget-max", "0")
        assert code == 2
        assert "failures=1" in out
        assert "FAIL" in out

    def test_verbose_includes_case_table(self, capsys):
        _, quiet, _ = run(capsys, "verify", "--q-list", "2", "--n-max", "1",
                          "--budget-max", "0")
        _, loud, _ = run(capsys, "verify", "--q-list", "2", "--n-max", "1",
                         "--budget-max", "0", "-v")
        assert "cases:" not in quiet
        assert "cases:" in loud


class TestExitCodes:
    def test_domain_error_is_one(self, capsys):
        code, _, err = run(capsys, "size", "--x", "0301", "--q", "2")
        assert code == 1
        assert "error:" in err

    def test_parse_error_is_one(self):
        with pytest.raises(SystemExit) as exc:
            cli.main(["size", "--x", "01", "--q", "2", "-t", "bogus"])
        assert exc.value.code == 1

    def test_cap_error_is_three(self, capsys):
        code, _, err = run(capsys, "enum", "--x", "0000", "--q", "2", "-t", "1",
                           "--word-cap", "5")
        assert code == 3
        assert "word cap" in err

    def test_csv_rejected_outside_verify(self):
        with pytest.raises(SystemExit) as exc:
            cli.main(["size", "--x", "01", "--q", "2", "--format", "csv"])
        assert exc.value.code == 1


class TestWordCapEnvironment:
    def test_env_cap_applies(self, capsys, monkeypatch):
        monkeypatch.setenv(cli.WORD_CAP_ENV, "5")
        code, _, err = run(capsys, "enum", "--x", "0000", "--q", "2", "-t", "1")
        assert code == 3

    def test_flag_overrides_env(self, capsys, monkeypatch):
        monkeypatch.setenv(cli.WORD_CAP_ENV, "5")
        code, out, _ = run(capsys, "enum", "--x", "0000", "--q", "2", "-t", "1",
                           "--word-cap", "100000")
        assert code == 0
        assert len(out.splitlines()) == 6  # 0000 plus one inserted 1 in each slot

    def test_bad_env_value_is_domain_error(self, capsys, monkeypatch):
        monkeypatch.setenv(cli.WORD_CAP_ENV, "many")
        code, _, err = run(capsys, "enum", "--x", "01", "--q", "2")
        assert code == 1
