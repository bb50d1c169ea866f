"""Command-line interface: exit codes, output formats, option handling."""

import json

import pytest

from confalg.cli import main


def test_examples_all_pass(capsys):
    assert main(["examples"]) == 0
    out = capsys.readouterr().out
    assert out.count("ok ") >= 20
    assert "BAD" not in out


def test_verify_conformal_leibniz_ok(capsys):
    assert main(["verify-conformal", "rab"]) == 0
    out = capsys.readouterr().out
    assert "passed" in out


def test_verify_conformal_lie_fails_for_leibniz_only_bracket(capsys):
    assert main(["verify-conformal", "--kind", "lie", "fpoly_nonlie"]) == 1
    out = capsys.readouterr().out
    assert "FAIL" in out


def test_verify_conformal_lie_ok_for_virasoro(capsys):
    assert main(["verify-conformal", "--kind", "lie", "virasoro"]) == 0
    capsys.readouterr()


def test_missing_file_is_usage_error(capsys):
    assert main(["verify-conformal", "no_such_algebra"]) == 2
    err = capsys.readouterr().err
    assert "no_such_algebra" in err


def test_parse_error_is_usage_error(tmp_path, capsys):
    bad = tmp_path / "bad.alg"
    bad.write_text("algebra x\nbasis d even\n")
    assert main(["verify-conformal", str(bad)]) == 2
    err = capsys.readouterr().err
    assert "reserved" in err


def test_check_structure_t_system(capsys):
    assert main(["check-structure", "--which", "t", "rab"]) == 0
    capsys.readouterr()


def test_check_structure_each_which(capsys):
    pairs = [
        ("t", "rab"), ("anl", "rab"), ("assoc-novikov", "r00"),
        ("novikov", "gd_final"), ("gd", "gd_final"),
        ("symmetrized", "gd_final"), ("star-zero", "star0_sq"),
        ("circ-zero", "circ0_sq"), ("averaging", "avg_x3"),
    ]
    for which, name in pairs:
        assert main(["check-structure", "--which", which, name]) == 0, (which,
                                                                        name)
        capsys.readouterr()


def test_check_structure_catches_violations(capsys):
    # the two-generator product is not Novikov
    assert main(["check-structure", "--which", "novikov", "rab"]) == 1
    capsys.readouterr()


def test_classify_brackets(capsys):
    assert main(["classify-brackets", "r00"]) == 0
    out = capsys.readouterr().out
    assert "2-parameter family" in out
    assert "(W, L) -> t0 L" in out


def test_central_ext_routes_agree(capsys):
    assert main(["central-ext", "--case", "assoc-novikov", "r00"]) == 0
    out = capsys.readouterr().out
    assert "agree" in out.lower()


def test_central_ext_requires_rational_parameters(capsys):
    assert main(["central-ext", "--case", "assoc-novikov", "rab"]) == 2
    err = capsys.readouterr().err
    assert "--at" in err


def test_central_ext_with_at(capsys):
    assert main(["central-ext", "--case", "gd", "--at", "a=2",
                 "gd_final"]) == 0
    capsys.readouterr()


def test_central_ext_higher_degree(capsys):
    assert main(["central-ext", "--case", "assoc-novikov", "--degree", "5",
                 "r00"]) == 0
    capsys.readouterr()


def test_at_accepts_fractions(capsys):
    assert main(["verify-conformal", "--at", "a=2,b=-1/3", "rab"]) == 0
    capsys.readouterr()


def test_at_rejects_garbage(capsys):
    assert main(["verify-conformal", "--at", "a=oops", "rab"]) == 2
    capsys.readouterr()


def test_coeff_table(capsys):
    assert main(["coeff", "--grid", "-1..1", "--at", "a=1,b=0", "rab"]) == 0
    out = capsys.readouterr().out
    assert "[L[1], W[-1]] = 2 L[-1] + L[0]" in out


def test_coeff_verify(capsys):
    assert main(["coeff", "--verify", "--grid", "-2..2", "--at", "a=0,b=1",
                 "rab"]) == 0
    capsys.readouterr()


def test_coeff_phi(capsys):
    assert main(["coeff", "--phi", "from-central-ext", "--case",
                 "assoc-novikov", "--grid", "-2..2", "r00"]) == 0
    out = capsys.readouterr().out
    assert "phi" in out


def test_machine_format_is_json(capsys):
    assert main(["verify-conformal", "--format", "machine", "rab"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["passed"] is True
    assert payload["algebra"] == "rab"
    assert isinstance(payload["reports"], list)
    assert all("passed" in r for r in payload["reports"])


def test_machine_format_central_ext(capsys):
    assert main(["central-ext", "--case", "assoc-novikov", "--format",
                 "machine", "r00"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["passed"] is True
    assert payload["structured"]["dimension"] == 4
    assert payload["direct"]["dimension"] == 4
    assert payload["agree"] is True


def test_fail_fast_stops_at_first_failure(capsys):
    assert main(["verify-conformal", "--kind", "lie", "rab"]) == 1
    full = capsys.readouterr().out.count("residual")
    assert main(["verify-conformal", "--kind", "lie", "--fail-fast",
                 "rab"]) == 1
    fast = capsys.readouterr().out.count("residual")
    # fail-fast reports at most one failure per identity check
    assert fast == 2 < full


def test_grid_option_glues_negative_values(capsys):
    # "--grid -2..2" must not be eaten by the option parser
    assert main(["coeff", "--grid", "-2..2", "--at", "a=1,b=1", "rab"]) == 0
    capsys.readouterr()


def test_path_loading(tmp_path, capsys):
    src = ("algebra tiny\nbasis e even, f even\n"
           "bracket br { e e -> f; }\n")
    path = tmp_path / "tiny.alg"
    path.write_text(src)
    assert main(["verify-conformal", str(path)]) == 0
    capsys.readouterr()
