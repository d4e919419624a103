import json
from fractions import Fraction

import pytest

from polyode.cli import main
from polyode.criteria import EquationSpec, verify_solution

BESSEL6 = json.dumps(
    {"a3": ["0", "1", "0", "0"], "a2": ["0", "2", "2"], "tau": ["0", "6"]}
)
BESSEL5 = json.dumps(
    {"a3": ["0", "1", "0", "0"], "a2": ["0", "2", "2"], "tau": ["0", "5"]}
)
KRYLOV_GAMMA_UNKNOWN = json.dumps(
    {
        "a3": ["1", "0", "0", "0"],
        "a2": ["1", "0", "-1"],
        "tau": ["1", {"t": ["0", "-1"]}],
        "unknown": "t",
    }
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    report = json.loads(captured.out) if captured.out.strip() else None
    return code, report, captured.err


@pytest.fixture
def eq_file(tmp_path):
    def write(text):
        path = tmp_path / "eq.json"
        path.write_text(text)
        return str(path)

    return write


# ---------------------------------------------------------------------------
# check

def test_check_bessel_n2_exists(eq_file, capsys):
    code, report, err = run(capsys, "check", eq_file(BESSEL6), "--n", "2")
    assert code == 0
    assert report["exists"] is True
    sols = report["solutions"]
    assert len(sols) == 1
    assert sols[0]["coefficients"] == ["1", "3", "3"]
    assert sols[0]["verified"] is True
    assert report["aim"]["found_index"] == 2
    assert "exists: True" in err


def test_check_bessel_tau5_fails_degree_condition(eq_file, capsys):
    code, report, _ = run(capsys, "check", eq_file(BESSEL5), "--n", "2")
    assert code == 2
    assert report["exists"] is False
    assert report["degree_condition"]["holds"] is False
    assert report["degree_condition"]["level"] == 0


def test_check_davidson_demo_values(eq_file, capsys):
    eq = json.dumps(
        {"a3": ["0", "0", "1", "0"], "a2": ["-2", "0", "2"], "tau": ["-4", "0"]}
    )
    code, report, _ = run(capsys, "check", eq_file(eq), "--n", "2")
    assert code == 0
    assert report["solutions"][0]["coefficients"] == ["-3", "0", "2"]


def test_check_method_aim_only(eq_file, capsys):
    code, report, _ = run(
        capsys, "check", eq_file(BESSEL6), "--n", "2", "--method", "aim"
    )
    assert code == 0
    assert report["aim"]["found_index"] == 2
    assert report["solutions"] == []


def test_check_sweep(eq_file, capsys):
    code, report, _ = run(
        capsys, "check", eq_file(BESSEL6), "--max-n", "4", "--method", "determinant"
    )
    assert code == 0
    assert report["degrees_with_solutions"] == [2]


def test_check_malformed_json(eq_file, capsys):
    code, _, err = run(capsys, "check", eq_file("{oops"), "--n", "1")
    assert code == 1
    assert "line 1" in err and "column" in err


def test_check_undeclared_unknown(eq_file, capsys):
    bad = json.dumps(
        {"a3": ["0", "0", "0", "1"], "a2": ["0", "0", "0"],
         "tau": ["0", {"t": ["0", "1"]}]}
    )
    code, _, err = run(capsys, "check", eq_file(bad), "--n", "1")
    assert code == 1
    assert "unknown" in err


def test_check_parametric_needs_constraints(eq_file, capsys):
    code, _, err = run(capsys, "check", eq_file(KRYLOV_GAMMA_UNKNOWN), "--n", "1")
    assert code == 1
    assert "constraints" in err


def test_check_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(BESSEL6))
    code = main(["check", "-", "--n", "2", "--json"])
    captured = capsys.readouterr()
    assert code == 0
    assert captured.err == ""
    assert json.loads(captured.out)["exists"] is True


# ---------------------------------------------------------------------------
# constraints

def test_constraints_krylov_alpha1(eq_file, capsys):
    code, report, _ = run(
        capsys, "constraints", eq_file(KRYLOV_GAMMA_UNKNOWN), "--n", "1"
    )
    assert code == 0
    assert report["determinant"] == ["-1", "0", "1"]
    assert report["roots"]["exact"] == ["-1", "1"]
    assert len(report["solutions"]) == 2
    assert all(s["verified"] for s in report["solutions"])


def test_constraints_numeric_input_rejected(eq_file, capsys):
    code, _, err = run(capsys, "constraints", eq_file(BESSEL6), "--n", "2")
    assert code == 1
    assert "unknown" in err


def test_constraints_declared_but_unused_unknown_is_input_error(eq_file, capsys):
    eq = json.dumps(
        {
            "a3": ["0", "0", "0", "1"],
            "a2": ["0", "0", "0"],
            "tau": ["0", "1"],
            "unknown": "t",
        }
    )
    code, _, err = run(capsys, "constraints", eq_file(eq), "--n", "1")
    assert code == 1


def test_constraints_constant_determinant_exits_2(eq_file, capsys):
    # the unknown sits in the second superdiagonal slot, which never enters
    # the 2x2 determinant: constraint is the nonzero constant 25 - 4
    eq = json.dumps(
        {
            "a3": ["1", "0", "0", {"t": ["0", "1"]}],
            "a2": ["2", "0", "-2"],
            "tau": ["2", "-5"],
            "unknown": "t",
        }
    )
    code, report, _ = run(capsys, "constraints", eq_file(eq), "--n", "1")
    assert code == 2
    assert report["determinant"] == ["21"]
    assert report["roots"]["intervals"] == []
    assert report["exists"] is False


def test_constraints_identically_zero_determinant(eq_file, capsys):
    # x^2 y'' + (x + t) y' - y = 0 at n = 1: upper triangular matrix with a
    # vanishing corner, so the determinant is zero for every t
    eq = json.dumps(
        {
            "a3": ["0", "1", "0", "0"],
            "a2": ["0", "1", {"t": ["0", "1"]}],
            "tau": ["0", "1"],
            "unknown": "t",
        }
    )
    code, report, _ = run(capsys, "constraints", eq_file(eq), "--n", "1")
    assert code == 0
    assert report["determinant"] == []
    assert report["exists"] is True
    assert any("identically" in note for note in report["notes"])


def test_constraints_no_real_roots(eq_file, capsys):
    # x^2 y'' + x y' - (t) y: diagonal entries -t, 1-t: det has roots 0,1 -> pick
    # an equation with nonreal constraint roots instead: chhajlany with p = -1
    # at n=1 gives t^2 + 2 = 0
    eq = json.dumps(
        {
            "a3": ["0", "0", "0", "1"],
            "a2": ["-2", "0", "-1"],
            "tau": ["-2", {"t": ["0", "-1"]}],
            "unknown": "t",
        }
    )
    code, report, _ = run(capsys, "constraints", eq_file(eq), "--n", "1")
    assert code == 2
    assert report["roots"]["intervals"] == []
    assert report["roots"]["nonreal_count"] == 2


def test_constraints_round_trip_verification(eq_file, capsys):
    code, report, _ = run(
        capsys, "constraints", eq_file(KRYLOV_GAMMA_UNKNOWN), "--n", "1"
    )
    assert code == 0
    eq = EquationSpec.from_json_dict(report["equation"])
    for sol in report["solutions"]:
        fixed = eq.substitute(Fraction(sol["t"]))
        coeffs = [Fraction(c) for c in sol["coefficients"]]
        assert verify_solution(fixed, coeffs)


# ---------------------------------------------------------------------------
# demos

def test_demo_davidson(capsys):
    code, report, _ = run(capsys, "demo", "davidson", "--mu", "0", "--n", "2")
    assert code == 0
    assert report["eigenvalue"] == "11"
    assert report["solutions"][0]["coefficients"] == ["15", "0", "-20", "0", "4"]


def test_demo_coulomb(capsys):
    code, report, _ = run(
        capsys, "demo", "coulomb", "--Z", "1", "--d", "3", "--l", "0", "--n", "1"
    )
    assert code == 0
    assert report["alpha"] == "1/2"
    assert report["constraint"] == ["-1", "1"]
    assert report["beta_values"] == ["2"]
    assert report["energy"] == "-1/8"
    assert report["solutions"] and report["solutions"][0]["verified"]


def test_demo_hyper(capsys):
    code, report, _ = run(
        capsys, "demo", "hyper", "--m", "1", "--n", "1", "--l", "2",
        "--a", "1", "--b", "1",
    )
    assert code == 0
    assert report["verified"] is True
    assert report["coefficients"] == ["0", "0", "1", "1/4"]


def test_demo_krylov(capsys):
    code, report, _ = run(capsys, "demo", "krylov", "--alpha", "1", "--n", "1")
    assert code == 0
    assert report["beta"] == "-1"
    assert report["roots"]["exact"] == ["-1", "1"]


def test_demo_chhajlany(capsys):
    code, report, _ = run(capsys, "demo", "chhajlany", "--p", "2", "--n", "1")
    assert code == 0
    assert report["delta"] == "2"
    assert report["roots"]["exact"] == ["-2", "2"]
    assert len(report["solutions"]) == 2


def test_demo_bessel(capsys):
    code, report, _ = run(capsys, "demo", "bessel", "--n", "2")
    assert code == 0
    assert report["tau00"] == "6"
    assert report["ladder_solves_equation"] is True
    assert report["solutions"][0]["coefficients"] == ["1", "3", "3"]


def test_demo_heun_biconfluent(capsys):
    params = json.dumps(
        {"alpha": "2", "beta": "4", "gamma": "4", "delta": {"t": ["0", "1"]}}
    )
    code, report, _ = run(
        capsys, "demo", "heun-biconfluent", "--params", params, "--n", "0"
    )
    assert code == 0
    assert report["roots"]["exact"] == ["-12"]  # delta = -(alpha+1) beta


def test_demo_unknown_name(capsys):
    code, _, err = run(capsys, "demo", "nosuch")
    assert code == 1
    assert "davidson" in err and "coulomb" in err


# ---------------------------------------------------------------------------
# heun command

def test_heun_confluent_numeric(capsys):
    params = json.dumps(
        {"alpha": "1", "beta": "1", "gamma": "2", "mu": "0", "nu": "-1"}
    )
    code, report, _ = run(capsys, "heun", "confluent", "--params", params, "--n", "1")
    assert code == 0
    assert report["exists"] is True


def test_heun_general_fuchsian_violation(capsys):
    params = json.dumps(
        {"a": "2", "alpha": "1", "beta": "1", "gamma": "1", "delta": "1",
         "epsilon": "2", "q": "0"}
    )
    code, _, err = run(capsys, "heun", "general", "--params", params, "--n", "1")
    assert code == 1
    assert "residual" in err


def test_heun_rejects_float_params(capsys):
    params = json.dumps({"alpha": 0.5, "beta": "1", "gamma": "1", "delta": "1"})
    code, _, err = run(capsys, "heun", "biconfluent", "--params", params, "--n", "0")
    assert code == 1
    assert "exact strings" in err


# ---------------------------------------------------------------------------
# argument handling

def test_bad_flag_exits_1(capsys):
    assert main(["check", "nothere.json"]) == 1  # missing --n and file
    capsys.readouterr()
