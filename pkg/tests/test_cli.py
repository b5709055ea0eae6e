import json
import sys
from pathlib import Path

import pytest

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.append(str(project_root))

import master_solver
from cli import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, run
from config import Settings
from solution_report import SolutionReport
from solvers.models import AffineLatticeSet
from utils.lattice_set import equivalent


@pytest.fixture
def settings():
    return Settings(oracle_radius=3)


# ======================================================================================
# SOLVE
# ======================================================================================

def test_solve_json_reconstructs_set(settings):
    status, output = run(["solve", "2x + 3y + 7z = 23", "--json"], settings)
    assert status == EXIT_OK
    report = SolutionReport.model_validate_json(output)
    assert report.status == "lattice"
    assert report.case == "formula2(a,b)"
    expected = AffineLatticeSet.lattice((-23, 23, 0), [(7, -7, 1), (-3, 2, 0)])
    assert equivalent(report.to_solution_set(), expected)


def test_solve_text(settings):
    status, output = run(["solve", "x - 3y - 4z = 0"], settings)
    assert status == EXIT_OK
    assert output.splitlines() == [
        "case: formula1",
        "parameters: m, n range over the integers",
        "x = 3m + 4n",
        "y = m",
        "z = n",
    ]


def test_solve_system_prints_invariants(settings):
    status, output = run(["solve", "--system", "6x - 4y + 3z = 30", "3x + 6y - 2z = 25"], settings)
    assert status == EXIT_OK
    assert "case: formula4-ii" in output
    assert "D1 = 48, D2 = -10, D3 = -21, D = -135, D23 = 1, delta = 3" in output


def test_solve_system_json_has_invariants(settings):
    _, output = run(["solve", "--system", "6x - 4y + 3z = 30", "3x + 6y - 2z = 25", "--json"], settings)
    payload = json.loads(output)
    assert payload["invariants"]["delta"] == 3
    assert equivalent(
        SolutionReport(**payload).to_solution_set(),
        AffineLatticeSet.lattice((5, 3, 4), [(-10, 21, 48)]),
    )


def test_all_zero_system_is_all_space(settings):
    status, output = run(["solve", "--system", "0x+0y+0z=0", "0x+0y+0z=0", "--json"], settings)
    assert status == EXIT_OK
    report = SolutionReport.model_validate_json(output)
    assert report.case == "C5"
    assert len(report.generators) == 3


def test_empty_set_is_success(settings):
    status, output = run(["solve", "2x + 4y + 6z = 3"], settings)
    assert status == EXIT_OK
    assert "no integer solutions: 2 does not divide 3" in output


def test_empty_set_json(settings):
    _, output = run(["solve", "2x + 4y + 6z = 3", "--json"], settings)
    assert json.loads(output) == {
        "status": "empty",
        "reason": {"divisor": 2, "target": 3},
        "case": "unsolvable-divisibility",
    }


def test_two_variable_equation(settings):
    status, output = run(["solve", "--xy", "102x + 140y = 318"], settings)
    assert status == EXIT_OK
    assert "x = -1 + 70m" in output
    assert "y = 3 - 51m" in output


def test_unicode_minus(settings):
    status, output = run(["solve", "6x − 15y + 10z = 4"], settings)
    assert status == EXIT_OK
    assert "case: formula3" in output


@pytest.mark.parametrize("compact, spaced", [
    (["solve", "-x+y=0"], ["solve", "-x + y = 0"]),
    (["solve", "--xy", "-3x+6y=9"], ["solve", "--xy", "-3x + 6y = 9"]),
    (["solve", "--system", "-x+y=0", "x + y + z = 2"], ["solve", "--system", "-x + y = 0", "x + y + z = 2"]),
])
def test_leading_minus_without_spaces(compact, spaced, settings):
    status, output = run(compact, settings)
    assert status == EXIT_OK, output
    assert (status, output) == run(spaced, settings)


def test_ball_with_negative_center(settings):
    status, output = run(["enumerate", "x - 3y - 4z = 0", "--ball", "-1,0,0:1"], settings)
    assert status == EXIT_OK, output
    assert output == "(0, 0, 0)"


# ======================================================================================
# ENUMERATE AND COUNT
# ======================================================================================

def test_count_coin_example(settings):
    status, output = run(["count", "2x + y + 5z = 16", "--box", "x:0:8,y:0:16,z:0:3"], settings)
    assert status == EXIT_OK
    assert output == "20"


def test_enumerate_with_ball(settings):
    status, output = run(["enumerate", "x - 3y - 4z = 0", "--ball", "0,0,0:2"], settings)
    assert status == EXIT_OK
    assert output.splitlines() == ["(-1, 1, -1)", "(0, 0, 0)", "(1, -1, 1)"]


def test_enumerate_triangle_json(settings):
    status, output = run(
        ["enumerate", "--system", "x + y + z = 85", "7x - 10y + 3z = 0",
         "--box", "x:1:85,y:1:85,z:1:85", "--positive", "--triangle", "--json"],
        settings,
    )
    assert status == EXIT_OK
    assert json.loads(output)["points"] == [[24, 27, 34], [37, 31, 17]]


def test_enumerate_nothing(settings):
    status, output = run(["enumerate", "x + y + z = 100", "--box", "x:0:1,y:0:1,z:0:1"], settings)
    assert status == EXIT_OK
    assert output == "no points in region"


# ======================================================================================
# ORACLE
# ======================================================================================

def test_oracle_agrees(settings):
    status, output = run(["enumerate", "x - 3y - 4z = 0", "--box", "x:-2:2,y:-2:2,z:-2:2", "--oracle"], settings)
    assert status == EXIT_OK
    assert output.splitlines()[-1] == "oracle: agree (7 points)"


def test_solve_oracle_uses_default_cube():
    status, output = run(["solve", "x - 3y - 4z = 0", "--oracle", "--json"], Settings(oracle_radius=2))
    assert status == EXIT_OK
    oracle = json.loads(output)["oracle"]
    assert oracle["agree"] is True
    assert oracle["oracle_count"] == 7


def test_oracle_cap_exceeded():
    status, output = run(
        ["count", "2x + y + 5z = 16", "--box", "x:0:8,y:0:16,z:0:3", "--oracle"],
        Settings(oracle_cap=10),
    )
    assert status == EXIT_CHECK_FAILED
    assert output.startswith("error: ")
    assert "cap" in output


def test_oracle_disagreement(settings, monkeypatch):
    monkeypatch.setattr(master_solver, "enumerate_points", lambda solution, region: [])
    status, output = run(["solve", "x - 3y - 4z = 0", "--oracle"], settings)
    assert status == EXIT_CHECK_FAILED
    assert "oracle: DISAGREE" in output


# ======================================================================================
# USAGE ERRORS
# ======================================================================================

@pytest.mark.parametrize("argv", [
    [],
    ["solve"],
    ["solve", "x + y = 1", "--xy", "x + y = 1"],
    ["enumerate", "x + y + z = 1"],
    ["count", "x + y + z = 1", "--box", "x:0:1,y:0:1"],
    ["count", "x + y + z = 1", "--box", "x:2:1,y:0:1,z:0:1"],
    ["count", "x + y + z = 1", "--box", "x:a:1,y:0:1,z:0:1"],
    ["enumerate", "x + y + z = 1", "--ball", "0,0:2"],
    ["enumerate", "--xy", "x + y = 1", "--ball", "0,0:1", "--triangle"],
    ["solve", "2x + 3w = 1"],
    ["solve", "2x + 3y"],
    ["frobnicate", "x = 1"],
])
def test_usage_errors(argv, settings):
    status, output = run(argv, settings)
    assert status == EXIT_USAGE
    assert output.startswith("error: ")


def test_bad_environment(monkeypatch):
    monkeypatch.setenv("DIOPHANTINE_ORACLE_CAP", "lots")
    status, output = run(["solve", "x = 1"])
    assert status == EXIT_USAGE
    assert "DIOPHANTINE_ORACLE_CAP" in output
