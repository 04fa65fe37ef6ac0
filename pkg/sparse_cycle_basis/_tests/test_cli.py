import json

import pytest

from sparse_cycle_basis.cli import main
from sparse_cycle_basis.fixtures import Fixture
from sparse_cycle_basis.io import write_embedding


@pytest.fixture
def fixture_file(tmp_path):
    def make(fixture):
        path = tmp_path / f"{fixture.name.lower()}.json"
        write_embedding(fixture(), path)
        return str(path)

    return make


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.mark.parametrize(
    "fixture,summary",
    [
        (Fixture.K7_TORUS, "faces: 14, chi: 0, surface: orientable genus 1"),
        (Fixture.TRIANGLE, "faces: 2, chi: 2, surface: orientable genus 0"),
        (
            Fixture.K5_KLEIN,
            "faces: 5, chi: 0, surface: non-orientable genus 2",
        ),
    ],
)
def test_validate(capsys, fixture_file, fixture, summary):
    code, out, _ = run(capsys, "validate", fixture_file(fixture))
    assert code == 0
    assert out.splitlines() == ["valid: true", summary]


def test_validate_misplaced_dart(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text(
        json.dumps(
            {
                "vertices": 3,
                "edges": [[0, 1], [0, 2], [1, 2]],
                "rotation": [
                    [[1, 0]],
                    [[0, 0], [0, 1], [2, 0]],
                    [[1, 1], [2, 1]],
                ],
                "signs": [1, 1, 1],
            }
        )
    )
    code, out, _ = run(capsys, "validate", str(path))
    assert code == 1
    assert out.splitlines()[0] == "valid: false"
    assert "misplaced" in out


def test_faces_euler_surface(capsys, fixture_file):
    path = fixture_file(Fixture.K5_PROJECTIVE)
    code, out, _ = run(capsys, "faces", path)
    assert code == 0
    assert sum(line.startswith("face ") for line in out.splitlines()) == 6
    assert run(capsys, "euler", path)[1] == "chi: 1\n"
    _, out, _ = run(capsys, "surface", path, "--json")
    assert json.loads(out) == {
        "orientable": False,
        "genus": 1,
        "chi": 1,
        "name": "projective plane",
    }


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "faces", str(tmp_path / "absent.json"))
    assert code == 1
    assert err.startswith("error:")


@pytest.mark.parametrize(
    "fixture,dimension,max_sparsity",
    [
        (Fixture.K5_TORUS, 6, 3),
        (Fixture.CUBE_SPHERE, 5, 2),
        (Fixture.K5_DOUBLE_TORUS, 6, 6),
    ],
)
def test_basis_then_verify(
    capsys, tmp_path, fixture_file, fixture, dimension, max_sparsity
):
    graph = fixture_file(fixture)
    output = str(tmp_path / "basis.json")
    code, out, _ = run(capsys, "basis", graph, "--output", output, "--json")
    assert code == 0
    report = json.loads(out)
    assert report["dimension"] == dimension
    assert report["sparsity"] <= max_sparsity

    code, out, _ = run(capsys, "verify", graph, output, "--json")
    assert code == 0
    assert json.loads(out) == {
        "is_basis": True,
        "dimension": dimension,
        "sparsity": report["sparsity"],
    }


def test_verify_rejects_damaged_basis(capsys, tmp_path, fixture_file):
    graph = fixture_file(Fixture.K33_TORUS)
    output = tmp_path / "basis.json"
    run(capsys, "basis", graph, "--output", str(output))
    data = json.loads(output.read_text())

    short = {**data, "elements": data["elements"][:-1]}
    output.write_text(json.dumps(short))
    code, out, _ = run(capsys, "verify", graph, str(output))
    assert code == 2
    assert out.startswith("is_basis: false")

    elements = data["elements"]
    doubled = {**data, "elements": [*elements[:-1], elements[0]]}
    output.write_text(json.dumps(doubled))
    assert run(capsys, "verify", graph, str(output))[0] == 2

    output.write_text(json.dumps({**data, "edges": data["edges"] + 1}))
    assert run(capsys, "verify", graph, str(output))[0] == 2


def test_wrong_method_for_surface(capsys, fixture_file):
    code, _, err = run(
        capsys, "basis", fixture_file(Fixture.K5_DOUBLE_TORUS), "--method",
        "three",
    )
    assert code == 1
    assert "chi" in err


@pytest.mark.parametrize(
    "fixture,bn,planar",
    [
        (Fixture.K4_SPHERE, 2, "planar: true"),
        (Fixture.K5_TORUS, 3, "planar: false (K5 certificate, 10 edges)"),
        (Fixture.K33_TORUS, 3, "planar: false (K3,3 certificate, 9 edges)"),
    ],
)
def test_oracle(capsys, fixture_file, fixture, bn, planar):
    code, out, _ = run(capsys, "oracle", fixture_file(fixture))
    assert code == 0
    assert out.splitlines() == [f"basis number: {bn}", planar]


def test_oracle_guard(capsys, fixture_file):
    code, _, err = run(capsys, "oracle", fixture_file(Fixture.K7_TORUS))
    assert code == 1
    assert "brute-force" in err


def test_planar(capsys, fixture_file):
    code, out, _ = run(capsys, "planar", fixture_file(Fixture.CUBE_SPHERE))
    assert code == 0
    assert out == "planar: true\n"


def test_bound(capsys):
    code, out, _ = run(capsys, "bound", "--genus", "1")
    assert code == 0
    assert "final bound: 4" in out

    code, out, _ = run(capsys, "bound", "--genus", "100", "--g0", "10")
    rows = [line.split() for line in out.splitlines()[1:3]]
    assert [row[:2] for row in rows] == [["0", "100"], ["1", "94"]]

    code, out, _ = run(capsys, "bound", "--genus", "1000000000", "--json")
    report = json.loads(out)
    assert report["final_bound"] <= report["m_log2_squared"]


def test_randgen_is_deterministic(capsys, tmp_path):
    outputs = []
    for name in ("a.json", "b.json"):
        path = tmp_path / name
        code, _, _ = run(
            capsys,
            "randgen",
            "--vertices", "4",
            "--edges", "8",
            "--seed", "7",
            "--output", str(path),
        )
        assert code == 0
        outputs.append(path.read_bytes())
    assert outputs[0] == outputs[1]
    code, out, _ = run(capsys, "euler", str(tmp_path / "a.json"))
    assert out == "chi: 0\n"


def test_randgen_not_found(capsys):
    code, _, err = run(
        capsys,
        "randgen",
        "--vertices", "6",
        "--edges", "13",
        "--target-chi", "2",
        "--tries", "20",
    )
    assert code == 1
    assert "no embedding" in err


def test_stress(capsys):
    code, out, _ = run(capsys, "stress", "--count", "5", "--seed", "1")
    assert code == 0
    report_lines = out.splitlines()
    assert report_lines[-1] == "failures: 0"
    counts = [int(line.split(": ")[1]) for line in report_lines[:-1]]
    assert sum(counts) == 5


def test_fixture_command(capsys, tmp_path):
    path = tmp_path / "k7.json"
    assert run(capsys, "fixture", "k7_torus", "--output", str(path))[0] == 0
    assert run(capsys, "euler", str(path))[1] == "chi: 0\n"
    _, out, _ = run(capsys, "fixture", "triangle")
    assert json.loads(out)["name"] == "triangle"
