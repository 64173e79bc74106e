import json

import pytest

from forest_complex_cli import main
from src.cli.arguments import parse_arguments
from src.complexes.degree import UNBOUNDED, finite


def _run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def _nonzero(profile_json):
    return {q: g for q, g in profile_json["dims"].items() if g["betti"] or g["torsion"]}


def test_parse_arguments():
    args = parse_arguments(["hom", "--family", "cycle:8", "--d", "1", "--dims", "0..4"])
    assert args.command == "hom"
    assert args.d == finite(1)
    assert args.dims == (0, 4)
    assert parse_arguments(["complex", "--family", "path:3", "--d", "inf"]).d == UNBOUNDED
    bench = parse_arguments(["bench", "--case", "knxkm:3,3:d2", "--case", "cycle:5:d1"])
    assert bench.case == ["knxkm:3,3:d2", "cycle:5:d1"]
    assert bench.format == "table"


@pytest.mark.parametrize(
    "argv",
    [
        ["hom", "--family", "cycle:5", "--d", "-1"],
        ["hom", "--family", "cycle:5", "--graph", "g.json", "--d", "1"],
        ["verify", "--suite", "paper", "--property", "cone-lemma"],
        ["bench", "--case", "cycle:5:d1", "--reps", "0"],
        ["gen"],
    ],
)
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        parse_arguments(argv)
    assert exc.value.code == 2


def test_hom_of_a_family(capsys):
    code, out = _run(capsys, "hom", "--family", "cycle:8", "--d", "1", "--dims", "0..4")
    assert code == 0
    assert _nonzero(json.loads(out)) == {"3": {"betti": 3, "torsion": []}}


def test_hom_table_and_cohomology(capsys):
    code, out = _run(capsys, "hom", "--family", "cycle:5", "--d", "1", "--format", "table")
    assert code == 0
    assert "H_1 = Z" in out
    code, out = _run(capsys, "hom", "--family", "cycle:5", "--d", "1", "--format", "table", "--cohomology")
    assert code == 0
    assert "H^1 = Z" in out


def test_gen_complex_hom_round_trip(capsys, tmp_path):
    graph_file = tmp_path / "g.txt"
    complex_file = tmp_path / "k.json"
    assert main(["gen", "--family", "cycle:6", "--format", "edges", "--out", str(graph_file)]) == 0
    assert graph_file.read_text().startswith("# cycle:6\nn 6\n")
    assert main(["complex", "--graph", str(graph_file), "--d", "1", "--out", str(complex_file)]) == 0
    capsys.readouterr()
    _, from_complex = _run(capsys, "hom", "--complex", str(complex_file))
    _, from_family = _run(capsys, "hom", "--family", "cycle:6", "--d", "1")
    assert _nonzero(json.loads(from_complex)) == _nonzero(json.loads(from_family)) == {
        "2": {"betti": 1, "torsion": []}
    }


def test_gen_seeded_family(capsys):
    code, out = _run(capsys, "gen", "--family", "cactus:4,4", "--seed", "7")
    assert code == 0
    data = json.loads(out)
    assert data["family"] == "cactus:7,4,4"
    assert data["prng"] == "numpy.random.PCG64"
    _, again = _run(capsys, "gen", "--family", "cactus:7,4,4")
    assert json.loads(again)["edges"] == data["edges"]


def test_export_matrices(capsys, tmp_path):
    out_dir = tmp_path / "matrices"
    code, _ = _run(capsys, "hom", "--family", "cycle:4", "--d", "1", "--export-matrices", str(out_dir))
    assert code == 0
    assert (out_dir / "d0.txt").read_text().splitlines()[0] == "1 4 4"
    assert (out_dir / "d1.txt").exists()
    assert not (out_dir / "d2.txt").exists()


def test_verify_suite_slice(capsys):
    code, out = _run(capsys, "verify", "--suite", "paper", "--filter", "double-star", "--max-r", "3")
    assert code == 0
    data = json.loads(out)
    assert data["counts"]["fail"] == 0
    assert data["counts"]["pass"] > 0
    assert all("wall_time" not in r for r in data["reports"])


def test_verify_single_case_and_strict(capsys):
    code, out = _run(capsys, "verify", "--case", "doublestar:2,2:d0")
    assert code == 0
    report = json.loads(out)["reports"][0]
    assert report["verdict"] == "skipped"
    assert report["reason"] == "outside-range"
    code, _ = _run(capsys, "verify", "--case", "doublestar:2,2:d0", "--strict")
    assert code == 3


def test_verify_property(capsys):
    code, out = _run(capsys, "verify", "--property", "euler-consistency", "--family", "petersen", "--d", "1",
                     "--timings")
    assert code == 0
    data = json.loads(out)
    assert data["seed"] == 0
    assert data["counts"] == {"pass": 1, "fail": 0, "skipped": 0, "vacuous": 0}
    assert "wall_time" in data["reports"][0]


def test_verify_property_counts_vacuous_runs(capsys):
    code, out = _run(capsys, "verify", "--property", "bridge-invariance", "--family", "cycle:5", "--d", "inf")
    assert code == 0
    data = json.loads(out)
    assert data["counts"] == {"pass": 1, "fail": 0, "skipped": 0, "vacuous": 1}
    assert data["reports"][0]["notes"] == ["vacuous: no bridges"]


def test_input_errors_exit_2(capsys):
    assert main(["gen", "--family", "nosuchfamily:3"]) == 2
    assert main(["hom", "--family", "cycle:4"]) == 2
    assert main(["verify", "--property", "no-such-property"]) == 2


def test_missing_file_exits_4(tmp_path):
    assert main(["hom", "--graph", str(tmp_path / "missing.json"), "--d", "1"]) == 4


def test_budget_exhaustion_is_reported(capsys):
    assert main(["hom", "--family", "complete:6", "--d", "1", "--budget-faces", "3"]) == 3


def test_bench(capsys):
    code, out = _run(capsys, "bench", "--case", "cycle:5:d1", "--reps", "1")
    assert code == 0
    assert "cycle:5:d1" in out
