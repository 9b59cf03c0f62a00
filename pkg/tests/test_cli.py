import json

import pytest

from heckespecht.cli import main
from heckespecht.homs import HomSpec
from heckespecht.reducibility import ReducibilityReport


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_qbinom_text(capsys):
    code, out, _ = run_cli(capsys, "qbinom", "--field", "cyclotomic:e=2", "--alpha", "4", "--beta", "2")
    assert code == 0
    assert "field cyclotomic:e=2 (e=2, p=0)" in out
    assert "value: 2" in out


def test_qbinom_domain_error(capsys):
    code, _, err = run_cli(capsys, "qbinom", "--field", "cyclotomic:e=2", "--alpha", "2", "--beta", "5")
    assert code == 2
    assert "error" in err


def test_bad_field_is_domain_error(capsys):
    code, _, err = run_cli(capsys, "qbinom", "--field", "p=6,q=1", "--alpha", "1", "--beta", "1")
    assert code == 2


def test_bad_partition_is_domain_error(capsys):
    code, _, err = run_cli(capsys, "trivial-sub", "--field", "cyclotomic:e=3", "--mu", "1,3")
    assert code == 2
    assert "error" in err


def test_vanish_run(capsys):
    code, out, _ = run_cli(
        capsys, "vanish-run", "--field", "p=7,q=2", "--alpha", "20", "--beta", "3"
    )
    assert code == 0
    assert "vanishes: true" in out


def test_trivial_sub(capsys):
    code, out, _ = run_cli(capsys, "trivial-sub", "--field", "cyclotomic:e=3", "--mu", "2,2,1")
    assert code == 0
    assert "trivial_submodule: true" in out


def test_cp_map_matches_expected_coefficients(capsys):
    code, out, _ = run_cli(
        capsys, "--format", "json", "cp-map", "--field", "cyclotomic:e=4",
        "--xi", "2,1,1", "--a", "1", "--b", "3",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["e"] == 4 and payload["p"] == 0
    hom = HomSpec.from_json(payload["result"])
    coeffs = {tuple(map(tuple, t.rows)): str(hom.coefficient(t)) for t in hom.coeffs}
    assert coeffs == {((1, 1, 2), (3,)): "1", ((1, 1, 3), (2,)): "z"}


def test_cp_verify_roundtrip_through_file(capsys, tmp_path):
    code, out, _ = run_cli(
        capsys, "--format", "json", "cp-map", "--field", "cyclotomic:e=3",
        "--xi", "2,1", "--a", "1", "--b", "2",
    )
    payload = json.loads(out)["result"]
    path = tmp_path / "hom.json"
    path.write_text(json.dumps(payload))
    code, out, _ = run_cli(
        capsys, "--format", "json", "cp-verify", "--field", "cyclotomic:e=3",
        "--hom-json", str(path),
    )
    assert code == 0
    result = json.loads(out)["result"]
    assert result == {"nonzero": True, "lands_in_specht": True}


def test_cp_verify_rejects_field_mismatch(capsys, tmp_path):
    code, out, _ = run_cli(
        capsys, "--format", "json", "cp-map", "--field", "cyclotomic:e=3",
        "--xi", "2,1", "--a", "1", "--b", "2",
    )
    path = tmp_path / "hom.json"
    path.write_text(json.dumps(json.loads(out)["result"]))
    code, _, err = run_cli(
        capsys, "cp-verify", "--field", "cyclotomic:e=4", "--hom-json", str(path)
    )
    assert code == 2
    assert "cyclotomic:e=3" in err


def test_classify_worker_pool_matches_sequential(capsys, monkeypatch):
    args = ("--format", "csv", "classify", "--field", "cyclotomic:e=3", "--n", "5")
    _, sequential, _ = run_cli(capsys, *args)
    monkeypatch.setenv("HECKESPECHT_WORKERS", "2")
    _, pooled, _ = run_cli(capsys, *args)
    assert pooled == sequential


def test_cp_eligible_outside_scope(capsys):
    code, out, _ = run_cli(
        capsys, "cp-eligible", "--field", "cyclotomic:e=3",
        "--mu", "3,2,2", "--a", "1", "--b", "3", "--gamma", "2",
    )
    assert code == 0
    assert "outside proven scope" in out


def test_hom_dim(capsys):
    code, out, _ = run_cli(
        capsys, "hom-dim", "--field", "cyclotomic:e=3", "--lambda", "3", "--mu", "2,1"
    )
    assert code == 0
    assert "dimension: 1" in out
    code, out, _ = run_cli(
        capsys, "hom-dim", "--field", "cyclotomic:e=4", "--lambda", "3", "--mu", "2,1"
    )
    assert "dimension: 0" in out


def test_hom_dim_guard(capsys):
    code, _, err = run_cli(
        capsys, "hom-dim", "--field", "cyclotomic:e=3",
        "--lambda", "10", "--mu", "9,1",
    )
    assert code == 2
    assert "--force" in err


def test_compose(capsys):
    code, out, _ = run_cli(
        capsys, "--format", "json", "compose", "--field", "p=97,q=3",
        "--tableau", "[[1,1,2]]", "--d", "1", "--t", "0",
    )
    assert code == 0
    result = json.loads(out)["result"]
    assert result["target"] == [3, 0]
    assert result["coefficients"] == [{"tableau": [[1, 1, 1]], "scalar": "13"}]


def test_classify_outputs(capsys):
    code, out, _ = run_cli(capsys, "classify", "--field", "cyclotomic:e=3", "--n", "3")
    assert code == 0
    assert "2,1: reducible" in out
    code, out, _ = run_cli(capsys, "--format", "json", "classify", "--field", "cyclotomic:e=3", "--n", "3")
    reports = [ReducibilityReport.from_json(item) for item in json.loads(out)["result"]]
    assert [r.verdict for r in reports] == ["irreducible", "reducible", "irreducible"]
    code, out, _ = run_cli(capsys, "--format", "csv", "classify", "--field", "cyclotomic:e=3", "--n", "3")
    lines = out.strip().splitlines()
    assert lines[0] == "# field=cyclotomic:e=3,e=3,p=0"
    assert lines[1] == "partition,e,p,verdict,witness,note"
    assert lines[3] == '"2,1",3,0,reducible,"1,1;1,2;2,1",'


def test_tables(capsys):
    code, out, _ = run_cli(capsys, "tables", "--field", "cyclotomic:e=2", "--max", "4")
    assert code == 0
    assert "[4] 1  0  2  0  1" in out


def test_byte_identical_reruns(capsys):
    args = ("--format", "json", "classify", "--field", "p=7,q=2", "--n", "5")
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)
    assert first == second
    args = ("--format", "csv", "tables", "--field", "cyclotomic:e=3", "--max", "6")
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)
    assert first == second


def test_unknown_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
