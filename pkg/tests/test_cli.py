import json

import pytest

from pointfree.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_catalog_counts(tmp_path, capsys):
    for k, posets in ((1, 1), (2, 3), (3, 8)):
        code, _ = run(capsys, "catalog", "--max-points", str(k), "--corpus", str(tmp_path / str(k)))
        manifest = json.loads((tmp_path / str(k) / "manifest.json").read_text())
        assert code == 0 and len(manifest["entries"]) == posets
    one = json.loads((tmp_path / "1" / "manifest.json").read_text())
    assert one["entries"][0]["frame_size"] == 2
    three = json.loads((tmp_path / "3" / "manifest.json").read_text())
    assert three["posets_by_size"] == {"1": 1, "2": 2, "3": 5}


def test_catalog_cap(tmp_path, capsys):
    assert run(capsys, "catalog", "--max-points", "7", "--corpus", str(tmp_path))[0] == 3


def test_verify_fixture_report(tmp_path, capsys):
    out = tmp_path / "r.json"
    code, _ = run(capsys, "verify", "fixtures", "CofiniteNat", "--json", str(out))
    assert code == 0
    rep = json.loads(out.read_text())
    assert rep["schema"] == "raney-report/1" and rep["summary"]["fail"] == 0
    laws = {c["law"]: c["status"] for c in rep["targets"][0]["checks"]}
    assert laws["sober = false matches the point-set oracle"] == "pass"
    assert laws["TD = true matches the point-set oracle"] == "pass"


def test_verify_background_on_three_chain(capsys):
    code, out = run(capsys, "verify", "background", "chain:3")
    assert code == 0 and "0 fail" in out


def test_verify_uses_catalog_manifest(tmp_path, capsys):
    run(capsys, "catalog", "--max-points", "2", "--corpus", str(tmp_path))
    code, out = run(capsys, "verify", "raney-core", "--corpus", str(tmp_path))
    assert code == 0 and "raney-core: 3 targets" in out


def test_verify_duality_small_corpus(capsys):
    code, out = run(capsys, "verify", "duality", "--max-points", "3")
    assert code == 0 and "0 fail" in out


def test_spectrum_commands(tmp_path, capsys):
    out = tmp_path / "s.json"
    code, _ = run(capsys, "spectrum", "CofiniteNat", "E", "--json", str(out))
    assert code == 0 and json.loads(out.read_text())["labels"] == [str(n) for n in range(16)]
    run(capsys, "spectrum", "CofiniteNat", "SE", "--json", str(out))
    assert json.loads(out.read_text())["labels"][-1] == "★"


def test_extend_identity(capsys):
    code, out = run(capsys, "extend", "identity", "boolean:2", "boolean:2")
    assert code == 0 and out.startswith("extension")


def test_extend_classifier_refusal(tmp_path, capsys):
    out = tmp_path / "e.json"
    code, text = run(capsys, "extend", "classifier", "CofiniteNat", "chain:2", "--json", str(out))
    data = json.loads(out.read_text())
    assert code == 0 and text.startswith("refused")
    assert data["result"] == "refusal" and data["witness"] == {"prime_complement": {"empty": True}}


def test_extend_map_file(tmp_path, capsys):
    path = tmp_path / "map.json"
    # the 3-chain onto the 2-chain, collapsing the middle element to the top
    path.write_text(json.dumps({"table": [0, 1, 1]}))
    code, out = run(capsys, "extend", str(path), "chain:3", "chain:2")
    assert code == 0 and "[pass]" in out


def test_unknown_target(capsys):
    assert main(["verify", "background", "nonsense"]) == 3


def test_strict_unknown_exit_code():
    from pointfree.cli import exit_code

    assert exit_code({"fail": 0, "unknown": 1}, True) == 2
    assert exit_code({"fail": 0, "unknown": 1}, False) == 0
    assert exit_code({"fail": 2, "unknown": 1}, True) == 1


def test_bad_suite_rejected():
    with pytest.raises(SystemExit):
        main(["verify", "nope"])


def test_parallel_run_matches_serial():
    from pointfree.suites import Params, run_suite

    params = Params(max_points=3)
    assert run_suite("raney-core", params, jobs=2) == run_suite("raney-core", params, jobs=1)
