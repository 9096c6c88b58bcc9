import json

import pytest

from bisetkit.cli import main, resolve_group
from bisetkit.errors import BisetkitError


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_resolve_group_names():
    assert resolve_group("C7").order == 7
    assert resolve_group("V4").order == 4
    assert resolve_group("D12").order == 12
    assert resolve_group("Dic3").order == 12
    assert resolve_group("prod(C2,C2,C2)").order == 8
    assert resolve_group("prod(Q8,prod(D8,C4))").order == 256
    with pytest.raises(BisetkitError):
        resolve_group("E8")


def test_ahat_rb_v4(capsys):
    code, out, _ = run(capsys, "ahat", "--backend", "rb", "--group", "V4")
    assert code == 0
    assert "quotient 6" in out


def test_ahat_json_deterministic(capsys):
    code1, out1, _ = run(capsys, "--json", "ahat", "--backend", "rb",
                         "--group", "C3")
    code2, out2, _ = run(capsys, "--json", "ahat", "--backend", "rb",
                         "--group", "C3")
    assert code1 == code2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert set(doc) == {"backend", "group", "ambient", "ideal", "quotient", "basis"}
    assert doc["quotient"] == 2


def test_seeds_table(capsys):
    code, out, _ = run(capsys, "seeds", "--max-m", "12")
    assert code == 0
    lines = out.strip().splitlines()
    counts = {}
    for line in lines[1:]:
        m, c = line.split()
        counts[int(m)] = int(c)
    assert counts[2] == 0 and counts[6] == 0
    assert counts[5] == 3 and counts[11] == 9


def test_group_info_json(capsys):
    code, out, _ = run(capsys, "--json", "group", "info", "Q8")
    assert code == 0
    doc = json.loads(out)
    assert doc["order"] == 8
    assert doc["conjugacy_classes"] == 5
    assert not doc["abelian"]


def test_group_subgroups(capsys):
    code, out, _ = run(capsys, "group", "subgroups", "D8")
    assert code == 0
    assert "10 subgroups in 8 conjugacy classes" in out


def test_group_auts(capsys):
    code, out, _ = run(capsys, "group", "auts", "V4")
    assert code == 0
    assert "|Aut| = 6" in out


def test_lin_kernel_cli(capsys):
    code, out, _ = run(capsys, "--json", "lin-kernel", "V4")
    assert code == 0
    assert json.loads(out)["kernel_dim"] == 1


def test_compose_roundtrip(tmp_path, capsys):
    doc = {"left": "C2", "right": "C2",
           "terms": [{"num": 1, "den": 1, "class": [0]}]}
    f = tmp_path / "x.json"
    f.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "--json", "compose", "--left", str(f),
                       "--mid", "C2", "--right", str(f))
    assert code == 0
    result = json.loads(out)
    assert result["terms"] == [{"num": 2, "den": 1, "class": [0]}]


def test_compose_middle_mismatch(tmp_path, capsys):
    doc = {"left": "C2", "right": "C2",
           "terms": [{"num": 1, "den": 1, "class": [0]}]}
    f = tmp_path / "x.json"
    f.write_text(json.dumps(doc))
    code, _, err = run(capsys, "compose", "--left", str(f), "--mid", "C3",
                       "--right", str(f))
    assert code == 1
    assert "error" in err


def test_bouc_cli(capsys):
    code, out, _ = run(capsys, "bouc", "C4", "C2", "1,1")
    assert code == 0
    assert "roundtrip: ok" in out


def test_crc_check_cli(capsys):
    code, out, _ = run(capsys, "crc-check", "S3", "C2")
    assert code == 0
    assert "match" in out


def test_dress_compose_cli(capsys):
    code, out, _ = run(capsys, "--json", "dress-compose", "C2", "C2", "C2", "C2",
                       "--e", "1,1,0;0,0,1", "--d", "1,1,0;0,0,1")
    assert code == 0
    doc = json.loads(out)
    assert doc["terms"] == [{"num": 1, "den": 1, "class": [0, 1, 6, 7]}]


def test_no_bridge_cli(capsys):
    code, out, _ = run(capsys, "--json", "no-bridge", "C4", "V4", "C2")
    assert code == 0
    assert json.loads(out)["passed"] is True


def test_counterexample_cli(capsys):
    code, out, _ = run(capsys, "counterexample")
    assert code == 0
    assert out.strip().endswith("NOT DECOMPOSABLE")


def test_counterexample_json_deterministic(capsys):
    code1, out1, _ = run(capsys, "--json", "counterexample")
    code2, out2, _ = run(capsys, "--json", "counterexample")
    assert code1 == code2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["verdict"] == "NOT DECOMPOSABLE"


def test_accept_only(capsys):
    code, out, err = run(capsys, "accept", "--only", "9,10")
    assert code == 0
    assert "PASS criterion 9" in out
    assert "PASS criterion 10" in out
    assert "running criterion" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["not-a-command"])
    assert exc.value.code == 2


def test_unknown_group_is_error(capsys):
    code, _, err = run(capsys, "group", "info", "NoSuchGroup")
    assert code == 1
    assert "error" in err


def test_cache_dir_flag(tmp_path, capsys):
    import bisetkit.cache as cache
    previous = cache.cache_dir()
    try:
        # D26 is not touched by any other test, so its lattice is computed
        # fresh and must land in the requested cache directory
        code, out, _ = run(capsys, "--cache-dir", str(tmp_path),
                           "group", "subgroups", "D26")
        assert code == 0
        assert list(tmp_path.glob("*.json"))
    finally:
        cache.set_cache_dir(str(previous) if previous else None)
