import json
import shutil
import subprocess
import sys

import pytest

from boolgb.cli import BenchRecord, main, run_bench

BENCH_KEYS = {"name": str, "nvars": int, "ngens": int, "gb_size": int, "wall_time": float, "verified": bool}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def xyz_file(data_dir):
    return str(data_dir / "xy_z.poly")


def test_gb_xy_z(capsys, xyz_file):
    code, out, _ = run(capsys, "gb", xyz_file)
    assert code == 0
    assert out.splitlines() == ["x*y + z", "x*z + z", "y*z + z"]


def test_gb_verify_and_stats(capsys, xyz_file):
    code, out, err = run(capsys, "gb", xyz_file, "--verify", "--stats")
    assert code == 0
    assert "field pairs" in err and "wall time" in err
    assert len(out.splitlines()) == 3


def test_gb_output_is_fixed_point(capsys, tmp_path, data_dir):
    _, first, _ = run(capsys, "gb", str(data_dir / "golden_random_8_4_7.poly"))
    again = tmp_path / "again.poly"
    again.write_text("ring 8\n" + first)
    _, second, _ = run(capsys, "gb", str(again))
    assert first == second


def test_gb_empty_file(capsys, tmp_path):
    f = tmp_path / "empty.poly"
    f.write_text("ring 3\n# nothing\n")
    code, out, _ = run(capsys, "gb", str(f))
    assert (code, out) == (0, "")


def test_gb_parse_error(capsys, tmp_path):
    f = tmp_path / "bad.poly"
    f.write_text("ring 3 : x y z\nx*w\n")
    code, out, err = run(capsys, "gb", str(f))
    assert code == 1
    assert out == ""
    assert "unknown variable" in err and "line 2" in err


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "gb", str(tmp_path / "nope.poly"))
    assert code == 1


def test_usage_error_is_input_error(capsys):
    assert main(["gb"]) == 1
    assert main(["frobnicate"]) == 1


def test_verify_command(capsys, tmp_path, xyz_file):
    code, out, _ = run(capsys, "verify", xyz_file)
    assert code == 2 and "no" in out
    gb = tmp_path / "gb.poly"
    gb.write_text("ring 3 : x y z\nx*y+z\ny*z+z\nx*z+z\n")
    code, out, _ = run(capsys, "verify", str(gb))
    assert code == 0 and "yes" in out


def test_shidoku_unique(capsys):
    code, out, _ = run(capsys, "shidoku", "123.........4..1", "--solve")
    assert code == 0
    assert out.splitlines() == ["1234", "3412", "2143", "4321"]


def test_shidoku_no_solution(capsys):
    code, out, _ = run(capsys, "shidoku", "11..............", "--solve")
    assert code == 0 and out.strip() == "no solution"
    code, out, _ = run(capsys, "shidoku", "11..............")
    assert out.strip() == "1"


def test_shidoku_multiple(capsys):
    code, out, _ = run(capsys, "shidoku", "12..34..........", "--solve")
    assert code == 0 and out.startswith("multiple solutions")


def test_shidoku_bad_clues(capsys):
    assert run(capsys, "shidoku", "12345")[0] == 1


def test_fixpoints(capsys, data_dir):
    code, out, _ = run(capsys, "fixpoints", str(data_dir / "models" / "and_copy.model"), "--enumerate")
    assert code == 0
    # x1*x2 + x1 reduces to zero once x1 = x2
    assert out.splitlines() == ["x1 + x2", "# 2 fixed points (x1 x2)", "00", "11"]


def test_fixpoints_bad_model(capsys, tmp_path):
    f = tmp_path / "bad.model"
    f.write_text("ring 2\nx1 = x2\nx1 = x1\n")
    assert run(capsys, "fixpoints", str(f))[0] == 1


def test_random_output_parses_and_matches_golden(capsys, data_dir):
    code, out, _ = run(capsys, "random", "--vars", "8", "--polys", "4", "--max-terms", "4", "--max-degree", "3", "--seed", "7")
    assert code == 0
    assert out == (data_dir / "golden_random_8_4_7.poly").read_text()


def test_random_bad_params(capsys):
    assert run(capsys, "random", "--vars", "3", "--polys", "1", "--max-terms", "1", "--max-degree", "9")[0] == 1


def make_suite(tmp_path, data_dir):
    suite = tmp_path / "suite"
    suite.mkdir()
    shutil.copy(data_dir / "xy_z.poly", suite / "xyz.poly")
    shutil.copy(data_dir / "models" / "tcr_like.model", suite)
    (suite / "unique.clues").write_text("123.........4..1\n")
    (suite / "notes.txt").write_text("ignored\n")
    main(["random", "--vars", "10", "--polys", "5", "--max-terms", "5", "--max-degree", "3", "--seed", "1"])
    return suite


def test_bench_json_schema(capsys, tmp_path, data_dir):
    suite = make_suite(tmp_path, data_dir)
    (suite / "rand10.poly").write_text(capsys.readouterr().out)
    code, out, _ = run(capsys, "bench", str(suite), "--json")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert [r["name"] for r in records] == ["rand10", "tcr_like", "unique", "xyz"]
    for r in records:
        assert set(r) == set(BENCH_KEYS)
        for key, typ in BENCH_KEYS.items():
            assert type(r[key]) is typ
        assert r["wall_time"] >= 0 and r["verified"] is True
    assert records[3]["gb_size"] == 3
    assert records[2]["gb_size"] == 64 and records[2]["nvars"] == 64


def test_bench_table_and_empty_dir(capsys, tmp_path):
    code, out, _ = run(capsys, "bench", str(tmp_path))
    assert code == 0
    assert out.splitlines()[0].split() == ["name", "nvars", "ngens", "gb_size", "wall_time", "verified"]
    assert len(out.splitlines()) == 2
    assert run(capsys, "bench", str(tmp_path / "missing"))[0] == 1


def test_run_bench_records(data_dir, tmp_path):
    suite = tmp_path / "s"
    suite.mkdir()
    shutil.copy(data_dir / "xy_z.poly", suite)
    (rec,) = run_bench(suite)
    assert rec == BenchRecord("xy_z", 3, 1, 3, rec.wall_time, True)


def test_module_entry_point(data_dir):
    proc = subprocess.run(
        [sys.executable, "-m", "boolgb", "gb", str(data_dir / "xy_z.poly")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines() == ["x*y + z", "x*z + z", "y*z + z"]


def test_verification_failure_exit_codes(capsys, monkeypatch, tmp_path, xyz_file):
    import boolgb.cli as cli

    monkeypatch.setattr(cli, "is_groebner_basis", lambda G, ring: False)
    code, _, err = run(capsys, "gb", xyz_file, "--verify")
    assert code == 2 and "verification failed" in err
    shutil.copy(xyz_file, tmp_path)
    code, out, _ = run(capsys, "bench", str(tmp_path), "--json")
    assert code == 2
    assert json.loads(out)["verified"] is False
