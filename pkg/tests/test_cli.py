import io
import json
import math
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest

from billiard_ladder import cli
from billiard_ladder.core import contains, make_state
from billiard_ladder.formats import (
    CatalogEntry,
    CatalogError,
    catalog_json,
    pgm_bytes,
    read_catalog,
    read_pgm,
)

GOLDEN = Path(__file__).parent / "golden"


def run(*argv):
    out = io.StringIO()
    code = cli.run(list(argv), out=out)
    return code, out.getvalue()


def test_eval():
    code, out = run("eval", "--billiard", "iso", "--m", "2", "--n", "1",
                    "--x", "1.5707963", "--y", "0.7853981")
    assert code == 0
    assert out.strip() == "-1.0000000"
    assert abs(float(out) + 1) <= 1e-6


def test_eval_equilateral_default_family():
    code, out = run("eval", "--billiard", "equi", "--m", "2", "--n", "1",
                    "--x", repr(math.pi / 2), "--y", repr(math.sqrt(3) * math.pi / 6))
    assert code == 0 and float(out) == pytest.approx(-3 * math.sqrt(3) / 2, abs=1e-6)


def test_classify():
    code, out = run("classify", "--billiard", "iso", "--m", "23", "--n", "4")
    assert (code, out) == (0, "class 7 mod 8; lowest (7,4)\n")


def test_classify_sine_skips_zero_function():
    code, out = run("classify", "--billiard", "equi", "--family", "sin", "--m", "8", "--n", "1")
    assert out == "class 2 mod 3; lowest (5,1)\n"


class TestExitCodes:
    def test_validation_error(self, capsys):
        code, out = run("eval", "--m", "4", "--n", "4", "--x", "1", "--y", "0.5")
        assert code == 1 and out == ""
        assert "m > n" in capsys.readouterr().err

    def test_family_mismatch(self):
        assert run("classify", "--billiard", "iso", "--family", "cos", "--m", "3", "--n", "1")[0] == 1

    def test_unknown_subcommand(self, capsys):
        assert run("frobnicate")[0] == 1
        assert "usage" in capsys.readouterr().err

    def test_unknown_flag(self, capsys):
        assert run("eval", "--m", "2", "--n", "1", "--x", "1", "--y", "1", "--bogus")[0] == 1
        assert "usage" in capsys.readouterr().err

    def test_missing_required_flag(self):
        assert run("ladder", "--m", "7", "--n", "4")[0] == 1

    def test_verify_success(self):
        code, out = run("verify", "--billiard", "iso", "--suite", "quick")
        assert code == 0 and "overall: PASS" in out

    def test_verify_failure_is_exit_2(self):
        code, out = run("verify", "--billiard", "iso", "--suite", "perturbed")
        assert code == 2 and "FAIL boundary" in out

    def test_verify_empty_suite(self):
        code, out = run("verify", "--suite", "empty")
        assert code == 0 and "vacuous" in out

    def test_ladder_failure_is_exit_2(self, monkeypatch):
        monkeypatch.setattr(cli, "LADDER_LIMIT", 0.0)
        assert run("ladder", "--m", "7", "--n", "4", "--p", "1")[0] == 2

    def test_io_failure(self, tmp_path):
        bad = tmp_path / "missing" / "grid.csv"
        assert run("grid", "--m", "2", "--n", "1", "--res", "4", "--out", str(bad))[0] == 1


class TestLadder:
    def test_raise_two(self):
        code, out = run("ladder", "--m", "7", "--n", "4", "--p", "2")
        assert code == 0
        assert "target (23,4)" in out
        dev = float(out.split("deviation ")[1].split()[0])
        assert dev <= 1e-9

    def test_lower_past_bottom(self, capsys):
        code, _ = run("ladder", "--m", "7", "--n", "4", "--p", "-1")
        assert code == 1 and "m > n" in capsys.readouterr().err

    def test_equilateral(self):
        code, out = run("ladder", "--m", "5", "--n", "2", "--p", "1", "--billiard", "equi",
                        "--family", "cos")
        assert code == 0 and "target (11,2)" in out


class TestGrid:
    def test_golden(self, tmp_path):
        out = tmp_path / "g.csv"
        assert run("grid", "--billiard", "iso", "--m", "2", "--n", "1", "--res", "8",
                   "--out", str(out))[0] == 0
        assert out.read_bytes() == (GOLDEN / "grid_iso_2_1_res8.csv").read_bytes()

    def test_rows_inside_and_exact(self):
        code, text = run("grid", "--m", "2", "--n", "1", "--res", "8")
        lines = text.splitlines()
        assert lines[0] == "x,y,value" and "\r" not in text
        for line in lines[1:]:
            x, y, v = map(float, line.split(","))
            assert contains("iso", (x, y))
            assert v == pytest.approx(math.sin(2 * x) * math.sin(y) - math.sin(x) * math.sin(2 * y),
                                      abs=1e-8)

    def test_tiny_raster(self):
        _, text = run("grid", "--m", "3", "--n", "1", "--res", "2")
        assert len(text.splitlines()) - 1 <= 4

    def test_deterministic(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        for p in (a, b):
            run("grid", "--billiard", "equi", "--family", "sin", "--m", "5", "--n", "1",
                "--res", "20", "--out", str(p))
        assert a.read_bytes() == b.read_bytes()


class TestNodal:
    @pytest.mark.parametrize("m,nu", [(2, 1), (3, 2)])
    def test_counts(self, m, nu):
        assert run("nodal", "--m", str(m), "--n", "1", "--res", "512") == (0, f"nu={nu}\n")

    def test_header_512(self, tmp_path):
        out = tmp_path / "a.pgm"
        run("nodal", "--m", "2", "--n", "1", "--res", "512", "--out", str(out))
        data = out.read_bytes()
        assert data.startswith(b"P5\n512 512\n255\n")
        assert len(data) == len(b"P5\n512 512\n255\n") + 512 * 512

    def test_golden_header_and_first_row(self, tmp_path):
        out = tmp_path / "a.pgm"
        run("nodal", "--m", "7", "--n", "4", "--res", "64", "--out", str(out))
        golden = (GOLDEN / "nodal_iso_7_4_res64_head.bin").read_bytes()
        assert out.read_bytes()[:len(golden)] == golden

    def test_golden_amplitude_render(self, tmp_path):
        out = tmp_path / "a.pgm"
        run("nodal", "--billiard", "equi", "--family", "cos", "--m", "5", "--n", "1",
            "--res", "33", "--mode", "amplitude", "--out", str(out))
        assert out.read_bytes() == (GOLDEN / "nodal_equi_cos_5_1_res33_amplitude.pgm").read_bytes()

    def test_top_row_is_largest_y(self, tmp_path):
        out = tmp_path / "a.pgm"
        run("nodal", "--m", "5", "--n", "2", "--res", "32", "--out", str(out))
        img = read_pgm(out)
        # row 0 after reading back is the base y ~ 0, fully inside but the first cell
        assert img[0, 0] == 128 and np.all(img[0, 1:] != 128)
        assert np.all(img[-1] == 128)


class TestTower:
    def test_golden(self, tmp_path):
        cat = tmp_path / "c.json"
        assert run("tower", "--billiard", "iso", "--n", "4", "--class", "7", "--count", "3",
                   "--catalog", str(cat))[0] == 0
        assert cat.read_bytes() == (GOLDEN / "catalog_iso_n4_c7.json").read_bytes()
        entries = json.loads(cat.read_text())
        assert [(e["m"], e["n"]) for e in entries] == [(7, 4), (15, 4), (23, 4)]
        assert [e["energy"] for e in entries] == [65, 241, 545]

    def test_idempotent(self, tmp_path):
        cat = tmp_path / "c.json"
        args = ("tower", "--billiard", "equi", "--family", "sin", "--n", "1", "--class", "2",
                "--count", "2", "--catalog", str(cat))
        run(*args)
        first = cat.read_bytes()
        run(*args)
        assert cat.read_bytes() == first

    def test_merge_and_nodal_counts(self, tmp_path):
        cat = tmp_path / "c.json"
        run("tower", "--n", "4", "--class", "7", "--count", "2", "--catalog", str(cat))
        run("tower", "--n", "4", "--class", "7", "--count", "3", "--catalog", str(cat),
            "--res", "128")
        run("tower", "--n", "1", "--class", "0", "--count", "1", "--catalog", str(cat))
        entries = read_catalog(cat)
        assert [(e.m, e.n) for e in entries] == [(2, 1), (7, 4), (15, 4), (23, 4)]
        assert all(e.nodal_count is not None and e.resolution == 128 for e in entries[1:])
        assert entries[0].nodal_count is None

    @pytest.mark.parametrize("content", ["{not json", '{"a": 1}', '[{"m": 1}]',
                                         '[{"billiard": "iso", "family": "default", "m": 7, '
                                         '"n": 4, "modulus": 8, "class_index": 3, "energy": 65, '
                                         '"nodal_count": null, "resolution": null}]'])
    def test_malformed_catalog_untouched(self, tmp_path, content):
        cat = tmp_path / "c.json"
        cat.write_text(content)
        code, _ = run("tower", "--n", "4", "--class", "7", "--count", "1", "--catalog", str(cat))
        assert code == 1
        assert cat.read_text() == content


def test_catalog_round_trip(tmp_path):
    entries = [CatalogEntry.from_state(make_state("equi", "cos", 11, 2), 15, 512),
               CatalogEntry.from_state(make_state("iso", "default", 9, 1))]
    path = tmp_path / "c.json"
    path.write_text(catalog_json(entries))
    back = read_catalog(path)
    assert sorted(back, key=lambda e: e.key) == sorted(entries, key=lambda e: e.key)
    assert back[0].energy == make_state("equi", "cos", 11, 2).energy


def test_duplicate_catalog_keys(tmp_path):
    e = CatalogEntry.from_state(make_state("iso", "default", 9, 1))
    path = tmp_path / "c.json"
    path.write_text(json.dumps([e.__dict__, e.__dict__]))
    with pytest.raises(CatalogError):
        read_catalog(path)


def test_pgm_round_trip():
    img = np.arange(12, dtype=np.uint8).reshape(3, 4)
    data = pgm_bytes(img)
    assert data[:11] == b"P5\n4 3\n255\n"
    # top row of the file is the last row of the array
    assert list(data[11:15]) == [8, 9, 10, 11]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "billiard_ladder", "classify", "--m", "15",
                           "--n", "4"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "class 7 mod 8; lowest (7,4)\n"
