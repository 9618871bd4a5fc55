import subprocess
import sys

import pytest

from treekit.cli import FAILED, INPUT_ERROR, OK, run


def call(capsys, *argv):
    code = run([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_count_all_methods(capsys, data_dir):
    code, out, _ = call(capsys, "count", data_dir / "triangle.mg")
    assert code == OK
    assert out.splitlines() == ["matrix_tree\t3", "deletion_contraction\t3", "eta\t3"]


def test_count_several_files_in_parallel(capsys, data_dir):
    files = [data_dir / "triangle.mg", data_dir / "theta.mg", data_dir / "loop.mg"]
    code, out, _ = call(capsys, "--jobs", 2, "count", "--method", "dc", "--components", *files)
    assert code == OK
    assert f"{files[1]}\tdeletion_contraction\t3" in out
    assert f"{files[2]}\tcomponent_product\t1" in out


def test_count_reads_embedded_files(capsys, data_dir):
    code, out, _ = call(capsys, "count", "--method", "matrix", data_dir / "theta.emb")
    assert code == OK and out == "matrix_tree\t3\n"


def test_eta_breakdown(capsys, data_dir):
    code, out, _ = call(capsys, "--seed", 4, "eta", data_dir / "theta.mg", "--matrix", "--draws", 5)
    assert code == OK
    lines = out.splitlines()
    assert lines[0] == "eta\t3" and "det\t-3" in lines and "rho\t-1" in lines
    assert "row\tw1\tw2\tw3" in lines
    assert lines[-1].endswith("invariant")


def test_eta_poles_and_errors(capsys, data_dir):
    assert call(capsys, "eta", data_dir / "triangle.mg", "--poles", 2, 3)[0] == OK
    code, _, err = call(capsys, "eta", data_dir / "triangle.mg", "--poles", 2, 2)
    assert code == INPUT_ERROR and "poles" in err


def test_bound(capsys, data_dir):
    code, out, _ = call(capsys, "--tau-width", "1/1000", "bound", data_dir / "theta.mg")
    assert code == OK and out.splitlines()[-1] == "holds"


def test_dual_and_faces(capsys, data_dir):
    code, out, _ = call(capsys, "dual", data_dir / "triangle.emb")
    assert code == OK and out.splitlines()[:5] == ["2", "3", "1 2", "1 2", "1 2"]
    code, out, _ = call(capsys, "faces", data_dir / "theta.emb")
    assert code == OK
    assert "m=2 n=3 k=3 euler=ok" in out and out.count("length 2") == 3


def test_faces_non_planar_rotation(capsys, tmp_path):
    # K4 with a toroidal rotation system
    f = tmp_path / "k4.emb"
    f.write_text("4\n6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n1+ 2+ 3+\n1- 4+ 5+\n2- 4- 6+\n3- 5- 6-\n")
    code, out, _ = call(capsys, "faces", f)
    assert code == FAILED and "euler=FAILS" in out


def test_grid(capsys):
    code, out, _ = call(capsys, "grid", 3, "--range")
    assert code == OK
    assert out.splitlines()[3] == "3\t24\t100352\t0.4798516\t0.5831218"
    assert call(capsys, "grid", 9)[0] == INPUT_ERROR


def test_squaring_actions(capsys, data_dir, tmp_path):
    f = data_dir / "moron.sq"
    code, out, _ = call(capsys, "squaring", "verify", f)
    assert code == OK and out.splitlines() == ["valid", "kirchhoff\tok\tthroughput\t33"]
    code, out, _ = call(capsys, "squaring", "levels", f)
    assert code == OK and len(out.splitlines()) == 6
    code, out, _ = call(capsys, "squaring", "network", f)
    assert out.splitlines()[0] == "vertices\t6\tedges\t9\tS\t1\tT\t6"
    code, out, _ = call(capsys, "squaring", "solve", f)
    assert code == OK and out.splitlines()[0] == "N\t33\tt\t66" and "matches tiles" in out
    code, out, _ = call(capsys, "squaring", "solve", f, "--n", 66)
    assert code == OK and "1\t36\ta=2376" in out
    code, out, _ = call(capsys, "squaring", "bound", f)
    assert code == OK and out.splitlines()[0] == "tiles=9 required>=6 OK"
    svg = tmp_path / "m.svg"
    assert call(capsys, "squaring", "render", f, "-o", svg)[0] == OK
    assert svg.read_text().startswith("<svg")


def test_squaring_transform(capsys, tmp_path):
    f = tmp_path / "r.sq"
    f.write_text("6 4\n0 0 6 4\n")
    code, out, _ = call(capsys, "squaring", "transform", f)
    assert code == OK and out.splitlines() == ["# scaled down by 2", "3 2", "0 0 2", "2 0 1", "2 1 1"]
    assert call(capsys, "squaring", "solve", f)[0] == INPUT_ERROR


def test_squaring_invalid(capsys, tmp_path):
    f = tmp_path / "bad.sq"
    f.write_text("2 1\n0 0 1\n")
    code, out, _ = call(capsys, "squaring", "verify", f)
    assert code == FAILED and out.startswith("INVALID")
    assert call(capsys, "squaring", "levels", f)[0] == FAILED


def test_portrait_squaring_is_rotated(capsys, tmp_path):
    f = tmp_path / "p.sq"
    f.write_text("1 2\n0 0 1\n0 1 1\n")
    code, out, _ = call(capsys, "squaring", "network", f)
    assert code == OK and out.startswith("# portrait") and "edges\t2" in out


def test_input_errors(capsys, tmp_path):
    code, _, err = call(capsys, "count", tmp_path / "missing.mg")
    assert code == INPUT_ERROR and "cannot read" in err
    bad = tmp_path / "bad.mg"
    bad.write_text("2\n1\n1 3\n")
    assert call(capsys, "count", bad)[0] == INPUT_ERROR


def test_module_entry_point(data_dir):
    proc = subprocess.run(
        [sys.executable, "-m", "treekit", "count", "--method", "eta", str(data_dir / "theta.mg")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "eta\t3\n"


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["--version"])
    assert exc.value.code == 0
    assert "kernels" in capsys.readouterr().out
