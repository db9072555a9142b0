from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from k2ham import catalog as N
from k2ham.cli import main
from k2ham.formats import decode_graph6, encode_graph6

PETERSEN = encode_graph6(N.petersen()).decode()
K4 = encode_graph6(N.complete(4)).decode()
Q3 = encode_graph6(N.cube(3)).decode()


def run(argv, capsys, stdin: str | None = None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.TextIOWrapper(io.BytesIO(stdin.encode())))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_cell_verify_figure_labels(capsys):
    code, out, _ = run(["cell", "verify", "j18", "--outer", "6,9,3,1", "--level", "k2"], capsys)
    assert code == 0 and out.splitlines()[0] == "suitable ✓ k1 ✓ k2 ✓"


def test_cell_verify_zero_based_and_default_outer(capsys):
    assert run(["cell", "verify", "j18", "--outer", "5,8,2,0", "--zero-based"], capsys)[1].startswith("suitable ✓ k1 ✓")
    assert run(["cell", "verify", "j18"], capsys)[1].startswith("suitable ✓ k1 ✓ k2 ✓")


def test_cell_verify_rotated_fails_expectation(capsys):
    code, out, _ = run(["cell", "verify", "j18", "--outer", "9,3,1,6", "--expect", "true"], capsys)
    assert code == 1 and out.startswith("suitable ✗")
    assert "fails" in out


def test_cell_find(capsys):
    code, out, _ = run(["cell", "find", "j18", "--level", "suitable"], capsys)
    assert code == 0 and sorted(out.split()[0].split(",")) == sorted("6,9,3,1".split(","))


def test_gamma_pipe_to_check(capsys, monkeypatch):
    code, out, err = run(["build", "gamma", "--cells", "j18,j18,j18", "--variant", "k2"], capsys)
    assert code == 0 and "n=48" in err
    g6 = out.strip()
    assert decode_graph6(g6).n == 48
    code, out, _ = run(["check", "--pred", "k2hypo", "-"], capsys, stdin=g6 + "\n", monkeypatch=monkeypatch)
    assert code == 0 and "n=48" in out and "k2hypo: true" in out


def test_gamma_cells_with_labels(capsys):
    code, out, _ = run(["build", "gamma", "--cells", "j18@6,9,3,1,j18,j18@1,3,9,6"], capsys)
    assert code == 0 and decode_graph6(out.strip()).n == 48
    code, _, err = run(["build", "gamma", "--cells", "j18,j18"], capsys)
    assert code == 4 and "odd" in err


def test_glue_and_dot(capsys):
    code, out, _ = run(["build", "glue", "--left", "petersen", "--right", "petersen"], capsys)
    assert code == 0 and decode_graph6(out.strip()).n == 15
    code, out, err = run(["build", "dot", "--left", "flower:5", "--right", "flower:5"], capsys)
    assert code == 0 and decode_graph6(out.strip()).n == 38
    assert "a,b,c,d=1,2,5,7 x,y=1,2" in err
    code, _, err = run(["build", "dot", "--left", "petersen", "--right", "petersen"], capsys)
    assert code == 4 and "(i)-(iii)" in err


def test_check_expect_and_multiple(capsys):
    code, out, _ = run(["check", "petersen", "coxeter", "--pred", "hypo,k2", "--expect", "true"], capsys)
    assert code == 1
    assert out.count("hypo: true") == 2 and "k2: false" in out
    assert run(["check", PETERSEN, "--pred", "snark", "--expect", "true"], capsys)[0] == 0


def test_certify_and_replay(capsys, tmp_path):
    path = tmp_path / "p.json"
    code, _, _ = run(["certify", "petersen", "--pred", "k2", "-o", str(path)], capsys)
    assert code == 0
    cert = json.loads(path.read_text())
    assert cert["claim"] == "k2" and len(cert["witnesses"]) == 15
    code, out, _ = run(["certify", "--replay", str(path)], capsys)
    assert code == 0 and "accepted" in out
    cert["witnesses"][3]["cycle"].reverse()
    cert["witnesses"][3]["cycle"][0] = 0
    path.write_text(json.dumps(cert))
    code, out, _ = run(["certify", "--replay", str(path)], capsys)
    assert code == 1 and "rejected" in out
    path.write_text("{not json")
    assert run(["certify", "--replay", str(path)], capsys)[0] == 3
    assert run(["certify", "petersen", "--pred", "hamiltonian"], capsys)[0] == 1


def test_extendable(capsys, tmp_path):
    cert = tmp_path / "ext.json"
    code, out, _ = run(["extendable", "gp:11,2", "--certificate", str(cert)], capsys)
    assert code == 0 and len(out.split()) == 5
    from k2ham.certificates import Certificate, replay
    assert replay(Certificate.from_json(cert.read_text())) == []
    assert run(["extendable", "cube:3", "--expect", "true"], capsys)[0] == 1


def test_grinberg(capsys):
    code, out, _ = run(["grinberg", "dodecahedron"], capsys)
    assert "faces=12" in out and "hamiltonian cycles: 30" in out and "sigma values: [0]" in out
    code, out, _ = run(["grinberg", "j18", "--add-edge", "6,1", "--expect", "true"], capsys)
    assert code == 0 and "grinbergian: true" in out and "hamiltonian cycles: 0" in out
    assert "sizes=4 5 5 5 5 5 5 5 5 8" in out


def test_named(capsys):
    assert run(["named", "petersen"], capsys)[1].strip() == PETERSEN
    out = run(["named", "--list"], capsys)[1]
    assert "j18" in out.split()
    out = run(["named", "j18", "--format", "edges"], capsys)[1]
    assert out.splitlines()[0] == "18 25"


def test_exit_codes(capsys, tmp_path):
    assert run(["check", "petersen", "--pred", "nonsense"], capsys)[0] == 2
    assert run(["check", "A~", "--pred", "k2"], capsys)[0] == 3  # nonzero padding
    assert run(["check", "C~", "--pred", "k2"], capsys)[0] == 0  # K4 fails silently: too small
    assert run(["cell", "verify", "petersen"], capsys)[0] == 2
    assert run(["cell", "verify", "complete:4", "--outer", "1,2,3,4"], capsys)[0] == 4
    assert run(["check", "coxeter", "--pred", "k2", "--budget", "3"], capsys)[0] == 5
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2


def test_filter(capsys, monkeypatch, tmp_path):
    stream = "\n".join([PETERSEN, K4, Q3]) + "\n"
    code, out, err = run(["filter", "--pred", "k2hypo"], capsys, stdin=stream, monkeypatch=monkeypatch)
    assert code == 0 and out.split() == [PETERSEN]
    assert "total 3 matched 1" in err
    code, out, _ = run(["filter", "--pred", "k2hypo", "--count"], capsys, stdin="", monkeypatch=monkeypatch)
    assert out.strip() == "0"
    f = tmp_path / "in.g6"
    f.write_text(stream + "garbage!\n" + PETERSEN + "\n")
    code, out, err = run(["filter", "--pred", "hypo", str(f)], capsys)
    assert code == 0 and out.split() == [PETERSEN, PETERSEN] and "line 4" in err
    code, out, err = run(["filter", "--pred", "hypo", "--strict", str(f)], capsys)
    assert code == 3 and out.split() == [PETERSEN]
    f.write_text(stream)
    code, out, err = run(["filter", "--pred", "k2", "--budget", "3", str(f)], capsys)
    assert code == 0 and "undecided 1" in err
    code, out, _ = run(["filter", "--pred", "k2", "--budget", "3", "--strict", str(f)], capsys)
    assert code == 5


def test_filter_certificates(capsys, monkeypatch):
    code, out, _ = run(["filter", "--pred", "k2", "--mode", "certificates"], capsys,
                       stdin=PETERSEN + "\n", monkeypatch=monkeypatch)
    (line,) = out.splitlines()
    assert json.loads(line)["claim"] == "k2"


def test_jobs_env_and_flag(capsys, monkeypatch, tmp_path):
    f = tmp_path / "in.g6"
    f.write_text("\n".join([PETERSEN, K4, Q3, PETERSEN]) + "\n")
    base = run(["filter", "--pred", "k1", str(f)], capsys)[1]
    monkeypatch.setenv("K2HAM_JOBS", "2")
    assert run(["filter", "--pred", "k1", str(f)], capsys)[1] == base
    monkeypatch.setenv("K2HAM_JOBS", "lots")
    assert run(["filter", "--pred", "k1", str(f)], capsys)[0] == 2
    # the flag wins, so the bad variable is never consulted
    assert run(["filter", "--pred", "k1", "--jobs", "2", str(f)], capsys)[1] == base


def test_console_entry_point_pipe():
    build = subprocess.run([sys.executable, "-m", "k2ham", "build", "gamma", "--cells", "j18,j18,j18"],
                           capture_output=True, text=True, check=True)
    check = subprocess.run([sys.executable, "-m", "k2ham", "check", "--pred", "k2hypo", "--expect", "true"],
                           input=build.stdout, capture_output=True, text=True)
    assert check.returncode == 0 and "k2hypo: true" in check.stdout
