import math

import numpy as np
import pytest

from hadamard6.cli import main
from hadamard6.families import d6_member, fourier
from hadamard6.mat_core import read_matrix, write_matrix
from hadamard6.params import OMEGA
from hadamard6.verify import are_equivalent


def _values(out):
    vals = {}
    for line in out.splitlines():
        parts = line.split()
        if len(parts) == 2:
            vals[parts[0]] = parts[1]
    return vals


def test_gen_writes_file_and_roundtrips(tmp_path, capsys):
    out = tmp_path / "h.mat"
    assert main(["gen", "--theta", "0.7", "--phi", "0.9", "--psi1", "0.3", "-o", str(out)]) == 0
    printed = _values(capsys.readouterr().out)
    assert printed["regime"] == "Generic"
    data = [l for l in out.read_text().splitlines() if not l.startswith("#")]
    assert len(data) == 6 and all(len(l.split()) == 12 for l in data)
    assert float(printed["unitarity_error"]) < 1e-9
    assert main(["verify", str(out)]) == 0
    verified = _values(capsys.readouterr().out)
    assert verified["reducible"] == "true"
    for key in ("unimodular_error", "unitarity_error"):
        assert abs(float(verified[key]) - float(printed[key])) < 1e-12


def test_gen_to_stdout_is_a_matrix_file(tmp_path, capsys):
    assert main(["gen", "--theta", "40", "--phi", "50", "--psi1", "10", "--degrees", "--signs", "+-+-"]) == 0
    path = tmp_path / "s.mat"
    path.write_text(capsys.readouterr().out)
    assert read_matrix(path).shape == (6, 6)


def test_gen_doubly_degenerate_points_to_gen_limit(capsys):
    assert main(["gen", "--theta", "0", "--phi", "1.0", "--psi1", "0.2"]) == 2
    assert "gen-limit theta0" in capsys.readouterr().err
    assert main(["gen", "--theta", str(math.pi / 2), "--phi", "0", "--psi1", "0.2"]) == 2
    assert "gen-limit halfpi" in capsys.readouterr().err


def test_gen_d6_point_takes_degenerate_path(tmp_path, capsys):
    out = tmp_path / "d6.mat"
    assert main(["gen", "--theta", "0.955316618", "--phi", "0.785398163", "--psi1", "0.4", "-o", str(out)]) == 0
    assert "DegenerateA" in capsys.readouterr().out
    # the 9-digit inputs leave w0^2 near the sqrt branch cut, so compare classes
    assert are_equivalent(read_matrix(out), d6_member(np.exp(0.4j))).equivalent


@pytest.mark.parametrize("argv", [
    ["gen", "--theta", "4", "--phi", "0.9", "--psi1", "0.3"],
    ["gen", "--theta", "0.7", "--phi", "0.9", "--psi1", "0.3", "--signs", "+++"],
    ["gen", "--theta", "0.7", "--phi", "0.9", "--psi1", "0.3", "--tol-unimod", "1e-6"],
])
def test_gen_usage_errors(argv):
    assert main(argv) == 2


def test_gen_verification_failure_exit_code(capsys):
    # tolerances far below double-precision roundoff cannot be met
    assert main(["gen", "--theta", "0.7", "--phi", "0.9", "--psi1", "0.3",
                 "--tol-unimod", "1e-30", "--tol-unit", "1e-30"]) == 3


def test_usage_error_from_argparse():
    with pytest.raises(SystemExit) as exc:
        main(["gen", "--theta", "abc", "--phi", "1", "--psi1", "1"])
    assert exc.value.code == 2


def test_verify_exit_codes(tmp_path, capsys):
    good = tmp_path / "f.mat"
    write_matrix(good, fourier(1, 1), ["Fourier fixture"])
    assert main(["verify", str(good)]) == 0
    assert "reducible true" in capsys.readouterr().out
    ones = tmp_path / "ones.mat"
    write_matrix(ones, np.ones((6, 6)))
    assert main(["verify", str(ones)]) == 1
    bad = tmp_path / "bad.mat"
    lines = good.read_text().splitlines()
    lines[3] = " ".join(lines[3].split()[:11])
    bad.write_text("\n".join(lines) + "\n")
    assert main(["verify", str(bad)]) == 4
    assert "parse error" in capsys.readouterr().err
    assert main(["verify", str(tmp_path / "missing.mat")]) == 4


def test_equiv_exit_codes(tmp_path, capsys):
    a = tmp_path / "a.mat"
    b = tmp_path / "b.mat"
    assert main(["gen", "--theta", "0.7", "--phi", "0.9", "--psi1", "0.3", "-o", str(a)]) == 0
    write_matrix(b, read_matrix(a)[[1, 0, 2, 3, 4, 5]])
    capsys.readouterr()
    assert main(["equiv", str(a), str(b)]) == 0
    out = capsys.readouterr().out
    assert "equivalent true" in out and "row_perm (0 1)" in out and "col_perm ()" in out

    d6 = tmp_path / "d6.mat"
    fix = tmp_path / "d6fix.mat"
    main(["gen", "--theta", "0.955316618", "--phi", "0.785398163", "--psi1", "0.4", "-o", str(d6)])
    write_matrix(fix, d6_member(np.exp(0.4j)))
    assert main(["equiv", str(d6), str(fix)]) == 0

    f = tmp_path / "f.mat"
    write_matrix(f, fourier(1, 1))
    capsys.readouterr()
    assert main(["equiv", str(f), str(fix)]) == 1
    assert "equivalent false" in capsys.readouterr().out


def test_equiv_non_hadamard_and_parse(tmp_path):
    f = tmp_path / "f.mat"
    ones = tmp_path / "ones.mat"
    write_matrix(f, fourier(1, 1))
    write_matrix(ones, np.ones((6, 6)))
    assert main(["equiv", str(f), str(ones)]) == 1
    (tmp_path / "junk.mat").write_text("junk\n")
    assert main(["equiv", str(f), str(tmp_path / "junk.mat")]) == 4


def _read_tsv(path):
    lines = path.read_text().splitlines()
    header = lines[0].split("\t")
    rows = [dict(zip(header, l.split("\t"))) for l in lines[1:] if not l.startswith("#")]
    return header, rows, [l for l in lines if l.startswith("#")]


def test_scan_records_and_summary(tmp_path, capsys):
    out = tmp_path / "scan.tsv"
    assert main(["scan", "--theta-steps", "5", "--phi-steps", "5", "--psi-steps", "5",
                 "--margin", "0.05", "-o", str(out)]) == 0
    header, rows, summary = _read_tsv(out)
    assert header == ["theta", "phi", "psi1", "regime", "unimod_err", "unit_err", "reducible"]
    assert len(rows) == 125
    generic = [r for r in rows if r["regime"] == "Generic"]
    assert generic and all(float(r["unit_err"]) < 1e-9 and r["reducible"] == "true" for r in generic)
    assert all(r["regime"] == "DoublyDegenerateTheta0" for r in rows if float(r["theta"]) == 0)
    assert len(summary) == 1
    assert float(summary[0].split("max_unit_err ")[1]) < 1e-9
    assert "failed 0" in capsys.readouterr().out


def test_scan_margin_zero_tags_theta0(tmp_path):
    out = tmp_path / "scan.tsv"
    assert main(["scan", "--theta-steps", "3", "--phi-steps", "3", "--psi-steps", "2",
                 "--margin", "0", "-o", str(out)]) == 0
    _, rows, _ = _read_tsv(out)
    theta0 = [r for r in rows if float(r["theta"]) == 0]
    assert len(theta0) == 6
    assert all(r["regime"] == "DoublyDegenerateTheta0" and r["unit_err"] == "nan" for r in theta0)


def test_scan_parallel_matches_serial(tmp_path):
    a, b = tmp_path / "a.tsv", tmp_path / "b.tsv"
    base = ["scan", "--theta-steps", "4", "--phi-steps", "4", "--psi-steps", "3"]
    assert main(base + ["-o", str(a)]) == 0
    assert main(base + ["--jobs", "2", "-o", str(b)]) == 0
    assert a.read_text() == b.read_text()


def test_scan_rejects_bad_spec():
    assert main(["scan", "--theta-steps", "0", "-o", "/dev/null"]) == 2


def test_gen_limit(tmp_path, capsys):
    out = tmp_path / "l.mat"
    assert main(["gen-limit", "theta0", "--phi", "1.5708", "--z", "0", "-o", str(out)]) == 0
    assert "F6(2)" in capsys.readouterr().out
    h = read_matrix(out)
    assert abs(h[1, 4] ** 2 - 1) < 1e-4  # z2^2 = 1 at z1 = 1, phi = pi/2 to 4e-6
    assert main(["verify", str(out)]) == 0
    assert main(["gen-limit", "theta0", "--phi", "0.3", "--z", str(np.angle(OMEGA))]) == 2
    assert "ExceptionalDirection" in capsys.readouterr().err
    for kind, anchor in [("theta0", "z3"), ("halfpi", "z1"), ("halfpi", "z3")]:
        path = tmp_path / f"{kind}{anchor}.mat"
        assert main(["gen-limit", kind, "--phi", "0.4", "--z", "0.9", "--anchor", anchor, "-o", str(path)]) == 0
        assert main(["verify", str(path)]) == 0


def test_cli_is_deterministic(tmp_path):
    a, b = tmp_path / "a.mat", tmp_path / "b.mat"
    args = ["gen", "--theta", "1.2", "--phi", "2.0", "--psi1", "0.5"]
    main(args + ["-o", str(a)])
    main(args + ["-o", str(b)])
    assert a.read_text() == b.read_text()
