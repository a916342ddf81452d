import io
import json
import subprocess
import sys

from ncomplex import cli
from ncomplex import complex as cx
from ncomplex.duality import double_divergence
from ncomplex.errors import InvariantViolation
from ncomplex.generate import generate_random
from ncomplex.homotopy import linearized_curvature
from ncomplex.tensor import PolyTensor, divergence


def run(*argv):
    out = io.StringIO()
    status = cli.run(list(argv), out)
    return status, out.getvalue()


def write(tmp_path, name, T):
    path = tmp_path / name
    path.write_text(T.to_json())
    return str(path)


def test_dims():
    assert run("dims", "--N", "3", "--D", "2", "--p", "4", "--g", "0") == (0, "1\n")
    status, text = run("dims", "--N", "3", "--D", "3", "--p", "4", "--g", "2", "--json")
    assert status == 0 and json.loads(text)["dim"] == 36


def test_check_nilpotent():
    assert run("check-nilpotent", "--N", "4", "--D", "3", "--pmax", "6", "--gmax", "3", "--seed", "7") == (0, "OK\n")


def test_scan_csv_vanishes_on_well_filled_rows():
    status, text = run("scan", "--N", "3", "--D", "3", "--pmax", "4", "--gmax", "3", "--csv", "--workers", "1")
    assert status == 0
    lines = text.splitlines()
    assert lines[0] == "N,D,p,k,g,dim_kernel,rank_image,dim_H"
    rows = [dict(zip(lines[0].split(","), map(int, line.split(",")))) for line in lines[1:]]
    assert len(rows) == 5 * 2 * 4
    assert all(r["dim_H"] == 0 for r in rows if r["p"] in (2, 4))


def test_scan_output_is_byte_identical():
    argv = ("scan", "--N", "3", "--D", "2", "--pmax", "4", "--gmax", "3")
    assert run(*argv, "--json") == run(*argv, "--json", "--workers", "2")
    assert run(*argv, "--csv") == run(*argv, "--csv")


def test_cohomology_and_dmatrix():
    status, text = run("cohomology", "--N", "3", "--D", "3", "--p", "3", "--k", "1", "--g", "2", "--json")
    assert status == 0 and json.loads(text)["dim_H"] == 6
    status, text = run("dmatrix", "--N", "3", "--D", "3", "--p", "2", "--g", "3", "--k", "2", "--json")
    data = json.loads(text)
    assert status == 0 and data["k"] == 2 and data["source"]["p"] == 2 and data["target"]["g"] == 1
    assert run("dmatrix", "--N", "2", "--D", "2", "--p", "0", "--g", "1", "--k", "1")[1].startswith("d^1: 2 -> 2, rank 2")


def test_generate_is_reproducible(tmp_path):
    argv = ("generate", "--kind", "typed", "--N", "3", "--p", "3", "--D", "3", "--bound", "2", "--seed", "1")
    first, second = run(*argv), run(*argv)
    assert first == second and first[0] == 0
    assert cx.is_member(3, PolyTensor.from_json(first[1]))


def test_generate_examples():
    R = generate_random("closed-eq5", 2, 2, seed=2)
    assert cx.is_member(3, R) and not cx.differential(3, R)
    T = generate_random("div-free", 3, 2, seed=3)
    assert T and not divergence(T, 0)
    T = generate_random("closed-eq4", 3, 2, seed=4)
    assert not cx.d_power(4, T, 3)
    R = generate_random("exact", 3, 2, seed=5, N=3, p=3, k=1)
    assert not cx.d_power(3, R, 1)


def test_preimage_round_trip(tmp_path):
    R = generate_random("exact", 3, 2, seed=9, N=4, p=4, k=2)
    out = tmp_path / "K.json"
    status, _ = run("preimage", "--N", "4", "--k", "2", "--input", write(tmp_path, "R.json", R), "--output", str(out))
    assert status == 0
    K = PolyTensor.from_json(out.read_text())
    assert cx.d_power(4, K, 2) == R


def test_preimage_no_solution_body(tmp_path):
    R = PolyTensor.constant(3, {(0,): 1})
    status, text = run("preimage", "--N", "3", "--k", "1", "--input", write(tmp_path, "R.json", R))
    body = json.loads(text)
    assert status == 1 and body["error"] == "NoSolution" and body["pairing"] != "0/1"


def test_homotopy_commands(tmp_path):
    T = generate_random("closed-eq4", 3, 3, seed=11)
    status, text = run("homotopy", "--formula", "eq4", "--input", write(tmp_path, "T.json", T))
    assert status == 0 and cx.differential(4, PolyTensor.from_json(text)) == T

    R = generate_random("closed-eq5", 3, 3, seed=12)
    status, text = run("homotopy", "--formula", "eq5", "--input", write(tmp_path, "R.json", R))
    assert status == 0 and linearized_curvature(PolyTensor.from_json(text)) == R

    bad = PolyTensor.constant(2, {(0, 1, 1): 1})
    status, text = run("homotopy", "--formula", "eq4", "--input", write(tmp_path, "bad.json", bad))
    assert status == 1 and json.loads(text)["error"] == "MembershipError"


def test_potential_and_dualize(tmp_path):
    T = generate_random("div-free", 3, 3, seed=13)
    path = write(tmp_path, "T.json", T)
    status, text = run("potential", "--input", path)
    assert status == 0
    assert double_divergence(PolyTensor.from_json(text)) == T
    status, text = run("dualize", "--input", path)
    assert status == 0 and PolyTensor.from_json(text).degree == 4


def test_spin_commands(tmp_path):
    h = generate_random("symmetric", 3, 3, seed=14, p=3)
    eps = generate_random("symmetric", 3, 2, seed=15, p=2)
    hp, ep = write(tmp_path, "h.json", h), write(tmp_path, "e.json", eps)
    assert run("spin", "check", "--S", "3", "--input", hp, "--epsilon", ep) == (0, "OK\n")

    status, text = run("spin", "curvature", "--S", "3", "--input", hp)
    R = PolyTensor.from_json(text)
    assert status == 0 and R.degree == 6
    rp = write(tmp_path, "R.json", R)
    status, text = run("spin", "reconstruct", "--S", "3", "--input", rp)
    assert status == 0
    assert cx.d_power(4, PolyTensor.from_json(text), 3) == R

    grad = cx.differential(4, eps)
    status, text = run("spin", "pure-gauge", "--S", "3", "--input", write(tmp_path, "g.json", grad))
    assert status == 0 and cx.differential(4, PolyTensor.from_json(text)) == grad

    status, text = run("spin", "check", "--S", "3", "--input", hp)
    assert status == 1 and "epsilon" in json.loads(text)["message"]


def test_malformed_input(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"D": 2, "degree": 1, "terms": [{"indices": [0], "exponents": [0, 0], "coeff": 0.5}]}')
    status, text = run("dualize", "--input", str(path))
    body = json.loads(text)
    assert status == 1 and "terms[0].coeff" in body["message"]

    path.write_text("{not json")
    status, text = run("dualize", "--input", str(path))
    assert status == 1 and "line 1" in json.loads(text)["message"]

    status, text = run("dualize", "--input", str(tmp_path / "missing.json"))
    assert status == 1 and "cannot read" in json.loads(text)["message"]


def test_usage_errors():
    status, text = run("dims", "--N", "3")
    assert status == 1 and json.loads(text)["error"] == "UsageError"
    assert run("frobnicate")[0] == 1
    assert run("dims", "--N", "3", "--D", "2", "--p", "1", "--g", "0", "--bogus")[0] == 1
    assert run("cohomology", "--N", "3", "--D", "2", "--p", "1", "--k", "5", "--g", "0")[0] == 1


def test_invariant_violation_exits_with_two(monkeypatch):
    def broken(*args):
        raise InvariantViolation("synthetic")

    monkeypatch.setattr(cli.coh, "cohomology_dim", broken)
    status, text = run("cohomology", "--N", "3", "--D", "2", "--p", "1", "--k", "1", "--g", "0")
    assert status == 2 and json.loads(text) == {"error": "InvariantViolation", "message": "synthetic"}


def test_module_entry_point():
    argv = ["dims", "--N", "3", "--D", "2", "--p", "4", "--g", "0"]
    proc = subprocess.run([sys.executable, "-m", "ncomplex.cli", *argv], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "1\n"
