"""
``ncomplex`` command line front end.

Exit status: 0 success, 1 bad input or precondition failure (JSON error body on
stdout), 2 invariant violation (a bug).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import cohomology as coh
from . import complex as cx
from . import duality, homotopy, spin
from .errors import InvariantViolation, NComplexError, PreconditionError
from .generate import KINDS, generate_random, random_typed
from .tensor import PolyTensor


class UsageError(PreconditionError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _read_tensor(path: str) -> PolyTensor:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise PreconditionError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return PolyTensor.from_json(text)
    except PreconditionError as exc:
        raise PreconditionError(f"{path}: {exc}") from None


def _emit_tensor(T: PolyTensor, output: str | None, out) -> None:
    text = T.to_json() + "\n"
    if output:
        Path(output).write_text(text)
    else:
        out.write(text)


def _cmd_dims(a, out):
    space = cx.enumerate_space(a.N, a.D, a.p, a.g)
    if a.json:
        out.write(json.dumps({"N": a.N, "D": a.D, "p": a.p, "g": a.g,
                              "diagram": list(space.diagram.rows), "dim": space.dim}) + "\n")
    else:
        out.write(f"{space.dim}\n")


def _cmd_dmatrix(a, out):
    M = cx.matrix_of_d_power(a.N, a.D, a.p, a.g, a.k)
    if a.json:
        out.write(json.dumps(M.to_dict()) + "\n")
    else:
        out.write(f"d^{a.k}: {M.source.dim} -> {M.target.dim}, rank {M.rank()}\n")
        for row in M.matrix.to_dense():
            out.write(" ".join(str(v) for v in row) + "\n")


def _cmd_cohomology(a, out):
    r = coh.cohomology_dim(a.N, a.D, a.p, a.k, a.g)
    if a.json:
        out.write(json.dumps(r.to_dict()) + "\n")
    else:
        out.write(f"dim_kernel={r.dim_kernel} rank_image={r.rank_image} dim_H={r.dim_H}\n")


def _cmd_scan(a, out):
    workers = a.workers if a.workers else coh.default_workers()
    reports = coh.scan_cohomology(a.N, a.D, a.pmax, a.gmax, workers=workers)
    if a.json:
        out.write(json.dumps([r.to_dict() for r in reports]) + "\n")
    elif a.csv:
        out.write(coh.reports_to_csv(reports))
    else:
        for r in reports:
            out.write(f"p={r.p} k={r.k} g={r.g}: dim_H={r.dim_H} ({r.dim_kernel} - {r.rank_image})\n")


def _cmd_check_nilpotent(a, out):
    rng = random.Random(a.seed)
    checked = 0
    for p in range(a.pmax + 1):
        for g in range(a.gmax + 1):
            for _ in range(a.samples):
                T = random_typed(rng, a.N, a.D, p, g, min_degree=g)
                if cx.d_power(a.N, T, a.N, check=False):
                    raise InvariantViolation(f"d^{a.N} T != 0 at p={p}, g={g}")
                checked += 1
    if a.json:
        out.write(json.dumps({"status": "OK", "checked": checked}) + "\n")
    else:
        out.write("OK\n")


def _cmd_preimage(a, out):
    R = _read_tensor(a.input)
    try:
        K = coh.preimage_solve(a.N, R, a.k)
    except coh.NoSolution as exc:
        body = {
            "error": "NoSolution",
            "message": str(exc),
            "g": exc.space.g,
            "functional": {str(n): f"{v.numerator}/{v.denominator}" for n, v in sorted(exc.functional.items())},
            "pairing": f"{exc.pairing.numerator}/{exc.pairing.denominator}",
        }
        out.write(json.dumps(body) + "\n")
        return 1
    _emit_tensor(K, a.output, out)


def _cmd_homotopy(a, out):
    T = _read_tensor(a.input)
    fn = {"eq4": homotopy.homotopy_eq4, "eq5": homotopy.homotopy_eq5}[a.formula]
    _emit_tensor(fn(T), a.output, out)


def _cmd_potential(a, out):
    _emit_tensor(duality.divergence_free_potential(_read_tensor(a.input)), a.output, out)


def _cmd_dualize(a, out):
    _emit_tensor(duality.dualize_symmetric(_read_tensor(a.input)), a.output, out)


def _cmd_spin(a, out):
    if a.action == "curvature":
        field = spin.SpinField(a.S, _read_tensor(a.input))
        _emit_tensor(spin.curvature(field), a.output, out)
    elif a.action == "reconstruct":
        field = spin.curvature_characterization(_read_tensor(a.input), a.S)
        _emit_tensor(field.h, a.output, out)
    elif a.action == "pure-gauge":
        eps = spin.pure_gauge_reconstruct(spin.SpinField(a.S, _read_tensor(a.input)))
        _emit_tensor(eps, a.output, out)
    elif a.action == "check":
        if not a.epsilon:
            raise UsageError("spin check needs --epsilon")
        field = spin.SpinField(a.S, _read_tensor(a.input))
        spin.gauge_invariance_check(field, _read_tensor(a.epsilon))
        bianchi = spin.bianchi_check(spin.curvature(field), a.S)
        if not bianchi:
            raise InvariantViolation("curvature violates the Bianchi identity")
        out.write(json.dumps({"gauge_invariant": True, "bianchi": True}) + "\n" if a.json else "OK\n")


def _cmd_generate(a, out):
    T = generate_random(a.kind, a.D, a.bound, a.seed, N=a.N, p=a.p, k=a.k)
    _emit_tensor(T, a.output, out)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="ncomplex", description="Exact N-complexes of Young-symmetric tensor fields.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def grid(p, *names):
        for n in names:
            p.add_argument(f"--{n}", type=int, required=True)

    s = sub.add_parser("dims", help="basis size of a space")
    grid(s, "N", "D", "p", "g")
    s.add_argument("--json", action="store_true")
    s.set_defaults(fn=_cmd_dims)

    s = sub.add_parser("dmatrix", help="matrix of d^k")
    grid(s, "N", "D", "p", "g", "k")
    s.add_argument("--json", action="store_true")
    s.set_defaults(fn=_cmd_dmatrix)

    s = sub.add_parser("cohomology", help="dimension of one cohomology cell")
    grid(s, "N", "D", "p", "k", "g")
    s.add_argument("--json", action="store_true")
    s.set_defaults(fn=_cmd_cohomology)

    s = sub.add_parser("scan", help="table of cohomology dimensions")
    grid(s, "N", "D", "pmax", "gmax")
    fmt = s.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true")
    fmt.add_argument("--json", action="store_true")
    s.add_argument("--workers", type=int, default=0, help="default: $NCOMPLEX_THREADS or all cores")
    s.set_defaults(fn=_cmd_scan)

    s = sub.add_parser("check-nilpotent", help="d^N = 0 on random typed tensors")
    grid(s, "N", "D", "pmax", "gmax")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--samples", type=int, default=2)
    s.add_argument("--json", action="store_true")
    s.set_defaults(fn=_cmd_check_nilpotent)

    s = sub.add_parser("preimage", help="solve d^(N-k) K = R")
    grid(s, "N", "k")
    s.add_argument("--input", required=True)
    s.add_argument("--output")
    s.set_defaults(fn=_cmd_preimage)

    s = sub.add_parser("homotopy", help="closed-form potentials")
    s.add_argument("--formula", choices=("eq4", "eq5"), required=True)
    s.add_argument("--input", required=True)
    s.add_argument("--output")
    s.set_defaults(fn=_cmd_homotopy)

    s = sub.add_parser("potential", help="Riemann-symmetric R with d d R = T")
    s.add_argument("--input", required=True)
    s.add_argument("--output")
    s.set_defaults(fn=_cmd_potential)

    s = sub.add_parser("dualize", help="epsilon dual of a symmetric 2-tensor")
    s.add_argument("--input", required=True)
    s.add_argument("--output")
    s.set_defaults(fn=_cmd_dualize)

    s = sub.add_parser("spin", help="higher-spin gauge fields")
    s.add_argument("action", choices=("curvature", "reconstruct", "pure-gauge", "check"))
    s.add_argument("--S", type=int, required=True)
    s.add_argument("--input", required=True)
    s.add_argument("--epsilon")
    s.add_argument("--output")
    s.add_argument("--json", action="store_true")
    s.set_defaults(fn=_cmd_spin)

    s = sub.add_parser("generate", help="seeded random tensor")
    s.add_argument("--kind", choices=KINDS, required=True)
    s.add_argument("--D", type=int, required=True)
    s.add_argument("--bound", type=int, default=2, help="polynomial degree bound of the seed field")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--N", type=int)
    s.add_argument("--p", type=int)
    s.add_argument("--k", type=int)
    s.add_argument("--output")
    s.set_defaults(fn=_cmd_generate)
    return ap


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        status = args.fn(args, out)
        return status or 0
    except InvariantViolation as exc:
        out.write(json.dumps({"error": "InvariantViolation", "message": str(exc)}) + "\n")
        return 2
    except (NComplexError, ValueError) as exc:
        out.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
