"""
Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

All comparisons are exact rational equalities. Run alone with
``pytest tests/test_acceptance.py -v`` or ``python tests/test_acceptance.py``.
"""

import random
import subprocess
import sys
from math import comb

import pytest

from ncomplex import cohomology as coh
from ncomplex import complex as cx
from ncomplex.duality import (
    codualize,
    double_divergence,
    divergence_free_potential,
    dualize_symmetric,
    reduce_riemann,
    undualize,
)
from ncomplex.generate import random_typed
from ncomplex.homotopy import (
    homotopy_eq4,
    homotopy_eq5,
    homotopy_vs_solver_crosscheck,
    linearized_curvature,
    symmetrized_gradient,
)
from ncomplex.spin import (
    SpinField,
    bianchi_check,
    curvature,
    curvature_characterization,
    gauge_invariance_check,
    gauge_transform,
    pure_gauge_reconstruct,
)
from ncomplex.tensor import PolyTensor, symmetrize
from ncomplex.young import build_projector, diagram_for_degree, hook_dimension

from conftest import golden, random_symmetric2
from oracles import field_strength, killing_dim, poincare_potential

SEEDS = range(10)


@pytest.fixture
def verdict(capsys):
    def emit(number, title, failures):
        ok = not failures
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {title}")
            for f in failures[:5]:
                print(f"        {f}")
        assert ok, failures[:5]

    return emit


def test_criterion_01_nilpotency(verdict):
    failures = []
    checked = 0
    for N in (2, 3, 4):
        for D in (2, 3):
            for p in range(min(3 * (N - 1), (N - 1) * D) + 1):
                for g in range(5):
                    for seed in range(5):
                        rng = random.Random(f"{N}-{D}-{p}-{g}-{seed}")
                        T = random_typed(rng, N, D, p, g, min_degree=g)
                        if cx.d_power(N, T, N):
                            failures.append(f"N={N} D={D} p={p} g={g} seed={seed}")
                        if seed == 0:
                            # second route: projector applied term by term, no basis matrices
                            U = T
                            for _ in range(N):
                                U = cx.differential_by_projection(N, U)
                            if U:
                                failures.append(f"projection route N={N} D={D} p={p} g={g}")
                        checked += 1
    verdict(1, f"d^N T = 0 on {checked} random typed tensors", failures)


def test_criterion_02_vanishing_at_well_filled_degrees(verdict):
    failures = []
    cells = 0
    for N in (3, 4):
        for D in (2, 3):
            for n in (1, 2):
                p = (N - 1) * n
                for k in range(1, N):
                    for g in range(5):
                        r = coh.cohomology_dim(N, D, p, k, g)
                        cells += 1
                        if r.dim_H:
                            failures.append(f"N={N} D={D} p={p} k={k} g={g}: dim_H={r.dim_H}")
    verdict(2, f"H vanishes at every well-filled degree ({cells} cells)", failures)


def test_criterion_03_degree_zero(verdict):
    failures = []
    for N in (3, 4):
        for D in (2, 3):
            for k in range(1, N):
                dims = [coh.cohomology_dim(N, D, 0, k, g).dim_H for g in range(k + 3)]
                expected = [comb(g + D - 1, D - 1) if g < k else 0 for g in range(k + 3)]
                if dims != expected or sum(dims) != comb(D + k - 1, D):
                    failures.append(f"N={N} D={D} k={k}: {dims} vs {expected}")
    verdict(3, "degree-0 cohomology is the polynomials of degree < k", failures)


def test_criterion_04_eq4_homotopy(verdict):
    failures = []
    for D in (2, 3):
        for seed in SEEDS:
            rng = random.Random(400 + 10 * D + seed)
            xi0 = random_symmetric2(rng, D, 3)
            T = cx.differential(4, xi0)
            if T != symmetrized_gradient(xi0) or cx.d_power(4, T, 3):
                failures.append(f"D={D} seed={seed}: bad input")
                continue
            xi = homotopy_eq4(T)
            if symmetrize(xi, (0, 1)) != xi or symmetrized_gradient(xi) != T:
                failures.append(f"D={D} seed={seed}: d_(a xi_bc) != T")
            if not homotopy_vs_solver_crosscheck("eq4", T):
                failures.append(f"D={D} seed={seed}: coset check")
    verdict(4, "3-tensor homotopy inverts the symmetrized gradient", failures)


def test_criterion_05_eq5_homotopy(verdict):
    failures = []
    for D in (2, 3):
        for seed in SEEDS:
            rng = random.Random(500 + 10 * D + seed)
            h0 = random_symmetric2(rng, D, 3)
            R = linearized_curvature(h0)
            if cx.differential(3, R):
                failures.append(f"D={D} seed={seed}: seed curvature not closed")
                continue
            h = homotopy_eq5(R)
            if linearized_curvature(h) != R:
                failures.append(f"D={D} seed={seed}: reconstruction identity")
            if cx.d_power(3, h - h0, 2):
                failures.append(f"D={D} seed={seed}: d^2 (h - h0) != 0")
            if not homotopy_vs_solver_crosscheck("eq5", R):
                failures.append(f"D={D} seed={seed}: coset check")
    verdict(5, "Riemann homotopy reconstructs h from Bianchi-closed R", failures)


def test_criterion_06_killing(verdict):
    failures = []
    for D in (2, 3):
        dims = [coh.cohomology_dim(3, D, 1, 1, g).dim_H for g in range(5)]
        oracle = [killing_dim(D, g) for g in range(5)]
        expected = [D, D * (D - 1) // 2, 0, 0, 0]
        if dims != oracle or dims != expected or sum(dims) != D * (D + 1) // 2:
            failures.append(f"D={D}: {dims}, oracle {oracle}")
    verdict(6, "vector cohomology counts Killing vectors", failures)


def test_criterion_07_nontriviality(verdict):
    dims = [coh.cohomology_dim(3, 3, 3, 1, g).dim_H for g in range(5)]
    failures = []
    if not any(dims):
        failures.append(f"all zero: {dims}")
    if dims != sorted(dims):
        failures.append(f"not nondecreasing: {dims}")
    verdict(7, f"H^3_(1) at N=3, D=3 is nonzero, table {dims}", failures)


def test_criterion_08_duality(verdict):
    failures = []
    for D in (2, 3):
        for seed in SEEDS:
            rng = random.Random(800 + 10 * D + seed)
            R0 = random_typed(rng, 3, D, 4, 3)
            T = double_divergence(R0)
            R = divergence_free_potential(T)
            if double_divergence(R) != T:
                failures.append(f"D={D} seed={seed}: d d R != T")
            if not cx.is_member(3, R):
                failures.append(f"D={D} seed={seed}: R lacks Riemann symmetry")
            S = random_symmetric2(rng, D, 2)
            if codualize(dualize_symmetric(S)) != S * golden("dual_roundtrip", D):
                failures.append(f"D={D} seed={seed}: dualize round trip")
            rho = random_typed(rng, 3, D, 2 * (D - 2), 2)
            if reduce_riemann(undualize(rho)) != rho * golden("undual_roundtrip", D):
                failures.append(f"D={D} seed={seed}: undualize round trip")
    verdict(8, "divergence-free T is a double divergence of a Riemann tensor", failures)


def test_criterion_09_higher_spin(verdict):
    failures = []
    for S in (1, 2, 3):
        for D in (2, 3):
            zero = SpinField(S, PolyTensor.zero(D, S))
            for seed in SEEDS:
                rng = random.Random(900 + 100 * S + 10 * D + seed)
                field = SpinField(S, random_typed(rng, S + 1, D, S, 3))
                eps = random_typed(rng, S + 1, D, S - 1, 3)
                tag = f"S={S} D={D} seed={seed}"
                if not gauge_invariance_check(field, eps):
                    failures.append(f"{tag}: gauge invariance")
                R = curvature(field)
                if not bianchi_check(R, S):
                    failures.append(f"{tag}: Bianchi")
                pure = gauge_transform(zero, eps)
                if gauge_transform(zero, pure_gauge_reconstruct(pure)) != pure:
                    failures.append(f"{tag}: pure gauge round trip")
                if curvature(curvature_characterization(R, S)) != R:
                    failures.append(f"{tag}: curvature characterization")
                if S == 1:
                    A2 = curvature_characterization(R, 1).h
                    if R != field_strength(field.h) or field_strength(A2 - poincare_potential(R)):
                        failures.append(f"{tag}: de Rham oracle")
    verdict(9, "higher-spin gauge invariance, Bianchi and reconstructions", failures)


def test_criterion_10_projectors_and_dimensions(verdict):
    failures = []
    seen = set()
    for N in (2, 3, 4):
        for p in range(9):
            for D in (1, 2, 3):
                dg = diagram_for_degree(N, p)
                if (dg, D) in seen:
                    continue
                seen.add((dg, D))
                P = build_projector(dg, D)
                if not P.verify_idempotent():
                    failures.append(f"{dg} D={D}: not idempotent")
                if P.rank() != hook_dimension(dg, D):
                    failures.append(f"{dg} D={D}: rank {P.rank()} != {hook_dimension(dg, D)}")
                if p > (N - 1) * D and any(cx.enumerate_space(N, D, p, g).dim for g in range(3)):
                    failures.append(f"N={N} D={D} p={p}: space above the top degree is nonzero")
    verdict(10, f"{len(seen)} projectors idempotent with hook-content rank", failures)


def test_criterion_11_determinism(verdict):
    failures = []
    grids = [("3", "2", "4"), ("3", "3", "6"), ("4", "2", "6"), ("4", "3", "9")]
    for fmt in ("--csv", "--json"):
        for N, D, pmax in grids:
            argv = [sys.executable, "-m", "ncomplex.cli", "scan", "--N", N, "--D", D, "--pmax", pmax, "--gmax", "4", fmt]
            runs = [subprocess.run(argv + extra, capture_output=True) for extra in (["--workers", "1"], ["--workers", "2"])]
            if any(r.returncode for r in runs) or runs[0].stdout != runs[1].stdout or not runs[0].stdout:
                failures.append(f"N={N} D={D} {fmt}")
    verdict(11, "repeated full scans are byte-identical (CSV and JSON)", failures)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
