"""End-to-end acceptance checks, one test per criterion.

Each test prints a single PASS/FAIL line (visible with ``pytest -s``) and
asserts on exact equality plus its wall-clock budget.
"""

import json
import math
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from jackpieri import Field, interp_jack, jack, run_suite
from jackpieri.combinatorics import contains, partitions_of, partitions_up_to
from jackpieri.identities import SuiteConfig, binomial_sides
from jackpieri.interpjack import eval_interp, shifted_point
from jackpieri.kernel import build_kernel, verify_intertwining, verify_symmetry
from jackpieri.polyring import MultiPoly, schur_bialternant

D_GRID = (1, 2, 3, Fraction(1, 2))


def _report(n, title, ok, elapsed, budget=None):
    within = budget is None or elapsed < budget
    status = "PASS" if ok and within else "FAIL"
    limit = f" (budget {budget:.0f} s)" if budget else ""
    print(f"\n[criterion {n:2d}] {status} {title}: {elapsed:.1f} s{limit}")
    assert ok, title
    assert within, f"{title} took {elapsed:.1f} s"


def _suites(names, configs):
    bad = []
    for cfg in configs:
        for name in names:
            rep = run_suite(name, cfg)
            if not rep.ok:
                bad.append((name, cfg.r, rep.first_failure))
    return bad


def _eigen_grid():
    return [
        SuiteConfig(r=1, max_weight=5, d_values=D_GRID),
        SuiteConfig(r=2, max_weight=5, d_values=D_GRID),
        SuiteConfig(r=3, max_weight=4, d_values=D_GRID),
    ]


def test_criterion_01_schur_oracle():
    t0 = time.perf_counter()
    f = Field(2)
    ok = all(
        jack(m, f).poly == schur_bialternant(m, r, f)
        for r in (2, 3)
        for m in partitions_up_to(4, r)
    )
    _report(1, "Jack at d=2 equals the bialternant Schur ratio", ok, time.perf_counter() - t0, 10)


def test_criterion_02_eigen_suites():
    t0 = time.perf_counter()
    bad = _suites(["sekiguchi-eigen", "d-eigen"], _eigen_grid())
    _report(2, "Sekiguchi and D eigen-equations", not bad, time.perf_counter() - t0, 60)


def test_criterion_03_classical_pieri():
    t0 = time.perf_counter()
    bad = _suites(["classical-pieri", "commutator"], _eigen_grid())
    _report(3, "classical Pieri rules", not bad, time.perf_counter() - t0, 60)


def test_criterion_04_twisted_pieri():
    t0 = time.perf_counter()
    cfgs = [SuiteConfig(r=r, max_weight=4, d_values=(1, 2, 3)) for r in (1, 2, 3)]
    bad = _suites(["twisted-pieri"], cfgs)
    _report(4, "twisted Pieri and its top-coefficient forms", not bad, time.perf_counter() - t0, 180)


def test_criterion_05_mysterious_sum():
    t0 = time.perf_counter()
    cfgs = [SuiteConfig(r=r, max_weight=4, d_values=D_GRID, random_points=50) for r in (1, 2, 3)]
    reps = [run_suite("mysterious-sum", c) for c in cfgs]
    ok = all(rep.ok for rep in reps)
    expected = sum(
        len(D_GRID) * (len(partitions_up_to(4, c.r)) + 50) * 2**c.r for c in cfgs
    )
    ok = ok and sum(rep.cases for rep in reps) == expected
    _report(5, "mysterious summation residual is zero", ok, time.perf_counter() - t0)


def test_criterion_06_interpolation_construction():
    t0 = time.perf_counter()
    ok = True
    for d in D_GRID:
        f = Field(d)
        for m in range(6):
            falling = MultiPoly.const(1, 1, f)
            z = MultiPoly.var(0, 1, f)
            for i in range(m):
                falling = falling * (z - MultiPoly.const(i, 1, f))
            ok &= interp_jack((m,), f).poly == falling
    # vanishing well beyond the square system the solver imposes
    for r, kmax in ((1, 4), (2, 4), (3, 3)):
        for d in (1, 2, Fraction(1, 2)):
            f = Field(d)
            for k in partitions_up_to(kmax, r):
                for m in partitions_up_to(sum(k) + 2, r):
                    if sum(m) >= sum(k) and not contains(k, m):
                        ok &= eval_interp(k, shifted_point(m, f), f) == 0
    _report(6, "falling factorials and extra vanishing", ok, time.perf_counter() - t0)


def test_criterion_07_binomial():
    t0 = time.perf_counter()
    bad = _suites(["binomial"], [SuiteConfig(r=r, max_weight=4, d_values=(1, 2, 3)) for r in (1, 2)])
    ok = not bad
    for d in (1, 2, 3):
        f = Field(d)
        for n in range(5):
            got, _ = binomial_sides((n,), f)
            # at r=1 Psi_k = z^k / k!, so (1+z)^n has Psi-coefficients C(n,k) k!
            ok &= got == {(k,): Fraction(math.comb(n, k) * math.factorial(k)) for k in range(n + 1)}
    _report(7, "binomial formula", ok, time.perf_counter() - t0)


def test_criterion_08_difference_and_interp_pieri():
    t0 = time.perf_counter()
    cfgs = [SuiteConfig(r=r, max_weight=4 if r < 3 else 3, d_values=D_GRID, random_points=20) for r in (1, 2, 3)]
    bad = _suites(["difference-equation", "interp-pieri", "interp-vanishing"], cfgs)
    _report(8, "difference equation and interpolation Pieri", not bad, time.perf_counter() - t0, 180)


def test_criterion_09_kernel():
    t0 = time.perf_counter()
    f1 = Field(1)
    kern = build_kernel(5, 1, f1)
    ok = all(
        kern.coefficient((m,), (m,)) == Fraction(1, math.factorial(m))
        and all(kern.coefficient((m,), (n,)) == 0 for n in range(6) if n != m)
        for m in range(6)
    )
    for d in (1, 2):
        kern = build_kernel(4, 2, Field(d))
        ok &= verify_symmetry(kern).ok
        for l in (0, 1, 2):
            ok &= verify_intertwining(kern, l).ok
    _report(9, "kernel truncation, symmetry and intertwining", ok, time.perf_counter() - t0)


@pytest.mark.slow
def test_criterion_10_symbolic_smoke():
    from jackpieri.identities import SUITES

    t0 = time.perf_counter()
    bad = _suites(list(SUITES), [SuiteConfig(r=2, max_weight=3, d_values=(None,))])
    _report(10, "all suites over Q(d)", not bad, time.perf_counter() - t0, 300)


def test_criterion_11_determinism(tmp_path):
    t0 = time.perf_counter()
    outs = []
    for i in range(2):
        path = tmp_path / f"run{i}.json"
        cmd = [sys.executable, "-m", "jackpieri", "verify", "all", "--r", "2", "--max-weight", "2",
               "--d", "1", "--d", "1/2", "--seed", "7", "--format", "json", "--out", str(path)]
        proc = subprocess.run(cmd, capture_output=True, text=True)
        assert proc.returncode == 0, proc.stderr
        outs.append(path.read_bytes())
    ok = outs[0] == outs[1] and json.loads(outs[0])["results"]
    _report(11, "verify all JSON is byte-identical across runs", bool(ok), time.perf_counter() - t0)
