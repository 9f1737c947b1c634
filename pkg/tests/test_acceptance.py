"""Acceptance criteria, one test each; every test prints a single PASS/FAIL line.

The lines are collected and repeated in the pytest terminal summary, so they
show up together at the end of a plain ``pytest`` run or of
``python3 tests/test_acceptance.py``.

The determinism check runs ``check all`` at bound 3 by default to keep the
pytest run short; set ``ORD_ACCEPTANCE_FULL=1`` to run it at the suites'
default bounds instead.
"""
import os
import re
import subprocess
import sys
import time

import pytest

from finord import duality, laws
from finord.core import MonMap, Tag, enumerate_hom, hom_count

RESULTS: list[str] = []

DIAGRAM_SUITES = ["prop-2.12", "lemma-2.17", "cor-2.24", "notation-2.25",
                  "lemma-2.26", "prop-2.28"]
# (suite, bound): bound 4 for three-variable laws, 5 for two-variable laws
ALGEBRA_SUITES = [("monoid-osum", 4), ("osum-fibers", 5), ("monoid-sigma", 4),
                  ("sigma-pushouts", 5), ("osum-actions", 4),
                  ("sigma-actions", 4), ("thm-3.12", 5), ("cor-3.13", 5),
                  ("prop-3.17", 5), ("thm-3.19", 4), ("cor-3.23", 5),
                  ("thm-3.24", 4), ("thm-3.27", 4)]


def _line(number: int, ok: bool, detail: str) -> str:
    line = f"AC{number:<2} {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS.append(line)
    print(line)
    return line


def _suites(pairs):
    reports = [laws.run_suite(name, bound) for name, bound in pairs]
    bad = [r.summary() for r in reports if not r.passed]
    return reports, bad


def _flipped_cut(f: MonMap) -> MonMap:
    m, n, v = f.src, f.dst, f.values
    return MonMap._unchecked(
        n + 1, m + 1, tuple(sum(1 for x in v if x >= n - k) for k in range(n + 1)))


def test_ac1_involutions():
    start = time.perf_counter()
    report = laws.run_suite("thm-2.9", 6)
    seconds = time.perf_counter() - start
    ok = report.passed and seconds < 10
    _line(1, ok, f"dualT/dualI involutions, sizes<=6: {report.instances} maps, "
                 f"{report.failed} failures, {seconds:.2f}s (< 10s)")
    assert ok


def test_ac2_birkhoff_inverses():
    report = laws.run_suite("birkhoff-2.10", 6)
    _line(2, report.passed, f"B-inv.B on Ord<=6 and B.B-inv on OrdIt<=7: "
                            f"{report.instances} maps, {report.failed} failures")
    assert report.passed


def test_ac3_dualities_are_opposite_adjoints():
    report = laws.run_suite("thm-2.23", 6)
    _line(3, report.passed, f"dualT == op.lad, dualI == op.rad, rad(g)(0) pinned, "
                            f"sizes<=6: {report.instances} maps, "
                            f"{report.failed} failures")
    assert report.passed


def test_ac4_diagram_suites_and_mutation(monkeypatch):
    reports, bad = _suites((name, 5) for name in DIAGRAM_SUITES)
    monkeypatch.setattr(duality, "bracket", _flipped_cut)
    mutant = laws.run_suite("lemma-2.26", 5)
    monkeypatch.undo()
    ok = not bad and not mutant.passed
    _line(4, ok, f"{len(reports)} diagram suites at 5, "
                 f"{sum(r.instances for r in reports)} instances, failing={bad}; "
                 f"flipped-cut mutant caught by lemma-2.26 "
                 f"({mutant.failed} failures)")
    assert ok


def test_ac5_counting():
    report = laws.run_suite("counts", 7)
    pinned = hom_count(4, 4) == 35 == len(enumerate_hom(4, 4))
    dual = all(hom_count(m, n) == len(enumerate_hom(n + 1, m + 1, Tag.ORD_IT))
               for m in range(8) for n in range(8))
    ok = report.passed and pinned and dual
    _line(5, ok, f"hom counts m,n<=7 for all tags ({report.instances} pairs, "
                 f"{report.failed} failures); |Hom_Ord(4,4)|=35: {pinned}; "
                 f"duality count: {dual}")
    assert ok


def test_ac6_galois():
    report = laws.run_suite("galois-2.22", 6)
    _line(6, report.passed, f"lad/rad Galois inequalities and mutual inverses, "
                            f"sizes<=6: {report.instances} maps, "
                            f"{report.failed} failures")
    assert report.passed


def test_ac7_algebra():
    start = time.perf_counter()
    reports, bad = _suites(ALGEBRA_SUITES)
    seconds = time.perf_counter() - start
    ok = not bad and seconds < 300
    _line(7, ok, f"{len(reports)} algebra suites, "
                 f"{sum(r.instances for r in reports)} instances, "
                 f"failing={bad}, {seconds:.1f}s (< 300s)")
    assert ok


def test_ac8_perfectness():
    reports, bad = _suites([("perfectness-3.32", 5), ("cor-3.38", 4)])
    _line(8, not bad, f"zero-object pairings, separation at 5, Ord-valued "
                      f"pairing balanced at 4: "
                      f"{sum(r.instances for r in reports)} instances, "
                      f"failing={bad}")
    assert not bad


def test_ac9_barr_beck():
    census = [len(laws.enumerate_coalgebras(p)) for p in range(1, 6)]
    report = laws.run_suite("barr-beck-3.33", 5)
    ok = census == [0, 1, 1, 1, 1] and report.passed
    _line(9, ok, f"coalgebra census {census}; coalgebra maps biject with "
                 f"stripped Hom_OrdT: {report.failed} failures")
    assert ok


def _check_all(bound, jobs):
    cmd = [sys.executable, "-m", "finord", "--format", "json", "check", "all",
           "--jobs", str(jobs)]
    if bound is not None:
        cmd += ["--bound", str(bound)]
    env = {k: v for k, v in os.environ.items() if k != "ORD_CHECK_BOUND"}
    proc = subprocess.run(cmd, capture_output=True, env=env)
    return proc.returncode, re.sub(rb'"millis":\d+', b'"millis":0', proc.stdout)


def test_ac10_determinism():
    bound = None if os.environ.get("ORD_ACCEPTANCE_FULL") else 3
    runs = [_check_all(bound, 1), _check_all(bound, 1), _check_all(bound, 2),
            _check_all(bound, 4)]
    ok = all(r == runs[0] for r in runs) and runs[0][0] == 0
    label = "default bounds" if bound is None else f"bound {bound}"
    _line(10, ok, f"check all ({label}) JSON byte-identical modulo millis "
                  f"across 2 serial runs and jobs=2,4 ({len(runs[0][1])} bytes)")
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
