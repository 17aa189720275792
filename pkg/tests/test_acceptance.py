"""Acceptance criteria 1-13, each at its stated tolerance.

Run under pytest (one test per criterion, a PASS/FAIL line printed for each)
or directly with ``python tests/test_acceptance.py`` for just the summary.
"""

from __future__ import annotations

import subprocess
import sys
import time
from fractions import Fraction

import pytest

from eulerzeta import padic_q as pq
from eulerzeta import series_eval as se
from eulerzeta import special_numbers as sn
from eulerzeta import zeta_values as zv
from eulerzeta.core_arith import mixed_error
from eulerzeta.padic_q import PadicInt
from eulerzeta.zeta_values import PiMultiple

BITS = 256
TOL = Fraction(1, 2**200)


def _fresh_python(code: str) -> str:
    res = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, check=True)
    return res.stdout.strip()


def criterion_1():
    # timed in a fresh interpreter so no memoized table is reused
    elapsed = float(_fresh_python(
        "import time; t = time.perf_counter()\n"
        "from eulerzeta import special_numbers as sn, powerseries as ps\n"
        "assert [sn.bernoulli(n) for n in range(61)] == ps.gf_coefficients('bernoulli', 60)\n"
        "print(time.perf_counter() - t)"
    ))  # fmt: skip
    spots = sn.bernoulli(12) == Fraction(-691, 2730) and sn.bernoulli(20) == Fraction(-174611, 330)
    return spots and elapsed < 1.0, f"tables agree to n=60 in {elapsed:.3f}s; B_12, B_20 spot values"


def criterion_2():
    eq3 = all(sn.second_from_first(k) == sn.euler_second(k) for k in range(61))
    spots = (sn.euler_second(2), sn.euler_second(4), sn.euler_second(6)) == (-1, 5, -61)
    return eq3 and spots, "sum C(k,l) 2^l E*_l = E_k for k <= 60; E_2=-1, E_4=5, E_6=-61 (a printed +61 has the wrong sign)"


def criterion_3():
    same = all(zv.zeta_even(n) == zv.zeta_even_via_euler(n) for n in range(1, 31))
    bridge = all(
        sn.euler_first(2 * n - 1) == 2 * (1 - 4**n) * sn.bernoulli(2 * n) / (2 * n) for n in range(1, 31)
    )
    return same and bridge, "zeta_even == zeta_even_via_euler and the E*/B bridge for n <= 30"


def criterion_4():
    exact = zv.euler_zeta_even(1) == PiMultiple(Fraction(-1, 6), 2) and zv.euler_zeta_even(
        2
    ) == PiMultiple(Fraction(-7, 360), 4)
    worst = max(
        mixed_error(se.euler_zeta_eval(2 * n, BITS), zv.euler_zeta_even(n).to_bigfloat(BITS)).to_fraction()
        for n in range(1, 9)
    )
    return exact and worst <= TOL, f"exact -1/6 pi^2, -7/360 pi^4; worst relative error {float(worst):.2e}"


def criterion_5():
    worst = max(
        mixed_error(se.dirichlet_beta_eval(2 * n + 1, BITS), zv.beta_odd(n).to_bigfloat(BITS)).to_fraction()
        for n in range(0, 7)
    )
    lam = all(zv.lambda_even(n) == zv.zeta_even(n).scale(1 - Fraction(1, 4**n)) for n in range(1, 31))
    return worst <= TOL and lam, f"beta(2n+1) worst error {float(worst):.2e}; lambda identity n <= 30"


def criterion_6():
    worst = max(zv.corollary2_residual(n, BITS).to_fraction() for n in range(1, 6))
    return worst < TOL, f"max residual {float(worst):.2e} for n = 1..5"


def criterion_7():
    ok = all(a == b for a, b in (zv.mixed_identity_eq21(k) for k in range(1, 41)))
    k1 = zv.mixed_identity_eq21(1) == (Fraction(1, 24), Fraction(1, 24))
    return ok and k1, "exact for k = 1..40; k = 1 gives 1/24 on both sides"


def criterion_8():
    worst = max(se.eq19_residual(s, BITS).to_fraction() for s in ("2", "3", "4", "5.5"))
    return worst < TOL, f"max residual {float(worst):.2e} at s in {{2, 3, 4, 5.5}}"


def criterion_9_fermionic():
    worst = None
    for p in (3, 5, 7):
        for N in range(1, 7):
            for n in range(11):
                v, _ = (pq.fermionic_sum(n, p, N) - pq.padic_of_rational(sn.euler_first(n), p, N)).valuation()
                if v < N and worst is None:
                    worst = (p, N, n, v)
    s2 = pq.fermionic_sum(1, 3, 2)
    example = s2.lift() == 4 and s2 == pq.padic_of_rational(Fraction(-1, 2), 3, 2)
    return worst is None and example, "v_p(S_N - E*_n) >= N on the grid; S_2 = 4 = -1/2 mod 9" + (
        f"; first failure {worst}" if worst else ""
    )


def criterion_9_volkenborn():
    """The bound exactly as stated: v_p(p^-N sum x^n - B_n) >= N."""
    failures = []
    for p in (3, 5):
        for N in range(1, 6):
            for n in range(7):
                v = pq.valuation(pq.volkenborn_riemann_sum(n, p, N) - sn.bernoulli(n), p)
                if v < N:
                    failures.append((p, N, n, v))
    detail = "v_p >= N on p in {3,5}, n <= 6, N <= 5"
    if failures:
        detail += f"; {len(failures)} misses (p, N, n, v), e.g. {failures[:3]}"
    return not failures, detail


def criterion_9_volkenborn_reported_depth():
    ok = all(
        pq.valuation(pq.volkenborn_riemann_sum(n, p, N) - sn.bernoulli(n), p) >= pq.volkenborn_depth(n, p, N)
        for p in (3, 5)
        for N in range(1, 6)
        for n in range(7)
    )
    return ok, "v_p >= N - 1 - v_p(n+1) (the depth volkenborn_sum reports)"


def criterion_10():
    count = 0
    for q in (Fraction(2), Fraction(7, 3), Fraction(-3, 5)):
        for p in (3, 5):
            for d in (1, 7):
                for N in (1, 2):
                    for a in range(d * p**N):
                        if not pq.mu_minus_q_distribution_check(a, d, p, N, q):
                            return False, f"failed at a={a}, d={d}, p={p}, N={N}, q={q}"
                        count += 1
    return True, f"{count} grid points exact"


def criterion_11():
    ratios = []
    for m in range(9):
        errs = [abs(pq.carlitz_q_bernoulli(m, 1 + Fraction(1, 10**e), BITS) - sn.bernoulli(m)).to_fraction()
                for e in (3, 4, 5)]  # fmt: skip
        ratios += [errs[0] / errs[1], errs[1] / errs[2]]
    linear = all(5 <= r <= 20 for r in ratios)
    p = 5
    cross = all(
        pq.q_bosonic_sum(m, p, N, 1 + p).agreement(pq.carlitz_q_bernoulli(m, PadicInt(p, 24, 1 + p), BITS))
        >= N - m - 1
        for m in range(5)
        for N in range(1, 7)
    )
    lo, hi = float(min(ratios)), float(max(ratios))
    return linear and cross, f"error ratio per decade in [{lo:.3f}, {hi:.3f}]; p-adic agreement >= N - m - 1"


def criterion_12():
    from eulerzeta.verify import run_suite

    q = Fraction(1, 2)
    residuals = [float(pq.q_zeta_residual(k, q, 128)) for k in range(1, 5)]
    report = run_suite("q")
    flagged = any("zeta_q" in note for note in report.notes) and all(
        c.description.startswith("DIAGNOSTIC") for c in report.cases if c.id.startswith("q/zeta_q/k")
    )
    return flagged, "reported, not asserted; residual at q=1/2, k=1..4: " + ", ".join(f"{r:.3g}" for r in residuals)


def criterion_13():
    cmd = [sys.executable, "-m", "eulerzeta", "verify", "--suite", "all", "--format", "json"]
    t = time.perf_counter()
    first = subprocess.run(cmd, capture_output=True)
    elapsed = time.perf_counter() - t
    second = subprocess.run(cmd, capture_output=True)
    ok = first.returncode == 0 and elapsed < 60 and first.stdout == second.stdout
    return ok, f"exit {first.returncode} in {elapsed:.2f}s; byte-identical: {first.stdout == second.stdout}"


CRITERIA = [
    ("1", criterion_1),
    ("2", criterion_2),
    ("3", criterion_3),
    ("4", criterion_4),
    ("5", criterion_5),
    ("6", criterion_6),
    ("7", criterion_7),
    ("8", criterion_8),
    ("9a fermionic", criterion_9_fermionic),
    ("9b volkenborn >= N", criterion_9_volkenborn),
    ("9c volkenborn reported depth", criterion_9_volkenborn_reported_depth),
    ("10", criterion_10),
    ("11", criterion_11),
    ("12", criterion_12),
    ("13", criterion_13),
]


def _line(label: str, ok: bool, detail: str) -> str:
    return f"criterion {label}: {'PASS' if ok else 'FAIL'} - {detail}"


@pytest.mark.parametrize("label,check", CRITERIA, ids=[c[0].split()[0] for c in CRITERIA])
def test_criterion(label, check, capsys):
    ok, detail = check()
    with capsys.disabled():
        print("\n" + _line(label, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = [(label, *check()) for label, check in CRITERIA]
    for label, ok, detail in results:
        print(_line(label, ok, detail))
    sys.exit(0 if all(ok for _, ok, _ in results) else 1)
