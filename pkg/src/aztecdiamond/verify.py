"""Verification suites behind ``aztecdiamond verify``."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable

from . import aztec, hankel, lgv
from .errors import SizeLimitError
from .schroeder import large_sequence, small_sequence

SUITES = ("hankel", "tilings", "bijections", "involution")
INVOLUTION_SAMPLES = 1000


@dataclass
class Check:
    name: str
    params: dict
    expected: int | None = None
    actual: int | None = None
    passed: bool = False
    skipped: str | None = None
    elapsed: float = 0.0

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "params": self.params,
            "expected": None if self.expected is None else str(self.expected),
            "actual": None if self.actual is None else str(self.actual),
            "pass": self.passed,
            "skipped": self.skipped,
            "elapsed_s": round(self.elapsed, 6),
        }


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def executed(self) -> list[Check]:
        return [c for c in self.checks if c.skipped is None]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.executed)

    def to_json(self) -> dict:
        ex = self.executed
        return {
            "pass": self.passed,
            "executed": len(ex),
            "passed": sum(c.passed for c in ex),
            "failed": sum(not c.passed for c in ex),
            "skipped": len(self.checks) - len(ex),
            "checks": [c.to_json() for c in self.checks],
        }

    def table(self) -> str:
        rows = [("status", "check", "params", "expected", "actual", "ms")]
        for c in self.checks:
            status = "SKIP" if c.skipped else ("PASS" if c.passed else "FAIL")
            params = ",".join(f"{k}={v}" for k, v in c.params.items())
            if c.skipped:
                rows.append((status, c.name, params, "-", c.skipped, "-"))
            else:
                rows.append((status, c.name, params, str(c.expected), str(c.actual),
                             f"{c.elapsed * 1000:.1f}"))
        widths = [max(len(r[k]) for r in rows) for k in range(len(rows[0]))]
        lines = ["  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() for r in rows]
        s = self.to_json()
        lines.append(
            f"{s['executed']} checks executed: {s['passed']} passed, {s['failed']} failed, "
            f"{s['skipped']} skipped"
        )
        return "\n".join(lines)


class _Runner:
    def __init__(self, report):
        self.report = report

    def check(self, name, params, fn: Callable[[], tuple[int, int]]):
        c = Check(name, params)
        t0 = time.perf_counter()
        try:
            c.expected, c.actual = fn()
            c.passed = c.expected == c.actual
        except SizeLimitError as exc:
            c.skipped = str(exc)
        c.elapsed = time.perf_counter() - t0
        self.report.checks.append(c)

    def skip(self, name, params, reason):
        self.report.checks.append(Check(name, params, skipped=reason))


def _hankel_suite(run, max_n, **_):
    for n in range(1, max_n + 1):
        for kind in hankel.KINDS:
            run.check(
                f"det {kind}", {"n": n},
                lambda: (hankel.closed_form(kind, n), hankel.determinant(hankel.hankel_matrix(kind, n))),
            )
        run.check(
            "det H1 = 2^n det G1", {"n": n},
            lambda: (hankel.determinant(hankel.hankel_matrix("H1", n)),
                     2 ** n * hankel.determinant(hankel.hankel_matrix("G1", n))),
        )
    length = 2 * max_n
    d0 = [hankel.closed_form("H0", k) for k in range(1, max_n + 1)]
    d1 = [hankel.closed_form("H1", k) for k in range(1, max_n + 1)]
    g = [hankel.closed_form("G0", k) for k in range(1, max_n + 1)]
    r, s = large_sequence(length), small_sequence(length)
    run.check("reconstruct large", {"terms": length},
              lambda: (length, sum(a == b for a, b in zip(hankel.reconstruct_sequence(d0, d1, length), r))))
    run.check("reconstruct small", {"terms": length},
              lambda: (length, sum(a == b for a, b in zip(hankel.reconstruct_sequence(g, g, length), s))))


def _tilings_suite(run, max_n, max_enum_n, **_):
    for n in range(1, max_n + 1):
        run.check("tilings by determinant", {"n": n},
                  lambda: (aztec.count_tilings(n, "formula"), aztec.count_tilings(n, "determinant")))
        if n <= max_enum_n:
            run.check("tilings by enumeration", {"n": n},
                      lambda: (aztec.count_tilings(n, "formula"),
                               aztec.count_tilings(n, "enumeration", max_n=max_enum_n)))
        else:
            run.skip("tilings by enumeration", {"n": n},
                     f"n exceeds enumeration cutoff {max_enum_n} (--max-enum-n)")
        if n >= 2:
            run.check("a_n = 2^n a_(n-1)", {"n": n},
                      lambda: (2 ** n * aztec.count_tilings(n - 1, "determinant"),
                               aztec.count_tilings(n, "determinant")))
        if n >= 3:
            a = [aztec.count_tilings(k, "determinant") for k in (n - 2, n - 1, n)]
            run.check("a_n a_(n-2) = 2 a_(n-1)^2", {"n": n}, lambda: (2 * a[1] ** 2, a[2] * a[0]))


def _bijections_suite(run, max_n, max_enum_n, family_cutoff, **_):
    psi_cap = min(4, max_enum_n)
    for n in range(1, max_n + 1):
        if n > psi_cap:
            run.skip("psi round trip", {"n": n}, f"n exceeds cutoff {psi_cap}")
            continue

        def psi(n=n):
            ts = aztec.enumerate_tilings(n, max_n=max_enum_n)
            fams = [aztec.tiling_to_paths(t) for t in ts]
            ok = sum(aztec.paths_to_tiling(f) == t and f.nonintersecting for f, t in zip(fams, ts))
            return len(ts), ok if len(set(fams)) == len(ts) else -1

        run.check("psi round trip", {"n": n}, psi)
    for n in range(2, max_n + 1):
        cap = family_cutoff.get("omega", lgv.DEFAULT_FAMILY_CUTOFF["omega"])
        if n > cap:
            run.skip("phi: |Pi_(n-1)| = |Omega_n|", {"n": n}, f"n exceeds family cutoff {cap}")
        else:
            run.check("phi: |Pi_(n-1)| = |Omega_n|", {"n": n}, lambda: _phi_check(n, cap))
        cap = family_cutoff.get("pistar", lgv.DEFAULT_FAMILY_CUTOFF["pistar"])
        if n > cap:
            run.skip("rho: |Pi_(n-1)| = |Pi*_n|", {"n": n}, f"n exceeds family cutoff {cap}")
        else:
            run.check("rho: |Pi_(n-1)| = |Pi*_n|", {"n": n}, lambda: _rho_check(n, cap))


def _domain(m, cutoff):
    if m <= cutoff:
        return lgv.enumerate_family(lgv.AnchorScheme("pi", m), max_n=cutoff)
    return aztec.pi_families_via_tilings(m)


def _phi_check(n, cap):
    dom = _domain(n - 1, cap)
    image = {lgv.phi(f) for f in dom}
    target = set(lgv.enumerate_family(lgv.AnchorScheme("omega", n), max_n=cap))
    inverse_ok = all(lgv.phi_inverse(lgv.phi(f)) == f for f in dom)
    return len(target), len(image) if image == target and inverse_ok else -1


def _rho_check(n, cap):
    dom = _domain(n - 1, lgv.DEFAULT_FAMILY_CUTOFF["pi"])
    image = {lgv.rho(f) for f in dom}
    target = set(lgv.enumerate_family(lgv.AnchorScheme("pistar", n), max_n=cap))
    inverse_ok = all(lgv.rho_inverse(lgv.rho(f)) == f for f in dom)
    return len(target), len(image) if image == target and inverse_ok else -1


def involution_defects(c: lgv.SignedConfiguration) -> list[str]:
    """Ways in which ``tail_swap`` misbehaves at ``c``; empty when all is well."""
    out = []
    d = lgv.tail_swap(c)
    if lgv.tail_swap(d) != c:
        out.append("not an involution")
    fixed = d == c
    if fixed != (c.sigma.is_identity and c.nonintersecting):
        out.append("fixed-point set mismatch")
    if not fixed:
        if d.sign != -c.sign:
            out.append("sign not reversed")
        if lgv.switching_point(d) != lgv.switching_point(c):
            out.append("switching point moved")
    return out


def _involution_suite(run, max_n, seed, signed_cutoff, **_):
    for n in range(1, max_n + 1):
        if n > signed_cutoff:
            run.skip("signed count = det H1", {"n": n}, f"n exceeds signed-count cutoff {signed_cutoff}")
            continue
        run.check("signed count = det H1", {"n": n},
                  lambda: (hankel.determinant(hankel.hankel_matrix("H1", n)),
                           lgv.signed_count("pi", n, max_n=signed_cutoff)))
        run.check("signed count = det G1", {"n": n},
                  lambda: (hankel.determinant(hankel.hankel_matrix("G1", n)),
                           lgv.signed_count("omega", n, max_n=signed_cutoff)))
        if n <= 2:
            def exhaustive(n=n):
                confs = list(lgv.iter_configurations(n))
                return len(confs), sum(not involution_defects(c) for c in confs)
            run.check("tail swap exhaustive", {"n": n}, exhaustive)
        else:
            def sampled(n=n):
                rng = random.Random(seed)
                confs = [lgv.random_configuration(n, rng) for _ in range(INVOLUTION_SAMPLES)]
                return len(confs), sum(not involution_defects(c) for c in confs)
            run.check("tail swap sampled", {"n": n, "seed": seed}, sampled)


_SUITE_FUNCS = {
    "hankel": _hankel_suite,
    "tilings": _tilings_suite,
    "bijections": _bijections_suite,
    "involution": _involution_suite,
}


def run_verification(max_n: int, suite: str = "all", seed: int = 0,
                     max_enum_n: int | None = None) -> VerificationReport:
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    report = VerificationReport()
    run = _Runner(report)
    opts = dict(
        max_n=max_n,
        seed=seed,
        max_enum_n=aztec.DEFAULT_TILING_CUTOFF if max_enum_n is None else max_enum_n,
        family_cutoff={} if max_enum_n is None else {k: max_enum_n for k in lgv.SCHEMES},
        signed_cutoff=lgv.SIGNED_COUNT_CUTOFF if max_enum_n is None else max_enum_n,
    )
    for name in SUITES if suite == "all" else (suite,):
        _SUITE_FUNCS[name](run, **opts)
    return report
