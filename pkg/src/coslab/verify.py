"""Verification sweeps producing CSV rows.

Every row has the columns ``lemma, parameter, lhs, rhs, fitted_constant, pass``.
Fitted constants are the smallest values making the inequality hold over the
whole sweep; falsifiable checks (stability of fitted constants, certified
bounds with explicit constants, exact inequalities) carry their own rows.
"""

from __future__ import annotations

import csv
import math
import random
from dataclasses import dataclass

import numpy as np

from .harness import end_to_end, fit_constant, random_structured, structured_family, verify_master
from .l1 import sandwich_report
from .sinint import TAIL_CONSTANT, dirichlet_si_gap, tail_bound_check, window_sum_sup

FIELDS = ("lemma", "parameter", "lhs", "rhs", "fitted_constant", "pass")


@dataclass(frozen=True)
class Row:
    lemma: str
    parameter: str
    lhs: float
    rhs: float
    fitted_constant: float
    ok: bool

    def as_dict(self) -> dict:
        return {"lemma": self.lemma, "parameter": self.parameter, "lhs": repr(self.lhs), "rhs": repr(self.rhs),
                "fitted_constant": repr(self.fitted_constant), "pass": "true" if self.ok else "false"}


def write_csv(rows, path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.DictWriter(fh, fieldnames=FIELDS)
        w.writeheader()
        for r in rows:
            w.writerow(r.as_dict())


def all_pass(rows) -> bool:
    return all(r.ok for r in rows)


# --------------------------------------------------------------------------
# Dirichlet integral versus the sine integral


DIRICHLET_NS = tuple(8 * 2**k for k in range(8))


def dirichlet_constant(ns=DIRICHLET_NS, grid: int = 512) -> tuple[float, dict]:
    xs = np.linspace(0.0, 0.5, grid)
    sups = {n: float(np.max(np.abs(dirichlet_si_gap(n, xs)))) for n in ns}
    return max(n * s for n, s in sups.items()), sups


def lemma33_rows(ns=DIRICHLET_NS, grid: int = 512, drift_limit: float = 0.05) -> list[Row]:
    C, sups = dirichlet_constant(ns, grid)
    C2, _ = dirichlet_constant(ns, 2 * grid)
    rows = [Row("3.3", f"n={n}", s, C / n, C, s <= C / n * (1 + 1e-12)) for n, s in sups.items()]
    drift = abs(C2 - C) / C
    rows.append(Row("3.3", f"grid {grid}->{2 * grid} drift", drift, drift_limit, C2, drift < drift_limit))
    return rows


# --------------------------------------------------------------------------
# decay of the sine integral over an interval


def random_pairs(count: int, seed: int = 0, top: float = 1e6) -> list[tuple[float, float]]:
    """Pairs ``1 < y < y' <= top`` with ``y`` and the gap both log-uniform."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        y = math.exp(rng.uniform(0, math.log(top)))
        room = top - y
        if y <= 1 or room <= 1e-6:
            continue
        gap = math.exp(rng.uniform(math.log(1e-6), math.log(room)))
        y2 = min(top, y + gap)
        if y2 > y:
            out.append((y, y2))
    return out


def lemma34_rows(count: int = 10_000, seed: int = 0, tol: float = 1e-10, C: float = TAIL_CONSTANT) -> list[Row]:
    rows = []
    for y, y2 in random_pairs(count, seed):
        chk = tail_bound_check(y, y2, tol=tol, C=C)
        rows.append(Row("3.4", f"y={y!r};y'={y2!r}", chk.lhs, chk.rhs, C, not chk.violated))
    return rows


# --------------------------------------------------------------------------
# logarithmic growth of window sums


WINDOW_EXPONENTS = tuple(range(4, 13))


def frequency_family(seed: int, exponents=WINDOW_EXPONENTS, spread: int = 16) -> dict:
    rng = np.random.default_rng(seed)
    out = {}
    for e in exponents:
        K = 2**e
        out[K] = np.sort(rng.choice(np.arange(1, spread * K + 1), K, replace=False))
    return out


def window_constant(family: dict, grid: int = 4096) -> tuple[float, dict]:
    xs = np.linspace(0.0, math.pi, grid)
    sups = {K: window_sum_sup(ns, xs)[0] for K, ns in family.items()}
    return max(s / (1 + math.log(K)) for K, s in sups.items()), sups


def lemma35_rows(seeds=(0, 1, 2), grid: int = 4096, drift_limit: float = 0.10) -> list[Row]:
    rows = []
    constants = []
    for seed in seeds:
        C, sups = window_constant(frequency_family(seed), grid)
        constants.append(C)
        rows += [Row("3.5", f"family={seed};K={K}", s, C * (1 + math.log(K)), C, True) for K, s in sups.items()]
    C = max(constants)
    rows = [Row(r.lemma, r.parameter, r.lhs, C * (1 + math.log(int(r.parameter.split("K=")[1]))), C,
                r.lhs <= C * (1 + math.log(int(r.parameter.split("K=")[1]))) * (1 + 1e-12)) for r in rows]
    drift = (max(constants) - min(constants)) / min(constants)
    rows.append(Row("3.5", "family drift", drift, drift_limit, C, drift < drift_limit))
    return rows


# --------------------------------------------------------------------------
# L1 sandwich and master inequality


def default_family(count: int = 100, seed: int = 0):
    return structured_family(count, seed=seed)


def recovery_family(count: int = 50, seed: int = 7, N_min: int = 100) -> list:
    """Polynomials with known ``P <= 6``, ``K <= 3`` for structure recovery."""
    rng = random.Random(seed)
    return [random_structured(rng, K_max=3, P_max=6, N_min=N_min) for _ in range(count)]


def l1_rows(family) -> list[Row]:
    reps = [sandwich_report(sp.g, sp.partition, d=sp.d) for sp in family]
    C_low = max(r.ratio_low for r in reps)
    C_up = max(r.ratio_up for r in reps)
    rows = []
    for i, r in enumerate(reps):
        rows.append(Row("l1-lower", f"member={i}", r.lower_lemma32, C_low * r.norm, C_low,
                        r.lower_lemma32 <= C_low * r.norm * (1 + 1e-12)))
        rows.append(Row("l1-upper", f"member={i}", r.norm, C_up * r.upper_eqL1, C_up,
                        r.norm <= C_up * r.upper_eqL1 * (1 + 1e-12)))
        rows.append(Row("l1-blocks", f"member={i}", float(r.block_length_ok), 1.0, 0.0, r.block_length_ok))
    rows.append(Row("l1-lower", "finite constant", C_low, math.inf, C_low, math.isfinite(C_low)))
    rows.append(Row("l1-upper", "finite constant", C_up, math.inf, C_up, math.isfinite(C_up)))
    return rows


def master_reports(family, recovered=(), d_prime_bound: int = 16) -> list:
    """Reports on ``family`` with its known partitions, then on ``recovered`` through structure detection."""
    reps = [verify_master(sp.g, sp.partition, d=sp.d) for sp in family]
    return reps + [end_to_end(sp.g, d_prime_bound) for sp in recovered]


def master_rows(reports) -> list[Row]:
    C = fit_constant(reports)
    rows = [Row("master", f"member={i};P={r.P};K={r.K};d={r.d}", r.log_g0, C * r.lhs, C, r.holds(C))
            if r.structured else Row("master", f"member={i};unstructured;d={r.d}", r.log_g0, math.nan, C, True)
            for i, r in enumerate(reports)]
    rows.append(Row("master", "finite constant", C, math.inf, C, math.isfinite(C)))
    return rows
