"""Brute-force zero-count search, the master inequality, and result files.

``Z_box(N, M)`` is the minimum of ``Z(f_A)`` over ``A`` of size ``N`` inside
``[0, M]``: an upper bound for the unrestricted minimum.  Subsets are visited
in colexicographic order, so the subsets of ``[0, M']`` for ``M' < M`` form a
prefix of the enumeration for ``M``.
"""

from __future__ import annotations

import json
import math
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, replace
from fractions import Fraction
from math import comb

from .errors import BoxTooSmall, NoStructureFound, PersistError
from .poly import CosinePoly, value_at_zero
from .smoothing import PeriodicPartition
from .zeros import count_zeros, zero_counts

# --------------------------------------------------------------------------
# subset enumeration


def colex_unrank(rank: int, k: int) -> tuple:
    """The ``rank``-th ``k``-subset of the naturals in colex order."""
    out = []
    for i in range(k, 0, -1):
        c = i - 1
        while comb(c + 1, i) <= rank:
            c += 1
        rank -= comb(c, i)
        out.append(c)
    return tuple(reversed(out))


def colex_rank(A) -> int:
    return sum(comb(c, i + 1) for i, c in enumerate(sorted(A)))


def colex_subsets(k: int, box: int, start: int = 0, stop: int | None = None):
    """``k``-subsets of ``[0, box]`` in colex order, ranks ``start <= r < stop``."""
    total = comb(box + 1, k)
    stop = total if stop is None else min(stop, total)
    if start >= stop:
        return
    A = list(colex_unrank(start, k))
    for _ in range(start, stop):
        yield tuple(A)
        # successor: bump the first element that can move, reset the ones below it
        i = 0
        while i < k - 1 and A[i] + 1 == A[i + 1]:
            i += 1
        A[i] += 1
        for j in range(i):
            A[j] = j


@dataclass(frozen=True)
class SearchRecord:
    A: tuple
    N: int
    Z: int
    d: int
    box: int
    timestamp: float | None = None
    seed: int | None = None

    def to_json(self) -> str:
        return json.dumps(asdict(self) | {"A": list(self.A)}, sort_keys=True)

    @classmethod
    def from_dict(cls, obj: dict) -> "SearchRecord":
        return cls(tuple(obj["A"]), int(obj["N"]), int(obj["Z"]), int(obj["d"]), int(obj["box"]),
                   obj.get("timestamp"), obj.get("seed"))


@dataclass(frozen=True)
class SearchResult:
    N: int
    box: int
    min_Z: int
    minimizers: tuple
    records: tuple

    def restrict(self, box: int) -> "SearchResult":
        """The result for a smaller box, read off the colex prefix."""
        if box > self.box:
            raise ValueError("can only restrict to a smaller box")
        recs = [SearchRecord(r.A, r.N, r.Z, r.d, box, r.timestamp, r.seed)
                for r in self.records[:comb(box + 1, self.N)]]
        return _summarize(self.N, box, recs)


def _summarize(N, box, recs) -> SearchResult:
    if not recs:
        raise BoxTooSmall(f"no subsets of size {N} in [0, {box}]")
    m = min(r.Z for r in recs)
    return SearchResult(N, box, m, tuple(r.A for r in recs if r.Z == m), tuple(recs))


def _evaluate_range(args):
    N, box, start, stop = args
    out = []
    for A in colex_subsets(N, box, start, stop):
        Z, d = zero_counts(CosinePoly.from_set(A))
        out.append((A, Z, d))
    return out


def brute_force_Z(N: int, box: int, jobs: int = 1, skip=None) -> SearchResult:
    """Exhaustive ``Z_box(N, box)``; output does not depend on ``jobs``.

    ``skip`` maps already evaluated subsets to their records (for resuming);
    those subsets are not recomputed.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    if N > box + 1:
        raise BoxTooSmall(f"cannot choose {N} frequencies from [0, {box}]")
    total = comb(box + 1, N)
    skip = skip or {}
    chunk = max(64, total // (8 * max(1, jobs)) + 1)
    tasks = [(N, box, s, min(total, s + chunk)) for s in range(0, total, chunk)]
    if jobs > 1 and len(tasks) > 1 and not skip:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            parts = list(ex.map(_evaluate_range, tasks))
    else:
        parts = []
        for N_, box_, s, e in tasks:
            part = []
            for A in colex_subsets(N_, box_, s, e):
                if A in skip:
                    r = skip[A]
                    part.append((A, r.Z, r.d))
                else:
                    Z, d = zero_counts(CosinePoly.from_set(A))
                    part.append((A, Z, d))
            parts.append(part)
    recs = [SearchRecord(A, N, Z, d, box) for part in parts for A, Z, d in part]
    return _summarize(N, box, recs)


def verify_records(records, fraction: float = 0.01, seed: int = 0) -> list:
    """Recount a random sample with the full zero counter; return the mismatching records."""
    rng = random.Random(seed)
    recs = list(records)
    bad = [r for r in recs if r.Z < r.d]
    if not recs:
        return bad
    k = max(1, int(round(fraction * len(recs))))
    for r in rng.sample(recs, min(k, len(recs))):
        rep = count_zeros(CosinePoly.from_set(r.A))
        if (rep.Z, rep.d) != (r.Z, r.d):
            bad.append(r)
    return bad


# --------------------------------------------------------------------------
# persistence


def persist(records, path) -> int:
    """Append records as JSON lines; return how many were written."""
    n = 0
    try:
        with open(path, "a", encoding="utf-8") as fh:
            for r in records:
                fh.write(r.to_json() + "\n")
                n += 1
    except OSError as exc:
        raise PersistError(f"cannot write records: {exc.strerror or exc}", path) from exc
    return n


def load(path, lenient: bool = False) -> list:
    """Read records written by :func:`persist`.

    A malformed line raises :class:`PersistError` naming the line, or is
    skipped when ``lenient`` is set.  A final line without a newline is a
    torn write and is always dropped.
    """
    out = []
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().split("\n")
    except OSError as exc:
        raise PersistError(f"cannot read records: {exc.strerror or exc}", path) from exc
    tail = lines.pop()  # "" after a trailing newline, else a torn record
    del tail
    for i, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            out.append(SearchRecord.from_dict(json.loads(line)))
        except (ValueError, KeyError, TypeError) as exc:
            if lenient:
                continue
            raise PersistError(f"malformed record ({exc})", path, i) from exc
    return out


def resume_search(N: int, box: int, path, jobs: int = 1, lenient: bool = False) -> SearchResult:
    """Run or continue a search whose records live in ``path``; only new subsets are appended."""
    have = {}
    if os.path.exists(path):
        for r in load(path, lenient=lenient):
            if r.N == N and r.box == box:
                have[r.A] = r
    result = brute_force_Z(N, box, jobs=jobs, skip=have) if have else brute_force_Z(N, box, jobs=jobs)
    stamp = time.time()
    new = [SearchRecord(r.A, r.N, r.Z, r.d, r.box, stamp) for r in result.records if r.A not in have]
    if have and os.path.getsize(path) > 0:
        with open(path, "rb") as fh:
            fh.seek(-1, os.SEEK_END)
            torn = fh.read(1) != b"\n"
        if torn:
            _truncate_torn_tail(path)
    persist(new, path)
    return result


def _truncate_torn_tail(path) -> None:
    with open(path, "rb+") as fh:
        data = fh.read()
        fh.truncate(data.rfind(b"\n") + 1)


# --------------------------------------------------------------------------
# master inequality


def _clamped_log(x: float) -> float:
    return math.log(x) if x > 1 else 0.0


@dataclass(frozen=True)
class InequalityReport:
    descriptor: str
    d: int
    M: int
    P: int
    K: int
    K_tilde: int | None
    log_g0: float
    lhs: float
    ratio: float
    theorem_bound: float | None
    structured: bool = True

    def holds(self, C: float) -> bool:
        return self.log_g0 <= C * self.lhs * (1 + 1e-12)

    def to_json(self) -> dict:
        return asdict(self)


def master_lhs(d: int, M, P: int, K: int) -> float:
    """``d M P^2 ln(K P)``, with ``ln 2`` in place of ``ln 1`` when ``K P = 1``."""
    return d * float(M) * P * P * (math.log(K * P) if K * P > 1 else math.log(2))


def theorem_quantity(g0, M) -> float | None:
    """``(ln ln |g(0)| / ln ln ln |g(0)|) / (1 + ln M)`` where the logs are positive."""
    x = abs(float(g0))
    if x <= math.e ** math.e:
        return None
    ll = math.log(math.log(x))
    return ll / math.log(ll) / (1 + math.log(float(M)))


def _descriptor(g: CosinePoly) -> str:
    return f"deg={g.degree},sum={value_at_zero(g)},nnz={len(g.support())}"


def verify_master(g: CosinePoly, partition: PeriodicPartition, d: int | None = None,
                  K_tilde: int | None = None) -> InequalityReport:
    partition.check(g.coeffs)
    if d is None:
        d = zero_counts(g)[1]
    M = max(abs(c) for c in g.coeffs)
    g0 = value_at_zero(g)
    lg = _clamped_log(abs(float(g0))) if g0 else 0.0
    lhs = master_lhs(d, M, partition.P, partition.K)
    ratio = lg / lhs if lhs > 0 else (0.0 if lg == 0 else math.inf)
    return InequalityReport(_descriptor(g), d, int(M), partition.P, partition.K, K_tilde, lg, lhs, ratio,
                            theorem_quantity(g0, M) if g0 else None)


def end_to_end(g: CosinePoly, d_prime_bound: int) -> InequalityReport:
    """Structure detection followed by the master inequality; unstructured input gives a flagged row."""
    from .structure import analyze_structure

    try:
        res = analyze_structure(g, d_prime_bound)
    except NoStructureFound:
        d = zero_counts(g)[1]
        M = max(abs(c) for c in g.coeffs)
        g0 = value_at_zero(g)
        return InequalityReport(_descriptor(g), d, int(M), 0, 0, None,
                                _clamped_log(abs(float(g0))) if g0 else 0.0, math.nan, math.nan,
                                theorem_quantity(g0, M) if g0 else None, structured=False)
    return verify_master(g, res.partition, d=res.d)


def fit_constant(reports) -> float:
    """Smallest ``C`` with ``ln|g(0)| <= C lhs`` across the structured reports."""
    return max((r.ratio for r in reports if r.structured and r.lhs > 0), default=0.0)


# --------------------------------------------------------------------------
# structured families


@dataclass(frozen=True)
class StructuredPoly:
    g: CosinePoly
    partition: PeriodicPartition  # the construction's partition
    S: tuple
    d: int | None = None  # odd-multiplicity roots in (0, pi), filled by structured_family

    @property
    def M(self):
        return max(abs(s) for s in self.S)


_ALPHABETS = ((0, 1), (-1, 1), (-1, 0, 1), (-2, -1, 0, 1, 2))


def random_structured(rng: random.Random, K_max: int = 5, P_max: int = 6, N_max: int = 400,
                      N_min: int = 20, alphabets=_ALPHABETS) -> StructuredPoly:
    """A random polynomial built from ``K`` periodic runs of a common period ``P``."""
    while True:
        S = rng.choice(alphabets)
        P = rng.randint(1, P_max)
        K = rng.randint(1, K_max)
        N = rng.randint(max(N_min, K), N_max)
        cuts = sorted(rng.sample(range(1, N + 1), K - 1))
        bounds = [0] + cuts + [N + 1]
        a = []
        intervals = []
        for i in range(K):
            pat = [rng.choice(S) for _ in range(P)]
            lo, hi = bounds[i], bounds[i + 1] - 1
            a += [pat[(n - lo) % P] for n in range(lo, hi + 1)]
            intervals.append((lo, hi))
        while a and a[-1] == 0:
            a.pop()
        if len(a) < 2:
            continue
        top = len(a) - 1
        clipped = [(lo, min(hi, top)) for lo, hi in intervals if lo <= top]
        coeffs = [Fraction(x) for x in a]
        part = PeriodicPartition.build(coeffs, clipped, P)
        part.check(coeffs)
        return StructuredPoly(CosinePoly(tuple(coeffs)), part, tuple(S))


def structured_family(count: int, seed: int = 0, require_sign_change: bool = True, **kw) -> list:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        sp = random_structured(rng, **kw)
        d = zero_counts(sp.g)[1]
        if require_sign_change and d == 0:
            continue
        out.append(replace(sp, d=d))
    return out
