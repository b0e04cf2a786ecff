"""Height-bounded brute-force oracles.

Scans enumerate exact rationals in the documented order (ascending height,
then numerator, then denominator), decide exact periods through the
dynatomic route (integer-scaled period polynomials, one exact division,
bounded rational-root extraction, exact-period filter), and produce reports
that are pure functions of their inputs.  Workers partition the enumeration
into contiguous chunks and merge in chunk order, so any worker count yields
byte-identical canonical output; ``elapsed`` is carried on the report object
but never serialized.
"""

from __future__ import annotations

import csv
import io
import math
import time
from dataclasses import dataclass
from fractions import Fraction
from multiprocessing import get_context
from typing import Dict, FrozenSet, List, Sequence, Tuple

import numpy as np

from . import _intpoly
from .core import (
    count_rationals,
    enumerate_rationals,
    format_rational,
    height,
    is_rational_square,
    rational_sqrt,
)
from .dynamics import KBMap, QuadraticMap, exact_period
from .dynatomic import dynatomic_int
from .errors import DomainError, parameter_excluded

__all__ = [
    "ScanReport",
    "scan_quadratic_periods",
    "scan_kb_periods",
    "scan_intersection_bound",
    "QuarticCurve",
    "QuarticReport",
    "quartic_rational_points",
    "DEFAULT_BOUNDS",
]

DEFAULT_BOUNDS = {
    "height_c": 20,
    "height_k": 10,
    "height_b": 10,
    "height_point": 100,
    "height_quartic": 10000,
}

_ALLOWED_PERIODS = frozenset(range(1, 9))


def _rat_key(r: Fraction):
    return (height(r), r.numerator, r.denominator)


@dataclass(frozen=True)
class ScanReport:
    """Deterministic scan outcome.

    ``hits`` are canonical dicts in enumeration order.  ``elapsed`` is
    wall-clock seconds and deliberately excluded from ``canonical_dict`` so
    repeated runs (any worker count) serialize identically.
    """

    scan_kind: str
    parameter_box: Dict[str, int]
    periods: Tuple[int, ...]
    hits: Tuple[dict, ...]
    scanned_count: int
    elapsed: float

    def canonical_dict(self) -> dict:
        out = {
            "scan_kind": self.scan_kind,
            "parameter_box": dict(self.parameter_box),
            "hits": [dict(h) for h in self.hits],
            "scanned_count": self.scanned_count,
        }
        if self.periods:
            out["periods"] = list(self.periods)
        return out

    def csv_lines(self) -> List[str]:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        if self.scan_kind == "intersection":
            writer.writerow(["scan_kind", "map1", "map2", "point", "size"])
            for h in self.hits:
                writer.writerow(
                    [self.scan_kind, h["map1"], h["map2"], h["point"], h["size"]]
                )
        else:
            writer.writerow(["scan_kind", "map", "point", "period"])
            for h in self.hits:
                writer.writerow([self.scan_kind, h["map"], h["point"], h["period"]])
        return out.getvalue().splitlines()


def _check_periods(periods) -> Tuple[int, ...]:
    ps = tuple(sorted(set(int(n) for n in periods)))
    if not ps:
        raise parameter_excluded("periods", "empty")
    for n in ps:
        if n not in _ALLOWED_PERIODS:
            raise parameter_excluded("period", n)
    return ps


def _exact_period_points(m, n: int, point_bound: int) -> List[Fraction]:
    """Height-bounded points of exact period n, sorted in enumeration order."""
    roots = _intpoly.rational_roots_int(dynatomic_int(m, n), point_bound)
    pts = [
        r
        for r in roots
        if not (isinstance(m, KBMap) and r == 0) and exact_period(m, r) == n
    ]
    pts.sort(key=_rat_key)
    return pts


# --- workers (top level so they pickle) -----------------------------------

def _quad_chunk(args) -> List[dict]:
    cs, periods, point_bound = args
    hits = []
    for c in cs:
        m = QuadraticMap(c)
        for n in periods:
            for p in _exact_period_points(m, n, point_bound):
                hits.append(
                    {"map": m.describe(), "point": format_rational(p), "period": n}
                )
    return hits

def _kb_chunk(args) -> List[dict]:
    ks, height_b, periods, point_bound = args
    bs = [b for b in enumerate_rationals(height_b) if b != 0]
    hits = []
    for k in ks:
        for b in bs:
            m = KBMap(k, b)
            for n in periods:
                for p in _exact_period_points(m, n, point_bound):
                    hits.append(
                        {"map": m.describe(), "point": format_rational(p), "period": n}
                    )
    return hits

def _affine_image(m, z: Fraction) -> Fraction:
    """Image of a finite point known to stay finite (cycle walking)."""
    if isinstance(m, QuadraticMap):
        return z * z + m.c
    if z == 0:
        raise DomainError("parameter excluded: z=0")
    return m.k * z + m.b / z


def _cycles_chunk(args) -> List[Tuple[int, List[Tuple[Fraction, ...]]]]:
    """Per map index: its rational cycles (each as a tuple in orbit order)."""
    items, point_bound = args
    out = []
    for idx, kind, params in items:
        if kind == "quad":
            m = QuadraticMap(params[0])
            periods = (1, 2, 3)
        else:
            m = KBMap(params[0], params[1])
            periods = (1, 2, 4)
        cycles = []
        for n in periods:
            pts = set(_exact_period_points(m, n, point_bound))
            while pts:
                start = min(pts, key=_rat_key)
                cyc = [start]
                cur = start
                for _ in range(n - 1):
                    cur = _affine_image(m, cur)
                    cyc.append(cur)
                pts.difference_update(cyc)
                cycles.append(tuple(cyc))
        out.append((idx, cycles))
    return out


def _run_chunks(worker, chunks, workers: int):
    if workers <= 1 or len(chunks) <= 1:
        return [worker(ch) for ch in chunks]
    try:
        with get_context("fork").Pool(min(workers, len(chunks))) as pool:
            return pool.map(worker, chunks)
    except (OSError, ImportError):
        return [worker(ch) for ch in chunks]


def _split(seq: Sequence, parts: int) -> List[Sequence]:
    parts = max(1, min(parts, len(seq)))
    size, extra = divmod(len(seq), parts)
    out = []
    at = 0
    for i in range(parts):
        step = size + (1 if i < extra else 0)
        out.append(seq[at : at + step])
        at += step
    return [s for s in out if s]


def scan_quadratic_periods(
    height_c: int,
    height_point: int,
    periods,
    workers: int = 1,
) -> ScanReport:
    """Search z^2 + c, height(c) <= height_c, for rational points of the
    given exact periods with height <= height_point."""
    periods = _check_periods(periods)
    t0 = time.perf_counter()
    cs = list(enumerate_rationals(height_c))
    chunks = [(chunk, periods, height_point) for chunk in _split(cs, workers * 8)]
    hits: List[dict] = []
    for part in _run_chunks(_quad_chunk, chunks, workers):
        hits.extend(part)
    return ScanReport(
        "quad",
        {"height_c": height_c, "height_point": height_point},
        periods,
        tuple(hits),
        len(cs),
        time.perf_counter() - t0,
    )


def scan_kb_periods(
    height_k: int,
    height_b: int,
    height_point: int,
    periods,
    workers: int = 1,
) -> ScanReport:
    """Search kz + b/z over the (k, b) height box for rational points of the
    given exact periods with height <= height_point."""
    periods = _check_periods(periods)
    t0 = time.perf_counter()
    ks = [k for k in enumerate_rationals(height_k) if k != 0]
    n_b = count_rationals(height_b) - 1
    chunks = [
        (chunk, height_b, periods, height_point)
        for chunk in _split(ks, workers * 8)
    ]
    hits: List[dict] = []
    for part in _run_chunks(_kb_chunk, chunks, workers):
        hits.extend(part)
    return ScanReport(
        "kb",
        {"height_k": height_k, "height_b": height_b, "height_point": height_point},
        periods,
        tuple(hits),
        len(ks) * n_b,
        time.perf_counter() - t0,
    )


def scan_intersection_bound(
    bound: int,
    height_point: int,
    workers: int = 1,
) -> ScanReport:
    """Examine every pair of in-box maps sharing a rational periodic point
    and record the pairs whose orbit intersection through a shared point has
    size >= 3.

    Quadratic maps contribute cycles of length 1-3, KB maps of length 1, 2,
    4.  A hit carries both map descriptors, the shared point, and the
    intersection; identical-map pairs are skipped.
    """
    t0 = time.perf_counter()
    maps: List[Tuple[int, str, tuple]] = []
    idx = 0
    for c in enumerate_rationals(bound):
        maps.append((idx, "quad", (c,)))
        idx += 1
    nonzero = [r for r in enumerate_rationals(bound) if r != 0]
    for k in nonzero:
        for b in nonzero:
            maps.append((idx, "kb", (k, b)))
            idx += 1

    chunks = [(chunk, height_point) for chunk in _split(maps, workers * 8)]
    cycles_by_map: Dict[int, List[Tuple[Fraction, ...]]] = {}
    for part in _run_chunks(_cycles_chunk, chunks, workers):
        for i, cycles in part:
            if cycles:
                cycles_by_map[i] = cycles

    descriptors = {}
    for i, kind, params in maps:
        if i in cycles_by_map:
            descriptors[i] = (
                QuadraticMap(*params) if kind == "quad" else KBMap(*params)
            ).describe()

    point_index: Dict[Fraction, List[Tuple[int, FrozenSet[Fraction]]]] = {}
    for i in sorted(cycles_by_map):
        for cyc in cycles_by_map[i]:
            cyc_set = frozenset(cyc)
            for p in cyc:
                point_index.setdefault(p, []).append((i, cyc_set))

    hits: List[dict] = []
    pairs_seen = set()
    reported = set()
    for p in sorted(point_index, key=_rat_key):
        entries = point_index[p]
        for a in range(len(entries)):
            for b in range(a + 1, len(entries)):
                i, set_i = entries[a]
                j, set_j = entries[b]
                pairs_seen.add((i, j))
                common = set_i & set_j
                if len(common) >= 3 and (i, j, common) not in reported:
                    reported.add((i, j, common))
                    hits.append(
                        {
                            "map1": descriptors[i],
                            "map2": descriptors[j],
                            "point": format_rational(p),
                            "size": len(common),
                            "common": sorted(format_rational(x) for x in common),
                        }
                    )
    return ScanReport(
        "intersection",
        {"height": bound, "height_point": height_point},
        (),
        tuple(hits),
        len(pairs_seen),
        time.perf_counter() - t0,
    )


# ---------------------------------------------------------------------------
# quartic curves y^2 = a4 t^4 + ... + a0

@dataclass(frozen=True)
class QuarticCurve:
    a4: Fraction
    a3: Fraction
    a2: Fraction
    a1: Fraction
    a0: Fraction

    def __post_init__(self):
        if self.a4 == 0:
            raise parameter_excluded("a4", 0)

    def coefficients(self) -> Tuple[Fraction, ...]:
        return (self.a4, self.a3, self.a2, self.a1, self.a0)

    def integer_form(self) -> Tuple[int, Tuple[int, int, int, int, int]]:
        """(L, A) with A = (A4..A0) integers: the curve value at u/v equals
        (A4 u^4 + A3 u^3 v + ... + A0 v^4) / (L v^4)."""
        L = 1
        for a in self.coefficients():
            L = L * a.denominator // math.gcd(L, a.denominator)
        return L, tuple(int(a * L) for a in self.coefficients())


@dataclass(frozen=True)
class QuarticReport:
    curve: QuarticCurve
    bound: int
    affine: Tuple[Tuple[Fraction, Fraction], ...]
    infinite_points: bool
    scanned_count: int
    elapsed: float

    def canonical_dict(self) -> dict:
        return {
            "curve": [format_rational(a) for a in self.curve.coefficients()],
            "bound": self.bound,
            "affine": [
                [format_rational(t), format_rational(y)] for t, y in self.affine
            ],
            "infinite_points": self.infinite_points,
            "scanned_count": self.scanned_count,
        }


def _quartic_chunk_numpy(args) -> List[Tuple[int, int]]:
    vlo, vhi, bound, L, A = args
    A4, A3, A2, A1, A0 = A
    us = np.arange(-bound, bound + 1, dtype=np.int64)
    found = []
    for v in range(vlo, vhi):
        v2, v3, v4 = v * v, v**3, v**4
        N = (((A4 * us + A3 * v) * us + A2 * v2) * us + A1 * v3) * us + A0 * v4
        N = N * L
        nonneg = N >= 0
        Nn = np.where(nonneg, N, 0)
        r = np.rint(np.sqrt(Nn.astype(np.float64))).astype(np.int64)
        ok = nonneg & (
            (r * r == Nn) | ((r - 1) * (r - 1) == Nn) | ((r + 1) * (r + 1) == Nn)
        )
        for i in np.nonzero(ok)[0]:
            found.append((int(us[i]), v))
    return found


def _quartic_chunk_python(args) -> List[Tuple[int, int]]:
    vlo, vhi, bound, L, A = args
    A4, A3, A2, A1, A0 = A
    found = []
    for v in range(vlo, vhi):
        v2, v3, v4 = v * v, v**3, v**4
        for u in range(-bound, bound + 1):
            N = ((((A4 * u + A3 * v) * u + A2 * v2) * u + A1 * v3) * u + A0 * v4) * L
            if N >= 0:
                r = math.isqrt(N)
                if r * r == N:
                    found.append((u, v))
    return found


def quartic_rational_points(
    curve: QuarticCurve, bound: int, workers: int = 1
) -> QuarticReport:
    """All affine rational points (t, y) with height(t) <= bound, plus the
    infinity flag (two rational points at infinity iff a4 is a square).

    For t = u/v the curve value clears to an integer that must be a perfect
    square; candidates from a vectorized pass are confirmed with exact
    integer arithmetic.
    """
    if bound < 1:
        raise parameter_excluded("bound", bound)
    L, A = curve.integer_form()
    # int64 fast path only when no intermediate can overflow
    limit = (sum(abs(a) for a in A) + 1) * (bound + 1) ** 4 * L
    chunk_fn = _quartic_chunk_numpy if limit < 2**62 else _quartic_chunk_python
    t0 = time.perf_counter()
    vs = list(range(1, bound + 1))
    parts = _split(vs, max(workers * 4, 1))
    chunks = [(p[0], p[-1] + 1, bound, L, A) for p in parts]
    raw: List[Tuple[int, int]] = []
    for part in _run_chunks(chunk_fn, chunks, workers):
        raw.extend(part)

    pts = {}
    for u, v in raw:
        t = Fraction(u, v)
        if height(t) > bound or t in pts:
            continue
        val = (
            curve.a4 * t**4
            + curve.a3 * t**3
            + curve.a2 * t**2
            + curve.a1 * t
            + curve.a0
        )
        y = rational_sqrt(val)
        if y is not None:
            pts[t] = y
    affine: List[Tuple[Fraction, Fraction]] = []
    for t in sorted(pts, key=_rat_key):
        y = pts[t]
        if y == 0:
            affine.append((t, y))
        else:
            affine.append((t, -y))
            affine.append((t, y))
    return QuarticReport(
        curve,
        bound,
        tuple(affine),
        is_rational_square(curve.a4),
        count_rationals(bound),
        time.perf_counter() - t0,
    )
