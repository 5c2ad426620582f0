"""Exhaustive verification suites with structured, replayable reports."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import constructions
from .asyncdyn import (
    bfs_distances,
    find_cycle,
    fixed_points,
    geodesic_basin,
    unstable_masks,
)
from .embedmono import embed, mirror_identity_check
from .netcore import (
    BooleanNetwork,
    Configuration,
    SizeError,
    cycle_sign_summary,
    has_negative_loop,
    interaction_graph,
    is_acyclic,
    monotonicity_violation,
    popcounts,
)

SUITES = ("robert", "monotone-reach", "embedding", "fixed-point-counts")

ROBERT_CAP = 12
MONOTONE_CAP = 12
EMBEDDING_CAP = 5
FIXED_POINT_COUNT_CAP = 8


@dataclass
class CheckRecord:
    id: str
    passed: bool
    counterexample: dict | None = None
    detail: dict | None = None
    millis: float = 0.0

    def to_dict(self, timing: bool = True) -> dict:
        d = {"id": self.id, "pass": self.passed}
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        if self.detail is not None:
            d["detail"] = self.detail
        d["millis"] = round(self.millis, 3) if timing else 0
        return d


@dataclass
class VerificationReport:
    suite: str
    instance: dict
    checks: list[CheckRecord] = field(default_factory=list)
    skipped: bool = False
    reason: str | None = None
    millis: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckRecord]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self, timing: bool = True) -> dict:
        d = {
            "suite": self.suite,
            "instance": self.instance,
            "checks": [c.to_dict(timing) for c in self.checks],
            "millis": round(self.millis, 3) if timing else 0,
        }
        if self.skipped:
            d["skipped"] = True
            d["reason"] = self.reason
        return d


class _Suite:
    def __init__(self, name: str, instance: dict | None, f: BooleanNetwork):
        inst = {"n": f.n}
        inst.update(instance or {})
        self.report = VerificationReport(name, inst)
        self._t0 = time.perf_counter()

    def check(self, check_id: str, fn: Callable[[], tuple]) -> CheckRecord:
        t = time.perf_counter()
        out = fn()
        passed, cex = out[0], out[1]
        detail = out[2] if len(out) > 2 else None
        rec = CheckRecord(check_id, bool(passed), None if passed else cex, detail)
        rec.millis = (time.perf_counter() - t) * 1000
        self.report.checks.append(rec)
        return rec

    def skip(self, reason: str) -> VerificationReport:
        self.report.skipped = True
        self.report.reason = reason
        return self.done()

    def done(self) -> VerificationReport:
        self.report.millis = (time.perf_counter() - self._t0) * 1000
        return self.report


def _lit(n: int, bits: int) -> str:
    return Configuration(n, int(bits)).literal


def _guard(f: BooleanNetwork, cap: int, force: bool) -> None:
    if f.n > cap and not force:
        raise SizeError(f"n={f.n} exceeds the suite cap of {cap}")


def check_robert(f: BooleanNetwork, instance: dict | None = None, force: bool = False) -> VerificationReport:
    """Acyclic interaction graph: unique fixed point, acyclic dynamics, geodesics to it."""
    _guard(f, ROBERT_CAP, force)
    s = _Suite("robert", instance, f)
    if not is_acyclic(interaction_graph(f)):
        return s.skip("interaction graph has a cycle")
    fps = fixed_points(f)
    s.check("unique-fixed-point", lambda: (
        len(fps) == 1, {"fixed_points": [y.literal for y in fps]}))
    cyc = find_cycle(f)
    s.check("async-graph-acyclic", lambda: (
        cyc is None, {"cycle": [_lit(f.n, b) for b in cyc or []]}))
    if len(fps) == 1:
        y = fps[0]
        missing = np.flatnonzero(~geodesic_basin(f, y))
        s.check("geodesic-to-fixed-point", lambda: (
            missing.size == 0,
            {"x": _lit(f.n, missing[0]) if missing.size else None, "fixed_point": y.literal}))
    else:
        s.check("geodesic-to-fixed-point", lambda: (False, {"reason": "no unique fixed point"}))
    return s.done()


def check_monotone_reach(f: BooleanNetwork, instance: dict | None = None, force: bool = False) -> VerificationReport:
    """Monotone network: every configuration has a geodesic to some fixed point."""
    _guard(f, MONOTONE_CAP, force)
    s = _Suite("monotone-reach", instance, f)
    if monotonicity_violation(f) is not None:
        return s.skip("network is not monotone")

    def reach():
        covered = np.zeros(1 << f.n, dtype=bool)
        for y in fixed_points(f):
            covered |= geodesic_basin(f, y)
            if covered.all():
                break
        missing = np.flatnonzero(~covered)
        return missing.size == 0, {"x": _lit(f.n, missing[0]) if missing.size else None}

    s.check("geodesic-to-some-fixed-point", reach)
    return s.done()


def check_fixed_point_counts(f: BooleanNetwork, instance: dict | None = None, force: bool = False) -> VerificationReport:
    """No positive cycle: at most one fixed point. No negative cycle: at least one."""
    _guard(f, FIXED_POINT_COUNT_CAP, force)
    s = _Suite("fixed-point-counts", instance, f)
    has_pos, has_neg = cycle_sign_summary(interaction_graph(f))
    if has_pos and has_neg:
        return s.skip("interaction graph has both positive and negative cycles")
    fps = [y.literal for y in fixed_points(f)]
    if not has_pos:
        s.check("at-most-one-fixed-point", lambda: (len(fps) <= 1, {"fixed_points": fps}))
    if not has_neg:
        s.check("at-least-one-fixed-point", lambda: (len(fps) >= 1, {"fixed_points": fps}))
    return s.done()


class _Host:
    """Integer-level view of ``f`` and its embedding shared by the embedding checks."""

    def __init__(self, f: BooleanNetwork):
        self.f = f
        self.n = n = f.n
        self.fp = embed(f)
        self.mask = (1 << n) - 1
        self.delta = unstable_masks(f)
        self.hdelta = unstable_masks(self.fp)
        self.omega = np.zeros(1 << (2 * n), dtype=bool)
        self.omega[[self.mirror(x) for x in range(1 << n)]] = True

    def mirror(self, x: int) -> int:
        return x | ((x ^ self.mask) << self.n)

    def pair(self, x: int, y: int) -> int:
        return x | (y << self.n)

    def lit(self, z: int) -> str:
        return _lit(2 * self.n, z)

    def hsucc(self, z: int) -> list[int]:
        out, d = [], self.hdelta[z]
        while d:
            low = d & -d
            out.append(z ^ low)
            d ^= low
        return out

    def succ(self, x: int) -> list[int]:
        out, d = [], self.delta[x]
        while d:
            low = d & -d
            out.append(x ^ low)
            d ^= low
        return out


def _host_monotone(h: _Host):
    v = monotonicity_violation(h.fp)
    if v is None:
        return True, None
    z, i = v
    return False, {"x": z.literal, "component": i}


def _mirror_fixed_points(h: _Host):
    img, himg = h.f.image, h.fp.image
    for x in range(1 << h.n):
        m = h.mirror(x)
        if (img[x] == x) != (himg[m] == m):
            return False, {"x": _lit(h.n, x), "f(x)": _lit(h.n, img[x]), "f'(x,~x)": h.lit(himg[m])}
    host_fixed = np.flatnonzero(himg == np.arange(himg.size))
    outside = int((~h.omega[host_fixed]).sum())
    return True, None, {"host_fixed_points_outside_omega": outside}


def _outer_layers(h: _Host):
    n = h.n
    w = popcounts(2 * n)
    full = (1 << (2 * n)) - 1
    img = h.fp.image
    low = np.flatnonzero((w <= n - 2) & (img != 0))
    if low.size:
        return False, {"z": h.lit(low[0]), "f'(z)": h.lit(img[low[0]]), "expected": "all zeros"}
    high = np.flatnonzero((w >= n + 2) & (img != full))
    if high.size:
        return False, {"z": h.lit(high[0]), "f'(z)": h.lit(img[high[0]]), "expected": "all ones"}
    # backward closure of the mirror set must stay within weights n-1..n+1
    seen = h.omega.copy()
    stack = list(np.flatnonzero(seen))
    while stack:
        v = int(stack.pop())
        for b in range(2 * n):
            u = v ^ (1 << b)
            if h.hdelta[u] >> b & 1 and not seen[u]:
                seen[u] = True
                stack.append(u)
    bad = np.flatnonzero(seen & ((w <= n - 2) | (w >= n + 2)))
    if bad.size:
        return False, {"z": h.lit(bad[0]), "reason": "reaches the mirror set from outside layers A, B, C"}
    return True, None


def _two_step(h: _Host):
    """Two-step correspondence and the absence of any other Omega-to-Omega detour."""
    n = h.n
    for x in range(1 << n):
        src = h.mirror(x)
        xbar = x ^ h.mask
        src_succ = set(h.hsucc(src))
        expected = {}
        for y in h.succ(x):
            expected[h.pair(y, xbar)] = h.mirror(y)
            expected[h.pair(x, y ^ h.mask)] = h.mirror(y)

        # every Omega-free two-step route for hamming-1 targets
        for b in range(n):
            y = x ^ (1 << b)
            tgt = h.mirror(y)
            via = {m for m in src_succ if not h.omega[m] and tgt in h.hsucc(m)}
            want = {h.pair(y, xbar), h.pair(x, y ^ h.mask)} if y in h.succ(x) else set()
            if via != want:
                return False, {"x": _lit(n, x), "y": _lit(n, y),
                               "paths_via": sorted(h.lit(m) for m in via),
                               "expected_via": sorted(h.lit(m) for m in want)}

        # states reachable from src without entering Omega, and their exits into Omega
        reach, exits = set(), {}
        stack = [src]
        while stack:
            v = stack.pop()
            for u in h.hsucc(v):
                if h.omega[u]:
                    if v != src:
                        exits.setdefault(v, set()).add(u)
                elif u not in reach:
                    reach.add(u)
                    stack.append(u)
        # those that can still reach Omega while avoiding it
        preds = {}
        for v in reach:
            for u in h.hsucc(v):
                if u in reach:
                    preds.setdefault(u, []).append(v)
        useful = set(exits)
        stack = list(exits)
        while stack:
            u = stack.pop()
            for v in preds.get(u, ()):
                if v not in useful:
                    useful.add(v)
                    stack.append(v)
        direct = any(h.omega[u] for u in src_succ)
        if direct or useful != set(expected):
            return False, {"x": _lit(n, x),
                           "intermediates": sorted(h.lit(v) for v in useful),
                           "expected": sorted(h.lit(v) for v in expected)}
        for v in useful:
            if v not in src_succ or exits[v] != {expected[v]} or any(u in useful for u in h.hsucc(v)):
                return False, {"x": _lit(n, x), "intermediate": h.lit(v),
                               "exits": sorted(h.lit(u) for u in exits[v])}
    return True, None


def _distance_doubling(h: _Host):
    """Distances double and walks of length l map to walks of length 2l."""
    n = h.n
    size = 1 << n
    for x in range(size):
        d = bfs_distances(h.f, x, h.delta)
        dh = bfs_distances(h.fp, h.mirror(x), h.hdelta)
        for y in range(size):
            a, b = d.get(y), dh.get(h.mirror(y))
            if (a is None) != (b is None) or (a is not None and b != 2 * a):
                return False, {"x": _lit(n, x), "y": _lit(n, y),
                               "distance": "unreachable" if a is None else a,
                               "host_distance": "unreachable" if b is None else b}

    # exact-length walk relation, lengths 0 .. 2^n
    hsize = 1 << (2 * n)
    mir = np.array([h.mirror(x) for x in range(size)])
    R = np.eye(size, dtype=bool)
    H = np.zeros((size, hsize), dtype=bool)
    H[np.arange(size), mir] = True
    sdelta = np.asarray(h.delta)
    hdelta = np.asarray(h.hdelta)
    states, hstates = np.arange(size), np.arange(hsize)

    def step(M, delta, st, comps):
        out = np.zeros_like(M)
        for b in range(comps):
            movers = (delta >> b) & 1 == 1
            out[:, st[movers] ^ (1 << b)] |= M[:, st[movers]]
        return out

    for length in range(size + 1):
        got = H[:, mir]
        if not np.array_equal(R, got):
            x, y = map(int, np.argwhere(R != got)[0])
            return False, {"x": _lit(n, x), "y": _lit(n, y), "walk_length": length,
                           "in_f": bool(R[x, y]), "in_host_doubled": bool(got[x, y])}
        R = step(R, sdelta, states, n)
        H = step(step(H, hdelta, hstates, 2 * n), hdelta, hstates, 2 * n)
    return True, None


def check_embedding_suite(f: BooleanNetwork, instance: dict | None = None, force: bool = False) -> VerificationReport:
    """Monotonicity, fixed points, outer layers, two-step transitions, distance doubling, mirror identity."""
    _guard(f, EMBEDDING_CAP, force)
    s = _Suite("embedding", instance, f)
    if has_negative_loop(f):
        return s.skip("interaction graph has a negative loop")
    h = _Host(f)
    s.check("host-monotone", lambda: _host_monotone(h))
    s.check("mirror-fixed-points", lambda: _mirror_fixed_points(h))
    s.check("outer-layers-collapse", lambda: _outer_layers(h))
    s.check("two-step-transitions", lambda: _two_step(h))
    s.check("distance-doubling", lambda: _distance_doubling(h))
    s.check("mirror-identity", lambda: (mirror_identity_check(h.fp), None))
    return s.done()


SUITE_FUNCS = {
    "robert": (check_robert, constructions.random_acyclic, "random_acyclic"),
    "monotone-reach": (check_monotone_reach, constructions.random_monotone, "random_monotone"),
    "embedding": (check_embedding_suite, constructions.random_no_negative_loop, "random_no_negative_loop"),
    "fixed-point-counts": (check_fixed_point_counts, constructions.random_network, "random_network"),
}


def run_suite(suite: str, f: BooleanNetwork, instance: dict | None = None, force: bool = False) -> list[VerificationReport]:
    """One report per requested suite (``"all"`` runs the four in order)."""
    names = _suite_names(suite)
    return [SUITE_FUNCS[name][0](f, instance, force=force) for name in names]


def _suite_names(suite: str) -> tuple[str, ...]:
    if suite == "all":
        return SUITES
    if suite not in SUITE_FUNCS:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES + ('all',))}")
    return (suite,)


def run_corpus(suite: str, count: int, n: int, base_seed: int = 0, force: bool = False) -> list[VerificationReport]:
    """Run ``suite`` on ``count`` generated instances with seeds ``base_seed + k``."""
    names = _suite_names(suite)
    reports = []
    for k in range(count):
        seed = base_seed + k
        for name in names:
            check, gen, gen_name = SUITE_FUNCS[name]
            f = gen(n, seed)
            reports.append(check(f, {"generator": gen_name, "seed": seed}, force=force))
    return reports


def summarize(reports: list[VerificationReport]) -> dict:
    return {
        "reports": len(reports),
        "passed": sum(r.passed and not r.skipped for r in reports),
        "skipped": sum(r.skipped for r in reports),
        "failed": sum(not r.passed for r in reports),
    }
