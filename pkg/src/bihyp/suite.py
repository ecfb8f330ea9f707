"""The acceptance suite: nine claims, each checked computationally.

``quick`` runs every claim that does not need a full sweep, with reduced
sample counts for the randomized ones; ``paper`` runs everything at full
scale, including the order-6 and order-7 sweeps.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Callable

from .analysis import (
    contains_k533,
    identify,
    is_minimal_uncolorable,
    is_two_edge_connected,
    lll_incidence_threshold,
    max_edge_incidence,
    non_adjacent_pairs,
)
from .constructions import make_hk, make_knlm, make_muc, muc_size, vid
from .core import BiHypergraph, MixedHypergraph, is_proper
from .enumeration.certificate import IncompleteCertificateError, m3_sweep_specs, verify_m3
from .enumeration.generate import Orderly, count_classes_naive
from .enumeration.store import VerdictStore
from .enumeration.sweep import SweepSpec, SweepTimeout, run_sweep
from .solver import brute_force_oracle, decide_colorable, enumerate_proper_colorings

SUITES = ("quick", "paper")

# Sample counts for the randomized claims, per suite.
SAMPLES = {"quick": 500, "paper": 10_000}
R4_SAMPLES = {"quick": 200, "paper": 1_000}


@dataclass
class ClaimResult:
    claim: int
    title: str
    status: str  # pass / fail / skip
    details: str
    elapsed: float = 0.0

    def to_json(self, timings: bool = True) -> dict:
        doc = {"claim": self.claim, "title": self.title, "status": self.status, "details": self.details}
        if timings:
            doc["elapsed_s"] = round(self.elapsed, 3)
        return doc


@dataclass
class SuiteResult:
    suite: str
    seed: int
    claims: list[ClaimResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.claims)

    def to_json(self, timings: bool = True) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "ok": self.ok,
            "claims": [c.to_json(timings) for c in self.claims],
        }


@dataclass
class Context:
    suite: str
    seed: int
    jobs: int = 1
    store: VerdictStore | None = None
    n7_budget: float | None = None

    @property
    def full(self) -> bool:
        return self.suite == "paper"

    def rng(self, claim: int) -> random.Random:
        return random.Random(self.seed * 1000 + claim)


class Skip(Exception):
    pass


def _verdict(ok: bool, details: str) -> tuple[str, str]:
    return ("pass" if ok else "fail"), details


# --- claims ---------------------------------------------------------------


def claim_k_threshold(ctx: Context):
    wrong = []
    for n in range(3, 9):
        uncolorable = not decide_colorable(make_knlm(n, 3, 3)).colorable
        if uncolorable != (n >= 5):
            wrong.append(n)
    return _verdict(not wrong, "K(n,3,3) uncolorable exactly for n >= 5 on n = 3..8" if not wrong else f"wrong at n = {wrong}")


def claim_k533_minimal(ctx: Context):
    h = make_knlm(5, 3, 3)
    cert = is_minimal_uncolorable(h, ctx.jobs)
    return _verdict(cert.minimal and len(cert.witnesses) == 10, f"uncolorable; {len(cert.witnesses)} deletions colorable")


def claim_constructions(ctx: Context):
    problems, sizes = [], []
    for n in range(6, 18):
        h = make_muc(n)
        sizes.append(h.size)
        checks = {
            "order": h.n == n,
            "size": h.size == muc_size(n),
            "bound": 3 * h.size <= 7 * n - 12,
            "minimal": is_minimal_uncolorable(h, ctx.jobs).minimal,
            "no K(5,3,3)": contains_k533(h) is None,
            "2-edge-connected": is_two_edge_connected(h),
        }
        problems += [f"n={n}: {k}" for k, ok in checks.items() if not ok]
    return _verdict(not problems, f"n = 6..17, sizes {sizes}" + (f"; failed {problems}" if problems else ""))


def _h2_pattern(c) -> bool:
    for j1, j2 in combinations((1, 2, 3), 2):
        z = 6 - j1 - j2
        a, b = c[vid(1, j1)], c[vid(1, z)]
        if (
            a != b
            and c[vid(1, j2)] == a
            and c[vid(2, z)] == a
            and c[vid(2, j1)] == b
            and c[vid(2, j2)] == b
        ):
            return True
    return False


def claim_chain_colorings(ctx: Context):
    h2 = list(enumerate_proper_colorings(make_hk(2)))
    ok = len(h2) == 3 and all(_h2_pattern(c) for c in h2)
    counts = {}
    for k in (3, 4):
        cols = list(enumerate_proper_colorings(make_hk(k)))
        counts[k] = len(cols)
        for c in cols:
            for i1, i2 in combinations(range(1, k + 1), 2):
                if (i1 - i2) % 2 == 0 and any(c[vid(i1, j)] != c[vid(i2, j)] for j in (1, 2, 3)):
                    ok = False
    return _verdict(ok, f"H_2 has {len(h2)} colorings; parity holds on H_3 ({counts[3]}) and H_4 ({counts[4]})")


def _naive_cross_check() -> list[str]:
    bad = []
    for n, m in ((4, 4), (5, 9)):
        gen = Orderly(n, 3)
        orderly = [0] * (m + 1)
        for ranks in gen.walk((), m):
            orderly[len(ranks)] += 1
        if orderly != count_classes_naive(n, 3, m):
            bad.append(f"n={n}")
    return bad


def _sweep(ctx: Context, spec: SweepSpec, budget: float | None = None):
    return run_sweep(spec, ctx.store, jobs=ctx.jobs, time_budget=budget)


def claim_order6_sweep(ctx: Context):
    if not ctx.full:
        raise Skip("sweep claim; run the paper suite")
    bad = _naive_cross_check()
    parts = []
    held = True
    for spec in m3_sweep_specs()[:-1]:
        s = _sweep(ctx, spec)
        held &= s.held
        parts.append(f"n={spec.n}: {s.classes} classes, {len(s.counterexamples)} uncolorable")
    details = "; ".join(parts) + ("; class counts match naive dedup at n <= 5" if not bad else f"; count mismatch {bad}")
    return _verdict(held and not bad, details)


def claim_m3_certificate(ctx: Context):
    if not ctx.full:
        raise Skip("sweep claim; run the paper suite")
    *lower, full = m3_sweep_specs()
    for spec in lower:
        if ctx.store.meta(spec.id) is None:
            _sweep(ctx, spec)
    try:
        s = _sweep(ctx, full, ctx.n7_budget)
        note = f"n=7 adjacent sweep: {s.classes} classes, {s.evaluated} all-pairs-adjacent, {len(s.counterexamples)} uncolorable"
    except SweepTimeout:
        s = _sweep(ctx, m3_sweep_specs(7)[-1])
        note = f"n=7 sweep over budget; fell back to m <= 7 ({s.evaluated} instances)"
    try:
        cert = verify_m3(ctx.store)
    except IncompleteCertificateError as exc:
        return "fail", str(exc)
    failed = [st["step"] for st in cert.steps if not st["ok"]]
    details = f"{note}; certificate {cert.status}" + (f"; failed steps {failed}" if failed else "")
    return _verdict(cert.valid, details)


def _random_uniform(rng: random.Random, n: int, r: int, m: int) -> BiHypergraph:
    return BiHypergraph(n, rng.sample(list(combinations(range(n), r)), m))


def _sparse_uniform(rng: random.Random, n: int, r: int, max_incidence: int) -> BiHypergraph:
    """Random ``r``-uniform instance in which every edge meets at most
    ``max_incidence`` others, grown edge by edge."""
    pool = list(combinations(range(n), r))
    rng.shuffle(pool)
    edges: list[frozenset] = []
    meets: list[int] = []
    for cand in pool:
        s = frozenset(cand)
        hits = [i for i, e in enumerate(edges) if e & s]
        if len(hits) > max_incidence or any(meets[i] >= max_incidence for i in hits):
            continue
        for i in hits:
            meets[i] += 1
        edges.append(s)
        meets.append(len(hits))
    return BiHypergraph(n, [tuple(sorted(e)) for e in edges])


def claim_local_lemma(ctx: Context):
    # r = 3: every class with at most three edges on nine vertices.
    gen = Orderly(9, 3)
    small = [gen.hypergraph(ranks) for ranks in gen.walk((), 3)]
    r3_ok = all(decide_colorable(h).colorable for h in small)

    rng = ctx.rng(7)
    samples = R4_SAMPLES[ctx.suite]
    bad_size = 0
    for _ in range(samples):
        n = rng.randint(5, 12)
        h = _random_uniform(rng, n, 4, rng.randint(1, min(26, len(list(combinations(range(n), 4))))))
        bad_size += not decide_colorable(h).colorable
    bad_inc = 0
    max_seen = 0
    for _ in range(samples):
        h = _sparse_uniform(rng, rng.randint(6, 20), 4, 8)
        max_seen = max(max_seen, h.size)
        assert max_edge_incidence(h) <= 8 < lll_incidence_threshold(4)
        bad_inc += not decide_colorable(h, max_colors=3).colorable
    details = (
        f"r=3: {len(small)} classes with <= 3 edges on 9 vertices colorable={r3_ok}; "
        f"r=4: {samples} instances with <= 26 edges, {bad_size} uncolorable; "
        f"{samples} instances with incidence <= 8 (up to {max_seen} edges), {bad_inc} need more than 3 colors"
    )
    return _verdict(r3_ok and not bad_size and not bad_inc, details)


def random_antichain(rng: random.Random, n: int, count: int) -> list[tuple[int, ...]]:
    family: list[int] = []
    for _ in range(count):
        size = rng.randint(min(2, n), n)
        m = 0
        for v in rng.sample(range(n), size):
            m |= 1 << v
        if all(m & o != m and m & o != o for o in family):
            family.append(m)
    return [tuple(v for v in range(n) if m >> v & 1) for m in family]


def random_mixed(rng: random.Random, n: int, bi: bool) -> MixedHypergraph:
    c = random_antichain(rng, n, rng.randint(0, 2 * n))
    if bi:
        return BiHypergraph(n, c)
    return MixedHypergraph(n, c, random_antichain(rng, n, rng.randint(0, 2 * n)))


def claim_oracle(ctx: Context):
    rng = ctx.rng(8)
    count = SAMPLES[ctx.suite]
    disagree = 0
    uncolorable = 0
    for i in range(count):
        h = random_mixed(rng, rng.randint(1, 7), bi=i % 2 == 0)
        fast, slow = decide_colorable(h), brute_force_oracle(h)
        disagree += fast.status != slow.status
        uncolorable += not slow.colorable
    return _verdict(not disagree, f"{count} instances ({uncolorable} uncolorable), {disagree} disagreements")


def claim_lift(ctx: Context):
    rng = ctx.rng(9)
    count = SAMPLES[ctx.suite]
    done = lifted = 0
    while done < count:
        n = rng.randint(3, 8)
        h = random_mixed(rng, n, bi=rng.random() < 0.5)
        pairs = non_adjacent_pairs(h)
        if not pairs:
            continue
        done += 1
        ident = identify(h, *rng.choice(pairs))
        v = decide_colorable(ident.hypergraph)
        if v.colorable:
            if not is_proper(h, ident.lift(v.witness.colors).colors):
                return "fail", f"lift failed on {h.c_edges} / {h.d_edges}"
            lifted += 1
    return "pass", f"{count} identifications, {lifted} colorable quotients, all lifts proper"


CLAIMS: list[tuple[int, str, Callable]] = [
    (1, "K(n,3,3) colorability threshold", claim_k_threshold),
    (2, "K(5,3,3) is minimal uncolorable", claim_k533_minimal),
    (3, "minimal uncolorable constructions for n = 6..17", claim_constructions),
    (4, "coloring structure of the chain H_k", claim_chain_colorings),
    (5, "order-6 sweep: at most 9 edges always colorable", claim_order6_sweep),
    (6, "order-7 reduction and the m(3) = 10 certificate", claim_m3_certificate),
    (7, "local-lemma bounds hold on small and random instances", claim_local_lemma),
    (8, "solver agrees with the partition oracle", claim_oracle),
    (9, "identification lifts colorings", claim_lift),
]


def run_suite(
    suite: str = "quick",
    jobs: int = 1,
    store_dir: str | Path | None = None,
    seed: int = 0,
    n7_budget: float | None = None,
    only: set[int] | None = None,
    progress: Callable[[ClaimResult], None] | None = None,
) -> SuiteResult:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    store = VerdictStore(store_dir) if store_dir is not None else None
    ctx = Context(suite, seed, jobs, store, n7_budget)
    result = SuiteResult(suite, seed)
    for cid, title, fn in CLAIMS:
        start = time.time()
        if only is not None and cid not in only:
            status, details = "skip", "not selected"
        elif ctx.full and store is None and cid in (5, 6):
            status, details = "skip", "sweep claims need a store directory"
        else:
            try:
                status, details = fn(ctx)
            except Skip as exc:
                status, details = "skip", str(exc)
            except MemoryError:
                status, details = "skip", "resource guard: out of memory"
        res = ClaimResult(cid, title, status, details, time.time() - start)
        result.claims.append(res)
        if progress:
            progress(res)
    return result
