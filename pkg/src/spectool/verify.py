"""Exhaustive enumeration and fuzzing harness over all theorem checkers.

Labeled enumeration in edge-bitmask order is the trusted ground truth;
canonical dedup (lexicographically minimal adjacency bitstring over vertex
permutations) is an optimization layer validated against labeled counts.
Sweeps partition the mask space into fixed shards, so reports are identical
for any worker count; merging is commutative (counters plus sorted lists).
"""

from dataclasses import dataclass
from enum import Enum
import itertools
import json
import math
import multiprocessing
import time

import numpy as np

from . import _exhaustive
from .bounds import BoundKind, bound_value, mantel_check, spectral_mantel_classify
from .cycles import (
    DEFAULT_BUDGET,
    bondy_pancyclicity_check,
    consecutive_even_cycles_check,
    erdos_peel,
)
from .errors import OrderTooLargeError, PreconditionViolatedError
from .families import gnp, random_bipartite, random_regular
from .graph import Graph, bipartition, connectivity, from_edge_mask, is_connected
from .graph6 import from_edge_list, from_graph6, graph_text, to_graph6
from .spectrum import (
    EQ_EPS,
    Spectrum,
    distinct_eigenvalue_count,
    eigendecompose,
    is_spectrum_symmetric,
)
from .verdicts import CounterexampleReport, Verdict
from .walks import decomposition_identity_check, walk_counts, walk_inequality_holds

WALK_DEPTH = 12
MAX_EXHAUSTIVE_N = 8
MAX_CANONICAL_N = 7


class TheoremId(Enum):
    MANTEL = "mantel"
    NOSAL = "nosal"
    SPECTRAL_MANTEL = "spectral-mantel"
    STANLEY = "stanley"
    HONG = "hong"
    HSF = "hsf"
    THM11 = "thm11"
    LEMMA3_BOUND = "lemma3"
    WALK_INEQUALITY = "walk-inequality"
    DECOMPOSITION_IDENTITY = "decomposition-identity"
    LEMMA5_PEEL = "lemma5-peel"
    LEMMA6_BONDY = "lemma6-bondy"
    THM7_EVEN_CYCLES = "thm7-even-cycles"
    LEMMA1_SPECTRUM_SYMMETRY = "lemma1-spectrum-symmetry"
    LEMMA2_DIAMETER_DISTINCT = "lemma2-diameter-distinct"


ALL_THEOREMS = tuple(TheoremId)

BOUND_THEOREMS = {
    TheoremId.STANLEY: BoundKind.STANLEY,
    TheoremId.HONG: BoundKind.HONG,
    TheoremId.HSF: BoundKind.HONG_SHU_FANG_NIKIFOROV,
    TheoremId.THM11: BoundKind.CLOSED_NEIGHBORHOOD,
    TheoremId.LEMMA3_BOUND: BoundKind.OPEN_NEIGHBORHOOD,
}

# Theorem subset the vectorized exhaustive engine covers.
VECTORIZABLE = frozenset({
    TheoremId.MANTEL, TheoremId.NOSAL, TheoremId.SPECTRAL_MANTEL,
    TheoremId.STANLEY, TheoremId.HONG, TheoremId.HSF, TheoremId.THM11,
    TheoremId.LEMMA3_BOUND, TheoremId.LEMMA1_SPECTRUM_SYMMETRY,
    TheoremId.LEMMA2_DIAMETER_DISTINCT,
})


def coerce_theorem(value) -> TheoremId:
    if isinstance(value, TheoremId):
        return value
    return TheoremId(value)


def _report(g: Graph, theorem: TheoremId, quantities: dict,
            witness: dict | None = None) -> CounterexampleReport:
    fmt, text = graph_text(g)
    return CounterexampleReport(
        theorem=theorem.value, graph_format=fmt, graph=text,
        quantities=quantities, witness=witness or {})


def _check_bound(g: Graph, theorem: TheoremId, spec: Spectrum) -> Verdict:
    kind = BOUND_THEOREMS[theorem]
    try:
        value = bound_value(g, kind)
    except PreconditionViolatedError as exc:
        return Verdict.vacuous(str(exc))
    slack = value - spec.lambda1
    if slack >= -EQ_EPS:
        return Verdict.holds()
    return Verdict.violated(_report(
        g, theorem,
        {"lambda1": spec.lambda1, "bound": value, "slack": slack, "m": g.m}))


def _check_mantel(g: Graph, spec, budget, walk_depth) -> Verdict:
    return mantel_check(g)


def _check_nosal(g: Graph, spec, budget, walk_depth) -> Verdict:
    lam1 = spec.lambda1
    sqrt_m = math.sqrt(g.m)
    if lam1 <= sqrt_m + EQ_EPS:
        return Verdict.vacuous(f"lambda1 {lam1:.6f} <= sqrt(m) {sqrt_m:.6f}")
    from .graph import first_triangle

    if first_triangle(g) is not None:
        return Verdict.holds()
    return Verdict.violated(_report(
        g, TheoremId.NOSAL, {"lambda1": lam1, "m": g.m, "sqrt_m": sqrt_m}))


def _check_spectral_mantel(g: Graph, spec, budget, walk_depth) -> Verdict:
    result = spectral_mantel_classify(g, spec)
    if result.kind == "below_threshold":
        return Verdict.vacuous("lambda1 below sqrt(m)")
    if result.kind in ("has_triangle", "extremal_complete_bipartite"):
        return Verdict.holds(result.kind)
    return Verdict.violated(_report(
        g, TheoremId.SPECTRAL_MANTEL,
        {"lambda1": result.lambda1, "sqrt_m": result.sqrt_m, "m": g.m},
        {"kind": result.kind}))


def _check_walk_inequality(g: Graph, spec, budget, walk_depth) -> Verdict:
    if g.m == 0:
        return Verdict.vacuous("edgeless graph: no evaluable index")
    table = walk_counts(g, walk_depth)
    if walk_inequality_holds(g, walk_depth, table):
        return Verdict.holds()
    return Verdict.violated(_report(
        g, TheoremId.WALK_INEQUALITY,
        {"m": g.m, "K": walk_depth},
        {"totals": [str(w) for w in table.totals]}))


def _check_decomposition(g: Graph, spec, budget, walk_depth) -> Verdict:
    if decomposition_identity_check(g, max(2, walk_depth)):
        return Verdict.holds()
    return Verdict.violated(_report(
        g, TheoremId.DECOMPOSITION_IDENTITY, {"m": g.m, "K": walk_depth}))


def _check_lemma5_peel(g: Graph, spec, budget, walk_depth) -> Verdict:
    m = g.m
    applicable = [k for k in (1, 2, 3) if m >= k * g.n]
    if not applicable:
        return Verdict.vacuous("m < kn for k in {1,2,3}")
    for k in applicable:
        peel = erdos_peel(g, k)
        if peel.n_prime == 0 or peel.min_degree < k + 1:
            return Verdict.violated(_report(
                g, TheoremId.LEMMA5_PEEL,
                {"k": k, "m": m, "n": g.n, "surviving": peel.n_prime,
                 "min_degree": peel.min_degree if peel.min_degree is not None else -1}))
    return Verdict.holds()


def _check_lemma6_bondy(g: Graph, spec, budget, walk_depth) -> Verdict:
    return bondy_pancyclicity_check(g, budget)


def _check_thm7(g: Graph, spec, budget, walk_depth) -> Verdict:
    return consecutive_even_cycles_check(g, spec=spec, budget=budget)


def _check_lemma1(g: Graph, spec, budget, walk_depth) -> Verdict:
    symmetric = is_spectrum_symmetric(spec)
    bip = bipartition(g) is not None
    if symmetric == bip:
        return Verdict.holds()
    return Verdict.violated(_report(
        g, TheoremId.LEMMA1_SPECTRUM_SYMMETRY,
        {"m": g.m},
        {"spectrum_symmetric": symmetric, "bipartite": bip}))


def _check_lemma2(g: Graph, spec, budget, walk_depth) -> Verdict:
    conn = connectivity(g)
    if not conn.is_connected:
        return Verdict.vacuous("disconnected")
    distinct = distinct_eigenvalue_count(spec)
    if distinct >= conn.diameter + 1:
        return Verdict.holds()
    return Verdict.violated(_report(
        g, TheoremId.LEMMA2_DIAMETER_DISTINCT,
        {"diameter": conn.diameter, "distinct_eigenvalues": distinct}))


_NEEDS_SPECTRUM = {
    TheoremId.NOSAL, TheoremId.SPECTRAL_MANTEL, TheoremId.STANLEY,
    TheoremId.HONG, TheoremId.HSF, TheoremId.THM11, TheoremId.LEMMA3_BOUND,
    TheoremId.THM7_EVEN_CYCLES, TheoremId.LEMMA1_SPECTRUM_SYMMETRY,
    TheoremId.LEMMA2_DIAMETER_DISTINCT,
}

_CHECKERS = {
    TheoremId.MANTEL: _check_mantel,
    TheoremId.NOSAL: _check_nosal,
    TheoremId.SPECTRAL_MANTEL: _check_spectral_mantel,
    TheoremId.WALK_INEQUALITY: _check_walk_inequality,
    TheoremId.DECOMPOSITION_IDENTITY: _check_decomposition,
    TheoremId.LEMMA5_PEEL: _check_lemma5_peel,
    TheoremId.LEMMA6_BONDY: _check_lemma6_bondy,
    TheoremId.THM7_EVEN_CYCLES: _check_thm7,
    TheoremId.LEMMA1_SPECTRUM_SYMMETRY: _check_lemma1,
    TheoremId.LEMMA2_DIAMETER_DISTINCT: _check_lemma2,
}


def check_theorem(g: Graph, theorem, spec: Spectrum | None = None,
                  budget: int = DEFAULT_BUDGET,
                  walk_depth: int = WALK_DEPTH) -> Verdict:
    """Deterministic verdict of one theorem on one graph."""
    theorem = coerce_theorem(theorem)
    if spec is None and theorem in _NEEDS_SPECTRUM:
        spec = eigendecompose(g)
    if theorem in BOUND_THEOREMS:
        return _check_bound(g, theorem, spec)
    return _CHECKERS[theorem](g, spec, budget, walk_depth)


def replay(report: CounterexampleReport,
           budget: int = DEFAULT_BUDGET) -> Verdict:
    """Re-run the reported checker on the embedded graph."""
    if report.graph_format == "graph6":
        g = from_graph6(report.graph)
    else:
        g = from_edge_list(report.graph)
    return check_theorem(g, report.theorem, budget=budget)


# ---------------------------------------------------------------------------
# Enumeration


def labeled_graph_count(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


def enumerate_graphs(n: int, connected_only: bool = False,
                     dedup: str = "labeled"):
    """Stream graphs on n vertices: all labeled ones, or canonical reps."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if dedup == "labeled":
        if n > MAX_EXHAUSTIVE_N:
            raise OrderTooLargeError(f"labeled enumeration capped at n = "
                                     f"{MAX_EXHAUSTIVE_N}")
        for mask in range(labeled_graph_count(n)):
            g = from_edge_mask(n, mask)
            if connected_only and not is_connected(g):
                continue
            yield g
    elif dedup == "canonical":
        if n > MAX_CANONICAL_N:
            raise OrderTooLargeError(f"canonical enumeration capped at n = "
                                     f"{MAX_CANONICAL_N}")
        for mask in canonical_masks(n):
            g = from_edge_mask(n, mask)
            if connected_only and not is_connected(g):
                continue
            yield g
    else:
        raise ValueError(f"unknown dedup mode {dedup!r}")


def _perm_edge_table(n: int) -> np.ndarray:
    """table[p, e] = edge index of the image of edge e under permutation p."""
    pairs = [(u, v) for v in range(n) for u in range(v)]
    index = {}
    for e, (u, v) in enumerate(pairs):
        index[(u, v)] = e
        index[(v, u)] = e
    perms = list(itertools.permutations(range(n)))
    table = np.empty((len(perms), len(pairs)), dtype=np.int64)
    for p, perm in enumerate(perms):
        for e, (u, v) in enumerate(pairs):
            table[p, e] = index[(perm[u], perm[v])]
    return table


def _bit_reversal(nbits: int) -> np.ndarray:
    """rev[x] flips bit significance so that edge 0 becomes the top bit.

    Minimizing rev over an orbit is exactly lexicographic minimization of the
    adjacency bitstring x(0,1), x(0,2), ... (the graph6 body ordering).
    """
    size = 1 << nbits
    ar = np.arange(size, dtype=np.int64)
    rev = np.zeros(size, dtype=np.int64)
    for e in range(nbits):
        rev |= ((ar >> e) & 1) << (nbits - 1 - e)
    return rev


def _orbit_masks(mask: int, table: np.ndarray) -> np.ndarray:
    images = np.zeros(table.shape[0], dtype=np.int64)
    e = 0
    rest = mask
    while rest:
        if rest & 1:
            images |= np.left_shift(np.int64(1), table[:, e])
        rest >>= 1
        e += 1
    return images


def canonical_masks(n: int) -> list[int]:
    """Edge masks of the isomorphism-class representatives on n vertices.

    A representative is the graph whose adjacency bitstring is
    lexicographically minimal over all vertex permutations; scanning masks in
    bitstring order and marking each new orbit visits exactly those.
    """
    if n > MAX_CANONICAL_N:
        raise OrderTooLargeError(f"canonical enumeration capped at n = "
                                 f"{MAX_CANONICAL_N}")
    nbits = n * (n - 1) // 2
    if nbits == 0:
        return [0]
    table = _perm_edge_table(n)
    rev = _bit_reversal(nbits)
    visited = np.zeros(1 << nbits, dtype=bool)
    reps = []
    for key in range(1 << nbits):
        mask = int(rev[key])
        if visited[mask]:
            continue
        reps.append(mask)
        visited[_orbit_masks(mask, table)] = True
    return reps


def canonical_form(g: Graph) -> Graph:
    """The canonical representative of g's isomorphism class (n <= 8)."""
    if g.n > MAX_EXHAUSTIVE_N:
        raise OrderTooLargeError("canonical form supported up to n = 8")
    if g.n < 2:
        return g
    from .graph import to_edge_mask

    table = _perm_edge_table(g.n)
    nbits = g.n * (g.n - 1) // 2
    images = _orbit_masks(to_edge_mask(g), table)
    keys = np.zeros_like(images)
    for e in range(nbits):
        keys |= ((images >> e) & 1) << (nbits - 1 - e)
    best = images[int(np.argmin(keys))]
    return from_edge_mask(g.n, int(best))


# ---------------------------------------------------------------------------
# Sweeping


@dataclass(frozen=True)
class SweepConfig:
    n_min: int = 1
    n_max: int = 6
    connected_only: bool = False
    dedup: str = "labeled"
    theorems: tuple = ALL_THEOREMS
    jobs: int = 1
    budget: int = DEFAULT_BUDGET
    walk_depth: int = WALK_DEPTH
    long_run: bool = False

    def validate(self) -> None:
        if not 1 <= self.n_min <= self.n_max:
            raise ValueError("need 1 <= n_min <= n_max")
        if self.n_max > MAX_EXHAUSTIVE_N:
            raise OrderTooLargeError(
                f"exhaustive sweeps capped at n = {MAX_EXHAUSTIVE_N}")
        if self.dedup == "labeled" and self.n_max >= 8 and not self.long_run:
            raise OrderTooLargeError(
                "labeled n = 8 (268M graphs) requires the long-run flag")
        if self.dedup == "canonical" and self.n_max > MAX_CANONICAL_N:
            raise OrderTooLargeError(
                f"canonical dedup capped at n = {MAX_CANONICAL_N}")
        if self.dedup not in ("labeled", "canonical"):
            raise ValueError(f"unknown dedup mode {self.dedup!r}")
        if self.jobs < 1:
            raise ValueError("jobs must be positive")
        for t in self.theorems:
            coerce_theorem(t)

    def theorem_ids(self) -> tuple[TheoremId, ...]:
        return tuple(coerce_theorem(t) for t in self.theorems)

    def to_dict(self) -> dict:
        return {
            "n_min": self.n_min, "n_max": self.n_max,
            "connected_only": self.connected_only, "dedup": self.dedup,
            "theorems": [coerce_theorem(t).value for t in self.theorems],
            "budget": self.budget, "walk_depth": self.walk_depth,
        }


@dataclass
class SweepReport:
    config: dict
    totals: dict  # theorem id -> {"holds": int, ...}
    tight: dict  # bound id -> sorted graph6 list
    counterexamples: list
    runtime_ms: float | None = None

    def violated_count(self) -> int:
        return sum(t["violated"] for t in self.totals.values())

    def inconclusive_count(self) -> int:
        return sum(t["inconclusive"] for t in self.totals.values())

    def payload(self) -> dict:
        """Semantic content: everything except the wall-clock diagnostic."""
        return {
            "config": self.config,
            "totals": self.totals,
            "tight": self.tight,
            "counterexamples": [c.to_dict() for c in self.counterexamples],
        }

    def to_dict(self, include_runtime: bool = False) -> dict:
        out = self.payload()
        if include_runtime:
            out["runtime_ms"] = self.runtime_ms
        return out

    def to_json(self, include_runtime: bool = False) -> str:
        return json.dumps(self.to_dict(include_runtime), indent=2,
                          sort_keys=True)


def _empty_partial(theorems) -> dict:
    return {
        "totals": {
            t.value: {"holds": 0, "vacuous": 0, "violated": 0, "inconclusive": 0}
            for t in theorems
        },
        "tight": {BOUND_THEOREMS[t].value: [] for t in theorems
                  if t in BOUND_THEOREMS},
        "counterexamples": [],
    }


def _merge_partial(acc: dict, part: dict) -> dict:
    for tid, counts in part["totals"].items():
        slot = acc["totals"].setdefault(
            tid, {"holds": 0, "vacuous": 0, "violated": 0, "inconclusive": 0})
        for key, value in counts.items():
            slot[key] += value
    for bid, graphs in part["tight"].items():
        acc["tight"].setdefault(bid, []).extend(graphs)
    acc["counterexamples"].extend(part["counterexamples"])
    return acc


def _battery(g: Graph, theorems, budget: int, walk_depth: int,
             partial: dict) -> None:
    spec = None
    if any(t in _NEEDS_SPECTRUM or t in BOUND_THEOREMS for t in theorems):
        spec = eigendecompose(g)
    text = None
    for t in theorems:
        verdict = check_theorem(g, t, spec, budget, walk_depth)
        partial["totals"][t.value][verdict.status] += 1
        if verdict.counterexample is not None:
            partial["counterexamples"].append(verdict.counterexample)
        if t in BOUND_THEOREMS and verdict.status == "holds":
            kind = BOUND_THEOREMS[t]
            value = bound_value(g, kind)
            if abs(value - spec.lambda1) <= EQ_EPS:
                if text is None:
                    text = to_graph6(g) if g.n <= 62 else graph_text(g)[1]
                partial["tight"][kind.value].append(text)


def _labeled_shard(args) -> dict:
    n, start, stop, theorem_values, connected_only, budget, walk_depth = args
    theorems = tuple(TheoremId(v) for v in theorem_values)
    partial = _empty_partial(theorems)
    for mask in range(start, stop):
        g = from_edge_mask(n, mask)
        if connected_only and not is_connected(g):
            continue
        _battery(g, theorems, budget, walk_depth, partial)
    return partial


def _mask_list_shard(args) -> dict:
    n, masks, theorem_values, connected_only, budget, walk_depth = args
    theorems = tuple(TheoremId(v) for v in theorem_values)
    partial = _empty_partial(theorems)
    for mask in masks:
        g = from_edge_mask(n, mask)
        if connected_only and not is_connected(g):
            continue
        _battery(g, theorems, budget, walk_depth, partial)
    return partial


def _vector_shard(args) -> dict:
    n, start, stop, theorem_values, connected_only = args
    theorems = tuple(TheoremId(v) for v in theorem_values)
    partial = _empty_partial(theorems)
    result = _exhaustive.sweep_range(
        n, start, stop, set(theorem_values), connected_only)
    for tid_value, slot in result["counts"].items():
        for status, count in slot.items():
            partial["totals"][tid_value][status] += count
    for bound_id, mask_list in result["tight"].items():
        partial["tight"][bound_id].extend(
            to_graph6(from_edge_mask(n, mask)) for mask in mask_list)
    # Graphs the batch engine cannot decide alone (extremal confirmations
    # and any apparent violation) get the per-graph reference checker.
    for tid_value, mask_list in result["resolve"].items():
        for mask in mask_list:
            verdict = check_theorem(from_edge_mask(n, mask), tid_value)
            partial["totals"][tid_value][verdict.status] += 1
            if verdict.counterexample is not None:
                partial["counterexamples"].append(verdict.counterexample)
    return partial


def _run_shards(worker, shard_args, jobs: int) -> dict:
    merged = None
    if jobs <= 1 or len(shard_args) <= 1:
        results = map(worker, shard_args)
    else:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(jobs) as pool:
            results = pool.map(worker, shard_args, chunksize=1)
    for part in results:
        merged = part if merged is None else _merge_partial(merged, part)
    return merged


def _finalize(config_dict: dict, merged: dict, started: float) -> SweepReport:
    tight = {bid: sorted(graphs) for bid, graphs in merged["tight"].items()}
    counterexamples = sorted(
        merged["counterexamples"], key=lambda c: (c.theorem, c.graph))
    return SweepReport(
        config=config_dict,
        totals=merged["totals"],
        tight=tight,
        counterexamples=counterexamples,
        runtime_ms=(time.perf_counter() - started) * 1e3,
    )


SHARDS_PER_ORDER = 64


def sweep(config: SweepConfig) -> SweepReport:
    """Run every requested theorem over the configured graph space."""
    config.validate()
    started = time.perf_counter()
    theorems = config.theorem_ids()
    theorem_values = tuple(t.value for t in theorems)
    use_vector = (
        config.dedup == "labeled"
        and set(theorems) <= VECTORIZABLE
        and config.n_max >= 6
    )
    shard_args = []
    worker = None
    for n in range(config.n_min, config.n_max + 1):
        if config.dedup == "labeled":
            total = labeled_graph_count(n)
            step = max(1, math.ceil(total / SHARDS_PER_ORDER))
            for start in range(0, total, step):
                stop = min(start + step, total)
                if use_vector:
                    shard_args.append(
                        (n, start, stop, theorem_values, config.connected_only))
                else:
                    shard_args.append(
                        (n, start, stop, theorem_values, config.connected_only,
                         config.budget, config.walk_depth))
        else:
            masks = canonical_masks(n)
            step = max(1, math.ceil(len(masks) / SHARDS_PER_ORDER))
            for i in range(0, len(masks), step):
                shard_args.append(
                    (n, masks[i:i + step], theorem_values,
                     config.connected_only, config.budget, config.walk_depth))
    if config.dedup == "labeled":
        worker = _vector_shard if use_vector else _labeled_shard
    else:
        worker = _mask_list_shard
    merged = _run_shards(worker, shard_args, config.jobs)
    if merged is None:
        merged = _empty_partial(theorems)
    return _finalize(config.to_dict(), merged, started)


# ---------------------------------------------------------------------------
# Fuzzing


def parse_distribution(spec_text: str) -> tuple:
    """Parse "gnp:30,0.5" / "bipartite:8,8,0.7" / "regular:20,3"."""
    name, _, params_text = spec_text.partition(":")
    params = [p for p in params_text.split(",") if p]
    try:
        if name == "gnp":
            n, p = int(params[0]), float(params[1])
            if len(params) != 2 or n < 0 or not 0 <= p <= 1:
                raise ValueError
            return ("gnp", n, p)
        if name == "bipartite":
            a, b, p = int(params[0]), int(params[1]), float(params[2])
            if len(params) != 3 or a < 0 or b < 0 or not 0 <= p <= 1:
                raise ValueError
            return ("bipartite", a, b, p)
        if name == "regular":
            n, k = int(params[0]), int(params[1])
            if len(params) != 2 or not 0 <= k < n or (n * k) % 2:
                raise ValueError
            return ("regular", n, k)
    except (ValueError, IndexError):
        raise ValueError(f"bad distribution spec {spec_text!r}") from None
    raise ValueError(f"unknown distribution {name!r}")


def sample_distribution(dist: tuple, sample_seed: int) -> Graph:
    if dist[0] == "gnp":
        return gnp(dist[1], dist[2], sample_seed)
    if dist[0] == "bipartite":
        return random_bipartite(dist[1], dist[2], dist[3], sample_seed)
    if dist[0] == "regular":
        return random_regular(dist[1], dist[2], sample_seed)
    raise ValueError(f"unknown distribution {dist!r}")


def _sample_seed(seed: int, index: int) -> int:
    # Stable per-sample derivation, independent of worker layout.
    return (seed * 0x9E3779B1 + index * 0x85EBCA77) & 0x7FFFFFFF


def _fuzz_shard(args) -> dict:
    dist, lo, hi, seed, theorem_values, budget, walk_depth = args
    theorems = tuple(TheoremId(v) for v in theorem_values)
    partial = _empty_partial(theorems)
    for index in range(lo, hi):
        g = sample_distribution(dist, _sample_seed(seed, index))
        _battery(g, theorems, budget, walk_depth, partial)
    return partial


def fuzz(distribution, count: int, seed: int,
         theorems=ALL_THEOREMS, jobs: int = 1,
         budget: int = DEFAULT_BUDGET,
         walk_depth: int = WALK_DEPTH) -> SweepReport:
    """Randomized sweep: ``count`` seeded samples from one distribution."""
    if isinstance(distribution, str):
        dist = parse_distribution(distribution)
    else:
        dist = tuple(distribution)
    if count < 0:
        raise ValueError("count must be nonnegative")
    started = time.perf_counter()
    theorem_ids = tuple(coerce_theorem(t) for t in theorems)
    theorem_values = tuple(t.value for t in theorem_ids)
    step = max(1, math.ceil(count / SHARDS_PER_ORDER))
    shard_args = [
        (dist, lo, min(lo + step, count), seed, theorem_values, budget,
         walk_depth)
        for lo in range(0, count, step)
    ]
    merged = _run_shards(_fuzz_shard, shard_args, jobs)
    if merged is None:
        merged = _empty_partial(theorem_ids)
    config = {
        "distribution": ":".join(
            [dist[0], ",".join(str(x) for x in dist[1:])]),
        "count": count, "seed": seed,
        "theorems": list(theorem_values),
    }
    return _finalize(config, merged, started)


# ---------------------------------------------------------------------------
# Exhaustive spectral audit (identities, tightness classes, thresholds)


@dataclass
class SpectralAudit:
    """Aggregated exhaustive-audit outcome; every list should stay empty.

    Graphs are reported as graph6 strings. ``tight_counts`` is diagnostic
    (census sizes per bound), not a pass/fail signal.
    """

    graphs: int
    triangle_mismatches: list
    spectral_mantel_failures: list
    tight_threshold_not_complete_bipartite: list
    bound_violations: dict
    hsf_tight_not_class: list
    hsf_class_not_tight: list
    thm11_above_stanley: list
    lemma1_mismatches: list
    lemma2_violations: list
    tight_counts: dict

    def ok(self) -> bool:
        return not (
            self.triangle_mismatches or self.spectral_mantel_failures
            or self.tight_threshold_not_complete_bipartite
            or any(self.bound_violations.values())
            or self.hsf_tight_not_class or self.hsf_class_not_tight
            or self.thm11_above_stanley or self.lemma1_mismatches
            or self.lemma2_violations
        )


def _audit_shard(args) -> dict:
    n, start, stop = args
    part = _exhaustive.audit_range(n, start, stop)
    part["n"] = n
    return part


def exhaustive_spectral_audit(n_min: int = 1, n_max: int = 7,
                              jobs: int = 1) -> SpectralAudit:
    """Audit all labeled graphs with n_min <= n <= n_max in one pass.

    Covers the triangle trace identity, the spectral Mantel trichotomy with
    extremal confirmation, every bound's slack, the tightness degree-class
    equivalence for the minimum-degree bound, the closed-neighborhood vs
    edge-count bound dominance, spectrum symmetry vs bipartiteness, and the
    diameter vs distinct-eigenvalue inequality.
    """
    if n_max > MAX_EXHAUSTIVE_N:
        raise OrderTooLargeError(f"audit capped at n = {MAX_EXHAUSTIVE_N}")
    shard_args = []
    for n in range(n_min, n_max + 1):
        total = labeled_graph_count(n)
        step = max(1, math.ceil(total / SHARDS_PER_ORDER))
        for start in range(0, total, step):
            shard_args.append((n, start, min(start + step, total)))
    if jobs <= 1:
        parts = [_audit_shard(a) for a in shard_args]
    else:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(jobs) as pool:
            parts = pool.map(_audit_shard, shard_args, chunksize=1)

    by_n: dict[int, list] = {}
    for part in parts:
        by_n.setdefault(part["n"], []).append(part)
    merged_by_n = {n: _exhaustive.merge_audits(ps) for n, ps in by_n.items()}

    def decode(n: int, masks) -> list:
        return [to_graph6(from_edge_mask(n, mask)) for mask in masks]

    audit = SpectralAudit(
        graphs=0,
        triangle_mismatches=[],
        spectral_mantel_failures=[],
        tight_threshold_not_complete_bipartite=[],
        bound_violations={b: [] for b in
                          ("stanley", "hong", "hsf", "lemma3", "thm11")},
        hsf_tight_not_class=[],
        hsf_class_not_tight=[],
        thm11_above_stanley=[],
        lemma1_mismatches=[],
        lemma2_violations=[],
        tight_counts={b: 0 for b in
                      ("stanley", "hong", "hsf", "lemma3", "thm11")},
    )
    from .graph import is_complete_bipartite_plus_isolated

    for n, merged in sorted(merged_by_n.items()):
        audit.graphs += merged["graphs"]
        audit.triangle_mismatches += decode(n, merged["tri_mismatch"])
        audit.hsf_tight_not_class += decode(n, merged["hsf_tight_not_class"])
        audit.hsf_class_not_tight += decode(n, merged["hsf_class_not_tight"])
        audit.thm11_above_stanley += decode(n, merged["thm11_above_stanley"])
        audit.lemma1_mismatches += decode(n, merged["lemma1_mismatch"])
        audit.lemma2_violations += decode(n, merged["lemma2_violations"])
        for bound, masks in merged["bound_violations"].items():
            audit.bound_violations[bound] += decode(n, masks)
        for bound, count in merged["tight_counts"].items():
            audit.tight_counts[bound] += count
        # At-threshold triangle-free graphs must classify as extremal
        # complete bipartite (with a validating witness).
        for mask in merged["mantel_candidates"]:
            g = from_edge_mask(n, mask)
            result = spectral_mantel_classify(g)
            if result.kind != "extremal_complete_bipartite":
                audit.spectral_mantel_failures.append(to_graph6(g))
        for mask in merged["threshold_tight_connected"]:
            g = from_edge_mask(n, mask)
            if is_complete_bipartite_plus_isolated(g) is None:
                audit.tight_threshold_not_complete_bipartite.append(
                    to_graph6(g))
    return audit
