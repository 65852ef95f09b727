"""Batched numpy engine for exhaustive labeled sweeps on small orders.

Graphs are edge bitmasks; blocks of a few thousand are expanded into stacked
adjacency matrices and processed with batched LAPACK and boolean matrix
powers. Semantics (thresholds, formulas, epsilons) mirror the per-graph
checkers exactly; graphs needing combinatorial confirmation (extremal
classification, actual violations) are handed back to the caller as masks.
"""

from functools import lru_cache
import itertools

import numpy as np

from .spectrum import CLUSTER_EPS, EQ_EPS

BLOCK = 4096


@lru_cache(maxsize=None)
def _tables(n: int):
    pairs = [(u, v) for v in range(n) for u in range(v)]
    index = {pair: e for e, pair in enumerate(pairs)}
    u_idx = np.array([u for u, _ in pairs], dtype=np.intp)
    v_idx = np.array([v for _, v in pairs], dtype=np.intp)
    triple_masks = np.array([
        (1 << index[(i, j)]) | (1 << index[(i, k)]) | (1 << index[(j, k)])
        for i, j, k in itertools.combinations(range(n), 3)
    ], dtype=np.int64)
    return u_idx, v_idx, triple_masks


def block_stats(n: int, masks: np.ndarray, want_bip: bool = False,
                want_diam: bool = False) -> dict:
    """Vectorized per-graph quantities for a block of edge masks."""
    u_idx, v_idx, triple_masks = _tables(n)
    nbits = n * (n - 1) // 2
    b = len(masks)
    bits = ((masks[:, None] >> np.arange(nbits, dtype=np.int64)) & 1)
    a = np.zeros((b, n, n))
    if nbits:
        values = bits.astype(np.float64)
        a[:, u_idx, v_idx] = values
        a[:, v_idx, u_idx] = values
    degrees = a.sum(axis=2)
    deg_int = degrees.astype(np.int64)
    m = bits.sum(axis=1)
    ev = np.linalg.eigvalsh(a)  # ascending
    lam1 = ev[:, -1]
    tri = np.zeros(b, dtype=np.int64)
    for tm in triple_masks:
        tri += (masks & tm) == tm
    open_sums = np.einsum("bij,bj->bi", a, degrees)
    closed_sums = open_sums + degrees
    out = {
        "masks": masks,
        "m": m,
        "min_deg": deg_int.min(axis=1) if n else np.zeros(b, dtype=np.int64),
        "degrees": deg_int,
        "ev": ev,
        "lam1": lam1,
        "sum_cubes": (ev ** 3).sum(axis=1),
        "tri": tri,
        "max_open": open_sums.max(axis=1).astype(np.int64),
        "max_closed": closed_sums.max(axis=1).astype(np.int64),
    }
    reach = a + np.eye(n)
    power = 1
    while power < n - 1:
        reach = reach @ reach
        power *= 2
    out["connected"] = (reach[:, 0, :] > 0).all(axis=1)
    if want_bip:
        odd_trace = np.zeros(b)
        a2 = a @ a
        walk = a
        for _ in range(3, n + 1, 2):
            walk = walk @ a2
            odd_trace += np.trace(walk, axis1=1, axis2=2)
        out["bipartite"] = odd_trace == 0
        out["symmetric"] = np.abs(ev + ev[:, ::-1]).max(axis=1) <= CLUSTER_EPS
    if want_diam:
        if n == 1:
            out["diameter"] = np.zeros(b, dtype=np.int64)
        else:
            walk = a + np.eye(n)
            diam = np.zeros(b, dtype=np.int64)
            current = walk
            diam += ~((current > 0).all(axis=(1, 2)))
            for _ in range(2, n):
                current = current @ walk
                diam += ~((current > 0).all(axis=(1, 2)))
            out["diameter"] = diam + 1
        out["distinct"] = (np.diff(ev, axis=1) > CLUSTER_EPS).sum(axis=1) + 1
    return out


def _bound_arrays(stats: dict, n: int) -> dict:
    m = stats["m"].astype(np.float64)
    delta = stats["min_deg"].astype(np.float64)
    values = {
        "stanley": -0.5 + np.sqrt(2 * m + 0.25),
        "lemma3": np.sqrt(stats["max_open"].astype(np.float64)),
        "thm11": (-1 + np.sqrt(1 + 4 * stats["max_closed"].astype(np.float64))) / 2,
        "hsf": (delta - 1) / 2 + np.sqrt(2 * m - n * delta + (delta + 1) ** 2 / 4),
    }
    with np.errstate(invalid="ignore"):
        values["hong"] = np.sqrt(np.maximum(2 * m - n + 1, 0.0))
    return values


def sweep_range(n: int, start: int, stop: int, theorems: set,
                connected_only: bool) -> dict:
    """Tally vectorizable theorems over masks [start, stop).

    Returns counts, tight-census masks per bound, and ``resolve`` masks that
    the caller must re-check per graph (extremal confirmations, violations).
    """
    counts = {t: {"holds": 0, "vacuous": 0, "violated": 0, "inconclusive": 0}
              for t in theorems}
    tight: dict = {b: [] for b in ("stanley", "hong", "hsf", "lemma3", "thm11")
                   if b in theorems}
    resolve: dict = {}
    want_bip = "lemma1-spectrum-symmetry" in theorems
    want_diam = "lemma2-diameter-distinct" in theorems
    for lo in range(start, stop, BLOCK):
        masks = np.arange(lo, min(lo + BLOCK, stop), dtype=np.int64)
        stats = block_stats(n, masks, want_bip, want_diam)
        if connected_only:
            keep = stats["connected"]
            if not keep.all():
                stats = {
                    key: (value[keep] if isinstance(value, np.ndarray) else value)
                    for key, value in stats.items()
                }
            if len(stats["masks"]) == 0:
                continue
        _tally_block(n, stats, theorems, counts, tight, resolve)
    return {"counts": counts, "tight": tight, "resolve": resolve}


def _collect(resolve: dict, theorem: str, masks: np.ndarray) -> None:
    if len(masks):
        resolve.setdefault(theorem, []).extend(int(x) for x in masks)


def _tally_block(n: int, stats: dict, theorems: set, counts: dict,
                 tight: dict, resolve: dict) -> None:
    masks = stats["masks"]
    m = stats["m"]
    lam1 = stats["lam1"]
    tri = stats["tri"]
    sqrt_m = np.sqrt(m.astype(np.float64))
    bounds = _bound_arrays(stats, n)

    if "mantel" in theorems:
        nonvac = 4 * m > n * n
        holds = nonvac & (tri > 0)
        bad = nonvac & (tri == 0)
        _bump(counts["mantel"], nonvac, holds)
        _collect(resolve, "mantel", masks[bad])
    if "nosal" in theorems:
        nonvac = lam1 > sqrt_m + EQ_EPS
        holds = nonvac & (tri > 0)
        bad = nonvac & (tri == 0)
        _bump(counts["nosal"], nonvac, holds)
        _collect(resolve, "nosal", masks[bad])
    if "spectral-mantel" in theorems:
        nonvac = ~(lam1 < sqrt_m - EQ_EPS)
        holds = nonvac & (tri > 0)
        undecided = nonvac & (tri == 0)
        counts["spectral-mantel"]["vacuous"] += int((~nonvac).sum())
        counts["spectral-mantel"]["holds"] += int(holds.sum())
        _collect(resolve, "spectral-mantel", masks[undecided])
    for bound in ("stanley", "hsf", "lemma3", "thm11"):
        if bound in theorems:
            slack = bounds[bound] - lam1
            holds = slack >= -EQ_EPS
            counts[bound]["holds"] += int(holds.sum())
            _collect(resolve, bound, masks[~holds])
            tight[bound].extend(int(x) for x in masks[np.abs(slack) <= EQ_EPS])
    if "hong" in theorems:
        applicable = stats["min_deg"] >= 1
        slack = bounds["hong"] - lam1
        holds = applicable & (slack >= -EQ_EPS)
        counts["hong"]["vacuous"] += int((~applicable).sum())
        counts["hong"]["holds"] += int(holds.sum())
        _collect(resolve, "hong", masks[applicable & ~holds])
        tight["hong"].extend(
            int(x) for x in masks[applicable & (np.abs(slack) <= EQ_EPS)])
    if "lemma1-spectrum-symmetry" in theorems:
        agree = stats["symmetric"] == stats["bipartite"]
        counts["lemma1-spectrum-symmetry"]["holds"] += int(agree.sum())
        _collect(resolve, "lemma1-spectrum-symmetry", masks[~agree])
    if "lemma2-diameter-distinct" in theorems:
        conn = stats["connected"]
        ok = conn & (stats["distinct"] >= stats["diameter"] + 1)
        counts["lemma2-diameter-distinct"]["vacuous"] += int((~conn).sum())
        counts["lemma2-diameter-distinct"]["holds"] += int(ok.sum())
        _collect(resolve, "lemma2-diameter-distinct", masks[conn & ~ok])


def _bump(slot: dict, nonvac: np.ndarray, holds: np.ndarray) -> None:
    slot["vacuous"] += int((~nonvac).sum())
    slot["holds"] += int(holds.sum())


def audit_range(n: int, start: int, stop: int) -> dict:
    """Identity-and-tightness audit over masks [start, stop).

    Collects everything the exhaustive acceptance criteria consume: the
    triangle trace identity, spectral Mantel candidates, bound slack
    violations, tightness-vs-degree-class masks, threshold-tight connected
    graphs, and the spectrum-symmetry and diameter checks.
    """
    out = {
        "graphs": 0,
        "tri_mismatch": [],
        "mantel_candidates": [],
        "threshold_tight_connected": [],
        "bound_violations": {b: [] for b in
                             ("stanley", "hong", "hsf", "lemma3", "thm11")},
        "hsf_tight_not_class": [],
        "hsf_class_not_tight": [],
        "thm11_above_stanley": [],
        "lemma1_mismatch": [],
        "lemma2_violations": [],
        "tight_counts": {b: 0 for b in
                         ("stanley", "hong", "hsf", "lemma3", "thm11")},
    }
    for lo in range(start, stop, BLOCK):
        masks = np.arange(lo, min(lo + BLOCK, stop), dtype=np.int64)
        stats = block_stats(n, masks, want_bip=True, want_diam=True)
        out["graphs"] += len(masks)
        m = stats["m"]
        lam1 = stats["lam1"]
        tri = stats["tri"]
        sqrt_m = np.sqrt(m.astype(np.float64))
        bounds = _bound_arrays(stats, n)
        connected = stats["connected"]

        spectral_tri = stats["sum_cubes"] / 6.0
        mismatch = (np.abs(spectral_tri - tri) > 1e-6) \
            | (np.rint(spectral_tri).astype(np.int64) != tri)
        out["tri_mismatch"].extend(int(x) for x in masks[mismatch])

        candidates = ~(lam1 < sqrt_m - EQ_EPS) & (tri == 0)
        out["mantel_candidates"].extend(int(x) for x in masks[candidates])
        # The extremal characterization at the threshold concerns
        # triangle-free graphs; connected graphs with lambda_1 = sqrt(m)
        # AND a triangle exist (n=7, m=9, lambda_1=3) and are fine.
        tight_threshold = connected & (tri == 0) \
            & (np.abs(lam1 - sqrt_m) <= EQ_EPS)
        out["threshold_tight_connected"].extend(
            int(x) for x in masks[tight_threshold])

        applicable = {b: np.ones(len(masks), dtype=bool) for b in bounds}
        applicable["hong"] = stats["min_deg"] >= 1
        for bound, values in bounds.items():
            slack = values - lam1
            bad = applicable[bound] & (slack < -EQ_EPS)
            out["bound_violations"][bound].extend(int(x) for x in masks[bad])
            is_tight = applicable[bound] & (np.abs(slack) <= EQ_EPS)
            out["tight_counts"][bound] += int(is_tight.sum())
            if bound == "hsf":
                regular = stats["degrees"].max(axis=1) == stats["min_deg"]
                bideg = (
                    (stats["degrees"] == stats["min_deg"][:, None])
                    | (stats["degrees"] == n - 1)
                ).all(axis=1)
                in_class = regular | bideg
                out["hsf_tight_not_class"].extend(
                    int(x) for x in masks[connected & is_tight & ~in_class])
                out["hsf_class_not_tight"].extend(
                    int(x) for x in masks[connected & in_class & ~is_tight])

        above = bounds["thm11"] > bounds["stanley"] + EQ_EPS
        out["thm11_above_stanley"].extend(int(x) for x in masks[above])

        agree = stats["symmetric"] == stats["bipartite"]
        out["lemma1_mismatch"].extend(int(x) for x in masks[~agree])
        lemma2_bad = connected & (stats["distinct"] < stats["diameter"] + 1)
        out["lemma2_violations"].extend(int(x) for x in masks[lemma2_bad])
    return out


def merge_audits(parts: list[dict]) -> dict:
    merged = parts[0]
    for part in parts[1:]:
        merged["graphs"] += part["graphs"]
        for key, value in part.items():
            if isinstance(value, list):
                merged[key].extend(value)
        for bound in merged["bound_violations"]:
            merged["bound_violations"][bound].extend(
                part["bound_violations"][bound])
            merged["tight_counts"][bound] += part["tight_counts"][bound]
    return merged
