"""Graph generators: named families and seeded random models."""

import random

from .errors import InvalidOrderError
from .graph import Graph, from_edges


def complete(n: int) -> Graph:
    """K_n."""
    if n < 0:
        raise InvalidOrderError("n must be nonnegative")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}: part A is vertices 0..a-1, part B is a..a+b-1."""
    if a < 0 or b < 0:
        raise InvalidOrderError("part sizes must be nonnegative")
    mask_a = (1 << a) - 1
    mask_b = ((1 << (a + b)) - 1) ^ mask_a
    rows = [mask_b] * a + [mask_a] * b
    return Graph(a + b, tuple(rows))


def cycle(n: int) -> Graph:
    """C_n (requires n >= 3)."""
    if n < 3:
        raise InvalidOrderError("a cycle needs at least 3 vertices")
    return from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def path(n: int) -> Graph:
    """P_n on n vertices (n - 1 edges)."""
    if n < 0:
        raise InvalidOrderError("n must be nonnegative")
    return from_edges(n, [(v, v + 1) for v in range(n - 1)])


def star(n: int) -> Graph:
    """K_{1,n-1} with the center at vertex 0."""
    if n < 1:
        raise InvalidOrderError("a star needs at least 1 vertex")
    return from_edges(n, [(0, v) for v in range(1, n)])


def petersen() -> Graph:
    """The Petersen graph: outer C_5, inner pentagram, spokes."""
    edges = [(v, (v + 1) % 5) for v in range(5)]
    edges += [(5 + v, 5 + (v + 2) % 5) for v in range(5)]
    edges += [(v, v + 5) for v in range(5)]
    return from_edges(10, edges)


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p), deterministic for a fixed seed."""
    if n < 0:
        raise InvalidOrderError("n must be nonnegative")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p = {p} outside [0, 1]")
    rng = random.Random(seed)
    edges = [
        (u, v) for v in range(n) for u in range(v) if rng.random() < p
    ]
    return from_edges(n, edges)


def random_bipartite(a: int, b: int, p: float, seed: int) -> Graph:
    """Bipartite G(a, b, p): each of the a*b cross pairs kept with probability p."""
    if a < 0 or b < 0:
        raise InvalidOrderError("part sizes must be nonnegative")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p = {p} outside [0, 1]")
    rng = random.Random(seed)
    edges = [
        (u, a + v) for v in range(b) for u in range(a) if rng.random() < p
    ]
    return from_edges(a + b, edges)


def random_regular(n: int, k: int, seed: int) -> Graph:
    """Random k-regular graph via the pairing model, deterministic per seed.

    Stub pairings with self-loops or repeated edges are discarded and redrawn
    from the same stream, so the draw always terminates for feasible (n, k).
    """
    if n < 0 or k < 0:
        raise InvalidOrderError("n and k must be nonnegative")
    if k >= n or (n * k) % 2:
        raise InvalidOrderError(f"no {k}-regular graph on {n} vertices")
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(k)]
    while True:
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v or (min(u, v), max(u, v)) in edges:
                ok = False
                break
            edges.add((min(u, v), max(u, v)))
        if ok:
            return from_edges(n, edges)
