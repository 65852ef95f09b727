#!/usr/bin/env python3
"""Tour of the spectral basics: eigenvalues, identities, and radius bounds.

Walks a few named families through the eigensolver and prints every
spectral-radius bound with its slack, flagging the tight ones.
"""

from spectool import (
    basic_stats,
    complete,
    complete_bipartite,
    count_triangles_brute,
    cycle,
    eigendecompose,
    evaluate_all,
    path,
    petersen,
    power_iteration_radius,
    star,
    triangle_count_spectral,
)

FAMILIES = [
    ("K_5", complete(5)),
    ("K_{2,3}", complete_bipartite(2, 3)),
    ("C_5", cycle(5)),
    ("P_6", path(6)),
    ("star K_{1,5}", star(6)),
    ("Petersen", petersen()),
]

for name, g in FAMILIES:
    stats = basic_stats(g)
    spec = eigendecompose(g)
    print(f"=== {name}: n={g.n}, m={stats.m}, "
          f"degrees {stats.min_degree}..{stats.max_degree}")
    rounded = ", ".join(f"{v:+.4f}" for v in spec.eigenvalues)
    print(f"  spectrum: [{rounded}]  (residual {spec.residual:.1e})")

    # Trace identities: sum lambda = 0, sum lambda^2 = 2m,
    # sum lambda^3 = 6 * triangle count.
    sq = float((spec.eigenvalues ** 2).sum())
    print(f"  sum lambda^2 = {sq:.6f} = 2m = {2 * stats.m}")
    spectral_tri = triangle_count_spectral(spec)
    print(f"  triangles: spectral {spectral_tri:.6f}, "
          f"brute {count_triangles_brute(g)}")

    lam_power = power_iteration_radius(g)
    print(f"  lambda_1 = {spec.lambda1:.9f}; power iteration agrees to "
          f"{abs(spec.lambda1 - lam_power):.1e}")

    for r in evaluate_all(g, spec):
        if r.skipped is not None:
            print(f"    {r.kind.value:>8}: skipped ({r.skipped})")
            continue
        marker = "  <- tight" if r.tight else ""
        consistent = ""
        if r.tight and r.extremal_class_consistent is not None:
            consistent = f" (extremal class consistent: "\
                f"{r.extremal_class_consistent})"
        print(f"    {r.kind.value:>8}: {r.bound_value:.6f} "
              f"slack {r.slack:+.2e}{marker}{consistent}")
    print()

print("Note how every regular graph is tight for the closed-neighborhood")
print("bound: max closed sum is k(k+1), and (-1+sqrt(1+4k(k+1)))/2 = k.")
for k, g in ((2, cycle(7)), (3, petersen()), (4, complete(5))):
    from spectool import BoundKind, bound_value

    value = bound_value(g, BoundKind.CLOSED_NEIGHBORHOOD)
    print(f"  k={k}: bound = {value:.12f}")
