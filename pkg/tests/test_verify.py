"""Enumeration, the sweep/fuzz harness, determinism, and replay."""

import pytest

from spectool.errors import OrderTooLargeError
from spectool.families import complete, cycle, star
from spectool.graph import from_edge_mask, to_edge_mask
from spectool.verdicts import CounterexampleReport
from spectool.verify import (
    ALL_THEOREMS,
    VECTORIZABLE,
    SweepConfig,
    TheoremId,
    canonical_form,
    canonical_masks,
    check_theorem,
    enumerate_graphs,
    fuzz,
    labeled_graph_count,
    parse_distribution,
    replay,
    sweep,
)


class TestEnumeration:
    def test_labeled_counts(self):
        assert len(list(enumerate_graphs(3))) == 8
        assert len(list(enumerate_graphs(4))) == 64

    def test_canonical_counts(self):
        # Known isomorphism-class counts for small orders.
        for n, expected in ((1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)):
            assert len(canonical_masks(n)) == expected

    def test_canonical_connected_n4(self):
        graphs = list(enumerate_graphs(4, connected_only=True, dedup="canonical"))
        assert len(graphs) == 6

    def test_too_large_rejected(self):
        with pytest.raises(OrderTooLargeError):
            list(enumerate_graphs(9))
        with pytest.raises(OrderTooLargeError):
            canonical_masks(8)

    def test_canonical_reps_are_orbit_minima(self):
        # Sum of orbit sizes partitions the labeled space.
        from spectool.verify import _orbit_masks, _perm_edge_table

        table = _perm_edge_table(4)
        total = 0
        for mask in canonical_masks(4):
            orbit = {int(x) for x in _orbit_masks(mask, table)}
            assert min(orbit, key=lambda m: _lex_key(m, 6)) == mask
            total += len(orbit)
        assert total == labeled_graph_count(4)

    def test_canonical_form_is_isomorphism_invariant(self):
        g = star(5)
        relabeled = from_edge_mask(5, to_edge_mask(g))
        # Permute vertices: star centered at 4 instead of 0.
        from spectool.graph import from_edges

        h = from_edges(5, [(4, v) for v in range(4)])
        assert canonical_form(g) == canonical_form(h)
        assert canonical_form(relabeled) == canonical_form(g)


def _lex_key(mask: int, nbits: int) -> int:
    return sum(((mask >> e) & 1) << (nbits - 1 - e) for e in range(nbits))


class TestCheckTheorem:
    def test_examples(self):
        assert check_theorem(complete(4), TheoremId.MANTEL).status == "holds"
        assert check_theorem(cycle(5), TheoremId.NOSAL).status == "vacuous"
        verdict = check_theorem(star(5), TheoremId.SPECTRAL_MANTEL)
        assert verdict.status == "holds"
        assert verdict.reason == "extremal_complete_bipartite"

    def test_string_ids_accepted(self):
        assert check_theorem(complete(4), "mantel").status == "holds"

    def test_all_theorems_on_sample(self):
        for theorem in ALL_THEOREMS:
            verdict = check_theorem(complete(5), theorem)
            assert verdict.status in ("holds", "vacuous")


class TestSweep:
    def test_small_sweep_no_violations(self):
        report = sweep(SweepConfig(n_min=1, n_max=4, theorems=ALL_THEOREMS))
        assert report.violated_count() == 0
        assert report.inconclusive_count() == 0
        total = sum(labeled_graph_count(n) for n in range(1, 5))
        for counts in report.totals.values():
            assert sum(counts.values()) == total

    def test_mantel_n4_census(self):
        report = sweep(SweepConfig(n_min=4, n_max=4,
                                   theorems=(TheoremId.MANTEL,)))
        counts = report.totals["mantel"]
        nonvacuous = sum(1 for mask in range(64)
                         if 4 * bin(mask).count("1") > 16)
        assert counts["holds"] == nonvacuous
        assert counts["vacuous"] == 64 - nonvacuous

    def test_hong_tight_census_n5_has_star_and_k5(self):
        from spectool.graph6 import to_graph6

        report = sweep(SweepConfig(n_min=5, n_max=5,
                                   theorems=(TheoremId.HONG,)))
        tight = set(report.tight["hong"])
        assert to_graph6(complete(5)) in tight
        assert to_graph6(star(5)) in tight

    def test_vector_engine_matches_reference(self):
        spectral = tuple(sorted(VECTORIZABLE, key=lambda t: t.value))
        fast = sweep(SweepConfig(n_min=1, n_max=5, theorems=spectral,
                                 jobs=1))
        # Force the per-graph reference path by adding one slow theorem,
        # then compare the shared counters.
        slow = sweep(SweepConfig(
            n_min=1, n_max=5,
            theorems=spectral + (TheoremId.DECOMPOSITION_IDENTITY,), jobs=1))
        for t in spectral:
            assert fast.totals[t.value] == slow.totals[t.value]
        assert fast.tight == {k: v for k, v in slow.tight.items()}

    def test_jobs_do_not_change_report(self):
        config1 = SweepConfig(n_min=1, n_max=5, theorems=ALL_THEOREMS, jobs=1)
        config2 = SweepConfig(n_min=1, n_max=5, theorems=ALL_THEOREMS, jobs=3)
        assert sweep(config1).payload()["totals"] \
            == sweep(config2).payload()["totals"]

    def test_canonical_sweep_consistent_with_labeled(self):
        labeled = sweep(SweepConfig(n_min=4, n_max=4,
                                    theorems=(TheoremId.SPECTRAL_MANTEL,)))
        canonical = sweep(SweepConfig(n_min=4, n_max=4, dedup="canonical",
                                      theorems=(TheoremId.SPECTRAL_MANTEL,)))
        assert sum(canonical.totals["spectral-mantel"].values()) == 11
        assert labeled.violated_count() == canonical.violated_count() == 0

    def test_config_validation(self):
        with pytest.raises(OrderTooLargeError):
            sweep(SweepConfig(n_max=9))
        with pytest.raises(OrderTooLargeError):
            sweep(SweepConfig(n_max=8))  # needs long_run
        with pytest.raises(OrderTooLargeError):
            sweep(SweepConfig(n_max=8, dedup="canonical", long_run=True))
        with pytest.raises(ValueError):
            sweep(SweepConfig(n_min=0))


class TestFuzz:
    def test_deterministic_given_seed(self):
        kwargs = dict(count=50, seed=123,
                      theorems=(TheoremId.STANLEY, TheoremId.THM11))
        rep1 = fuzz("gnp:12,0.4", **kwargs)
        rep2 = fuzz("gnp:12,0.4", **kwargs)
        assert rep1.payload() == rep2.payload()
        assert rep1.to_json() == rep2.to_json()

    def test_jobs_do_not_change_report(self):
        rep1 = fuzz("gnp:10,0.5", 40, 7, (TheoremId.HONG,), jobs=1)
        rep2 = fuzz("gnp:10,0.5", 40, 7, (TheoremId.HONG,), jobs=4)
        assert rep1.payload() == rep2.payload()

    def test_distributions(self):
        rep = fuzz("bipartite:4,5,0.6", 30, 3,
                   (TheoremId.LEMMA1_SPECTRUM_SYMMETRY,))
        assert rep.violated_count() == 0
        rep = fuzz("regular:10,3", 30, 3, (TheoremId.THM11,))
        assert rep.violated_count() == 0
        # every connected k-regular sample is tight for thm11
        assert len(rep.tight["thm11"]) > 0

    def test_parse_distribution(self):
        assert parse_distribution("gnp:30,0.5") == ("gnp", 30, 0.5)
        assert parse_distribution("bipartite:8,8,0.7") == ("bipartite", 8, 8, 0.7)
        assert parse_distribution("regular:20,3") == ("regular", 20, 3)
        for bad in ("gnp:30,1.5", "gnp:30", "regular:10,11", "nope:1",
                    "regular:9,3"):
            with pytest.raises(ValueError):
                parse_distribution(bad)


class TestReplay:
    def test_replay_reproduces_violation(self, monkeypatch):
        # No true theorem violates, so fabricate one checker failure and
        # confirm the embedded graph replays to the same verdict.
        report = CounterexampleReport(
            theorem="mantel", graph_format="graph6",
            graph="C~", quantities={})
        verdict = replay(report)
        assert verdict.status == "holds"  # K4 actually satisfies Mantel

        from spectool.cycles import consecutive_even_cycles_check
        from spectool.graph6 import from_graph6

        forced = consecutive_even_cycles_check(from_graph6("Bw"), l_max=4)
        assert forced.status == "violated"
        replayed = replay(forced.counterexample)
        # Default l_max for K3 is ceil(3/28) < 4, so the default checker is
        # vacuous; the report still parses and reruns deterministically.
        assert replayed.status in ("vacuous", "violated")

    def test_replay_edge_list_format(self):
        report = CounterexampleReport(
            theorem="stanley", graph_format="edgelist",
            graph="3 2\n0 1\n1 2", quantities={})
        assert replay(report).status == "holds"
