import random
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from p4recon import oracles
from p4recon.canonical import (
    CanonicalCode,
    Graph6Error,
    canonical_form,
    canonical_graph,
    from_graph6,
    is_isomorphic,
    to_graph6,
    triad_canonical_form,
)
from p4recon.graph_core import (
    CapacityError,
    Graph,
    Triad,
    complete_graph,
    disjoint_union,
    empty_graph,
    path_graph,
)

from conftest import C4, C5, P4, random_graph
from test_graph_core import graphs

PAW = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])


class TestGraph6:
    def test_p4_is_Ch(self):
        assert to_graph6(P4) == "Ch"
        assert from_graph6("Ch") == P4

    def test_single_vertex(self):
        assert to_graph6(empty_graph(1)) == "@"
        assert from_graph6("@") == empty_graph(1)

    def test_empty_order(self):
        assert to_graph6(empty_graph(0)) == "?"
        assert from_graph6("?").n == 0

    def test_header_skipped(self):
        assert from_graph6(">>graph6<<Ch\n") == P4

    @pytest.mark.parametrize("n", range(6))
    def test_round_trip_exhaustive(self, n):
        for g in oracles.labelled_graphs(n):
            assert from_graph6(to_graph6(g)) == g

    @pytest.mark.parametrize("text", ["", "C", "Chh", "C!", "C\x7f"])
    def test_malformed(self, text):
        with pytest.raises(Graph6Error):
            from_graph6(text)

    def test_nonzero_padding_rejected(self):
        # n=4 has 6 bits, so use n=3 (3 bits + 3 padding) with a padding bit set
        with pytest.raises(Graph6Error):
            from_graph6("B@")

    def test_too_many_vertices(self):
        with pytest.raises(CapacityError):
            from_graph6("~?@?")
        with pytest.raises(CapacityError):
            from_graph6(chr(63 + 33) + "?" * 88)

    def test_thirty_two_vertices(self):
        g = path_graph(32)
        assert from_graph6(to_graph6(g)) == g


class TestCanonicalForm:
    def test_relabelled_p4(self):
        other = Graph.from_edges(4, [(2, 0), (0, 3), (3, 1)])
        assert canonical_form(P4) == canonical_form(other)
        assert is_isomorphic(P4, other)

    def test_p4_vs_c4(self):
        assert canonical_form(P4) != canonical_form(C4)
        assert not is_isomorphic(P4, C4)

    def test_paw_has_one_code(self):
        codes = {canonical_form(PAW.relabel(p)) for p in permutations(range(4))}
        assert len(codes) == 1

    def test_code_carries_order(self):
        code = canonical_form(C5)
        assert isinstance(code, CanonicalCode)
        assert code.n == 5
        assert is_isomorphic(code.graph(), C5)

    def test_canonical_graph_is_fixed_point(self):
        h = canonical_graph(C5)
        assert canonical_graph(h) == h
        assert to_graph6(h) == canonical_form(C5).decode()

    def test_different_orders_never_collide(self):
        assert canonical_form(empty_graph(3)) != canonical_form(empty_graph(4))

    @pytest.mark.parametrize("n", range(1, 9))
    def test_random_relabellings(self, n):
        rng = random.Random(n)
        for _ in range(100):
            g = random_graph(n, rng, rng.random())
            perm = list(range(n))
            rng.shuffle(perm)
            assert canonical_form(g) == canonical_form(g.relabel(perm))

    @pytest.mark.parametrize("n", range(0, 6))
    def test_distinct_codes_match_class_count(self, n):
        assert len({canonical_form(g) for g in oracles.labelled_graphs(n)}) == oracles.burnside_count(n)

    @given(graphs(max_n=7), st.randoms())
    @settings(max_examples=80)
    def test_symmetric_and_asymmetric_graphs(self, g, r):
        perm = list(range(g.n))
        r.shuffle(perm)
        assert canonical_form(g.relabel(perm)) == canonical_form(g)

    def test_highly_symmetric_graphs(self):
        for g in (complete_graph(12), empty_graph(12), disjoint_union(complete_graph(6), complete_graph(6))):
            perm = list(range(12))
            random.Random(0).shuffle(perm)
            assert canonical_form(g.relabel(perm)) == canonical_form(g)


def _triads_isomorphic(t1: Triad, t2: Triad) -> bool:
    """Permutation search for an isomorphism mapping A onto A and B onto B."""
    g1, g2 = t1.g, t2.g
    if g1.n != g2.n:
        return False
    n = g1.n
    for perm in permutations(range(n)):
        if any((t1.a >> v & 1) != (t2.a >> perm[v] & 1) for v in range(n)):
            continue
        if g1.relabel(perm) == g2:
            return True
    return False


class TestTriadCode:
    MIDS, ENDS = 0b0110, 0b1001

    def test_relabelling_invariant(self):
        base = triad_canonical_form(Triad(P4, self.MIDS, self.ENDS))
        for perm in permutations(range(4)):
            g = P4.relabel(perm)
            a = sum(1 << perm[v] for v in (1, 2))
            assert triad_canonical_form(Triad(g, a, g.full_mask ^ a)) == base

    def test_sides_are_ordered(self):
        assert triad_canonical_form(Triad(P4, self.MIDS, self.ENDS)) != triad_canonical_form(
            Triad(P4, self.ENDS, self.MIDS))

    def test_two_k2_swap(self):
        g = disjoint_union(complete_graph(2), complete_graph(2))
        t1, t2 = Triad(g, 0b0011, 0b1100), Triad(g, 0b1100, 0b0011)
        verdict = _triads_isomorphic(t1, t2)
        assert verdict is True
        assert (triad_canonical_form(t1) == triad_canonical_form(t2)) == verdict

    @pytest.mark.parametrize("n", range(1, 5))
    def test_exhaustive_against_permutation_search(self, n):
        triads = [Triad(g, a, g.full_mask ^ a)
                  for g in oracles.labelled_graphs(n) for a in range(1 << n)]
        rng = random.Random(n)
        sample = rng.sample(triads, min(len(triads), 120))
        for t1 in sample[:40]:
            for t2 in sample:
                same = triad_canonical_form(t1) == triad_canonical_form(t2)
                assert same == _triads_isomorphic(t1, t2)

    @given(graphs(max_n=7), st.data())
    @settings(max_examples=60)
    def test_triad_code_refines_graph_code(self, g, data):
        a1 = data.draw(st.integers(0, g.full_mask))
        a2 = data.draw(st.integers(0, g.full_mask))
        t1, t2 = Triad(g, a1, g.full_mask ^ a1), Triad(g, a2, g.full_mask ^ a2)
        if triad_canonical_form(t1) == triad_canonical_form(t2):
            assert a1.bit_count() == a2.bit_count()
        perm = list(range(g.n))[::-1]
        h = g.relabel(perm)
        a3 = sum(1 << perm[v] for v in range(g.n) if a1 >> v & 1)
        t3 = Triad(h, a3, h.full_mask ^ a3)
        assert triad_canonical_form(t1) == triad_canonical_form(t3)
        assert canonical_form(t1.g) == canonical_form(t3.g)


class TestAgainstNetworkx:
    """networkx ships its own graph6 codec and isomorphism test; use both as oracles."""

    nx = pytest.importorskip("networkx")

    def _to_nx(self, g):
        h = self.nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges())
        return h

    @given(graphs(max_n=12))
    @settings(max_examples=100)
    def test_graph6_bytes_match(self, g):
        if g.n == 0:
            return
        expected = self.nx.to_graph6_bytes(self._to_nx(g), header=False).strip().decode()
        assert to_graph6(g) == expected

    def test_isomorphism_verdicts_match(self):
        rng = random.Random(5)
        for _ in range(300):
            n = rng.randint(1, 7)
            g1, g2 = random_graph(n, rng), random_graph(n, rng)
            assert is_isomorphic(g1, g2) == self.nx.is_isomorphic(self._to_nx(g1), self._to_nx(g2))
