import pytest
from hypothesis import given, settings

from p4recon import oracles
from p4recon.canonical import is_isomorphic
from p4recon.enumeration import all_graphs
from p4recon.graph_core import (
    CapacityError,
    Graph,
    Triad,
    complement,
    complete_graph,
    components,
    cycle_graph,
    disjoint_union,
    empty_graph,
    is_clique,
    is_stable,
    mask_of,
)
from p4recon.pstructure import (
    NotAModuleError,
    PreconditionError,
    StructureCase,
    StructureViolation,
    compose,
    find_separable_partition,
    is_1_decomposable,
    is_generalized_split_triad,
    is_module,
    is_p_connected,
    is_separable_triad,
    module_partition,
    p4_cooccurrence,
    p_components,
    separable_bipartitions,
    structure_classify,
)

from conftest import C4, C5, K1, K2, P4, P4_PLUS_K1, P5, thin_spider
from test_graph_core import graphs

MIDS, ENDS = 0b0110, 0b1001
P4_TRIAD = Triad(P4, MIDS, ENDS)
BULL = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 4)])


class TestModules:
    def test_whole_set(self):
        assert is_module(C5, C5.full_mask)

    def test_p4_midpoints_not_module(self):
        assert not is_module(P4, mask_of([1, 2]))

    def test_c4_opposite_pair(self):
        assert is_module(C4, mask_of([0, 2]))
        assert module_partition(C4, mask_of([0, 2])) == (mask_of([1, 3]), 0)

    def test_trivial_modules(self):
        assert is_module(C5, 0)
        assert all(is_module(C5, 1 << v) for v in range(5))

    def test_partition_of_join(self):
        # vertex 0 joined to the K2 {1, 2} and to the lone vertex 3
        g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2)])
        assert module_partition(g, mask_of([1, 2])) == (1 << 0, 1 << 3)

    def test_partition_of_everything(self):
        assert module_partition(C5, C5.full_mask) == (0, 0)

    def test_partition_errors(self):
        with pytest.raises(NotAModuleError):
            module_partition(P4, mask_of([1, 2]))
        with pytest.raises(ValueError):
            module_partition(P4, 0)


class TestCompose:
    def test_p4_with_k1_is_bull(self):
        g = compose(P4_TRIAD, K1)
        assert is_isomorphic(g, BULL)
        assert is_module(g, 1 << 4)

    def test_empty_h(self):
        assert compose(P4_TRIAD, empty_graph(0)) == P4

    @given(graphs(max_n=5), graphs(max_n=4))
    @settings(max_examples=60)
    def test_module_round_trip(self, g, h):
        a = g.full_mask & 0b10101
        t = Triad(g, a, g.full_mask ^ a)
        c = compose(t, h)
        hmask = c.full_mask ^ g.full_mask
        assert is_module(c, hmask)
        if h.n:
            assert module_partition(c, hmask) == (t.a, t.b)

    def test_capacity(self):
        t = Triad(empty_graph(20), 0, (1 << 20) - 1)
        with pytest.raises(CapacityError):
            compose(t, empty_graph(13))


class TestCooccurrence:
    def test_c4_edgeless(self):
        assert p4_cooccurrence(C4) == empty_graph(4)

    def test_p4_complete(self):
        assert p4_cooccurrence(P4) == complete_graph(4)

    def test_p4_plus_k1(self):
        assert p4_cooccurrence(P4_PLUS_K1) == disjoint_union(complete_graph(4), K1)

    def test_p_components(self):
        assert sorted(p_components(P4_PLUS_K1)) == [0b01111, 0b10000]
        assert sorted(p_components(C4)) == [1, 2, 4, 8]
        assert p_components(P5) == [0b11111]

    @pytest.mark.parametrize("g, expected", [(P4, True), (C5, True), (K2, False), (P4_PLUS_K1, False)])
    def test_is_p_connected(self, g, expected):
        assert is_p_connected(g) is expected

    @pytest.mark.parametrize("n", [2, 3])
    def test_small_graphs_not_p_connected(self, n):
        assert not any(is_p_connected(g) for g in oracles.labelled_graphs(n))

    @pytest.mark.parametrize("n", range(1, 7))
    def test_matches_bipartition_definition(self, n):
        for g in all_graphs(n).graphs:
            assert is_p_connected(g) == oracles.p_connected_by_definition(g)

    @given(graphs(max_n=7))
    @settings(max_examples=50)
    def test_complement_preserves_p_components(self, g):
        assert sorted(p_components(g)) == sorted(p_components(complement(g)))


class TestSeparable:
    def test_p4(self):
        assert is_separable_triad(P4_TRIAD)
        assert not is_separable_triad(Triad(P4, ENDS, MIDS))
        assert find_separable_partition(P4) == (MIDS, ENDS)

    def test_c5_has_none(self):
        full = C5.full_mask
        assert not any(is_separable_triad(Triad(C5, a, full ^ a)) for a in range(1, full))
        assert find_separable_partition(C5) is None

    def test_thin_spider(self):
        g = thin_spider(3)
        assert find_separable_partition(g, verify=True) == (0b000111, 0b111000)

    def test_requires_p_connected(self):
        with pytest.raises(PreconditionError):
            find_separable_partition(P4_PLUS_K1)

    def test_empty_side_rejected(self):
        assert not is_separable_triad(Triad(P4, 0, P4.full_mask))

    @pytest.mark.parametrize("n", range(4, 8))
    def test_at_most_one_and_sides_split(self, n):
        for g in all_graphs(n).graphs:
            if not is_p_connected(g):
                continue
            found = separable_bipartitions(g)
            assert len(found) <= 1
            assert find_separable_partition(g) == (found[0] if found else None)
            for a, b in found:
                assert is_generalized_split_triad(Triad(g, a, b))
                assert len(components(complement(g), a)) >= 2
                assert len(components(g, b)) >= 2


class TestGeneralizedSplit:
    def test_split_graph(self):
        g = thin_spider(3)
        assert is_generalized_split_triad(Triad(g, 0b000111, 0b111000))

    def test_p4(self):
        assert is_generalized_split_triad(P4_TRIAD)

    def test_c5_adjacent_pair(self):
        assert not is_generalized_split_triad(Triad(C5, 0b00011, 0b11100))


class TestStructure:
    def test_disconnected(self):
        assert structure_classify(empty_graph(2)).case is StructureCase.DISCONNECTED

    def test_antidisconnected(self):
        assert structure_classify(complete_graph(3)).case is StructureCase.ANTIDISCONNECTED

    def test_p_connected(self):
        assert structure_classify(C5).case is StructureCase.P_CONNECTED

    def test_separable_composition(self):
        g = compose(P4_TRIAD, K2)
        st = structure_classify(g)
        assert st.case is StructureCase.SEPARABLE_COMPOSITION
        assert (st.s, st.a, st.b) == (0b001111, MIDS, ENDS)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_never_violates(self, n):
        for g in all_graphs(n).graphs:
            st = structure_classify(g)
            if st.case is StructureCase.SEPARABLE_COMPOSITION:
                assert st.s in p_components(g)
                assert st.a | st.b == st.s

    def test_violation_is_runtime_error(self):
        assert issubclass(StructureViolation, RuntimeError)


class TestOneDecomposable:
    def test_c5_absent(self):
        assert is_1_decomposable(C5) is None

    def test_composition_with_c5(self):
        g = compose(P4_TRIAD, C5)
        assert is_1_decomposable(g) is not None
        a, b = module_partition(g, g.full_mask ^ P4.full_mask)
        assert is_clique(g, a) and is_stable(g, b)

    def test_found_module_is_valid(self):
        for g in all_graphs(6).graphs:
            found = is_1_decomposable(g)
            if found is None:
                continue
            m, a, b = found
            assert is_module(g, m) and 0 < m.bit_count() < g.n
            assert (a, b) == module_partition(g, m)
            assert is_clique(g, a) and is_stable(g, b)

    def test_strict_needs_two_vertices(self):
        for g in all_graphs(5).graphs:
            found = is_1_decomposable(g, strict=True)
            if found is not None:
                assert 1 < found[0].bit_count() < g.n

    def test_p_disconnected_split_graphs(self):
        # split graphs that are not spiders are p-disconnected, and decomposable
        from p4recon.classes import split_hs
        for g in all_graphs(6).graphs:
            if split_hs(g).is_split and not is_p_connected(g):
                assert is_1_decomposable(g) is not None

    def test_decomposable_graphs_are_p_disconnected(self):
        for n in range(2, 8):
            for g in all_graphs(n).graphs:
                if is_1_decomposable(g) is not None:
                    assert not is_p_connected(g)
