"""Per-graph property checks run over whole catalogues.

Each check takes a :class:`Facts` bundle and returns True when the graph
satisfies the property. Checks that do not apply to a graph (wrong order,
or the premise fails) return True as well, so a suite only ever fails on a
real violation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations, product
from typing import Callable

from . import oracles
from .canonical import CanonicalCode, canonical_form, from_graph6, to_graph6, triad_canonical_form
from .classes import (
    Spider,
    is_minimally_p_connected,
    is_p4_tidy_direct,
    is_p4_tidy_structural,
    split_bruteforce,
    split_hs,
    spider_kind,
)
from .deck import (
    deck_of,
    degree_sequence_from_deck,
    is_p_disconnected_deck,
    is_spider_deck,
)
from .graph_core import (
    Graph,
    Triad,
    bits,
    complement,
    components,
    degree_sequence,
    delete_vertex,
    induced_subgraph,
    is_clique,
    is_stable,
    partners,
)
from .pstructure import (
    StructureCase,
    StructureViolation,
    compose,
    is_1_decomposable,
    is_generalized_split_triad,
    is_module,
    is_p_connected,
    is_separable_triad,
    module_partition,
    p_components,
    separable_bipartitions,
    structure_classify,
)


class Facts:
    """Lazily computed properties of one graph, shared between checks."""

    def __init__(self, g: Graph, code: CanonicalCode | None = None):
        self.g = g
        self._code = code

    @cached_property
    def code(self) -> CanonicalCode:
        return self._code if self._code is not None else canonical_form(self.g)

    @cached_property
    def graph6(self) -> str:
        return self.code.decode("ascii")

    @cached_property
    def p_connected(self) -> bool:
        return is_p_connected(self.g)

    @cached_property
    def p_components(self) -> list[int]:
        return p_components(self.g)

    @cached_property
    def structure(self):
        return structure_classify(self.g)

    @cached_property
    def split(self):
        return split_hs(self.g)

    @cached_property
    def spider(self):
        return spider_kind(self.g)

    @cached_property
    def minimal(self) -> bool:
        return is_minimally_p_connected(self.g)

    @cached_property
    def tidy(self) -> bool:
        return is_p4_tidy_direct(self.g)

    @cached_property
    def one_decomposable(self):
        return is_1_decomposable(self.g)

    @cached_property
    def one_decomposable_strict(self):
        return is_1_decomposable(self.g, strict=True)

    @cached_property
    def deck(self):
        return deck_of(self.g)

    @cached_property
    def separable(self) -> list[tuple[int, int]]:
        return separable_bipartitions(self.g) if self.p_connected else []


def _p_connectivity_definition(f: Facts) -> bool:
    return f.p_connected == oracles.p_connected_by_definition(f.g)


def _p4_self_complementary(f: Facts) -> bool:
    return len(f.g.p4s) == len(complement(f.g).p4s)


def _complement_involution(f: Facts) -> bool:
    return complement(complement(f.g)) == f.g


def _card_edge_counts(f: Facts) -> bool:
    g = f.g
    if any(delete_vertex(g, v).num_edges != g.num_edges - g.degree(v) for v in range(g.n)):
        return False
    if g.n >= 3:
        return sum(delete_vertex(g, v).num_edges for v in range(g.n)) == (g.n - 2) * g.num_edges
    return True


def _separable_unique(f: Facts) -> bool:
    return len(f.separable) <= 1


def _separable_sides(f: Facts) -> bool:
    g = f.g
    for a, b in f.separable:
        if not is_generalized_split_triad(Triad(g, a, b)):
            return False
        if len(components(complement(g), a)) < 2 or len(components(g, b)) < 2:
            return False
    return True


def _split_degree_test(f: Facts) -> bool:
    g, v = f.g, f.split
    if v.is_split != split_bruteforce(g):
        return False
    if v.is_split:
        if not (is_clique(g, v.a) and is_stable(g, v.b)):
            return False
        # maximal clique: no vertex of B sees all of A
        if any(g.rows[x] & v.a == v.a for x in bits(v.b)):
            return False
    return True


def _realizing_orders(g: Graph):
    """Every vertex ordering whose degrees are non-increasing."""
    by_degree: dict[int, list[int]] = {}
    for v in range(g.n):
        by_degree.setdefault(g.degree(v), []).append(v)
    groups = [by_degree[d] for d in sorted(by_degree, reverse=True)]
    for parts in product(*(permutations(grp) for grp in groups)):
        yield [v for part in parts for v in part]


def _split_any_order(f: Facts) -> bool:
    g, v = f.g, f.split
    if not v.is_split:
        return True
    for order in _realizing_orders(g):
        a = sum(1 << x for x in order[: v.m])
        if not (is_clique(g, a) and is_stable(g, g.full_mask ^ a)):
            return False
    return True


def _spider_definition(f: Facts) -> bool:
    thin, thick = oracles.spider_by_definition(f.g)
    kind = f.spider.kind
    return (kind in (Spider.THIN, Spider.BOTH)) == thin and (kind in (Spider.THICK, Spider.BOTH)) == thick


def _spider_duality(f: Facts) -> bool:
    kind, co = f.spider.kind, spider_kind(complement(f.g)).kind
    thin = kind in (Spider.THIN, Spider.BOTH)
    co_thick = co in (Spider.THICK, Spider.BOTH)
    return thin == co_thick


def _spider_structure(f: Facts) -> bool:
    s, g = f.spider, f.g
    if not s.is_spider:
        return True
    if not (is_clique(g, s.a) and is_stable(g, s.b)) or s.a | s.b != g.full_mask:
        return False
    if sorted(s.f) != list(bits(s.b)) or sorted(s.f.values()) != list(bits(s.a)):
        return False
    for leg, head in s.f.items():
        thin_ok = g.rows[leg] == 1 << head
        thick_ok = g.rows[leg] == s.a & ~(1 << head)
        if s.kind is Spider.THIN and not thin_ok:
            return False
        if s.kind is Spider.THICK and not thick_ok:
            return False
        if s.kind is Spider.BOTH and not (thin_ok and s.a.bit_count() == 2):
            return False
    return True


def _minimal_iff_spider(f: Facts) -> bool:
    return f.minimal == f.spider.is_spider


def _p_connected_cards(f: Facts) -> bool:
    g = f.g
    if g.n < 2 or not f.p_connected or f.minimal:
        return True
    return sum(1 for v in range(g.n) if is_p_connected(delete_vertex(g, v))) >= 2


def _structure_cases(f: Facts) -> bool:
    g = f.g
    try:
        st = f.structure
    except StructureViolation:
        return False
    if st.case is StructureCase.SEPARABLE_COMPOSITION:
        rest = g.full_mask & ~st.s
        if not rest or st.s not in f.p_components:
            return False
        if any(g.rows[v] & rest != rest for v in bits(st.a)):
            return False
        if any(g.rows[v] & rest for v in bits(st.b)):
            return False
        sub, keep = induced_subgraph(g, st.s)
        local_a = sum(1 << i for i, v in enumerate(keep) if st.a >> v & 1)
        if not is_separable_triad(Triad(sub, local_a, sub.full_mask ^ local_a)):
            return False
    return True


def _connected_1_decomposable_is_composition(f: Facts) -> bool:
    if f.g.n < 2 or f.one_decomposable is None:
        return True
    case = f.structure.case
    return case is not StructureCase.P_CONNECTED


def _tidy_characterisation(f: Facts) -> bool:
    return f.tidy == is_p4_tidy_structural(f.g)


def _partners_literal(f: Facts) -> bool:
    fast = sorted(partners(f.g, p).bit_count() for p in f.g.p4s)
    return fast == sorted(oracles.partner_counts(f.g))


def _degree_sequence_from_deck(f: Facts) -> bool:
    if f.g.n < 3:
        return True
    return degree_sequence_from_deck(f.deck) == degree_sequence(f.g)


def _p_disconnected_deck(f: Facts) -> bool:
    if f.g.n < 3:
        return True
    return is_p_disconnected_deck(f.deck) == (not f.p_connected)


def _spider_deck(f: Facts) -> bool:
    if f.g.n < 3:
        return True
    return is_spider_deck(f.deck) == f.spider.is_spider


def _deck_relabel(f: Facts) -> bool:
    g = f.g
    perm = list(range(g.n))[::-1]
    return deck_of(g.relabel(perm)) == f.deck


@dataclass(frozen=True)
class Check:
    name: str
    fn: Callable[[Facts], bool]
    max_n: int = 9
    min_n: int = 0
    description: str = ""


CHECKS: dict[str, Check] = {
    c.name: c
    for c in [
        Check("complement-involution", _complement_involution, description="complement twice is identity"),
        Check("card-edge-counts", _card_edge_counts, description="card edges = |E| - deg(v); Kelly sum"),
        Check("p4-self-complementary", _p4_self_complementary, description="G and its complement have equally many P4s"),
        Check("p-connectivity-definition", _p_connectivity_definition, max_n=6, description="co-occurrence test = bipartition scan"),
        Check("partners-literal", _partners_literal, max_n=7, description="partner counts = literal 5-vertex P4 count"),
        Check("separable-unique", _separable_unique, max_n=8, description="at most one separable bipartition"),
        Check("separable-sides", _separable_sides, max_n=7, description="separable triads are generalized split, both sides disconnected"),
        Check("split-degree-test", _split_degree_test, description="degree split test = brute force; maximal clique"),
        Check("split-orderings", _split_any_order, max_n=6, description="any realizing ordering yields a split"),
        Check("spider-definition", _spider_definition, max_n=7, description="degree spider test = literal definition"),
        Check("spider-duality", _spider_duality, description="thin iff complement thick"),
        Check("spider-structure", _spider_structure, description="returned (A, B, f) is a valid spider"),
        Check("minimal-iff-spider", _minimal_iff_spider, description="minimally p-connected iff spider"),
        Check("p-connected-cards", _p_connected_cards, description="two non-articulation vertices when not minimal"),
        Check("structure-cases", _structure_cases, description="exactly one structure case"),
        Check("1-decomposable-not-p-connected", _connected_1_decomposable_is_composition, description="1-decomposable graphs are p-disconnected"),
        Check("tidy-characterisation", _tidy_characterisation, description="P4-tidy by partners = by p-components"),
        Check("degree-sequence-from-deck", _degree_sequence_from_deck, min_n=3, description="deck gives degree sequence"),
        Check("p-disconnected-deck", _p_disconnected_deck, min_n=3, description="deck-level p-disconnection test"),
        Check("spider-deck", _spider_deck, min_n=3, description="deck-level spider test"),
        Check("deck-relabel", _deck_relabel, description="deck is relabelling invariant"),
    ]
}


def applicable(n: int) -> list[Check]:
    return [c for c in CHECKS.values() if c.min_n <= n <= c.max_n]


# -- compositions of generalized split triads ------------------------------

COMPOSITION_SUITE = "composition"
MAX_TRIAD = 6
MAX_H = 4


def generalized_split_triads(graphs: list[Graph]) -> list[Triad]:
    """One triad per isomorphism class among all ordered bipartitions of
    ``graphs`` that are generalized split triads."""
    seen = {}
    for g in graphs:
        full = g.full_mask
        for a in range(full + 1):
            t = Triad(g, a, full ^ a)
            if is_generalized_split_triad(t):
                seen.setdefault(triad_canonical_form(t), t)
    return [seen[k] for k in sorted(seen)]


def composition_ok(t: Triad, h: Graph) -> bool:
    """compose(t, h) is p-disconnected, every p-component stays on one side,
    and the copy of h is a module with associated partition (t.a, t.b)."""
    g = compose(t, h)
    tmask = t.g.full_mask
    hmask = g.full_mask & ~tmask
    if is_p_connected(g):
        return False
    for comp in p_components(g):
        if comp & tmask and comp & hmask:
            return False
    if not is_module(g, hmask):
        return False
    return module_partition(g, hmask) == (t.a, t.b)


def composition_pairs(n: int, triads_by_order: dict[int, list[Triad]], hs_by_order: dict[int, list[Graph]]):
    """(triad, h) pairs whose composition has order ``n``."""
    for k in range(1, MAX_TRIAD + 1):
        j = n - k
        if 1 <= j <= MAX_H:
            for t in triads_by_order.get(k, []):
                for h in hs_by_order.get(j, []):
                    yield t, h


def describe_pair(t: Triad, h: Graph) -> str:
    return f"{to_graph6(t.g)}:A={t.a:#x}:H={to_graph6(h)}"


def parse_pair(text: str) -> tuple[Triad, Graph]:
    g6, a, h6 = text.split(":")
    g = from_graph6(g6)
    a = int(a[2:], 16)
    return Triad(g, a, g.full_mask ^ a), from_graph6(h6[2:])
