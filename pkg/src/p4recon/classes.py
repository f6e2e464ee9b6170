"""Recognisers for split graphs, spiders, minimally p-connected graphs,
quasi-spiders and P4-tidy graphs."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

from .canonical import canonical_form
from .graph_core import (
    Graph,
    bits,
    complement,
    cycle_graph,
    delete_vertex,
    induced_subgraph,
    is_clique,
    is_stable,
    path_graph,
    partners,
)
from .pstructure import is_module, is_p_connected, p_components


@dataclass(frozen=True)
class SplitVerdict:
    is_split: bool
    m: int
    a: int = 0
    b: int = 0


def _hs_index(degrees: Sequence[int]) -> int:
    """Largest 1-based ``i`` with ``degrees[i-1] >= i - 1`` for a descending sequence."""
    m = 0
    for i, d in enumerate(degrees, start=1):
        if d >= i - 1:
            m = i
    return m


def hs_equation_holds(degrees: Sequence[int]) -> tuple[bool, int]:
    """Evaluate the Hammer-Simeone equality on a descending degree sequence.

    Returns ``(holds, m)``.
    """
    m = _hs_index(degrees)
    lhs = sum(degrees[:m])
    rhs = m * (m - 1) + sum(degrees[m:])
    return lhs == rhs, m


def split_hs(g: Graph) -> SplitVerdict:
    """Split test from the degree sequence alone.

    When the graph is split, the ``m`` highest-degree vertices (ties broken by
    smaller index) form a maximal clique and the rest a stable set.
    """
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    holds, m = hs_equation_holds([g.degree(v) for v in order])
    if not holds:
        return SplitVerdict(False, m)
    a = 0
    for v in order[:m]:
        a |= 1 << v
    return SplitVerdict(True, m, a, g.full_mask & ~a)


def split_bruteforce(g: Graph) -> bool:
    full = g.full_mask
    return any(is_clique(g, a) and is_stable(g, full & ~a) for a in range(full + 1))


class Spider(enum.Enum):
    NOT_SPIDER = "NotSpider"
    THIN = "Thin"
    THICK = "Thick"
    BOTH = "Both"


@dataclass(frozen=True)
class SpiderKind:
    """Spider verdict with the clique ``a``, the legs ``b`` and the bijection
    ``f`` from legs to clique vertices (as a dict)."""

    kind: Spider
    a: int = 0
    b: int = 0
    f: dict[int, int] = field(default_factory=dict)

    @property
    def is_spider(self) -> bool:
        return self.kind is not Spider.NOT_SPIDER


def thin_spider_degrees(degrees: Sequence[int]) -> bool:
    """Whether a descending degree sequence belongs to a thin spider.

    Needs the split equality plus degree ``m`` on the first ``m`` vertices and
    degree 1 on the rest. Sequences shorter than 4 are rejected: a spider here
    has a clique of at least two vertices.
    """
    if len(degrees) < 4:
        return False
    holds, m = hs_equation_holds(degrees)
    return holds and all(d == m for d in degrees[:m]) and all(d == 1 for d in degrees[m:])


def spider_degrees(degrees: Sequence[int]) -> tuple[bool, bool]:
    """``(thin, thick)`` from the degree sequence; thick is thin on the complement."""
    n = len(degrees)
    co = sorted((n - 1 - d for d in degrees), reverse=True)
    return thin_spider_degrees(degrees), thin_spider_degrees(co)


def _thin_structure(g: Graph) -> tuple[int, int, dict[int, int]]:
    v = split_hs(g)
    f = {b: g.rows[b].bit_length() - 1 for b in bits(v.b)}
    return v.a, v.b, f


def spider_kind(g: Graph) -> SpiderKind:
    degrees = sorted((g.degree(v) for v in range(g.n)), reverse=True)
    thin, thick = spider_degrees(degrees)
    if thin:
        a, b, f = _thin_structure(g)
        return SpiderKind(Spider.BOTH if thick else Spider.THIN, a, b, f)
    if thick:
        # complement of a thick spider is a thin one with the roles of the sides swapped
        co_a, co_b, co_f = _thin_structure(complement(g))
        return SpiderKind(Spider.THICK, co_b, co_a, {b: a for a, b in co_f.items()})
    return SpiderKind(Spider.NOT_SPIDER)


def is_minimally_p_connected(g: Graph) -> bool:
    if not is_p_connected(g):
        return False
    return not any(is_p_connected(delete_vertex(g, v)) for v in range(g.n))


class Quasi(enum.Enum):
    NO = "No"
    QUASI_URCHIN = "QuasiUrchin"
    QUASI_STARFISH = "QuasiStarfish"
    BOTH = "Both"


def _contractions(g: Graph):
    # a 2-vertex module {u, w} contracts to u by deleting w
    for u in range(g.n):
        for w in range(u + 1, g.n):
            if is_module(g, 1 << u | 1 << w):
                yield delete_vertex(g, w)


def quasi_kind(g: Graph) -> Quasi:
    """Spider with at most one vertex blown up into a 2-vertex module."""
    urchin = starfish = False
    for h in [g, *_contractions(g)]:
        kind = spider_kind(h).kind
        urchin = urchin or kind in (Spider.THIN, Spider.BOTH)
        starfish = starfish or kind in (Spider.THICK, Spider.BOTH)
        if urchin and starfish:
            return Quasi.BOTH
    if urchin:
        return Quasi.QUASI_URCHIN
    if starfish:
        return Quasi.QUASI_STARFISH
    return Quasi.NO


def is_p4_tidy_direct(g: Graph) -> bool:
    return all(partners(g, p).bit_count() <= 1 for p in g.p4s)


_P5 = canonical_form(path_graph(5))
_CO_P5 = canonical_form(complement(path_graph(5)))
_C5 = canonical_form(cycle_graph(5))


def is_p4_tidy_structural(g: Graph) -> bool:
    """Every nontrivial p-component is a P5, its complement, a C5, or a quasi-spider."""
    for s in p_components(g):
        if s.bit_count() == 1:
            continue
        sub, _ = induced_subgraph(g, s)
        if canonical_form(sub) in (_P5, _CO_P5, _C5):
            continue
        if quasi_kind(sub) is Quasi.NO:
            return False
    return True


__all__ = [
    "SplitVerdict",
    "Spider",
    "SpiderKind",
    "Quasi",
    "hs_equation_holds",
    "split_hs",
    "split_bruteforce",
    "thin_spider_degrees",
    "spider_degrees",
    "spider_kind",
    "is_minimally_p_connected",
    "quasi_kind",
    "is_p4_tidy_direct",
    "is_p4_tidy_structural",
]
