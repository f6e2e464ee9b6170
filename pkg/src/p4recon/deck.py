"""Decks of vertex-deleted subgraphs and what can be read off them."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import islice
from typing import Iterable, Iterator

from .canonical import CanonicalCode, canonical_form, from_graph6
from .classes import spider_degrees
from .graph_core import Graph, Triad, delete_vertex, induced_subgraph
from .pstructure import compose, is_p_connected


class DeckError(ValueError):
    pass


class UnderdeterminedDeckError(DeckError):
    pass


class InconsistentDeckError(DeckError):
    pass


class DeckFormatError(DeckError):
    pass


@dataclass(frozen=True)
class Deck:
    """Order of the original graph and its cards, kept sorted so that equal
    multisets compare equal."""

    n: int
    cards: tuple[CanonicalCode, ...]

    def __post_init__(self):
        object.__setattr__(self, "cards", tuple(sorted(CanonicalCode(c) for c in self.cards)))
        if len(self.cards) != self.n:
            raise DeckFormatError(f"deck of order {self.n} has {len(self.cards)} cards")
        for c in self.cards:
            if c.n != self.n - 1:
                raise DeckFormatError(f"card {c!r} has order {c.n}, expected {self.n - 1}")

    @property
    def fingerprint(self) -> bytes:
        return b"\n".join([str(self.n).encode(), *self.cards])

    def card_graphs(self) -> list[Graph]:
        return [c.graph() for c in self.cards]


@dataclass(frozen=True)
class ReconstructionReport:
    deck: Deck
    matches: tuple[CanonicalCode, ...]

    @property
    def unique(self) -> bool:
        return len(self.matches) == 1


def deck_of(g: Graph) -> Deck:
    if g.n < 1:
        raise DeckError("the empty graph has no deck")
    return Deck(g.n, tuple(canonical_form(delete_vertex(g, v)) for v in range(g.n)))


def decks_equal(d1: Deck, d2: Deck) -> bool:
    return d1.n == d2.n and d1.cards == d2.cards


def edge_count_from_deck(d: Deck) -> int:
    """Each edge survives on exactly ``n - 2`` cards."""
    if d.n < 3:
        raise UnderdeterminedDeckError(f"edge count is not determined by a deck of order {d.n}")
    total = sum(g.num_edges for g in d.card_graphs())
    edges, rem = divmod(total, d.n - 2)
    if rem:
        raise InconsistentDeckError(f"card edge total {total} is not divisible by {d.n - 2}")
    return edges


def degree_sequence_from_deck(d: Deck) -> list[int]:
    edges = edge_count_from_deck(d)
    degrees = [edges - g.num_edges for g in d.card_graphs()]
    if any(not 0 <= x <= d.n - 1 for x in degrees):
        raise InconsistentDeckError(f"deck implies impossible degrees {sorted(degrees)}")
    return sorted(degrees, reverse=True)


def is_spider_deck(d: Deck) -> bool:
    thin, thick = spider_degrees(degree_sequence_from_deck(d))
    return thin or thick


def is_p_disconnected_deck(d: Deck) -> bool:
    """Not a spider, and at most one card is p-connected."""
    if is_spider_deck(d):
        return False
    return sum(1 for g in d.card_graphs() if is_p_connected(g)) <= 1


def _matching(fingerprint: bytes, graphs: list[Graph]) -> list[CanonicalCode]:
    return [canonical_form(g) for g in graphs if deck_of(g).fingerprint == fingerprint]


def _chunks(it: Iterable[Graph], size: int) -> Iterator[list[Graph]]:
    it = iter(it)
    while chunk := list(islice(it, size)):
        yield chunk


def reconstruct_bruteforce(
    d: Deck, candidates: Iterable[Graph], jobs: int = 1, chunk_size: int = 512
) -> ReconstructionReport:
    """Every candidate whose deck equals ``d``.

    ``candidates`` should cover all isomorphism classes of order ``d.n``. The
    returned matches are deduplicated and sorted, so they do not depend on
    ``jobs`` or on how the stream is chunked.
    """
    fp = d.fingerprint
    pool = (g for g in candidates if g.n == d.n)
    found: set[CanonicalCode] = set()
    if jobs <= 1:
        for chunk in _chunks(pool, chunk_size):
            found.update(_matching(fp, chunk))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            futures = [ex.submit(_matching, fp, chunk) for chunk in _chunks(pool, chunk_size)]
            for fut in futures:
                found.update(fut.result())
    return ReconstructionReport(d, tuple(sorted(found)))


def deck_split_composed(t: Triad, h: Graph) -> tuple[list[CanonicalCode], list[CanonicalCode]]:
    """Cards of ``compose(t, h)`` split by where the deleted vertex lies.

    Returns ``(d_t, d_h)``: ``d_t`` keeps the triad whole and deletes each
    vertex of ``h`` (``|h|`` cards), ``d_h`` keeps ``h`` whole and deletes each
    vertex of the triad (``|t|`` cards). Together they form the deck.
    """
    if h.n < 1:
        raise DeckError("h must have at least one vertex")
    d_t = [canonical_form(compose(t, delete_vertex(h, v))) for v in range(h.n)]
    d_h = []
    full = t.g.full_mask
    for v in range(t.g.n):
        sub, keep = induced_subgraph(t.g, full ^ (1 << v))
        a = sum(1 << i for i, u in enumerate(keep) if t.a >> u & 1)
        d_h.append(canonical_form(compose(Triad(sub, a, sub.full_mask ^ a), h)))
    return d_t, d_h


def format_deck(d: Deck) -> str:
    """Deck text: the order on the first line, then one graph6 card per line."""
    return "\n".join([str(d.n), *(c.decode("ascii") for c in d.cards)]) + "\n"


def parse_deck(text: str) -> Deck:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise DeckFormatError("empty deck text")
    try:
        n = int(lines[0])
    except ValueError:
        raise DeckFormatError(f"first line {lines[0]!r} is not a vertex count") from None
    cards = tuple(canonical_form(from_graph6(ln)) for ln in lines[1:])
    return Deck(n, cards)
