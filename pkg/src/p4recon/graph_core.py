"""Small simple graphs stored as one adjacency bit row per vertex.

Vertex sets are plain ``int`` bit masks throughout the package: bit ``v`` set
means vertex ``v`` is a member.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple

MAX_VERTICES = 32


class GraphError(ValueError):
    """Base class for errors raised on malformed graph input."""


class InvalidVertexError(GraphError):
    pass


class CapacityError(GraphError):
    pass


class InvalidTriadError(GraphError):
    pass


def bits(mask: int) -> Iterator[int]:
    """Yield the members of a vertex mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return mask.bit_count()


class P4(NamedTuple):
    """Induced path x - y - z - t, stored with x < t."""

    x: int
    y: int
    z: int
    t: int

    @property
    def mask(self) -> int:
        return (1 << self.x) | (1 << self.y) | (1 << self.z) | (1 << self.t)

    @property
    def midpoints(self) -> int:
        return (1 << self.y) | (1 << self.z)

    @property
    def endpoints(self) -> int:
        return (1 << self.x) | (1 << self.t)


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    ``rows[v]`` is the neighbourhood of ``v`` as a bit mask. Equality and
    hashing are on the labelled graph; use :mod:`p4recon.canonical` for
    isomorphism.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise CapacityError(f"graph order {self.n} outside 0..{MAX_VERTICES}")
        if len(self.rows) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise InvalidVertexError(f"row {v} has bits beyond vertex {self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not self.rows[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidVertexError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def _unchecked(cls, n: int, rows: tuple[int, ...]) -> Graph:
        # internal constructor for rows already known to be well formed
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", rows)
        return g

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.rows[v])

    @cached_property
    def num_edges(self) -> int:
        return sum(popcount(r) for r in self.rows) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, row in enumerate(self.rows):
            for v in bits(row >> (u + 1)):
                yield u, u + 1 + v

    def relabel(self, perm: Iterable[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        perm = list(perm)
        if sorted(perm) != list(range(self.n)):
            raise GraphError(f"not a permutation of 0..{self.n - 1}: {perm}")
        rows = [0] * self.n
        for v, row in enumerate(self.rows):
            rows[perm[v]] = mask_of(perm[u] for u in bits(row))
        return Graph._unchecked(self.n, tuple(rows))

    @cached_property
    def p4s(self) -> tuple[P4, ...]:
        return tuple(_enumerate_p4s(self))

    @cached_property
    def p4_masks(self) -> frozenset[int]:
        return frozenset(p.mask for p in self.p4s)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


@dataclass(frozen=True)
class Triad:
    """A graph with an ordered partition ``(a, b)`` of its vertices."""

    g: Graph
    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0 or self.a & self.b or self.a | self.b != self.g.full_mask:
            raise InvalidTriadError(
                f"({self.a:#b}, {self.b:#b}) is not an ordered partition of 0..{self.g.n - 1}"
            )

    @property
    def order(self) -> int:
        return self.g.n


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Place ``h`` after ``g``: its vertex ``v`` becomes ``g.n + v``."""
    if g.n + h.n > MAX_VERTICES:
        raise CapacityError(f"union of order {g.n + h.n} exceeds {MAX_VERTICES}")
    return Graph._unchecked(g.n + h.n, g.rows + tuple(r << g.n for r in h.rows))


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph._unchecked(g.n, tuple(full ^ row ^ (1 << v) for v, row in enumerate(g.rows)))


def _check_mask(g: Graph, s: int) -> None:
    if s < 0 or s & ~g.full_mask:
        raise InvalidVertexError(f"vertex set {s:#b} not contained in 0..{g.n - 1}")


def induced_subgraph(g: Graph, s: int) -> tuple[Graph, tuple[int, ...]]:
    """Return ``G[s]`` relabelled ``0..|s|-1`` in ascending order, plus the map
    from new labels back to original vertices."""
    _check_mask(g, s)
    keep = tuple(bits(s))
    index = {v: i for i, v in enumerate(keep)}
    rows = tuple(mask_of(index[u] for u in bits(g.rows[v] & s)) for v in keep)
    return Graph._unchecked(len(keep), rows), keep


def delete_vertex(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.n:
        raise InvalidVertexError(f"vertex {v} outside 0..{g.n - 1}")
    return induced_subgraph(g, g.full_mask ^ (1 << v))[0]


def degree_sequence(g: Graph) -> list[int]:
    return sorted((popcount(r) for r in g.rows), reverse=True)


def components(g: Graph, within: int | None = None) -> list[int]:
    """Connected components of ``G[within]`` as masks, ordered by least vertex."""
    left = g.full_mask if within is None else within
    out = []
    while left:
        comp = frontier = left & -left
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= g.rows[v]
            frontier = reach & left & ~comp
            comp |= frontier
        out.append(comp)
        left &= ~comp
    return out


def is_clique(g: Graph, m: int) -> bool:
    return all((g.rows[v] | 1 << v) & m == m for v in bits(m))


def is_stable(g: Graph, m: int) -> bool:
    return all(not g.rows[v] & m for v in bits(m))


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def is_anticonnected(g: Graph) -> bool:
    return is_connected(complement(g))


def _enumerate_p4s(g: Graph) -> Iterator[P4]:
    rows = g.rows
    # mid pair (y, z) first; each path is met once per direction, keep x < t
    for y in range(g.n):
        for z in bits(rows[y]):
            closed_y = rows[y] | (1 << y)
            closed_z = rows[z] | (1 << z)
            for x in bits(rows[y] & ~closed_z):
                for t in bits(rows[z] & ~closed_y & ~rows[x]):
                    if x < t:
                        yield P4(x, y, z, t)


def induced_p4s(g: Graph) -> list[P4]:
    return list(g.p4s)


def is_induced_p4(g: Graph, p: P4) -> bool:
    x, y, z, t = p
    if len({x, y, z, t}) != 4 or not all(0 <= v < g.n for v in p):
        return False
    a = g.adjacent
    return a(x, y) and a(y, z) and a(z, t) and not (a(x, z) or a(x, t) or a(y, t))


def partners(g: Graph, p: P4) -> int:
    """Vertices ``v`` outside ``p`` such that ``G[p + v]`` has two or more induced P4s.

    A second P4 inside ``p + v`` must use ``v`` and three vertices of ``p``,
    so it suffices to look up those four candidate vertex sets.
    """
    if not is_induced_p4(g, p):
        raise ValueError(f"{tuple(p)} is not an induced P4 of the graph")
    base = p.mask
    p4_sets = g.p4_masks
    out = 0
    for v in bits(g.full_mask & ~base):
        five = base | 1 << v
        if any(five ^ (1 << u) in p4_sets for u in p):
            out |= 1 << v
    return out
