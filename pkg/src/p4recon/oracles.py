"""Brute-force reference implementations.

These follow the definitions literally and share no code path with the fast
recognisers they are compared against, apart from the graph type itself.
"""

from __future__ import annotations

from collections import Counter
from itertools import permutations
from math import factorial, gcd

import numpy as np

from .canonical import CanonicalCode, canonical_form
from .graph_core import Graph, bits, induced_subgraph


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(n) for i in range(j)]


def _graph_from_pair_mask(n: int, pairs: list[tuple[int, int]], m: int) -> Graph:
    rows = [0] * n
    for k, (i, j) in enumerate(pairs):
        if m >> k & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph._unchecked(n, tuple(rows))


def labelled_graphs(n: int):
    """Every labelled graph on ``n`` vertices (``2**(n*(n-1)/2)`` of them)."""
    pairs = _pairs(n)
    for m in range(1 << len(pairs)):
        yield _graph_from_pair_mask(n, pairs, m)


def degree_ordered_masks(n: int) -> np.ndarray:
    """Edge masks of the labelled graphs on ``n`` vertices whose degrees are
    non-increasing in vertex order. Every isomorphism class has such a
    labelling, so these still meet every class."""
    pairs = _pairs(n)
    masks = np.arange(1 << len(pairs), dtype=np.int64)
    deg = np.zeros((max(n, 1), masks.size), dtype=np.int8)
    for k, (i, j) in enumerate(pairs):
        bit = ((masks >> k) & 1).astype(np.int8)
        deg[i] += bit
        deg[j] += bit
    keep = np.all(deg[:-1] >= deg[1:], axis=0)
    return masks[keep]


def naive_classes(n: int, prefilter: bool = True) -> set[CanonicalCode]:
    """Canonical codes met while walking all labelled graphs on ``n`` vertices.

    With ``prefilter`` only the degree-ordered labellings are canonicalised,
    which is what makes ``n = 7`` (2**21 labelled graphs) affordable.
    """
    if not 0 <= n <= 7:
        raise ValueError(f"naive enumeration is limited to n <= 7, got {n}")
    if not prefilter:
        return {canonical_form(g) for g in labelled_graphs(n)}
    pairs = _pairs(n)
    return {canonical_form(_graph_from_pair_mask(n, pairs, m)) for m in degree_ordered_masks(n).tolist()}


def _partitions(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield []
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield [k, *rest]


def burnside_count(n: int) -> int:
    """Number of unlabelled graphs on ``n`` vertices by orbit counting.

    A permutation with cycle lengths ``l_i`` acts on vertex pairs with
    ``sum(l_i // 2) + sum_{i<j} gcd(l_i, l_j)`` orbits.
    """
    total = 0
    for part in _partitions(n):
        mult = Counter(part)
        size = factorial(n)
        for length, k in mult.items():
            size //= length ** k * factorial(k)
        orbits = sum(l // 2 for l in part)
        orbits += sum(gcd(part[i], part[j]) for i in range(len(part)) for j in range(i + 1, len(part)))
        total += size * 2 ** orbits
    return total // factorial(n)


def is_induced_path4(g: Graph, order: tuple[int, int, int, int]) -> bool:
    x, y, z, t = order
    a = g.adjacent
    return a(x, y) and a(y, z) and a(z, t) and not (a(x, z) or a(x, t) or a(y, t))


def p4_vertex_sets(g: Graph) -> list[int]:
    """Vertex sets inducing a P4, found by trying every ordered quadruple."""
    found = set()
    for quad in permutations(range(g.n), 4):
        if is_induced_path4(g, quad):
            found.add(sum(1 << v for v in quad))
    return sorted(found)


def p_connected_by_definition(g: Graph) -> bool:
    """Every bipartition into nonempty parts has a P4 meeting both parts."""
    quads = p4_vertex_sets(g)
    full = g.full_mask
    # fix vertex n-1 on the second side so each bipartition is seen once
    for a in range(1, 1 << max(g.n - 1, 0)):
        b = full ^ a
        if not any(q & a and q & b for q in quads):
            return False
    return True


def count_p4s_in(g: Graph, s: int) -> int:
    sub, _ = induced_subgraph(g, s)
    return len(p4_vertex_sets(sub))


def partner_counts(g: Graph) -> list[int]:
    out = []
    for q in p4_vertex_sets(g):
        out.append(sum(1 for v in bits(g.full_mask & ~q) if count_p4s_in(g, q | 1 << v) >= 2))
    return out


def _neighbours(g: Graph, v: int) -> set[int]:
    return set(bits(g.rows[v]))


def spider_by_definition(g: Graph) -> tuple[bool, bool]:
    """``(thin, thick)`` by scanning clique/stable bipartitions and bijections.

    Only clique sides of size at least 2 count, matching the package's
    convention that spiders have at least four vertices.
    """
    thin = thick = False
    full = g.full_mask
    for a in range(full + 1):
        b = full ^ a
        if a.bit_count() != b.bit_count() or a.bit_count() < 2:
            continue
        if any(g.rows[v] & a != a & ~(1 << v) for v in bits(a)):
            continue
        if any(g.rows[v] & b for v in bits(b)):
            continue
        clique, legs = list(bits(a)), list(bits(b))
        for image in permutations(clique):
            f = dict(zip(legs, image))
            if not thin and all(_neighbours(g, x) == {f[x]} for x in legs):
                thin = True
            if not thick and all(_neighbours(g, x) == set(clique) - {f[x]} for x in legs):
                thick = True
    return thin, thick
