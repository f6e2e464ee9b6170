"""P4-connectivity: p-components, separable triads, modules and composition."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .graph_core import (
    MAX_VERTICES,
    CapacityError,
    Graph,
    Triad,
    bits,
    complement,
    components,
    induced_subgraph,
    is_anticonnected,
    is_clique,
    is_connected,
    is_stable,
    mask_of,
)

__all__ = [
    "NotAModuleError",
    "StructureViolation",
    "StructureCase",
    "Structure",
    "Triad",
    "is_module",
    "module_partition",
    "compose",
    "p4_cooccurrence",
    "is_p_connected",
    "p_components",
    "is_separable_triad",
    "separable_bipartitions",
    "find_separable_partition",
    "is_generalized_split_triad",
    "structure_classify",
    "is_1_decomposable",
]


class NotAModuleError(ValueError):
    pass


class StructureViolation(RuntimeError):
    """Raised when a graph fits none or several of the four structure cases.

    This can only happen if the case analysis (or this code) is wrong.
    """


class PreconditionError(ValueError):
    pass


def is_module(g: Graph, m: int) -> bool:
    """True iff every vertex outside ``m`` sees all of ``m`` or none of it."""
    for v in bits(g.full_mask & ~m):
        seen = g.rows[v] & m
        if seen and seen != m:
            return False
    return True


def module_partition(g: Graph, m: int) -> tuple[int, int]:
    """Split ``V - m`` into the vertices joined to ``m`` and those missing it."""
    if not m:
        raise NotAModuleError("the empty set has no associated partition")
    if not is_module(g, m):
        raise NotAModuleError(f"{m:#b} is not a module")
    a = 0
    for v in bits(g.full_mask & ~m):
        if g.rows[v] & m:
            a |= 1 << v
    return a, g.full_mask & ~m & ~a


def compose(t: Triad, h: Graph) -> Graph:
    """``t`` composed with ``h``: vertices of ``h`` are shifted past ``t.g`` and
    joined to every vertex of ``t.a``."""
    k = t.g.n
    if k + h.n > MAX_VERTICES:
        raise CapacityError(f"composition of order {k + h.n} exceeds {MAX_VERTICES}")
    hmask = ((1 << h.n) - 1) << k
    rows = [r | hmask if t.a >> v & 1 else r for v, r in enumerate(t.g.rows)]
    rows += [(r << k) | t.a for r in h.rows]
    return Graph._unchecked(k + h.n, tuple(rows))


def p4_cooccurrence(g: Graph) -> Graph:
    """Graph on V(g) where u ~ v iff some induced P4 contains both."""
    rows = [0] * g.n
    for p in g.p4s:
        m = p.mask
        for v in p:
            rows[v] |= m
    return Graph._unchecked(g.n, tuple(r & ~(1 << v) for v, r in enumerate(rows)))


def p_components(g: Graph) -> list[int]:
    """Vertex sets of the p-components, including trivial singletons."""
    return components(p4_cooccurrence(g))


def is_p_connected(g: Graph) -> bool:
    # graphs on at most one vertex have no bipartition into nonempty parts
    return len(p_components(g)) <= 1


def _crossing_p4s_placed(g: Graph, a: int, b: int) -> bool:
    # every P4 meeting both sides has its midpoints in a and endpoints in b
    for p in g.p4s:
        m = p.mask
        if m & a and m & b and (p.midpoints & b or p.endpoints & a):
            return False
    return True


def is_separable_triad(t: Triad) -> bool:
    g, a, b = t.g, t.a, t.b
    return bool(a and b) and is_p_connected(g) and _crossing_p4s_placed(g, a, b)


def separable_bipartitions(g: Graph) -> list[tuple[int, int]]:
    """Every ``(a, b)`` with both sides nonempty making ``(g, a, b)`` separable."""
    if not is_p_connected(g):
        return []
    full = g.full_mask
    return [(a, full ^ a) for a in range(1, full) if _crossing_p4s_placed(g, a, full ^ a)]


def find_separable_partition(g: Graph, verify: bool = False) -> Optional[tuple[int, int]]:
    """The separable bipartition of a p-connected graph, if it has one.

    With ``verify`` the scan runs to completion and raises if more than one
    bipartition qualifies.
    """
    if not is_p_connected(g):
        raise PreconditionError("graph is not p-connected")
    full = g.full_mask
    found = None
    for a in range(1, full):
        if _crossing_p4s_placed(g, a, full ^ a):
            if found is not None:
                raise StructureViolation(f"two separable bipartitions: {found[0]:#b}, {a:#b}")
            found = (a, full ^ a)
            if not verify:
                break
    return found


def is_generalized_split_triad(t: Triad) -> bool:
    """Each component of the complement of G[A] and of G[B] must be a module of G."""
    g = t.g
    parts = components(complement(g), t.a) + components(g, t.b)
    return all(is_module(g, c) for c in parts)


class StructureCase(enum.Enum):
    DISCONNECTED = "Disconnected"
    ANTIDISCONNECTED = "Antidisconnected"
    SEPARABLE_COMPOSITION = "SeparableComposition"
    P_CONNECTED = "PConnected"


@dataclass(frozen=True)
class Structure:
    """Which structure case a graph falls in.

    For ``SEPARABLE_COMPOSITION``, ``s = a | b`` is the separable p-component,
    ``a`` is joined to everything outside ``s`` and ``b`` misses it.
    """

    case: StructureCase
    s: int = 0
    a: int = 0
    b: int = 0


def _separable_component(g: Graph) -> list[tuple[int, int, int]]:
    accepted = []
    full = g.full_mask
    for s in p_components(g):
        if s.bit_count() < 4:
            continue
        rest = full & ~s
        a = b = 0
        for v in bits(s):
            seen = g.rows[v] & rest
            if seen == rest:
                a |= 1 << v
            elif not seen:
                b |= 1 << v
        if a | b != s:
            continue
        sub, keep = induced_subgraph(g, s)
        index = {v: i for i, v in enumerate(keep)}
        local_a = mask_of(index[v] for v in bits(a))
        if is_separable_triad(Triad(sub, local_a, sub.full_mask ^ local_a)):
            accepted.append((s, a, b))
    return accepted


def structure_classify(g: Graph) -> Structure:
    if g.n < 1:
        raise PreconditionError("structure_classify needs at least one vertex")
    if not is_connected(g):
        return Structure(StructureCase.DISCONNECTED)
    if not is_anticonnected(g):
        return Structure(StructureCase.ANTIDISCONNECTED)
    if is_p_connected(g):
        return Structure(StructureCase.P_CONNECTED)
    accepted = _separable_component(g)
    if len(accepted) != 1:
        raise StructureViolation(
            f"connected, anticonnected, p-disconnected graph with {len(accepted)} "
            f"separable components: {g!r}"
        )
    s, a, b = accepted[0]
    return Structure(StructureCase.SEPARABLE_COMPOSITION, s, a, b)


def is_1_decomposable(g: Graph, strict: bool = False) -> Optional[tuple[int, int, int]]:
    """Find a module ``m`` whose associated A is a clique and B a stable set.

    Candidates are proper nonempty modules, smallest first; ``strict`` keeps
    only nontrivial ones (``1 < |m| < n``). Returns ``(m, a, b)`` or None.
    """
    lo = 2 if strict else 1
    for size in range(lo, g.n):
        for combo in combinations(range(g.n), size):
            m = mask_of(combo)
            if not is_module(g, m):
                continue
            a, b = module_partition(g, m)
            if is_clique(g, a) and is_stable(g, b):
                return m, a, b
    return None
