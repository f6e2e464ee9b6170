"""Canonical labelling, isomorphism tests and graph6 text encoding.

The canonical form of a graph is the lexicographically least graph6 bit
string over all leaves of an individualisation-refinement search tree. Cells
are refined to an equitable partition by neighbour counts; the search then
individualises vertices of the first smallest non-singleton cell. Twins (two
vertices with equal neighbourhoods apart from each other) are swapped by a
graph automorphism that fixes the current partition, so only one vertex of
each twin class is tried per cell. No other automorphism pruning is done.
"""

from __future__ import annotations

from .graph_core import MAX_VERTICES, CapacityError, Graph, GraphError, Triad, bits


class Graph6Error(GraphError):
    pass


class CanonicalCode(bytes):
    """graph6 bytes of the canonically relabelled graph.

    Two graphs are isomorphic iff their codes are equal. Codes sort by order
    first (the leading graph6 size byte) and can be decoded back to a
    representative graph.
    """

    @property
    def n(self) -> int:
        return self[0] - 63

    def graph(self) -> Graph:
        return from_graph6(self.decode("ascii"))

    def __repr__(self) -> str:
        return f"CanonicalCode({self.decode('ascii')!r})"


class TriadCode(bytes):
    """Canonical form of a triad: graph6 of the relabelled graph, ``b"|"``, and
    the size of the A side. A occupies the lowest canonical labels."""

    def __repr__(self) -> str:
        return f"TriadCode({self.decode('ascii')!r})"


# -- graph6 ---------------------------------------------------------------

def _pack(n: int, bitstring: int, nbits: int) -> str:
    pad = (-nbits) % 6
    bitstring <<= pad
    nchars = (nbits + pad) // 6
    out = [chr(63 + n)]
    for i in range(nchars - 1, -1, -1):
        out.append(chr(63 + (bitstring >> (6 * i) & 63)))
    return "".join(out)


def _upper_bits(g: Graph, order: list[int] | range) -> int:
    """Column-major upper triangle x(0,1), x(0,2), x(1,2), ... as one integer,
    first bit most significant, with vertex ``order[i]`` in position ``i``."""
    rows = g.rows
    code = 0
    for j in range(1, len(order)):
        r = rows[order[j]]
        for i in range(j):
            code = code << 1 | (r >> order[i] & 1)
    return code


def to_graph6(g: Graph) -> str:
    """Encode ``g`` in graph6. Only the one-byte size form is produced (n <= 62)."""
    n = g.n
    return _pack(n, _upper_bits(g, range(n)), n * (n - 1) // 2)


def from_graph6(text: str) -> Graph:
    """Decode one graph6 string; an optional ``>>graph6<<`` header is skipped."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside graph6 range 63..126 in {s!r}")
    if s[0] == "~":
        raise CapacityError(f"graph6 string {s!r} encodes more than {MAX_VERTICES} vertices")
    n = ord(s[0]) - 63
    if n > MAX_VERTICES:
        raise CapacityError(f"graph6 string {s!r} encodes {n} vertices, limit is {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    body = s[1:]
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(f"graph6 string {s!r} has wrong length for n={n}")
    value = 0
    for ch in body:
        value = value << 6 | (ord(ch) - 63)
    pad = len(body) * 6 - nbits
    if value & ((1 << pad) - 1):
        raise Graph6Error(f"graph6 string {s!r} has nonzero padding bits")
    value >>= pad
    rows = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k -= 1
    return Graph._unchecked(n, tuple(rows))


# -- canonical labelling ---------------------------------------------------

def _refine(rows: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Split cells by neighbour counts into each cell until equitable.

    Sub-cells are ordered by increasing count, so the result depends only on
    the cell structure, never on vertex names.
    """
    i = 0
    while i < len(cells):
        w = 0
        for v in cells[i]:
            w |= 1 << v
        new = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                new.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for v in cell:
                groups.setdefault((rows[v] & w).bit_count(), []).append(v)
            if len(groups) == 1:
                new.append(cell)
            else:
                split = True
                new.extend(groups[k] for k in sorted(groups))
        cells = new
        i = 0 if split else i + 1
    return cells


def _search(g: Graph, cells: list[list[int]]) -> list[int]:
    rows = g.rows
    best_code = -1
    best_order: list[int] = []

    def visit(cells):
        nonlocal best_code, best_order
        cells = _refine(rows, cells)
        target = -1
        for idx, cell in enumerate(cells):
            if len(cell) > 1 and (target < 0 or len(cell) < len(cells[target])):
                target = idx
        if target < 0:
            order = [c[0] for c in cells]
            code = _upper_bits(g, order)
            if best_code < 0 or code < best_code:
                best_code, best_order = code, order
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            if any(rows[v] & ~(1 << u) == rows[u] & ~(1 << v) for u in tried):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            visit(cells[:target] + [[v], rest] + cells[target + 1:])

    visit([c for c in cells if c])
    return best_order


def canonical_order(g: Graph) -> list[int]:
    """Vertices of ``g`` listed in canonical position order."""
    if g.n == 0:
        return []
    return _search(g, [list(range(g.n))])


def canonical_form(g: Graph) -> CanonicalCode:
    order = canonical_order(g)
    n = g.n
    return CanonicalCode(_pack(n, _upper_bits(g, order), n * (n - 1) // 2).encode("ascii"))


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative of the isomorphism class of ``g``."""
    order = canonical_order(g)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return g.relabel(perm)


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.num_edges != g2.num_edges:
        return False
    return canonical_form(g1) == canonical_form(g2)


def triad_canonical_form(t: Triad) -> TriadCode:
    """Canonical form of ``t`` under isomorphisms that map A onto A and B onto B."""
    g, a, b = t.g, t.a, t.b
    order = _search(g, [list(bits(a)), list(bits(b))]) if g.n else []
    n = g.n
    head = _pack(n, _upper_bits(g, order), n * (n - 1) // 2)
    return TriadCode(f"{head}|{a.bit_count()}".encode("ascii"))
