"""Exhaustive catalogues of small graphs and the verification driver.

Catalogues are built by vertex augmentation: every graph on ``n`` vertices is
some graph on ``n - 1`` vertices plus one new vertex, so extending each
smaller representative by all ``2**(n-1)`` neighbourhoods and deduplicating by
canonical code reaches every isomorphism class.
"""

from __future__ import annotations

import json
import logging
import os
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Callable, Iterable, Optional

from . import suites
from .canonical import CanonicalCode, canonical_form, from_graph6
from .graph_core import CapacityError, Graph
from .pstructure import StructureCase, StructureViolation

log = logging.getLogger(__name__)

MAX_CATALOGUE_N = 9
CACHE_ENV = "P4RECON_CATALOGUE_DIR"


@dataclass(frozen=True)
class Catalogue:
    """One canonical representative per isomorphism class, sorted by code."""

    n: int
    entries: tuple[tuple[CanonicalCode, Graph], ...]

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def codes(self) -> list[CanonicalCode]:
        return [c for c, _ in self.entries]

    @property
    def graphs(self) -> list[Graph]:
        return [g for _, g in self.entries]


def _augment(prev: Iterable[Graph], n: int) -> dict[CanonicalCode, Graph]:
    seen: dict[CanonicalCode, Graph] = {}
    top = 1 << (n - 1)
    for g in prev:
        for nb in range(top):
            rows = tuple(r | top if nb >> v & 1 else r for v, r in enumerate(g.rows)) + (nb,)
            h = Graph._unchecked(n, rows)
            code = canonical_form(h)
            if code not in seen:
                seen[code] = h
    return seen


def _cache_path(n: int, cache_dir: Optional[os.PathLike]) -> Optional[Path]:
    root = cache_dir if cache_dir is not None else os.environ.get(CACHE_ENV)
    return Path(root) / f"graphs{n}.g6" if root else None


def save_catalogue(cat: Catalogue, path: os.PathLike) -> None:
    """Write one canonical graph6 string per line."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text("".join(c.decode("ascii") + "\n" for c in cat.codes))
    tmp.replace(path)


def load_catalogue(path: os.PathLike, n: int) -> Catalogue:
    entries = []
    for line in Path(path).read_text().split():
        g = from_graph6(line)
        if g.n != n:
            raise CapacityError(f"{path}: graph {line!r} has order {g.n}, expected {n}")
        entries.append((CanonicalCode(line.encode("ascii")), g))
    entries.sort(key=lambda e: e[0])
    return Catalogue(n, tuple(entries))


@lru_cache(maxsize=None)
def _build(n: int, cache_key: Optional[str]) -> Catalogue:
    path = _cache_path(n, cache_key)
    if path is not None and path.exists():
        return load_catalogue(path, n)
    if n == 0:
        seen = {canonical_form(Graph(0, ())): Graph(0, ())}
    elif n == 1:
        seen = {canonical_form(Graph(1, (0,))): Graph(1, (0,))}
    else:
        seen = _augment(_build(n - 1, cache_key).graphs, n)
    log.info("catalogue n=%d: %d graphs", n, len(seen))
    entries = tuple(sorted(((c, c.graph()) for c in seen), key=lambda e: e[0]))
    cat = Catalogue(n, entries)
    if path is not None:
        save_catalogue(cat, path)
    return cat


def all_graphs(n: int, cache_dir: Optional[os.PathLike] = None) -> Catalogue:
    """Every graph on ``n`` vertices up to isomorphism, ``1 <= n <= 9``.

    If ``cache_dir`` (or the ``P4RECON_CATALOGUE_DIR`` environment variable) is
    set, catalogues are read from and written to ``graphs{n}.g6`` there.
    """
    if not 1 <= n <= MAX_CATALOGUE_N:
        raise CapacityError(f"catalogue order {n} outside 1..{MAX_CATALOGUE_N}")
    key = cache_dir if cache_dir is not None else os.environ.get(CACHE_ENV)
    return _build(n, None if key is None else str(key))


# -- classification ---------------------------------------------------------

FILTERS: dict[str, Callable[[suites.Facts], bool]] = {
    "p-connected": lambda f: f.p_connected,
    "p-disconnected": lambda f: not f.p_connected,
    "split": lambda f: f.split.is_split,
    "spider": lambda f: f.spider.is_spider,
    "1-decomposable": lambda f: f.one_decomposable is not None,
    "p4-tidy": lambda f: f.tidy,
    "disconnected": lambda f: f.structure.case is StructureCase.DISCONNECTED,
    "antidisconnected": lambda f: f.structure.case is StructureCase.ANTIDISCONNECTED,
    "separable-composition": lambda f: f.structure.case is StructureCase.SEPARABLE_COMPOSITION,
}


def classify_row(f: suites.Facts) -> dict:
    g = f.g
    try:
        case = f.structure.case.value
    except StructureViolation:
        case = "StructureViolation"
    return {
        "graph6": f.graph6,
        "n": g.n,
        "edges": g.num_edges,
        "structure": case,
        "p_connected": f.p_connected,
        "split": f.split.is_split,
        "spider": f.spider.kind.value,
        "1_decomposable": f.one_decomposable is not None,
        "1_decomposable_strict": f.one_decomposable_strict is not None,
        "p4_tidy": f.tidy,
        "p_component_sizes": sorted((c.bit_count() for c in f.p_components), reverse=True),
    }


def classify_all(n: int) -> list[dict]:
    """One classification row per graph in the catalogue of order ``n``."""
    return [classify_row(suites.Facts(g, c)) for c, g in all_graphs(n).entries]


# -- verification -------------------------------------------------------------

@dataclass
class SuiteResult:
    checked: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


@dataclass
class VerificationReport:
    n: int
    class_filter: Optional[str]
    graphs: int = 0
    filtered: int = 0
    tallies: Counter = field(default_factory=Counter)
    deck_groups: int = 0
    max_group_size: int = 0
    counterexamples: list[list[str]] = field(default_factory=list)
    suites: dict[str, SuiteResult] = field(default_factory=dict)

    @property
    def reconstruction_holds(self) -> bool:
        return self.max_group_size <= 1

    @property
    def ok(self) -> bool:
        return self.reconstruction_holds and all(s.passed for s in self.suites.values())

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "class_filter": self.class_filter,
            "graphs": self.graphs,
            "filtered": self.filtered,
            "deck_groups": self.deck_groups,
            "max_group_size": self.max_group_size,
            "reconstruction_holds": self.reconstruction_holds,
            "counterexamples": self.counterexamples,
            "tallies": dict(sorted(self.tallies.items())),
            "suites": {
                name: {"checked": s.checked, "passed": s.passed, "violations": s.violations}
                for name, s in sorted(self.suites.items())
            },
            "ok": self.ok,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_tsv(self) -> str:
        d = self.to_dict()
        lines = ["key\tvalue"]
        for key in ("n", "class_filter", "graphs", "filtered", "deck_groups", "max_group_size",
                    "reconstruction_holds", "ok"):
            lines.append(f"{key}\t{'' if d[key] is None else d[key]}")
        for key, value in d["tallies"].items():
            lines.append(f"tally.{key}\t{value}")
        for name, s in d["suites"].items():
            lines.append(f"suite.{name}\t{'pass' if s['passed'] else 'FAIL'}\t{s['checked']}\t"
                         + ",".join(s["violations"]))
        for group in d["counterexamples"]:
            lines.append("counterexample\t" + ",".join(group))
        return "\n".join(lines) + "\n"


@dataclass
class _Partial:
    tallies: Counter = field(default_factory=Counter)
    groups: dict[bytes, list[str]] = field(default_factory=lambda: defaultdict(list))
    filtered: int = 0
    checked: Counter = field(default_factory=Counter)
    violations: dict[str, list[str]] = field(default_factory=lambda: defaultdict(list))

    def merge(self, other: _Partial) -> None:
        self.tallies.update(other.tallies)
        self.filtered += other.filtered
        self.checked.update(other.checked)
        for fp, members in other.groups.items():
            self.groups[fp].extend(members)
        for name, bad in other.violations.items():
            self.violations[name].extend(bad)


def _tally(f: suites.Facts, t: Counter) -> None:
    t["graphs"] += 1
    t["p-connected" if f.p_connected else "p-disconnected"] += 1
    if f.split.is_split:
        t["split"] += 1
    if f.spider.is_spider:
        t["spider"] += 1
        t[f"spider-{f.spider.kind.value.lower()}"] += 1
    if f.minimal:
        t["minimally-p-connected"] += 1
    if f.one_decomposable is not None:
        t["1-decomposable"] += 1
    if f.one_decomposable_strict is not None:
        t["1-decomposable-strict"] += 1
    if f.tidy:
        t["p4-tidy"] += 1
    try:
        t[f"case-{f.structure.case.value}"] += 1
    except StructureViolation:
        t["case-StructureViolation"] += 1


def _verify_shard(n: int, codes: list[bytes], class_filter: Optional[str],
                  check_names: Optional[list[str]]) -> _Partial:
    out = _Partial()
    checks = [c for c in suites.applicable(n) if check_names is None or c.name in check_names]
    keep = FILTERS[class_filter] if class_filter else None
    for raw in codes:
        code = CanonicalCode(raw)
        f = suites.Facts(code.graph(), code)
        if check_names is None:
            _tally(f, out.tallies)
            if keep is None or keep(f):
                out.filtered += 1
                out.groups[f.deck.fingerprint].append(f.graph6)
        for c in checks:
            out.checked[c.name] += 1
            try:
                good = c.fn(f)
            except Exception:  # a crash inside a check counts as a violation
                log.exception("check %s crashed on %s", c.name, f.graph6)
                good = False
            if not good:
                out.violations[c.name].append(f.graph6)
    return out


@lru_cache(maxsize=None)
def _triads_of_order(k: int) -> tuple:
    return tuple(suites.generalized_split_triads(all_graphs(k).graphs))


def _composition_shard(pairs: list[str]) -> _Partial:
    out = _Partial()
    name = suites.COMPOSITION_SUITE
    for text in pairs:
        t, h = suites.parse_pair(text)
        out.checked[name] += 1
        if not suites.composition_ok(t, h):
            out.violations[name].append(text)
    return out


def composition_pair_texts(n: int) -> list[str]:
    triads = {k: list(_triads_of_order(k)) for k in range(1, suites.MAX_TRIAD + 1) if 1 <= n - k <= suites.MAX_H}
    hs = {j: all_graphs(j).graphs for j in range(1, suites.MAX_H + 1)}
    return [suites.describe_pair(t, h) for t, h in suites.composition_pairs(n, triads, hs)]


def _shards(items: list, count: int) -> list[list]:
    count = max(1, count)
    return [items[i::count] for i in range(count) if items[i::count]]


def _run(tasks: list[tuple], jobs: int) -> list[_Partial]:
    if jobs <= 1:
        return [fn(*args) for fn, *args in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        futures = [ex.submit(fn, *args) for fn, *args in tasks]
        return [fut.result() for fut in futures]


def run_suites(n: int, names: Optional[list[str]] = None, jobs: int = 1) -> dict[str, SuiteResult]:
    """Run the named per-graph checks (default: all that apply) over all graphs
    on ``n`` vertices, plus the composition suite for compositions of order ``n``."""
    report = _verify(n, None, jobs, names)
    return report.suites


def verify_reconstruction(n: int, class_filter: Optional[str] = None, jobs: int = 1) -> VerificationReport:
    """Group graphs on ``n`` vertices by deck and run every applicable suite.

    The reconstruction claim holds at ``n`` when every deck group is a
    singleton; otherwise the offending groups are listed in
    ``counterexamples``. ``class_filter`` restricts the deck grouping to one
    class; tallies and suites always cover the whole catalogue.
    """
    if not 3 <= n <= MAX_CATALOGUE_N:
        raise CapacityError(f"verification order {n} outside 3..{MAX_CATALOGUE_N}")
    if class_filter is not None and class_filter not in FILTERS:
        raise ValueError(f"unknown class filter {class_filter!r}; choose from {sorted(FILTERS)}")
    return _verify(n, class_filter, jobs, None)


def _verify(n: int, class_filter: Optional[str], jobs: int, names: Optional[list[str]]) -> VerificationReport:
    cat = all_graphs(n)
    codes = [bytes(c) for c in cat.codes]
    shard_count = jobs * 4 if jobs > 1 else 1
    tasks: list[tuple] = [(_verify_shard, n, s, class_filter, names) for s in _shards(codes, shard_count)]
    if names is None or suites.COMPOSITION_SUITE in names:
        pairs = composition_pair_texts(n)
        tasks += [(_composition_shard, s) for s in _shards(pairs, shard_count)]
    total = _Partial()
    for part in _run(tasks, jobs):
        total.merge(part)

    report = VerificationReport(n, class_filter, graphs=len(cat), filtered=total.filtered)
    report.tallies = Counter(total.tallies)
    groups = [sorted(members) for members in total.groups.values()]
    report.deck_groups = len(groups)
    report.max_group_size = max((len(g) for g in groups), default=0)
    report.counterexamples = sorted(g for g in groups if len(g) > 1)
    for name in sorted(set(total.checked) | set(total.violations)):
        report.suites[name] = SuiteResult(total.checked[name], sorted(total.violations[name]))
    return report
