"""Enumeration of boundary strata and the contraction partial order.

Strata of the moduli space with a fixed total genus and labeled tail set
are isomorphism classes of stable SUSY graphs.  Enumeration proceeds in two
passes: modular shapes first, generated from the one-vertex graph by vertex
splitting and genus-to-loop moves and deduplicated by canonical certificate,
then NS/R colorings of each shape, counted by the parity argument (2^b1 per
shape) and deduplicated the same way.

The number of edges of a stable shape is bounded by 3g - 3 + #tails.  An
instance guard refuses enumerations whose bound exceeds a configurable
limit (SUSY_KIT_MAX_EDGES, default 8).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .canon import canonical_form
from .errors import ValidationError
from .graphs import Graph, edges, flags_at, orbit_pairs
from .lifting import enumerate_edge_colorings, lift_count_general
from .susy import NS, SusyGraph, SusyLabeling, is_stable, modular_graph
from .calculus import contract_pair

__all__ = [
    "ContractionPoset",
    "StratumRecord",
    "contraction_poset",
    "enumerate_modular_shapes",
    "enumerate_strata",
    "enumerate_strata_records",
    "max_edge_limit",
]

ENV_LIMIT = "SUSY_KIT_MAX_EDGES"
DEFAULT_LIMIT = 8


def max_edge_limit(override: int | None = None) -> int:
    if override is not None:
        return override
    raw = os.environ.get(ENV_LIMIT)
    if raw is None:
        return DEFAULT_LIMIT
    try:
        return int(raw)
    except ValueError:
        raise ValidationError(f"{ENV_LIMIT} must be an integer, got {raw!r}")


def _corolla(genus: int, labels: list[str]) -> SusyGraph:
    flags = {f"t:{l}": l for l in labels}
    return modular_graph(
        flags=set(flags),
        vertices={"v"},
        boundary={f: "v" for f in flags},
        involution={f: f for f in flags},
        genus={"v": genus},
        tail_labels={l: f for f, l in flags.items()},
    )


def _fresh_pair(g: Graph) -> tuple[str, str]:
    n = 0
    while f"e{n}a" in g.flags or f"e{n}b" in g.flags:
        n += 1
    return f"e{n}a", f"e{n}b"


def _split_moves(g: SusyGraph) -> Iterator[SusyGraph]:
    """Replace one vertex by two joined by a new edge, distributing its
    flags and genus in every stable way."""
    base = g.graph
    for v in sorted(base.vertices):
        fl = sorted(flags_at(base, v))
        gv = g.genus_of(v)
        ea, eb = _fresh_pair(base)
        va, vb = f"{v}a", f"{v}b"
        while va in base.vertices or vb in base.vertices:
            va += "a"
            vb += "b"
        for size in range(len(fl) + 1):
            for part in combinations(fl, size):
                part_set = set(part)
                for ga in range(gv + 1):
                    gb = gv - ga
                    if 2 * ga - 2 + len(part_set) + 1 <= 0:
                        continue
                    if 2 * gb - 2 + (len(fl) - len(part_set)) + 1 <= 0:
                        continue
                    boundary = dict(base.boundary)
                    for f in fl:
                        boundary[f] = va if f in part_set else vb
                    boundary[ea] = va
                    boundary[eb] = vb
                    involution = dict(base.involution)
                    involution[ea] = eb
                    involution[eb] = ea
                    genus = {
                        w: g.genus_of(w) for w in base.vertices if w != v
                    }
                    genus[va] = ga
                    genus[vb] = gb
                    yield SusyGraph(
                        Graph(
                            base.flags | {ea, eb},
                            (base.vertices - {v}) | {va, vb},
                            boundary,
                            involution,
                        ),
                        SusyLabeling(
                            genus,
                            {f: g.color_of(f) for f in base.flags}
                            | {ea: NS, eb: NS},
                            dict(g.labeling.ns_tail_labels),
                            {},
                        ),
                        modular=True,
                    )


def _deloop_moves(g: SusyGraph) -> Iterator[SusyGraph]:
    """Trade one unit of genus at a vertex for a loop."""
    base = g.graph
    for v in sorted(base.vertices):
        gv = g.genus_of(v)
        if gv < 1:
            continue
        ea, eb = _fresh_pair(base)
        boundary = dict(base.boundary)
        boundary[ea] = v
        boundary[eb] = v
        involution = dict(base.involution)
        involution[ea] = eb
        involution[eb] = ea
        genus = {w: g.genus_of(w) for w in base.vertices}
        genus[v] = gv - 1
        yield SusyGraph(
            Graph(
                base.flags | {ea, eb},
                base.vertices,
                boundary,
                involution,
            ),
            SusyLabeling(
                genus,
                {f: g.color_of(f) for f in base.flags} | {ea: NS, eb: NS},
                dict(g.labeling.ns_tail_labels),
                {},
            ),
            modular=True,
        )


def enumerate_modular_shapes(
    genus: int, tail_labels: Iterable[str], max_edges: int | None = None
) -> list[SusyGraph]:
    """All stable modular graphs of the given total genus and tail label
    set, one canonical representative per isomorphism class, ordered by
    edge count and certificate."""
    labels = sorted(set(tail_labels))
    if 2 * genus - 2 + len(labels) <= 0:
        raise ValidationError(
            f"unstable enumeration request: 2*{genus} - 2 + {len(labels)} <= 0"
        )
    bound = 3 * genus - 3 + len(labels)
    limit = max_edge_limit(max_edges)
    if bound > limit:
        raise ValidationError(
            f"shape enumeration needs up to {bound} edges but the limit is "
            f"{limit}; raise {ENV_LIMIT} or pass max_edges to go further"
        )
    start = canonical_form(_corolla(genus, labels))
    found: dict[str, SusyGraph] = {start.digest: start.graph}
    frontier = [start.graph]
    depth = 0
    while frontier and depth < bound:
        depth += 1
        fresh: list[SusyGraph] = []
        for shape in frontier:
            for move in list(_split_moves(shape)) + list(_deloop_moves(shape)):
                if not is_stable(move).stable:
                    continue
                form = canonical_form(move)
                if form.digest in found:
                    continue
                found[form.digest] = form.graph
                fresh.append(form.graph)
        frontier = fresh
    out = sorted(
        found.items(), key=lambda kv: (len(edges(kv[1].graph)), kv[0])
    )
    return [g for _, g in out]


@dataclass(frozen=True)
class StratumRecord:
    shape: SusyGraph
    colorings: tuple[SusyGraph, ...]
    predicted_colorings: int


def enumerate_strata_records(
    genus: int,
    ns_labels: Iterable[str],
    r_labels: Iterable[str],
    max_edges: int | None = None,
) -> list[StratumRecord]:
    """Strata grouped by underlying modular shape.  Each record carries the
    distinct colorings (canonical representatives) and the parity-argument
    prediction for how many there are."""
    ns = sorted(set(ns_labels))
    rr = sorted(set(r_labels))
    overlap = set(ns) & set(rr)
    if overlap:
        raise ValidationError(f"labels {sorted(overlap)} are both NS and R")
    if len(rr) % 2:
        raise ValidationError("the number of R tail labels must be even")
    shapes = enumerate_modular_shapes(genus, ns + rr, max_edges)
    records = []
    for shape in shapes:
        predicted = lift_count_general(shape, set(ns), set(rr))
        if predicted == 0:
            continue
        colored = enumerate_edge_colorings(shape, set(ns), set(rr))
        seen: dict[str, SusyGraph] = {}
        for c in colored:
            form = canonical_form(c)
            if form.digest not in seen:
                seen[form.digest] = form.graph
        colorings = tuple(
            g for _, g in sorted(seen.items(), key=lambda kv: kv[0])
        )
        records.append(StratumRecord(shape, colorings, predicted))
    return records


def enumerate_strata(
    genus: int,
    ns_labels: Iterable[str],
    r_labels: Iterable[str],
    max_edges: int | None = None,
) -> list[SusyGraph]:
    """Isomorphism classes of stable SUSY graphs with the given total genus
    and labeled NS/R tails, as canonical representatives ordered by edge
    count and certificate digest."""
    out: list[SusyGraph] = []
    for rec in enumerate_strata_records(genus, ns_labels, r_labels, max_edges):
        out.extend(rec.colorings)
    return sorted(
        out,
        key=lambda g: (len(edges(g.graph)), canonical_form(g).digest),
    )


@dataclass(frozen=True)
class ContractionPoset:
    """Strata ordered by edge contraction.  ranks[i] counts edges, so the
    one-vertex stratum has rank 0 and sits at the top: contracting an edge
    moves strictly up.  covers holds pairs (i, j) where stratum j is one
    contraction away from stratum i."""

    strata: tuple[SusyGraph, ...]
    digests: tuple[str, ...]
    ranks: tuple[int, ...]
    covers: frozenset[tuple[int, int]]

    def index_of(self, g: SusyGraph) -> int:
        return self.digests.index(canonical_form(g).digest)

    def less_or_equal(self, i: int, j: int) -> bool:
        """True when stratum j is reachable from stratum i by contractions
        (i lies in the closure of j, i.e. i is deeper in the boundary)."""
        if i == j:
            return True
        frontier = {i}
        seen = {i}
        while frontier:
            nxt = set()
            for a in frontier:
                for x, y in self.covers:
                    if x == a and y not in seen:
                        nxt.add(y)
                        seen.add(y)
            if j in seen:
                return True
            frontier = nxt
        return False

    @property
    def top(self) -> int:
        tops = [i for i, r in enumerate(self.ranks) if r == 0]
        if len(tops) != 1:
            raise ValidationError("poset does not have a unique one-vertex top")
        return tops[0]


def contraction_poset(strata: Iterable[SusyGraph]) -> ContractionPoset:
    """Cover relations by single contractions among the given strata.  Every
    single-pair contraction of a listed stratum must land on a listed
    stratum (the list is closed under contraction)."""
    items = list(strata)
    digests = [canonical_form(g).digest for g in items]
    index = {d: i for i, d in enumerate(digests)}
    if len(index) != len(items):
        raise ValidationError("duplicate strata passed to contraction_poset")
    covers: set[tuple[int, int]] = set()
    for i, g in enumerate(items):
        for pair in orbit_pairs(g.graph.involution):
            step = contract_pair(g, pair)
            d = canonical_form(step.target).digest
            j = index.get(d)
            if j is None:
                raise ValidationError(
                    "contraction leaves the given stratum list; pass a list "
                    "closed under contraction"
                )
            covers.add((i, j))
    ranks = tuple(len(edges(g.graph)) for g in items)
    return ContractionPoset(tuple(items), tuple(digests), ranks, frozenset(covers))
