"""Genus labels, NS/R colorings and tail labelings on half-edge graphs.

A SUSY graph is a half-edge graph whose vertices carry genera, whose flags
carry one of the two colors NS (Neveu-Schwarz) and R (Ramond) compatibly
with the edge pairing, and whose tails are labeled by two disjoint finite
index sets, one per color.  Every vertex must see an even number of R flags,
which forces the total number of R tails to be even.

Genus-labeled graphs without colors ("modular" graphs) are represented as
SUSY graphs in an all-NS view with ``modular=True``; :func:`forget` erases
colors down to that view and :func:`include` reinterprets an all-NS view as
a genuine SUSY graph, so forget-after-include is the identity.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, Mapping

from .errors import ValidationError
from .graphs import (
    Graph,
    GraphMorphism,
    ValidationReport,
    connected_components,
    edges,
    flags_at,
    orbit_pairs,
    tails,
    validate_graph,
    validate_morphism,
)
from . import graphs as _graphs

__all__ = [
    "NS",
    "R",
    "StabilityReport",
    "SusyGraph",
    "SusyLabeling",
    "SusyMorphism",
    "compose",
    "disjoint_union",
    "forget",
    "genus",
    "include",
    "is_stable",
    "susy_graph",
    "modular_graph",
    "susy_identity",
    "susy_morphism",
    "validate_susy_graph",
    "validate_susy_morphism",
]

NS = "NS"
R = "R"


@dataclass(frozen=True)
class SusyLabeling:
    """Genus, color and tail-labeling data riding on top of a graph.

    ``ns_tail_labels`` and ``r_tail_labels`` map external labels to tail
    flags, bijectively onto the NS and R tails respectively.
    """

    genus: dict[str, int]
    color: dict[str, str]
    ns_tail_labels: dict[str, str]
    r_tail_labels: dict[str, str]

    def __post_init__(self) -> None:
        object.__setattr__(self, "genus", dict(self.genus))
        object.__setattr__(self, "color", dict(self.color))
        object.__setattr__(self, "ns_tail_labels", dict(self.ns_tail_labels))
        object.__setattr__(self, "r_tail_labels", dict(self.r_tail_labels))


@dataclass(frozen=True)
class SusyGraph:
    """A half-edge graph with SUSY labeling; ``modular`` marks the
    color-erased view used for plain genus-labeled graphs."""

    graph: Graph
    labeling: SusyLabeling
    modular: bool = False

    # Delegation keeps call sites terse without hiding the composition.
    @property
    def flags(self) -> frozenset[str]:
        return self.graph.flags

    @property
    def vertices(self) -> frozenset[str]:
        return self.graph.vertices

    @property
    def boundary(self) -> dict[str, str]:
        return self.graph.boundary

    @property
    def involution(self) -> dict[str, str]:
        return self.graph.involution

    def genus_of(self, v: str) -> int:
        return self.labeling.genus[v]

    def color_of(self, f: str) -> str:
        return self.labeling.color[f]

    def ns_labels(self) -> frozenset[str]:
        return frozenset(self.labeling.ns_tail_labels)

    def r_labels(self) -> frozenset[str]:
        return frozenset(self.labeling.r_tail_labels)

    def merged_tail_labels(self) -> dict[str, str]:
        return {**self.labeling.ns_tail_labels, **self.labeling.r_tail_labels}


def susy_graph(
    flags: Iterable[str],
    vertices: Iterable[str],
    boundary: Mapping[str, str],
    involution: Mapping[str, str],
    genus: Mapping[str, int],
    color: Mapping[str, str],
    ns_labels: Mapping[str, str] | None = None,
    r_labels: Mapping[str, str] | None = None,
    modular: bool = False,
) -> SusyGraph:
    """Assemble a SusyGraph; labelings default to tails labeling themselves."""
    g = Graph(frozenset(flags), frozenset(vertices), dict(boundary), dict(involution))
    color = dict(color)
    if ns_labels is None:
        ns_labels = {f: f for f in tails(g) if color.get(f) == NS}
    if r_labels is None:
        r_labels = {f: f for f in tails(g) if color.get(f) == R}
    lab = SusyLabeling(dict(genus), color, dict(ns_labels), dict(r_labels))
    return SusyGraph(g, lab, modular)


def modular_graph(
    flags: Iterable[str],
    vertices: Iterable[str],
    boundary: Mapping[str, str],
    involution: Mapping[str, str],
    genus: Mapping[str, int],
    tail_labels: Mapping[str, str] | None = None,
) -> SusyGraph:
    """Genus-labeled graph without colors, i.e. the all-NS modular view."""
    g = Graph(frozenset(flags), frozenset(vertices), dict(boundary), dict(involution))
    if tail_labels is None:
        tail_labels = {f: f for f in tails(g)}
    return SusyGraph(
        g,
        SusyLabeling(
            genus=dict(genus),
            color={f: NS for f in g.flags},
            ns_tail_labels=dict(tail_labels),
            r_tail_labels={},
        ),
        modular=True,
    )


def validate_susy_graph(g: SusyGraph) -> ValidationReport:
    problems = list(validate_graph(g.graph).violations)
    if problems:
        return ValidationReport(tuple(problems))
    base = g.graph
    lab = g.labeling

    if set(lab.genus) != set(base.vertices):
        problems.append("genus: domain must be exactly the vertex set")
    else:
        bad = sorted(v for v, k in lab.genus.items() if not isinstance(k, int) or k < 0)
        if bad:
            problems.append(f"genus: negative or non-integer at {bad}")

    if set(lab.color) != set(base.flags):
        problems.append("color: domain must be exactly the flag set")
    else:
        bad = sorted(f for f, c in lab.color.items() if c not in (NS, R))
        if bad:
            problems.append(f"color: values must be NS or R, got bad flags {bad}")
        else:
            mismatched = sorted(
                f for f in base.flags if lab.color[base.involution[f]] != lab.color[f]
            )
            if mismatched:
                problems.append(
                    f"color: edge flags disagree across the involution at {mismatched}"
                )
            for v in sorted(base.vertices):
                r_count = sum(
                    1 for f in base.flags if base.boundary[f] == v and lab.color[f] == R
                )
                if r_count % 2:
                    problems.append(f"vertex {v!r} sees an odd number of R flags")

    if not problems:
        tail_set = set(tails(base))
        ns_tails = {f for f in tail_set if lab.color[f] == NS}
        r_tails = tail_set - ns_tails
        for name, mapping, expect in (
            ("NS", lab.ns_tail_labels, ns_tails),
            ("R", lab.r_tail_labels, r_tails),
        ):
            values = list(mapping.values())
            if len(set(values)) != len(values) or set(values) != expect:
                problems.append(
                    f"{name} tail labeling must be a bijection onto the {name} tails"
                )
        if set(lab.ns_tail_labels) & set(lab.r_tail_labels):
            problems.append("NS and R label sets must be disjoint")

    if g.modular:
        if any(c != NS for c in lab.color.values()):
            problems.append("modular view must be colored all-NS")
        if lab.r_tail_labels:
            problems.append("modular view must keep every label in the NS slot")

    return ValidationReport(tuple(problems))


def require_susy(g: SusyGraph) -> None:
    validate_susy_graph(g).raise_if_invalid("SUSY graph")


@dataclass(frozen=True)
class SusyMorphism:
    """A graph morphism whose endpoints carry SUSY labelings."""

    source: SusyGraph
    target: SusyGraph
    map: GraphMorphism

    @property
    def flag_map(self) -> dict[str, str]:
        return self.map.flag_map

    @property
    def vertex_map(self) -> dict[str, str]:
        return self.map.vertex_map

    @property
    def contracted(self) -> dict[str, str]:
        return self.map.contracted

    def contracted_pairs(self) -> list[tuple[str, str]]:
        return self.map.contracted_pairs()


def susy_morphism(
    source: SusyGraph,
    target: SusyGraph,
    flag_map: Mapping[str, str],
    vertex_map: Mapping[str, str],
    contracted_pairs: Iterable[tuple[str, str]] = (),
) -> SusyMorphism:
    return SusyMorphism(
        source,
        target,
        GraphMorphism(
            source.graph,
            target.graph,
            dict(flag_map),
            dict(vertex_map),
            _graphs.involution_from_pairs(list(contracted_pairs)),
        ),
    )


def validate_susy_morphism(h: SusyMorphism) -> ValidationReport:
    """Graph-morphism axioms plus genus bookkeeping and color preservation."""
    problems: list[str] = []
    for g, name in ((h.source, "source"), (h.target, "target")):
        rep = validate_susy_graph(g)
        if not rep.ok:
            problems.extend(f"{name}: {p}" for p in rep.violations)
    if h.map.source != h.source.graph or h.map.target != h.target.graph:
        problems.append("underlying map endpoints disagree with the SUSY endpoints")
    if h.source.modular != h.target.modular:
        problems.append("morphism mixes the modular view with genuine SUSY graphs")
    if problems:
        return ValidationReport(tuple(problems))

    problems = list(validate_morphism(h.map).violations)
    if problems:
        return ValidationReport(tuple(problems))

    src, tgt = h.source, h.target
    for f, pre in h.flag_map.items():
        if src.color_of(pre) != tgt.color_of(f):
            problems.append(f"color not preserved at target flag {f!r}")
    for a, b in orbit_pairs(h.contracted):
        if src.color_of(a) != src.color_of(b):
            problems.append(f"contracted orbit ({a!r}, {b!r}) mixes colors")

    # Each image vertex carries the summed genus of its fiber plus the number
    # of independent cycles formed by the contracted orbits over that fiber.
    fibers: dict[str, list[str]] = {}
    for v, w in h.vertex_map.items():
        fibers.setdefault(w, []).append(v)
    orbits_at: dict[str, int] = {w: 0 for w in tgt.vertices}
    for a, b in orbit_pairs(h.contracted):
        orbits_at[h.vertex_map[src.boundary[a]]] += 1
    for w, fiber in fibers.items():
        expected = (
            sum(src.genus_of(v) for v in fiber) + orbits_at[w] - len(fiber) + 1
        )
        if tgt.genus_of(w) != expected:
            problems.append(
                f"genus at {w!r} should be {expected}, found {tgt.genus_of(w)}"
            )

    return ValidationReport(tuple(problems))


def susy_identity(g: SusyGraph) -> SusyMorphism:
    return SusyMorphism(g, g, _graphs.identity_morphism(g.graph))


def compose(h, f):
    """Composite of two morphisms, SUSY-labeled or plain."""
    if isinstance(h, SusyMorphism) and isinstance(f, SusyMorphism):
        if h.target != f.source:
            raise ValidationError("compose: endpoints do not match")
        return SusyMorphism(h.source, f.target, _graphs.compose(h.map, f.map))
    if isinstance(h, GraphMorphism) and isinstance(f, GraphMorphism):
        return _graphs.compose(h, f)
    raise TypeError("compose expects two morphisms of the same kind")


def genus(g: SusyGraph) -> int:
    """Total genus: per component, sum of (vertex genus - 1) + #edges + 1."""
    total = 0
    edge_list = edges(g.graph)
    for comp in connected_components(g.graph):
        comp_edges = sum(1 for a, _ in edge_list if g.boundary[a] in comp)
        total += sum(g.genus_of(v) - 1 for v in comp) + comp_edges + 1
    return total


@dataclass(frozen=True)
class StabilityReport:
    stable: bool
    unstable_vertices: tuple[str, ...]


def is_stable(g: SusyGraph) -> StabilityReport:
    """Stability: 2*genus(v) - 2 + #flags(v) > 0 at every vertex."""
    degree: dict[str, int] = {v: 0 for v in g.vertices}
    for f in g.flags:
        degree[g.boundary[f]] += 1
    bad = tuple(
        sorted(v for v in g.vertices if 2 * g.genus_of(v) - 2 + degree[v] <= 0)
    )
    return StabilityReport(not bad, bad)


def forget(x):
    """Erase colors: SUSY graphs (or morphisms) down to the modular view.

    Labels from both slots are merged into the single (all-NS) slot, which
    is well defined because the label sets are disjoint.
    """
    if isinstance(x, SusyMorphism):
        return SusyMorphism(forget(x.source), forget(x.target), x.map)
    g: SusyGraph = x
    lab = g.labeling
    return SusyGraph(
        g.graph,
        SusyLabeling(
            genus=dict(lab.genus),
            color={f: NS for f in g.flags},
            ns_tail_labels=g.merged_tail_labels(),
            r_tail_labels={},
        ),
        modular=True,
    )


def include(x):
    """Reinterpret a modular graph (or morphism) as an all-NS SUSY graph."""
    if isinstance(x, SusyMorphism):
        return SusyMorphism(include(x.source), include(x.target), x.map)
    g: SusyGraph = x
    if not g.modular:
        raise ValidationError("include expects the modular view")
    return replace(g, modular=False)


def disjoint_union(
    g1: SusyGraph, g2: SusyGraph, tags: tuple[str, str] = ("0", "1")
) -> SusyGraph:
    """Tagged monoidal sum carrying genus, colors and labels along."""
    t1, t2 = tags
    base = _graphs.disjoint_union(g1.graph, g2.graph, tags)
    lab = SusyLabeling(
        genus={
            **{f"{t1}:{v}": k for v, k in g1.labeling.genus.items()},
            **{f"{t2}:{v}": k for v, k in g2.labeling.genus.items()},
        },
        color={
            **{f"{t1}:{f}": c for f, c in g1.labeling.color.items()},
            **{f"{t2}:{f}": c for f, c in g2.labeling.color.items()},
        },
        ns_tail_labels={
            **{f"{t1}:{l}": f"{t1}:{f}" for l, f in g1.labeling.ns_tail_labels.items()},
            **{f"{t2}:{l}": f"{t2}:{f}" for l, f in g2.labeling.ns_tail_labels.items()},
        },
        r_tail_labels={
            **{f"{t1}:{l}": f"{t1}:{f}" for l, f in g1.labeling.r_tail_labels.items()},
            **{f"{t2}:{l}": f"{t2}:{f}" for l, f in g2.labeling.r_tail_labels.items()},
        },
    )
    if g1.modular != g2.modular:
        raise ValidationError("disjoint_union: cannot mix modular and SUSY views")
    return SusyGraph(base, lab, g1.modular)
