"""Configurations of degenerate curves and their dual graphs.

A :class:`CurveConfig` records the combinatorics of a degenerating curve:
components with genera, special points on each component (punctures and
node-halves, each colored NS or R, punctures carrying marked-point labels),
and a pairing matching node-halves into nodes.  The dual graph turns
components into vertices, special points into flags, and the node pairing
into the edge involution.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import ValidationError
from .graphs import Graph, ValidationReport
from .susy import NS, R, SusyGraph, SusyLabeling, forget, validate_susy_graph

__all__ = [
    "Component",
    "CurveConfig",
    "SpecialPoint",
    "colorless_dual_graph",
    "dual_graph",
    "reduction_compatibility",
    "validate_curve_config",
]

PUNCTURE = "puncture"
NODE_HALF = "node-half"


@dataclass(frozen=True)
class SpecialPoint:
    id: str
    color: str
    kind: str
    label: str | None = None


@dataclass(frozen=True)
class Component:
    genus: int
    special_points: tuple[SpecialPoint, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "special_points", tuple(self.special_points))


@dataclass(frozen=True)
class CurveConfig:
    components: tuple[Component, ...]
    node_pairing: tuple[tuple[str, str], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(
            self, "node_pairing", tuple(tuple(p) for p in self.node_pairing)
        )


def component_id(index: int) -> str:
    """Components are identified positionally in the dual graph."""
    return f"c{index}"


def validate_curve_config(c: CurveConfig) -> ValidationReport:
    problems: list[str] = []
    seen_ids: set[str] = set()
    ns_labels: set[str] = set()
    r_labels: set[str] = set()
    halves: set[str] = set()

    for idx, comp in enumerate(c.components):
        where = f"component {idx}"
        if not isinstance(comp.genus, int) or comp.genus < 0:
            problems.append(f"{where}: genus must be a non-negative integer")
        r_count = 0
        for pt in comp.special_points:
            if pt.id in seen_ids:
                problems.append(f"{where}: duplicate point id {pt.id!r}")
            seen_ids.add(pt.id)
            if pt.color not in (NS, R):
                problems.append(f"{where}: point {pt.id!r} has bad color {pt.color!r}")
            elif pt.color == R:
                r_count += 1
            if pt.kind == PUNCTURE:
                if pt.label is None:
                    problems.append(f"{where}: puncture {pt.id!r} needs a label")
                elif pt.color == NS:
                    if pt.label in ns_labels:
                        problems.append(f"duplicate NS label {pt.label!r}")
                    ns_labels.add(pt.label)
                else:
                    if pt.label in r_labels:
                        problems.append(f"duplicate R label {pt.label!r}")
                    r_labels.add(pt.label)
            elif pt.kind == NODE_HALF:
                if pt.label is not None:
                    problems.append(f"{where}: node-half {pt.id!r} cannot be labeled")
                halves.add(pt.id)
            else:
                problems.append(f"{where}: point {pt.id!r} has bad kind {pt.kind!r}")
        if r_count % 2:
            problems.append(f"{where}: odd number of R special points")
        if 2 * comp.genus - 2 + len(comp.special_points) <= 0:
            problems.append(f"{where}: unstable (2g - 2 + #points <= 0)")

    if ns_labels & r_labels:
        problems.append("NS and R puncture labels must be disjoint")

    paired: set[str] = set()
    color_of = {
        pt.id: pt.color for comp in c.components for pt in comp.special_points
    }
    for a, b in c.node_pairing:
        if a == b:
            problems.append(f"node pairing ({a!r}, {b!r}) is degenerate")
            continue
        for x in (a, b):
            if x not in halves:
                problems.append(f"node pairing mentions non-half {x!r}")
            if x in paired:
                problems.append(f"node-half {x!r} paired twice")
            paired.add(x)
        if a in color_of and b in color_of and color_of[a] != color_of[b]:
            problems.append(f"paired halves ({a!r}, {b!r}) disagree in color")
    unpaired = halves - paired
    if unpaired:
        problems.append(f"unpaired node-halves {sorted(unpaired)}")

    return ValidationReport(tuple(problems))


def dual_graph(c: CurveConfig) -> SusyGraph:
    """Dual SUSY graph: components become vertices, special points flags,
    nodes edges; puncture labels carry over as tail labels."""
    validate_curve_config(c).raise_if_invalid("curve configuration")
    boundary: dict[str, str] = {}
    color: dict[str, str] = {}
    genus: dict[str, int] = {}
    ns_tail_labels: dict[str, str] = {}
    r_tail_labels: dict[str, str] = {}
    flags: list[str] = []
    for idx, comp in enumerate(c.components):
        v = component_id(idx)
        genus[v] = comp.genus
        for pt in comp.special_points:
            flags.append(pt.id)
            boundary[pt.id] = v
            color[pt.id] = pt.color
            if pt.kind == PUNCTURE:
                if pt.color == NS:
                    ns_tail_labels[pt.label] = pt.id
                else:
                    r_tail_labels[pt.label] = pt.id
    involution = {f: f for f in flags}
    for a, b in c.node_pairing:
        involution[a] = b
        involution[b] = a
    out = SusyGraph(
        Graph(frozenset(flags), frozenset(genus), boundary, involution),
        SusyLabeling(genus, color, ns_tail_labels, r_tail_labels),
        modular=False,
    )
    validate_susy_graph(out).raise_if_invalid("dual graph")
    return out


def colorless_dual_graph(c: CurveConfig) -> SusyGraph:
    """Dual graph built directly in the colorless (modular) view: colors
    erased, puncture labels merged into one labeling."""
    colored = dual_graph(c)
    lab = colored.labeling
    return SusyGraph(
        colored.graph,
        SusyLabeling(
            genus=dict(lab.genus),
            color={f: NS for f in colored.flags},
            ns_tail_labels=colored.merged_tail_labels(),
            r_tail_labels={},
        ),
        modular=True,
    )


def reduction_compatibility(c: CurveConfig) -> bool:
    """Erasing colors commutes with taking dual graphs."""
    return forget(dual_graph(c)) == colorless_dual_graph(c)
