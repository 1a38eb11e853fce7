"""Half-edge graphs and their morphisms.

A graph is a finite set of *flags* (half-edges), each attached to a vertex
by the boundary map, together with an involution on flags.  Flags fixed by
the involution are *tails*; two-element orbits are *edges*.  Loops, parallel
edges, isolated vertices and disconnected graphs are all unproblematic in
this encoding, and #flags = #tails + 2 * #edges always holds.

Morphisms run contravariantly on flags and covariantly on vertices: a
morphism ``h: source -> target`` injects the target's flags back into the
source's flags, maps source vertices onto target vertices, and pairs up the
left-over source flags by a fixed-point-free involution recording what gets
contracted.  An orbit of that involution is either a source edge (ordinary
contraction) or a pair of distinct source tails (a grafting immediately
followed by a contraction, a "virtual" contraction).  Mergers are banned:
vertices may only acquire the same image when a chain of contracted orbits
connects them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import ValidationError

__all__ = [
    "Graph",
    "GraphMorphism",
    "ValidationReport",
    "compose",
    "disjoint_union",
    "edges",
    "flags_at",
    "identity_morphism",
    "involution_from_pairs",
    "merge_disjoint",
    "orbit_pairs",
    "tails",
    "validate_graph",
    "validate_morphism",
]


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a structural check: empty ``violations`` means valid."""

    violations: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def raise_if_invalid(self, what: str = "object") -> None:
        if self.violations:
            detail = "; ".join(self.violations)
            raise ValidationError(f"invalid {what}: {detail}")


def _freeze_str_set(value: Iterable[str]) -> frozenset[str]:
    out = frozenset(value)
    if not all(isinstance(x, str) for x in out):
        raise ValidationError("identifiers must be strings")
    return out


@dataclass(frozen=True)
class Graph:
    """Immutable half-edge graph.

    ``boundary`` sends each flag to the vertex carrying it; ``involution``
    is the flag pairing (identity on tails).  Instances are plain values:
    two graphs are equal exactly when all four fields agree.
    """

    flags: frozenset[str]
    vertices: frozenset[str]
    boundary: dict[str, str]
    involution: dict[str, str]

    def __post_init__(self) -> None:
        object.__setattr__(self, "flags", _freeze_str_set(self.flags))
        object.__setattr__(self, "vertices", _freeze_str_set(self.vertices))
        object.__setattr__(self, "boundary", dict(self.boundary))
        object.__setattr__(self, "involution", dict(self.involution))


def validate_graph(g: Graph) -> ValidationReport:
    """Check the graph axioms and report every violation found."""
    problems: list[str] = []
    if set(g.boundary) != set(g.flags):
        problems.append("boundary: domain must be exactly the flag set")
    else:
        bad = sorted(v for v in g.boundary.values() if v not in g.vertices)
        if bad:
            problems.append(f"boundary: unknown vertices {bad}")
    if set(g.involution) != set(g.flags):
        problems.append("involution: domain must be exactly the flag set")
    else:
        bad = sorted(f for f in g.involution.values() if f not in g.flags)
        if bad:
            problems.append(f"involution: unknown flags {bad}")
        else:
            not_inv = sorted(
                f for f in g.flags if g.involution[g.involution[f]] != f
            )
            if not_inv:
                problems.append(f"involution: not an involution at {not_inv}")
    return ValidationReport(tuple(problems))


def require_graph(g: Graph) -> None:
    validate_graph(g).raise_if_invalid("graph")


def tails(g: Graph) -> list[str]:
    """Flags fixed by the involution, sorted."""
    return sorted(f for f in g.flags if g.involution[f] == f)


def edges(g: Graph) -> list[tuple[str, str]]:
    """Two-element involution orbits as sorted pairs, sorted."""
    seen = set()
    out = []
    for f in g.flags:
        p = g.involution[f]
        if p != f and f not in seen:
            seen.add(f)
            seen.add(p)
            out.append((f, p) if f < p else (p, f))
    return sorted(out)


def flags_at(g: Graph, v: str) -> list[str]:
    """Flags attached to vertex ``v``, sorted; KeyError on unknown vertex."""
    if v not in g.vertices:
        raise KeyError(f"unknown vertex {v!r}")
    return sorted(f for f in g.flags if g.boundary[f] == v)


def connected_components(g: Graph) -> list[frozenset[str]]:
    """Vertex sets of the connected components (edges as adjacency)."""
    parent: dict[str, str] = {v: v for v in g.vertices}

    def find(x: str) -> str:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges(g):
        ra, rb = find(g.boundary[a]), find(g.boundary[b])
        if ra != rb:
            parent[ra] = rb
    groups: dict[str, set[str]] = {}
    for v in g.vertices:
        groups.setdefault(find(v), set()).add(v)
    return [frozenset(s) for s in groups.values()]


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def involution_from_pairs(pairs: Iterable[tuple[str, str]]) -> dict[str, str]:
    """Build a fixed-point-free involution dict from unordered pairs."""
    out: dict[str, str] = {}
    for a, b in pairs:
        if a == b:
            raise ValidationError(f"contracted pair ({a!r}, {b!r}) is degenerate")
        if a in out or b in out:
            raise ValidationError(f"flag reused across contracted pairs: {a!r}/{b!r}")
        out[a] = b
        out[b] = a
    return out


def orbit_pairs(involution: Mapping[str, str]) -> list[tuple[str, str]]:
    """Two-element orbits of an involution dict as sorted pairs, sorted."""
    seen = set()
    out = []
    for f, p in involution.items():
        if p != f and f not in seen:
            seen.add(f)
            seen.add(p)
            out.append((f, p) if f < p else (p, f))
    return sorted(out)


@dataclass(frozen=True)
class GraphMorphism:
    """Morphism of half-edge graphs.

    ``flag_map`` sends every target flag to a source flag (injectively);
    ``vertex_map`` sends every source vertex to a target vertex
    (surjectively); ``contracted`` is a fixed-point-free involution on the
    source flags missing from ``flag_map``'s image, stored with both
    directions present.
    """

    source: Graph
    target: Graph
    flag_map: dict[str, str]
    vertex_map: dict[str, str]
    contracted: dict[str, str]

    def __post_init__(self) -> None:
        object.__setattr__(self, "flag_map", dict(self.flag_map))
        object.__setattr__(self, "vertex_map", dict(self.vertex_map))
        object.__setattr__(self, "contracted", dict(self.contracted))

    def contracted_pairs(self) -> list[tuple[str, str]]:
        return orbit_pairs(self.contracted)


def validate_morphism(h: GraphMorphism) -> ValidationReport:
    """Check every morphism axiom; graph-level problems are reported too."""
    problems: list[str] = []
    for g, name in ((h.source, "source"), (h.target, "target")):
        rep = validate_graph(g)
        if not rep.ok:
            problems.extend(f"{name} graph: {p}" for p in rep.violations)
    if problems:
        return ValidationReport(tuple(problems))

    src, tgt = h.source, h.target

    if set(h.flag_map) != set(tgt.flags):
        problems.append("flag_map: domain must be exactly the target flag set")
    if not set(h.flag_map.values()) <= set(src.flags):
        problems.append("flag_map: values must be source flags")
    if len(set(h.flag_map.values())) != len(h.flag_map):
        problems.append("flag_map: must be injective")

    if set(h.vertex_map) != set(src.vertices):
        problems.append("vertex_map: domain must be exactly the source vertex set")
    if not set(h.vertex_map.values()) <= set(tgt.vertices):
        problems.append("vertex_map: values must be target vertices")
    elif set(h.vertex_map.values()) != set(tgt.vertices):
        problems.append("vertex_map: must be surjective")

    if problems:
        return ValidationReport(tuple(problems))

    for f, pre in h.flag_map.items():
        if h.vertex_map[src.boundary[pre]] != tgt.boundary[f]:
            problems.append(
                f"flag_map: boundary incompatible at target flag {f!r}"
            )

    image = set(h.flag_map.values())
    for f in tails(tgt):
        pre = h.flag_map[f]
        if src.involution[pre] != pre:
            problems.append(f"tail {f!r} pulls back to a non-tail {pre!r}")
    for a, b in edges(tgt):
        pa, pb = h.flag_map[a], h.flag_map[b]
        edge_preserved = src.involution[pa] == pb
        both_tails = src.involution[pa] == pa and src.involution[pb] == pb
        if not (edge_preserved or both_tails):
            problems.append(
                f"edge ({a!r}, {b!r}) pulls back to neither an edge nor a tail pair"
            )

    leftover = set(src.flags) - image
    if set(h.contracted) != leftover:
        problems.append(
            "contracted: domain must be exactly the source flags outside "
            "the flag_map image"
        )
    else:
        for f, p in h.contracted.items():
            if p not in h.contracted or h.contracted[p] != f:
                problems.append(f"contracted: not an involution at {f!r}")
                break
            if p == f:
                problems.append(f"contracted: fixed point at {f!r}")
                break
        else:
            for a, b in orbit_pairs(h.contracted):
                is_edge = src.involution[a] == b
                both_tails = src.involution[a] == a and src.involution[b] == b
                if not (is_edge or both_tails):
                    problems.append(
                        f"contracted orbit ({a!r}, {b!r}) is neither a source "
                        "edge nor a pair of distinct tails"
                    )
                if h.vertex_map[src.boundary[a]] != h.vertex_map[src.boundary[b]]:
                    problems.append(
                        f"contracted orbit ({a!r}, {b!r}) straddles two "
                        "target vertices"
                    )

    if problems:
        return ValidationReport(tuple(problems))

    # Merger ban: preimages of a vertex must be connected by contracted
    # orbits (genuine edges or virtually contracted tail pairs alike).
    fibers: dict[str, set[str]] = {}
    for v, w in h.vertex_map.items():
        fibers.setdefault(w, set()).add(v)
    adjacency: dict[str, set[str]] = {v: set() for v in src.vertices}
    for a, b in orbit_pairs(h.contracted):
        va, vb = src.boundary[a], src.boundary[b]
        adjacency[va].add(vb)
        adjacency[vb].add(va)
    for w, fiber in fibers.items():
        if len(fiber) == 1:
            continue
        start = next(iter(fiber))
        seen = {start}
        stack = [start]
        while stack:
            cur = stack.pop()
            for nxt in adjacency[cur]:
                if nxt in fiber and nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        if seen != fiber:
            problems.append(
                f"vertices {sorted(fiber)} merge into {w!r} without a "
                "connecting chain of contracted orbits"
            )

    return ValidationReport(tuple(problems))


def identity_morphism(g: Graph) -> GraphMorphism:
    return GraphMorphism(
        source=g,
        target=g,
        flag_map={f: f for f in g.flags},
        vertex_map={v: v for v in g.vertices},
        contracted={},
    )


def compose(h: GraphMorphism, f: GraphMorphism) -> GraphMorphism:
    """Diagrammatic composite of ``h: a -> b`` then ``f: b -> c``.

    Flag maps compose contravariantly, vertex maps covariantly, and the
    composite contracts ``h``'s orbits together with the ``h``-pullback of
    ``f``'s orbits.
    """
    if h.target != f.source:
        raise ValidationError("compose: endpoints do not match")
    flag_map = {fc: h.flag_map[fb] for fc, fb in f.flag_map.items()}
    vertex_map = {va: f.vertex_map[vb] for va, vb in h.vertex_map.items()}
    contracted = dict(h.contracted)
    for x, y in f.contracted.items():
        contracted[h.flag_map[x]] = h.flag_map[y]
    return GraphMorphism(h.source, f.target, flag_map, vertex_map, contracted)


def disjoint_union(g1: Graph, g2: Graph, tags: tuple[str, str] = ("0", "1")) -> Graph:
    """Monoidal sum; identifiers are tagged ``{tag}:{id}`` to stay disjoint."""
    t1, t2 = tags

    def re1(x: str) -> str:
        return f"{t1}:{x}"

    def re2(x: str) -> str:
        return f"{t2}:{x}"

    return Graph(
        flags=frozenset(map(re1, g1.flags)) | frozenset(map(re2, g2.flags)),
        vertices=frozenset(map(re1, g1.vertices)) | frozenset(map(re2, g2.vertices)),
        boundary={
            **{re1(f): re1(v) for f, v in g1.boundary.items()},
            **{re2(f): re2(v) for f, v in g2.boundary.items()},
        },
        involution={
            **{re1(f): re1(p) for f, p in g1.involution.items()},
            **{re2(f): re2(p) for f, p in g2.involution.items()},
        },
    )


def merge_disjoint(graphs: Iterable[Graph]) -> Graph:
    """Union of graphs whose identifier sets are already pairwise disjoint.

    Unlike :func:`disjoint_union` this keeps identifiers untouched, which is
    what the atomization square needs.
    """
    flags: set[str] = set()
    vertices: set[str] = set()
    boundary: dict[str, str] = {}
    involution: dict[str, str] = {}
    for g in graphs:
        if flags & g.flags or vertices & g.vertices:
            raise ValidationError("merge_disjoint: identifier collision")
        flags |= g.flags
        vertices |= g.vertices
        boundary.update(g.boundary)
        involution.update(g.involution)
    return Graph(frozenset(flags), frozenset(vertices), boundary, involution)
