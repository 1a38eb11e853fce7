"""Structure theory of SUSY graph morphisms.

Every morphism factors into elementary steps: one grafting (tail pairs
joined into edges), a chain of single-orbit contractions, and a final
isomorphism.  This module builds the elementary morphisms, classifies
them, decomposes arbitrary morphisms deterministically, atomizes a
morphism into its per-target-vertex pieces, and witnesses the two
commutation lemmas (isomorphisms slide past contractions; disjoint
contractions commute).

Identifier conventions: contracting an edge between distinct vertices
names the merged vertex by joining the sorted ``*``-separated parts of
the two old names, so iterated contractions reach the same name in any
order; a fresh name colliding with an existing vertex gains ``'`` marks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import ValidationError
from .graphs import (
    Graph,
    edges,
    orbit_pairs,
    tails,
)
from .susy import (
    NS,
    R,
    SusyGraph,
    SusyLabeling,
    SusyMorphism,
    compose,
    susy_identity,
    susy_morphism,
    validate_susy_morphism,
)

__all__ = [
    "Atomization",
    "CommutedContractions",
    "CommutedSquare",
    "Elementary",
    "atomize",
    "classify",
    "commute_contractions",
    "commute_iso_contraction",
    "compose_chain",
    "contract_edge",
    "contract_loop",
    "contract_pair",
    "contract_tails",
    "decompose_to_elementaries",
    "graft",
    "iso_between",
    "make_isomorphism",
    "total_grafting",
]

_ELEMENTARY_KINDS = (
    "identity",
    "isomorphism",
    "grafting",
    "edge_contraction",
    "loop_contraction",
    "virtual_contraction",
    "composite",
)


@dataclass(frozen=True)
class Elementary:
    """A morphism together with its elementary classification.

    ``pairs`` carries the grafted tail pairs or the single contracted
    pair; isomorphism payloads live on the morphism's own maps.
    """

    kind: str
    morphism: SusyMorphism
    pairs: tuple[tuple[str, str], ...] = ()


def merged_vertex_id(v1: str, v2: str, taken: Iterable[str]) -> str:
    parts = sorted(v1.split("*") + v2.split("*"))
    candidate = "*".join(parts)
    taken = set(taken)
    while candidate in taken:
        candidate += "'"
    return candidate


def _sorted_pair(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a < b else (b, a)


def graft(g: SusyGraph, pairs: Iterable[tuple[str, str]]) -> SusyMorphism:
    """Join pairs of distinct same-color tails into edges.

    The underlying flag and vertex sets are untouched: only the involution
    grows, and the grafted tails' labels drop out of the labeling.
    """
    pair_list = [_sorted_pair(*p) for p in pairs]
    used: set[str] = set()
    tail_set = set(tails(g.graph))
    for a, b in pair_list:
        if a == b:
            raise ValidationError(f"graft: pair ({a!r}, {b!r}) is degenerate")
        if a not in tail_set or b not in tail_set:
            raise ValidationError(f"graft: ({a!r}, {b!r}) must both be tails")
        if a in used or b in used:
            raise ValidationError(f"graft: flag reused at ({a!r}, {b!r})")
        if g.color_of(a) != g.color_of(b):
            raise ValidationError(f"graft: ({a!r}, {b!r}) mixes colors")
        used.update((a, b))

    involution = dict(g.involution)
    for a, b in pair_list:
        involution[a] = b
        involution[b] = a
    lab = g.labeling
    target = SusyGraph(
        Graph(g.flags, g.vertices, dict(g.boundary), involution),
        SusyLabeling(
            genus=dict(lab.genus),
            color=dict(lab.color),
            ns_tail_labels={l: f for l, f in lab.ns_tail_labels.items() if f not in used},
            r_tail_labels={l: f for l, f in lab.r_tail_labels.items() if f not in used},
        ),
        modular=g.modular,
    )
    return susy_morphism(
        g,
        target,
        flag_map={f: f for f in g.flags},
        vertex_map={v: v for v in g.vertices},
    )


def _contract(g: SusyGraph, pair: tuple[str, str], virtual: bool) -> SusyMorphism:
    a, b = _sorted_pair(*pair)
    if a == b or a not in g.flags or b not in g.flags:
        raise ValidationError(f"contract: bad pair ({a!r}, {b!r})")
    if virtual:
        tail_set = set(tails(g.graph))
        if a not in tail_set or b not in tail_set:
            raise ValidationError(
                f"virtual contraction needs two tails, got ({a!r}, {b!r})"
            )
        if g.color_of(a) != g.color_of(b):
            raise ValidationError(f"contract: ({a!r}, {b!r}) mixes colors")
    else:
        if g.involution[a] != b:
            raise ValidationError(f"contract: ({a!r}, {b!r}) is not an edge")

    va, vb = g.boundary[a], g.boundary[b]
    lab = g.labeling
    new_flags = frozenset(g.flags - {a, b})
    boundary = {f: v for f, v in g.boundary.items() if f not in (a, b)}
    involution = {f: p for f, p in g.involution.items() if f not in (a, b)}
    genus = dict(lab.genus)
    if va == vb:
        vertices = g.vertices
        vertex_map = {v: v for v in g.vertices}
        genus[va] += 1
    else:
        merged = merged_vertex_id(va, vb, g.vertices - {va, vb})
        vertices = frozenset((g.vertices - {va, vb}) | {merged})
        vertex_map = {v: (merged if v in (va, vb) else v) for v in g.vertices}
        boundary = {f: (merged if v in (va, vb) else v) for f, v in boundary.items()}
        genus = {v: lab.genus[v] for v in g.vertices if v not in (va, vb)}
        genus[merged] = lab.genus[va] + lab.genus[vb]
    target = SusyGraph(
        Graph(new_flags, vertices, boundary, involution),
        SusyLabeling(
            genus=genus,
            color={f: c for f, c in lab.color.items() if f not in (a, b)},
            ns_tail_labels={
                l: f for l, f in lab.ns_tail_labels.items() if f not in (a, b)
            },
            r_tail_labels={
                l: f for l, f in lab.r_tail_labels.items() if f not in (a, b)
            },
        ),
        modular=g.modular,
    )
    return susy_morphism(
        g,
        target,
        flag_map={f: f for f in new_flags},
        vertex_map=vertex_map,
        contracted_pairs=[(a, b)],
    )


def contract_edge(g: SusyGraph, pair: tuple[str, str]) -> SusyMorphism:
    """Contract an edge between two distinct vertices, summing their genera."""
    a, b = pair
    if g.boundary[a] == g.boundary[b]:
        raise ValidationError("contract_edge: pair is a loop; use contract_loop")
    return _contract(g, pair, virtual=False)


def contract_loop(g: SusyGraph, pair: tuple[str, str]) -> SusyMorphism:
    """Contract a loop, raising its vertex's genus by one."""
    a, b = pair
    if g.boundary[a] != g.boundary[b]:
        raise ValidationError("contract_loop: pair is not a loop")
    return _contract(g, pair, virtual=False)


def contract_pair(g: SusyGraph, pair: tuple[str, str]) -> SusyMorphism:
    """Contract an edge, a loop, or (virtually) a pair of tails."""
    a, b = pair
    if a in g.flags and b in g.flags and g.involution[a] == b:
        return _contract(g, pair, virtual=False)
    return _contract(g, pair, virtual=True)


def contract_tails(g: SusyGraph, pair: tuple[str, str]) -> SusyMorphism:
    """Virtual contraction: graft two tails and contract the new edge,
    expressed as a single morphism."""
    return _contract(g, pair, virtual=True)


def make_isomorphism(
    g: SusyGraph,
    flag_renaming: Mapping[str, str] | None = None,
    vertex_renaming: Mapping[str, str] | None = None,
) -> SusyMorphism:
    """Rename flags and vertices; omitted identifiers keep their names."""
    fr = dict(flag_renaming or {})
    vr = dict(vertex_renaming or {})
    new_flag = {f: fr.get(f, f) for f in g.flags}
    new_vert = {v: vr.get(v, v) for v in g.vertices}
    if len(set(new_flag.values())) != len(new_flag) or len(
        set(new_vert.values())
    ) != len(new_vert):
        raise ValidationError("renaming must stay injective")
    lab = g.labeling
    target = SusyGraph(
        Graph(
            frozenset(new_flag.values()),
            frozenset(new_vert.values()),
            {new_flag[f]: new_vert[v] for f, v in g.boundary.items()},
            {new_flag[f]: new_flag[p] for f, p in g.involution.items()},
        ),
        SusyLabeling(
            genus={new_vert[v]: k for v, k in lab.genus.items()},
            color={new_flag[f]: c for f, c in lab.color.items()},
            ns_tail_labels={l: new_flag[f] for l, f in lab.ns_tail_labels.items()},
            r_tail_labels={l: new_flag[f] for l, f in lab.r_tail_labels.items()},
        ),
        modular=g.modular,
    )
    return susy_morphism(
        g,
        target,
        flag_map={new_flag[f]: f for f in g.flags},
        vertex_map=new_vert,
    )


def iso_between(
    source: SusyGraph,
    target: SusyGraph,
    flag_map: Mapping[str, str],
    vertex_map: Mapping[str, str],
) -> SusyMorphism:
    """Assemble and validate an isomorphism with the given maps
    (``flag_map`` runs target -> source, ``vertex_map`` source -> target)."""
    h = susy_morphism(source, target, flag_map, vertex_map)
    validate_susy_morphism(h).raise_if_invalid("isomorphism")
    kind = classify(h).kind
    if kind not in ("identity", "isomorphism"):
        raise ValidationError(f"maps describe a {kind}, not an isomorphism")
    return h


def _grafted_pairs(h: SusyMorphism) -> list[tuple[str, str]]:
    """Target edges whose preimages are source tail pairs."""
    out = []
    src = h.source
    for a, b in edges(h.target.graph):
        pa, pb = h.flag_map[a], h.flag_map[b]
        if src.involution[pa] != pb:
            out.append(_sorted_pair(pa, pb))
    return sorted(out)


def classify(h: SusyMorphism) -> Elementary:
    """Tag a valid morphism with its elementary kind (or ``composite``)."""
    validate_susy_morphism(h).raise_if_invalid("morphism")
    orbits = h.contracted_pairs()
    grafted = _grafted_pairs(h)
    flag_identity = all(v == k for k, v in h.flag_map.items())
    vertex_identity = all(v == k for k, v in h.vertex_map.items())

    if not orbits:
        if grafted:
            if flag_identity and vertex_identity:
                return Elementary("grafting", h, tuple(grafted))
            return Elementary("composite", h, tuple(grafted))
        if flag_identity and vertex_identity and h.source == h.target:
            return Elementary("identity", h)
        return Elementary("isomorphism", h)

    if len(orbits) == 1 and not grafted and flag_identity:
        (a, b), = orbits
        src = h.source
        rest_identity = all(
            h.vertex_map[v] == v
            for v in src.vertices
            if v not in (src.boundary[a], src.boundary[b])
        )
        if rest_identity:
            if src.involution[a] == b:
                kind = (
                    "loop_contraction"
                    if src.boundary[a] == src.boundary[b]
                    else "edge_contraction"
                )
            else:
                kind = "virtual_contraction"
            return Elementary(kind, h, ((a, b),))
    return Elementary("composite", h, tuple(orbits))


def total_grafting(g: SusyGraph) -> SusyMorphism:
    """The grafting from the disjoint union of ``g``'s vertex corollas to
    ``g`` itself; flag and vertex maps are identities."""
    lab = g.labeling
    source = SusyGraph(
        Graph(g.flags, g.vertices, dict(g.boundary), {f: f for f in g.flags}),
        SusyLabeling(
            genus=dict(lab.genus),
            color=dict(lab.color),
            ns_tail_labels={f: f for f in g.flags if g.color_of(f) == NS},
            r_tail_labels={f: f for f in g.flags if g.color_of(f) == R},
        ),
        modular=g.modular,
    )
    return susy_morphism(
        source,
        g,
        flag_map={f: f for f in g.flags},
        vertex_map={v: v for v in g.vertices},
    )


def _piece_graph(
    g: SusyGraph,
    vertices: set[str] | frozenset[str],
    flags: set[str] | frozenset[str],
    keep: Mapping[str, str],
) -> SusyGraph:
    """Piece of ``g`` on the given vertices/flags keeping only the edge
    pairs listed in ``keep`` (everything else becomes a tail, and tails
    label themselves)."""
    lab = g.labeling
    involution = {f: keep.get(f, f) for f in flags}
    base = Graph(
        frozenset(flags),
        frozenset(vertices),
        {f: g.boundary[f] for f in flags},
        involution,
    )
    new_tails = [f for f in flags if involution[f] == f]
    return SusyGraph(
        base,
        SusyLabeling(
            genus={v: lab.genus[v] for v in vertices},
            color={f: lab.color[f] for f in flags},
            ns_tail_labels={f: f for f in new_tails if lab.color[f] == NS},
            r_tail_labels={f: f for f in new_tails if lab.color[f] == R},
        ),
        modular=g.modular,
    )


@dataclass(frozen=True)
class Atomization:
    """Per-target-vertex pieces of a morphism and the commuting square.

    ``tails_grafting`` grafts the source pieces back into the source graph;
    ``target_grafting`` is the target's total grafting; ``pieces_morphism``
    is the disjoint union of the piece morphisms.  The square
    ``tails_grafting ; original  ==  pieces_morphism ; target_grafting``
    is checked on construction.
    """

    morphism: SusyMorphism
    pieces: dict[str, SusyGraph]
    piece_morphisms: dict[str, SusyMorphism]
    tails_grafting: SusyMorphism
    target_grafting: SusyMorphism
    pieces_morphism: SusyMorphism


def atomize(h: SusyMorphism) -> Atomization:
    validate_susy_morphism(h).raise_if_invalid("morphism")
    src, tgt = h.source, h.target

    # A piece keeps exactly the contracted edge orbits; edges that survive
    # into the target (preserved loops included) are cut here and grafted
    # back by the corolla grafting on the target side.
    keep: dict[str, str] = {}
    for a, b in h.contracted_pairs():
        if src.involution[a] == b:
            keep[a] = b
            keep[b] = a

    pieces: dict[str, SusyGraph] = {}
    piece_morphisms: dict[str, SusyMorphism] = {}
    target_grafting = total_grafting(tgt)
    corolla_union = target_grafting.source

    union_flag_map: dict[str, str] = {}
    union_vertex_map: dict[str, str] = {}
    union_contracted_pairs: list[tuple[str, str]] = []

    for v in sorted(tgt.vertices):
        fiber_vertices = {w for w, img in h.vertex_map.items() if img == v}
        fiber_flags = {f for f in src.flags if h.vertex_map[src.boundary[f]] == v}
        piece = _piece_graph(src, fiber_vertices, fiber_flags, keep)
        corolla = _piece_graph(
            tgt, {v}, {f for f in tgt.flags if tgt.boundary[f] == v}, {}
        )
        flag_map = {f: h.flag_map[f] for f in corolla.flags}
        vertex_map = {w: v for w in fiber_vertices}
        contracted = [
            p for p in h.contracted_pairs() if src.boundary[p[0]] in fiber_vertices
        ]
        hm = susy_morphism(piece, corolla, flag_map, vertex_map, contracted)
        validate_susy_morphism(hm).raise_if_invalid(f"piece at {v!r}")
        pieces[v] = piece
        piece_morphisms[v] = hm
        union_flag_map.update(flag_map)
        union_vertex_map.update(vertex_map)
        union_contracted_pairs.extend(contracted)

    source_union = _piece_graph(src, set(src.vertices), set(src.flags), keep)

    tails_grafting = susy_morphism(
        source_union,
        src,
        flag_map={f: f for f in src.flags},
        vertex_map={w: w for w in src.vertices},
    )
    pieces_morphism = susy_morphism(
        source_union,
        corolla_union,
        union_flag_map,
        union_vertex_map,
        union_contracted_pairs,
    )
    validate_susy_morphism(pieces_morphism).raise_if_invalid("piece union")

    left = compose(tails_grafting, h)
    right = compose(pieces_morphism, target_grafting)
    if left != right:
        raise ValidationError("atomization square failed to commute")
    return Atomization(
        morphism=h,
        pieces=pieces,
        piece_morphisms=piece_morphisms,
        tails_grafting=tails_grafting,
        target_grafting=target_grafting,
        pieces_morphism=pieces_morphism,
    )


def compose_chain(source: SusyGraph, morphisms: Iterable[SusyMorphism]) -> SusyMorphism:
    out = susy_identity(source)
    for m in morphisms:
        out = compose(out, m)
    return out


def decompose_to_elementaries(
    h: SusyMorphism, order: str = "lex"
) -> list[Elementary]:
    """Factor a morphism as grafting, single-orbit contractions, and a final
    isomorphism, dropping trivial steps.

    ``order`` picks the contraction sequence: ``lex`` contracts orbits in
    lexicographic order of their smaller flag, ``reverse`` in the opposite
    order.  Both composites equal ``h`` structurally.
    """
    if order not in ("lex", "reverse"):
        raise ValidationError(f"unknown decomposition order {order!r}")
    validate_susy_morphism(h).raise_if_invalid("morphism")
    src, tgt = h.source, h.target
    steps: list[Elementary] = []
    current = src
    chain_vm = {w: w for w in src.vertices}

    orbits = h.contracted_pairs()
    virtual_pairs = [
        p for p in orbits if src.involution[p[0]] == p[0]
    ]  # tail-pair orbits must be grafted before they can be contracted
    graft_pairs = sorted(set(_grafted_pairs(h)) | set(virtual_pairs))
    if graft_pairs:
        m = graft(current, graft_pairs)
        steps.append(Elementary("grafting", m, tuple(graft_pairs)))
        current = m.target

    ordered = sorted(orbits)
    if order == "reverse":
        ordered.reverse()
    for a, b in ordered:
        m = contract_pair(current, (a, b))
        steps.append(classify(m))
        current = m.target
        chain_vm = {w: m.vertex_map[chain_vm[w]] for w in chain_vm}

    iso_flag_map = {f: h.flag_map[f] for f in tgt.flags}
    iso_vertex_map = {chain_vm[w]: h.vertex_map[w] for w in src.vertices}
    is_trivial = (
        current == tgt
        and all(v == k for k, v in iso_flag_map.items())
        and all(v == k for k, v in iso_vertex_map.items())
    )
    if not is_trivial:
        iso = susy_morphism(current, tgt, iso_flag_map, iso_vertex_map)
        steps.append(classify(iso))

    composite = compose_chain(src, [s.morphism for s in steps])
    if composite != h:
        raise ValidationError("decomposition failed to recompose")
    return steps


@dataclass(frozen=True)
class CommutedSquare:
    """Witness that an isomorphism slides past a contraction."""

    induced_iso: SusyMorphism
    iso_then_contract: SusyMorphism
    contract_then_iso: SusyMorphism


def commute_iso_contraction(
    a: SusyMorphism, pair: tuple[str, str]
) -> CommutedSquare:
    """Given an isomorphism ``a`` and a contractible pair of its target,
    produce the unique isomorphism closing the commuting square."""
    kind = classify(a).kind
    if kind not in ("identity", "isomorphism"):
        raise ValidationError(f"expected an isomorphism, got a {kind}")
    f1, f2 = pair
    con_t = contract_pair(a.target, (f1, f2))
    con_s = contract_pair(a.source, (a.flag_map[f1], a.flag_map[f2]))
    flag_map = {x: a.flag_map[x] for x in con_t.target.flags}
    vertex_map = {
        con_s.vertex_map[w]: con_t.vertex_map[a.vertex_map[w]]
        for w in a.source.vertices
    }
    induced = iso_between(con_s.target, con_t.target, flag_map, vertex_map)
    left = compose(a, con_t)
    right = compose(con_s, induced)
    if left != right:
        raise ValidationError("iso/contraction square failed to commute")
    return CommutedSquare(induced, left, right)


@dataclass(frozen=True)
class CommutedContractions:
    commutes: bool
    first_then_second: SusyMorphism
    second_then_first: SusyMorphism


def commute_contractions(
    g: SusyGraph, e1: tuple[str, str], e2: tuple[str, str]
) -> CommutedContractions:
    """Contract two flag-disjoint pairs in both orders and compare."""
    if set(e1) & set(e2):
        raise ValidationError("pairs must be flag-disjoint")
    m1 = contract_pair(g, e1)
    m12 = contract_pair(m1.target, e2)
    left = compose(m1, m12)
    m2 = contract_pair(g, e2)
    m21 = contract_pair(m2.target, e1)
    right = compose(m2, m21)
    return CommutedContractions(left == right, left, right)
