"""Canonical forms and isomorphism testing for SUSY graphs.

The certificate is a byte string: a canonical JSON encoding of the graph
after vertices and flags are renumbered by a refinement-plus-backtracking
search that minimizes the encoding.  Two graphs are isomorphic over fixed
tail labels exactly when their certificates agree.  A slower brute-force
enumerator of isomorphisms is also provided; it doubles as the oracle for
the canonical form and computes automorphism groups.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Iterator

from .errors import ValidationError
from .graphs import Graph, flags_at
from .susy import NS, R, SusyGraph, SusyLabeling, require_susy

__all__ = [
    "CanonicalForm",
    "Isomorphism",
    "are_isomorphic",
    "automorphisms",
    "canonical_form",
    "certificate_digest",
    "isomorphisms_between",
]


@dataclass(frozen=True)
class Isomorphism:
    vertex_map: dict[str, str]
    flag_map: dict[str, str]


@dataclass(frozen=True)
class CanonicalForm:
    certificate: bytes
    digest: str
    graph: SusyGraph
    vertex_witness: dict[str, str]
    flag_witness: dict[str, str]


def _label_of(g: SusyGraph) -> dict[str, str]:
    out = {f: l for l, f in g.labeling.ns_tail_labels.items()}
    out.update({f: l for l, f in g.labeling.r_tail_labels.items()})
    return out


def _base_key(g: SusyGraph, labels: dict[str, str], v: str) -> tuple:
    fl = flags_at(g.graph, v)
    j = g.involution
    tails = sorted(
        (g.color_of(f), labels[f]) for f in fl if j[f] == f
    )
    loops = [f for f in fl if j[f] != f and g.boundary[j[f]] == v]
    plain = [f for f in fl if j[f] != f and g.boundary[j[f]] != v]
    return (
        g.genus_of(v),
        tuple(tails),
        sum(1 for f in loops if g.color_of(f) == NS),
        sum(1 for f in loops if g.color_of(f) == R),
        sum(1 for f in plain if g.color_of(f) == NS),
        sum(1 for f in plain if g.color_of(f) == R),
    )


def _refine(g: SusyGraph, cells: list[list[str]]) -> list[list[str]]:
    j = g.involution
    b = g.boundary
    while True:
        index_of = {v: i for i, cell in enumerate(cells) for v in cell}
        out: list[list[str]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            keyed: dict[tuple, list[str]] = {}
            for v in cell:
                k = tuple(
                    sorted(
                        (g.color_of(f), index_of[b[j[f]]])
                        for f in flags_at(g.graph, v)
                        if j[f] != f and b[j[f]] != v
                    )
                )
                keyed.setdefault(k, []).append(v)
            parts = [keyed[k] for k in sorted(keyed)]
            if len(parts) > 1:
                changed = True
            out.extend(parts)
        cells = out
        if not changed:
            return cells


def _encode(g: SusyGraph, labels: dict[str, str], order: list[str]) -> tuple:
    """Certificate payload and witnesses for one vertex ordering."""
    pos = {v: i for i, v in enumerate(order)}
    j = g.involution
    b = g.boundary
    flag_index: dict[str, int] = {}
    sequence: list[str] = []
    for v in order:
        fl = flags_at(g.graph, v)

        def sort_key(f: str) -> tuple:
            color_rank = 0 if g.color_of(f) == NS else 1
            if j[f] == f:
                return (0, color_rank, labels[f], "")
            w = b[j[f]]
            if w == v:
                half = min(f, j[f])
                return (2, color_rank, half, f)
            if pos[w] < pos[v]:
                return (1, pos[w], color_rank, flag_index[j[f]])
            return (3, pos[w], color_rank, f)

        for f in sorted(fl, key=sort_key):
            flag_index[f] = len(sequence)
            sequence.append(f)
    payload = {
        "modular": g.modular,
        "genus": [g.genus_of(v) for v in order],
        "vertex_of": [pos[b[f]] for f in sequence],
        "color": [g.color_of(f) for f in sequence],
        "tails": sorted(
            [labels[f], flag_index[f]] for f in sequence if j[f] == f
        ),
        "edges": sorted(
            [flag_index[f], flag_index[j[f]]]
            for f in sequence
            if j[f] != f and flag_index[f] < flag_index[j[f]]
        ),
    }
    return payload, pos, flag_index


def _sort_key_blocks_comparable(payload: dict) -> bytes:
    return json.dumps(payload, sort_keys=True, separators=(",", ":")).encode("ascii")


def canonical_form(g: SusyGraph) -> CanonicalForm:
    """Renumber vertices and flags canonically; equal certificates mean
    isomorphic over fixed tail labels."""
    require_susy(g)
    labels = _label_of(g)
    verts = sorted(g.vertices)
    keyed: dict[tuple, list[str]] = {}
    for v in verts:
        keyed.setdefault(_base_key(g, labels, v), []).append(v)
    cells = [keyed[k] for k in sorted(keyed)]

    best: tuple[bytes, dict, dict[str, int], dict[str, int]] | None = None

    def search(cells: list[list[str]]) -> None:
        nonlocal best
        cells = _refine(g, cells)
        split_at = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if split_at is None:
            order = [v for cell in cells for v in cell]
            payload, pos, flag_index = _encode(g, labels, order)
            cert = _sort_key_blocks_comparable(payload)
            if best is None or cert < best[0]:
                best = (cert, payload, pos, flag_index)
            return
        cell = cells[split_at]
        for v in sorted(cell):
            rest = [w for w in cell if w != v]
            search(cells[:split_at] + [[v], rest] + cells[split_at + 1 :])

    search(cells)
    assert best is not None
    cert, payload, pos, flag_index = best

    vertex_witness = {v: f"v{i}" for v, i in pos.items()}
    flag_witness = {f: f"f{i}" for f, i in flag_index.items()}
    boundary = {flag_witness[f]: vertex_witness[g.boundary[f]] for f in g.flags}
    involution = {flag_witness[f]: flag_witness[g.involution[f]] for f in g.flags}
    genus = {vertex_witness[v]: g.genus_of(v) for v in g.vertices}
    color = {flag_witness[f]: g.color_of(f) for f in g.flags}
    canon = SusyGraph(
        Graph(
            frozenset(flag_witness.values()),
            frozenset(vertex_witness.values()),
            boundary,
            involution,
        ),
        SusyLabeling(
            genus,
            color,
            {l: flag_witness[f] for l, f in g.labeling.ns_tail_labels.items()},
            {l: flag_witness[f] for l, f in g.labeling.r_tail_labels.items()},
        ),
        modular=g.modular,
    )
    digest = hashlib.sha256(cert).hexdigest()
    return CanonicalForm(cert, digest, canon, vertex_witness, flag_witness)


def certificate_digest(g: SusyGraph) -> str:
    return canonical_form(g).digest


def isomorphisms_between(
    g1: SusyGraph, g2: SusyGraph, labels_fixed: bool = True
) -> Iterator[Isomorphism]:
    """Enumerate every isomorphism by backtracking.  Exhaustive, hence
    exponential in the worst case; meant for small graphs and as an oracle."""
    require_susy(g1)
    require_susy(g2)
    if g1.modular != g2.modular:
        return
    if len(g1.flags) != len(g2.flags) or len(g1.vertices) != len(g2.vertices):
        return
    labels1 = _label_of(g1)
    labels2 = _label_of(g2)
    if labels_fixed and set(labels1.values()) != set(labels2.values()):
        return

    def vkey(g: SusyGraph, labels: dict[str, str], v: str) -> tuple:
        k = _base_key(g, labels, v)
        if labels_fixed:
            return k
        return (k[0],) + (tuple(c for c, _ in k[1]),) + k[2:]

    verts1 = sorted(g1.vertices)
    verts2 = sorted(g2.vertices)
    by_key: dict[tuple, list[str]] = {}
    for w in verts2:
        by_key.setdefault(vkey(g2, labels2, w), []).append(w)

    flags_of = {v: sorted(flags_at(g1.graph, v)) for v in verts1}
    j1, j2 = g1.involution, g2.involution
    b1, b2 = g1.boundary, g2.boundary

    def extend_flags(
        vmap: dict[str, str],
        fmap: dict[str, str],
        used: set[str],
        todo: list[str],
    ) -> Iterator[Isomorphism]:
        if not todo:
            yield Isomorphism(dict(vmap), dict(fmap))
            return
        f = todo[0]
        if f in fmap:
            yield from extend_flags(vmap, fmap, used, todo[1:])
            return
        w = vmap[b1[f]]
        for c in sorted(flags_at(g2.graph, w)):
            if c in used:
                continue
            if g2.color_of(c) != g1.color_of(f):
                continue
            f_tail = j1[f] == f
            if f_tail != (j2[c] == c):
                continue
            if f_tail and labels_fixed and labels2[c] != labels1[f]:
                continue
            extra: dict[str, str] = {f: c}
            if not f_tail:
                p, q = j1[f], j2[c]
                if p in fmap or q in used:
                    continue
                if vmap[b1[p]] != b2[q]:
                    continue
                if p != f:
                    extra[p] = q
            new_fmap = dict(fmap)
            new_fmap.update(extra)
            yield from extend_flags(
                vmap, new_fmap, used | set(extra.values()), todo[1:]
            )

    def extend_vertices(
        i: int, vmap: dict[str, str], used: set[str]
    ) -> Iterator[Isomorphism]:
        if i == len(verts1):
            todo = [f for v in verts1 for f in flags_of[v]]
            yield from extend_flags(vmap, {}, set(), todo)
            return
        v = verts1[i]
        for w in by_key.get(vkey(g1, labels1, v), []):
            if w in used:
                continue
            yield from extend_vertices(i + 1, {**vmap, v: w}, used | {w})

    yield from extend_vertices(0, {}, set())


def are_isomorphic(
    g1: SusyGraph, g2: SusyGraph, labels_fixed: bool = True
) -> tuple[bool, Isomorphism | None]:
    """Decide isomorphism; on success also return one witness map."""
    if labels_fixed:
        c1 = canonical_form(g1)
        c2 = canonical_form(g2)
        if c1.certificate != c2.certificate:
            return False, None
        back_v = {cv: v for v, cv in c2.vertex_witness.items()}
        back_f = {cf: f for f, cf in c2.flag_witness.items()}
        return True, Isomorphism(
            {v: back_v[cv] for v, cv in c1.vertex_witness.items()},
            {f: back_f[cf] for f, cf in c1.flag_witness.items()},
        )
    found = next(isomorphisms_between(g1, g2, labels_fixed=False), None)
    return (found is not None), found


@dataclass(frozen=True)
class AutomorphismGroup:
    elements: tuple[Isomorphism, ...]

    @property
    def order(self) -> int:
        return len(self.elements)


def automorphisms(g: SusyGraph, labels_fixed: bool = True) -> AutomorphismGroup:
    """All self-isomorphisms.  With labels_fixed the labeled tails are
    pinned pointwise; otherwise tails may permute within a color."""
    els = tuple(isomorphisms_between(g, g, labels_fixed=labels_fixed))
    if not els:
        raise ValidationError("automorphism search lost the identity; invalid input")
    return AutomorphismGroup(els)
