"""Lifting colorless graphs to SUSY colorings.

The centerpiece is the tree lift: a stable genus-zero tree together with an
even split of its tail labels into NS and R parts admits exactly one valid
edge coloring, found here by leaf peeling.  Peel any vertex bounding exactly
one remaining edge; the parity of the R flags already determined at that
vertex forces the edge's color (NS for even, R for odd); cut the edge and
delete the vertex.  The cut stub keeps the edge's color at the surviving
endpoint, so the argument repeats.

For arbitrary stable graphs the number of valid edge colorings extending a
tail partition is 0 or ``2 ** b1``: the per-vertex parity constraints form
a linear system over GF(2) in the non-loop edge variables (a loop puts both
of its flags on one vertex and so contributes nothing mod 2), and the system
is consistent exactly when every connected component has an even number of
R tails.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .errors import ValidationError
from .gf2 import solve_gf2
from .graphs import connected_components, edges, is_connected, tails
from .susy import (
    NS,
    R,
    SusyGraph,
    SusyLabeling,
    genus,
    is_stable,
    require_susy,
    validate_susy_graph,
)

__all__ = [
    "count_even_partitions",
    "count_lifts",
    "enumerate_edge_colorings",
    "lift_count_general",
    "lift_tree_coloring",
]


def _checked_partition(
    g: SusyGraph, ns_labels: Iterable[str], r_labels: Iterable[str]
) -> tuple[frozenset[str], frozenset[str]]:
    ns_set, r_set = frozenset(ns_labels), frozenset(r_labels)
    all_labels = set(g.labeling.ns_tail_labels)
    if ns_set & r_set:
        raise ValidationError("partition parts must be disjoint")
    if ns_set | r_set != all_labels:
        raise ValidationError("partition must cover the label set exactly")
    if len(r_set) % 2:
        raise ValidationError("the R part of a partition must have even size")
    return ns_set, r_set


def _require_stable_modular(g: SusyGraph, what: str) -> None:
    require_susy(g)
    if not g.modular:
        raise ValidationError(f"{what} expects the modular (colorless) view")
    rep = is_stable(g)
    if not rep.stable:
        raise ValidationError(
            f"{what} expects a stable graph; unstable at {list(rep.unstable_vertices)}"
        )


def _require_tree(g: SusyGraph) -> None:
    if not is_connected(g.graph):
        raise ValidationError("input is not a tree: disconnected")
    if genus(g) != 0:
        raise ValidationError("input is not a tree: total genus must be zero")


def lift_tree_coloring(
    tree: SusyGraph, ns_labels: Iterable[str], r_labels: Iterable[str]
) -> SusyGraph:
    """The unique SUSY lift of a stable tree for an even label partition.

    Deterministic: leaves are peeled in lexicographic vertex order.
    """
    _require_stable_modular(tree, "lift_tree_coloring")
    _require_tree(tree)
    ns_set, r_set = _checked_partition(tree, ns_labels, r_labels)

    label_to_tail = tree.labeling.ns_tail_labels
    color: dict[str, str] = {}
    for lab in ns_set:
        color[label_to_tail[lab]] = NS
    for lab in r_set:
        color[label_to_tail[lab]] = R

    base = tree.graph
    flags_of: dict[str, list[str]] = {v: [] for v in base.vertices}
    for f in base.flags:
        flags_of[base.boundary[f]].append(f)
    edge_degree = {v: 0 for v in base.vertices}
    alive_edges = set(edges(base))
    for a, b in alive_edges:
        edge_degree[base.boundary[a]] += 1
        edge_degree[base.boundary[b]] += 1

    alive = set(base.vertices)
    while alive_edges:
        leaf = min(v for v in alive if edge_degree[v] == 1)
        the_edge = next(
            (a, b)
            for a, b in alive_edges
            if base.boundary[a] == leaf or base.boundary[b] == leaf
        )
        r_seen = sum(1 for f in flags_of[leaf] if color.get(f) == R)
        c = R if r_seen % 2 else NS
        a, b = the_edge
        color[a] = c
        color[b] = c
        alive_edges.remove(the_edge)
        other = base.boundary[b] if base.boundary[a] == leaf else base.boundary[a]
        edge_degree[other] -= 1
        alive.remove(leaf)

    # The last vertex's parity is forced by global evenness; check anyway.
    lifted = SusyGraph(
        base,
        SusyLabeling(
            genus=dict(tree.labeling.genus),
            color=color,
            ns_tail_labels={l: label_to_tail[l] for l in ns_set},
            r_tail_labels={l: label_to_tail[l] for l in r_set},
        ),
        modular=False,
    )
    validate_susy_graph(lifted).raise_if_invalid("lifted tree")
    return lifted


def count_lifts(tree: SusyGraph) -> int:
    """Number of SUSY lifts of a stable tree over all even partitions:
    exactly 2 ** (#tails - 1)."""
    _require_stable_modular(tree, "count_lifts")
    _require_tree(tree)
    n = len(tails(tree.graph))
    return 2 ** (n - 1)


def count_even_partitions(k: int) -> int:
    """Number of two-block ordered partitions of a k-set with even second
    block: 2 ** (k - 1) for k >= 1, and 1 for the empty set."""
    if k < 0:
        raise ValidationError("label count must be non-negative")
    return 1 if k == 0 else 2 ** (k - 1)


def _parity_system(
    g: SusyGraph, r_set: frozenset[str]
) -> tuple[list[tuple[str, str]], list[tuple[str, str]], np.ndarray, np.ndarray]:
    """Per-vertex parity constraints in the non-loop edge variables."""
    base = g.graph
    label_to_tail = g.labeling.ns_tail_labels
    r_tails = {label_to_tail[l] for l in r_set}
    vert_order = sorted(base.vertices)
    vert_index = {v: i for i, v in enumerate(vert_order)}
    non_loop = []
    loops = []
    for a, b in edges(base):
        if base.boundary[a] == base.boundary[b]:
            loops.append((a, b))
        else:
            non_loop.append((a, b))
    a_mat = np.zeros((len(vert_order), len(non_loop)), dtype=np.uint8)
    for j, (a, b) in enumerate(non_loop):
        a_mat[vert_index[base.boundary[a]], j] ^= 1
        a_mat[vert_index[base.boundary[b]], j] ^= 1
    rhs = np.zeros(len(vert_order), dtype=np.uint8)
    for f in r_tails:
        rhs[vert_index[base.boundary[f]]] ^= 1
    return non_loop, loops, a_mat, rhs


def lift_count_general(
    g: SusyGraph, ns_labels: Iterable[str], r_labels: Iterable[str]
) -> int:
    """Number of valid edge colorings extending the given tail partition.

    Zero when some connected component receives an odd number of R tails,
    ``2 ** b1`` otherwise (first Betti number of the whole graph).
    """
    _require_stable_modular(g, "lift_count_general")
    _, r_set = _checked_partition(g, ns_labels, r_labels)
    non_loop, loops, a_mat, rhs = _parity_system(g, r_set)
    consistent, _, basis = solve_gf2(a_mat, rhs)
    if not consistent:
        return 0
    return 2 ** (len(basis) + len(loops))


def enumerate_edge_colorings(
    g: SusyGraph,
    ns_labels: Iterable[str],
    r_labels: Iterable[str],
    limit: int = 4096,
) -> list[SusyGraph]:
    """All SUSY graphs obtained by coloring ``g``'s edges compatibly with
    the tail partition.  Deterministically ordered; errors out past
    ``limit`` solutions to keep desk-scale use honest."""
    _require_stable_modular(g, "enumerate_edge_colorings")
    ns_set, r_set = _checked_partition(g, ns_labels, r_labels)
    non_loop, loops, a_mat, rhs = _parity_system(g, r_set)
    consistent, particular, basis = solve_gf2(a_mat, rhs)
    if not consistent:
        return []
    count = 2 ** (len(basis) + len(loops))
    if count > limit:
        raise ValidationError(
            f"too many colorings ({count}) for enumeration; limit is {limit}"
        )

    label_to_tail = g.labeling.ns_tail_labels
    base_color: dict[str, str] = {}
    for lab in ns_set:
        base_color[label_to_tail[lab]] = NS
    for lab in r_set:
        base_color[label_to_tail[lab]] = R

    out: list[SusyGraph] = []
    for mask in range(2 ** len(basis)):
        vec = particular.copy()
        for i, bvec in enumerate(basis):
            if (mask >> i) & 1:
                vec ^= bvec
        for loop_mask in range(2 ** len(loops)):
            color = dict(base_color)
            for j, (a, b) in enumerate(non_loop):
                color[a] = color[b] = R if vec[j] else NS
            for j, (a, b) in enumerate(loops):
                color[a] = color[b] = R if (loop_mask >> j) & 1 else NS
            colored = SusyGraph(
                g.graph,
                SusyLabeling(
                    genus=dict(g.labeling.genus),
                    color=color,
                    ns_tail_labels={l: label_to_tail[l] for l in ns_set},
                    r_tail_labels={l: label_to_tail[l] for l in r_set},
                ),
                modular=False,
            )
            validate_susy_graph(colored).raise_if_invalid("edge coloring")
            out.append(colored)
    assert len(out) == count
    return out
