"""Color a stable tree: pick which tails are Ramond, the edges follow.

On a tree the per-vertex parity constraints have exactly one solution
for every even tail partition, so the whole SUSY structure is determined
by choosing an even set of R tails.  This script builds a small tree,
lifts a few partitions, and counts.
"""

from susykit import (
    SusyGraph,
    count_even_partitions,
    count_lifts,
    edges,
    lift_tree_coloring,
    modular_graph,
)


def caterpillar() -> SusyGraph:
    """Three vertices in a path, five labeled tails."""
    flags = ["a", "b", "c", "d", "e", "x1", "x2", "y1", "y2"]
    boundary = {
        "a": "u", "b": "u", "x1": "u",
        "x2": "v", "c": "v", "y1": "v",
        "y2": "w", "d": "w", "e": "w",
    }
    involution = {f: f for f in flags}
    involution.update({"x1": "x2", "x2": "x1", "y1": "y2", "y2": "y1"})
    return modular_graph(
        flags=flags,
        vertices=["u", "v", "w"],
        boundary=boundary,
        involution=involution,
        genus={"u": 0, "v": 0, "w": 0},
        tail_labels={"p1": "a", "p2": "b", "p3": "c", "p4": "d", "p5": "e"},
    )


def main() -> None:
    tree = caterpillar()
    labels = sorted(tree.ns_labels())
    print(f"tree with {len(labels)} tails, {len(edges(tree.graph))} edges")
    print(f"tail labels: {', '.join(labels)}")
    print()

    partitions = [
        ({"p1", "p2", "p3", "p4", "p5"}, set()),
        ({"p3", "p4", "p5"}, {"p1", "p2"}),
        ({"p1"}, {"p2", "p3", "p4", "p5"}),
        ({"p1", "p2", "p3", "p4"}, {"p5"}),
    ]
    for ns, r in partitions:
        if len(r) % 2:
            print(f"R = {sorted(r)}: odd, no lift exists")
            continue
        lifted = lift_tree_coloring(tree, ns, r)
        r_edges = sorted(
            frozenset(pair) for pair in edges(lifted.graph)
            if lifted.color_of(pair[0]) == "R"
        )
        shown = [tuple(sorted(p)) for p in r_edges]
        print(f"R tails {sorted(r) or '(none)'} force R edges {shown or '(none)'}")

    print()
    k = len(labels)
    print(f"even partitions of {k} tails: {count_even_partitions(k)}")
    print(f"lifts of this tree:          {count_lifts(tree)}")


if __name__ == "__main__":
    main()
