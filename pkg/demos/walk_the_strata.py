"""Enumerate the boundary strata of a small moduli signature and order
them by contraction.

Strata are stable SUSY graphs up to isomorphism; contracting edges moves
up the poset toward the smooth stratum (the corolla).  The DOT text at
the end renders with graphviz: `python3 demos/walk_the_strata.py | tail
-n +20 | dot -Tpng -o strata.png` or similar.
"""

from susykit import (
    certificate_digest,
    contraction_poset,
    edges,
    enumerate_strata,
    enumerate_strata_records,
    stratum_dimension,
)
from susykit.dot import poset_to_dot


def main() -> None:
    genus, ns, r = 0, ["1", "2", "3", "4"], []
    strata = enumerate_strata(genus, ns, r)
    print(f"genus {genus} with tails NS={ns} R={r}: {len(strata)} strata")
    print()

    for i, g in enumerate(strata):
        dim = stratum_dimension(g)
        n_edges = len(edges(g.graph))
        digest = certificate_digest(g)[:12]
        print(
            f"  S{i}: {n_edges} edge(s), dimension {dim.even}|{dim.odd}, "
            f"codim {dim.codimension[0]}, cert {digest}"
        )

    records = enumerate_strata_records(genus, ns, r)
    print()
    for rec in records:
        print(
            f"  shape with {len(edges(rec.shape.graph))} edge(s): "
            f"{len(rec.colorings)} coloring(s), predicted {rec.predicted_colorings}"
        )

    poset = contraction_poset(strata)
    print()
    print(f"poset top (smooth stratum): S{poset.top}")
    for i, j in sorted(poset.covers):
        print(f"  contracting S{i} gives S{j}")

    print()
    print(poset_to_dot(poset))


if __name__ == "__main__":
    main()
