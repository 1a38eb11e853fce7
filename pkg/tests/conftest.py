import random

import pytest
from hypothesis import HealthCheck, settings

from susykit import NS, R, SusyGraph, modular_graph, susy_graph

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


def star(
    genus: int = 0,
    ns: int = 3,
    r: int = 0,
    vid: str = "v",
    modular: bool = False,
) -> SusyGraph:
    """One vertex, ns+r labeled tails, no edges."""
    ns_flags = [f"{vid}n{i}" for i in range(ns)]
    r_flags = [f"{vid}r{i}" for i in range(r)]
    flags = ns_flags + r_flags
    if modular:
        return modular_graph(
            flags=flags,
            vertices=[vid],
            boundary={f: vid for f in flags},
            involution={f: f for f in flags},
            genus={vid: genus},
        )
    return susy_graph(
        flags=flags,
        vertices=[vid],
        boundary={f: vid for f in flags},
        involution={f: f for f in flags},
        genus={vid: genus},
        color={**{f: NS for f in ns_flags}, **{f: R for f in r_flags}},
        ns_labels={f: f for f in ns_flags},
        r_labels={f: f for f in r_flags},
    )


def two_vertex_tree(
    tails_left: int = 2,
    tails_right: int = 2,
    genus_left: int = 0,
    genus_right: int = 0,
) -> SusyGraph:
    """Two vertices joined by a single edge, tails labeled by flag id."""
    left = [f"a{i}" for i in range(tails_left)]
    right = [f"b{i}" for i in range(tails_right)]
    flags = left + right + ["ea", "eb"]
    boundary = {f: "u" for f in left} | {f: "w" for f in right}
    boundary["ea"], boundary["eb"] = "u", "w"
    involution = {f: f for f in left + right} | {"ea": "eb", "eb": "ea"}
    return modular_graph(
        flags=flags,
        vertices=["u", "w"],
        boundary=boundary,
        involution=involution,
        genus={"u": genus_left, "w": genus_right},
    )


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260819)
