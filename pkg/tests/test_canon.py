"""Canonical forms, certificates, and automorphism groups, cross-checked
against the exhaustive bijection oracle."""

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from susykit import (
    NS,
    R,
    are_isomorphic,
    automorphisms,
    canonical_form,
    certificate_digest,
    classify,
    forget,
    iso_between,
    isomorphisms_between,
    make_isomorphism,
    susy_graph,
)
from susykit.sampling import random_susy_graph

from conftest import star
from oracles import brute_automorphism_order, brute_is_isomorphic, brute_isomorphisms


def labeled_tree(split):
    """Two genus-0 vertices joined by an NS edge; split assigns the four
    NS tail labels, e.g. (("1", "2"), ("3", "4"))."""
    left, right = split
    tails = list(left) + list(right)
    flags = [f"t{l}" for l in tails] + ["ea", "eb"]
    boundary = {f"t{l}": "u" for l in left}
    boundary.update({f"t{l}": "w" for l in right})
    boundary["ea"], boundary["eb"] = "u", "w"
    involution = {f"t{l}": f"t{l}" for l in tails}
    involution["ea"], involution["eb"] = "eb", "ea"
    return susy_graph(
        flags=flags,
        vertices=["u", "w"],
        boundary=boundary,
        involution=involution,
        genus={"u": 0, "w": 0},
        color={f: NS for f in flags},
        ns_labels={l: f"t{l}" for l in tails},
        r_labels={},
    )


def loop_graph(color):
    """One genus-0 vertex with a loop of the given color and one NS tail."""
    return susy_graph(
        flags=["t", "l1", "l2"],
        vertices=["v"],
        boundary={"t": "v", "l1": "v", "l2": "v"},
        involution={"t": "t", "l1": "l2", "l2": "l1"},
        genus={"v": 0},
        color={"t": NS, "l1": color, "l2": color},
        ns_labels={"1": "t"},
        r_labels={},
    )


def double_edge_graph():
    """Two genus-1 vertices joined by a double NS edge, no tails."""
    return susy_graph(
        flags=["e1a", "e1b", "e2a", "e2b"],
        vertices=["u", "w"],
        boundary={"e1a": "u", "e2a": "u", "e1b": "w", "e2b": "w"},
        involution={"e1a": "e1b", "e1b": "e1a", "e2a": "e2b", "e2b": "e2a"},
        genus={"u": 1, "w": 1},
        color={f: NS for f in ("e1a", "e1b", "e2a", "e2b")},
        ns_labels={},
        r_labels={},
    )


def retagged_copy(g, rng):
    """Rename every flag and vertex id with a random suffix order."""
    flag_names = [f"F{i}" for i in range(len(g.flags))]
    rng.shuffle(flag_names)
    vert_names = [f"V{i}" for i in range(len(g.vertices))]
    rng.shuffle(vert_names)
    fmap = dict(zip(sorted(g.flags), flag_names))
    vmap = dict(zip(sorted(g.vertices), vert_names))
    return make_isomorphism(g, fmap, vmap).target


def check_witness(g1, g2, iso):
    """Structural checks that an Isomorphism really maps g1 onto g2."""
    assert sorted(iso.vertex_map) == sorted(g1.vertices)
    assert sorted(iso.vertex_map.values()) == sorted(g2.vertices)
    assert sorted(iso.flag_map) == sorted(g1.flags)
    assert sorted(iso.flag_map.values()) == sorted(g2.flags)
    for v, w in iso.vertex_map.items():
        assert g1.genus_of(v) == g2.genus_of(w)
    for f, c in iso.flag_map.items():
        assert iso.vertex_map[g1.boundary[f]] == g2.boundary[c]
        assert iso.flag_map[g1.involution[f]] == g2.involution[c]
        assert g1.color_of(f) == g2.color_of(c)


class TestCertificates:
    def test_permuted_copy_isomorphic(self):
        g = star(1, 2, 2)
        rng = random.Random(5)
        h = retagged_copy(g, rng)
        same, witness = are_isomorphic(g, h)
        assert same
        check_witness(g, h, witness)
        assert certificate_digest(g) == certificate_digest(h)

    def test_label_splits_distinguish_trees(self):
        a = labeled_tree((("1", "2"), ("3", "4")))
        b = labeled_tree((("1", "3"), ("2", "4")))
        same, witness = are_isomorphic(a, b)
        assert not same
        assert witness is None
        assert certificate_digest(a) != certificate_digest(b)
        assert not brute_is_isomorphic(a, b)

    def test_mirrored_split_is_isomorphic(self):
        a = labeled_tree((("1", "2"), ("3", "4")))
        b = labeled_tree((("3", "4"), ("1", "2")))
        same, witness = are_isomorphic(a, b)
        assert same
        check_witness(a, b, witness)
        assert witness.vertex_map == {"u": "w", "w": "u"}

    def test_loop_colors_distinguish(self):
        ns = loop_graph(NS)
        rr = loop_graph(R)
        assert not are_isomorphic(ns, rr)[0]
        assert certificate_digest(ns) != certificate_digest(rr)
        assert not brute_is_isomorphic(ns, rr)

    def test_certificate_is_deterministic(self):
        g = double_edge_graph()
        c1 = canonical_form(g)
        c2 = canonical_form(g)
        assert c1.certificate == c2.certificate
        assert c1.digest == c2.digest
        assert len(c1.digest) == 64
        assert set(c1.digest) <= set("0123456789abcdef")

    def test_canonical_witness_maps_onto_canonical_graph(self):
        g = star(0, 2, 2)
        c = canonical_form(g)
        check_witness(
            g, c.graph, type(are_isomorphic(g, g)[1])(c.vertex_witness, c.flag_witness)
        )
        assert certificate_digest(c.graph) == c.digest

    def test_modular_and_susy_views_never_isomorphic(self):
        g = star(0, 4)
        assert not are_isomorphic(g, forget(g))[0]

    @given(st.integers(0, 10**6))
    def test_digest_matches_brute_oracle(self, seed):
        rng = random.Random(seed)
        g1 = random_susy_graph(rng)
        if rng.random() < 0.5:
            g2 = retagged_copy(g1, rng)
        else:
            g2 = random_susy_graph(rng)
        same_digest = certificate_digest(g1) == certificate_digest(g2)
        assert same_digest == brute_is_isomorphic(g1, g2)

    @given(st.integers(0, 10**6))
    def test_witness_is_valid_on_random_pairs(self, seed):
        rng = random.Random(seed)
        g1 = random_susy_graph(rng)
        g2 = retagged_copy(g1, rng)
        same, witness = are_isomorphic(g1, g2)
        assert same
        check_witness(g1, g2, witness)


class TestAutomorphisms:
    def test_labeled_corolla_is_rigid(self):
        g = star(0, 3)
        assert automorphisms(g).order == 1
        assert brute_automorphism_order(g) == 1

    def test_unlabeled_mixed_corolla_order_four(self):
        g = star(0, 2, 2)
        group = automorphisms(g, labels_fixed=False)
        assert group.order == 4
        assert brute_automorphism_order(g, labels_fixed=False) == 4
        for el in group.elements:
            check_witness(g, g, el)

    def test_double_edge_group_matches_brute(self):
        g = double_edge_graph()
        group = automorphisms(g)
        assert group.order == brute_automorphism_order(g)
        assert any(
            el.vertex_map == {"u": "w", "w": "u"} for el in group.elements
        )
        assert any(
            el.vertex_map == {"u": "u", "w": "w"}
            and el.flag_map != {f: f for f in g.flags}
            for el in group.elements
        )

    def test_group_is_closed_under_composition(self):
        g = double_edge_graph()
        group = automorphisms(g)
        keys = {
            (frozenset(el.vertex_map.items()), frozenset(el.flag_map.items()))
            for el in group.elements
        }
        for a in group.elements:
            for b in group.elements:
                vmap = {v: b.vertex_map[w] for v, w in a.vertex_map.items()}
                fmap = {f: b.flag_map[c] for f, c in a.flag_map.items()}
                assert (frozenset(vmap.items()), frozenset(fmap.items())) in keys

    def test_fixed_labels_give_a_subgroup(self):
        g = star(1, 2, 2)
        fixed = automorphisms(g, labels_fixed=True)
        free = automorphisms(g, labels_fixed=False)
        assert free.order % fixed.order == 0
        free_keys = {
            (frozenset(el.vertex_map.items()), frozenset(el.flag_map.items()))
            for el in free.elements
        }
        for el in fixed.elements:
            key = (frozenset(el.vertex_map.items()), frozenset(el.flag_map.items()))
            assert key in free_keys

    def test_witness_builds_a_valid_morphism(self):
        g = star(0, 2, 2)
        h = retagged_copy(g, random.Random(11))
        _, witness = are_isomorphic(g, h)
        back = {c: f for f, c in witness.flag_map.items()}
        morphism = iso_between(g, h, back, witness.vertex_map)
        assert classify(morphism).kind == "isomorphism"

    @given(st.integers(0, 10**6))
    def test_iso_counts_match_brute(self, seed):
        rng = random.Random(seed)
        g = random_susy_graph(rng)
        h = retagged_copy(g, rng)
        for fixed in (True, False):
            found = sum(1 for _ in isomorphisms_between(g, h, labels_fixed=fixed))
            brute = sum(1 for _ in brute_isomorphisms(g, h, labels_fixed=fixed))
            assert found == brute
            assert found >= 1
