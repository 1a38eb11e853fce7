"""Total grafting, atomization, decomposition, and the commutation lemmas."""

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from susykit import (
    NS,
    R,
    SusyKitError,
    classify,
    commute_contractions,
    commute_iso_contraction,
    compose,
    contract_edge,
    contract_loop,
    contract_pair,
    contract_tails,
    decompose_to_elementaries,
    edges,
    graft,
    make_isomorphism,
    modular_graph,
    susy_identity,
    susy_morphism,
    tails,
    total_grafting,
    validate_susy_morphism,
)
from susykit.calculus import atomize, compose_chain
from susykit.sampling import random_morphism, random_susy_graph

from conftest import star, two_vertex_tree


def loop_with_tails(n: int = 2):
    flags = [f"t{i}" for i in range(n)] + ["la", "lb"]
    boundary = {f: "v" for f in flags}
    involution = {f: f for f in flags[:-2]} | {"la": "lb", "lb": "la"}
    return modular_graph(
        flags=flags,
        vertices=["v"],
        boundary=boundary,
        involution=involution,
        genus={"v": 0},
    )


class TestTotalGrafting:
    def test_corolla_gives_identity(self):
        g = star(0, 3)
        n = total_grafting(g)
        assert classify(n).kind == "identity"

    def test_two_vertex_graph(self):
        t = two_vertex_tree(2, 2)
        n = total_grafting(t)
        assert validate_susy_morphism(n).ok
        assert classify(n).kind == "grafting"
        assert len(n.source.vertices) == 2
        assert edges(n.source.graph) == []
        assert len(tails(n.source.graph)) == 6

    def test_loop_graph(self):
        g = loop_with_tails(1)
        n = total_grafting(g)
        assert validate_susy_morphism(n).ok
        assert len(n.source.vertices) == 1
        assert edges(n.source.graph) == []
        assert classify(n).kind == "grafting"


class TestClassify:
    def test_identity(self):
        assert classify(susy_identity(star(0, 3))).kind == "identity"

    def test_edge_contraction(self):
        t = two_vertex_tree(2, 2)
        assert classify(contract_edge(t, ("ea", "eb"))).kind == "edge_contraction"

    def test_loop_contraction(self):
        g = loop_with_tails(2)
        assert classify(contract_loop(g, ("la", "lb"))).kind == "loop_contraction"

    def test_virtual_contraction(self):
        g = star(0, 4)
        h = contract_tails(g, ("vn0", "vn1"))
        assert classify(h).kind == "virtual_contraction"

    def test_grafting(self):
        g = star(0, 4)
        assert classify(graft(g, [("vn0", "vn1")])).kind == "grafting"

    def test_isomorphism(self):
        g = star(0, 3)
        h = make_isomorphism(g, flag_renaming={f: f + "x" for f in g.flags})
        assert classify(h).kind == "isomorphism"

    def test_composite(self, rng):
        g = two_vertex_tree(2, 2)
        h1 = graft(g, [("a0", "b0")])
        h2 = contract_pair(h1.target, ("ea", "eb"))
        assert classify(compose(h1, h2)).kind == "composite"


class TestAtomize:
    def test_identity_pieces_are_vertex_stars(self):
        t = two_vertex_tree(2, 2)
        atom = atomize(susy_identity(t))
        assert set(atom.pieces) == {"u", "w"}
        for v, piece in atom.pieces.items():
            assert classify(atom.piece_morphisms[v]).kind == "identity"
            assert edges(piece.graph) == []

    def test_edge_contraction_one_nontrivial_piece(self):
        t = two_vertex_tree(2, 2)
        h = contract_edge(t, ("ea", "eb"))
        atom = atomize(h)
        target_vertex = next(iter(h.target.vertices))
        piece = atom.pieces[target_vertex]
        assert len(piece.vertices) == 2
        assert len(edges(piece.graph)) == 1
        assert (
            classify(atom.piece_morphisms[target_vertex]).kind
            == "edge_contraction"
        )

    def test_grafting_pieces_are_identities(self):
        g = star(0, 4)
        h = graft(g, [("vn0", "vn1")])
        atom = atomize(h)
        for v, hm in atom.piece_morphisms.items():
            assert classify(hm).kind == "identity"

    @given(st.integers(0, 10**6))
    def test_commuting_square(self, seed):
        rng = random.Random(seed)
        g = random_susy_graph(rng)
        h = random_morphism(rng, g)
        atom = atomize(h)
        left = compose(atom.tails_grafting, h)
        right = compose(atom.pieces_morphism, atom.target_grafting)
        assert left == right


class TestDecompose:
    def test_identity_decomposition(self):
        g = star(0, 3)
        steps = decompose_to_elementaries(susy_identity(g))
        assert all(
            s.kind in ("identity", "isomorphism") for s in steps
        ) and len(steps) <= 1

    def test_two_edge_contraction_decomposes_to_singles(self):
        flags = ["t0", "t1", "t2", "p", "q", "r", "s"]
        g = modular_graph(
            flags=flags,
            vertices=["u", "v", "w"],
            boundary={
                "t0": "u",
                "t1": "v",
                "t2": "w",
                "p": "u",
                "q": "v",
                "r": "v",
                "s": "w",
            },
            involution={
                "t0": "t0",
                "t1": "t1",
                "t2": "t2",
                "p": "q",
                "q": "p",
                "r": "s",
                "s": "r",
            },
            genus={"u": 1, "v": 1, "w": 1},
        )
        step1 = contract_edge(g, ("p", "q"))
        step2 = contract_edge(step1.target, ("r", "s"))
        h = compose(step1, step2)
        steps = decompose_to_elementaries(h)
        kinds = [s.kind for s in steps]
        assert kinds.count("edge_contraction") == 2
        assert "grafting" not in kinds
        assert compose_chain(g, [s.morphism for s in steps]) == h

    def test_virtual_contraction_decomposition(self):
        g = star(0, 4)
        h = contract_tails(g, ("vn0", "vn1"))
        steps = decompose_to_elementaries(h)
        kinds = [s.kind for s in steps]
        assert kinds[0] == "grafting"
        assert (
            "edge_contraction" in kinds or "loop_contraction" in kinds
        )
        assert compose_chain(g, [s.morphism for s in steps]) == h

    @given(st.integers(0, 10**6))
    def test_recomposition_exact(self, seed):
        rng = random.Random(seed)
        g = random_susy_graph(rng)
        h = random_morphism(rng, g)
        for order in ("lex", "reverse"):
            steps = decompose_to_elementaries(h, order=order)
            assert compose_chain(g, [s.morphism for s in steps]) == h

    def test_steps_are_elementary(self, rng):
        for _ in range(20):
            g = random_susy_graph(rng)
            h = random_morphism(rng, g)
            for s in decompose_to_elementaries(h):
                assert s.kind in (
                    "identity",
                    "isomorphism",
                    "grafting",
                    "edge_contraction",
                    "loop_contraction",
                )


class TestCommuteIsoContraction:
    def test_identity_iso(self):
        t = two_vertex_tree(2, 2)
        sq = commute_iso_contraction(susy_identity(t), ("ea", "eb"))
        assert classify(sq.induced_iso).kind in ("identity", "isomorphism")
        assert sq.iso_then_contract == sq.contract_then_iso

    def test_loop_flag_swap(self):
        g = loop_with_tails(2)
        a = make_isomorphism(
            g, flag_renaming={"la": "lb", "lb": "la", "t0": "t0", "t1": "t1"}
        )
        sq = commute_iso_contraction(a, ("la", "lb"))
        assert sq.iso_then_contract == sq.contract_then_iso

    def test_two_vertex_case(self):
        t = two_vertex_tree(2, 2)
        renamed = make_isomorphism(
            t, flag_renaming={f: f + "z" for f in t.flags}
        )
        # contract the renamed edge in the target
        sq = commute_iso_contraction(renamed, ("eaz", "ebz"))
        assert sq.iso_then_contract == sq.contract_then_iso

    def test_rejects_non_edge(self):
        t = two_vertex_tree(2, 2)
        with pytest.raises(SusyKitError):
            commute_iso_contraction(susy_identity(t), ("a0", "ea"))

    def test_rejects_non_iso(self):
        t = two_vertex_tree(2, 2)
        h = contract_edge(t, ("ea", "eb"))
        with pytest.raises(SusyKitError):
            commute_iso_contraction(h, ("a0", "a1"))


class TestCommuteContractions:
    def test_two_loops_one_vertex(self):
        flags = ["t", "l1a", "l1b", "l2a", "l2b"]
        g = modular_graph(
            flags=flags,
            vertices=["v"],
            boundary={f: "v" for f in flags},
            involution={
                "t": "t",
                "l1a": "l1b",
                "l1b": "l1a",
                "l2a": "l2b",
                "l2b": "l2a",
            },
            genus={"v": 0},
        )
        out = commute_contractions(g, ("l1a", "l1b"), ("l2a", "l2b"))
        assert out.commutes

    def test_loop_plus_connecting_edge(self):
        flags = ["t", "la", "lb", "p", "q", "u0"]
        g = modular_graph(
            flags=flags,
            vertices=["v", "w"],
            boundary={
                "t": "v",
                "la": "v",
                "lb": "v",
                "p": "v",
                "q": "w",
                "u0": "w",
            },
            involution={
                "t": "t",
                "u0": "u0",
                "la": "lb",
                "lb": "la",
                "p": "q",
                "q": "p",
            },
            genus={"v": 0, "w": 1},
        )
        out = commute_contractions(g, ("la", "lb"), ("p", "q"))
        assert out.commutes

    def test_path_of_three_vertices(self):
        flags = ["t0", "t1", "t2", "p", "q", "r", "s"]
        g = modular_graph(
            flags=flags,
            vertices=["u", "v", "w"],
            boundary={
                "t0": "u",
                "t1": "v",
                "t2": "w",
                "p": "u",
                "q": "v",
                "r": "v",
                "s": "w",
            },
            involution={
                "t0": "t0",
                "t1": "t1",
                "t2": "t2",
                "p": "q",
                "q": "p",
                "r": "s",
                "s": "r",
            },
            genus={"u": 1, "v": 1, "w": 1},
        )
        out = commute_contractions(g, ("p", "q"), ("r", "s"))
        assert out.commutes

    def test_overlapping_pairs_rejected(self):
        g = loop_with_tails(2)
        with pytest.raises(SusyKitError):
            commute_contractions(g, ("la", "lb"), ("lb", "t0"))

    @given(st.integers(0, 10**6))
    def test_random_disjoint_pairs_commute(self, seed):
        rng = random.Random(seed)
        g = random_susy_graph(rng)
        edge_list = edges(g.graph)
        if len(edge_list) < 2:
            return
        e1, e2 = edge_list[0], edge_list[1]
        out = commute_contractions(g, e1, e2)
        assert out.commutes
