"""From graph surgery to gluing recipes.

Every morphism of stable SUSY graphs evaluates to a recipe over moduli
signatures: which factors map where, which slots get glued with which
color, and how large the Ramond gluing fiber is.  Evaluation is
functorial, so composing morphisms composes recipes.
"""

from susykit import (
    compose,
    contract_pair,
    evaluate_operad,
    glue_r_loop,
    project,
    recipe_compose,
    signature,
    susy_graph,
)


def dumbbell():
    """Two vertices, an NS bridge, one R loop on the right vertex."""
    flags = ["1", "2", "b1", "b2", "3", "l1", "l2"]
    boundary = {"1": "u", "2": "u", "b1": "u",
                "b2": "w", "3": "w", "l1": "w", "l2": "w"}
    involution = {"1": "1", "2": "2", "3": "3",
                  "b1": "b2", "b2": "b1", "l1": "l2", "l2": "l1"}
    return susy_graph(
        flags=flags,
        vertices=["u", "w"],
        boundary=boundary,
        involution=involution,
        genus={"u": 0, "w": 1},
        color={"1": "NS", "2": "NS", "b1": "NS", "b2": "NS",
               "3": "NS", "l1": "R", "l2": "R"},
        ns_labels={"1": "1", "2": "2", "3": "3"},
    )


def main() -> None:
    g = dumbbell()

    bridge = contract_pair(g, ("b1", "b2"))
    rec = evaluate_operad(bridge)
    print("contract the NS bridge:")
    print(f"  source factors: {len(rec.source.factors)}")
    print(f"  target factors: {len(rec.target.factors)}")
    print(f"  NS gluings: {rec.ns_gluings}")
    print(f"  Ramond fiber rank: {rec.ramond_fiber_rank}")
    print()

    loop = contract_pair(bridge.target, ("l1", "l2"))
    rec2 = evaluate_operad(loop)
    print("then contract the R loop:")
    print(f"  R gluings: {rec2.r_gluings}")
    print(f"  Ramond fiber rank: {rec2.ramond_fiber_rank}")
    print(f"  target factor genus: {rec2.target.factors[0].genus}")
    print()

    both = compose(bridge, loop)
    assert evaluate_operad(both) == recipe_compose(rec, rec2)
    print("evaluate(compose) == recipe_compose(evaluate, evaluate): ok")
    print()

    sig = signature([(1, {"a"}, {"p", "q"})])
    gen = glue_r_loop(sig, "p", "q")
    print("generator glue_r_loop on (genus 1, NS {a}, R {p, q}):")
    print(f"  target: genus {gen.target.factors[0].genus}, "
          f"NS {sorted(gen.target.factors[0].ns_labels)}, "
          f"R {sorted(gen.target.factors[0].r_labels)}")
    print(f"  Ramond fiber rank: {gen.ramond_fiber_rank}")
    print()

    flat = project(evaluate_operad(both))
    print("projected to the colorless operad:")
    print(f"  mode: {flat.source.mode}")
    print(f"  NS gluings: {flat.ns_gluings}")
    print(f"  R gluings: {flat.r_gluings}, fiber rank {flat.ramond_fiber_rank}")


if __name__ == "__main__":
    main()
