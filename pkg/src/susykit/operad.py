"""Gluing calculus on moduli signatures.

A moduli signature is a finite formal product of factors, each recording a
genus together with the NS and R marked-point label sets.  Morphisms between
signatures are gluing recipes: a normal form listing which source factors
land where, which label pairs get glued into nodes, how surviving labels are
renamed, and the count of Ramond gluings (the rank of the odd gluing
parameters).  SUSY graph morphisms evaluate to recipes, and erasing colors is
a projection onto classical signatures that commutes with evaluation.

Dimension bookkeeping lives here too: the even and odd dimensions of the
stratum attached to a stable SUSY graph, computed both from closed formulas
and from per-vertex sums, which must agree.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .errors import ValidationError
from .graphs import ValidationReport, edges, flags_at, is_connected, tails
from .susy import NS, R, SusyGraph, SusyMorphism, genus, is_stable, require_susy

__all__ = [
    "AxiomReport",
    "GluingRecipe",
    "ModuliFactor",
    "ModuliSignature",
    "StratumDimension",
    "check_operad_axioms",
    "evaluate_operad",
    "glue_ns",
    "glue_ns_loop",
    "glue_r",
    "glue_r_loop",
    "identity_recipe",
    "project",
    "recipe",
    "recipe_compose",
    "relabel_recipe",
    "signature",
    "stratum_dimension",
    "validate_recipe",
    "validate_signature",
]

SUPER = "super"
CLASSICAL = "classical"


@dataclass(frozen=True)
class ModuliFactor:
    """One factor of a signature: a genus plus NS and R label sets."""

    genus: int
    ns_labels: frozenset[str]
    r_labels: frozenset[str]

    def __post_init__(self) -> None:
        object.__setattr__(self, "ns_labels", frozenset(self.ns_labels))
        object.__setattr__(self, "r_labels", frozenset(self.r_labels))

    @property
    def labels(self) -> frozenset[str]:
        return self.ns_labels | self.r_labels


def _factor_key(f: ModuliFactor) -> tuple:
    return (f.genus, tuple(sorted(f.ns_labels)), tuple(sorted(f.r_labels)))


@dataclass(frozen=True)
class ModuliSignature:
    factors: tuple[ModuliFactor, ...]
    mode: str = SUPER

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(self.factors))

    @property
    def labels(self) -> frozenset[str]:
        out: set[str] = set()
        for f in self.factors:
            out |= f.labels
        return frozenset(out)

    def factor_of(self, label: str) -> int:
        for i, f in enumerate(self.factors):
            if label in f.labels:
                return i
        raise KeyError(label)

    def color_of(self, label: str) -> str:
        f = self.factors[self.factor_of(label)]
        return NS if label in f.ns_labels else R


def validate_signature(sig: ModuliSignature) -> ValidationReport:
    problems: list[str] = []
    if sig.mode not in (SUPER, CLASSICAL):
        problems.append(f"unknown mode {sig.mode!r}")
    seen: set[str] = set()
    for i, f in enumerate(sig.factors):
        if not isinstance(f.genus, int) or f.genus < 0:
            problems.append(f"factor {i}: genus must be a non-negative integer")
        overlap = f.ns_labels & f.r_labels
        if overlap:
            problems.append(f"factor {i}: labels {sorted(overlap)} are both NS and R")
        for l in sorted(f.labels):
            if l in seen:
                problems.append(f"label {l!r} appears in more than one slot")
            seen.add(l)
        if 2 * f.genus - 2 + len(f.labels) <= 0:
            problems.append(f"factor {i}: unstable (2g - 2 + #labels <= 0)")
        if sig.mode == SUPER and len(f.r_labels) % 2:
            problems.append(f"factor {i}: odd number of R labels")
        if sig.mode == CLASSICAL and f.r_labels:
            problems.append(f"factor {i}: classical signatures carry no R labels")
    expected = tuple(sorted(sig.factors, key=_factor_key))
    if sig.factors != expected:
        problems.append("factors are not in canonical order")
    return ValidationReport(tuple(problems))


def _sorted_with_positions(
    factors: Sequence[ModuliFactor],
) -> tuple[tuple[ModuliFactor, ...], list[int]]:
    """Stable-sort factors; also return old index -> new position."""
    order = sorted(range(len(factors)), key=lambda i: _factor_key(factors[i]))
    position = [0] * len(factors)
    for new, old in enumerate(order):
        position[old] = new
    return tuple(factors[i] for i in order), position


def signature(
    factors: Iterable[ModuliFactor | tuple], mode: str = SUPER
) -> ModuliSignature:
    """Build a signature in canonical factor order.  Tuple shorthand
    (genus, ns_labels, r_labels) is accepted for factors."""
    built = [
        f if isinstance(f, ModuliFactor) else ModuliFactor(f[0], f[1], f[2])
        for f in factors
    ]
    ordered, _ = _sorted_with_positions(built)
    sig = ModuliSignature(ordered, mode)
    validate_signature(sig).raise_if_invalid("signature")
    return sig


@dataclass(frozen=True)
class GluingRecipe:
    """Normal form of a signature morphism.

    assignment[i] is the target factor receiving source factor i;
    ns_gluings and r_gluings pair off source labels into nodes; relabeling
    renames the surviving source labels to the target's labels; the Ramond
    fiber rank counts the odd gluing parameters and equals len(r_gluings).
    """

    source: ModuliSignature
    target: ModuliSignature
    assignment: tuple[int, ...]
    ns_gluings: tuple[tuple[str, str], ...]
    r_gluings: tuple[tuple[str, str], ...]
    relabeling: dict[str, str]
    ramond_fiber_rank: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "assignment", tuple(self.assignment))
        object.__setattr__(
            self,
            "ns_gluings",
            tuple(sorted(tuple(sorted(p)) for p in self.ns_gluings)),
        )
        object.__setattr__(
            self,
            "r_gluings",
            tuple(sorted(tuple(sorted(p)) for p in self.r_gluings)),
        )
        object.__setattr__(self, "relabeling", dict(self.relabeling))

    @property
    def gluings(self) -> tuple[tuple[str, str], ...]:
        return self.ns_gluings + self.r_gluings


def recipe(
    source: ModuliSignature,
    target: ModuliSignature,
    assignment: Sequence[int],
    ns_gluings: Iterable[tuple[str, str]] = (),
    r_gluings: Iterable[tuple[str, str]] = (),
    relabeling: Mapping[str, str] | None = None,
) -> GluingRecipe:
    """Assemble and validate a recipe; the rank is derived, never supplied."""
    r_pairs = tuple(tuple(p) for p in r_gluings)
    out = GluingRecipe(
        source,
        target,
        tuple(assignment),
        tuple(tuple(p) for p in ns_gluings),
        r_pairs,
        dict(relabeling) if relabeling is not None else {},
        ramond_fiber_rank=len(r_pairs),
    )
    validate_recipe(out).raise_if_invalid("gluing recipe")
    return out


def validate_recipe(r: GluingRecipe) -> ValidationReport:
    problems: list[str] = []
    for side, sig in (("source", r.source), ("target", r.target)):
        rep = validate_signature(sig)
        problems.extend(f"{side}: {p}" for p in rep.violations)
    if problems:
        return ValidationReport(tuple(problems))
    if r.source.mode != r.target.mode:
        problems.append("source and target modes differ")

    n_src = len(r.source.factors)
    n_tgt = len(r.target.factors)
    if len(r.assignment) != n_src:
        problems.append("assignment length differs from the source factor count")
        return ValidationReport(tuple(problems))
    if any(not (0 <= t < n_tgt) for t in r.assignment):
        problems.append("assignment hits a factor index outside the target")
        return ValidationReport(tuple(problems))
    if set(r.assignment) != set(range(n_tgt)):
        problems.append("assignment must be surjective onto the target factors")

    src_labels = r.source.labels
    glued: set[str] = set()
    for kind, pairs, color in (
        ("NS", r.ns_gluings, NS),
        ("R", r.r_gluings, R),
    ):
        for a, b in pairs:
            if a == b:
                problems.append(f"{kind} gluing ({a!r}, {b!r}) is degenerate")
                continue
            for x in (a, b):
                if x not in src_labels:
                    problems.append(f"{kind} gluing mentions unknown label {x!r}")
                elif r.source.color_of(x) != color:
                    problems.append(f"{kind} gluing uses {x!r} of the wrong color")
                if x in glued:
                    problems.append(f"label {x!r} glued twice")
                glued.add(x)
            if (
                a in src_labels
                and b in src_labels
                and r.assignment[r.source.factor_of(a)]
                != r.assignment[r.source.factor_of(b)]
            ):
                problems.append(
                    f"glued labels {a!r}, {b!r} land in different target factors"
                )
    if problems:
        return ValidationReport(tuple(problems))

    surviving = src_labels - glued
    if set(r.relabeling) != surviving:
        problems.append("relabeling domain must be exactly the unglued labels")
    tgt_labels = r.target.labels
    values = list(r.relabeling.values())
    if len(set(values)) != len(values):
        problems.append("relabeling is not injective")
    if set(values) != set(tgt_labels):
        problems.append("relabeling image must be exactly the target labels")
    if problems:
        return ValidationReport(tuple(problems))
    for a, b in r.relabeling.items():
        if r.source.color_of(a) != r.target.color_of(b):
            problems.append(f"relabeling {a!r} -> {b!r} changes color")
        if r.assignment[r.source.factor_of(a)] != r.target.factor_of(b):
            problems.append(f"relabeling {a!r} -> {b!r} lands in the wrong factor")

    # Genus bookkeeping and connectivity, one target factor at a time.
    pair_factors: dict[int, list[tuple[int, int]]] = {}
    for a, b in r.ns_gluings + r.r_gluings:
        i, j = r.source.factor_of(a), r.source.factor_of(b)
        pair_factors.setdefault(r.assignment[i], []).append((i, j))
    for t, tf in enumerate(r.target.factors):
        fiber = [i for i, ti in enumerate(r.assignment) if ti == t]
        links = pair_factors.get(t, [])
        total = sum(r.source.factors[i].genus for i in fiber)
        expected = total + len(links) - len(fiber) + 1
        if tf.genus != expected:
            problems.append(
                f"target factor {t}: genus {tf.genus} but the gluing yields {expected}"
            )
        parent = {i: i for i in fiber}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i, j in links:
            parent[find(i)] = find(j)
        roots = {find(i) for i in fiber}
        if len(roots) != 1:
            problems.append(f"target factor {t}: glued factors are not connected")

    if r.ramond_fiber_rank != len(r.r_gluings):
        problems.append("Ramond fiber rank must equal the number of R gluings")
    return ValidationReport(tuple(problems))


def identity_recipe(sig: ModuliSignature) -> GluingRecipe:
    return recipe(
        sig,
        sig,
        tuple(range(len(sig.factors))),
        relabeling={l: l for l in sig.labels},
    )


def recipe_compose(first: GluingRecipe, second: GluingRecipe) -> GluingRecipe:
    """Compose recipes applied in order (first, then second)."""
    if first.target != second.source:
        raise ValidationError(
            "recipes do not compose: first.target differs from second.source"
        )
    back = {v: k for k, v in first.relabeling.items()}
    assignment = tuple(second.assignment[t] for t in first.assignment)
    ns_pairs = list(first.ns_gluings) + [
        (back[a], back[b]) for a, b in second.ns_gluings
    ]
    r_pairs = list(first.r_gluings) + [
        (back[a], back[b]) for a, b in second.r_gluings
    ]
    relabeling = {
        a: second.relabeling[b]
        for a, b in first.relabeling.items()
        if b in second.relabeling
    }
    return recipe(first.source, second.target, assignment, ns_pairs, r_pairs, relabeling)


def _fresh_signature(
    factors: Sequence[ModuliFactor], mode: str
) -> tuple[ModuliSignature, list[int]]:
    ordered, position = _sorted_with_positions(factors)
    sig = ModuliSignature(ordered, mode)
    validate_signature(sig).raise_if_invalid("signature")
    return sig, position


def relabel_recipe(
    sig: ModuliSignature, renaming: Mapping[str, str]
) -> GluingRecipe:
    """Generator: rename every label by a bijection, gluing nothing."""
    if set(renaming) != set(sig.labels):
        raise ValidationError("renaming domain must be exactly the signature labels")
    factors = [
        ModuliFactor(
            f.genus,
            frozenset(renaming[l] for l in f.ns_labels),
            frozenset(renaming[l] for l in f.r_labels),
        )
        for f in sig.factors
    ]
    target, position = _fresh_signature(factors, sig.mode)
    return recipe(sig, target, position, relabeling=dict(renaming))


def _glue_edge(sig: ModuliSignature, a: str, b: str, color: str) -> GluingRecipe:
    i, j = sig.factor_of(a), sig.factor_of(b)
    if i == j:
        raise ValidationError(
            f"labels {a!r}, {b!r} share a factor; use the loop gluing"
        )
    fi, fj = sig.factors[i], sig.factors[j]
    merged = ModuliFactor(
        fi.genus + fj.genus,
        (fi.ns_labels | fj.ns_labels) - {a, b},
        (fi.r_labels | fj.r_labels) - {a, b},
    )
    factors: list[ModuliFactor] = []
    slot: dict[int, int] = {}
    for k, f in enumerate(sig.factors):
        if k == i or k == j:
            continue
        slot[k] = len(factors)
        factors.append(f)
    slot[i] = slot[j] = len(factors)
    factors.append(merged)
    target, position = _fresh_signature(factors, sig.mode)
    assignment = tuple(position[slot[k]] for k in range(len(sig.factors)))
    pair = [(a, b)]
    kwargs = {"ns_gluings": pair} if color == NS else {"r_gluings": pair}
    relabeling = {l: l for l in sig.labels if l not in (a, b)}
    return recipe(sig, target, assignment, relabeling=relabeling, **kwargs)


def _glue_loop(sig: ModuliSignature, a: str, b: str, color: str) -> GluingRecipe:
    i, j = sig.factor_of(a), sig.factor_of(b)
    if i != j:
        raise ValidationError(
            f"labels {a!r}, {b!r} sit in different factors; use the edge gluing"
        )
    f = sig.factors[i]
    looped = ModuliFactor(
        f.genus + 1, f.ns_labels - {a, b}, f.r_labels - {a, b}
    )
    factors = [looped if k == i else g for k, g in enumerate(sig.factors)]
    target, position = _fresh_signature(factors, sig.mode)
    pair = [(a, b)]
    kwargs = {"ns_gluings": pair} if color == NS else {"r_gluings": pair}
    relabeling = {l: l for l in sig.labels if l not in (a, b)}
    return recipe(sig, target, position, relabeling=relabeling, **kwargs)


def glue_ns(sig: ModuliSignature, a: str, b: str) -> GluingRecipe:
    """Generator: glue NS labels in two different factors into a node."""
    return _glue_edge(sig, a, b, NS)


def glue_r(sig: ModuliSignature, a: str, b: str) -> GluingRecipe:
    """Generator: glue R labels in two different factors into a node."""
    return _glue_edge(sig, a, b, R)


def glue_ns_loop(sig: ModuliSignature, a: str, b: str) -> GluingRecipe:
    """Generator: glue two NS labels of one factor, raising its genus."""
    return _glue_loop(sig, a, b, NS)


def glue_r_loop(sig: ModuliSignature, a: str, b: str) -> GluingRecipe:
    """Generator: glue two R labels of one factor, raising its genus."""
    return _glue_loop(sig, a, b, R)


def _graph_signature(g: SusyGraph) -> tuple[ModuliSignature, dict[str, int]]:
    """Per-vertex factors with flag ids as labels; vertex -> factor position."""
    verts = sorted(g.vertices)
    factors = []
    for v in verts:
        fl = flags_at(g.graph, v)
        factors.append(
            ModuliFactor(
                g.genus_of(v),
                frozenset(f for f in fl if g.color_of(f) == NS),
                frozenset(f for f in fl if g.color_of(f) == R),
            )
        )
    mode = CLASSICAL if g.modular else SUPER
    sig, position = _fresh_signature(factors, mode)
    return sig, {v: position[i] for i, v in enumerate(verts)}


def evaluate_operad(h: SusyMorphism) -> GluingRecipe:
    """Evaluate a SUSY graph morphism to a gluing recipe between the
    signatures of its endpoint graphs.  Both graphs must be stable."""
    require_susy(h.source)
    require_susy(h.target)
    for side, g in (("source", h.source), ("target", h.target)):
        if not is_stable(g).stable:
            raise ValidationError(f"evaluation needs a stable {side} graph")
    src_sig, src_pos = _graph_signature(h.source)
    tgt_sig, tgt_pos = _graph_signature(h.target)
    n_src = len(src_sig.factors)
    assignment = [0] * n_src
    for v, p in src_pos.items():
        assignment[p] = tgt_pos[h.map.vertex_map[v]]
    ns_pairs: list[tuple[str, str]] = []
    r_pairs: list[tuple[str, str]] = []
    for a, b in h.map.contracted_pairs():
        (ns_pairs if h.source.color_of(a) == NS else r_pairs).append((a, b))
    relabeling = {fs: ft for ft, fs in h.map.flag_map.items()}
    return recipe(src_sig, tgt_sig, assignment, ns_pairs, r_pairs, relabeling)


def project(x: ModuliSignature | GluingRecipe):
    """Erase colors: every R label becomes NS and R gluings become NS
    gluings.  Works on signatures and on recipes."""
    if isinstance(x, ModuliSignature):
        factors = [
            ModuliFactor(f.genus, f.ns_labels | f.r_labels, frozenset())
            for f in x.factors
        ]
        sig, _ = _fresh_signature(factors, CLASSICAL)
        return sig
    if isinstance(x, GluingRecipe):
        src_factors = [
            ModuliFactor(f.genus, f.ns_labels | f.r_labels, frozenset())
            for f in x.source.factors
        ]
        tgt_factors = [
            ModuliFactor(f.genus, f.ns_labels | f.r_labels, frozenset())
            for f in x.target.factors
        ]
        src, src_pos = _fresh_signature(src_factors, CLASSICAL)
        tgt, tgt_pos = _fresh_signature(tgt_factors, CLASSICAL)
        assignment = [0] * len(src_factors)
        for old, new in enumerate(src_pos):
            assignment[new] = tgt_pos[x.assignment[old]]
        return recipe(
            src,
            tgt,
            assignment,
            ns_gluings=x.ns_gluings + x.r_gluings,
            relabeling=x.relabeling,
        )
    raise TypeError(f"cannot project {type(x).__name__}")


@dataclass(frozen=True)
class StratumDimension:
    even: int
    odd: Fraction
    codimension: tuple[int, int]


def stratum_dimension(g: SusyGraph) -> StratumDimension:
    """Even and odd dimensions of the stratum of a stable SUSY graph, with
    the codimension of the stratum inside the total space.

    Both dimensions are computed twice, from closed formulas in the total
    genus and tail counts and as per-vertex sums; disagreement is a hard
    error, as is a non-integer odd dimension."""
    require_susy(g)
    rep = is_stable(g)
    if not rep.stable:
        raise ValidationError(
            "dimension formulas need a stable graph; unstable vertices: "
            + ", ".join(rep.unstable_vertices)
        )
    base = g.graph
    if not is_connected(base):
        raise ValidationError("dimension formulas need a connected graph")
    tail_list = tails(base)
    edge_list = edges(base)
    gt = genus(g)
    t_ns = sum(1 for f in tail_list if g.color_of(f) == NS)
    t_r = len(tail_list) - t_ns
    if t_r % 2:
        raise ValidationError("odd number of R tails")
    e_r = sum(1 for a, _ in edge_list if g.color_of(a) == R)

    even = 3 * gt - 3 + len(tail_list) - len(edge_list)
    odd = 2 * gt - 2 + t_ns + Fraction(t_r, 2)
    # Per-vertex route: factor dimensions summed, plus one odd parameter
    # per Ramond node (the Ramond gluing fiber).
    even_local = 0
    odd_local = Fraction(0)
    for v in base.vertices:
        fl = flags_at(base, v)
        ns_v = sum(1 for f in fl if g.color_of(f) == NS)
        r_v = len(fl) - ns_v
        even_local += 3 * g.genus_of(v) - 3 + ns_v + r_v
        odd_local += 2 * g.genus_of(v) - 2 + ns_v + Fraction(r_v, 2)
    odd_local += e_r
    if even != even_local:
        raise ValidationError(
            f"even dimension mismatch: closed {even}, per-vertex {even_local}"
        )
    if odd != odd_local:
        raise ValidationError(
            f"odd dimension mismatch: closed {odd}, per-vertex {odd_local}"
        )
    if odd.denominator != 1:
        raise ValidationError(f"odd dimension {odd} is not an integer")
    return StratumDimension(even, odd, (len(edge_list), 0))


@dataclass(frozen=True)
class AxiomReport:
    checked: dict[str, int]
    failures: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


class _LabelPool:
    def __init__(self, prefix: str = "x") -> None:
        self.prefix = prefix
        self.n = 0

    def take(self, count: int) -> list[str]:
        out = [f"{self.prefix}{self.n + i}" for i in range(count)]
        self.n += count
        return out


def _random_factor(
    rng: random.Random, pool: _LabelPool, min_ns: int = 0, min_r: int = 0
) -> ModuliFactor:
    ns_count = min_ns + rng.randint(0, 2)
    r_count = min_r + 2 * rng.randint(0, 1)
    genus = rng.randint(0, 2)
    if 2 * genus - 2 + ns_count + r_count <= 0:
        genus = 2
    return ModuliFactor(
        genus,
        frozenset(pool.take(ns_count)),
        frozenset(pool.take(r_count)),
    )


def _pick_pair(
    rng: random.Random, factor: ModuliFactor, color: str
) -> tuple[str, str]:
    labels = sorted(factor.ns_labels if color == NS else factor.r_labels)
    a, b = rng.sample(labels, 2)
    return a, b


def _pick_one(rng: random.Random, factor: ModuliFactor, color: str) -> str:
    labels = sorted(factor.ns_labels if color == NS else factor.r_labels)
    return rng.choice(labels)


def _glue(sig: ModuliSignature, a: str, b: str) -> GluingRecipe:
    color = sig.color_of(a)
    if sig.factor_of(a) == sig.factor_of(b):
        return _glue_loop(sig, a, b, color)
    return _glue_edge(sig, a, b, color)


def check_operad_axioms(seed: int = 0, cases: int = 100) -> AxiomReport:
    """Exercise the generator relations on random signatures.

    Six condition families are checked, `cases` random instances each:
    composing relabelings, commuting a relabeling past a loop gluing and
    past an edge gluing, commuting two loop gluings, a loop with an edge,
    and two edge gluings.  NS and R versions (and mixed-color combinations)
    are drawn at random per instance."""
    rng = random.Random(seed)
    checked: dict[str, int] = {}
    failures: list[str] = []

    def run(name: str, trial: Callable[[], tuple[GluingRecipe, GluingRecipe]]) -> None:
        checked[name] = 0
        for k in range(cases):
            lhs, rhs = trial()
            checked[name] += 1
            if lhs != rhs:
                failures.append(f"{name}: instance {k} disagrees")

    def fresh_renaming(rng: random.Random, pool: _LabelPool, labels) -> dict[str, str]:
        labels = sorted(labels)
        new = pool.take(len(labels))
        rng.shuffle(new)
        return dict(zip(labels, new))

    def relabel_compose() -> tuple[GluingRecipe, GluingRecipe]:
        pool = _LabelPool()
        sig = signature(
            [_random_factor(rng, pool, min_ns=1) for _ in range(rng.randint(1, 2))]
        )
        s1 = fresh_renaming(rng, pool, sig.labels)
        first = relabel_recipe(sig, s1)
        s2 = fresh_renaming(rng, pool, first.target.labels)
        second = relabel_recipe(first.target, s2)
        direct = relabel_recipe(sig, {l: s2[s1[l]] for l in sig.labels})
        return recipe_compose(first, second), direct

    def relabel_loop() -> tuple[GluingRecipe, GluingRecipe]:
        pool = _LabelPool()
        sig = signature([_random_factor(rng, pool, min_ns=2, min_r=2)])
        color = rng.choice([NS, R])
        a, b = _pick_pair(rng, sig.factors[0], color)
        ren = fresh_renaming(rng, pool, sig.labels)
        glue_first = _glue(sig, a, b)
        lhs = recipe_compose(
            glue_first,
            relabel_recipe(
                glue_first.target,
                {l: ren[l] for l in glue_first.target.labels},
            ),
        )
        relabel_first = relabel_recipe(sig, ren)
        rhs = recipe_compose(
            relabel_first, _glue(relabel_first.target, ren[a], ren[b])
        )
        return lhs, rhs

    def relabel_edge() -> tuple[GluingRecipe, GluingRecipe]:
        pool = _LabelPool()
        f1 = _random_factor(rng, pool, min_ns=1, min_r=2)
        f2 = _random_factor(rng, pool, min_ns=1, min_r=2)
        sig = signature([f1, f2])
        color = rng.choice([NS, R])
        a = _pick_one(rng, f1, color)
        b = _pick_one(rng, f2, color)
        ren = fresh_renaming(rng, pool, sig.labels)
        glue_first = _glue(sig, a, b)
        lhs = recipe_compose(
            glue_first,
            relabel_recipe(
                glue_first.target,
                {l: ren[l] for l in glue_first.target.labels},
            ),
        )
        relabel_first = relabel_recipe(sig, ren)
        rhs = recipe_compose(
            relabel_first, _glue(relabel_first.target, ren[a], ren[b])
        )
        return lhs, rhs

    def two_step(
        sig: ModuliSignature, p1: tuple[str, str], p2: tuple[str, str]
    ) -> GluingRecipe:
        first = _glue(sig, *p1)
        return recipe_compose(first, _glue(first.target, *p2))

    def loops_commute() -> tuple[GluingRecipe, GluingRecipe]:
        pool = _LabelPool()
        sig = signature([_random_factor(rng, pool, min_ns=4, min_r=4)])
        f = sig.factors[0]
        c1, c2 = rng.choice([NS, R]), rng.choice([NS, R])
        ns = sorted(f.ns_labels)
        rs = sorted(f.r_labels)
        picks = {NS: iter(rng.sample(ns, 4)), R: iter(rng.sample(rs, 4))}
        p1 = (next(picks[c1]), next(picks[c1]))
        p2 = (next(picks[c2]), next(picks[c2]))
        return two_step(sig, p1, p2), two_step(sig, p2, p1)

    def loop_edge() -> tuple[GluingRecipe, GluingRecipe]:
        pool = _LabelPool()
        f1 = _random_factor(rng, pool, min_ns=3, min_r=4)
        f2 = _random_factor(rng, pool, min_ns=2, min_r=4)
        sig = signature([f1, f2])
        c_loop, c_edge = rng.choice([NS, R]), rng.choice([NS, R])
        if rng.random() < 0.5:
            # loop inside the first factor, edge across the two
            loop_pool = sorted(f1.ns_labels if c_loop == NS else f1.r_labels)
            la, lb = rng.sample(loop_pool, 2)
            ea = rng.choice(
                sorted((f1.ns_labels if c_edge == NS else f1.r_labels) - {la, lb})
            )
            eb = rng.choice(sorted(f2.ns_labels if c_edge == NS else f2.r_labels))
            return two_step(sig, (la, lb), (ea, eb)), two_step(
                sig, (ea, eb), (la, lb)
            )
        # two cross pairs; gluing one turns the other into a loop
        c2 = c_loop
        pool1 = sorted(f1.ns_labels if c_edge == NS else f1.r_labels)
        pool2 = sorted(f2.ns_labels if c_edge == NS else f2.r_labels)
        a1 = rng.choice(pool1)
        b1 = rng.choice(pool2)
        pool1b = sorted(
            (f1.ns_labels if c2 == NS else f1.r_labels) - {a1, b1}
        )
        pool2b = sorted(
            (f2.ns_labels if c2 == NS else f2.r_labels) - {a1, b1}
        )
        if not pool1b or not pool2b:
            return loop_edge()
        a2 = rng.choice(pool1b)
        b2 = rng.choice(pool2b)
        return two_step(sig, (a1, b1), (a2, b2)), two_step(
            sig, (a2, b2), (a1, b1)
        )

    def edges_commute() -> tuple[GluingRecipe, GluingRecipe]:
        pool = _LabelPool()
        f1 = _random_factor(rng, pool, min_ns=1, min_r=2)
        f2 = _random_factor(rng, pool, min_ns=2, min_r=2)
        f3 = _random_factor(rng, pool, min_ns=1, min_r=2)
        sig = signature([f1, f2, f3])
        c1, c2 = rng.choice([NS, R]), rng.choice([NS, R])
        a1 = rng.choice(sorted(f1.ns_labels if c1 == NS else f1.r_labels))
        b1 = rng.choice(sorted(f2.ns_labels if c1 == NS else f2.r_labels))
        mid = (f2.ns_labels if c2 == NS else f2.r_labels) - {b1}
        if not mid:
            return edges_commute()
        a2 = rng.choice(sorted(mid))
        b2 = rng.choice(sorted(f3.ns_labels if c2 == NS else f3.r_labels))
        return two_step(sig, (a1, b1), (a2, b2)), two_step(
            sig, (a2, b2), (a1, b1)
        )

    run("relabel_compose", relabel_compose)
    run("relabel_loop", relabel_loop)
    run("relabel_edge", relabel_edge)
    run("loops_commute", loops_commute)
    run("loop_edge", loop_edge)
    run("edges_commute", edges_commute)
    return AxiomReport(checked, tuple(failures))
