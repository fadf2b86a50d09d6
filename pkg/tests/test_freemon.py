"""Free monoidal presentations, the truncated-nerve adjunction, and the
bounded word problem."""
import random
from functools import lru_cache
from itertools import combinations_with_replacement

import pytest

from opcat.errors import (StructureError, UndecidedAtBound,
                          UnsupportedPresentation)
from opcat.fixtures import (boolean_poset_moncat, cyclic_moncat,
                            standard_simplex, trivial_moncat,
                            walking_arrow_2cat)
from opcat.freemon import (MonFunctorAssignment, MonGenerator,
                           MonPresentation, Term, adjunction_check,
                           check_term, compose_terms, enumerate_ssetmaps,
                           evaluate_term, hom_moncat, induced_assignment,
                           induced_map, juxtapose, leaf, node, phi0, phi_tr3,
                           presentation_cells, presentation_equal,
                           presentations_equivalent, psi, term_inputs,
                           term_output, term_size)
from opcat.operadic import bouquets, to_simplicial
from opcat.simplicial import (compose_maps, identity_map, sset_map,
                              truncate, validate_ssetmap)
from opcat.twocat import duskin_nerve

MONCATS = {
    "trivial": trivial_moncat,
    "z2": lambda: cyclic_moncat(2),
    "z3": lambda: cyclic_moncat(3),
    "boolean_poset": boolean_poset_moncat,
}

PSI_LEVELS = {
    "trivial": (1, 1, 1, 1),
    "z2": (1, 2, 4, 8),
    "z3": (1, 3, 9, 27),
    "boolean_poset": (1, 2, 5, 14),
}

SHAPES = {
    "simplex0": lambda: standard_simplex(0),
    "simplex1": lambda: standard_simplex(1),
    "simplex2": lambda: standard_simplex(2),
    "simplex3": lambda: standard_simplex(3),
    "arrow_nerve": lambda: duskin_nerve(walking_arrow_2cat()),
    "bouquet2": lambda: truncate(to_simplicial(bouquets(2)), 3),
}

# hom-set size per (shape, monoidal category), from running both
# enumerations independently; for the standard simplices this must equal
# the corresponding nerve level.
ADJUNCTION_COUNTS = {
    "simplex0": {"trivial": 1, "z2": 1, "z3": 1, "boolean_poset": 1},
    "simplex1": {"trivial": 1, "z2": 2, "z3": 3, "boolean_poset": 2},
    "simplex2": {"trivial": 1, "z2": 4, "z3": 9, "boolean_poset": 5},
    "simplex3": {"trivial": 1, "z2": 8, "z3": 27, "boolean_poset": 14},
    "arrow_nerve": {"trivial": 1, "z2": 2, "z3": 3, "boolean_poset": 2},
    "bouquet2": {"trivial": 1, "z2": 2, "z3": 3, "boolean_poset": 1},
}


@lru_cache(maxsize=None)
def _psi(name):
    return psi(MONCATS[name]())


# ---------------------------------------------------------------------------
# the right adjoint


@pytest.mark.parametrize("name", sorted(MONCATS))
def test_psi_levels(name):
    assert _psi(name).cells == PSI_LEVELS[name]


def test_psi_of_cyclic_groups_is_power_law():
    for n in (2, 3):
        assert psi(cyclic_moncat(n)).cells == tuple(n ** k for k in range(4))


# ---------------------------------------------------------------------------
# the standard presentations


def test_phi0_shapes():
    shapes = [(len(phi0(k).letters), len(phi0(k).gens),
               len(phi0(k).relations)) for k in range(4)]
    assert shapes == [(0, 0, 0), (1, 0, 0), (3, 1, 0), (6, 5, 1)]


def test_phi0_rejects_bad_level():
    with pytest.raises(StructureError):
        phi0(4)
    with pytest.raises(StructureError):
        phi0(-1)


def test_phi0_3_typing():
    P = phi0(3)
    assert P.letters == ("f01", "f02", "f03", "f12", "f13", "f23")
    typed = {g.name: (tuple(P.letters[l] for l in g.inputs),
                      tuple(P.letters[l] for l in g.output))
             for g in P.gens}
    assert typed == {
        "alpha012": (("f12", "f01"), ("f02",)),
        "alpha013": (("f23", "f12"), ("f13",)),
        "alpha023": (("f23", "f02"), ("f03",)),
        "alpha123": (("f13", "f01"), ("f03",)),
        "sigma0123": (("f23", "f12", "f01"), ("f03",)),
    }
    sigma, left, right = P.relations[0]
    assert sigma.gen == 4 and all(c.letter is not None
                                  for c in sigma.children)
    assert (left.gen, left.children[0].gen) == (3, 1)
    assert (right.gen, right.children[1].gen) == (2, 0)


@pytest.mark.parametrize("k", range(4))
def test_phi_tr3_of_standard_simplex_matches_phi0(k):
    assert presentations_equivalent(phi_tr3(standard_simplex(k)), phi0(k))


def test_presentations_equivalent_negatives():
    assert not presentations_equivalent(phi0(2), phi0(3))
    P = phi0(3)
    assert not presentations_equivalent(
        P, MonPresentation(P.letters, P.gens, ()))


def test_presentations_equivalent_under_renaming():
    P = phi0(3)
    perm = (3, 5, 0, 4, 2, 1)  # letters shuffled
    gperm = (2, 0, 4, 1, 3)    # generators shuffled

    def tr(t):
        if t.letter is not None:
            return leaf(perm[t.letter])
        return Term(gperm[t.gen], None, tuple(tr(c) for c in t.children))

    gens = [None] * 5
    for i, g in enumerate(P.gens):
        gens[gperm[i]] = MonGenerator(
            f"g{gperm[i]}", tuple(perm[l] for l in g.inputs),
            tuple(perm[l] for l in g.output))
    Q = MonPresentation(
        tuple(f"x{i}" for i in range(6)), tuple(gens),
        tuple(tuple(tr(t) for t in rel) for rel in P.relations))
    assert presentations_equivalent(P, Q)


def test_phi_tr3_of_arrow_nerve_has_no_generators():
    P = phi_tr3(duskin_nerve(walking_arrow_2cat()))
    assert (len(P.letters), P.gens, P.relations) == (1, (), ())


def test_phi_tr3_requires_level_3():
    with pytest.raises(StructureError, match="3-truncated"):
        phi_tr3(truncate(standard_simplex(2), 2))


def test_phi_tr3_of_bouquet_collapses_degenerate_faces():
    P = phi_tr3(SHAPES["bouquet2"]())
    pc = presentation_cells(P)
    assert pc.letter_cell == (1, 2)
    assert pc.two_cell == (2, 5) and pc.three_cell == (6, 9)
    typed = [(g.inputs, g.output) for g in P.gens]
    assert typed == [((1, 0), ()), ((0, 1), ()),
                     ((0, 1, 0), (0,)), ((1, 0, 1), (1,))]
    assert P.relations[0] == (
        node(2, leaf(0), leaf(1), leaf(0)),
        juxtapose(node(1, leaf(0), leaf(1)), leaf(0)),
        juxtapose(leaf(0), node(0, leaf(1), leaf(0))))


def test_presentation_cells_requires_simplicial_origin():
    with pytest.raises(StructureError, match="not a presentation"):
        presentation_cells(phi0(3))


def test_presentation_validation():
    with pytest.raises(StructureError, match="arity"):
        MonGenerator("g", (0, 0, 0, 0), (0,))
    with pytest.raises(StructureError, match="one output"):
        MonGenerator("g", (0,), (0, 0))
    with pytest.raises(StructureError, match="out of range"):
        MonPresentation(("a",), (MonGenerator("g", (1,), (0,)),), ())
    g = MonGenerator("g", (0,), (0,))
    with pytest.raises(StructureError, match="non-parallel"):
        MonPresentation(("a", "b"), (g,),
                        ((node(0, leaf(0)), leaf(1)),))
    with pytest.raises(StructureError, match="two sides"):
        MonPresentation(("a",), (g,), ((leaf(0),),))


def test_term_utilities():
    P = phi0(3)
    l = {n: i for i, n in enumerate(P.letters)}
    t = node(3, node(1, leaf(l["f23"]), leaf(l["f12"])), leaf(l["f01"]))
    check_term(P, t)
    assert term_inputs(P, t) == (l["f23"], l["f12"], l["f01"])
    assert term_output(P, t) == (l["f03"],)
    assert term_size(t) == 5
    assert term_size(juxtapose(leaf(0), leaf(1))) == 2
    with pytest.raises(StructureError, match="expects"):
        check_term(P, node(0, leaf(l["f01"]), leaf(l["f12"])))
    with pytest.raises(StructureError, match="out of range"):
        check_term(P, leaf(17))
    with pytest.raises(StructureError, match="leaf or a node"):
        Term(gen=0, letter=0)


# ---------------------------------------------------------------------------
# hom-sets and the adjunction


@pytest.mark.parametrize("name", sorted(MONCATS))
def test_hom_counts_match_nerve_levels(name):
    M = MONCATS[name]()
    counts = [len(hom_moncat(phi0(k), M)) for k in range(4)]
    assert tuple(counts) == PSI_LEVELS[name]


def test_hom_counts_pinned():
    assert len(hom_moncat(phi0(0), boolean_poset_moncat())) == 1
    assert len(hom_moncat(phi0(1), cyclic_moncat(2))) == 2
    assert len(hom_moncat(phi0(3), cyclic_moncat(2))) == 8


@pytest.mark.parametrize("name", sorted(MONCATS))
def test_enumerate_ssetmaps_agrees_with_nerve_levels(name):
    Y = _psi(name)
    for k in range(4):
        maps = enumerate_ssetmaps(standard_simplex(k), Y)
        assert len(maps) == PSI_LEVELS[name][k]
        assert all(validate_ssetmap(m).ok for m in maps)


def test_enumerate_ssetmaps_self_maps():
    Y = _psi("z2")
    maps = enumerate_ssetmaps(Y, Y)
    assert len(maps) == 2
    assert any(m.levels == identity_map(Y).levels for m in maps)


def test_enumerate_ssetmaps_rejects_mixed_truncation():
    with pytest.raises(StructureError, match="truncation"):
        enumerate_ssetmaps(standard_simplex(1),
                           truncate(standard_simplex(1), 2))


@pytest.mark.parametrize("xname", sorted(SHAPES))
@pytest.mark.parametrize("mname", sorted(MONCATS))
def test_adjunction_certified(xname, mname):
    cert = adjunction_check(SHAPES[xname](), MONCATS[mname]())
    assert cert.ok, cert.summary()
    assert cert.left == cert.right == ADJUNCTION_COUNTS[xname][mname]


def test_induced_maps_are_mutually_inverse():
    X, M = SHAPES["bouquet2"](), cyclic_moncat(3)
    maps = enumerate_ssetmaps(X, psi(M))
    homs = hom_moncat(phi_tr3(X), M)
    assert {induced_assignment(X, M, F) for F in maps} == set(homs)
    assert len(maps) == len(homs)
    for F in maps:
        G = induced_map(X, M, induced_assignment(X, M, F))
        assert G.levels == F.levels


def test_induced_assignment_rejects_foreign_map():
    X = standard_simplex(1)
    with pytest.raises(StructureError, match="X -> psi"):
        induced_assignment(X, cyclic_moncat(2), identity_map(X))


def _simplex_vertex_map(src_k, tgt_k, vmap):
    levels = []
    for n in range(4):
        tgt_idx = {t: i for i, t in enumerate(
            combinations_with_replacement(range(tgt_k + 1), n + 1))}
        levels.append(tuple(
            tgt_idx[tuple(sorted(vmap[v] for v in t))]
            for t in combinations_with_replacement(range(src_k + 1), n + 1)))
    return sset_map(standard_simplex(src_k), standard_simplex(tgt_k), levels)


def _restrict_assignment(u, M, H):
    """Pull an assignment on phi_tr3(u.target) back along ``u``."""
    P, Pp = phi_tr3(u.target), phi_tr3(u.source)
    pc, pcp = presentation_cells(P), presentation_cells(Pp)

    def tens(objs):
        o = M.unit_obj
        for x in objs:
            o = M.tensor_obj[o][x]
        return o

    objects = tuple(
        H.objects[pc.letter_of[u(1, e)]] if pc.letter_of[u(1, e)] >= 0
        else M.unit_obj
        for e in pcp.letter_cell)
    generators = []
    for g, t in enumerate(pcp.two_cell):
        img = pc.gen2_of[u(2, t)]
        if img >= 0:
            generators.append(H.generators[img])
        else:
            generators.append(M.cat.identity[
                tens(objects[l] for l in Pp.gens[g].inputs)])
    for i in range(len(pcp.three_cell)):
        generators.append(evaluate_term(
            Pp, M, objects, generators, Pp.relations[i][1]))
    return MonFunctorAssignment(objects, tuple(generators))


@pytest.mark.parametrize("mname", ["z2", "boolean_poset"])
def test_adjunction_naturality_in_the_shape(mname):
    M = MONCATS[mname]()
    cofaces = [_simplex_vertex_map(2, 3, [v for v in range(4) if v != i])
               for i in range(4)]
    degeneracy = _simplex_vertex_map(3, 2, [0, 1, 2, 2])
    for u in cofaces + [degeneracy]:
        assert validate_ssetmap(u).ok
        X = u.target
        for F in enumerate_ssetmaps(X, psi(M)):
            restricted = _restrict_assignment(u, M, induced_assignment(
                X, M, F))
            direct = induced_assignment(u.source, M, compose_maps(F, u))
            assert restricted == direct


def test_adjunction_naturality_in_the_target():
    # collapse z2 onto the trivial monoidal category on both sides
    M, T = cyclic_moncat(2), trivial_moncat()
    X = standard_simplex(3)
    collapse = sset_map(psi(M), psi(T),
                        tuple((0,) * c for c in psi(M).cells))
    assert validate_ssetmap(collapse).ok
    for F in enumerate_ssetmaps(X, psi(M)):
        H = induced_assignment(X, M, F)
        pushed = MonFunctorAssignment((0,) * len(H.objects),
                                      (0,) * len(H.generators))
        assert pushed == induced_assignment(X, T, compose_maps(collapse, F))


# ---------------------------------------------------------------------------
# the word problem


def _letters(P):
    return {n: i for i, n in enumerate(P.letters)}


def test_relation_sides_all_equal():
    P = phi0(3)
    l = _letters(P)
    sigma = (node(4, leaf(l["f23"]), leaf(l["f12"]), leaf(l["f01"])),)
    left = (node(3, node(1, leaf(l["f23"]), leaf(l["f12"])),
                 leaf(l["f01"])),)
    right = (node(2, leaf(l["f23"]),
                  node(0, leaf(l["f12"]), leaf(l["f01"]))),)
    for a in (sigma, left, right):
        for b in (sigma, left, right):
            assert presentation_equal(P, a, b)


def test_identity_terms_equal_themselves_only_trivially():
    P = phi0(2)
    l = _letters(P)
    wires = (leaf(l["f01"]), leaf(l["f12"]))
    assert presentation_equal(P, wires, wires)
    assert presentation_equal(P, (), ())


def test_undecided_at_small_bound():
    P = phi0(3)
    l = _letters(P)
    sigma = (node(4, leaf(l["f23"]), leaf(l["f12"]), leaf(l["f01"])),)
    left = (node(3, node(1, leaf(l["f23"]), leaf(l["f12"])),
                 leaf(l["f01"])),)
    with pytest.raises(UndecidedAtBound) as exc:
        presentation_equal(P, sigma, left, bound=4)
    assert exc.value.bound == 4
    assert presentation_equal(P, sigma, left, bound=5)


def test_composition_figure():
    """A two-stage composite against its one-step normal form.

    Source word (f23 f12 f01 f02 f23 f02 f23 f12 f01), target word
    (f03 f02 f03 f03): composing the two stages slot by slot must agree
    with the direct tuple whose first slot is the arity-3 generator.
    """
    P = phi0(3)
    l = _letters(P)
    l5, l3, l0 = leaf(l["f23"]), leaf(l["f12"]), leaf(l["f01"])
    l1, l2 = leaf(l["f02"]), leaf(l["f03"])
    stage1 = (node(1, l5, l3), l0, l1, l5, l1, node(4, l5, l3, l0))
    stage2 = (node(3, leaf(l["f13"]), l0), l1, node(2, l5, l1), l2)
    lhs = compose_terms(P, stage2, stage1)
    assert lhs == (node(3, node(1, l5, l3), l0), l1, node(2, l5, l1),
                   node(4, l5, l3, l0))
    rhs = (node(4, l5, l3, l0), l1, node(2, l5, l1), node(4, l5, l3, l0))
    assert presentation_equal(P, lhs, rhs)
    assert presentation_equal(P, rhs, lhs)


def test_compose_terms_errors():
    P = phi0(3)
    l = _letters(P)
    with pytest.raises(StructureError, match="not composable"):
        compose_terms(P, (leaf(l["f01"]),), (leaf(l["f02"]),))


def test_unsupported_presentation():
    P = phi_tr3(SHAPES["bouquet2"]())
    with pytest.raises(UnsupportedPresentation, match="exactly one"):
        presentation_equal(P, (leaf(0),), (leaf(0),))


def test_not_parallel_raises():
    P = phi0(3)
    l = _letters(P)
    sigma = (node(4, leaf(l["f23"]), leaf(l["f12"]), leaf(l["f01"])),)
    with pytest.raises(StructureError, match="not parallel"):
        presentation_equal(P, sigma, (leaf(l["f03"]),))
    with pytest.raises(StructureError, match="exactly one letter"):
        presentation_equal(P, (juxtapose(leaf(0), leaf(1)),),
                           (juxtapose(leaf(0), leaf(1)),))


def test_different_partitions_are_decidedly_unequal():
    # letters a, b, c with p: (a,a) -> b, q: (a) -> c, r: (a) -> b,
    # s: (a,a) -> c; parallel tuples with different slot boundaries
    P = MonPresentation(
        ("a", "b", "c"),
        (MonGenerator("p", (0, 0), (1,)), MonGenerator("q", (0,), (2,)),
         MonGenerator("r", (0,), (1,)), MonGenerator("s", (0, 0), (2,))),
        ())
    m1 = (node(0, leaf(0), leaf(0)), node(1, leaf(0)))
    m2 = (node(2, leaf(0)), node(3, leaf(0), leaf(0)))
    assert presentation_equal(P, m1, m2) is False
    # same partition, different generators, no relations: also unequal
    P2 = MonPresentation(
        ("a", "b"),
        (MonGenerator("g", (0,), (1,)), MonGenerator("h", (0,), (1,))),
        ())
    assert presentation_equal(
        P2, (node(0, leaf(0)),), (node(1, leaf(0)),)) is False


def _random_tree(P, rng, letter, depth):
    opts = [None]
    if depth > 0:
        opts += [g for g, gen in enumerate(P.gens)
                 if gen.output == (letter,)]
    pick = rng.choice(opts)
    if pick is None:
        return leaf(letter)
    return node(pick, *[_random_tree(P, rng, l, depth - 1)
                        for l in P.gens[pick].inputs])


def _twist(P, rng, t):
    """Random equal variant, rewriting arity-3 generator sites directly."""
    if t.letter is not None:
        return t
    kids = tuple(_twist(P, rng, c) for c in t.children)
    t = Term(t.gen, None, kids)
    if t.gen == 4:
        a, b, c = t.children
        forms = [t, node(3, node(1, a, b), c), node(2, a, node(0, b, c))]
        return rng.choice(forms)
    if t.gen == 3 and t.children[0].gen == 1:
        a, b = t.children[0].children
        return rng.choice([t, node(4, a, b, t.children[1])])
    if t.gen == 2 and t.children[1].gen == 0:
        b, c = t.children[1].children
        return rng.choice([t, node(4, t.children[0], b, c)])
    return t


def test_randomized_pairs_and_congruence():
    P = phi0(3)
    producible = [i for i in range(len(P.letters))
                  if any(g.output == (i,) for g in P.gens)]
    rng = random.Random(20260815)
    decided = 0
    for _ in range(50):
        letters = [rng.choice(producible)
                   for _ in range(rng.randint(1, 3))]
        m = tuple(_random_tree(P, rng, l, 2) for l in letters)
        v = tuple(_twist(P, rng, t) for t in m)
        # reflexivity, the twisted variant, and symmetry
        assert presentation_equal(P, m, m)
        assert presentation_equal(P, m, v)
        assert presentation_equal(P, v, m)
        decided += 1
        # transitivity through a second twist
        w = tuple(_twist(P, rng, t) for t in v)
        assert presentation_equal(P, m, w)
        # congruence under composition and tensor
        feed = tuple(_random_tree(P, rng, l, 1)
                     for l in sum((term_inputs(P, t) for t in m), ()))
        feed_v = tuple(_twist(P, rng, t) for t in feed)
        assert presentation_equal(P, compose_terms(P, m, feed),
                                  compose_terms(P, v, feed_v))
        assert presentation_equal(P, m + feed, v + feed_v)
    assert decided == 50
