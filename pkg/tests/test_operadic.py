"""Operadic structures: assembly, numbered-law validation, constructions."""
from dataclasses import replace
from itertools import product

import pytest

from opcat.errors import StructureError
from opcat.fixtures import (boolean_poset_moncat, cyclic_moncat, k2cat,
                            trivial_moncat, walking_arrow_2cat)
from opcat.operadic import (OperadicFunctor, UnaryOperadic2Cat, bouquets,
                            component_map, from_2category, is_quasibijection,
                            para, quasibijections, terminal_odot,
                            check_unit_terminality, to_simplicial,
                            validate_operadic, validate_operadic_functor)
from opcat.simplicial import (SSetMap, TruncatedSimplicialSet,
                              certify_levelwise_iso, validate_simplicial)
from opcat.twocat import deloop, lax_slice_sum


def all_fixtures():
    return {
        "odot": terminal_odot(),
        "bq2": bouquets(2),
        "bq3": bouquets(3),
        "para_z2": para(cyclic_moncat(2)),
        "para_z3": para(cyclic_moncat(3)),
        "para_bool": para(boolean_poset_moncat()),
        "from_arrow": from_2category(walking_arrow_2cat()),
        "from_k2": from_2category(k2cat()),
    }


FIXTURES = all_fixtures()


def test_component_map():
    n, labels = component_map(5, [(0, 3), (4, 1)])
    assert n == 3
    assert labels == (0, 1, 2, 0, 1)


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_fixtures_validate(name):
    assert validate_operadic(FIXTURES[name]).ok


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_assembly_is_simplicial(name):
    assert validate_simplicial(to_simplicial(FIXTURES[name])).ok


def test_frozen_cell_counts():
    assert to_simplicial(FIXTURES["odot"]).cells == (1, 1, 1, 1, 1)
    assert to_simplicial(FIXTURES["bq2"]).cells == (2, 4, 8, 16, 32)
    assert to_simplicial(FIXTURES["bq3"]).cells == (3, 9, 27, 81, 243)
    assert to_simplicial(FIXTURES["para_z2"]).cells == (1, 2, 4, 8, 16)
    assert to_simplicial(FIXTURES["para_z3"]).cells == (1, 3, 9, 27, 81)
    assert to_simplicial(FIXTURES["from_arrow"]).cells == (2, 3, 4, 5, 6)


def test_odot_is_para_of_trivial():
    assert terminal_odot() == para(trivial_moncat())


def _tuple_sset(n: int) -> TruncatedSimplicialSet:
    """All (k+1)-tuples over n symbols; faces delete, degeneracies repeat."""
    levels = [list(product(range(n), repeat=k + 1)) for k in range(5)]
    index = [{c: i for i, c in enumerate(lv)} for lv in levels]
    face = [()]
    for k in range(1, 5):
        face.append(tuple(
            tuple(index[k - 1][c[:i] + c[i + 1:]] for c in levels[k])
            for i in range(k + 1)))
    degen = []
    for k in range(4):
        degen.append(tuple(
            tuple(index[k + 1][c[:j + 1] + c[j:]] for c in levels[k])
            for j in range(k + 1)))
    degen.append(())
    return TruncatedSimplicialSet(4, tuple(len(lv) for lv in levels),
                                  tuple(face), tuple(degen))


def _bq_decoder(n: int, O: UnaryOperadic2Cat):
    """Decode the cells of bouquets(n) to colour tuples, per level."""
    rng = range(n)
    objs = [(a, b) for a in rng for b in rng]
    ones = [(a1, a2, b) for a1 in rng for a2 in rng for b in rng]
    N = O.nerve

    def tri_tuple(t):
        f01, f12, _ = N.triangles[t]
        a0, a1, b = ones[f01]
        return (a0, a1, ones[f12][1], b)

    lvl0 = [(c,) for c in rng]
    lvl1 = objs
    lvl2 = ones
    lvl3 = [tri_tuple(t) for t in range(len(N.triangles))]
    lvl4 = [tri_tuple(q[3])[:3] + tri_tuple(q[0])[2:]
            for q in N.tetra]
    return [lvl0, lvl1, lvl2, lvl3, lvl4]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_bouquets_assembly_is_full_tuple_set(n):
    # independent model: level k = (k+1)-tuples of colours, faces delete a
    # coordinate, degeneracies repeat one
    O = bouquets(n)
    X = to_simplicial(O)
    T = _tuple_sset(n)
    decode = _bq_decoder(n, O)
    tidx = [
        {c: i for i, c in enumerate(product(range(n), repeat=k + 1))}
        for k in range(5)]
    levels = tuple(tuple(tidx[k][c] for c in decode[k]) for k in range(5))
    assert certify_levelwise_iso(SSetMap(X, T, levels)).ok


def test_bouquets_needs_a_colour():
    with pytest.raises(StructureError, match="colour"):
        bouquets(0)


def test_structure_map_shape_checked():
    O = bouquets(2)
    with pytest.raises(StructureError, match="length"):
        replace(O, phi0=O.phi0 + (0,))
    bad = (len(O.nerve.triangles),) + O.u1[1:]
    with pytest.raises(StructureError, match="range"):
        replace(O, u1=bad)


# ---------------------------------------------------------------------------
# quasibijections


def test_bq_quasibijections_are_loops():
    for n in (2, 3):
        O = bouquets(n)
        rng = range(n)
        ones = [(a1, a2, b) for a1 in rng for a2 in rng for b in rng]
        expect = tuple(i for i, (a1, a2, b) in enumerate(ones) if a1 == a2)
        assert quasibijections(O) == expect


@pytest.mark.parametrize("n", [2, 3])
def test_para_group_quasibijections(n):
    M = cyclic_moncat(n)
    O = para(M)
    SD = lax_slice_sum(deloop(M))
    qb = quasibijections(O)
    expect = tuple(i for i, (h, g, f, a) in enumerate(SD.one_cells)
                   if h == g and f == M.unit_obj)
    assert qb == expect
    assert len(qb) == n


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_identity_cells_are_quasibijections(name):
    O = FIXTURES[name]
    for x in range(O.C.n_objects):
        assert is_quasibijection(O, O.C.id1[x])


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_quasibijections_closed_under_composition(name):
    O = FIXTURES[name]
    qb = set(quasibijections(O))
    for g in qb:
        for h in qb:
            c = O.C.comp1[h][g]
            if c != -1:
                assert c in qb


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_unit_terminality(name):
    assert check_unit_terminality(FIXTURES[name]).ok


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_identity_one_cells_project_to_units(name):
    O = FIXTURES[name]
    units = set(O.u_neg1)
    for x in range(O.C.n_objects):
        assert O.phi1[O.C.id1[x]] in units


# ---------------------------------------------------------------------------
# targeted mutants: every numbered law can fire and is cited


def _bq_cells(n=2):
    """Index helpers for the bouquets(n) fixture."""
    O = bouquets(n)
    rng = range(n)
    oidx = {o: i for i, o in enumerate([(a, b) for a in rng for b in rng])}
    eidx = {e: i for i, e in enumerate(
        [(a1, a2, b) for a1 in rng for a2 in rng for b in rng])}
    N = O.nerve

    def tri(x, y, z, w):
        return N.tri_index[(eidx[(x, y, w)], eidx[(y, z, w)], eidx[(x, z, w)])]

    def tet(x, y, z, w, v):
        return N.tet_index[(tri(y, z, w, v), tri(x, z, w, v),
                            tri(x, y, w, v), tri(x, y, z, v))]

    return O, oidx, eidx, tri, tet


def mutate(O, field, idx, val):
    tab = list(getattr(O, field))
    assert tab[idx] != val
    tab[idx] = val
    return replace(O, **{field: tuple(tab)})


def targeted_mutants():
    """One single-entry mutant per numbered law, with the law it must cite."""
    O, oidx, eidx, tri, tet = _bq_cells(2)
    deg1 = O.nerve.tss.degen[1]
    deg2 = O.nerve.tss.degen[2]
    return [
        ("(3)", mutate(O, "phi2", tri(1, 0, 1, 1), eidx[(1, 1, 1)])),
        ("(4)", mutate(O, "phi3", tet(0, 1, 0, 1, 0), tri(0, 1, 0, 0))),
        ("(6)", mutate(O, "u0", oidx[(0, 1)], eidx[(0, 0, 1)])),
        ("(7)", mutate(O, "u1", eidx[(0, 1, 0)], tri(0, 1, 0, 1))),
        ("(8)", mutate(O, "u2", tri(0, 1, 0, 1), tet(0, 1, 0, 0, 1))),
        ("(9)", mutate(O, "phi1", eidx[(0, 1, 0)], oidx[(0, 0)])),
        ("(10)", mutate(O, "u_neg1", 0, oidx[(0, 1)])),
        ("(11)", mutate(O, "phi1", eidx[(1, 1, 0)], oidx[(0, 1)])),
        ("(12)", mutate(O, "phi2", deg1[0][eidx[(0, 1, 0)]], eidx[(0, 1, 1)])),
        ("(13)", mutate(O, "phi3", deg2[0][tri(0, 1, 0, 0)], tri(0, 0, 0, 0))),
        ("(14)", mutate(O, "u0", oidx[(0, 0)], eidx[(0, 1, 0)])),
        ("(15)", mutate(O, "phi2", O.u1[eidx[(0, 1, 0)]], eidx[(0, 0, 0)])),
        ("(16)", mutate(O, "phi2", tri(0, 1, 1, 0), eidx[(0, 0, 0)])),
        ("(17)", mutate(O, "u1", eidx[(0, 0, 1)], tri(0, 1, 1, 1))),
    ]


@pytest.mark.parametrize("item,mutant",
                         targeted_mutants(),
                         ids=[i for i, _ in targeted_mutants()])
def test_targeted_mutant_cites_law(item, mutant):
    rep = validate_operadic(mutant)
    assert not rep.ok
    assert item in rep.rules()


@pytest.mark.parametrize("item,mutant",
                         targeted_mutants(),
                         ids=[i for i, _ in targeted_mutants()])
def test_validator_agrees_with_simplicial_check(item, mutant):
    # the numbered laws are exactly the simplicial identities of the assembly
    assert not validate_simplicial(to_simplicial(mutant)).ok


# ---------------------------------------------------------------------------
# operadic functors


def test_identity_functor_validates():
    O = bouquets(2)
    X = to_simplicial(O)
    F = OperadicFunctor(O, O, tuple(tuple(range(c)) for c in X.cells))
    assert validate_operadic_functor(F).ok


def test_broken_functor_caught():
    O = bouquets(2)
    X = to_simplicial(O)
    levels = [list(range(c)) for c in X.cells]
    levels[1][0], levels[1][1] = 1, 0  # swap two objects, keep the rest
    F = OperadicFunctor(O, O, tuple(tuple(lv) for lv in levels))
    assert not validate_operadic_functor(F).ok


def test_functor_needs_five_levels():
    O = terminal_odot()
    with pytest.raises(StructureError, match="five"):
        OperadicFunctor(O, O, ((0,),))
