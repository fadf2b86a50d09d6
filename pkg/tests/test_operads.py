"""Categorical operads: validation and the standard constructions."""
from dataclasses import replace

import pytest

from opcat.errors import StructureError
from opcat.fixtures import (as_2category, boolean_poset_moncat, chain_category,
                            cyclic_moncat, k2cat, monoid_catalog,
                            random_discrete_operad, trivial_moncat,
                            two_object_monoid_category, walking_arrow_2cat)
from opcat.operadic import (para, terminal_functor, terminal_odot,
                            validate_operadic, validate_operadic_functor)
from opcat.operads import (CategoricalOperad, is_one_connected,
                           moncat_from_operad, operad_from_2cat,
                           operad_from_moncat, restrict_operad,
                           validate_operad)
from opcat.twocat import validate_category, validate_moncat

MONCATS = {
    "trivial": trivial_moncat,
    "z2": lambda: cyclic_moncat(2),
    "z3": lambda: cyclic_moncat(3),
    "boolean_poset": boolean_poset_moncat,
}

TWOCATS = {
    "walking_arrow": walking_arrow_2cat,
    "k2": k2cat,
    "chain3": lambda: as_2category(chain_category(3)),
}


@pytest.mark.parametrize("name", sorted(MONCATS))
def test_operad_from_moncat_validates(name):
    P = operad_from_moncat(MONCATS[name]())
    assert validate_operadic(P.base).ok
    assert validate_operad(P).ok


@pytest.mark.parametrize("name", sorted(MONCATS))
def test_moncat_roundtrip(name):
    V = MONCATS[name]()
    assert moncat_from_operad(operad_from_moncat(V)) == V


def test_moncat_from_operad_needs_point_base():
    P = operad_from_2cat(k2cat())
    with pytest.raises(StructureError, match="one-point"):
        moncat_from_operad(P)


@pytest.mark.parametrize("name", sorted(TWOCATS))
def test_operad_from_2cat_validates(name):
    P = operad_from_2cat(TWOCATS[name]())
    assert validate_operadic(P.base).ok
    assert validate_operad(P).ok


def test_one_connectedness():
    assert is_one_connected(operad_from_moncat(trivial_moncat()))
    assert not is_one_connected(operad_from_moncat(cyclic_moncat(2)))
    # hom-category fibers over (c, c) contain only the identity for these
    assert is_one_connected(operad_from_2cat(k2cat()))
    assert is_one_connected(operad_from_2cat(walking_arrow_2cat()))


def test_restrict_along_terminal_functor():
    Q = operad_from_moncat(cyclic_moncat(2))
    F = terminal_functor(para(cyclic_moncat(2)))
    assert validate_operadic_functor(F).ok
    P = restrict_operad(F, Q)
    assert P.base == F.source
    assert validate_operad(P).ok
    assert all(fib == Q.fibers[0] for fib in P.fibers)


def test_restrict_requires_matching_base():
    Q = operad_from_2cat(k2cat())  # base has two colours
    F = terminal_functor(para(cyclic_moncat(2)))  # target is the point
    with pytest.raises(StructureError, match="base"):
        restrict_operad(F, Q)


def _mutate_table(P, field, f, i, j, val):
    tabs = [
        [list(r) for r in tab] for tab in getattr(P, field)]
    assert tabs[f][i][j] != val
    tabs[f][i][j] = val
    frozen = tuple(tuple(tuple(r) for r in tab) for tab in tabs)
    return replace(P, **{field: frozen})


def test_broken_associativity_caught():
    P = operad_from_moncat(cyclic_moncat(3))
    bad = _mutate_table(P, "mult_obj", 0, 1, 1, 0)  # 1 + 1 "=" 0
    rep = validate_operad(bad)
    assert not rep.ok
    assert ("multiplication associativity (objects)" in rep.rules()
            or "right unit law" in rep.rules())


def test_broken_unit_caught():
    P = operad_from_moncat(cyclic_moncat(3))
    bad = _mutate_table(P, "mult_obj", 0, 1, 0, 2)  # 1 + 0 "=" 2
    rep = validate_operad(bad)
    assert "right unit law" in rep.rules() or "left unit law" in rep.rules()


def test_broken_bifunctor_caught():
    V = boolean_poset_moncat()
    P = operad_from_moncat(V)
    bad = _mutate_table(P, "mult_mor", 0, 2, 2, 1)  # u (x) u "=" id_x
    rep = validate_operad(bad)
    assert not rep.ok


def test_broken_fiber_caught():
    P = operad_from_moncat(cyclic_moncat(2))
    fib = P.fibers[0]
    bad_fib = replace(fib, identity=(1, 0))
    rep = validate_operad(replace(P, fibers=(bad_fib,)))
    assert not rep.ok
    assert "identity typing" in rep.rules()


def test_shape_errors():
    P = operad_from_moncat(cyclic_moncat(2))
    with pytest.raises(StructureError, match="fiber"):
        replace(P, fibers=())
    with pytest.raises(StructureError, match="unit"):
        replace(P, units=(5,))


def test_two_object_monoid_category_valid():
    for name, unit, table in monoid_catalog():
        for k in (1, 2):
            C = two_object_monoid_category(unit, table, k)
            assert validate_category(C).ok
            assert len(C.hom(1, 0)) == 0
            assert len(C.hom(0, 1)) == k * len(table)


@pytest.mark.parametrize("seed", range(12))
def test_random_discrete_operads_validate(seed):
    P = random_discrete_operad(seed)
    assert validate_operad(P).ok
    # discrete fibers: every fiber morphism is an identity
    for fib in P.fibers:
        assert fib.n_mor == fib.n_objects


def test_operads_from_moncats_are_monoidal():
    # the operad laws over the point specialize to the monoidal laws
    for name, make in MONCATS.items():
        V = make()
        assert validate_moncat(V).ok
        P = operad_from_moncat(V)
        assert validate_operad(P).ok
