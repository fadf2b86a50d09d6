"""Built-in example structures used by tests and the CLI."""
from __future__ import annotations

from itertools import combinations_with_replacement

from .simplicial import TruncatedSimplicialSet


def standard_simplex(k: int, max_level: int = 3) -> TruncatedSimplicialSet:
    """The standard k-simplex truncated at ``max_level``.

    n-cells are nondecreasing (n+1)-tuples over ``{0..k}`` in lexicographic
    order; faces delete a position, degeneracies repeat one.
    """
    levels = [list(combinations_with_replacement(range(k + 1), n + 1))
              for n in range(max_level + 1)]
    index = [{t: i for i, t in enumerate(lvl)} for lvl in levels]
    face = [()]
    for n in range(1, max_level + 1):
        face.append(tuple(
            tuple(index[n - 1][t[:i] + t[i + 1:]] for t in levels[n])
            for i in range(n + 1)))
    degen = []
    for n in range(max_level):
        degen.append(tuple(
            tuple(index[n + 1][t[:j + 1] + t[j:]] for t in levels[n])
            for j in range(n + 1)))
    degen.append(())
    return TruncatedSimplicialSet(
        max_level, tuple(len(l) for l in levels), tuple(face), tuple(degen))


# ---------------------------------------------------------------------------
# categories and 2-categories

def chain_category(n_objects: int) -> "FiniteCategory":
    """The poset category 0 -> 1 -> ... -> n-1 (one arrow per pair i <= j)."""
    from .twocat import FiniteCategory
    mors = [(i, j) for i in range(n_objects) for j in range(n_objects) if i <= j]
    idx = {m: k for k, m in enumerate(mors)}
    comp = [[-1] * len(mors) for _ in mors]
    for g, (b, c) in enumerate(mors):
        for f, (a, bb) in enumerate(mors):
            if bb == b:
                comp[g][f] = idx[(a, c)]
    return FiniteCategory(
        n_objects,
        tuple(m[0] for m in mors), tuple(m[1] for m in mors),
        tuple(idx[(a, a)] for a in range(n_objects)),
        tuple(tuple(r) for r in comp))


def walking_arrow_category() -> "FiniteCategory":
    """Two objects and a single non-identity arrow 0 -> 1."""
    return chain_category(2)


def as_2category(C: "FiniteCategory") -> "Finite2Category":
    """Locally discrete 2-category: one identity 2-cell per morphism."""
    from .twocat import as_2category as _as_2category
    return _as_2category(C)


def terminal_2cat() -> "Finite2Category":
    """One object, one 1-cell, one 2-cell."""
    return as_2category(chain_category(1))


def walking_arrow_2cat() -> "Finite2Category":
    return as_2category(walking_arrow_category())


def k2cat() -> "Finite2Category":
    """Two objects, parallel 1-cells f, g : 0 -> 1, one 2-cell f => g.

    One-cells: 0 = id_0, 1 = id_1, 2 = f, 3 = g.
    Two-cells: 0..3 = identities of the 1-cells, 4 = theta : f => g.
    """
    from .twocat import Finite2Category
    one_src = (0, 1, 0, 0)
    one_tgt = (0, 1, 1, 1)
    comp1 = [[-1] * 4 for _ in range(4)]
    comp1[0][0] = 0
    comp1[1][1] = 1
    comp1[2][0] = 2
    comp1[3][0] = 3
    comp1[1][2] = 2
    comp1[1][3] = 3
    two_src = (0, 1, 2, 3, 2)
    two_tgt = (0, 1, 2, 3, 3)
    id2 = (0, 1, 2, 3)
    vcomp = [[-1] * 5 for _ in range(5)]
    for t in range(5):
        vcomp[t][id2[two_src[t]]] = t
        vcomp[id2[two_tgt[t]]][t] = t
    hcomp2 = [[-1] * 5 for _ in range(5)]
    for b in range(5):
        for a in range(5):
            fa, fb = two_src[a], two_src[b]
            if one_tgt[fa] != one_src[fb]:
                continue
            src = comp1[fb][fa]
            tgt = comp1[two_tgt[b]][two_tgt[a]]
            if src == tgt:
                hcomp2[b][a] = id2[src]
            else:
                hcomp2[b][a] = 4
    return Finite2Category(2, one_src, one_tgt, two_src, two_tgt,
                           (0, 1), id2,
                           tuple(tuple(r) for r in comp1),
                           tuple(tuple(r) for r in vcomp),
                           tuple(tuple(r) for r in hcomp2))


# ---------------------------------------------------------------------------
# strict monoidal categories

def trivial_moncat() -> "StrictMonCat":
    """One object, one morphism."""
    from .twocat import moncat
    return moncat(chain_category(1), 0, ((0,),), ((0,),))


def cyclic_moncat(n: int) -> "StrictMonCat":
    """The cyclic group Z/n as a discrete strict monoidal category."""
    from .twocat import FiniteCategory, moncat
    ident = tuple(range(n))
    comp = tuple(tuple(b if a == b else -1 for a in range(n)) for b in range(n))
    cat = FiniteCategory(n, ident, ident, ident, comp)
    add = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    return moncat(cat, 0, add, add)


def boolean_poset_moncat() -> "StrictMonCat":
    """The poset {I <= x} with tensor = join; three morphisms in total."""
    from .twocat import FiniteCategory, moncat
    # morphisms: 0 = id_I, 1 = id_x, 2 = u : I -> x
    cat = FiniteCategory(
        2, (0, 1, 0), (0, 1, 1), (0, 1),
        ((0, -1, -1), (-1, 1, 2), (2, -1, -1)))
    tensor_obj = ((0, 1), (1, 1))
    arrow = {(0, 0): 0, (1, 1): 1, (0, 1): 2}
    src, tgt = cat.mor_src, cat.mor_tgt
    tensor_mor = tuple(
        tuple(arrow[(tensor_obj[src[m]][src[n]], tensor_obj[tgt[m]][tgt[n]])]
              for n in range(3))
        for m in range(3))
    return moncat(cat, 0, tensor_obj, tensor_mor)


# ---------------------------------------------------------------------------
# randomized fixtures

def monoid_catalog():
    """Small monoids as (name, unit, multiplication table)."""
    return (
        ("trivial", 0, ((0,),)),
        ("z2", 0, ((0, 1), (1, 0))),
        ("z3", 0, ((0, 1, 2), (1, 2, 0), (2, 0, 1))),
        ("z4", 0, ((0, 1, 2, 3), (1, 2, 3, 0), (2, 3, 0, 1), (3, 0, 1, 2))),
        ("band", 1, ((0, 0), (0, 1))),
        ("klein", 0, ((0, 1, 2, 3), (1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0))),
    )


def two_object_monoid_category(unit: int, table, k: int) -> "FiniteCategory":
    """Two objects; both endomorphism monoids are ``table``; k parallel
    copies of the monoid from 0 to 1; nothing from 1 to 0."""
    from .twocat import FiniteCategory
    m = len(table)
    # morphisms: loops at 0, loops at 1, then (x, j) : 0 -> 1
    loops0 = list(range(m))
    loops1 = list(range(m, 2 * m))
    cross = {(x, j): 2 * m + j * m + x for j in range(k) for x in range(m)}
    n_mor = 2 * m + k * m
    src = [0] * m + [1] * m + [0] * (k * m)
    tgt = [0] * m + [1] * m + [1] * (k * m)
    comp = [[-1] * n_mor for _ in range(n_mor)]
    for x in range(m):
        for y in range(m):
            comp[loops0[x]][loops0[y]] = loops0[table[x][y]]
            comp[loops1[x]][loops1[y]] = loops1[table[x][y]]
            for j in range(k):
                comp[cross[(x, j)]][loops0[y]] = cross[(table[x][y], j)]
                comp[loops1[x]][cross[(y, j)]] = cross[(table[x][y], j)]
    return FiniteCategory(2, tuple(src), tuple(tgt),
                          (loops0[unit], loops1[unit]),
                          tuple(tuple(r) for r in comp))


def permute_category(C: "FiniteCategory", perm) -> "FiniteCategory":
    """Relabel morphisms: old index m becomes perm[m]."""
    from .twocat import FiniteCategory
    n = C.n_mor
    src, tgt = [0] * n, [0] * n
    comp = [[-1] * n for _ in range(n)]
    for m in range(n):
        src[perm[m]] = C.mor_src[m]
        tgt[perm[m]] = C.mor_tgt[m]
    for g in range(n):
        for f in range(n):
            if C.comp[g][f] != -1:
                comp[perm[g]][perm[f]] = perm[C.comp[g][f]]
    return FiniteCategory(C.n_objects, tuple(src), tuple(tgt),
                          tuple(perm[i] for i in C.identity),
                          tuple(tuple(r) for r in comp))


def random_discrete_operad(seed: int) -> "CategoricalOperad":
    """A randomized operad with discrete fibers over the two-colour base."""
    import random

    from .operads import operad_from_2cat
    from .twocat import as_2category

    rng = random.Random(seed)
    name, unit, table = rng.choice(monoid_catalog())
    k = rng.randint(1, 3)
    C = two_object_monoid_category(unit, table, k)
    perm = list(range(C.n_mor))
    rng.shuffle(perm)
    return operad_from_2cat(as_2category(permute_category(C, perm)))
