"""Unary operadic structure on a finite strict 2-category.

A structure consists of a strict 2-category together with eight structure
maps — four *projection* maps ``phi`` and four *unit* maps ``u`` — that
assemble, with the nerve of the 2-category, into a single 4-truncated
simplicial set:

    level 0   connected components of the 2-category
    level 1   objects
    level 2   1-cells
    level 3   nerve 2-simplices (lax triangles)
    level 4   nerve 3-simplices (pasting tetrahedra)

At each level the *top* face is a phi map and the *top* degeneracy a u
map; every other face and degeneracy comes from the nerve (``pi``, the
component projection, is the *bottom* face at level 1 and is always
derived from the 1-cell graph, never supplied).  The axioms are exactly
the simplicial identities that involve a top map.  They carry fixed
numbers — typing laws (3), (4), (6)-(8) and equational laws (9)-(17) —
and validators cite these numbers (the remaining small numbers label the
data fields themselves and are never cited):

    (3)  d0 . phi2 = phi1 . d0      and  d1 . phi2 = phi1 . d1
    (4)  d_i . phi3 = phi2 . d_i                        (i < 3)
    (6)  d0 . u0 = u_neg1 . pi      and  d1 . u0 = id
    (7)  d_i . u1 = u0 . d_i (i < 2)  and  d2 . u1 = id
    (8)  d_i . u2 = u1 . d_i (i < 3)  and  d3 . u2 = id
    (9)  pi . phi1 = phi0 . d0
    (10) pi . u_neg1 = id
    (11) phi1 . s0 = u_neg1 . phi0
    (12) phi2 . s0 = s0 . phi1      and  phi2 . s1 = u0 . phi1
    (13) phi3 . s_i = s_i . phi2 (i < 2)  and  phi3 . s2 = u1 . phi2
    (14) u0 . u_neg1 = s0 . u_neg1,  u1 . u0 = s1 . u0,  u2 . u1 = s2 . u1
    (15) phi0 . u_neg1 = id,  phi1 . u0 = id,  phi2 . u1 = id,  phi3 . u2 = id
    (16) phi0 . phi1 = phi0 . d1,  phi1 . phi2 = phi1 . d2,  phi2 . phi3 = phi2 . d3
    (17) u1 . s0 = s0 . u0,  u2 . s0 = s0 . u1,  u2 . s1 = s1 . u1

Together with the simplicial identities internal to the nerve this list
is complete: a structure satisfies all numbered laws exactly when
:func:`to_simplicial` produces a valid truncated simplicial set.
"""
from __future__ import annotations

from dataclasses import dataclass, InitVar

from .errors import StructureError
from .report import ValidationReport, merge
from .simplicial import SSetMap, TruncatedSimplicialSet, validate_ssetmap
from .twocat import (Finite2Category, FiniteCategory, NerveData, StrictMonCat,
                     as_2category, dec_comparison, deloop, nerve_data,
                     validate_2category)


def component_map(n: int, edges) -> tuple[int, tuple[int, ...]]:
    """Connected components of a graph on ``0..n-1``.

    Components are numbered by order of their smallest member; returns
    ``(count, labels)``.
    """
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    labels = []
    seen: dict[int, int] = {}
    for x in range(n):
        r = find(x)
        if r not in seen:
            seen[r] = len(seen)
        labels.append(seen[r])
    return len(seen), tuple(labels)


@dataclass(frozen=True)
class UnaryOperadic2Cat:
    """A finite strict 2-category with unary operadic structure maps.

    ``phi2`` and ``u1`` are indexed by the canonical nerve enumeration of
    2-simplices (see :func:`opcat.twocat.nerve_data`), ``phi3`` and ``u2``
    by the enumeration of 3-simplices.  ``pi`` (objects to components) is
    derived, not stored.
    """

    C: Finite2Category
    phi0: tuple[int, ...]    # objects -> components
    phi1: tuple[int, ...]    # 1-cells -> objects
    phi2: tuple[int, ...]    # nerve 2-simplices -> 1-cells
    phi3: tuple[int, ...]    # nerve 3-simplices -> nerve 2-simplices
    u_neg1: tuple[int, ...]  # components -> objects
    u0: tuple[int, ...]      # objects -> 1-cells
    u1: tuple[int, ...]      # 1-cells -> nerve 2-simplices
    u2: tuple[int, ...]      # nerve 2-simplices -> nerve 3-simplices
    nerve_cache: InitVar[NerveData | None] = None

    def __post_init__(self, nerve_cache):
        N = nerve_cache if nerve_cache is not None else nerve_data(self.C)
        object.__setattr__(self, "_nerve", N)
        C = self.C
        n_comp, pi = component_map(
            C.n_objects, zip(C.one_src, C.one_tgt))
        object.__setattr__(self, "pi", pi)
        object.__setattr__(self, "n_components", n_comp)
        n3, n4 = len(N.triangles), len(N.tetra)
        sizes = ((self.phi0, C.n_objects, n_comp),
                 (self.phi1, C.n_one, C.n_objects),
                 (self.phi2, n3, C.n_one),
                 (self.phi3, n4, n3),
                 (self.u_neg1, n_comp, C.n_objects),
                 (self.u0, C.n_objects, C.n_one),
                 (self.u1, C.n_one, n3),
                 (self.u2, n3, n4))
        for tab, length, bound in sizes:
            if len(tab) != length:
                raise StructureError("structure map has wrong length")
            if any(not 0 <= v < bound for v in tab):
                raise StructureError("structure map value out of range")

    @property
    def nerve(self) -> NerveData:
        return self._nerve


def to_simplicial(O: UnaryOperadic2Cat) -> TruncatedSimplicialSet:
    """Assemble the structure into one 4-truncated simplicial set."""
    cached = getattr(O, "_sset", None)
    if cached is not None:
        return cached
    N, C = O.nerve, O.C
    X = TruncatedSimplicialSet(
        4,
        (O.n_components, C.n_objects, C.n_one,
         len(N.triangles), len(N.tetra)),
        ((),
         (O.pi, O.phi0),
         (C.one_tgt, C.one_src, O.phi1),
         N.tss.face[2] + (O.phi2,),
         N.tss.face[3] + (O.phi3,)),
        ((O.u_neg1,),
         (C.id1, O.u0),
         N.tss.degen[1] + (O.u1,),
         N.tss.degen[2] + (O.u2,),
         ()))
    object.__setattr__(O, "_sset", X)
    return X


def validate_operadic(O: UnaryOperadic2Cat) -> ValidationReport:
    """Check the numbered laws (and the underlying 2-category's axioms).

    Violations of the operadic laws cite the law number, e.g. rule
    ``"(15)"``.  The report is empty exactly when
    ``validate_simplicial(to_simplicial(O))`` is empty and the underlying
    2-category is valid.
    """
    rep = merge("operadic structure", validate_2category(O.C))
    C, N = O.C, O.nerve
    tgt, src, id1 = C.one_tgt, C.one_src, C.id1
    trid = N.tss.face[2]
    tetd = N.tss.face[3]
    deg1 = N.tss.degen[1]
    deg2 = N.tss.degen[2]
    n3 = len(N.triangles)

    for t in range(n3):
        if tgt[O.phi2[t]] != O.phi1[trid[0][t]]:
            rep.add("(3)", (("cell", t),), "d0(phi2 t) != phi1(d0 t)")
        if src[O.phi2[t]] != O.phi1[trid[1][t]]:
            rep.add("(3)", (("cell", t),), "d1(phi2 t) != phi1(d1 t)")
    for q in range(len(N.tetra)):
        for i in range(3):
            if trid[i][O.phi3[q]] != O.phi2[tetd[i][q]]:
                rep.add("(4)", (("cell", q), ("i", i)),
                        "d_i(phi3 q) != phi2(d_i q)")
    for x in range(C.n_objects):
        if tgt[O.u0[x]] != O.u_neg1[O.pi[x]]:
            rep.add("(6)", (("cell", x),), "d0(u0 x) != u_neg1(pi x)")
        if src[O.u0[x]] != x:
            rep.add("(6)", (("cell", x),), "d1(u0 x) != x")
    for f in range(C.n_one):
        if trid[0][O.u1[f]] != O.u0[tgt[f]]:
            rep.add("(7)", (("cell", f),), "d0(u1 f) != u0(d0 f)")
        if trid[1][O.u1[f]] != O.u0[src[f]]:
            rep.add("(7)", (("cell", f),), "d1(u1 f) != u0(d1 f)")
        if trid[2][O.u1[f]] != f:
            rep.add("(7)", (("cell", f),), "d2(u1 f) != f")
    for t in range(n3):
        for i in range(3):
            if tetd[i][O.u2[t]] != O.u1[trid[i][t]]:
                rep.add("(8)", (("cell", t), ("i", i)),
                        "d_i(u2 t) != u1(d_i t)")
        if tetd[3][O.u2[t]] != t:
            rep.add("(8)", (("cell", t),), "d3(u2 t) != t")
    for f in range(C.n_one):
        if O.pi[O.phi1[f]] != O.phi0[tgt[f]]:
            rep.add("(9)", (("cell", f),), "pi(phi1 f) != phi0(d0 f)")
    for c in range(O.n_components):
        if O.pi[O.u_neg1[c]] != c:
            rep.add("(10)", (("cell", c),), "pi(u_neg1 c) != c")
    for x in range(C.n_objects):
        if O.phi1[id1[x]] != O.u_neg1[O.phi0[x]]:
            rep.add("(11)", (("cell", x),), "phi1(s0 x) != u_neg1(phi0 x)")
    for f in range(C.n_one):
        if O.phi2[deg1[0][f]] != id1[O.phi1[f]]:
            rep.add("(12)", (("cell", f),), "phi2(s0 f) != s0(phi1 f)")
        if O.phi2[deg1[1][f]] != O.u0[O.phi1[f]]:
            rep.add("(12)", (("cell", f),), "phi2(s1 f) != u0(phi1 f)")
    for t in range(n3):
        if O.phi3[deg2[0][t]] != deg1[0][O.phi2[t]]:
            rep.add("(13)", (("cell", t),), "phi3(s0 t) != s0(phi2 t)")
        if O.phi3[deg2[1][t]] != deg1[1][O.phi2[t]]:
            rep.add("(13)", (("cell", t),), "phi3(s1 t) != s1(phi2 t)")
        if O.phi3[deg2[2][t]] != O.u1[O.phi2[t]]:
            rep.add("(13)", (("cell", t),), "phi3(s2 t) != u1(phi2 t)")
    for c in range(O.n_components):
        if O.u0[O.u_neg1[c]] != id1[O.u_neg1[c]]:
            rep.add("(14)", (("cell", c),), "u0(u_neg1 c) != s0(u_neg1 c)")
    for x in range(C.n_objects):
        if O.u1[O.u0[x]] != deg1[1][O.u0[x]]:
            rep.add("(14)", (("cell", x),), "u1(u0 x) != s1(u0 x)")
    for f in range(C.n_one):
        if O.u2[O.u1[f]] != deg2[2][O.u1[f]]:
            rep.add("(14)", (("cell", f),), "u2(u1 f) != s2(u1 f)")
    for c in range(O.n_components):
        if O.phi0[O.u_neg1[c]] != c:
            rep.add("(15)", (("cell", c),), "phi0(u_neg1 c) != c")
    for x in range(C.n_objects):
        if O.phi1[O.u0[x]] != x:
            rep.add("(15)", (("cell", x),), "phi1(u0 x) != x")
    for f in range(C.n_one):
        if O.phi2[O.u1[f]] != f:
            rep.add("(15)", (("cell", f),), "phi2(u1 f) != f")
    for t in range(n3):
        if O.phi3[O.u2[t]] != t:
            rep.add("(15)", (("cell", t),), "phi3(u2 t) != t")
    for f in range(C.n_one):
        if O.phi0[O.phi1[f]] != O.phi0[src[f]]:
            rep.add("(16)", (("cell", f),), "phi0(phi1 f) != phi0(d1 f)")
    for t in range(n3):
        if O.phi1[O.phi2[t]] != O.phi1[trid[2][t]]:
            rep.add("(16)", (("cell", t),), "phi1(phi2 t) != phi1(d2 t)")
    for q in range(len(N.tetra)):
        if O.phi2[O.phi3[q]] != O.phi2[tetd[3][q]]:
            rep.add("(16)", (("cell", q),), "phi2(phi3 q) != phi2(d3 q)")
    for x in range(C.n_objects):
        if O.u1[id1[x]] != deg1[0][O.u0[x]]:
            rep.add("(17)", (("cell", x),), "u1(s0 x) != s0(u0 x)")
    for f in range(C.n_one):
        if O.u2[deg1[0][f]] != deg2[0][O.u1[f]]:
            rep.add("(17)", (("cell", f),), "u2(s0 f) != s0(u1 f)")
        if O.u2[deg1[1][f]] != deg2[1][O.u1[f]]:
            rep.add("(17)", (("cell", f),), "u2(s1 f) != s1(u1 f)")
    return rep


# ---------------------------------------------------------------------------
# constructions


def _from_2category(K: Finite2Category):
    """Operadic structure on the lax-slice sum, plus the comparison data."""
    cmp = dec_comparison(K)
    N, X, SD, ND, m = (cmp.nerve, cmp.extension, cmp.slice,
                       cmp.slice_nerve, cmp.iso)
    C = SD.cat
    n_comp, pi = component_map(C.n_objects, zip(C.one_src, C.one_tgt))

    m1, m2, m3 = m.levels[1], m.levels[2], m.levels[3]
    m1inv = [0] * len(m1)
    for i, v in enumerate(m1):
        m1inv[v] = i
    m2inv = [0] * len(m2)
    for i, v in enumerate(m2):
        m2inv[v] = i
    m3inv = [0] * len(m3)
    for i, v in enumerate(m3):
        m3inv[v] = i

    reps = [-1] * n_comp
    for x in range(C.n_objects):
        if reps[pi[x]] == -1:
            reps[pi[x]] = x
    u_neg1 = tuple(K.id1[K.one_tgt[r]] for r in reps)
    phi0 = tuple(pi[K.id1[K.one_src[f]]] for f in range(C.n_objects))
    phi1 = tuple(N.tss.face[2][2][m1inv[e]] for e in range(C.n_one))
    u0 = tuple(m1[N.tss.degen[1][1][x]] for x in range(C.n_objects))
    phi2 = tuple(m1[N.tss.face[3][3][m2inv[t]]]
                 for t in range(len(ND.triangles)))
    u1 = tuple(m2[N.tss.degen[2][2][m1inv[e]]] for e in range(C.n_one))
    phi3 = tuple(m2[X.face[4][4][m3inv[q]]] for q in range(len(ND.tetra)))
    u2 = tuple(m3[X.degen[3][3][m2inv[t]]] for t in range(len(ND.triangles)))

    O = UnaryOperadic2Cat(C, phi0, phi1, phi2, phi3, u_neg1, u0, u1, u2,
                          nerve_cache=ND)
    return O, cmp


def from_2category(K: Finite2Category) -> UnaryOperadic2Cat:
    """Canonical operadic structure on the sum of lax slices of ``K``.

    The underlying 2-category is ``lax_slice_sum(K)``; the structure maps
    are the transports of the top faces and degeneracies of the coskeletal
    extension of the nerve of ``K`` through the décalage comparison.
    """
    return _from_2category(K)[0]


def para(M: StrictMonCat) -> UnaryOperadic2Cat:
    """Operadic structure on the lax slice of the delooping of ``M``.

    Built as ``from_2category(deloop(M))`` and then cross-checked cell by
    cell against closed-form descriptions of all eight structure maps;
    any disagreement raises :class:`StructureError`.
    """
    O, cmp = _from_2category(deloop(M))
    SD, ND = cmp.slice, cmp.slice_nerve
    C = SD.cat
    unit = M.unit_obj
    ident = M.cat.identity

    def fail(what):
        raise StructureError(f"closed-form disagreement in para: {what}")

    if O.n_components != 1:
        fail("component count")
    if O.u_neg1 != (unit,):
        fail("u_neg1")
    if any(v != 0 for v in O.phi0):
        fail("phi0")
    for i, (h, g, f, alpha) in enumerate(SD.one_cells):
        if O.phi1[i] != f:
            fail(f"phi1 at {i}")
    for x in range(C.n_objects):
        if O.u0[x] != SD.one_index[(x, unit, x, ident[x])]:
            fail(f"u0 at {x}")
    for j, (F01, F12, A) in enumerate(ND.triangles):
        gamma = SD.two_cells[A][2]
        F02 = SD.two_cells[A][1]
        expect = SD.one_index[(SD.one_cells[F02][2], SD.one_cells[F12][2],
                               SD.one_cells[F01][2], gamma)]
        if O.phi2[j] != expect:
            fail(f"phi2 at {j}")
    for i, (h, g, f, alpha) in enumerate(SD.one_cells):
        inner = SD.two_index[(C.comp1[O.u0[g]][i], O.u0[h], alpha)]
        if O.u1[i] != ND.tri_index[(i, O.u0[g], inner)]:
            fail(f"u1 at {i}")
    for k, (t0, t1, t2, t3) in enumerate(ND.tetra):
        gamma = SD.two_cells[ND.triangles[t3][2]][2]
        inner = SD.two_index[(C.comp1[O.phi2[t0]][O.phi2[t2]],
                              O.phi2[t1], gamma)]
        if O.phi3[k] != ND.tri_index[(O.phi2[t2], O.phi2[t0], inner)]:
            fail(f"phi3 at {k}")
    d = ND.tss.face[2]
    for t in range(len(ND.triangles)):
        expect = ND.tet_index[(O.u1[d[0][t]], O.u1[d[1][t]], O.u1[d[2][t]], t)]
        if O.u2[t] != expect:
            fail(f"u2 at {t}")
    return O


def terminal_odot() -> UnaryOperadic2Cat:
    """The terminal structure: every level a single cell."""
    C = Finite2Category(1, (0,), (0,), (0,), (0,), (0,), (0,),
                        ((0,),), ((0,),), ((0,),))
    z = (0,)
    return UnaryOperadic2Cat(C, z, z, z, z, z, z, z, z)


def bouquets(n: int) -> UnaryOperadic2Cat:
    """The free-standing corolla structure on ``n`` colours.

    Objects are pairs ``(a, b)``, 1-cells are triples ``(a1, a2, b)``
    from ``(a1, b)`` to ``(a2, b)``, and all 2-cells are identities.
    Assembled simplicially, level ``k`` is the set of ``(k+1)``-tuples of
    colours with faces deleting and degeneracies repeating a coordinate.
    """
    if n < 1:
        raise StructureError("need at least one colour")
    rng = range(n)
    objs = [(a, b) for a in rng for b in rng]
    oidx = {o: i for i, o in enumerate(objs)}
    ones = [(a1, a2, b) for a1 in rng for a2 in rng for b in rng]
    eidx = {e: i for i, e in enumerate(ones)}
    comp = [[-1] * len(ones) for _ in ones]
    for g, (b1, b2, c) in enumerate(ones):
        for f, (a1, a2, cc) in enumerate(ones):
            if cc == c and a2 == b1:
                comp[g][f] = eidx[(a1, b2, c)]
    cat = FiniteCategory(
        len(objs),
        tuple(oidx[(a1, b)] for (a1, a2, b) in ones),
        tuple(oidx[(a2, b)] for (a1, a2, b) in ones),
        tuple(eidx[(a, a, b)] for (a, b) in objs),
        tuple(tuple(r) for r in comp))
    C = as_2category(cat)
    N = nerve_data(C)

    def tri(x, y, z, w):
        f01, f12 = eidx[(x, y, w)], eidx[(y, z, w)]
        return N.tri_index[(f01, f12, eidx[(x, z, w)])]

    phi0 = tuple(a for (a, b) in objs)
    u_neg1 = tuple(oidx[(c, c)] for c in rng)
    phi1 = tuple(oidx[(a1, a2)] for (a1, a2, b) in ones)
    u0 = tuple(eidx[(a, b, b)] for (a, b) in objs)

    def decode_tri(t):
        f01, f12, _ = N.triangles[t]
        a0, a1, b = ones[f01]
        a2 = ones[f12][1]
        return a0, a1, a2, b

    phi2, u1, u2 = [], [], []
    for t in range(len(N.triangles)):
        a0, a1, a2, b = decode_tri(t)
        phi2.append(eidx[(a0, a1, a2)])
        u2.append(N.tet_index[(tri(a1, a2, b, b), tri(a0, a2, b, b),
                               tri(a0, a1, b, b), t)])
    for (a1, a2, b) in ones:
        u1.append(tri(a1, a2, b, b))
    phi3 = []
    for (t0, t1, t2, t3) in N.tetra:
        a0, a1, a2, b = decode_tri(t3)
        a3 = decode_tri(t0)[2]
        phi3.append(tri(a0, a1, a2, a3))
    return UnaryOperadic2Cat(C, phi0, tuple(phi1), tuple(phi2), tuple(phi3),
                             u_neg1, tuple(u0), tuple(u1), tuple(u2),
                             nerve_cache=N)


# ---------------------------------------------------------------------------
# quasibijections and unit terminality


def is_quasibijection(O: UnaryOperadic2Cat, g: int) -> bool:
    """Whether the 1-cell ``g`` projects every composite through the unit.

    ``g`` is a quasibijection when for every 1-cell ``f`` with
    ``d0 f = d1 g``, the projection of the composition triangle of
    ``(f, g)`` is the unit 1-cell ``u0(phi1 f)``.
    """
    C, N = O.C, O.nerve
    for f in range(C.n_one):
        if C.one_tgt[f] != C.one_src[g]:
            continue
        t = N.tri_index[(f, g, C.id2[C.comp1[g][f]])]
        if O.phi2[t] != O.u0[O.phi1[f]]:
            return False
    return True


def quasibijections(O: UnaryOperadic2Cat) -> tuple[int, ...]:
    return tuple(g for g in range(O.C.n_one) if is_quasibijection(O, g))


def check_unit_terminality(O: UnaryOperadic2Cat) -> ValidationReport:
    """Each ``u0(x)`` is terminal among 1-cells from ``x`` to the unit:
    every ``k : x -> u_neg1(pi x)`` admits exactly one 2-cell ``k => u0(x)``.
    """
    rep = ValidationReport("unit terminality")
    C = O.C
    for x in range(C.n_objects):
        ux = O.u_neg1[O.pi[x]]
        for k in range(C.n_one):
            if C.one_src[k] != x or C.one_tgt[k] != ux:
                continue
            n = len(C.hom2(k, O.u0[x]))
            if n != 1:
                rep.add("unique 2-cell to unit", (("object", x), ("one_cell", k)),
                        f"found {n}")
    return rep


# ---------------------------------------------------------------------------
# maps of operadic structures


@dataclass(frozen=True)
class OperadicFunctor:
    """A strict map of operadic structures: a level-preserving cell map
    commuting with every face and degeneracy of the assembled sets."""

    source: UnaryOperadic2Cat
    target: UnaryOperadic2Cat
    levels: tuple  # five level maps

    def __post_init__(self):
        if len(self.levels) != 5:
            raise StructureError("an operadic functor has five level maps")

    def __call__(self, k: int, x: int) -> int:
        return self.levels[k][x]

    def as_ssetmap(self) -> SSetMap:
        return SSetMap(to_simplicial(self.source), to_simplicial(self.target),
                       tuple(tuple(lv) for lv in self.levels))


def validate_operadic_functor(F: OperadicFunctor) -> ValidationReport:
    return merge("operadic functor", validate_ssetmap(F.as_ssetmap()))


def identity_functor(O: UnaryOperadic2Cat) -> OperadicFunctor:
    X = to_simplicial(O)
    return OperadicFunctor(O, O, tuple(tuple(range(c)) for c in X.cells))


def terminal_functor(O: UnaryOperadic2Cat) -> OperadicFunctor:
    """The unique map to the terminal structure."""
    X = to_simplicial(O)
    return OperadicFunctor(O, terminal_odot(),
                           tuple((0,) * c for c in X.cells))
