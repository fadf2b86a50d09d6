"""Categorical operads over a unary operadic base.

A categorical operad assigns a finite category (the *fiber*) to every
object of the base 2-category, a multiplication bifunctor

    mult[f] : fiber(d0 f) x fiber(phi1 f) -> fiber(d1 f)

to every 1-cell ``f`` (written ``a ._f b`` with ``a`` the outer factor,
living over the target of ``f``), and a unit object to every component.
Associativity is indexed by the lax triangles of the base: for a triangle
``t`` with edges ``f01 = d2 t``, ``f12 = d0 t``, ``f02 = d1 t``,

    (a ._{f12} b) ._{f01} c  =  a ._{f02} (b ._{phi2 t} c)

on objects and on morphisms; the unit laws use the identity 1-cells and
the unit 1-cells ``u0``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import StructureError
from .report import ValidationReport
from .twocat import Finite2Category, FiniteCategory, StrictMonCat, moncat
from .operadic import (OperadicFunctor, UnaryOperadic2Cat, bouquets,
                       terminal_odot)


@dataclass(frozen=True)
class CategoricalOperad:
    """Fibers, multiplication tables and units over an operadic base.

    ``mult_obj[f][a][b]`` and ``mult_mor[f][m][n]`` are dense tables; row
    indices run over the fiber of the target of ``f``, column indices over
    the fiber of ``phi1(f)``, values land in the fiber of the source.
    ``units[c]`` is an object of the fiber of ``u_neg1(c)``.
    """

    base: UnaryOperadic2Cat
    fibers: tuple  # FiniteCategory per base object
    mult_obj: tuple
    mult_mor: tuple
    units: tuple

    def __post_init__(self):
        O = self.base
        C = O.C
        if len(self.fibers) != C.n_objects:
            raise StructureError("one fiber per base object required")
        if len(self.mult_obj) != C.n_one or len(self.mult_mor) != C.n_one:
            raise StructureError("one multiplication table per base 1-cell")
        if len(self.units) != O.n_components:
            raise StructureError("one unit per component required")
        for f in range(C.n_one):
            A = self.fibers[C.one_tgt[f]]
            B = self.fibers[O.phi1[f]]
            R = self.fibers[C.one_src[f]]
            mo, mm = self.mult_obj[f], self.mult_mor[f]
            if (len(mo) != A.n_objects
                    or any(len(r) != B.n_objects for r in mo)
                    or any(not 0 <= v < R.n_objects for r in mo for v in r)):
                raise StructureError(
                    f"object multiplication table of 1-cell {f} malformed")
            if (len(mm) != A.n_mor
                    or any(len(r) != B.n_mor for r in mm)
                    or any(not 0 <= v < R.n_mor for r in mm for v in r)):
                raise StructureError(
                    f"morphism multiplication table of 1-cell {f} malformed")
        for c, e in enumerate(self.units):
            if not 0 <= e < self.fibers[O.u_neg1[c]].n_objects:
                raise StructureError(f"unit of component {c} out of range")


def operad(base, fibers, mult_obj, mult_mor, units) -> CategoricalOperad:
    freeze = tuple(tuple(tuple(r) for r in tab) for tab in mult_obj)
    freeze_m = tuple(tuple(tuple(r) for r in tab) for tab in mult_mor)
    return CategoricalOperad(base, tuple(fibers), freeze, freeze_m,
                             tuple(units))


def validate_operad(P: CategoricalOperad) -> ValidationReport:
    """Fiber axioms, bifunctoriality, triangle associativity, unit laws.

    The base is assumed to be a valid operadic structure (check it with
    :func:`opcat.operadic.validate_operadic`).
    """
    from .twocat import validate_category

    rep = ValidationReport("operad")
    O = P.base
    C = O.C
    for x, fib in enumerate(P.fibers):
        sub = validate_category(fib)
        for v in sub.violations:
            rep.add(v.rule, (("fiber", x),) + v.where, v.detail)

    for f in range(C.n_one):
        A = P.fibers[C.one_tgt[f]]
        B = P.fibers[O.phi1[f]]
        R = P.fibers[C.one_src[f]]
        mo, mm = P.mult_obj[f], P.mult_mor[f]
        for m in range(A.n_mor):
            for n in range(B.n_mor):
                r = mm[m][n]
                if (R.mor_src[r] != mo[A.mor_src[m]][B.mor_src[n]]
                        or R.mor_tgt[r] != mo[A.mor_tgt[m]][B.mor_tgt[n]]):
                    rep.add("multiplication typing",
                            (("one_cell", f), ("m", m), ("n", n)))
        for a in range(A.n_objects):
            for b in range(B.n_objects):
                if mm[A.identity[a]][B.identity[b]] != R.identity[mo[a][b]]:
                    rep.add("multiplication preserves identities",
                            (("one_cell", f), ("a", a), ("b", b)))
        for m2 in range(A.n_mor):
            for m1 in range(A.n_mor):
                if A.comp[m2][m1] == -1:
                    continue
                for n2 in range(B.n_mor):
                    for n1 in range(B.n_mor):
                        if B.comp[n2][n1] == -1:
                            continue
                        lhs = mm[A.comp[m2][m1]][B.comp[n2][n1]]
                        rhs = R.comp[mm[m2][n2]][mm[m1][n1]]
                        if lhs != rhs:
                            rep.add("multiplication preserves composition",
                                    (("one_cell", f), ("m", (m2, m1)),
                                     ("n", (n2, n1))))

    N = O.nerve
    trid = N.tss.face[2]
    for t in range(len(N.triangles)):
        f12, f02, f01, g = trid[0][t], trid[1][t], trid[2][t], O.phi2[t]
        A = P.fibers[C.one_tgt[f12]]
        B = P.fibers[O.phi1[f12]]
        D = P.fibers[O.phi1[f01]]
        for a in range(A.n_objects):
            for b in range(B.n_objects):
                ab = P.mult_obj[f12][a][b]
                for c in range(D.n_objects):
                    lhs = P.mult_obj[f01][ab][c]
                    rhs = P.mult_obj[f02][a][P.mult_obj[g][b][c]]
                    if lhs != rhs:
                        rep.add("multiplication associativity (objects)",
                                (("triangle", t), ("cells", (a, b, c))))
        for m in range(A.n_mor):
            for n in range(B.n_mor):
                mn = P.mult_mor[f12][m][n]
                for p in range(D.n_mor):
                    lhs = P.mult_mor[f01][mn][p]
                    rhs = P.mult_mor[f02][m][P.mult_mor[g][n][p]]
                    if lhs != rhs:
                        rep.add("multiplication associativity (morphisms)",
                                (("triangle", t), ("cells", (m, n, p))))

    for x in range(C.n_objects):
        fib = P.fibers[x]
        e_in = P.units[O.phi0[x]]
        e_in_id = P.fibers[O.u_neg1[O.phi0[x]]].identity[e_in]
        f = C.id1[x]
        for a in range(fib.n_objects):
            if P.mult_obj[f][a][e_in] != a:
                rep.add("right unit law", (("object", x), ("a", a)))
        for m in range(fib.n_mor):
            if P.mult_mor[f][m][e_in_id] != m:
                rep.add("right unit law", (("object", x), ("m", m)))
        e_out = P.units[O.pi[x]]
        e_out_id = P.fibers[O.u_neg1[O.pi[x]]].identity[e_out]
        uf = O.u0[x]
        for a in range(fib.n_objects):
            if P.mult_obj[uf][e_out][a] != a:
                rep.add("left unit law", (("object", x), ("a", a)))
        for m in range(fib.n_mor):
            if P.mult_mor[uf][e_out_id][m] != m:
                rep.add("left unit law", (("object", x), ("m", m)))
    return rep


def is_one_connected(P: CategoricalOperad) -> bool:
    """Whether the fiber over every component's unit object is trivial."""
    return all(P.fibers[x].n_objects == 1 and P.fibers[x].n_mor == 1
               for x in P.base.u_neg1)


# ---------------------------------------------------------------------------
# constructions


def operad_from_moncat(V: StrictMonCat) -> CategoricalOperad:
    """A strict monoidal category as an operad over the one-point base."""
    return CategoricalOperad(terminal_odot(), (V.cat,),
                             (V.tensor_obj,), (V.tensor_mor,),
                             (V.unit_obj,))


def moncat_from_operad(P: CategoricalOperad) -> StrictMonCat:
    """Inverse of :func:`operad_from_moncat`; the base must be one-point."""
    X = P.base
    if X.C.n_objects != 1 or X.C.n_one != 1 or X.C.n_two != 1:
        raise StructureError("base is not the one-point structure")
    return moncat(P.fibers[0], P.units[0], P.mult_obj[0], P.mult_mor[0])


def operad_from_2cat(K: Finite2Category) -> CategoricalOperad:
    """Hom-categories of ``K`` as an operad over ``bouquets(K.n_objects)``.

    The fiber over the base object ``(a, b)`` is the hom-category
    ``K(a, b)``; multiplication over ``(a1, a2, b)`` is horizontal
    composition ``K(a2, b) x K(a1, a2) -> K(a1, b)``; units are the
    identity 1-cells.
    """
    n = K.n_objects
    O = bouquets(n)
    hom1: dict = {}
    for f in range(K.n_one):
        hom1.setdefault((K.one_src[f], K.one_tgt[f]), []).append(f)
    hom2: dict = {}
    for t in range(K.n_two):
        f = K.two_src[t]
        hom2.setdefault((K.one_src[f], K.one_tgt[f]), []).append(t)

    pairs = [(a, b) for a in range(n) for b in range(n)]
    loc1 = {p: {f: i for i, f in enumerate(hom1.get(p, []))} for p in pairs}
    loc2 = {p: {t: i for i, t in enumerate(hom2.get(p, []))} for p in pairs}

    fibers = []
    for p in pairs:
        fs, ts = hom1.get(p, []), hom2.get(p, [])
        fibers.append(FiniteCategory(
            len(fs),
            tuple(loc1[p][K.two_src[t]] for t in ts),
            tuple(loc1[p][K.two_tgt[t]] for t in ts),
            tuple(loc2[p][K.id2[f]] for f in fs),
            tuple(tuple(loc2[p][K.vcomp[b][a]] if K.vcomp[b][a] != -1 else -1
                        for a in ts) for b in ts)))

    mult_obj, mult_mor = [], []
    for (a1, a2, b) in [(a1, a2, b) for a1 in range(n) for a2 in range(n)
                        for b in range(n)]:
        outer, inner, res = (a2, b), (a1, a2), (a1, b)
        mult_obj.append(tuple(
            tuple(loc1[res][K.comp1[g][f]] for f in hom1.get(inner, []))
            for g in hom1.get(outer, [])))
        mult_mor.append(tuple(
            tuple(loc2[res][K.hcomp2[bb][aa]] for aa in hom2.get(inner, []))
            for bb in hom2.get(outer, [])))

    units = tuple(loc1[(c, c)][K.id1[c]] for c in range(n))
    return CategoricalOperad(O, tuple(fibers), tuple(mult_obj),
                             tuple(mult_mor), units)


def restrict_operad(F: OperadicFunctor,
                    Q: CategoricalOperad) -> CategoricalOperad:
    """Pull an operad back along a map of operadic bases."""
    if F.target is not Q.base and F.target != Q.base:
        raise StructureError("functor target differs from the operad base")
    O = F.source
    return CategoricalOperad(
        O,
        tuple(Q.fibers[F(1, x)] for x in range(O.C.n_objects)),
        tuple(Q.mult_obj[F(2, f)] for f in range(O.C.n_one)),
        tuple(Q.mult_mor[F(2, f)] for f in range(O.C.n_one)),
        tuple(Q.units[F(0, c)] for c in range(O.n_components)))
