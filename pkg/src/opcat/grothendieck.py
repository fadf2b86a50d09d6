"""Total structures over an operad, split fibrations, and extraction.

An operad ``P`` over an operadic base ``O`` (:mod:`opcat.operads`) glues
into a single *total* operadic 2-category together with a projection back
onto ``O``; the projection carries canonical lifts that make it a *split
fibration*.  Conversely an abstract split fibration determines an operad
over its target.  This module builds both directions and certifies that
they are mutually inverse.

Cell encodings of a constructed total structure (see :func:`total_cells`):

* objects are pairs ``(A, a)`` of a base object and an object of the
  fiber over it, enumerated in lexicographic order;
* 1-cells are quadruples ``(f, b, p, alpha)``: a base 1-cell ``f``, an
  object ``b`` of the fiber over the target of ``f``, an object ``p`` of
  the fiber over ``phi1(f)``, and a fiber morphism
  ``alpha : b ._f p -> a``.  The cell runs from ``(src f, a)`` to
  ``(tgt f, b)`` -- note that over an identity base cell it points
  *against* ``alpha``;
* 2-cells are quadruples ``(i1, i2, rho, gamma)`` of two parallel total
  1-cells, a base 2-cell ``rho`` between their base parts and a fiber
  morphism ``gamma : transport_rho(p1) -> p2`` whose multiplication
  square against the two ``alpha`` components commutes.  Here
  ``transport_rho(p) = p ._{psi(rho~)} e`` pushes ``p`` forward along
  the projection of the triangle ``rho~ = (1_A, f1, rho)``.

Split-fibration conventions:

* the splitting cocycle is checked on *source objects*: the two iterated
  lifts of a composable pair live over the two distinct legs of the base
  composition triangle, so they are never comparable as cells, and their
  source objects are the only slots of matching type.  For the canonical
  lifts ``(f, b, identity of a ._f b)`` of a constructed total structure
  the source equality is precisely associativity of the operad
  multiplication.
* extraction reads the fiber category over ``x`` from the quasibijections
  over ``1_x`` with the orientation *reversed* (the source of the
  extracted morphism is the target object of the total cell, and
  extracted composition swaps the arguments of ``comp1``); with that
  choice extracting the canonical fibration returns the original operad
  on the nose rather than its fiberwise opposite.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import StructureError
from .operadic import (OperadicFunctor, UnaryOperadic2Cat, bouquets,
                       component_map, from_2category, para, terminal_odot,
                       to_simplicial, quasibijections,
                       validate_operadic_functor)
from .operads import (CategoricalOperad, operad, operad_from_2cat,
                      operad_from_moncat)
from .report import Certificate, ValidationReport
from .simplicial import Horn32, fillers_index
from .twocat import (Finite2Category, FiniteCategory, StrictMonCat, deloop,
                     lax_slice_sum, nerve_data)


@dataclass(frozen=True)
class TotalCells:
    """Decodings of a constructed total structure.

    ``objects[i] = (A, a)``, ``ones[i] = (f, b, p, alpha)`` and
    ``twos[i] = (i1, i2, rho, gamma)`` with the conventions of the module
    docstring; the ``*_index`` dicts invert them.  ``tri_base[t]`` is the
    base 2-simplex under the total 2-simplex ``t``, and ``lifts`` is the
    canonical lift table ``(a, b, g) -> total 1-cell``.
    """

    objects: tuple
    obj_index: dict
    ones: tuple
    one_index: dict
    twos: tuple
    two_index: dict
    tri_base: tuple
    lifts: dict


@dataclass(frozen=True)
class SplitFibration:
    """An operadic functor with a chosen table of cartesian lifts.

    ``lifts`` maps ``(a, b, g)`` -- a 1-level cell ``a`` of the source
    over the target of the base 1-cell ``g`` and a 1-level cell ``b``
    over ``phi1(g)`` -- to a 2-level cell of the source over ``g`` with
    faces ``d0 = a`` and ``d2 = b``.
    """

    projection: OperadicFunctor
    lifts: dict


@dataclass(frozen=True)
class ExtractionCells:
    """Which total cells the fibers of an extracted operad came from.

    ``obj_cells[x][j]`` is the total object giving object ``j`` of the
    fiber over base object ``x``; ``mor_cells[x][j]`` the total 1-cell
    giving its morphism ``j``.
    """

    obj_cells: tuple
    mor_cells: tuple


def _lk(table: dict, key, what: str):
    try:
        return table[key]
    except KeyError:
        raise StructureError(f"{what} has no cell {key} "
                             "(is the operad valid?)") from None


def grothendieck(O: UnaryOperadic2Cat, P: CategoricalOperad):
    """Total operadic 2-category of ``P`` and its projection onto ``O``.

    Returns ``(total, projection)``.  Cell decodings and the canonical
    lift table are available through :func:`total_cells`;
    :func:`canonical_fibration` packages the projection with its lifts.
    The construction asserts the derived composition identities by index
    lookup and raises :class:`StructureError` when ``P`` escapes them.
    """
    if P.base != O:
        raise StructureError("operad lives over a different base")
    C, NB, fib = O.C, O.nerve, P.fibers
    mo, mm = P.mult_obj, P.mult_mor

    objects = [(A, a) for A in range(C.n_objects)
               for a in range(fib[A].n_objects)]
    obj_index = {o: i for i, o in enumerate(objects)}

    def transport(rho: int, p: int) -> int:
        f1 = C.two_src[rho]
        A = C.one_src[f1]
        t = NB.tri_index[(C.id1[A], f1, rho)]
        return mo[O.phi2[t]][p][P.units[O.phi0[A]]]

    ones = []
    for f in range(C.n_one):
        FA = fib[C.one_src[f]]
        for b in range(fib[C.one_tgt[f]].n_objects):
            for p in range(fib[O.phi1[f]].n_objects):
                bp = mo[f][b][p]
                for al in range(FA.n_mor):
                    if FA.mor_src[al] == bp:
                        ones.append((f, b, p, al))
    one_index = {h: i for i, h in enumerate(ones)}
    n1 = len(ones)
    one_src_T = tuple(
        obj_index[(C.one_src[f], fib[C.one_src[f]].mor_tgt[al])]
        for (f, b, p, al) in ones)
    one_tgt_T = tuple(obj_index[(C.one_tgt[f], b)] for (f, b, p, al) in ones)

    id1_T = tuple(
        _lk(one_index,
            (C.id1[A], a, P.units[O.phi0[A]], fib[A].identity[a]),
            "identity 1-cell")
        for (A, a) in objects)

    comp1_T = [[-1] * n1 for _ in range(n1)]
    for i1, (f1, b1, p1, a1) in enumerate(ones):
        FA = fib[C.one_src[f1]]
        idp1 = fib[O.phi1[f1]].identity[p1]
        for i2, (f2, b2, p2, a2) in enumerate(ones):
            if one_tgt_T[i1] != one_src_T[i2]:
                continue
            g = O.phi2[NB.tri_index[(f1, f2, C.id2[C.comp1[f2][f1]])]]
            al = FA.comp[a1][mm[f1][a2][idp1]]
            if al == -1:
                raise StructureError("composite escapes the fibers "
                                     "(is the operad valid?)")
            comp1_T[i2][i1] = _lk(
                one_index,
                (C.comp1[f2][f1], b2, mo[g][p2][p1], al),
                "1-cell composition")

    twos = []
    for i1, (f1, b1, p1, a1) in enumerate(ones):
        for i2, (f2, b2, p2, a2) in enumerate(ones):
            if (one_src_T[i1] != one_src_T[i2]
                    or one_tgt_T[i1] != one_tgt_T[i2]):
                continue
            FB = fib[O.phi1[f2]]
            FA = fib[C.one_src[f2]]
            idb = fib[C.one_tgt[f2]].identity[b2]
            for rho in C.hom2(f1, f2):
                tp = transport(rho, p1)
                for ga in range(FB.n_mor):
                    if FB.mor_src[ga] != tp or FB.mor_tgt[ga] != p2:
                        continue
                    if FA.comp[a2][mm[f2][idb][ga]] == a1:
                        twos.append((i1, i2, rho, ga))
    two_index = {t: i for i, t in enumerate(twos)}
    n2 = len(twos)
    two_src_T = tuple(t[0] for t in twos)
    two_tgt_T = tuple(t[1] for t in twos)

    id2_T = tuple(
        _lk(two_index, (i, i, C.id2[f], fib[O.phi1[f]].identity[p]),
            "identity 2-cell")
        for i, (f, b, p, al) in enumerate(ones))

    vcomp_T = [[-1] * n2 for _ in range(n2)]
    for j1, (i1, i2, r1, g1) in enumerate(twos):
        for j2, (i2b, i3, r2, g2) in enumerate(twos):
            if i2b != i2:
                continue
            f2 = C.two_src[r2]
            A = C.one_src[f2]
            psi = O.phi2[NB.tri_index[(C.id1[A], f2, r2)]]
            e = P.units[O.phi0[A]]
            ide = fib[O.u_neg1[O.phi0[A]]].identity[e]
            ga = fib[O.phi1[C.two_tgt[r2]]].comp[g2][mm[psi][g1][ide]]
            vcomp_T[j2][j1] = _lk(
                two_index, (i1, i3, C.vcomp[r2][r1], ga),
                "vertical composition")

    def right_whisker(i: int, j: int) -> int:
        """Whisker the 2-cell ``j`` by the later 1-cell ``i``."""
        m1, m2, rho, ga = twos[j]
        f_i, _, p_i, _ = ones[i]
        f2 = C.two_tgt[rho]
        h2 = O.phi2[NB.tri_index[(f2, f_i, C.id2[C.comp1[f_i][f2]])]]
        gam = mm[h2][fib[O.phi1[f_i]].identity[p_i]][ga]
        return _lk(two_index,
                   (comp1_T[i][m1], comp1_T[i][m2],
                    C.hcomp2[C.id2[f_i]][rho], gam),
                   "right whiskering")

    def left_whisker(j: int, i: int) -> int:
        """Whisker the 2-cell ``j`` by the earlier 1-cell ``i``."""
        m1, m2, rho, ga = twos[j]
        f_i, _, p_i, _ = ones[i]
        f2 = C.two_tgt[rho]
        g2 = O.phi2[NB.tri_index[(f_i, f2, C.id2[C.comp1[f2][f_i]])]]
        gam = mm[g2][ga][fib[O.phi1[f_i]].identity[p_i]]
        return _lk(two_index,
                   (comp1_T[m1][i], comp1_T[m2][i],
                    C.hcomp2[rho][C.id2[f_i]], gam),
                   "left whiskering")

    hcomp2_T = [[-1] * n2 for _ in range(n2)]
    for jG, (gm1, gm2, _, _) in enumerate(twos):
        for jD, (dm1, dm2, _, _) in enumerate(twos):
            if one_tgt_T[gm1] != one_src_T[dm1]:
                continue
            first = right_whisker(dm1, jG)
            second = left_whisker(jD, gm2)
            hcomp2_T[jD][jG] = vcomp_T[second][first]

    T_cat = Finite2Category(
        len(objects), one_src_T, one_tgt_T, two_src_T, two_tgt_T,
        id1_T, id2_T,
        tuple(tuple(r) for r in comp1_T),
        tuple(tuple(r) for r in vcomp_T),
        tuple(tuple(r) for r in hcomp2_T))
    NT = nerve_data(T_cat)

    n_comp_T, pi_T = component_map(len(objects),
                                   zip(one_src_T, one_tgt_T))
    if n_comp_T != O.n_components:
        raise StructureError("total structure has mismatched connectivity")
    lvl0 = [0] * n_comp_T
    for i, (A, a) in enumerate(objects):
        lvl0[pi_T[i]] = O.pi[A]
    if sorted(lvl0) != list(range(O.n_components)):
        raise StructureError("total structure has mismatched connectivity")
    inv0 = [0] * O.n_components
    for tc, bc in enumerate(lvl0):
        inv0[bc] = tc

    phi0_T = tuple(inv0[O.phi0[A]] for (A, a) in objects)
    u_neg1_T = tuple(
        obj_index[(O.u_neg1[lvl0[tc]], P.units[lvl0[tc]])]
        for tc in range(n_comp_T))
    phi1_T = tuple(obj_index[(O.phi1[f], p)] for (f, b, p, al) in ones)
    u0_T = tuple(
        _lk(one_index,
            (O.u0[A], P.units[O.pi[A]], a, fib[A].identity[a]),
            "unit 1-cell")
        for (A, a) in objects)

    tri_base = tuple(
        NB.tri_index[(ones[F01][0], ones[F12][0], twos[G][2])]
        for (F01, F12, G) in NT.triangles)
    phi2_T = tuple(
        _lk(one_index,
            (O.phi2[tri_base[t]], ones[F12][2], ones[F01][2], twos[G][3]),
            "2-simplex projection")
        for t, (F01, F12, G) in enumerate(NT.triangles))

    u1_T = []
    for i, (f, b, p, al) in enumerate(ones):
        iu = u0_T[one_tgt_T[i]]
        G = _lk(two_index,
                (comp1_T[iu][i], u0_T[one_src_T[i]],
                 NB.triangles[O.u1[f]][2], al),
                "unit 2-simplex")
        u1_T.append(_lk(NT.tri_index, (i, iu, G), "unit 2-simplex"))
    u1_T = tuple(u1_T)

    phi3_T = []
    lvl4 = []
    for (D0, D1, D2, D3) in NT.tetra:
        bq = _lk(NB.tet_index,
                 (tri_base[D0], tri_base[D1], tri_base[D2], tri_base[D3]),
                 "3-simplex projection")
        lvl4.append(bq)
        G = _lk(two_index,
                (comp1_T[phi2_T[D0]][phi2_T[D2]], phi2_T[D1],
                 NB.triangles[O.phi3[bq]][2],
                 twos[NT.triangles[D3][2]][3]),
                "3-simplex projection")
        phi3_T.append(_lk(NT.tri_index, (phi2_T[D2], phi2_T[D0], G),
                          "3-simplex projection"))
    phi3_T = tuple(phi3_T)

    u2_T = tuple(
        _lk(NT.tet_index,
            (u1_T[F12], u1_T[T_cat.two_tgt[G]], u1_T[F01], t),
            "unit 3-simplex")
        for t, (F01, F12, G) in enumerate(NT.triangles))

    total = UnaryOperadic2Cat(T_cat, phi0_T, phi1_T, phi2_T, phi3_T,
                              u_neg1_T, u0_T, u1_T, u2_T, nerve_cache=NT)
    projection = OperadicFunctor(
        total, O,
        (tuple(lvl0),
         tuple(A for (A, a) in objects),
         tuple(f for (f, b, p, al) in ones),
         tri_base,
         tuple(lvl4)))

    lifts = {}
    for g in range(C.n_one):
        Bt, Bp, Bs = C.one_tgt[g], O.phi1[g], C.one_src[g]
        for x in range(fib[Bt].n_objects):
            for y in range(fib[Bp].n_objects):
                lifts[(obj_index[(Bt, x)], obj_index[(Bp, y)], g)] = \
                    one_index[(g, x, y, fib[Bs].identity[mo[g][x][y]])]

    object.__setattr__(total, "_total_cells", TotalCells(
        tuple(objects), obj_index, tuple(ones), one_index,
        tuple(twos), two_index, tri_base, lifts))
    return total, projection


def total_cells(total: UnaryOperadic2Cat) -> TotalCells:
    """Cell decodings attached by :func:`grothendieck`."""
    tc = getattr(total, "_total_cells", None)
    if tc is None:
        raise StructureError("not a constructed total structure")
    return tc


def canonical_fibration(O: UnaryOperadic2Cat,
                        P: CategoricalOperad) -> SplitFibration:
    """The projection of the total structure with its canonical lifts."""
    total, projection = grothendieck(O, P)
    return SplitFibration(projection, dict(total_cells(total).lifts))


# ---------------------------------------------------------------------------
# comparisons with the lax-slice models


def _comparison(total: UnaryOperadic2Cat, Q: UnaryOperadic2Cat,
                lvl1, lvl2, two_map) -> OperadicFunctor:
    NT, NQ = total.nerve, Q.nerve
    lvl3 = tuple(NQ.tri_index[(lvl2[F01], lvl2[F12], two_map[G])]
                 for (F01, F12, G) in NT.triangles)
    lvl4 = tuple(NQ.tet_index[tuple(lvl3[t] for t in tet)]
                 for tet in NT.tetra)
    lvl0 = tuple(Q.pi[lvl1[total.u_neg1[c]]]
                 for c in range(total.n_components))
    return OperadicFunctor(total, Q,
                           (lvl0, tuple(lvl1), tuple(lvl2), lvl3, lvl4))


def para_comparison(M: StrictMonCat) -> OperadicFunctor:
    """Explicit comparison of the total structure of ``M`` over the
    one-point base with ``para(M)``.

    The source is ``grothendieck(terminal_odot(), operad_from_moncat(M))``;
    the map sends the total 1-cell ``(f, b, p, alpha)`` to the slice cell
    ``(tgt alpha, b, p, alpha)``.  Validating it as an operadic functor
    and certifying it levelwise bijective exhibits the two structures as
    the same up to the canonical renaming of cells.
    """
    total, _ = grothendieck(terminal_odot(), operad_from_moncat(M))
    Q = para(M)
    SD = lax_slice_sum(deloop(M))
    if Q.C != SD.cat:
        raise StructureError("slice enumeration mismatch")
    cells = total_cells(total)
    V = M.cat
    lvl1 = [a for (A, a) in cells.objects]
    lvl2 = [SD.one_index[(V.mor_tgt[al], b, p, al)]
            for (f, b, p, al) in cells.ones]
    two_map = [SD.two_index[(lvl2[i1], lvl2[i2], ga)]
               for (i1, i2, rho, ga) in cells.twos]
    return _comparison(total, Q, lvl1, lvl2, two_map)


def slice_comparison(K: Finite2Category) -> OperadicFunctor:
    """Explicit comparison of the total structure of the hom-operad of
    ``K`` over the bouquet base with ``from_2category(K)``.

    The source is ``grothendieck(bouquets(n), operad_from_2cat(K))``; the
    map renames fiber-local cells to the global cells of ``K`` and total
    1-cells ``(g, b, p, alpha)`` to slice cells ``(tgt alpha, b, p,
    alpha)`` as in :func:`para_comparison`.
    """
    n = K.n_objects
    total, _ = grothendieck(bouquets(n), operad_from_2cat(K))
    Q = from_2category(K)
    SD = lax_slice_sum(K)
    if Q.C != SD.cat:
        raise StructureError("slice enumeration mismatch")
    cells = total_cells(total)
    hom1: dict = {}
    for f in range(K.n_one):
        hom1.setdefault((K.one_src[f], K.one_tgt[f]), []).append(f)
    hom2: dict = {}
    for t in range(K.n_two):
        f = K.two_src[t]
        hom2.setdefault((K.one_src[f], K.one_tgt[f]), []).append(t)
    pairs = [(a, b) for a in range(n) for b in range(n)]
    bq_ones = [(a1, a2, b) for a1 in range(n) for a2 in range(n)
               for b in range(n)]

    lvl1 = [hom1[pairs[A]][a] for (A, a) in cells.objects]
    lvl2 = []
    for (g, b, p, al) in cells.ones:
        a1, a2, bb = bq_ones[g]
        alg = hom2[(a1, bb)][al]
        lvl2.append(SD.one_index[(K.two_tgt[alg], hom1[(a2, bb)][b],
                                  hom1[(a1, a2)][p], alg)])
    two_map = []
    for (i1, i2, rho, ga) in cells.twos:
        a1, a2, bb = bq_ones[cells.ones[i2][0]]
        two_map.append(SD.two_index[(lvl2[i1], lvl2[i2],
                                     hom2[(a1, a2)][ga])])
    return _comparison(total, Q, lvl1, lvl2, two_map)


# ---------------------------------------------------------------------------
# cartesian cells and split fibrations


def _cartesian_ctx(p: OperadicFunctor):
    Xt, Xb = to_simplicial(p.source), to_simplicial(p.target)
    by_d0: dict[int, list[int]] = {}
    by_d01: dict[tuple, list[int]] = {}
    for m in range(Xt.cells[2]):
        by_d0.setdefault(Xt.d(2, 0, m), []).append(m)
        by_d01.setdefault((Xt.d(2, 0, m), Xt.d(2, 1, m)), []).append(m)
    return (Xt, Xb, fillers_index(Xt), fillers_index(Xb), by_d0, by_d01)


def cartesian_failure(p: OperadicFunctor, f: int, _ctx=None):
    """First witness that ``f`` is not ``p``-cartesian, or ``None``.

    A 2-level cell ``f`` is ``p``-cartesian when every inner horn
    ``(f, m, k)`` with ``f`` in the 0-face slot has, over each filler of
    its projection, exactly one filler.  The witness is a triple
    ``(horn, base filler, count)``.
    """
    ctx = _ctx if _ctx is not None else _cartesian_ctx(p)
    Xt, Xb, tfill, bfill, by_d0, by_d01 = ctx
    if not 0 <= f < Xt.cells[2]:
        raise StructureError("cartesianness is asked of a 2-level cell")
    d2f = Xt.d(2, 2, f)
    for m in by_d0.get(Xt.d(2, 0, f), ()):
        for k in by_d01.get((d2f, Xt.d(2, 2, m)), ()):
            base = bfill.get((p(2, f), p(2, m), p(2, k)), ())
            if not base:
                continue
            mine = tfill.get((f, m, k), ())
            for sb in base:
                n = sum(1 for st in mine if p(3, st) == sb)
                if n != 1:
                    return (Horn32(f, m, k), sb, n)
    return None


def is_p_cartesian(p: OperadicFunctor, f: int, _ctx=None) -> bool:
    """Whether the 2-level cell ``f`` of the source is ``p``-cartesian."""
    return cartesian_failure(p, f, _ctx) is None


def _lift_domain(p: OperadicFunctor):
    total, base = p.source, p.target
    over: dict[int, list[int]] = {}
    for t in range(total.C.n_objects):
        over.setdefault(p(1, t), []).append(t)
    keys = []
    for g in range(base.C.n_one):
        for a in over.get(base.C.one_tgt[g], ()):
            for b in over.get(base.phi1[g], ()):
                keys.append((a, b, g))
    return keys


def _cocycle_violations(p: OperadicFunctor, lifts: dict):
    """Source-object mismatches of iterated lifts over base 3-simplices."""
    total, base = p.source, p.target
    Xt, Xb = to_simplicial(total), to_simplicial(base)
    over: dict[int, list[int]] = {}
    for t in range(total.C.n_objects):
        over.setdefault(p(1, t), []).append(t)
    out = []
    for s in range(Xb.cells[3]):
        g = Xb.d(3, 0, s)
        f02 = Xb.d(3, 1, s)
        f01 = Xb.d(3, 2, s)
        bot = Xb.d(3, 3, s)
        for z in over.get(Xb.d(2, 0, g), ()):
            for y in over.get(Xb.d(2, 2, g), ()):
                l1 = lifts.get((z, y, g))
                for x in over.get(Xb.d(2, 2, f01), ()):
                    r1 = lifts.get((y, x, bot))
                    if l1 is None or r1 is None:
                        continue
                    l2 = lifts.get((Xt.d(2, 1, l1), x, f01))
                    r2 = lifts.get((z, Xt.d(2, 1, r1), f02))
                    if l2 is None or r2 is None:
                        continue
                    if Xt.d(2, 1, l2) != Xt.d(2, 1, r2):
                        out.append((s, z, y, x))
    return out


def check_split_fibration(F: SplitFibration) -> ValidationReport:
    """Validate a lift table: functor validity, exact lift domain, lift
    faces, cartesianness, unit and identity lifts, the source-object
    cocycle over base 3-simplices, and surjectivity on components."""
    p = F.projection
    total, base = p.source, p.target
    rep = ValidationReport("split fibration")
    rep.violations.extend(validate_operadic_functor(p).violations)
    Xt = to_simplicial(total)

    keys = _lift_domain(p)
    expected = set(keys)
    for key in keys:
        if key not in F.lifts:
            rep.add("lift domain", (("key", key),), "missing lift")
    for key in F.lifts:
        if key not in expected:
            rep.add("lift domain", (("key", key),), "unexpected key")

    ctx = _cartesian_ctx(p)
    cart_cache: dict[int, bool] = {}
    for key in keys:
        h = F.lifts.get(key)
        if h is None:
            continue
        a, b, g = key
        if p(2, h) != g:
            rep.add("lift base", (("key", key),),
                    f"lift lies over {p(2, h)}")
        if Xt.d(2, 0, h) != a or Xt.d(2, 2, h) != b:
            rep.add("lift faces", (("key", key),),
                    f"faces ({Xt.d(2, 0, h)}, {Xt.d(2, 2, h)})")
        ok = cart_cache.get(h)
        if ok is None:
            ok = cart_cache.setdefault(h, is_p_cartesian(p, h, ctx))
        if not ok:
            rep.add("lift not cartesian", (("key", key), ("cell", h)))

    for x in range(total.C.n_objects):
        key = (total.u_neg1[total.pi[x]], x, base.u0[p(1, x)])
        if F.lifts.get(key) not in (None, total.u0[x]):
            rep.add("unit lift", (("object", x),),
                    f"lift of {key} is not the unit 1-cell")
        key = (x, total.u_neg1[total.phi0[x]], base.C.id1[p(1, x)])
        if F.lifts.get(key) not in (None, total.C.id1[x]):
            rep.add("identity lift", (("object", x),),
                    f"lift of {key} is not the identity")

    for (s, z, y, x) in _cocycle_violations(p, F.lifts):
        rep.add("lift cocycle",
                (("three_cell", s), ("z", z), ("y", y), ("x", x)),
                "iterated lifts have different source objects")

    if set(p.levels[0]) != set(range(base.n_components)):
        rep.add("pi0 surjectivity", (),
                "projection misses a base component")
    return rep


def pi0_iso_check(F: SplitFibration) -> bool:
    """Whether the projection is a bijection on components."""
    lvl0 = F.projection.levels[0]
    return (len(set(lvl0)) == len(lvl0)
            and set(lvl0) == set(range(F.projection.target.n_components)))


def trivial_objects_over_units(F: SplitFibration) -> dict:
    """For each base component, the 1-level cells over its unit object
    that are their own component's unit."""
    p = F.projection
    total, base = p.source, p.target
    out: dict[int, list[int]] = {c: [] for c in range(base.n_components)}
    for t in range(total.C.n_objects):
        if total.u_neg1[total.pi[t]] != t:
            continue
        for c in range(base.n_components):
            if p(1, t) == base.u_neg1[c]:
                out[c].append(t)
    return out


def has_unique_trivial_objects(F: SplitFibration) -> bool:
    """Exactly one trivial object over each base unit object."""
    return all(len(v) == 1 for v in trivial_objects_over_units(F).values())


def find_splitting(p: OperadicFunctor):
    """Deterministic search for a splitting of ``p``.

    Unit and identity lifts are forced; every other key receives the
    first cartesian candidate in ascending cell order.  Returns
    ``(SplitFibration, certificate)`` on success and ``(None,
    certificate)`` when some key has no cartesian lift, a forced lift is
    not admissible, or the assembled table breaks the cocycle; the
    certificate names the first offender and records every key that had
    more than one candidate.
    """
    total, base = p.source, p.target
    Xt = to_simplicial(total)
    cert = Certificate("splitting search")

    forced: dict[tuple, int] = {}
    for x in range(total.C.n_objects):
        k1 = (total.u_neg1[total.pi[x]], x, base.u0[p(1, x)])
        k2 = (x, total.u_neg1[total.phi0[x]], base.C.id1[p(1, x)])
        for key, val in ((k1, total.u0[x]), (k2, total.C.id1[x])):
            if forced.setdefault(key, val) != val:
                cert.fail(f"conflicting forced lifts at {key}")
                return None, cert

    by_key: dict[tuple, list[int]] = {}
    for h in range(Xt.cells[2]):
        by_key.setdefault((Xt.d(2, 0, h), Xt.d(2, 2, h), p(2, h)),
                          []).append(h)

    ctx = _cartesian_ctx(p)
    cart_cache: dict[int, bool] = {}

    def cartesian(h: int) -> bool:
        if h not in cart_cache:
            cart_cache[h] = is_p_cartesian(p, h, ctx)
        return cart_cache[h]

    lifts: dict[tuple, int] = {}
    multiple = []
    for key in sorted(_lift_domain(p)):
        cands = [h for h in by_key.get(key, ()) if cartesian(h)]
        if key in forced:
            if forced[key] not in cands:
                cert.fail(f"forced lift at {key} is not cartesian")
                return None, cert
            lifts[key] = forced[key]
            continue
        if not cands:
            cert.fail(f"no cartesian lift for {key}")
            return None, cert
        lifts[key] = cands[0]
        if len(cands) > 1:
            multiple.append((key, len(cands)))

    if multiple:
        cert.note(f"{len(multiple)} key(s) with several cartesian lifts")
        for key, n in multiple[:5]:
            cert.note(f"  {key}: {n} candidates")
    bad = _cocycle_violations(p, lifts)
    if bad:
        cert.fail(f"cocycle fails at base 3-simplex {bad[0][0]} "
                  f"with objects {bad[0][1:]}")
        return None, cert
    return SplitFibration(p, lifts), cert


# ---------------------------------------------------------------------------
# extraction


def extract_operad(F: SplitFibration) -> CategoricalOperad:
    """Operad over the target read off from a split fibration.

    The fiber category over a base object ``x`` has the 1-level cells
    over ``x`` as objects and the quasibijections over ``1_x`` as
    morphisms, with the reversed orientation of the module docstring;
    multiplication along ``g`` sends objects to the source of their
    lift and morphism pairs to the ``d2`` face of the unique filler over
    the degenerate base 3-simplex ``s0(g)``; the unit of a component is
    its unique trivial object.  ``F`` is assumed to pass
    :func:`check_split_fibration`; cells escaping the construction raise
    :class:`StructureError`.
    """
    p = F.projection
    total, base = p.source, p.target
    Xt, Xb = to_simplicial(total), to_simplicial(base)
    tfill = fillers_index(Xt)
    qb = set(quasibijections(total))

    obj_cells: list[tuple] = [() for _ in range(base.C.n_objects)]
    loc_obj: list[dict] = [{} for _ in range(base.C.n_objects)]
    for t in range(total.C.n_objects):
        x = p(1, t)
        loc_obj[x][t] = len(obj_cells[x])
        obj_cells[x] += (t,)
    mor_cells: list[tuple] = [() for _ in range(base.C.n_objects)]
    loc_mor: list[dict] = [{} for _ in range(base.C.n_objects)]
    for m in range(total.C.n_one):
        x = p(1, total.C.one_src[m])
        if p(2, m) != base.C.id1[x] or m not in qb:
            continue
        loc_mor[x][m] = len(mor_cells[x])
        mor_cells[x] += (m,)

    def fiber_over(x: int) -> FiniteCategory:
        objs, mors = obj_cells[x], mor_cells[x]
        src = tuple(loc_obj[x][total.C.one_tgt[m]] for m in mors)
        tgt = tuple(loc_obj[x][total.C.one_src[m]] for m in mors)
        ident = tuple(
            _lk(loc_mor[x], total.C.id1[t], "fiber identity")
            for t in objs)
        comp = []
        for m2 in mors:
            row = []
            for m1 in mors:
                c = total.C.comp1[m1][m2]
                row.append(-1 if c == -1
                           else _lk(loc_mor[x], c, "fiber composition"))
            comp.append(tuple(row))
        return FiniteCategory(len(objs), src, tgt, ident, tuple(comp))

    fibers = tuple(fiber_over(x) for x in range(base.C.n_objects))

    def lift(a: int, b: int, g: int) -> int:
        return _lk(F.lifts, (a, b, g), "lift table")

    def filler_face(face0: int, face1: int, face3: int, sb: int) -> int:
        mine = [st for st in tfill.get((face0, face1, face3), ())
                if p(3, st) == sb]
        if len(mine) != 1:
            raise StructureError(
                f"extraction needs exactly one filler over {sb}, "
                f"found {len(mine)}")
        return Xt.d(3, 2, mine[0])

    mult_obj, mult_mor = [], []
    for g in range(base.C.n_one):
        xa, xb = base.C.one_tgt[g], base.phi1[g]
        xr = base.C.one_src[g]
        mo_g = tuple(
            tuple(loc_obj[xr][Xt.d(2, 1, lift(a, b, g))]
                  for b in obj_cells[xb])
            for a in obj_cells[xa])
        s0g = Xb.s(2, 0, g)
        mm_g = []
        for ma in mor_cells[xa]:
            row = []
            for mb in mor_cells[xb]:
                a2, a1 = total.C.one_src[ma], total.C.one_tgt[ma]
                b2, b1 = total.C.one_src[mb], total.C.one_tgt[mb]
                face1 = total.C.comp1[ma][lift(a2, b2, g)]
                if face1 == -1:
                    raise StructureError("lift is not composable with "
                                         "the fiber morphism")
                cell = filler_face(lift(a1, b1, g), face1, mb, s0g)
                row.append(_lk(loc_mor[xr], cell,
                               "extracted multiplication"))
            mm_g.append(tuple(row))
        mult_obj.append(mo_g)
        mult_mor.append(tuple(mm_g))

    units = []
    for c in range(base.n_components):
        v = base.u_neg1[c]
        trivial = [t for t in obj_cells[v]
                   if total.u_neg1[total.pi[t]] == t]
        if len(trivial) != 1:
            raise StructureError(
                f"component {c} has {len(trivial)} trivial objects "
                "over its unit")
        units.append(loc_obj[v][trivial[0]])

    Q = operad(base, fibers, mult_obj, mult_mor, units)
    object.__setattr__(Q, "_extraction",
                       ExtractionCells(tuple(obj_cells), tuple(mor_cells)))
    return Q


def extraction_cells(P: CategoricalOperad) -> ExtractionCells:
    """Total-cell origins attached by :func:`extract_operad`."""
    ec = getattr(P, "_extraction", None)
    if ec is None:
        raise StructureError("not an extracted operad")
    return ec


# ---------------------------------------------------------------------------
# round trips


def roundtrip_operad(O: UnaryOperadic2Cat,
                     P: CategoricalOperad) -> Certificate:
    """Certify that extracting the canonical fibration returns ``P``.

    Extraction enumerates each fiber's morphisms in total-cell order,
    which need not match the order in ``P``; the certificate transports
    the extracted tables through the resulting relabeling and then
    demands strict equality.
    """
    cert = Certificate("operad round trip")
    fibration = canonical_fibration(O, P)
    cells = total_cells(fibration.projection.source)
    Q = extract_operad(fibration)
    ec = extraction_cells(Q)

    for x in range(O.C.n_objects):
        for j, t in enumerate(ec.obj_cells[x]):
            if cells.objects[t] != (x, j):
                cert.fail(f"fiber {x}: object {j} came from cell "
                          f"{cells.objects[t]}")
                return cert

    perms = []
    for x in range(O.C.n_objects):
        perm = []
        for m in ec.mor_cells[x]:
            f, b, pp, al = cells.ones[m]
            if f != O.C.id1[x]:
                cert.fail(f"fiber {x}: morphism cell {m} lies over "
                          f"1-cell {f}")
                return cert
            perm.append(al)
        if sorted(perm) != list(range(P.fibers[x].n_mor)):
            cert.fail(f"fiber {x}: extracted morphisms are not in "
                      "bijection with the operad's")
            return cert
        perms.append(perm)

    for x in range(O.C.n_objects):
        Pf, Qf, perm = P.fibers[x], Q.fibers[x], perms[x]
        if Pf.n_objects != Qf.n_objects:
            cert.fail(f"fiber {x}: object counts differ")
            return cert
        for k in range(Qf.n_mor):
            if (Pf.mor_src[perm[k]] != Qf.mor_src[k]
                    or Pf.mor_tgt[perm[k]] != Qf.mor_tgt[k]):
                cert.fail(f"fiber {x}: morphism {k} changes type")
                return cert
        for a in range(Qf.n_objects):
            if perm[Qf.identity[a]] != Pf.identity[a]:
                cert.fail(f"fiber {x}: identity of {a} differs")
                return cert
        for k2 in range(Qf.n_mor):
            for k1 in range(Qf.n_mor):
                q = Qf.comp[k2][k1]
                r = Pf.comp[perm[k2]][perm[k1]]
                if (q == -1) != (r == -1) or (q != -1 and perm[q] != r):
                    cert.fail(f"fiber {x}: composition at ({k2}, {k1}) "
                              "differs")
                    return cert
        if perm != list(range(len(perm))):
            cert.note(f"fiber {x}: morphisms relabeled by {tuple(perm)}")

    for g in range(O.C.n_one):
        sA = perms[O.C.one_tgt[g]]
        sB = perms[O.phi1[g]]
        sR = perms[O.C.one_src[g]]
        if Q.mult_obj[g] != P.mult_obj[g]:
            cert.fail(f"multiplication objects differ over 1-cell {g}")
            return cert
        for m in range(len(Q.mult_mor[g])):
            for n in range(len(Q.mult_mor[g][m])):
                if sR[Q.mult_mor[g][m][n]] != P.mult_mor[g][sA[m]][sB[n]]:
                    cert.fail(f"multiplication morphisms differ over "
                              f"1-cell {g} at ({m}, {n})")
                    return cert

    if tuple(Q.units) != tuple(P.units):
        cert.fail("units differ")
        return cert
    cert.note("tables agree after the canonical relabeling")
    return cert


def roundtrip_fibration(F: SplitFibration) -> Certificate:
    """Certify that ``F`` is isomorphic to the canonical fibration of its
    extracted operad.

    Builds the comparison functor cell by cell, certifies that it is a
    levelwise isomorphism of the assembled sets, that it commutes with
    the two projections, and that it carries the lift table of ``F`` to
    the canonical lifts.
    """
    from .simplicial import certify_levelwise_iso

    cert = Certificate("fibration round trip")
    p = F.projection
    total, base = p.source, p.target
    Xt, Xb = to_simplicial(total), to_simplicial(base)
    try:
        Q = extract_operad(F)
        ec = extraction_cells(Q)
        total2, proj2 = grothendieck(base, Q)
        cells2 = total_cells(total2)
        NT2 = total2.nerve

        loc_obj: list[dict] = [{} for _ in range(base.C.n_objects)]
        for x in range(base.C.n_objects):
            for j, t in enumerate(ec.obj_cells[x]):
                loc_obj[x][t] = j
        loc_mor: list[dict] = [{} for _ in range(base.C.n_objects)]
        for x in range(base.C.n_objects):
            for j, m in enumerate(ec.mor_cells[x]):
                loc_mor[x][m] = j

        inv0 = [0] * base.n_components
        for tc2 in range(total2.n_components):
            inv0[proj2.levels[0][tc2]] = tc2
        lvl0 = tuple(inv0[c] for c in p.levels[0])

        lvl1 = tuple(
            _lk(cells2.obj_index, (p(1, t), loc_obj[p(1, t)][t]),
                "comparison at level 1")
            for t in range(total.C.n_objects))

        tfill = fillers_index(Xt)

        def fiber_part(m: int) -> int:
            """Local index of the fiber morphism carried by ``m``."""
            f = p(2, m)
            a = Xt.d(2, 0, m)
            b = Xt.d(2, 2, m)
            horn = (_lk(F.lifts, (a, b, f), "lift table"), m,
                    total.C.id1[b])
            sb = Xb.s(2, 0, f)
            mine = [st for st in tfill.get(horn, ()) if p(3, st) == sb]
            if len(mine) != 1:
                raise StructureError(
                    f"cell {m} has {len(mine)} fillers against its lift")
            cell = Xt.d(3, 2, mine[0])
            return _lk(loc_mor[base.C.one_src[f]], cell,
                       "fiber morphism of a 1-cell")

        lvl2 = tuple(
            _lk(cells2.one_index,
                (p(2, m),
                 loc_obj[base.C.one_tgt[p(2, m)]][Xt.d(2, 0, m)],
                 loc_obj[base.phi1[p(2, m)]][Xt.d(2, 2, m)],
                 fiber_part(m)),
                "comparison at level 2")
            for m in range(total.C.n_one))

        NT = total.nerve

        lvl3 = []
        for t, (F01, F12, G) in enumerate(NT.triangles):
            rho = base.nerve.triangles[p(3, t)][2]
            gamma = cells2.ones[lvl2[total.phi2[t]]][3]
            G2 = _lk(cells2.two_index,
                     (lvl2[total.C.two_src[G]], lvl2[total.C.two_tgt[G]],
                      rho, gamma),
                     "comparison at level 3")
            lvl3.append(_lk(NT2.tri_index, (lvl2[F01], lvl2[F12], G2),
                            "comparison at level 3"))
        lvl3 = tuple(lvl3)

        lvl4 = tuple(
            _lk(NT2.tet_index,
                (lvl3[D0], lvl3[D1], lvl3[D2], lvl3[D3]),
                "comparison at level 4")
            for (D0, D1, D2, D3) in NT.tetra)
    except (StructureError, KeyError) as e:
        cert.fail(str(e))
        return cert

    Xi = OperadicFunctor(total, total2, (lvl0, lvl1, lvl2, lvl3, lvl4))
    iso = certify_levelwise_iso(Xi.as_ssetmap())
    if not iso.ok:
        cert.fail("comparison map: " + iso.violations[0].render())
        return cert
    cert.note("comparison map is a levelwise isomorphism")

    for k in range(5):
        for c in range(to_simplicial(total).cells[k]):
            if proj2(k, Xi(k, c)) != p(k, c):
                cert.fail(f"projections disagree at level {k} cell {c}")
                return cert
    cert.note("comparison map commutes with the projections")

    for (a, b, g), h in F.lifts.items():
        want = cells2.lifts.get((Xi(1, a), Xi(1, b), g))
        if want != Xi(2, h):
            cert.fail(f"lift of {(a, b, g)} is not carried to the "
                      "canonical lift")
            return cert
    cert.note("lift table is carried to the canonical lifts")
    return cert
