"""Finite categories, strict 2-categories and strict monoidal categories.

All composition tables are dense integer matrices with ``-1`` marking
"undefined" (non-composable).  Validators check typing and every axiom
instance exhaustively; constructions (nerve, delooping, lax slices) assume
valid input and are themselves certified by the validators downstream.

Conventions fixed once here:

* ``comp[g][f]`` is the composite *g after f* (defined when ``tgt f = src g``).
* For a 1-cell ``q : x -> y`` of a nerve, ``d_0 q = y`` (target) and
  ``d_1 q = x`` (source).
* A 2-simplex of the nerve of a 2-category is ``(f01, f12, alpha)`` with
  ``alpha : f12 . f01 => f02``; its faces are ``d_0 = f12``,
  ``d_1 = f02 = tgt(alpha)``, ``d_2 = f01``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import StructureError
from .report import ValidationReport, merge
from .simplicial import TruncatedSimplicialSet, SSetMap, coskeleton_extend, decalage_top


def _dense(table) -> tuple:
    return tuple(tuple(row) for row in table)


# ---------------------------------------------------------------------------
# finite categories


@dataclass(frozen=True)
class FiniteCategory:
    """A finite category: objects ``0..n-1`` and indexed morphisms."""

    n_objects: int
    mor_src: tuple[int, ...]
    mor_tgt: tuple[int, ...]
    identity: tuple[int, ...]
    comp: tuple  # comp[g][f] = g . f, -1 when not composable

    def __post_init__(self):
        n, m = self.n_objects, len(self.mor_src)
        if len(self.mor_tgt) != m or len(self.identity) != n:
            raise StructureError("category table lengths disagree")
        if any(not 0 <= v < n for v in self.mor_src + self.mor_tgt):
            raise StructureError("morphism endpoint out of range")
        if any(not 0 <= v < m for v in self.identity):
            raise StructureError("identity index out of range")
        if len(self.comp) != m or any(len(r) != m for r in self.comp):
            raise StructureError("composition table must be n_mor x n_mor")
        if any(not -1 <= v < m for r in self.comp for v in r):
            raise StructureError("composition entry out of range")

    @property
    def n_mor(self) -> int:
        return len(self.mor_src)

    def compose(self, g: int, f: int) -> int:
        r = self.comp[g][f]
        if r == -1:
            raise StructureError(f"morphisms {g} after {f} not composable")
        return r

    def hom(self, a: int, b: int) -> tuple[int, ...]:
        return tuple(i for i in range(self.n_mor)
                     if self.mor_src[i] == a and self.mor_tgt[i] == b)


def category(n_objects, mor_src, mor_tgt, identity, comp) -> FiniteCategory:
    return FiniteCategory(n_objects, tuple(mor_src), tuple(mor_tgt),
                          tuple(identity), _dense(comp))


def validate_category(C: FiniteCategory) -> ValidationReport:
    rep = ValidationReport("category")
    for a in range(C.n_objects):
        i = C.identity[a]
        if C.mor_src[i] != a or C.mor_tgt[i] != a:
            rep.add("identity typing", (("object", a),))
    for g in range(C.n_mor):
        for f in range(C.n_mor):
            r = C.comp[g][f]
            composable = C.mor_tgt[f] == C.mor_src[g]
            if (r != -1) != composable:
                rep.add("composability", (("g", g), ("f", f)))
            elif r != -1 and (C.mor_src[r] != C.mor_src[f]
                              or C.mor_tgt[r] != C.mor_tgt[g]):
                rep.add("composite typing", (("g", g), ("f", f)))
    for f in range(C.n_mor):
        if C.comp[f][C.identity[C.mor_src[f]]] != f:
            rep.add("right unit", (("morphism", f),))
        if C.comp[C.identity[C.mor_tgt[f]]][f] != f:
            rep.add("left unit", (("morphism", f),))
    for h in range(C.n_mor):
        for g in range(C.n_mor):
            if C.comp[h][g] == -1:
                continue
            for f in range(C.n_mor):
                if C.comp[g][f] == -1:
                    continue
                if C.comp[C.comp[h][g]][f] != C.comp[h][C.comp[g][f]]:
                    rep.add("associativity", (("h", h), ("g", g), ("f", f)))
    return rep


# ---------------------------------------------------------------------------
# strict 2-categories


@dataclass(frozen=True)
class Finite2Category:
    """A finite strict 2-category, all tables explicit.

    ``vcomp[b][a]`` is vertical composition *b after a*; ``hcomp2[b][a]``
    is the horizontal composite ``b . a`` of 2-cells where ``a`` sits over
    the earlier 1-cells.
    """

    n_objects: int
    one_src: tuple[int, ...]
    one_tgt: tuple[int, ...]
    two_src: tuple[int, ...]  # 2-cell -> source 1-cell
    two_tgt: tuple[int, ...]  # 2-cell -> target 1-cell
    id1: tuple[int, ...]      # object -> identity 1-cell
    id2: tuple[int, ...]      # 1-cell -> identity 2-cell
    comp1: tuple              # comp1[g][f] = g . f, -1 when not composable
    vcomp: tuple              # vcomp[b][a] = b after a, -1 otherwise
    hcomp2: tuple             # hcomp2[b][a] = b . a horizontally, -1 otherwise

    def __post_init__(self):
        n1, n2 = len(self.one_src), len(self.two_src)
        if len(self.one_tgt) != n1 or len(self.two_tgt) != n2:
            raise StructureError("cell table lengths disagree")
        if len(self.id1) != self.n_objects or len(self.id2) != n1:
            raise StructureError("identity table lengths disagree")
        for tab, size in ((self.comp1, n1), (self.vcomp, n2), (self.hcomp2, n2)):
            if len(tab) != size or any(len(r) != size for r in tab):
                raise StructureError("composition table has wrong shape")
            if any(not -1 <= v < size for r in tab for v in r):
                raise StructureError("composition entry out of range")

    @property
    def n_one(self) -> int:
        return len(self.one_src)

    @property
    def n_two(self) -> int:
        return len(self.two_src)

    def compose1(self, g: int, f: int) -> int:
        r = self.comp1[g][f]
        if r == -1:
            raise StructureError(f"1-cells {g} after {f} not composable")
        return r

    def vcompose(self, b: int, a: int) -> int:
        r = self.vcomp[b][a]
        if r == -1:
            raise StructureError(f"2-cells {b} after {a} not composable")
        return r

    def hcompose(self, b: int, a: int) -> int:
        r = self.hcomp2[b][a]
        if r == -1:
            raise StructureError(f"2-cells {b} beside {a} not composable")
        return r

    def hom2(self, f: int, g: int) -> tuple[int, ...]:
        """2-cells f => g."""
        return tuple(t for t in range(self.n_two)
                     if self.two_src[t] == f and self.two_tgt[t] == g)


def as_2category(C: FiniteCategory) -> Finite2Category:
    """Locally discrete 2-category: one identity 2-cell per morphism."""
    m = C.n_mor
    hcomp2 = tuple(tuple(C.comp[b][a] for a in range(m)) for b in range(m))
    vcomp = tuple(tuple(b if a == b else -1 for a in range(m)) for b in range(m))
    return Finite2Category(
        C.n_objects, C.mor_src, C.mor_tgt,
        tuple(range(m)), tuple(range(m)),
        C.identity, tuple(range(m)),
        C.comp, vcomp, hcomp2)


def two_category(n_objects, one_src, one_tgt, two_src, two_tgt,
                 id1, id2, comp1, vcomp, hcomp2) -> Finite2Category:
    return Finite2Category(n_objects, tuple(one_src), tuple(one_tgt),
                           tuple(two_src), tuple(two_tgt), tuple(id1),
                           tuple(id2), _dense(comp1), _dense(vcomp),
                           _dense(hcomp2))


def validate_2category(K: Finite2Category) -> ValidationReport:
    """Exhaustive check of the strict 2-category axioms."""
    rep = ValidationReport("2-category")
    n1, n2 = K.n_one, K.n_two
    for a in range(K.n_objects):
        f = K.id1[a]
        if K.one_src[f] != a or K.one_tgt[f] != a:
            rep.add("identity 1-cell typing", (("object", a),))
    for f in range(n1):
        t = K.id2[f]
        if K.two_src[t] != f or K.two_tgt[t] != f:
            rep.add("identity 2-cell typing", (("one_cell", f),))
    for t in range(n2):
        f, g = K.two_src[t], K.two_tgt[t]
        if K.one_src[f] != K.one_src[g] or K.one_tgt[f] != K.one_tgt[g]:
            rep.add("2-cell endpoints parallel", (("two_cell", t),))
    # 1-cell composition: definedness, typing, units, associativity
    for g in range(n1):
        for f in range(n1):
            r = K.comp1[g][f]
            composable = K.one_tgt[f] == K.one_src[g]
            if (r != -1) != composable:
                rep.add("1-cell composability", (("g", g), ("f", f)))
            elif r != -1 and (K.one_src[r] != K.one_src[f]
                              or K.one_tgt[r] != K.one_tgt[g]):
                rep.add("1-cell composite typing", (("g", g), ("f", f)))
    for f in range(n1):
        if K.comp1[f][K.id1[K.one_src[f]]] != f or K.comp1[K.id1[K.one_tgt[f]]][f] != f:
            rep.add("1-cell unit", (("one_cell", f),))
    for h in range(n1):
        for g in range(n1):
            if K.comp1[h][g] == -1:
                continue
            for f in range(n1):
                if K.comp1[g][f] == -1:
                    continue
                if K.comp1[K.comp1[h][g]][f] != K.comp1[h][K.comp1[g][f]]:
                    rep.add("1-cell associativity", (("h", h), ("g", g), ("f", f)))
    # hom-categories: vertical structure
    for b in range(n2):
        for a in range(n2):
            r = K.vcomp[b][a]
            composable = K.two_tgt[a] == K.two_src[b]
            if (r != -1) != composable:
                rep.add("vertical composability", (("b", b), ("a", a)))
            elif r != -1 and (K.two_src[r] != K.two_src[a]
                              or K.two_tgt[r] != K.two_tgt[b]):
                rep.add("vertical composite typing", (("b", b), ("a", a)))
    for a in range(n2):
        if (K.vcomp[a][K.id2[K.two_src[a]]] != a
                or K.vcomp[K.id2[K.two_tgt[a]]][a] != a):
            rep.add("vertical unit", (("two_cell", a),))
    vpairs = [(b, a) for b in range(n2) for a in range(n2)
              if K.vcomp[b][a] != -1]
    for c in range(n2):
        for b, a in vpairs:
            if K.vcomp[c][b] == -1:
                continue
            if K.vcomp[K.vcomp[c][b]][a] != K.vcomp[c][K.vcomp[b][a]]:
                rep.add("vertical associativity", (("c", c), ("b", b), ("a", a)))
    # horizontal composition of 2-cells
    def hcomposable(b, a):
        return K.one_tgt[K.two_src[a]] == K.one_src[K.two_src[b]]

    for b in range(n2):
        for a in range(n2):
            r = K.hcomp2[b][a]
            if (r != -1) != hcomposable(b, a):
                rep.add("horizontal composability", (("b", b), ("a", a)))
            elif r != -1:
                if (K.two_src[r] != K.comp1[K.two_src[b]][K.two_src[a]]
                        or K.two_tgt[r] != K.comp1[K.two_tgt[b]][K.two_tgt[a]]):
                    rep.add("horizontal composite typing", (("b", b), ("a", a)))
    for g in range(n1):
        for f in range(n1):
            if K.comp1[g][f] != -1:
                if K.hcomp2[K.id2[g]][K.id2[f]] != K.id2[K.comp1[g][f]]:
                    rep.add("horizontal identity", (("g", g), ("f", f)))
    for a in range(n2):
        x = K.one_src[K.two_src[a]]
        y = K.one_tgt[K.two_src[a]]
        if (K.hcomp2[K.id2[K.id1[y]]][a] != a
                or K.hcomp2[a][K.id2[K.id1[x]]] != a):
            rep.add("horizontal unit", (("two_cell", a),))
    hpairs = [(b, a) for b in range(n2) for a in range(n2)
              if K.hcomp2[b][a] != -1]
    for c in range(n2):
        for b, a in hpairs:
            if K.hcomp2[c][b] == -1:
                continue
            if K.hcomp2[K.hcomp2[c][b]][a] != K.hcomp2[c][K.hcomp2[b][a]]:
                rep.add("horizontal associativity", (("c", c), ("b", b), ("a", a)))
    # interchange: (b2 . b1) beside (a2 . a1) = (b2 beside a2) . (b1 beside a1)
    for a2, a1 in vpairs:
        for b2, b1 in vpairs:
            if not hcomposable(b1, a1):
                continue
            lhs = K.hcomp2[K.vcomp[b2][b1]][K.vcomp[a2][a1]]
            rhs = K.vcomp[K.hcomp2[b2][a2]][K.hcomp2[b1][a1]]
            if lhs != rhs:
                rep.add("interchange",
                        (("vertical", (b2, b1)), ("beside", (a2, a1))))
    return rep


# ---------------------------------------------------------------------------
# strict monoidal categories


@dataclass(frozen=True)
class StrictMonCat:
    """Strict monoidal category: a category with total tensor tables."""

    cat: FiniteCategory
    unit_obj: int
    tensor_obj: tuple  # tensor_obj[a][b] = a (x) b
    tensor_mor: tuple  # tensor_mor[m][n] = m (x) n

    def __post_init__(self):
        n, m = self.cat.n_objects, self.cat.n_mor
        if not 0 <= self.unit_obj < n:
            raise StructureError("unit object out of range")
        if len(self.tensor_obj) != n or any(len(r) != n for r in self.tensor_obj):
            raise StructureError("tensor_obj must be n_obj x n_obj")
        if len(self.tensor_mor) != m or any(len(r) != m for r in self.tensor_mor):
            raise StructureError("tensor_mor must be n_mor x n_mor")

    def tobj(self, a: int, b: int) -> int:
        return self.tensor_obj[a][b]

    def tmor(self, m: int, n: int) -> int:
        return self.tensor_mor[m][n]


def moncat(cat: FiniteCategory, unit_obj, tensor_obj, tensor_mor) -> StrictMonCat:
    return StrictMonCat(cat, unit_obj, _dense(tensor_obj), _dense(tensor_mor))


def validate_moncat(M: StrictMonCat) -> ValidationReport:
    rep = merge("monoidal category", validate_category(M.cat))
    C = M.cat
    n, m = C.n_objects, C.n_mor
    for f in range(m):
        for g in range(m):
            r = M.tensor_mor[f][g]
            if (C.mor_src[r] != M.tensor_obj[C.mor_src[f]][C.mor_src[g]]
                    or C.mor_tgt[r] != M.tensor_obj[C.mor_tgt[f]][C.mor_tgt[g]]):
                rep.add("tensor typing", (("f", f), ("g", g)))
    for a in range(n):
        for b in range(n):
            if M.tensor_mor[C.identity[a]][C.identity[b]] != C.identity[M.tensor_obj[a][b]]:
                rep.add("tensor preserves identities", (("a", a), ("b", b)))
    for f2 in range(m):
        for f1 in range(m):
            if C.comp[f2][f1] == -1:
                continue
            for g2 in range(m):
                for g1 in range(m):
                    if C.comp[g2][g1] == -1:
                        continue
                    lhs = M.tensor_mor[C.comp[f2][f1]][C.comp[g2][g1]]
                    rhs = C.comp[M.tensor_mor[f2][g2]][M.tensor_mor[f1][g1]]
                    if lhs != rhs:
                        rep.add("tensor preserves composition",
                                (("f", (f2, f1)), ("g", (g2, g1))))
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if M.tensor_obj[M.tensor_obj[a][b]][c] != M.tensor_obj[a][M.tensor_obj[b][c]]:
                    rep.add("tensor associativity (objects)",
                            (("a", a), ("b", b), ("c", c)))
    for f in range(m):
        for g in range(m):
            for h in range(m):
                if (M.tensor_mor[M.tensor_mor[f][g]][h]
                        != M.tensor_mor[f][M.tensor_mor[g][h]]):
                    rep.add("tensor associativity (morphisms)",
                            (("f", f), ("g", g), ("h", h)))
    for a in range(n):
        if (M.tensor_obj[M.unit_obj][a] != a or M.tensor_obj[a][M.unit_obj] != a):
            rep.add("tensor unit (objects)", (("a", a),))
    i = C.identity[M.unit_obj]
    for f in range(m):
        if M.tensor_mor[i][f] != f or M.tensor_mor[f][i] != f:
            rep.add("tensor unit (morphisms)", (("f", f),))
    return rep


def deloop(M: StrictMonCat) -> Finite2Category:
    """One-object 2-category with hom-category M and composition = tensor."""
    C = M.cat
    n1, n2 = C.n_objects, C.n_mor
    return Finite2Category(
        1,
        (0,) * n1, (0,) * n1,
        C.mor_src, C.mor_tgt,
        (M.unit_obj,), C.identity,
        M.tensor_obj, C.comp, M.tensor_mor)


# ---------------------------------------------------------------------------
# Duskin nerve


@dataclass(frozen=True)
class NerveData:
    """Nerve of a strict 2-category with its cell decodings.

    Level 0 = objects, level 1 = 1-cells, level 2 = ``triangles``
    (encoded ``(f01, f12, alpha)``), level 3 = ``tetra`` (quadruples of
    triangle indices ``(d0, d1, d2, d3)`` satisfying the pasting equation).
    """

    tss: TruncatedSimplicialSet
    triangles: tuple
    tri_index: dict
    tetra: tuple
    tet_index: dict


def nerve_data(K: Finite2Category) -> NerveData:
    triangles = []
    for f01 in range(K.n_one):
        for f12 in range(K.n_one):
            c = K.comp1[f12][f01]
            if c == -1:
                continue
            for alpha in range(K.n_two):
                if K.two_src[alpha] == c:
                    triangles.append((f01, f12, alpha))
    triangles.sort()
    tri_index = {t: i for i, t in enumerate(triangles)}

    def tri_faces(t):
        f01, f12, alpha = t
        return (f12, K.two_tgt[alpha], f01)

    by_legs: dict[tuple, list[int]] = {}
    by_leg0: dict[int, list[int]] = {}
    for i, t in enumerate(triangles):
        by_legs.setdefault((t[0], t[1]), []).append(i)
        by_leg0.setdefault(t[0], []).append(i)

    def pasting_holds(t0, t1, t2, t3):
        a123, a023, a013, a012 = (triangles[t0][2], triangles[t1][2],
                                  triangles[t2][2], triangles[t3][2])
        f01 = triangles[t3][0]
        f23 = triangles[t0][1]
        lhs = K.vcomp[a013][K.hcomp2[a123][K.id2[f01]]]
        rhs = K.vcomp[a023][K.hcomp2[K.id2[f23]][a012]]
        return lhs != -1 and lhs == rhs

    tetra = []
    for t3i, t3 in enumerate(triangles):
        f01, f12, _ = t3
        f02 = K.two_tgt[t3[2]]
        for t0i in by_leg0.get(f12, ()):
            t0 = triangles[t0i]
            f23 = t0[1]
            f13 = K.two_tgt[t0[2]]
            for t2i in by_legs.get((f01, f13), ()):
                f03 = K.two_tgt[triangles[t2i][2]]
                for t1i in by_legs.get((f02, f23), ()):
                    if K.two_tgt[triangles[t1i][2]] != f03:
                        continue
                    if pasting_holds(t0i, t1i, t2i, t3i):
                        tetra.append((t0i, t1i, t2i, t3i))
    tetra.sort()
    tet_index = {q: i for i, q in enumerate(tetra)}

    n_obj, n1 = K.n_objects, K.n_one
    face1 = (K.one_tgt, K.one_src)
    degen0 = (K.id1,)
    face2 = tuple(tuple(tri_faces(t)[i] for t in triangles) for i in range(3))
    s0_1 = tuple(tri_index[(K.id1[K.one_src[f]], f, K.id2[f])] for f in range(n1))
    s1_1 = tuple(tri_index[(f, K.id1[K.one_tgt[f]], K.id2[f])] for f in range(n1))
    face3 = tuple(tuple(q[i] for q in tetra) for i in range(4))

    lower = TruncatedSimplicialSet(
        2, (n_obj, n1, len(triangles)),
        ((), face1, face2),
        (degen0, (s0_1, s1_1), ()))

    degen2 = []
    for j in range(3):
        col = []
        for y in range(len(triangles)):
            shell = []
            for i in range(4):
                if i == j or i == j + 1:
                    shell.append(y)
                elif i < j:
                    shell.append(lower.s(1, j - 1, lower.d(2, i, y)))
                else:
                    shell.append(lower.s(1, j, lower.d(2, i - 1, y)))
            sh = tuple(shell)
            if sh not in tet_index:
                raise StructureError("nerve degeneracy missing (invalid 2-category?)")
            col.append(tet_index[sh])
        degen2.append(tuple(col))

    tss = TruncatedSimplicialSet(
        3, (n_obj, n1, len(triangles), len(tetra)),
        ((), face1, face2, face3),
        (degen0, (s0_1, s1_1), tuple(degen2), ()))
    return NerveData(tss, tuple(triangles), tri_index, tuple(tetra), tet_index)


def duskin_nerve(K: Finite2Category) -> TruncatedSimplicialSet:
    """3-truncated nerve: objects, 1-cells, lax triangles, pasting quadruples."""
    return nerve_data(K).tss


# ---------------------------------------------------------------------------
# lax slices


@dataclass(frozen=True)
class SliceData:
    """Sum of lax slices of a 2-category, with cell decodings.

    Objects are the 1-cells of ``K`` (same indices).  A 1-cell ``h -> g``
    (``h, g`` sharing a codomain) is ``(h, g, f, alpha)`` with
    ``alpha : g . f => h``; a 2-cell is ``(m1, m2, gamma)`` with
    ``gamma : f(m1) => f(m2)`` satisfying
    ``alpha(m2) . (id_g o gamma) = alpha(m1)``.
    """

    cat: Finite2Category
    one_cells: tuple
    one_index: dict
    two_cells: tuple
    two_index: dict


def lax_slice_sum(K: Finite2Category) -> SliceData:
    ones = []
    for h in range(K.n_one):
        for g in range(K.n_one):
            if K.one_tgt[h] != K.one_tgt[g]:
                continue
            for f in range(K.n_one):
                c = K.comp1[g][f]
                if c == -1 or K.one_src[f] != K.one_src[h]:
                    continue
                for alpha in range(K.n_two):
                    if K.two_src[alpha] == c and K.two_tgt[alpha] == h:
                        ones.append((h, g, f, alpha))
    ones.sort()
    one_index = {c: i for i, c in enumerate(ones)}

    twos = []
    for i1, m1 in enumerate(ones):
        h, g, f1, a1 = m1
        for i2, m2 in enumerate(ones):
            if m2[0] != h or m2[1] != g:
                continue
            f2, a2 = m2[2], m2[3]
            for gamma in range(K.n_two):
                if K.two_src[gamma] != f1 or K.two_tgt[gamma] != f2:
                    continue
                if K.vcomp[a2][K.hcomp2[K.id2[g]][gamma]] == a1:
                    twos.append((i1, i2, gamma))
    twos.sort()
    two_index = {c: i for i, c in enumerate(twos)}

    n1, n2 = len(ones), len(twos)
    one_src = tuple(c[0] for c in ones)
    one_tgt = tuple(c[1] for c in ones)
    two_src = tuple(c[0] for c in twos)
    two_tgt = tuple(c[1] for c in twos)
    id1 = tuple(one_index[(h, h, K.id1[K.one_src[h]], K.id2[h])]
                for h in range(K.n_one))
    id2 = tuple(two_index[(m, m, K.id2[ones[m][2]])] for m in range(n1))

    comp1 = [[-1] * n1 for _ in range(n1)]
    for i1, m1 in enumerate(ones):          # m1 : h -> g
        h, g, f1, a1 = m1
        for i2, m2 in enumerate(ones):      # m2 : g -> k
            if m2[0] != g:
                continue
            k, f2, a2 = m2[1], m2[2], m2[3]
            f = K.comp1[f2][f1]
            alpha = K.vcomp[a1][K.hcomp2[a2][K.id2[f1]]]
            comp1[i2][i1] = one_index[(h, k, f, alpha)]

    vcomp = [[-1] * n2 for _ in range(n2)]
    for j1, (ma, mb, gamma1) in enumerate(twos):
        for j2, (mc, md, gamma2) in enumerate(twos):
            if mc != mb:
                continue
            vcomp[j2][j1] = two_index[(ma, md, K.vcomp[gamma2][gamma1])]

    hcomp2 = [[-1] * n2 for _ in range(n2)]
    for j1, (m1, m2, gamma) in enumerate(twos):         # over h -> g
        for j2, (m1p, m2p, delta) in enumerate(twos):   # over g -> k
            if ones[m1p][0] != ones[m1][1]:
                continue
            key = (comp1[m1p][m1], comp1[m2p][m2], K.hcomp2[delta][gamma])
            if key not in two_index:
                raise StructureError("slice horizontal composite missing "
                                     "(invalid 2-category?)")
            hcomp2[j2][j1] = two_index[key]

    cat = Finite2Category(K.n_one, one_src, one_tgt, two_src, two_tgt,
                          id1, id2, _dense(comp1), _dense(vcomp), _dense(hcomp2))
    return SliceData(cat, tuple(ones), one_index, tuple(twos), two_index)


# ---------------------------------------------------------------------------
# the decalage / slice-nerve comparison


def extended_nerve(K: Finite2Category) -> tuple[NerveData, TruncatedSimplicialSet]:
    """Nerve data plus its coskeletal level-4 extension."""
    N = nerve_data(K)
    return N, coskeleton_extend(N.tss, 3)


@dataclass(frozen=True)
class DecComparison:
    """All the data behind the decalage / slice-nerve comparison."""

    nerve: NerveData                    # nerve of K
    extension: TruncatedSimplicialSet   # its coskeletal level-4 extension
    slice: SliceData                    # lax-slice sum of K
    slice_nerve: NerveData              # nerve of the slice
    iso: SSetMap                        # dec(extension) -> slice nerve


def dec_comparison(K: Finite2Category) -> DecComparison:
    """The comparison map ``dec(nerve K) -> nerve(lax_slice_sum K)``.

    The source of ``iso`` is the top décalage of the level-4 (coskeletal)
    extension of the nerve of ``K``; the target is the nerve of the
    lax-slice sum.  The map is a levelwise bijection commuting with all
    faces and degeneracies; callers certify this with
    :func:`opcat.simplicial.certify_levelwise_iso`.
    """
    N, X = extended_nerve(K)
    dec = decalage_top(X)
    SD = lax_slice_sum(K)
    ND = nerve_data(SD.cat)

    m0 = tuple(range(K.n_one))

    def tri_image(t: int) -> int:
        f01, f12, alpha = N.triangles[t]
        f02 = K.two_tgt[alpha]
        return SD.one_index[(f02, f12, f01, alpha)]

    m1 = tuple(tri_image(t) for t in range(len(N.triangles)))

    def tet_image(q: int) -> int:
        t0, t1, t2, t3 = N.tetra[q]
        F01 = tri_image(t2)
        F12 = tri_image(t0)
        F02 = tri_image(t1)
        inner = SD.two_index[(SD.cat.comp1[F12][F01], F02, N.triangles[t3][2])]
        return ND.tri_index[(F01, F12, inner)]

    m2 = tuple(tet_image(q) for q in range(len(N.tetra)))

    m3 = []
    for s in range(X.cells[4]):
        quad = tuple(m2[X.d(4, i, s)] for i in range(4))
        m3.append(ND.tet_index[quad])

    iso = SSetMap(dec, ND.tss, (m0, m1, m2, tuple(m3)))
    return DecComparison(N, X, SD, ND, iso)


def dec_nerve_iso(K: Finite2Category) -> SSetMap:
    """Shorthand for ``dec_comparison(K).iso``."""
    return dec_comparison(K).iso
