"""Free strict monoidal categories on truncated simplicial shapes.

A :class:`MonPresentation` lists object letters, typed morphism
generators, and relations between formal morphism terms.  Every
3-truncated simplicial set carries a canonical presentation
(:func:`phi_tr3`): its nondegenerate 1-cells are the letters, its
nondegenerate 2- and 3-cells are the generators, and each nondegenerate
3-cell imposes one relation equating its arity-3 generator with the two
2-stage expansions through its faces.  The standard simplices give the
primordial examples (:func:`phi0`).

In the other direction, every strict monoidal category ``M`` has a
3-truncated nerve of its one-object delooping (:func:`psi`).  The two
constructions are adjoint at this truncation level: assignments out of
``phi_tr3(X)`` into ``M`` correspond exactly to simplicial maps
``X -> psi(M)``.  :func:`adjunction_check` certifies this on finite
instances by enumerating both sides (:func:`enumerate_ssetmaps`,
:func:`hom_moncat`) and constructing the two mutually inverse
comparisons explicitly.

Equality of morphism terms in the free monoidal category is decided by
:func:`presentation_equal` via bounded congruence closure: breadth-first
exploration of the rewrite class of each term slot, with an explicit
``UndecidedAtBound`` outcome when the bound cuts the search off.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from itertools import permutations, product

from .errors import StructureError, UndecidedAtBound, UnsupportedPresentation
from .report import BijectionCertificate
from .simplicial import SSetMap, TruncatedSimplicialSet, validate_ssetmap
from .twocat import NerveData, StrictMonCat, deloop, nerve_data

# ---------------------------------------------------------------------------
# presentations and morphism terms


@dataclass(frozen=True)
class MonGenerator:
    """Morphism generator typed by letter indices: ``inputs -> output``.

    ``inputs`` has up to three letters; ``output`` is one letter or empty
    (the tensor unit, which absorbs degenerate cells).
    """

    name: str
    inputs: tuple
    output: tuple

    def __post_init__(self):
        object.__setattr__(self, "inputs", tuple(self.inputs))
        object.__setattr__(self, "output", tuple(self.output))
        if len(self.inputs) > 3:
            raise StructureError(f"generator {self.name} has arity > 3")
        if len(self.output) > 1:
            raise StructureError(
                f"generator {self.name} has more than one output letter")


@dataclass(frozen=True)
class Term:
    """Formal morphism tree over a presentation.

    A *leaf* (``letter`` set) is the identity wire on one letter.  A
    *generator node* (``gen`` set) applies that generator to the wires
    produced by its children, whose outputs must concatenate to exactly
    the generator's input letters.  A node with neither field set is a
    bare juxtaposition of its children (used by degenerate collapses).
    """

    gen: int | None = None
    letter: int | None = None
    children: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        if self.gen is not None and self.letter is not None:
            raise StructureError("a term is a leaf or a node, not both")
        if self.letter is not None and self.children:
            raise StructureError("a leaf term has no children")


def leaf(letter: int) -> Term:
    return Term(letter=letter)


def node(gen: int, *children: Term) -> Term:
    return Term(gen=gen, children=children)


def juxtapose(*children: Term) -> Term:
    return Term(children=children)


@dataclass(frozen=True)
class MonPresentation:
    """Presentation of a free strict monoidal category.

    letters
        Names of the object letters (objects of the free category are
        finite words in them).
    gens
        :class:`MonGenerator` entries; morphisms are generated by these
        under composition and tensor.
    relations
        Tuples of at least two parallel terms asserted equal.
    """

    letters: tuple
    gens: tuple
    relations: tuple

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        object.__setattr__(self, "gens", tuple(self.gens))
        object.__setattr__(self, "relations",
                           tuple(tuple(r) for r in self.relations))
        n = len(self.letters)
        for g in self.gens:
            if not isinstance(g, MonGenerator):
                raise StructureError("gens must be MonGenerator instances")
            if any(not 0 <= l < n for l in g.inputs + g.output):
                raise StructureError(
                    f"generator {g.name} uses a letter out of range")
        for k, rel in enumerate(self.relations):
            if len(rel) < 2:
                raise StructureError(f"relation {k} needs at least two sides")
            sigs = set()
            for t in rel:
                check_term(self, t)
                sigs.add((term_inputs(self, t), term_output(self, t)))
            if len(sigs) != 1:
                raise StructureError(f"relation {k} has non-parallel sides")


def check_term(P: MonPresentation, t: Term) -> None:
    """Raise StructureError unless ``t`` is well typed over ``P``."""
    if not isinstance(t, Term):
        raise StructureError("morphism terms must be Term instances")
    if t.letter is not None:
        if not 0 <= t.letter < len(P.letters):
            raise StructureError(f"letter {t.letter} out of range")
        return
    for c in t.children:
        check_term(P, c)
    if t.gen is None:
        return
    if not 0 <= t.gen < len(P.gens):
        raise StructureError(f"generator {t.gen} out of range")
    fed = sum((term_output(P, c) for c in t.children), ())
    if fed != P.gens[t.gen].inputs:
        raise StructureError(
            f"children feed {fed} into generator {P.gens[t.gen].name}, "
            f"which expects {P.gens[t.gen].inputs}")


def term_inputs(P: MonPresentation, t: Term) -> tuple:
    """Letters consumed by the term, left to right."""
    if t.letter is not None:
        return (t.letter,)
    return sum((term_inputs(P, c) for c in t.children), ())


def term_output(P: MonPresentation, t: Term) -> tuple:
    """Letters produced by the term, left to right."""
    if t.letter is not None:
        return (t.letter,)
    if t.gen is not None:
        return P.gens[t.gen].output
    return sum((term_output(P, c) for c in t.children), ())


def term_size(t: Term) -> int:
    """Leaves plus generator nodes (juxtapositions are transparent)."""
    own = 0 if (t.gen is None and t.letter is None) else 1
    return own + sum(term_size(c) for c in t.children)


def compose_terms(P: MonPresentation, later, earlier) -> tuple:
    """Graft ``later`` onto ``earlier`` (``later`` applied second).

    Both are tuples of single-output trees; the letters consumed by
    ``later`` must match, in order, the letters produced by ``earlier``.
    Each leaf of ``later`` is replaced by the corresponding tree.
    """
    later, earlier = tuple(later), tuple(earlier)
    outs = []
    for t in earlier:
        check_term(P, t)
        out = term_output(P, t)
        if len(out) != 1:
            raise StructureError("grafting needs single-output terms")
        outs.append(out[0])
    needed = sum((term_inputs(P, t) for t in later), ())
    if needed != tuple(outs):
        raise StructureError("terms are not composable")
    feed = iter(earlier)

    def sub(t: Term) -> Term:
        if t.letter is not None:
            return next(feed)
        return replace(t, children=tuple(sub(c) for c in t.children))

    return tuple(sub(t) for t in later)


# ---------------------------------------------------------------------------
# the standard presentations


def phi0(k: int) -> MonPresentation:
    """Presentation carried by the standard k-simplex, ``k = 0..3``.

    Letters are the strictly increasing pairs ``f{i}{j}``; each triangle
    ``i < j < k`` contributes a generator ``(f_jk, f_ij) -> f_ik``, and
    the full tetrahedron adds ``sigma0123 : (f23, f12, f01) -> f03``
    related to its two 2-stage expansions.  Generator names follow the
    pasting-equation convention in which ``alpha013`` consumes
    ``(f23, f12)`` and ``alpha123`` consumes ``(f13, f01)``.
    """
    if not 0 <= k <= 3:
        raise StructureError(f"phi0 is defined for k = 0..3, got {k}")
    letters = tuple(f"f{i}{j}"
                    for i in range(k + 1) for j in range(i + 1, k + 1))
    L = {name: i for i, name in enumerate(letters)}
    if k <= 1:
        return MonPresentation(letters, (), ())
    if k == 2:
        a012 = MonGenerator("alpha012", (L["f12"], L["f01"]), (L["f02"],))
        return MonPresentation(letters, (a012,), ())
    gens = (
        MonGenerator("alpha012", (L["f12"], L["f01"]), (L["f02"],)),
        MonGenerator("alpha013", (L["f23"], L["f12"]), (L["f13"],)),
        MonGenerator("alpha023", (L["f23"], L["f02"]), (L["f03"],)),
        MonGenerator("alpha123", (L["f13"], L["f01"]), (L["f03"],)),
        MonGenerator("sigma0123",
                     (L["f23"], L["f12"], L["f01"]), (L["f03"],)),
    )
    relation = (
        node(4, leaf(L["f23"]), leaf(L["f12"]), leaf(L["f01"])),
        node(3, node(1, leaf(L["f23"]), leaf(L["f12"])), leaf(L["f01"])),
        node(2, leaf(L["f23"]), node(0, leaf(L["f12"]), leaf(L["f01"]))),
    )
    return MonPresentation(letters, gens, (relation,))


@dataclass(frozen=True)
class PresentationCells:
    """Correspondence between a presentation and the cells it came from.

    letter_cell / two_cell / three_cell
        The nondegenerate simplex behind each letter, arity-2-derived
        generator, and arity-3-derived generator.  Generators are listed
        2-derived first; ``relations[i]`` belongs to ``three_cell[i]``.
    letter_of / gen2_of / gen3_of
        Inverse lookups per cell (-1 for degenerate cells).
    """

    letter_cell: tuple
    two_cell: tuple
    three_cell: tuple
    letter_of: tuple
    gen2_of: tuple
    gen3_of: tuple


def presentation_cells(P: MonPresentation) -> PresentationCells:
    cells = getattr(P, "_simplex_cells", None)
    if cells is None:
        raise StructureError("not a presentation carried by a simplicial set")
    return cells


def phi_tr3(X: TruncatedSimplicialSet) -> MonPresentation:
    """Presentation carried by a 3-truncated simplicial set.

    Letters are the nondegenerate 1-cells.  A nondegenerate 2-cell ``t``
    contributes a generator from the letters of ``(d0 t, d2 t)`` to the
    letter of ``d1 t``; degenerate faces contribute no letters, so
    arities 0..2 and unit outputs can occur.  A nondegenerate 3-cell
    contributes an arity-<=3 generator on its spine edges together with
    one relation equating it with the two 2-stage expansions through its
    triangle faces (degenerate faces collapse to identity wirings).
    Relations are listed in the order of the generators they define.
    """
    if X.max_level != 3:
        raise StructureError("phi_tr3 expects a 3-truncated simplicial set")
    letter_of = [-1] * X.cells[1]
    letter_cell = tuple(X.nondegenerate_cells(1))
    for i, e in enumerate(letter_cell):
        letter_of[e] = i

    def lam(e: int) -> tuple:
        return (letter_of[e],) if letter_of[e] >= 0 else ()

    two_cell = tuple(X.nondegenerate_cells(2))
    gen2_of = [-1] * X.cells[2]
    gens = []
    for i, t in enumerate(two_cell):
        gen2_of[t] = i
        gens.append(MonGenerator(
            f"t{t}", lam(X.d(2, 0, t)) + lam(X.d(2, 2, t)),
            lam(X.d(2, 1, t))))

    def tri_term(t: int, feeds: list) -> Term:
        if gen2_of[t] >= 0:
            return node(gen2_of[t], *feeds)
        if len(feeds) == 1:
            return feeds[0]
        return juxtapose(*feeds)

    three_cell = tuple(X.nondegenerate_cells(3))
    gen3_of = [-1] * X.cells[3]
    relations = []
    n2 = len(gens)
    for i, q in enumerate(three_cell):
        gen3_of[q] = n2 + i
        f0, f1 = X.d(3, 0, q), X.d(3, 1, q)
        f2, f3 = X.d(3, 2, q), X.d(3, 3, q)
        e23, e12 = X.d(2, 0, f0), X.d(2, 2, f0)
        e01, e03 = X.d(2, 2, f3), X.d(2, 1, f1)
        inputs = lam(e23) + lam(e12) + lam(e01)
        gens.append(MonGenerator(f"q{q}", inputs, lam(e03)))
        sigma = node(n2 + i, *[leaf(l) for l in inputs])
        inner_l = tri_term(f0, [leaf(l) for l in lam(e23) + lam(e12)])
        left = tri_term(f2, [inner_l] + [leaf(l) for l in lam(e01)])
        inner_r = tri_term(f3, [leaf(l) for l in lam(e12) + lam(e01)])
        right = tri_term(f1, [leaf(l) for l in lam(e23)] + [inner_r])
        relations.append((sigma, left, right))

    P = MonPresentation(
        tuple(f"e{e}" for e in letter_cell), tuple(gens), tuple(relations))
    object.__setattr__(P, "_simplex_cells", PresentationCells(
        letter_cell, two_cell, three_cell,
        tuple(letter_of), tuple(gen2_of), tuple(gen3_of)))
    return P


def presentations_equivalent(P: MonPresentation, Q: MonPresentation) -> bool:
    """Whether ``Q`` is ``P`` with letters and generators renamed."""
    if (len(P.letters) != len(Q.letters) or len(P.gens) != len(Q.gens)
            or len(P.relations) != len(Q.relations)):
        return False

    def translate(t: Term, sl, sg) -> Term:
        if t.letter is not None:
            return leaf(sl[t.letter])
        kids = tuple(translate(c, sl, sg) for c in t.children)
        return Term(None if t.gen is None else sg[t.gen], None, kids)

    q_types = {}
    for j, g in enumerate(Q.gens):
        q_types.setdefault((g.inputs, g.output), []).append(j)
    q_rels = {frozenset(rel) for rel in Q.relations}
    for sl in permutations(range(len(Q.letters))):
        buckets = {}
        ok = True
        for i, g in enumerate(P.gens):
            key = (tuple(sl[l] for l in g.inputs),
                   tuple(sl[l] for l in g.output))
            if len(q_types.get(key, ())) <= len(buckets.setdefault(key, [])):
                ok = False
                break
            buckets[key].append(i)
        if not ok:
            continue
        assignments = [[]]
        for key, mine in buckets.items():
            assignments = [prev + list(zip(mine, perm))
                           for prev in assignments
                           for perm in permutations(q_types[key], len(mine))]
        for pairs in assignments:
            sg = [0] * len(P.gens)
            for i, j in pairs:
                sg[i] = j
            p_rels = {frozenset(translate(t, sl, sg) for t in rel)
                      for rel in P.relations}
            if p_rels == q_rels:
                return True
    return False


# ---------------------------------------------------------------------------
# the right adjoint and both hom-set enumerations


def psi(M: StrictMonCat) -> TruncatedSimplicialSet:
    """3-truncated nerve of the one-object delooping of ``M``."""
    return nerve_data(deloop(M)).tss


@dataclass(frozen=True)
class MonFunctorAssignment:
    """Strict monoidal functor out of a presentation, as lookup tables.

    ``objects[letter]`` is an object of the target; ``generators[g]`` is
    a morphism of the target with the tensored source and target
    prescribed by the generator's typing.
    """

    objects: tuple
    generators: tuple


def evaluate_term(P: MonPresentation, M: StrictMonCat,
                  objects, generators, t: Term) -> int:
    """Morphism of ``M`` denoted by a term under an assignment.

    ``objects`` and ``generators`` are lookup tables as in
    :class:`MonFunctorAssignment`; leaves become identities, children
    are tensored left to right, generator nodes compose on top.
    """
    C = M.cat
    if t.letter is not None:
        return C.identity[objects[t.letter]]
    parts = [evaluate_term(P, M, objects, generators, c) for c in t.children]
    if parts:
        m = parts[0]
        for p in parts[1:]:
            m = M.tensor_mor[m][p]
    else:
        m = C.identity[M.unit_obj]
    if t.gen is None:
        return m
    return C.comp[generators[t.gen]][m]


def hom_moncat(P: MonPresentation, M: StrictMonCat) -> tuple:
    """All strict monoidal functor assignments ``P -> M``, exhaustively.

    Enumerates every letter assignment, every typed choice of generator
    images, and keeps those under which all relation sides evaluate to
    the same morphism of ``M``.
    """
    C = M.cat
    hom = {}
    for m in range(C.n_mor):
        hom.setdefault((C.mor_src[m], C.mor_tgt[m]), []).append(m)

    def tens(objs) -> int:
        o = M.unit_obj
        for x in objs:
            o = M.tensor_obj[o][x]
        return o

    out = []
    for objects in product(range(C.n_objects), repeat=len(P.letters)):
        pools = [hom.get((tens(objects[l] for l in g.inputs),
                          tens(objects[l] for l in g.output)), [])
                 for g in P.gens]
        for generators in product(*pools):
            if all(len({evaluate_term(P, M, objects, generators, t)
                        for t in rel}) == 1 for rel in P.relations):
                out.append(MonFunctorAssignment(objects, generators))
    return tuple(out)


def enumerate_ssetmaps(X: TruncatedSimplicialSet,
                       Y: TruncatedSimplicialSet) -> tuple:
    """All simplicial maps ``X -> Y``, by level-by-level backtracking."""
    if X.max_level != Y.max_level:
        raise StructureError("source and target truncation levels differ")
    top = X.max_level
    wit: list = [{}]
    for k in range(top):
        w: dict = {}
        for j in range(k + 1):
            for x in range(X.cells[k]):
                w.setdefault(X.s(k, j, x), []).append((j, x))
        wit.append(w)
    levels = [[-1] * c for c in X.cells]
    pos = [(k, x) for k in range(top + 1) for x in range(X.cells[k])]
    out = []

    def rec(i: int) -> None:
        if i == len(pos):
            out.append(SSetMap(X, Y, tuple(tuple(l) for l in levels)))
            return
        k, x = pos[i]
        forced = wit[k].get(x) if k >= 1 else None
        if forced:
            j, w = forced[0]
            cands = [Y.s(k - 1, j, levels[k - 1][w])]
        else:
            cands = range(Y.cells[k])
        for c in cands:
            if k >= 1 and any(Y.d(k, f, c) != levels[k - 1][X.d(k, f, x)]
                              for f in range(k + 1)):
                continue
            if forced and any(Y.s(k - 1, j, levels[k - 1][w]) != c
                              for j, w in forced):
                continue
            levels[k][x] = c
            rec(i + 1)
        levels[k][x] = -1

    rec(0)
    return tuple(out)


# ---------------------------------------------------------------------------
# the adjunction, certified instance by instance


def _induced_assignment(P, pc, M, ND: NerveData,
                        F: SSetMap) -> MonFunctorAssignment:
    """Assignment corresponding to a simplicial map into the nerve."""
    objects = tuple(F(1, e) for e in pc.letter_cell)
    generators = [ND.triangles[F(2, t)][2] for t in pc.two_cell]
    for i in range(len(pc.three_cell)):
        generators.append(evaluate_term(
            P, M, objects, generators, P.relations[i][1]))
    return MonFunctorAssignment(objects, tuple(generators))


def _induced_map(X, P, pc, M, ND: NerveData,
                 H: MonFunctorAssignment) -> SSetMap | None:
    """Simplicial map corresponding to an assignment (None if stuck)."""
    Y = ND.tss
    unit_cell = Y.s(0, 0, 0)
    lvl1 = [H.objects[pc.letter_of[e]] if pc.letter_of[e] >= 0 else unit_cell
            for e in range(X.cells[1])]
    wit2 = {X.s(1, j, e): (j, e)
            for j in range(2) for e in range(X.cells[1])}
    lvl2 = []
    for t in range(X.cells[2]):
        g = pc.gen2_of[t]
        if g >= 0:
            key = (lvl1[X.d(2, 2, t)], lvl1[X.d(2, 0, t)], H.generators[g])
            idx = ND.tri_index.get(key)
        else:
            j, e = wit2[t]
            idx = Y.s(1, j, lvl1[e])
        if idx is None:
            return None
        lvl2.append(idx)
    wit3 = {X.s(2, j, t): (j, t)
            for j in range(3) for t in range(X.cells[2])}
    lvl3 = []
    for q in range(X.cells[3]):
        if pc.gen3_of[q] >= 0:
            key = tuple(lvl2[X.d(3, f, q)] for f in range(4))
            idx = ND.tet_index.get(key)
        else:
            j, t = wit3[q]
            idx = Y.s(2, j, lvl2[t])
        if idx is None:
            return None
        lvl3.append(idx)
    return SSetMap(X, Y, ((0,) * X.cells[0], tuple(lvl1),
                          tuple(lvl2), tuple(lvl3)))


def induced_assignment(X: TruncatedSimplicialSet, M: StrictMonCat,
                       F: SSetMap) -> MonFunctorAssignment:
    """Assignment ``phi_tr3(X) -> M`` corresponding to a map ``X -> psi(M)``."""
    P = phi_tr3(X)
    ND = nerve_data(deloop(M))
    if F.target != ND.tss or F.source != X:
        raise StructureError("map is not of the form X -> psi(M)")
    return _induced_assignment(P, presentation_cells(P), M, ND, F)


def induced_map(X: TruncatedSimplicialSet, M: StrictMonCat,
                H: MonFunctorAssignment) -> SSetMap:
    """Map ``X -> psi(M)`` corresponding to an assignment ``phi_tr3(X) -> M``."""
    P = phi_tr3(X)
    ND = nerve_data(deloop(M))
    G = _induced_map(X, P, presentation_cells(P), M, ND, H)
    if G is None:
        raise StructureError("assignment does not define a simplicial map")
    return G


def adjunction_check(X: TruncatedSimplicialSet,
                     M: StrictMonCat) -> BijectionCertificate:
    """Certify the adjunction on one instance.

    Enumerates the simplicial maps ``X -> psi(M)`` and the assignments
    ``phi_tr3(X) -> M`` independently, then checks that the induced
    assignment of every map lands in the enumerated hom-set, that the
    comparison is injective, that the counts agree, and that the reverse
    construction returns the original map.
    """
    P = phi_tr3(X)
    pc = presentation_cells(P)
    ND = nerve_data(deloop(M))
    maps = enumerate_ssetmaps(X, ND.tss)
    homs = hom_moncat(P, M)
    cert = BijectionCertificate("adjunction comparison",
                                left=len(maps), right=len(homs))
    for F in maps:
        if not validate_ssetmap(F).ok:
            cert.fail("enumerated map fails the simplicial identities")
            return cert
    hom_set = set(homs)
    seen: dict = {}
    for F in maps:
        H = _induced_assignment(P, pc, M, ND, F)
        if H not in hom_set:
            cert.fail("induced assignment is not a monoidal functor")
        if H in seen:
            cert.fail("comparison map is not injective")
        seen[H] = F
    if len(maps) != len(homs):
        cert.fail("the two hom-sets have different sizes")
    if cert.ok:
        for H, F in seen.items():
            G = _induced_map(X, P, pc, M, ND, H)
            if G is None or G.levels != F.levels:
                cert.fail("reverse construction does not return the map")
                break
    if cert.ok:
        cert.note("comparison map lands in the enumerated hom-set")
        cert.note("comparison map is a bijection with explicit inverse")
    return cert


# ---------------------------------------------------------------------------
# word problem: bounded congruence closure


def _normal_list(t: Term) -> list:
    """Splice out juxtaposition nodes, returning the flat tree list."""
    if t.letter is not None:
        return [t]
    if t.gen is None:
        return [u for c in t.children for u in _normal_list(c)]
    kids = tuple(u for c in t.children for u in _normal_list(c))
    return [Term(t.gen, None, kids)]


def _match(P: MonPresentation, t: Term, pat: Term, out: list) -> bool:
    """Match ``t`` against a relation side; pattern leaves bind subtrees
    of the same output type."""
    if pat.letter is not None:
        if term_output(P, t) != (pat.letter,):
            return False
        out.append(t)
        return True
    if t.gen != pat.gen or len(t.children) != len(pat.children):
        return False
    return all(_match(P, c, p, out)
               for c, p in zip(t.children, pat.children))


def _instantiate(pat: Term, bound: list, pos: list) -> Term:
    if pat.letter is not None:
        pos[0] += 1
        return bound[pos[0] - 1]
    return replace(pat, children=tuple(
        _instantiate(c, bound, pos) for c in pat.children))


def _rewrites(P: MonPresentation, t: Term, rules) -> list:
    out = []
    for pat, rep in rules:
        binding: list = []
        if _match(P, t, pat, binding):
            out.append(_instantiate(rep, binding, [0]))
    for i, c in enumerate(t.children):
        for c2 in _rewrites(P, c, rules):
            out.append(replace(
                t, children=t.children[:i] + (c2,) + t.children[i + 1:]))
    return out


def _tree_equal(P: MonPresentation, t1: Term, t2: Term,
                rules, bound: int) -> bool:
    if t1 == t2:
        return True
    seen = {t1}
    frontier = [t1]
    capped = False
    while frontier:
        nxt = []
        for t in frontier:
            for u in _rewrites(P, t, rules):
                if u in seen:
                    continue
                if term_size(u) > bound:
                    capped = True
                    continue
                if u == t2:
                    return True
                seen.add(u)
                nxt.append(u)
        frontier = nxt
    if capped:
        raise UndecidedAtBound(bound)
    return False


def presentation_equal(P: MonPresentation, m1, m2,
                       bound: int | None = None) -> bool:
    """Decide equality of two parallel morphism terms in the free category.

    ``m1`` and ``m2`` are tuples of single-output trees.  Equality is the
    congruence generated by the relations; it is decided slot by slot via
    breadth-first closure under relation rewrites, never exploring terms
    larger than ``bound`` (by default the larger input size plus twice
    the largest relation growth).  If the bound cuts the search off
    before deciding, ``UndecidedAtBound`` is raised.
    """
    for g in P.gens:
        if len(g.output) != 1:
            raise UnsupportedPresentation(
                f"generator {g.name} does not produce exactly one letter")
    m1, m2 = tuple(m1), tuple(m2)
    norm = []
    for m in (m1, m2):
        slots = []
        for t in m:
            check_term(P, t)
            if len(term_output(P, t)) != 1:
                raise StructureError(
                    "each slot must produce exactly one letter")
            slots.append(_normal_list(t)[0])
        norm.append(slots)
    n1, n2 = norm
    sig = [tuple((term_inputs(P, t), term_output(P, t)) for t in m)
           for m in norm]
    if (sum((s[0] for s in sig[0]), ()) != sum((s[0] for s in sig[1]), ())
            or tuple(s[1] for s in sig[0]) != tuple(s[1] for s in sig[1])):
        raise StructureError("terms are not parallel")
    if sig[0] != sig[1]:
        return False
    rules = []
    growth = 1
    for rel in P.relations:
        sides = [_normal_list(t) for t in rel]
        if any(len(s) != 1 for s in sides):
            raise UnsupportedPresentation(
                "a relation side is not a single tree")
        sides = [s[0] for s in sides]
        for a in sides:
            for b in sides:
                if a != b:
                    rules.append((a, b))
                    growth = max(growth, term_size(b) - term_size(a))
    if bound is None:
        bound = max(sum(term_size(t) for t in n1),
                    sum(term_size(t) for t in n2)) + 2 * growth
    return all(_tree_equal(P, t1, t2, rules, bound)
               for t1, t2 in zip(n1, n2))
