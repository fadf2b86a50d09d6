"""Truncated simplicial sets with finitely many cells per level.

A :class:`TruncatedSimplicialSet` stores levels ``0 .. max_level`` (with
``max_level`` between 0 and 4).  Cells at each level are indexed densely by
integers; ``face[k][i]`` and ``degen[k][j]`` are integer arrays giving the
face maps ``d_i : X_k -> X_{k-1}`` (``0 <= i <= k``) and degeneracy maps
``s_j : X_k -> X_{k+1}`` (``0 <= j <= k < max_level``).

The simplicial identities are *not* assumed by the constructor (only shapes
and index ranges are); they are checked by :func:`validate_simplicial`,
which reports every failing instance.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import NotAHorn, StructureError
from .report import ValidationReport, merge


def _as_tuples(levels) -> tuple:
    return tuple(tuple(tuple(arr) for arr in lvl) for lvl in levels)


@dataclass(frozen=True)
class TruncatedSimplicialSet:
    """Finite simplicial set truncated at ``max_level``.

    Attributes
    ----------
    max_level : int
        Top level stored, between 0 and 4.
    cells : tuple[int, ...]
        ``cells[k]`` is the number of k-cells; indices are ``0 .. cells[k]-1``.
    face : tuple
        ``face[k][i][x]`` is ``d_i x`` for ``1 <= k <= max_level``;
        ``face[0]`` is empty.
    degen : tuple
        ``degen[k][j][x]`` is ``s_j x`` for ``0 <= k < max_level``;
        ``degen[max_level]`` is empty.
    """

    max_level: int
    cells: tuple[int, ...]
    face: tuple
    degen: tuple

    def __post_init__(self):
        n = self.max_level
        if not 0 <= n <= 4:
            raise StructureError(f"max_level must be 0..4, got {n}")
        if len(self.cells) != n + 1:
            raise StructureError("cells must list one count per level")
        if any(c < 0 for c in self.cells):
            raise StructureError("cell counts must be nonnegative")
        if len(self.face) != n + 1 or len(self.degen) != n + 1:
            raise StructureError("face/degen must have one entry per level")
        if self.face[0] != ():
            raise StructureError("level 0 has no faces")
        if self.degen[n] != ():
            raise StructureError(f"level {n} has no degeneracies (truncated)")
        for k in range(1, n + 1):
            if len(self.face[k]) != k + 1:
                raise StructureError(f"level {k} needs faces d_0..d_{k}")
            for i, arr in enumerate(self.face[k]):
                if len(arr) != self.cells[k]:
                    raise StructureError(f"face[{k}][{i}] has wrong length")
                if any(not 0 <= v < self.cells[k - 1] for v in arr):
                    raise StructureError(f"face[{k}][{i}] index out of range")
        for k in range(n):
            if len(self.degen[k]) != k + 1:
                raise StructureError(f"level {k} needs degeneracies s_0..s_{k}")
            for j, arr in enumerate(self.degen[k]):
                if len(arr) != self.cells[k]:
                    raise StructureError(f"degen[{k}][{j}] has wrong length")
                if any(not 0 <= v < self.cells[k + 1] for v in arr):
                    raise StructureError(f"degen[{k}][{j}] index out of range")

    def d(self, k: int, i: int, x: int) -> int:
        """Face ``d_i`` of the k-cell ``x``."""
        return self.face[k][i][x]

    def s(self, k: int, j: int, x: int) -> int:
        """Degeneracy ``s_j`` of the k-cell ``x``."""
        return self.degen[k][j][x]

    def degenerate_cells(self, k: int) -> frozenset:
        """Indices of k-cells in the image of some degeneracy."""
        if k == 0:
            return frozenset()
        out = set()
        for arr in self.degen[k - 1]:
            out.update(arr)
        return frozenset(out)

    def nondegenerate_cells(self, k: int) -> tuple[int, ...]:
        deg = self.degenerate_cells(k)
        return tuple(x for x in range(self.cells[k]) if x not in deg)


def sset(cells, face=(), degen=()) -> TruncatedSimplicialSet:
    """Build a TruncatedSimplicialSet from plain lists.

    ``face`` lists levels ``1 .. max_level`` and ``degen`` lists levels
    ``0 .. max_level - 1`` (the constructor's padded form is filled in).
    """
    cells = tuple(cells)
    n = len(cells) - 1
    face_full = ((),) + _as_tuples(face)
    degen_full = _as_tuples(degen) + ((),)
    return TruncatedSimplicialSet(n, cells, face_full, degen_full)


def validate_simplicial(X: TruncatedSimplicialSet) -> ValidationReport:
    """Check every instance of the simplicial identities."""
    rep = ValidationReport("simplicial set")
    n = X.max_level
    # d_i d_j = d_{j-1} d_i  (i < j)
    for k in range(2, n + 1):
        for j in range(1, k + 1):
            for i in range(j):
                for x in range(X.cells[k]):
                    if X.d(k - 1, i, X.d(k, j, x)) != X.d(k - 1, j - 1, X.d(k, i, x)):
                        rep.add("d_i d_j = d_{j-1} d_i",
                                (("level", k), ("i", i), ("j", j), ("cell", x)))
    # d_i s_j identities
    for k in range(n):
        for j in range(k + 1):
            for i in range(k + 2):
                for x in range(X.cells[k]):
                    got = X.d(k + 1, i, X.s(k, j, x))
                    if i == j or i == j + 1:
                        want = x
                    elif i < j:
                        want = X.s(k - 1, j - 1, X.d(k, i, x))
                    else:
                        want = X.s(k - 1, j, X.d(k, i - 1, x))
                    if got != want:
                        rep.add("d_i s_j",
                                (("level", k), ("i", i), ("j", j), ("cell", x)))
    # s_i s_j = s_{j+1} s_i  (i <= j)
    for k in range(n - 1):
        for j in range(k + 1):
            for i in range(j + 1):
                for x in range(X.cells[k]):
                    if X.s(k + 1, i, X.s(k, j, x)) != X.s(k + 1, j + 1, X.s(k, i, x)):
                        rep.add("s_i s_j = s_{j+1} s_i",
                                (("level", k), ("i", i), ("j", j), ("cell", x)))
    return rep


@dataclass(frozen=True)
class SSetMap:
    """Levelwise map of truncated simplicial sets (same truncation level)."""

    source: TruncatedSimplicialSet
    target: TruncatedSimplicialSet
    levels: tuple

    def __post_init__(self):
        if self.source.max_level != self.target.max_level:
            raise StructureError("source and target truncation levels differ")
        if len(self.levels) != self.source.max_level + 1:
            raise StructureError("need one level map per level")
        for k, arr in enumerate(self.levels):
            if len(arr) != self.source.cells[k]:
                raise StructureError(f"level {k} map has wrong length")
            if any(not 0 <= v < self.target.cells[k] for v in arr):
                raise StructureError(f"level {k} map out of range")

    def __call__(self, k: int, x: int) -> int:
        return self.levels[k][x]


def sset_map(source, target, levels) -> SSetMap:
    return SSetMap(source, target, tuple(tuple(arr) for arr in levels))


def identity_map(X: TruncatedSimplicialSet) -> SSetMap:
    return SSetMap(X, X, tuple(tuple(range(c)) for c in X.cells))


def compose_maps(g: SSetMap, f: SSetMap) -> SSetMap:
    if f.target != g.source:
        raise StructureError("maps not composable")
    levels = tuple(tuple(g.levels[k][v] for v in f.levels[k])
                   for k in range(len(f.levels)))
    return SSetMap(f.source, g.target, levels)


def validate_ssetmap(m: SSetMap) -> ValidationReport:
    """Check commutation with every face and degeneracy map."""
    rep = ValidationReport("simplicial map")
    S, T = m.source, m.target
    for k in range(1, S.max_level + 1):
        for i in range(k + 1):
            for x in range(S.cells[k]):
                if T.d(k, i, m(k, x)) != m(k - 1, S.d(k, i, x)):
                    rep.add("face square",
                            (("level", k), ("i", i), ("cell", x)))
    for k in range(S.max_level):
        for j in range(k + 1):
            for x in range(S.cells[k]):
                if T.s(k, j, m(k, x)) != m(k + 1, S.s(k, j, x)):
                    rep.add("degeneracy square",
                            (("level", k), ("j", j), ("cell", x)))
    return rep


def certify_levelwise_iso(m: SSetMap) -> ValidationReport:
    """Valid simplicial map that is a bijection at every level."""
    rep = merge("levelwise isomorphism", validate_ssetmap(m))
    for k, arr in enumerate(m.levels):
        if len(set(arr)) != len(arr):
            rep.add("levelwise injective", (("level", k),))
        if len(set(arr)) != m.target.cells[k]:
            rep.add("levelwise surjective", (("level", k),))
    return rep


def truncate(X: TruncatedSimplicialSet, n: int) -> TruncatedSimplicialSet:
    """Forget all levels above ``n``."""
    if not 0 <= n <= X.max_level:
        raise StructureError(f"cannot truncate a {X.max_level}-level set at {n}")
    face = X.face[:n + 1]
    degen = X.degen[:n] + ((),)
    return TruncatedSimplicialSet(n, X.cells[:n + 1], face, degen)


def decalage_top(X: TruncatedSimplicialSet) -> TruncatedSimplicialSet:
    """Shift down one level, dropping the top face and degeneracy at each level.

    ``(dec X)_k = X_{k+1}`` with faces ``d_0 .. d_k`` and degeneracies
    ``s_0 .. s_k`` retained (the last vertex is never deleted).
    """
    if X.max_level == 0:
        raise StructureError("cannot decale a 0-truncated set")
    n = X.max_level - 1
    cells = X.cells[1:]
    face = ((),) + tuple(X.face[k + 1][:k + 1] for k in range(1, n + 1))
    degen = tuple(X.degen[k + 1][:k + 1] for k in range(n)) + ((),)
    return TruncatedSimplicialSet(n, cells, face, degen)


def _degeneracy_shell(X: TruncatedSimplicialSet, n: int, j: int, y: int) -> tuple:
    """Faces ``(d_i s_j y)`` of the degeneracy of a top-level cell ``y``.

    Computed from the simplicial identities, so the result consists of
    existing n-cells; used to define degeneracies into a coskeletal level.
    """
    shell = []
    for i in range(n + 2):
        if i == j or i == j + 1:
            shell.append(y)
        elif i < j:
            shell.append(X.s(n - 1, j - 1, X.d(n, i, y)))
        else:
            shell.append(X.s(n - 1, j, X.d(n, i - 1, y)))
    return tuple(shell)


def coskeleton_extend(X: TruncatedSimplicialSet, n: int) -> TruncatedSimplicialSet:
    """Add level ``n+1`` freely: all boundary-compatible (n+2)-tuples of n-cells.

    ``X`` must be truncated at exactly ``n`` (2 or 3) and valid.  The new
    cells are shells ``(x_0, .., x_{n+1})`` with ``d_i x_j = d_{j-1} x_i``
    for ``i < j``; faces are projections and degeneracies are the shells
    forced by the simplicial identities.
    """
    if n not in (2, 3):
        raise StructureError("coskeleton_extend supports n in {2, 3}")
    if X.max_level != n:
        raise StructureError(f"expected a {n}-truncated set")
    by_prefix: list[dict] = [dict() for _ in range(n + 2)]
    for x in range(X.cells[n]):
        fv = tuple(X.face[n][i][x] for i in range(n + 1))
        for L in range(n + 2):
            by_prefix[L].setdefault(fv[:min(L, n + 1)], []).append(x)

    shells: list[tuple] = []

    def extend(chosen: list):
        j = len(chosen)
        if j == n + 2:
            shells.append(tuple(chosen))
            return
        key = tuple(X.face[n][j - 1][chosen[i]] for i in range(j))[:min(j, n + 1)]
        for x in by_prefix[min(j, n + 1)].get(key, ()):
            chosen.append(x)
            extend(chosen)
            chosen.pop()

    extend([])
    shells.sort()
    index = {sh: i for i, sh in enumerate(shells)}

    new_face = tuple(tuple(sh[i] for sh in shells) for i in range(n + 2))
    new_degen = []
    for j in range(n + 1):
        col = []
        for y in range(X.cells[n]):
            sh = _degeneracy_shell(X, n, j, y)
            if sh not in index:
                raise StructureError(
                    "degeneracy shell missing; input is not a valid simplicial set")
            col.append(index[sh])
        new_degen.append(tuple(col))

    cells = X.cells + (len(shells),)
    face = X.face + (new_face,)
    degen = X.degen[:n] + (tuple(new_degen), ())
    return TruncatedSimplicialSet(n + 1, cells, face, degen)


def pullback_ssets(f: SSetMap, g: SSetMap):
    """Levelwise pullback of ``f : A -> C`` and ``g : B -> C``.

    Returns ``(P, p1, p2)`` where P's k-cells are the pairs ``(a, b)`` with
    ``f(a) = g(b)``, ordered lexicographically.
    """
    if f.target != g.target:
        raise StructureError("pullback needs maps into the same target")
    A, B = f.source, g.source
    n = A.max_level
    pairs, index = [], []
    for k in range(n + 1):
        lvl = [(a, b) for a in range(A.cells[k]) for b in range(B.cells[k])
               if f(k, a) == g(k, b)]
        pairs.append(lvl)
        index.append({p: i for i, p in enumerate(lvl)})
    face = [()]
    for k in range(1, n + 1):
        face.append(tuple(
            tuple(index[k - 1][(A.d(k, i, a), B.d(k, i, b))] for a, b in pairs[k])
            for i in range(k + 1)))
    degen = []
    for k in range(n):
        degen.append(tuple(
            tuple(index[k + 1][(A.s(k, j, a), B.s(k, j, b))] for a, b in pairs[k])
            for j in range(k + 1)))
    degen.append(())
    P = TruncatedSimplicialSet(n, tuple(len(l) for l in pairs),
                               tuple(face), tuple(degen))
    p1 = SSetMap(P, A, tuple(tuple(a for a, _ in lvl) for lvl in pairs))
    p2 = SSetMap(P, B, tuple(tuple(b for _, b in lvl) for lvl in pairs))
    return P, p1, p2


@dataclass(frozen=True)
class Horn32:
    """A (3,2)-horn: faces 0, 1 and 3 of a prospective 3-simplex."""

    face0: int
    face1: int
    face3: int


def is_horn32(X: TruncatedSimplicialSet, h: Horn32) -> bool:
    """Compatibility of the three given faces (``d_i x_j = d_{j-1} x_i``)."""
    if X.max_level < 3:
        return False
    for f in (h.face0, h.face1, h.face3):
        if not 0 <= f < X.cells[2]:
            return False
    return (X.d(2, 0, h.face1) == X.d(2, 0, h.face0)
            and X.d(2, 0, h.face3) == X.d(2, 2, h.face0)
            and X.d(2, 1, h.face3) == X.d(2, 2, h.face1))


def enumerate_horns32(X: TruncatedSimplicialSet) -> tuple[Horn32, ...]:
    """All (3,2)-horns of X, in lexicographic face order."""
    if X.max_level < 3:
        raise StructureError("need at least 3 levels to form (3,2)-horns")
    by_d0: dict[int, list[int]] = {}
    by_d0d1: dict[tuple, list[int]] = {}
    for t in range(X.cells[2]):
        by_d0.setdefault(X.d(2, 0, t), []).append(t)
        by_d0d1.setdefault((X.d(2, 0, t), X.d(2, 1, t)), []).append(t)
    horns = []
    for f0 in range(X.cells[2]):
        for f1 in by_d0.get(X.d(2, 0, f0), ()):
            key = (X.d(2, 2, f0), X.d(2, 2, f1))
            for f3 in by_d0d1.get(key, ()):
                horns.append(Horn32(f0, f1, f3))
    return tuple(horns)


def fillers_index(X: TruncatedSimplicialSet) -> dict:
    """Index of 3-cells by their (d0, d1, d3) face triple."""
    idx: dict[tuple, list[int]] = {}
    for s in range(X.cells[3]):
        key = (X.d(3, 0, s), X.d(3, 1, s), X.d(3, 3, s))
        idx.setdefault(key, []).append(s)
    return idx


def fillers(X: TruncatedSimplicialSet, h: Horn32, index: dict | None = None) -> tuple[int, ...]:
    """All 3-cells whose faces 0, 1 and 3 match the horn."""
    if not is_horn32(X, h):
        raise NotAHorn("not a horn")
    if index is None:
        index = fillers_index(X)
    return tuple(index.get((h.face0, h.face1, h.face3), ()))
