"""Cointerval, shifted, and vertex-decomposable recognition with certificates.

A complex is cointerval when, walking the vertices in increasing order, the
right links shrink (rlk(j) is a subcomplex of rlk(i) for i < j) and every
right link is itself cointerval.  The void complex and {empty} are the base
cases of the recursion and count as cointerval.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .complexes import (
    Complex,
    induced,
    link,
    mask_of,
    right_link,
    submasks,
    verts_of,
)


@dataclass(frozen=True)
class Violation:
    """Witness that rlk(j) is not contained in rlk(i), inside nested right links.

    ``context`` is the chain of vertices whose right links were entered
    before the failing pair was found; ``face`` lies in rlk(j) but not in
    rlk(i) of the complex reached through the context.
    """

    context: tuple
    i: int
    j: int
    face: tuple


@dataclass(frozen=True)
class CointervalWitness:
    verdict: bool
    violation: Violation | None = None

    def __bool__(self) -> bool:
        return self.verdict


def is_cointerval(H: Complex) -> CointervalWitness:
    """Decide cointervality; a False verdict carries a re-checkable violation."""
    return _witness(H)


@lru_cache(maxsize=None)
def _witness(H: Complex) -> CointervalWitness:
    if H.dim() < 0:  # void or {empty}
        return CointervalWitness(True)
    verts = H.vertices()
    rlks = [right_link(H, (v,)) for v in verts]
    for a in range(len(verts)):
        fa = rlks[a].faces
        for b in range(a + 1, len(verts)):
            missing = rlks[b].faces - fa
            if missing:
                face = verts_of(min(missing))
                return CointervalWitness(
                    False, Violation((), verts[a], verts[b], face)
                )
    for v, R in zip(verts, rlks):
        w = _witness(R)
        if not w.verdict:
            old = w.violation
            return CointervalWitness(
                False, Violation((v,) + old.context, old.i, old.j, old.face)
            )
    return CointervalWitness(True)


def violation_holds(H: Complex, vio: Violation) -> bool:
    """Re-check a violation directly against the definition."""
    X = H
    for v in vio.context:
        if not X.has_face((v,)):
            return False
        X = right_link(X, (v,))
    if vio.i >= vio.j:
        return False
    if not (X.has_face((vio.i,)) and X.has_face((vio.j,))):
        return False
    fm = mask_of(vio.face)
    return (
        fm in right_link(X, (vio.j,)).faces
        and fm not in right_link(X, (vio.i,)).faces
    )


def is_shifted(H: Complex) -> bool:
    """True when (F - {i}) + {j} is a face for all faces F, i in F, j < i absent."""
    faces = H.faces
    for F in faces:
        for i in verts_of(F):
            below = F & ((1 << (i - 1)) - 1)
            absent = ((1 << (i - 1)) - 1) & ~below
            for j in verts_of(absent):
                if (F & ~(1 << (i - 1))) | (1 << (j - 1)) not in faces:
                    return False
    return True


def find_cointerval_order(H: Complex, bound: int = 10):
    """Search all relabelings for one that makes H cointerval.

    Returns a permutation p with vertex v renamed p[v-1], trying the
    identity first, or None when every order fails.
    """
    if H.n > bound:
        raise ValueError(f"vertex count {H.n} exceeds search bound {bound}")
    for perm in itertools.permutations(range(1, H.n + 1)):
        if _witness(H.relabel(perm)).verdict:
            return perm
    return None


# ---------------------------------------------------------------------------
# vertex decomposability

@dataclass
class SheddingTree:
    """Certificate of vertex decomposability.

    Internal nodes carry a shedding vertex and the two subtrees for the
    deletion and the link; leaves are simplices or {empty} (the void
    complex is accepted as a trivial leaf as well).
    """

    complex: Complex
    vertex: int | None = None
    deletion: "SheddingTree | None" = None
    link: "SheddingTree | None" = None

    def is_leaf(self) -> bool:
        return self.vertex is None


_shed_cache: dict = {}


def shedding_tree(H: Complex):
    """Shedding-vertex certificate of vertex decomposability, or None.

    Vertices are tried in increasing label order, depth first, with results
    cached on the exact face family.
    """
    hit = _shed_cache.get(H, _shed_cache)
    if hit is not _shed_cache:
        return hit
    if len(H.facets) <= 1:  # void, {empty}, or a simplex
        tree = SheddingTree(H)
    else:
        tree = None
        for x in H.vertices():
            L = link(H, (x,))
            D = induced(H, H.vertex_mask() & ~(1 << (x - 1)))
            if L.facets & D.facets:
                continue
            lt = shedding_tree(L)
            if lt is None:
                continue
            dt = shedding_tree(D)
            if dt is None:
                continue
            tree = SheddingTree(H, x, dt, lt)
            break
    _shed_cache[H] = tree
    return tree


def is_vertex_decomposable(H: Complex) -> bool:
    return shedding_tree(H) is not None


def validate_shedding_tree(tree: SheddingTree) -> bool:
    """Re-check a shedding tree node by node against the definition."""
    H = tree.complex
    if tree.is_leaf():
        return len(H.facets) <= 1 and tree.deletion is None and tree.link is None
    x = tree.vertex
    if not H.has_face((x,)):
        return False
    L = link(H, (x,))
    D = induced(H, H.vertex_mask() & ~(1 << (x - 1)))
    if L.facets & D.facets:
        return False
    if tree.link is None or tree.deletion is None:
        return False
    if tree.link.complex != L or tree.deletion.complex != D:
        return False
    return validate_shedding_tree(tree.deletion) and validate_shedding_tree(tree.link)


def shedding_vertex(H: Complex) -> int:
    """Guaranteed shedding vertex of a cointerval non-simplex.

    Returns the largest element of the revlex-smallest subset of the vertex
    support that is not a face.  The search stays inside the support so the
    result is always a vertex of H.
    """
    if not _witness(H).verdict:
        raise ValueError("complex is not cointerval")
    if len(H.facets) <= 1:
        raise ValueError("complex is a simplex; every subset of its support is a face")
    faces = H.faces
    for s in sorted(submasks(H.vertex_mask())):
        if s not in faces:
            return s.bit_length()
    raise AssertionError("non-simplex complex must have a non-face in its support")
