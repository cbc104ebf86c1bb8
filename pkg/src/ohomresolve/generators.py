"""Exhaustive and random generators of small complexes.

These back the property suites: full enumeration of all complexes on a few
vertices (downward-closed face families), the induced enumeration of all
cointerval complexes, random shifted complexes, and isomorphism pruning.
"""

from __future__ import annotations

import itertools

from .complexes import Complex, verts_of
from .cointerval import is_cointerval


def all_downset_masks(n: int):
    """All downward-closed face families on [n], one int per family.

    Bit s of a family mask is set when the subset with bitmask s is a face.
    Families on [n] split by the last vertex into a pair (A, B) of families
    on [n-1] with B inside A: A holds the faces avoiding n, B the links.
    """
    if n == 0:
        return [0, 1]
    half = 1 << (n - 1)
    prev = all_downset_masks(n - 1)
    out = []
    for A in prev:
        for B in prev:
            if B & ~A:
                continue
            out.append(A | (B << half))
    return out


def _complex_from_downset(n: int, family: int) -> Complex:
    faces = set()
    s = 0
    fm = family
    while fm:
        if fm & 1:
            faces.add(s)
        fm >>= 1
        s += 1
    facets = [f for f in faces if not any((f | (1 << v)) in faces for v in range(n) if not f >> v & 1)]
    return Complex(n, facets)


def all_complexes(n: int):
    """Every simplicial complex on vertex range 1..n (including void and {empty})."""
    if n > 5:
        raise ValueError("full enumeration is only supported for n <= 5")
    return [_complex_from_downset(n, fam) for fam in all_downset_masks(n)]


def glue_cone(A: Complex, B: Complex, v: int) -> Complex:
    """Complex H on 1..v with H - v = A and link(v) = B (B inside A)."""
    bit = 1 << (v - 1)
    gens = list(A.facets) + [f | bit for f in B.faces]
    return Complex(v, gens)


def cointerval_complexes(n: int):
    """All cointerval complexes on vertex range 1..n.

    For n <= 5 this is a brute-force filter over the full enumeration.  For
    larger n it recurses: if H is cointerval then so are the deletion and
    the link of the last vertex, so every candidate arises by gluing a pair
    of smaller cointerval complexes.  The two routes agree on n <= 5 (see
    the tests).
    """
    if n <= 5:
        return [H for H in all_complexes(n) if is_cointerval(H).verdict]
    prev = cointerval_complexes(n - 1)
    out = []
    for A in prev:
        af = A.faces
        for B in prev:
            if not B.faces <= af:
                continue
            H = glue_cone(A, B, n)
            if is_cointerval(H).verdict:
                out.append(H)
    return out


def random_shifted_complex(rng, n: int, seeds: int = 3) -> Complex:
    """Smallest shifted complex containing a few random faces."""
    full = (1 << n) - 1
    start = [rng.randint(0, full) for _ in range(max(1, seeds))]
    faces = set()
    stack = list(start)
    while stack:
        F = stack.pop()
        if F in faces:
            continue
        faces.add(F)
        for i in verts_of(F):
            stack.append(F & ~(1 << (i - 1)))
            for j in range(1, i):
                if not F >> (j - 1) & 1:
                    stack.append((F & ~(1 << (i - 1))) | (1 << (j - 1)))
    facets = [f for f in faces if not any((f | (1 << v)) in faces for v in range(n) if not f >> v & 1)]
    return Complex(n, facets)


def canonical_form(H: Complex):
    """Relabeling-invariant key: the least facet list over all vertex orders."""
    best = None
    for perm in itertools.permutations(range(1, H.n + 1)):
        cand = tuple(sorted(H.relabel(perm).facets))
        if best is None or cand < best:
            best = cand
    return (H.n, best)


def iso_representatives(complexes):
    """First representative of each isomorphism class, input order kept."""
    seen = set()
    out = []
    for H in complexes:
        key = canonical_form(H)
        if key not in seen:
            seen.add(key)
            out.append(H)
    return out
