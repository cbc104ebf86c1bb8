"""Finite simplicial complexes on ordered vertex sets, plus revlex orders.

Vertices are the integers 1..n, ordered by value.  A face is stored as a
bitmask with bit v-1 set for each vertex v; the empty face is mask 0.
Monomials are exponent vectors: a tuple of nonnegative ints indexed by
variable 1..m.
"""

from __future__ import annotations

import itertools


# ---------------------------------------------------------------------------
# bitmask helpers

def mask_of(vertices) -> int:
    """Bitmask of an iterable of 1-based vertices (an int passes through)."""
    if isinstance(vertices, int):
        return vertices
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def verts_of(mask: int) -> tuple:
    """Sorted tuple of 1-based vertices in a face bitmask."""
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def submasks(mask: int):
    """All submasks of ``mask``, including 0 and mask itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


class Complex:
    """Simplicial complex given by its facets (inclusion-maximal faces).

    The void complex (no faces at all) and the irrelevant complex {empty}
    are distinct values: the former has no facets, the latter has the
    single facet 0.  Instances are immutable and hashable.
    """

    __slots__ = ("n", "facets", "_faces")

    def __init__(self, n: int, facet_masks):
        facet_masks = set(facet_masks)
        if len(facet_masks) > 1:
            facet_masks = {
                f for f in facet_masks
                if not any(f != g and f & ~g == 0 for g in facet_masks)
            }
        self.n = n
        self.facets = frozenset(facet_masks)
        self._faces = None

    @property
    def faces(self) -> frozenset:
        """Frozenset of all face bitmasks (downward closure of the facets)."""
        if self._faces is None:
            fs = set()
            for f in self.facets:
                fs.update(submasks(f))
            self._faces = frozenset(fs)
        return self._faces

    def has_face(self, sigma) -> bool:
        return mask_of(sigma) in self.faces

    def is_void(self) -> bool:
        return not self.facets

    def is_simplex(self) -> bool:
        """True when the faces are the full power set of the vertex set."""
        return len(self.facets) == 1

    def vertex_mask(self) -> int:
        m = 0
        for f in self.facets:
            m |= f
        return m

    def vertices(self) -> tuple:
        return verts_of(self.vertex_mask())

    def dim(self) -> int:
        """Dimension: -1 for {empty}, -2 for the void complex."""
        if not self.facets:
            return -2
        return max(f.bit_count() for f in self.facets) - 1

    def f_vector(self) -> tuple:
        """(f_0, ..., f_dim) counting nonempty faces by dimension."""
        d = self.dim()
        if d < 0:
            return ()
        counts = [0] * (d + 1)
        for f in self.faces:
            if f:
                counts[f.bit_count() - 1] += 1
        return tuple(counts)

    def relabel(self, perm) -> "Complex":
        """Fresh complex with vertex v renamed to perm[v-1] (a bijection on 1..n)."""
        perm = tuple(perm)
        if sorted(perm) != list(range(1, self.n + 1)):
            raise ValueError("perm must be a permutation of 1..n")
        return Complex(
            self.n,
            (mask_of(perm[v - 1] for v in verts_of(f)) for f in self.facets),
        )

    def __eq__(self, other):
        return (
            isinstance(other, Complex)
            and self.n == other.n
            and self.facets == other.facets
        )

    def __hash__(self):
        return hash((self.n, self.facets))

    def __repr__(self):
        fac = sorted(verts_of(f) for f in self.facets)
        return f"Complex(n={self.n}, facets={fac})"


def build_complex(facets, n: int) -> Complex:
    """Complex generated by ``facets`` on vertex range 1..n.

    Redundant (non-maximal) input facets are absorbed.  ``facets=[]`` gives
    the void complex and ``facets=[[]]`` the irrelevant complex {empty}.
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"vertex count must be a nonnegative integer, got {n!r}")
    masks = []
    for F in facets:
        fm = 0
        for v in F:
            if not isinstance(v, int) or not 1 <= v <= n:
                raise ValueError(f"vertex {v!r} out of range 1..{n}")
            fm |= 1 << (v - 1)
        masks.append(fm)
    return Complex(n, masks)


def link(H: Complex, sigma) -> Complex:
    """Link of the face sigma: all tau disjoint from sigma with sigma+tau a face."""
    s = mask_of(sigma)
    if s not in H.faces:
        raise ValueError(f"{verts_of(s)} is not a face")
    return Complex(H.n, (f & ~s for f in H.facets if f & s == s))


def right_link(H: Complex, sigma) -> Complex:
    """Link of sigma restricted to the vertices greater than max(sigma)."""
    s = mask_of(sigma)
    if s == 0:
        raise ValueError("right link needs a nonempty face")
    if s not in H.faces:
        raise ValueError(f"{verts_of(s)} is not a face")
    upper = ((1 << H.n) - 1) & ~((1 << s.bit_length()) - 1)
    return Complex(H.n, ((f & ~s) & upper for f in H.facets if f & s == s))


def induced(H: Complex, W) -> Complex:
    """Induced subcomplex on the vertex subset W (ambient range kept)."""
    wm = mask_of(W)
    return Complex(H.n, (f & wm for f in H.facets))


# ---------------------------------------------------------------------------
# monomials and revlex orders

def monomial_degree(a) -> int:
    return sum(a)


def monomial_lcm(a, b) -> tuple:
    if len(a) != len(b):
        raise ValueError("monomials on different variable counts")
    return tuple(x if x >= y else y for x, y in zip(a, b))


def monomial_divides(a, b) -> bool:
    """True when x^a divides x^b."""
    if len(a) != len(b):
        raise ValueError("monomials on different variable counts")
    return all(x <= y for x, y in zip(a, b))


def monomial_str(a) -> str:
    """Human rendering, e.g. (2,0,1) -> 'x1^2*x3'; the unit is '1'."""
    parts = []
    for i, e in enumerate(a, 1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"


def revlex_cmp(a, b) -> int:
    """Compare equal-degree monomials: 1 if a is revlex larger, -1 smaller, 0 equal.

    a is larger when the greatest-index variable appearing in a/b carries a
    negative exponent.
    """
    if len(a) != len(b):
        raise ValueError("monomials on different variable counts")
    if sum(a) != sum(b):
        raise ValueError("revlex is defined only within one total degree")
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            return 1 if x < y else -1
    return 0


def revlex_key(a) -> tuple:
    """Sort key: ascending keys list equal-degree monomials revlex-largest first."""
    return tuple(reversed(a))


def revlex_set_cmp(F, G) -> int:
    """Total order on vertex subsets: F < G iff max(F xor G) lies in G.

    Returns -1, 0, or 1; this coincides with comparing face bitmasks as
    integers.
    """
    f, g = mask_of(F), mask_of(G)
    return (f > g) - (f < g)
