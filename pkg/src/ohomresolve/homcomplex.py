"""Ordered simplicial homomorphisms and prodsimplicial hom complexes.

A homomorphism from G (on 1..n) to H (on 1..m) is a weakly increasing map
phi: [n] -> [m] sending every face of G to a face of H of the same size.
A cell is an n-tuple of nonempty subsets of [m] (stored as bitmasks), and
belongs to the hom complex when every selection of one element per
coordinate is a homomorphism.  Cell labels are monomials in m variables:
the exponent of x_j counts the coordinates whose part contains j.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from itertools import combinations_with_replacement, product

from .complexes import (
    Complex,
    mask_of,
    monomial_degree,
    monomial_divides,
    revlex_cmp,
    revlex_key,
    verts_of,
)


# ---------------------------------------------------------------------------
# homomorphisms

def _facet_verts(G: Complex):
    return [verts_of(f) for f in sorted(G.facets) if f]


def _is_hom(phi, facet_verts, hfaces) -> bool:
    for fv in facet_verts:
        img = 0
        for v in fv:
            img |= 1 << (phi[v - 1] - 1)
        if img.bit_count() != len(fv) or img not in hfaces:
            return False
    return True


def hom_monomial(phi, m: int) -> tuple:
    """Exponent vector of the product of images: exp(x_j) = |phi^-1(j)|."""
    exp = [0] * m
    for v in phi:
        exp[v - 1] += 1
    return tuple(exp)


def ordered_homs(G: Complex, H: Complex) -> list:
    """All ordered simplicial homomorphisms G -> H, revlex-largest label first."""
    n, m = G.n, H.n
    if n == 0:
        # the empty map; it needs the empty face when G has one
        return [()] if (G.is_void() or not H.is_void()) else []
    if m == 0:
        return []
    fv = _facet_verts(G)
    if not G.is_void() and H.is_void():
        return []
    hfaces = H.faces
    out = [
        phi
        for phi in combinations_with_replacement(range(1, m + 1), n)
        if _is_hom(phi, fv, hfaces)
    ]
    out.sort(key=lambda phi: revlex_key(hom_monomial(phi, m)))
    return out


# ---------------------------------------------------------------------------
# cells

def make_cell(parts) -> tuple:
    """Cell from an iterable of vertex collections; parts must be nonempty."""
    cell = tuple(mask_of(p) for p in parts)
    if any(p == 0 for p in cell):
        raise ValueError("cell parts must be nonempty")
    return cell

def cell_parts(cell) -> list:
    return [verts_of(p) for p in cell]

def cell_dim(cell) -> int:
    return sum(p.bit_count() - 1 for p in cell)

def cell_label(cell, m: int) -> tuple:
    exp = [0] * m
    for p in cell:
        for j in verts_of(p):
            exp[j - 1] += 1
    return tuple(exp)

def hom_to_cell(phi) -> tuple:
    return tuple(1 << (v - 1) for v in phi)

def cell_to_hom(vcell) -> tuple:
    """Inverse of hom_to_cell on vertex cells (all parts singletons)."""
    return tuple(p.bit_length() for p in vcell)

def cell_selections(cell):
    """All vertex homs obtainable by picking one element per part."""
    return product(*(verts_of(p) for p in cell))

def cell_leq(a, b) -> bool:
    """Face order: a <= b iff every part of a is contained in the matching part of b."""
    return all(x & ~y == 0 for x, y in zip(a, b))


def is_multihom(G: Complex, H: Complex, cell) -> bool:
    """True when every selection from the parts is an ordered homomorphism."""
    cell = tuple(cell) if cell and isinstance(cell[0], int) else make_cell(cell)
    if len(cell) != G.n:
        raise ValueError(f"cell must have {G.n} parts")
    if any(p == 0 or p >> H.n for p in cell):
        raise ValueError("cell parts must be nonempty subsets of the target vertices")
    fv = _facet_verts(G)
    hfaces = H.faces
    if not G.is_void() and H.is_void():
        return False
    for phi in cell_selections(cell):
        if any(phi[i] > phi[i + 1] for i in range(len(phi) - 1)):
            return False
        if not _is_hom(phi, fv, hfaces):
            return False
    return True


# ---------------------------------------------------------------------------
# restriction specs

@dataclass(frozen=True)
class RestrictionSpec:
    """Optional restriction of a hom complex.

    alpha: per-variable degree caps on cell labels (None entries unbounded);
    beta:  revlex floor, a degree-n monomial every vertex label must reach;
    leq:   divisibility ceiling on cell labels.
    """

    alpha: tuple | None = None
    beta: tuple | None = None
    leq: tuple | None = None

    def is_empty(self) -> bool:
        return self.alpha is None and self.beta is None and self.leq is None

    def validate(self, m: int, n: int) -> None:
        for name, vec in (("alpha", self.alpha), ("beta", self.beta), ("leq", self.leq)):
            if vec is not None and len(vec) != m:
                raise ValueError(f"{name} must have one entry per target vertex ({m})")
        if self.beta is not None and monomial_degree(self.beta) != n:
            raise ValueError(f"beta must have total degree {n}")


def _label_within(label, spec: RestrictionSpec) -> bool:
    if spec.alpha is not None:
        for e, cap in zip(label, spec.alpha):
            if cap is not None and e > cap:
                return False
    if spec.leq is not None and not monomial_divides(label, spec.leq):
        return False
    return True


def _hom_passes(phi, m, spec: RestrictionSpec) -> bool:
    mono = hom_monomial(phi, m)
    if not _label_within(mono, spec):
        return False
    if spec.beta is not None and revlex_cmp(mono, spec.beta) < 0:
        return False
    return True


# ---------------------------------------------------------------------------
# the complex

class PComplex:
    """Prodsimplicial complex, face-closed, with monomial labels.

    Vertex labels default to the hom monomials of the vertex cells; custom
    labels may be supplied (one per vertex cell) for hand-built complexes.
    The label of a cell is the lcm of the labels of its vertices, which for
    default labels equals counting part memberships coordinatewise.
    """

    __slots__ = ("n", "m", "cells", "_vertex_labels", "_labels", "_bydim")

    def __init__(self, n: int, m: int, cells, vertex_labels=None):
        cells = frozenset(cells)
        for c in cells:
            if len(c) != n or any(p == 0 or p >> m for p in c):
                raise ValueError(f"malformed cell {c!r}")
            for i, p in enumerate(c):
                if p.bit_count() >= 2:
                    for b in verts_of(p):
                        sub = c[:i] + (p & ~(1 << (b - 1)),) + c[i + 1:]
                        if sub not in cells:
                            raise ValueError("cell family is not closed under faces")
        self.n = n
        self.m = m
        self.cells = cells
        self._labels = {}
        self._bydim = None
        if vertex_labels is not None:
            vertex_labels = dict(vertex_labels)
            for v in self.vertex_cells():
                if v not in vertex_labels:
                    raise ValueError("custom labels must cover every vertex cell")
        self._vertex_labels = vertex_labels

    def __eq__(self, other):
        return (
            isinstance(other, PComplex)
            and (self.n, self.m, self.cells) == (other.n, other.m, other.cells)
            and self._vertex_labels == other._vertex_labels
        )

    def __hash__(self):
        return hash((self.n, self.m, self.cells))

    def __repr__(self):
        return f"PComplex(n={self.n}, m={self.m}, f={self.f_vector()})"

    def is_empty(self) -> bool:
        return not self.cells

    def by_dim(self) -> dict:
        if self._bydim is None:
            d = defaultdict(list)
            for c in self.cells:
                d[cell_dim(c)].append(c)
            for lst in d.values():
                lst.sort()
            self._bydim = dict(d)
        return self._bydim

    def dim(self) -> int:
        return max(self.by_dim(), default=-1)

    def f_vector(self) -> tuple:
        bd = self.by_dim()
        return tuple(len(bd.get(d, ())) for d in range(self.dim() + 1))

    def vertex_cells(self) -> list:
        return self.by_dim().get(0, [])

    def homs(self) -> list:
        """Vertex homs, revlex-largest label first."""
        hs = [cell_to_hom(v) for v in self.vertex_cells()]
        hs.sort(key=lambda phi: revlex_key(hom_monomial(phi, self.m)))
        return hs

    def label(self, cell) -> tuple:
        got = self._labels.get(cell)
        if got is None:
            if self._vertex_labels is None:
                got = cell_label(cell, self.m)
            else:
                exp = [0] * self.m
                for phi in cell_selections(cell):
                    lab = self._vertex_labels[hom_to_cell(phi)]
                    for j, e in enumerate(lab):
                        if e > exp[j]:
                            exp[j] = e
                got = tuple(exp)
            self._labels[cell] = got
        return got

    def facets(self) -> list:
        """Maximal cells: those not covered by any stored cell."""
        out = []
        for c in self.cells:
            if not self._is_covered(c):
                out.append(c)
        out.sort()
        return out

    def _is_covered(self, c) -> bool:
        for i, p in enumerate(c):
            absent = ((1 << self.m) - 1) & ~p
            for b in verts_of(absent):
                if c[:i] + (p | (1 << (b - 1)),) + c[i + 1:] in self.cells:
                    return True
        return False

    def subcomplex(self, cells) -> "PComplex":
        """Sub-PComplex on a face-closed subset of the cells.

        Closure is the caller's responsibility (every internal caller keeps
        it); label caches are shared since labels are per-cell values.
        """
        sub = object.__new__(PComplex)
        sub.n, sub.m = self.n, self.m
        sub.cells = frozenset(cells)
        sub._labels = self._labels
        sub._bydim = None
        sub._vertex_labels = self._vertex_labels
        return sub

    def to_dict(self) -> dict:
        cells = sorted(self.cells)
        return {
            "n": self.n,
            "m": self.m,
            "cells": [
                {
                    "parts": [list(t) for t in cell_parts(c)],
                    "dim": cell_dim(c),
                    "label": list(self.label(c)),
                }
                for c in cells
            ],
        }


def pcomplex_from_dict(data: dict) -> PComplex:
    n, m = data["n"], data["m"]
    cells = []
    labels = {}
    for entry in data["cells"]:
        c = make_cell(entry["parts"])
        if len(c) != n:
            raise ValueError("cell arity disagrees with n")
        cells.append(c)
        if cell_dim(c) == 0 and "label" in entry:
            labels[c] = tuple(entry["label"])
    default = all(labels[c] == cell_label(c, m) for c in labels)
    return PComplex(n, m, cells, None if default else labels)


def build_ohom(G: Complex, H: Complex, spec: RestrictionSpec | None = None) -> PComplex:
    """Hom complex of all multihomomorphism cells whose labels respect spec.

    Cells grow from vertex homs by merging pairs that agree in all but one
    coordinate; a merge is kept when all its selections are surviving homs
    and its label passes the degree caps.
    """
    m = H.n
    if spec is None:
        spec = RestrictionSpec()
    spec.validate(m, G.n)
    homs = ordered_homs(G, H)
    if not spec.is_empty():
        homs = [phi for phi in homs if _hom_passes(phi, m, spec)]
    vert_set = set(homs)
    cells = {hom_to_cell(phi) for phi in homs}
    buckets = defaultdict(list)

    def register(cell):
        for i in range(len(cell)):
            buckets[(i, cell[:i], cell[i + 1:])].append(cell)

    for c in cells:
        register(c)
    queue = deque(cells)
    while queue:
        c = queue.popleft()
        for i in range(len(c)):
            for other in buckets[(i, c[:i], c[i + 1:])]:
                merged_part = c[i] | other[i]
                if merged_part == c[i] or merged_part == other[i]:
                    continue
                cand = c[:i] + (merged_part,) + c[i + 1:]
                if cand in cells:
                    continue
                if not _label_within(cell_label(cand, m), spec):
                    continue
                if all(phi in vert_set for phi in cell_selections(cand)):
                    cells.add(cand)
                    register(cand)
                    queue.append(cand)
    return PComplex(G.n, m, cells)


def restrict(X: PComplex, spec: RestrictionSpec) -> PComplex:
    """Subcomplex of the cells whose labels respect spec.

    The degree caps and the divisibility ceiling apply to the cell label;
    the revlex floor must be met by the label of every vertex of the cell.
    For default (hom) labels the floor needs one test per cell: picking the
    largest element of every part gives the revlex-smallest vertex, since
    raising values of a weakly increasing map lowers its monomial.
    """
    spec.validate(X.m, X.n)
    if spec.is_empty():
        return X
    default_labels = X._vertex_labels is None
    if not default_labels and spec.beta is not None:
        vert_ok = {
            v: revlex_cmp(X.label(v), spec.beta) >= 0 for v in X.vertex_cells()
        }
    keep = []
    for c in X.cells:
        if not _label_within(X.label(c), spec):
            continue
        if spec.beta is not None:
            if default_labels:
                worst = hom_monomial(tuple(p.bit_length() for p in c), X.m)
                if revlex_cmp(worst, spec.beta) < 0:
                    continue
            elif not all(vert_ok[hom_to_cell(phi)] for phi in cell_selections(c)):
                continue
        keep.append(c)
    return X.subcomplex(keep)


def swap_vertex(gamma, phi, X: PComplex):
    """Replace gamma's value at the first disagreement with phi's smaller value.

    Both maps must be vertices of X and gamma must exceed phi where they
    first differ; when the target of X's construction is cointerval the
    result is again a vertex of X, with revlex-larger label.
    """
    gc, pc = hom_to_cell(gamma), hom_to_cell(phi)
    if gc not in X.cells or pc not in X.cells:
        raise ValueError("both maps must be vertices of the complex")
    if gamma == phi:
        raise ValueError("maps must be distinct")
    k = next(i for i in range(len(gamma)) if gamma[i] != phi[i])
    if gamma[k] <= phi[k]:
        raise ValueError("gamma must exceed phi at the first disagreement")
    return gamma[:k] + (phi[k],) + gamma[k + 1:]
