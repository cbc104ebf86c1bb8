"""Exact cellular chain complexes over the rationals and GF(2).

Boundary maps use the product orientation: deleting the k-th smallest
element (k >= 1) of the i-th part of a cell contributes the incidence sign
(-1)^(s + k - 1), where s is the sum of (|W_j| - 1) over the parts before
the i-th.  Within-part deletion is the usual simplex boundary and s is the
Koszul shift for the factors to the left.  The composite of consecutive
boundaries is checked to vanish on every construction.

No floating point is used anywhere: rational ranks come from fraction-free
(Bareiss) integer elimination, GF(2) ranks from bitmask elimination.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import Complex, verts_of, revlex_key
from .homcomplex import (
    PComplex,
    RestrictionSpec,
    build_ohom,
    cell_dim,
    cell_leq,
    cell_to_hom,
    hom_to_cell,
    hom_monomial,
)

Q = "Q"
GF2 = "GF2"
FIELDS = (Q, GF2)


def _check_field(field):
    if field not in FIELDS:
        raise ValueError(f"unknown field {field!r}; expected one of {FIELDS}")


@dataclass
class ChainComplex:
    """Graded boundary matrices of a prodsimplicial complex.

    ``bases[d]`` lists the d-cells in a fixed order; ``cols[d]`` holds, per
    d-cell, the sparse boundary column as (row_index, sign) pairs into
    ``bases[d-1]``.  With ``reduced`` set, dimension 0 maps onto the empty
    cell (a single row of ones).
    """

    field: str
    reduced: bool
    bases: dict
    cols: dict

    def dims(self):
        return sorted(self.bases)

    def f_vector(self):
        return tuple(len(self.bases[d]) for d in self.dims())

    def dense(self, d):
        """Dense integer matrix of the boundary leaving dimension d."""
        ncols = len(self.bases.get(d, ()))
        if d == 0:
            nrows = 1 if self.reduced else 0
        else:
            nrows = len(self.bases.get(d - 1, ()))
        rows = [[0] * ncols for _ in range(nrows)]
        for c, entries in enumerate(self.cols.get(d, [])):
            for r, s in entries:
                rows[r][c] = s
        return rows

    def boundary_rank(self, d):
        mat = self.dense(d)
        if self.field == GF2:
            width = len(mat[0]) if mat else 0
            packed = []
            for row in mat:
                acc = 0
                for j, v in enumerate(row):
                    if v & 1:
                        acc |= 1 << j
                packed.append(acc)
            return rank_gf2(packed)
        return rank_int(mat)

    def to_triples(self):
        """JSON-friendly export: per dimension, (row, col, value) triples."""
        out = {}
        for d in self.dims():
            trip = []
            for c, entries in enumerate(self.cols.get(d, [])):
                for r, s in entries:
                    trip.append([r, c, s])
            out[str(d)] = trip
        return out


def rank_int(rows) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination."""
    rows = [list(r) for r in rows]
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    rank = 0
    prev = 1
    for col in range(nc):
        piv = None
        for r in range(rank, nr):
            if rows[r][col]:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        lead = pr[col]
        for r in range(rank + 1, nr):
            rr = rows[r]
            factor = rr[col]
            if factor:
                for c2 in range(col + 1, nc):
                    rr[c2] = (rr[c2] * lead - factor * pr[c2]) // prev
                rr[col] = 0
            elif prev != 1:
                for c2 in range(col + 1, nc):
                    rr[c2] = rr[c2] * lead // prev
        prev = lead
        rank += 1
        if rank == nr:
            break
    return rank


def rank_gf2(rows) -> int:
    """Rank over GF(2); rows are bitmasks over the columns."""
    lead = {}
    rank = 0
    for row in rows:
        cur = row
        while cur:
            hb = cur.bit_length()
            if hb in lead:
                cur ^= lead[hb]
            else:
                lead[hb] = cur
                rank += 1
                break
    return rank


def boundary_matrices(X: PComplex, field=Q, reduced: bool = True) -> ChainComplex:
    """Chain complex of X over the field; raises if d(d(x)) != 0 anywhere."""
    _check_field(field)
    bydim = X.by_dim()
    bases = {d: list(cells) for d, cells in bydim.items()}
    index = {}
    for d, cells in bases.items():
        for i, c in enumerate(cells):
            index[c] = i
    cols = {}
    for d in sorted(bases):
        dcols = []
        for tau in bases[d]:
            entries = []
            if d == 0:
                if reduced:
                    entries.append((0, 1))
            else:
                s = 0
                for i, part in enumerate(tau):
                    cnt = part.bit_count()
                    if cnt >= 2:
                        for k, b in enumerate(verts_of(part), start=1):
                            sigma = tau[:i] + (part & ~(1 << (b - 1)),) + tau[i + 1:]
                            sign = -1 if (s + k - 1) & 1 else 1
                            entries.append((index[sigma], sign))
                    s += cnt - 1
            dcols.append(entries)
        cols[d] = dcols
    cc = ChainComplex(field, reduced, bases, cols)
    _assert_square_zero(cc)
    return cc


def _assert_square_zero(cc: ChainComplex) -> None:
    for d in cc.dims():
        if d == 0:
            continue
        lower = cc.cols.get(d - 1)
        if lower is None:
            continue
        for col in cc.cols[d]:
            acc = {}
            for r, s in col:
                for r2, s2 in lower[r]:
                    acc[r2] = acc.get(r2, 0) + s * s2
            if cc.field == GF2:
                bad = any(v & 1 for v in acc.values())
            else:
                bad = any(acc.values())
            if bad:
                raise AssertionError("boundary composite is nonzero")


def homology_ranks(X: PComplex, field=Q) -> list:
    """Reduced homology ranks in degrees 0..dim(X)."""
    _check_field(field)
    if X.is_empty():
        raise ValueError("the empty complex has no homology ranks")
    cc = boundary_matrices(X, field, reduced=True)
    dmax = max(cc.dims())
    f = [len(cc.bases.get(d, ())) for d in range(dmax + 1)]
    r = [cc.boundary_rank(d) for d in range(dmax + 1)] + [0]
    return [f[d] - r[d] - r[d + 1] for d in range(dmax + 1)]


def is_acyclic(X: PComplex, field=Q) -> bool:
    """True when X is empty (convention) or all reduced homology vanishes."""
    _check_field(field)
    if X.is_empty():
        return True
    return all(h == 0 for h in homology_ranks(X, field))


# ---------------------------------------------------------------------------
# combinatorial contractibility certificates

def collapse_certificate(X: PComplex):
    """Greedy elementary-collapse sequence down to one vertex, or None.

    A free face is a cell properly contained in exactly one other cell;
    each step removes the lexicographically smallest free face together
    with its unique container.  A stall is inconclusive, not a disproof.
    """
    if X.is_empty():
        raise ValueError("cannot collapse the empty complex")
    cells = set(X.cells)
    pairs = []
    while len(cells) > 1:
        best = None
        for sigma in cells:
            containers = [t for t in cells if t != sigma and cell_leq(sigma, t)]
            if len(containers) == 1 and (best is None or sigma < best[0]):
                best = (sigma, containers[0])
        if best is None:
            return None
        cells.discard(best[0])
        cells.discard(best[1])
        pairs.append(best)
    return pairs


@dataclass
class RemovalCert:
    """Vertex-removal contractibility certificate.

    ``steps`` lists (hom, facet) pairs: at each stage the revlex-smallest
    remaining vertex together with the unique facet properly containing it;
    the open star of the vertex is deleted and the loop repeats until the
    single ``terminal`` vertex remains.
    """

    steps: list
    terminal: tuple


def _smallest_vertex(cells, m):
    verts = [c for c in cells if cell_dim(c) == 0]
    return max(verts, key=lambda c: revlex_key(hom_monomial(cell_to_hom(c), m)))


def _star_facets(cells, vc, m):
    """Maximal cells among those containing vc (any cell above a star cell
    contains vc too, so maximality in the star is maximality in the
    complex)."""
    star = [c for c in cells if cell_leq(vc, c)]
    out = []
    for c in star:
        covered = False
        for i, p in enumerate(c):
            absent = ((1 << m) - 1) & ~p
            b = 1
            while absent and not covered:
                if absent & 1 and c[:i] + (p | (1 << (b - 1)),) + c[i + 1:] in cells:
                    covered = True
                absent >>= 1
                b += 1
            if covered:
                break
        if not covered:
            out.append(c)
    return star, out


def _removal_run(X: PComplex):
    if X.is_empty():
        raise ValueError("the empty complex admits no removal certificate")
    cells = set(X.cells)
    m = X.m
    steps = []
    while len(cells) > 1:
        vc = _smallest_vertex(cells, m)
        star, facets = _star_facets(cells, vc, m)
        containing = [f for f in facets if f != vc]
        if len(containing) != 1:
            return None, cell_to_hom(vc)
        steps.append((cell_to_hom(vc), containing[0]))
        cells.difference_update(star)
    (last,) = cells
    return RemovalCert(steps, cell_to_hom(last)), None


def removal_certificate(G: Complex, H: Complex, spec: RestrictionSpec | None = None):
    """Run the vertex-removal procedure on the hom complex of (G, H, spec)."""
    cert, _ = _removal_run(build_ohom(G, H, spec))
    return cert


def removal_with_offender(G: Complex, H: Complex, spec: RestrictionSpec | None = None):
    """Like removal_certificate but also reports the vertex that blocked."""
    return _removal_run(build_ohom(G, H, spec))


def removal_certificate_of(X: PComplex):
    cert, _ = _removal_run(X)
    return cert


def validate_removal_certificate(X: PComplex, cert: RemovalCert) -> bool:
    """Replay a removal certificate step by step."""
    cells = set(X.cells)
    m = X.m
    for phi, facet in cert.steps:
        if len(cells) <= 1:
            return False
        vc = hom_to_cell(phi)
        if vc not in cells or _smallest_vertex(cells, m) != vc:
            return False
        star, facets = _star_facets(cells, vc, m)
        if [f for f in facets if f != vc] != [facet]:
            return False
        cells.difference_update(star)
    return cells == {hom_to_cell(cert.terminal)}
