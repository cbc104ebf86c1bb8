"""Ordered homomorphism ideals and cellular resolution verification.

A labeled complex supports a resolution of the ideal generated by its
vertex labels exactly when, for every monomial, the subcomplex of cells
with labels dividing it is acyclic.  Only the lcm lattice of the vertex
labels has to be scanned: the subcomplex depends only on which labels
divide the monomial, and every divisibility pattern is realized by the lcm
of the labels it contains.  Minimality needs covering cells to carry
distinct labels; linearity needs covering label quotients of degree one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import (
    Complex,
    monomial_degree,
    monomial_divides,
    monomial_lcm,
    revlex_key,
)
from .cointerval import is_cointerval
from .homcomplex import (
    PComplex,
    RestrictionSpec,
    _hom_passes,
    build_ohom,
    cell_dim,
    hom_monomial,
    ordered_homs,
    verts_of,
)
from .homology import GF2, Q, _check_field, boundary_matrices, is_acyclic


@dataclass(frozen=True)
class IdealGens:
    """Monomial ideal generators: equigenerated, pairwise distinct."""

    m: int
    degree: int
    gens: tuple  # exponent vectors, revlex-largest first

    def __len__(self):
        return len(self.gens)


def ideal_generators(G: Complex, H: Complex, spec: RestrictionSpec | None = None) -> IdealGens:
    """Generators of the ordered homomorphism ideal of (G, H), optionally restricted."""
    m = H.n
    homs = ordered_homs(G, H)
    if spec is not None:
        spec.validate(m, G.n)
        homs = [phi for phi in homs if _hom_passes(phi, m, spec)]
    gens = sorted({hom_monomial(phi, m) for phi in homs}, key=revlex_key)
    return IdealGens(m, G.n, tuple(gens))


def lcm_lattice(labels):
    """All lcms of nonempty subsets of the labels (deduplicated)."""
    base = set(labels)
    seen = set(base)
    frontier = set(base)
    while frontier:
        new = set()
        for x in frontier:
            for g in base:
                l = monomial_lcm(x, g)
                if l not in seen:
                    seen.add(l)
                    new.add(l)
        frontier = new
    return seen


def _closed_vertex_sets(labels):
    """Distinct sets {v : label_v divides alpha} over all monomials alpha.

    Only lcms of label subsets matter, and the set for alpha = lcm(T) is
    the divisibility closure of T.  Every closed set is reached from a
    smaller one by adjoining a vertex, so a breadth-first walk finds them
    all.
    """
    k = len(labels)
    if k == 0:
        return set()
    zero = (0,) * len(labels[0])

    def close(vec):
        return frozenset(i for i in range(k) if monomial_divides(labels[i], vec))

    def lcm_of(S):
        vec = zero
        for i in S:
            vec = monomial_lcm(vec, labels[i])
        return vec

    start = close(zero)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for S in frontier:
            base = lcm_of(S)
            for v in range(k):
                if v not in S:
                    grown = close(monomial_lcm(base, labels[v]))
                    if grown not in seen:
                        seen.add(grown)
                        nxt.append(grown)
        frontier = nxt
    return seen


def supports_resolution(X: PComplex, field=Q, cache=None) -> bool:
    """Acyclicity of every divisibility subcomplex of the labeled complex.

    The subcomplex for a monomial depends only on which vertex labels
    divide it, and every divisibility pattern is an lcm of the labels it
    contains, so the distinct closed vertex sets cover all monomials.
    ``cache`` optionally memoizes acyclicity verdicts across related
    complexes, keyed by (cell set, field).
    """
    _check_field(field)
    if X.is_empty():
        raise ValueError("support verification needs a nonempty complex")
    vcells = X.vertex_cells()
    labels = [X.label(v) for v in vcells]
    for S in _closed_vertex_sets(labels):
        alpha = None
        for i in S:
            alpha = labels[i] if alpha is None else monomial_lcm(alpha, labels[i])
        if alpha is None:
            continue  # empty subcomplex is acyclic by convention
        sub = frozenset(c for c in X.cells if monomial_divides(X.label(c), alpha))
        if cache is not None:
            hit = cache.get((sub, field))
            if hit is not None:
                if not hit:
                    return False
                continue
        ok = is_acyclic(X.subcomplex(sub), field)
        if cache is not None:
            cache[(sub, field)] = ok
        if not ok:
            return False
    return True


def verify_supports_resolution(
    G: Complex, H: Complex, spec: RestrictionSpec | None = None, field=Q
) -> bool:
    return supports_resolution(build_ohom(G, H, spec), field)


def _covering_pairs(X: PComplex):
    for tau in X.cells:
        if cell_dim(tau) == 0:
            continue
        for i, part in enumerate(tau):
            if part.bit_count() >= 2:
                for b in verts_of(part):
                    yield tau[:i] + (part & ~(1 << (b - 1)),) + tau[i + 1:], tau


def verify_minimality(X: PComplex) -> bool:
    """Strict face inclusions must change the label (checked on covers)."""
    for sigma, tau in _covering_pairs(X):
        if X.label(sigma) == X.label(tau):
            return False
    return True


def verify_linearity(X: PComplex) -> bool:
    """Covering label quotients must be single variables."""
    for sigma, tau in _covering_pairs(X):
        ls, lt = X.label(sigma), X.label(tau)
        if not monomial_divides(ls, lt):
            return False
        if monomial_degree(lt) - monomial_degree(ls) != 1:
            return False
    return True


def betti_numbers(
    G: Complex,
    H: Complex,
    spec: RestrictionSpec | None = None,
    override: bool = False,
) -> list:
    """Betti numbers of the (restricted) ordered homomorphism ideal as face counts.

    Face counts of the hom complex are the Betti numbers whenever the
    complex supports a minimal resolution; a cointerval target guarantees
    that.  With ``override`` the guarantee is replaced by explicit support
    and minimality verification (over both fields), which raises on failure.
    """
    verified = is_cointerval(H).verdict
    if not verified and not override:
        raise ValueError(
            "target complex is not cointerval; pass override=True to force verification"
        )
    X = build_ohom(G, H, spec)
    if not verified and not X.is_empty():
        if not (supports_resolution(X, Q) and supports_resolution(X, GF2)):
            raise ValueError("hom complex does not support a resolution of the ideal")
        if not verify_minimality(X):
            raise ValueError("hom complex resolution is not minimal")
    return list(X.f_vector())


@dataclass
class ResolutionExport:
    """Sparse matrices of a verified cellular resolution.

    ``generators`` lists the vertex labels (the degree-0 layer; the map to
    the ring sends basis element v to its label).  ``maps[i-1]`` describes
    the i-th boundary: row/col cells in basis order and entries
    (row, col, sign, quotient exponent vector), each quotient of degree one
    for hom complexes.
    """

    betti: list
    generators: list
    maps: list

    def to_dict(self):
        return {
            "betti": self.betti,
            "generators": [list(g) for g in self.generators],
            "maps": [
                {
                    "degree": mp["degree"],
                    "rows": mp["rows"],
                    "cols": mp["cols"],
                    "entries": [
                        [r, c, s, list(q)] for (r, c, s, q) in mp["entries"]
                    ],
                }
                for mp in self.maps
            ],
        }


def export_resolution(
    G: Complex, H: Complex, spec: RestrictionSpec | None = None, field=Q
) -> ResolutionExport:
    """Matrices [tau:sigma] * x_tau/x_sigma of the supported resolution."""
    X = build_ohom(G, H, spec)
    if X.is_empty():
        raise ValueError("empty hom complex; nothing to export")
    if not supports_resolution(X, field):
        raise ValueError("support verification failed; the complex is not a resolution")
    cc = boundary_matrices(X, field=Q, reduced=False)
    gens = [X.label(v) for v in cc.bases[0]]
    maps = []
    for d in sorted(cc.bases):
        if d == 0:
            continue
        entries = []
        for c, col in enumerate(cc.cols[d]):
            lt = X.label(cc.bases[d][c])
            for r, s in col:
                ls = X.label(cc.bases[d - 1][r])
                quotient = tuple(a - b for a, b in zip(lt, ls))
                entries.append((r, c, s, quotient))
        maps.append(
            {
                "degree": d,
                "rows": len(cc.bases[d - 1]),
                "cols": len(cc.bases[d]),
                "entries": entries,
            }
        )
    return ResolutionExport(list(X.f_vector()), gens, maps)
