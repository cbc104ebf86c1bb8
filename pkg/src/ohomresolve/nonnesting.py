"""Nonnesting partitions, arc diagrams, the diagram poset, and weights.

A partition of [r] is nonnesting when no block spans a gap of another:
there are no a < b < c < d with a, d in one block, b, c in another, and no
element of the first block strictly between b and c.  Its arc diagram
joins consecutive elements of each block; nonnesting partitions biject
with arc diagrams in which no arc lies above another.

The diagram poset orders diagrams by P <= Q iff every arc {a, d} of Q
spans an arc {b, c} of P (a <= b < c <= d); the full path is the minimum
and the empty diagram the maximum.  Weights count cells of the hom complex
of the empty diagram into a complete graph by the principal diagram that
forces them, and Betti numbers of the associated ideals are weight sums
over lower sets.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb

from .complexes import Complex, build_complex, verts_of
from .homcomplex import cell_dim, make_cell
from .resolution import IdealGens, ideal_generators


# ---------------------------------------------------------------------------
# partitions

class Partition:
    """Set partition of 1..r; blocks are kept sorted by minimum."""

    __slots__ = ("r", "blocks")

    def __init__(self, r: int, blocks):
        blocks = tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))
        seen = [v for b in blocks for v in b]
        if sorted(seen) != list(range(1, r + 1)):
            raise ValueError(f"blocks must partition 1..{r}")
        self.r = r
        self.blocks = blocks

    def __eq__(self, other):
        return isinstance(other, Partition) and (self.r, self.blocks) == (other.r, other.blocks)

    def __hash__(self):
        return hash((self.r, self.blocks))

    def __repr__(self):
        return f"Partition({self.r}, {list(map(list, self.blocks))})"

    def __str__(self):
        return "|".join(",".join(map(str, b)) for b in self.blocks)


def parse_partition(text: str) -> Partition:
    """Parse the CLI syntax '1,4|2,5,6|3' (blocks by '|', elements by ',')."""
    try:
        blocks = [[int(tok) for tok in blk.split(",")] for blk in text.split("|")]
    except ValueError:
        raise ValueError(f"cannot parse partition {text!r}") from None
    r = sum(len(b) for b in blocks)
    return Partition(r, blocks)


def is_nonnesting(P: Partition) -> bool:
    for bi in P.blocks:
        si = set(bi)
        for bj in P.blocks:
            if bi == bj:
                continue
            for a in bi:
                for d in bi:
                    if a >= d:
                        continue
                    for b in bj:
                        for c in bj:
                            if a < b < c < d and not any(b < e < c for e in si):
                                return False
    return True


def _set_partitions(r: int):
    """All set partitions of 1..r, by restricted growth."""
    if r == 0:
        yield []
        return

    def grow(v, blocks):
        if v > r:
            yield [list(b) for b in blocks]
            return
        for b in blocks:
            b.append(v)
            yield from grow(v + 1, blocks)
            b.pop()
        blocks.append([v])
        yield from grow(v + 1, blocks)
        blocks.pop()

    yield from grow(1, [])


def enumerate_nonnesting(r: int, bound: int = 10) -> list:
    """All nonnesting partitions of 1..r (Catalan many)."""
    if not 1 <= r <= bound:
        raise ValueError(f"r must lie in 1..{bound}")
    out = [Partition(r, blocks) for blocks in _set_partitions(r)]
    return sorted((P for P in out if is_nonnesting(P)), key=lambda P: P.blocks)


# ---------------------------------------------------------------------------
# arc diagrams

@dataclass(frozen=True)
class ArcDiagram:
    """Arcs {i < j} of a nonnesting partition: at most one arc leaves each
    vertex rightward, at most one arrives leftward, and no arc lies above
    another."""

    r: int
    arcs: frozenset

    def __str__(self):
        return str(diagram_partition(self))

    def sorted_arcs(self):
        return sorted(self.arcs)


def make_diagram(r: int, arcs) -> ArcDiagram:
    arcs = frozenset((min(a, b), max(a, b)) for a, b in arcs)
    left = set()
    right = set()
    for i, j in arcs:
        if not 1 <= i < j <= r:
            raise ValueError(f"arc {(i, j)} out of range")
        if i in left or j in right:
            raise ValueError("a vertex carries two arcs on the same side")
        left.add(i)
        right.add(j)
    for a, d in arcs:
        for b, c in arcs:
            if a < b and c < d:
                raise ValueError(f"arcs {(a, d)} and {(b, c)} nest")
    return ArcDiagram(r, arcs)


def arc_diagram(P: Partition) -> ArcDiagram:
    """Arcs between consecutive elements of each block of a nonnesting partition."""
    if not is_nonnesting(P):
        raise ValueError("partition nests; reduce_graph handles raw graphs")
    arcs = []
    for b in P.blocks:
        arcs.extend(zip(b, b[1:]))
    return make_diagram(P.r, arcs)


def diagram_partition(d: ArcDiagram) -> Partition:
    """Blocks of the diagram: connected components of the arc paths."""
    nxt = {i: j for i, j in d.arcs}
    starts = set(range(1, d.r + 1)) - {j for _, j in d.arcs}
    blocks = []
    for s in sorted(starts):
        blk = [s]
        while blk[-1] in nxt:
            blk.append(nxt[blk[-1]])
        blocks.append(blk)
    return Partition(d.r, blocks)


def enumerate_diagrams(r: int, bound: int = 10) -> list:
    return [arc_diagram(P) for P in enumerate_nonnesting(r, bound)]


def reduce_graph(r: int, edges) -> ArcDiagram:
    """Delete edges that span another edge until an arc diagram remains.

    An edge {a, d} is deleted when some other edge {b, c} has
    a <= b < c <= d; the order of deletions does not affect the result.
    The surviving edges form the arc diagram of the unique nonnesting
    partition defining the same ordered homomorphism ideal into complete
    graphs.
    """
    cur = {(min(a, b), max(a, b)) for a, b in edges}
    for i, j in cur:
        if not 1 <= i < j <= r:
            raise ValueError(f"edge {(i, j)} out of range")
    changed = True
    while changed:
        changed = False
        for ad in sorted(cur):
            a, d = ad
            if any((b, c) != ad and a <= b and c <= d for b, c in cur):
                cur.discard(ad)
                changed = True
                break
    return make_diagram(r, cur)


def diagram_complex(d: ArcDiagram) -> Complex:
    """The diagram as a one-dimensional complex with all r vertices present."""
    covered = {v for arc in d.arcs for v in arc}
    facets = [list(a) for a in d.sorted_arcs()]
    facets += [[v] for v in range(1, d.r + 1) if v not in covered]
    return build_complex(facets, d.r)


def complete_graph(n: int) -> Complex:
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    if n == 1:
        return build_complex([[1]], 1)
    return build_complex([[i, j] for i in range(1, n) for j in range(i + 1, n + 1)], n)


def nonnesting_ideal(P: Partition, n: int) -> IdealGens:
    """Degree-r ideal whose generators restrict squarefree on the blocks of P."""
    return ideal_generators(diagram_complex(arc_diagram(P)), complete_graph(n))


# ---------------------------------------------------------------------------
# the diagram poset

def poset_leq(P: ArcDiagram, Q: ArcDiagram) -> bool:
    """P <= Q iff every arc of Q spans some arc of P."""
    if P.r != Q.r:
        raise ValueError("diagrams on different ground sets")
    return all(
        any(a <= b and c <= d for b, c in P.arcs) for a, d in Q.arcs
    )


@dataclass
class DiagramPoset:
    """All nonnesting arc diagrams of [r] with order and Moebius function."""

    r: int
    elements: list
    _index: dict
    _leq: list
    _mobius: dict

    def index(self, d: ArcDiagram) -> int:
        return self._index[d]

    def leq(self, a: ArcDiagram, b: ArcDiagram) -> bool:
        return self._leq[self.index(a)][self.index(b)]

    def lower_set(self, d: ArcDiagram) -> list:
        j = self.index(d)
        return [e for i, e in enumerate(self.elements) if self._leq[i][j]]

    def mobius(self, a: ArcDiagram, b: ArcDiagram) -> int:
        return self._mobius.get((self.index(a), self.index(b)), 0)

    def minimum(self) -> ArcDiagram:
        (m,) = [e for i, e in enumerate(self.elements)
                if all(self._leq[i][j] for j in range(len(self.elements)))]
        return m

    def maximum(self) -> ArcDiagram:
        (m,) = [e for i, e in enumerate(self.elements)
                if all(self._leq[j][i] for j in range(len(self.elements)))]
        return m


def build_poset(r: int, bound: int = 10) -> DiagramPoset:
    elems = enumerate_diagrams(r, bound)
    k = len(elems)
    idx = {d: i for i, d in enumerate(elems)}
    leq = [[poset_leq(a, b) for b in elems] for a in elems]
    mob = {}
    # Moebius by recursion over intervals: mu(a,a) = 1 and the values on
    # [a,b) sum to -mu(a,b).
    order = sorted(range(k), key=lambda i: sum(leq[j][i] for j in range(k)))
    for a in range(k):
        mob[(a, a)] = 1
        for b in order:
            if b == a or not leq[a][b]:
                continue
            s = sum(mob.get((a, z), 0) for z in range(k) if leq[a][z] and leq[z][b] and z != b)
            mob[(a, b)] = -s
    return DiagramPoset(r, elems, idx, leq, mob)


# ---------------------------------------------------------------------------
# cells over the empty diagram, forcing diagrams, weights

def ohom_empty_cells(r: int, n: int):
    """Cells of the hom complex of the empty diagram on [r] into K_n.

    A tuple of parts is such a cell exactly when max(part_i) <= min(part_i+1)
    for consecutive coordinates; this interval characterization is
    cross-checked against the generic selection test in the test suite.
    """
    if r == 0:
        yield ()
        return

    full = (1 << n) - 1

    def rest(i, lo, prefix):
        # parts on coordinates i.. with values >= lo
        avail = full & ~((1 << (lo - 1)) - 1)
        sub = avail
        while sub:
            part = sub
            if i == r - 1:
                yield prefix + (part,)
            else:
                yield from rest(i + 1, part.bit_length(), prefix + (part,))
            sub = (sub - 1) & avail

    yield from rest(0, 1, ())


def forcing_diagram(cell) -> ArcDiagram:
    """Principal generator of the diagrams whose hom complexes contain the cell.

    Collect the pairs i < j with max(part_i) < min(part_j): these are the
    arcs forced strict by every selection; the reduced graph of that edge
    set generates the upper set.
    """
    r = len(cell)
    if any(p <= 0 for p in cell):
        raise ValueError("malformed cell")
    maxs = [p.bit_length() for p in cell]
    mins = [(p & -p).bit_length() for p in cell]
    for i in range(r - 1):
        if maxs[i] > mins[i + 1]:
            raise ValueError("not a cell over the empty diagram (order violated)")
    edges = [
        (i + 1, j + 1)
        for i in range(r)
        for j in range(i + 1, r)
        if maxs[i] < mins[j]
    ]
    return reduce_graph(r, edges)


@dataclass
class WeightTable:
    """Weights of every diagram of [r] for fixed n and homological degree k."""

    r: int
    n: int
    k: int
    table: dict

    def __getitem__(self, d: ArcDiagram) -> int:
        return self.table[d]

    def to_dict(self):
        return {str(d): w for d, w in sorted(self.table.items(), key=lambda t: str(t[0]))}


def weights(r: int, n: int, k: int, method: str = "bucket", bound: int = 8) -> WeightTable:
    """Weight of each diagram: k-cells over the empty diagram it forces.

    ``method='bucket'`` enumerates and buckets the cells directly;
    ``method='mobius'`` recovers the same numbers by Moebius inversion of
    Betti numbers computed through the generic hom-complex route.
    """
    if not (1 <= r <= bound and 1 <= n <= bound):
        raise ValueError(f"r and n must lie in 1..{bound}")
    if k < 0:
        raise ValueError("k must be nonnegative")
    table = {d: 0 for d in enumerate_diagrams(r)}
    if method == "bucket":
        counts = Counter()
        for cell in ohom_empty_cells(r, n):
            if cell_dim(cell) == k:
                counts[forcing_diagram(cell)] += 1
        table.update(counts)
    elif method == "mobius":
        from .resolution import betti_numbers  # local to avoid cycle at import

        poset = build_poset(r)
        Kn = complete_graph(n)
        betti = {}
        for d in poset.elements:
            bt = betti_numbers(diagram_complex(d), Kn)
            betti[d] = bt[k] if k < len(bt) else 0
        for q in poset.elements:
            table[q] = sum(
                poset.mobius(p, q) * betti[p] for p in poset.lower_set(q)
            )
    else:
        raise ValueError(f"unknown method {method!r}")
    return WeightTable(r, n, k, table)


def weight0_closed_form(d: ArcDiagram, n: int) -> int:
    """Zeroth weight in closed form.

    Zero when some arc spans more than one step; otherwise n choose the
    number of connected components of the complement of the diagram inside
    the full path on [r].
    """
    if any(j - i > 1 for i, j in d.arcs):
        return 0
    comp = [set() for _ in range(d.r + 1)]
    parent = list(range(d.r + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(1, d.r):
        if (i, i + 1) not in d.arcs:
            parent[find(i)] = find(i + 1)
    components = len({find(v) for v in range(1, d.r + 1)})
    return comb(n, components)


def small_diagrams(r: int, bound: int = 10) -> list:
    """Diagrams whose arcs all have span at most 2 (even-index Fibonacci many)."""
    return [
        d for d in enumerate_diagrams(r, bound) if all(j - i <= 2 for i, j in d.arcs)
    ]


def fibonacci(k: int) -> int:
    """F_0 = F_1 = 1 convention."""
    a, b = 1, 1
    for _ in range(k):
        a, b = b, a + b
    return a
