"""Concrete distance-regular graphs and an exact Laplacian resistance oracle.

Graphs are built from explicit constructions, re-verified to be
distance-regular by BFS from every vertex, and then interrogated with exact
rational linear algebra: unit resistors on edges, one grounded vertex, and
Gauss-Jordan elimination over ``Fraction``.  This gives an independent ground
truth for the potential-based resistance formulas.
"""

from __future__ import annotations

import random
from collections import deque
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Sequence

from dataclasses import dataclass

from .arrays import IntersectionArray
from .potentials import PhiSequence, phi_recursive, resistances

SIZE_CAP = 4096
EXHAUSTIVE_LIMIT = 256
SAMPLE_PER_CLASS = 64
DEFAULT_SEED = 20120901


class UnknownFamily(ValueError):
    """No generator with that name."""


class SizeCap(ValueError):
    """The requested graph exceeds the vertex cap."""


class NotAdjacent(ValueError):
    """The operation needs an edge of the graph."""


class SingularSystem(ArithmeticError):
    """The grounded Laplacian was singular; impossible on a connected graph."""


class IrregularGraph(ValueError):
    """BFS verification contradicted the claimed intersection array."""


class HarmonicityViolation(AssertionError):
    """The potential function failed to be harmonic at some vertex."""


class ResistanceMismatch(AssertionError):
    """Oracle resistance and formula resistance disagree."""


# Pentagonal-dodecahedron edge fixture: 20 vertices, 30 edges, hand-checkable
# against the cycle-plus-chords layout (vertices 0..19 around the outer cycle).
DODECAHEDRON_EDGES: tuple[tuple[int, int], ...] = (
    (0, 1), (0, 10), (0, 19), (1, 2), (1, 8), (2, 3), (2, 6), (3, 4),
    (3, 19), (4, 5), (4, 17), (5, 6), (5, 15), (6, 7), (7, 8), (7, 14),
    (8, 9), (9, 10), (9, 13), (10, 11), (11, 12), (11, 18), (12, 13),
    (12, 16), (13, 14), (14, 15), (15, 16), (16, 17), (17, 18), (18, 19),
)


class ConcreteGraph:
    """An explicit simple connected graph with its claimed intersection array.

    Immutable after construction.  Distance-regularity with respect to the
    claimed array is verified exhaustively at build time.
    """

    def __init__(self, name: str, n: int, edges: Iterable[tuple[int, int]],
                 claimed_array: IntersectionArray):
        self.name = name
        self.n = n
        canon = set()
        for u, v in edges:
            if u == v:
                raise IrregularGraph(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise IrregularGraph(f"edge ({u},{v}) outside 0..{n - 1}")
            canon.add((min(u, v), max(u, v)))
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(canon))
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        self.claimed_array = claimed_array
        self._dist_cache: dict[int, tuple[int, ...]] = {}
        self._inverse_cache: dict[int, list[list[Fraction]]] = {}
        _verify_distance_regular(self)

    @property
    def degree(self) -> int:
        return self.claimed_array.k

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def distances_from(self, u: int) -> tuple[int, ...]:
        cached = self._dist_cache.get(u)
        if cached is None:
            cached = _bfs(self.adj, u)
            self._dist_cache[u] = cached
        return cached

    def distance(self, u: int, v: int) -> int:
        return self.distances_from(u)[v]

    def edge_list_text(self) -> str:
        """One ``u v`` pair per line, 0-based."""
        return "\n".join(f"{u} {v}" for u, v in self.edges) + "\n"

    def __repr__(self) -> str:
        return f"ConcreteGraph({self.name!r}, n={self.n}, m={len(self.edges)})"


def _bfs(adj: Sequence[Sequence[int]], src: int) -> tuple[int, ...]:
    dist = [-1] * len(adj)
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return tuple(dist)


def _verify_distance_regular(g: ConcreteGraph) -> None:
    arr = g.claimed_array
    D = arr.diameter
    for x in range(g.n):
        dist = _bfs(g.adj, x)
        if min(dist) < 0:
            raise IrregularGraph(f"{g.name}: not connected from vertex {x}")
        if max(dist) != D:
            raise IrregularGraph(f"{g.name}: diameter {max(dist)} from vertex {x}, expected {D}")
        for y in range(g.n):
            i = dist[y]
            up = sum(1 for w in g.adj[y] if dist[w] == i + 1)
            down = sum(1 for w in g.adj[y] if dist[w] == i - 1)
            if up != arr.b_at(i) or (i >= 1 and down != arr.c_at(i)):
                raise IrregularGraph(
                    f"{g.name}: vertex {y} at distance {i} from {x} has "
                    f"(b,c)=({up},{down}), claimed ({arr.b_at(i)},{arr.c_at(i) if i >= 1 else 0})"
                )


# ---------------------------------------------------------------------------
# Graph families


def _complete(n: int):
    if n < 2:
        raise UnknownFamily("complete(n) needs n >= 2")
    return n, combinations(range(n), 2), IntersectionArray((n - 1,), (1,))


def _complete_multipartite(m: int, t: int):
    if m < 2 or t < 1:
        raise UnknownFamily("complete_multipartite(m,t) needs m >= 2, t >= 1")
    if t == 1:
        return _complete(m)
    n = m * t
    edges = ((a * t + i, b * t + j)
             for a, b in combinations(range(m), 2)
             for i in range(t) for j in range(t))
    arr = IntersectionArray(((m - 1) * t, t - 1), (1, (m - 1) * t))
    return n, edges, arr


def _cycle(n: int):
    if n < 3:
        raise UnknownFamily("cycle(n) needs n >= 3")
    D = n // 2
    if n % 2:
        arr = IntersectionArray((2,) + (1,) * (D - 1), (1,) * D) if D > 1 \
            else IntersectionArray((2,), (1,))
    else:
        arr = IntersectionArray((2,) + (1,) * (D - 1), (1,) * (D - 1) + (2,))
    return n, (((i, (i + 1) % n)) for i in range(n)), arr


def _hypercube(d: int):
    if d < 1:
        raise UnknownFamily("hypercube(d) needs d >= 1")
    n = 1 << d
    edges = ((x, x | (1 << bit)) for x in range(n) for bit in range(d)
             if not x & (1 << bit))
    arr = IntersectionArray(tuple(d - i for i in range(d)), tuple(range(1, d + 1)))
    return n, edges, arr


def _petersen():
    verts = list(combinations(range(5), 2))
    edges = ((i, j) for i in range(10) for j in range(i + 1, 10)
             if not set(verts[i]) & set(verts[j]))
    return 10, edges, IntersectionArray((3, 2), (1, 1))


def _dodecahedron():
    return 20, DODECAHEDRON_EDGES, IntersectionArray((3, 2, 1, 1, 1), (1, 1, 1, 2, 3))


def _johnson(n: int, s: int):
    if s != 2:
        raise UnknownFamily("johnson(n,s) is only built for s = 2")
    if n < 4:
        raise UnknownFamily("johnson(n,2) needs n >= 4")
    verts = list(combinations(range(n), 2))
    m = len(verts)
    edges = ((i, j) for i in range(m) for j in range(i + 1, m)
             if len(set(verts[i]) & set(verts[j])) == 1)
    arr = IntersectionArray((2 * (n - 2), n - 3), (1, 4))
    return m, edges, arr


def _hamming(d: int, q: int):
    if d < 1 or q < 2:
        raise UnknownFamily("hamming(d,q) needs d >= 1, q >= 2")
    verts = list(product(range(q), repeat=d))
    index = {v: i for i, v in enumerate(verts)}
    edges = []
    for i, v in enumerate(verts):
        for pos in range(d):
            for sym in range(v[pos] + 1, q):
                edges.append((i, index[v[:pos] + (sym,) + v[pos + 1:]]))
    bs = tuple((d - i) * (q - 1) for i in range(d))
    cs = tuple(range(1, d + 1))
    return len(verts), edges, IntersectionArray(bs, cs)


_FAMILIES = {
    "complete": (_complete, 1),
    "complete_multipartite": (_complete_multipartite, 2),
    "cycle": (_cycle, 1),
    "hypercube": (_hypercube, 1),
    "petersen": (_petersen, 0),
    "dodecahedron": (_dodecahedron, 0),
    "johnson": (_johnson, 2),
    "hamming": (_hamming, 2),
}


def families() -> tuple[str, ...]:
    return tuple(sorted(_FAMILIES))


def build(name: str, *params: int, max_n: int = SIZE_CAP) -> ConcreteGraph:
    """Build a named graph; BFS re-verifies its intersection array.

    Raises :class:`UnknownFamily` for unrecognized names or parameters and
    :class:`SizeCap` when the vertex count would exceed ``max_n``.
    """
    if name not in _FAMILIES:
        raise UnknownFamily(f"unknown family {name!r}; known: {', '.join(families())}")
    fn, arity = _FAMILIES[name]
    if len(params) != arity:
        raise UnknownFamily(f"{name} takes {arity} parameter(s), got {len(params)}")
    n, edges, arr = fn(*params)
    if n > max_n:
        raise SizeCap(f"{name}{params} has {n} vertices, cap is {max_n}")
    label = name if not params else f"{name}({','.join(map(str, params))})"
    return ConcreteGraph(label, n, edges, arr)


# ---------------------------------------------------------------------------
# Exact linear algebra


def _gauss_jordan_inverse(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Invert a matrix of Fractions in place; pivots maximize numerator bits."""
    m = len(rows)
    aug = [row + [Fraction(int(i == r)) for i in range(m)] for r, row in enumerate(rows)]
    for col in range(m):
        pivot_row = -1
        pivot_bits = -1
        for r in range(col, m):
            entry = aug[r][col]
            if entry != 0 and entry.numerator.bit_length() > pivot_bits:
                pivot_bits = entry.numerator.bit_length()
                pivot_row = r
        if pivot_row < 0:
            raise SingularSystem(f"no pivot in column {col}")
        aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        inv_pivot = 1 / aug[col][col]
        aug[col] = [x * inv_pivot for x in aug[col]]
        pivot_vals = aug[col]
        for r in range(m):
            factor = aug[r][col]
            if r == col or factor == 0:
                continue
            row = aug[r]
            for c in range(col, 2 * m):
                if pivot_vals[c]:
                    row[c] -= factor * pivot_vals[c]
    return [row[m:] for row in aug]


def _grounded_inverse(g: ConcreteGraph, ground: int) -> list[list[Fraction]]:
    inv = g._inverse_cache.get(ground)
    if inv is not None:
        return inv
    keep = [v for v in range(g.n) if v != ground]
    pos = {v: i for i, v in enumerate(keep)}
    rows = [[Fraction(0)] * len(keep) for _ in keep]
    for v in keep:
        rows[pos[v]][pos[v]] = Fraction(len(g.adj[v]))
        for w in g.adj[v]:
            if w != ground:
                rows[pos[v]][pos[w]] -= 1
    inv = _gauss_jordan_inverse(rows)
    g._inverse_cache[ground] = inv
    return inv


def effective_resistance(g: ConcreteGraph, u: int, v: int, ground: int = 0) -> Fraction:
    """Exact resistance with unit current injected at u and extracted at v.

    Solves the Laplacian system with the given vertex grounded; the value is
    independent of the grounding choice.
    """
    if u == v:
        raise ValueError("resistance needs two distinct vertices")
    if not (0 <= u < g.n and 0 <= v < g.n and 0 <= ground < g.n):
        raise ValueError("vertex out of range")
    inv = _grounded_inverse(g, ground)
    keep_index = lambda x: x if x < ground else x - 1
    if u == ground:
        return inv[keep_index(v)][keep_index(v)]
    if v == ground:
        return inv[keep_index(u)][keep_index(u)]
    iu, iv = keep_index(u), keep_index(v)
    return inv[iu][iu] + inv[iv][iv] - 2 * inv[iu][iv]


# ---------------------------------------------------------------------------
# Distance partitions and the harmonic potential


@dataclass(frozen=True)
class DistancePartition:
    """For an edge (u, v): the split of V by the distance pair (d(u,z), d(v,z)).

    ``near_u[i]`` holds the z with d(u,z) = i, d(v,z) = i + 1; ``near_v[i]``
    the mirror image; ``equidistant[i]`` the z with d(u,z) = d(v,z) = i.  The
    three families partition the vertex set and |d(u,z) - d(v,z)| <= 1.
    """

    u: int
    v: int
    near_u: tuple[frozenset, ...]
    near_v: tuple[frozenset, ...]
    equidistant: tuple[frozenset, ...]

    def sizes(self) -> tuple[tuple[int, int, int], ...]:
        return tuple(
            (len(a), len(b), len(c))
            for a, b, c in zip(self.near_u, self.near_v, self.equidistant)
        )


def distance_partition(g: ConcreteGraph, u: int, v: int) -> DistancePartition:
    """Partition from two BFS sweeps; requires u ~ v."""
    if v not in g.adj[u]:
        raise NotAdjacent(f"{u} and {v} are not adjacent in {g.name}")
    du = g.distances_from(u)
    dv = g.distances_from(v)
    D = g.claimed_array.diameter
    near_u = [set() for _ in range(D + 1)]
    near_v = [set() for _ in range(D + 1)]
    equal = [set() for _ in range(D + 1)]
    for z in range(g.n):
        gap = du[z] - dv[z]
        if gap == -1:
            near_u[du[z]].add(z)
        elif gap == 1:
            near_v[dv[z]].add(z)
        elif gap == 0:
            equal[du[z]].add(z)
        else:
            raise IrregularGraph(f"|d(u,z)-d(v,z)| = {abs(gap)} > 1 at z={z}")
    return DistancePartition(
        u, v,
        tuple(frozenset(s) for s in near_u),
        tuple(frozenset(s) for s in near_v),
        tuple(frozenset(s) for s in equal),
    )


def partition_size_profile(g: ConcreteGraph) -> tuple[tuple[int, int, int], ...]:
    """The common partition sizes, verified identical across every edge."""
    profile = None
    for u, v in g.edges:
        sizes = distance_partition(g, u, v).sizes()
        if profile is None:
            profile = sizes
        elif sizes != profile:
            raise IrregularGraph(
                f"{g.name}: partition sizes differ between edges ({sizes} vs {profile})"
            )
    return profile


@dataclass(frozen=True)
class HarmonicReport:
    """Outcome of the vertex-by-vertex harmonicity check for one edge."""

    graph: str
    edge: tuple[int, int]
    vertices_checked: int
    current: Fraction
    resistance: Fraction
    d1: Fraction


def verify_harmonic(g: ConcreteGraph, u: int, v: int,
                    phi: PhiSequence | None = None) -> HarmonicReport:
    """Check the potential function built from the array on the edge (u, v).

    The function takes value phi_i on ``near_u[i]``, -phi_i on ``near_v[i]``
    and 0 on equidistant vertices.  It must be exactly harmonic off {u, v},
    and the implied resistance (f(u) - f(v)) / I must equal d_1 and the
    Laplacian oracle's value.
    """
    if phi is None:
        phi = phi_recursive(g.claimed_array)
    part = distance_partition(g, u, v)
    f = [Fraction(0)] * g.n
    for i, bucket in enumerate(part.near_u):
        for z in bucket:
            f[z] = phi.at(i)
    for i, bucket in enumerate(part.near_v):
        for z in bucket:
            f[z] = -phi.at(i)
    for z in range(g.n):
        if z == u or z == v:
            continue
        net = sum((f[w] - f[z] for w in g.adj[z]), Fraction(0))
        if net != 0:
            raise HarmonicityViolation(
                f"{g.name}: net flow {net} at vertex {z} for edge ({u},{v})"
            )
    current = sum((f[u] - f[w] for w in g.adj[u]), Fraction(0))
    resistance = (f[u] - f[v]) / current
    d1 = resistances(phi).d[0]
    if resistance != d1:
        raise ResistanceMismatch(f"{g.name}: (f(u)-f(v))/I = {resistance} but d_1 = {d1}")
    oracle_value = effective_resistance(g, u, v)
    if resistance != oracle_value:
        raise ResistanceMismatch(
            f"{g.name}:潜harmonic value {resistance} but Laplacian oracle {oracle_value}"
        )
    return HarmonicReport(g.name, (u, v), g.n - 2, current, resistance, d1)


# ---------------------------------------------------------------------------
# Formula-versus-oracle cross-check


@dataclass(frozen=True)
class CrossCheckReport:
    graph: str
    n: int
    d: tuple[Fraction, ...]
    pairs_checked: tuple[int, ...]
    exhaustive: bool


def _sampled_pairs(g: ConcreteGraph, j: int, rng: random.Random) -> list[tuple[int, int]]:
    pairs = []
    seen = set()
    attempts = 0
    while len(pairs) < SAMPLE_PER_CLASS and attempts < 40 * SAMPLE_PER_CLASS:
        attempts += 1
        u = rng.randrange(g.n)
        candidates = [w for w, dist in enumerate(g.distances_from(u)) if dist == j]
        if not candidates:
            continue
        v = rng.choice(candidates)
        key = (min(u, v), max(u, v))
        if key not in seen:
            seen.add(key)
            pairs.append(key)
    return pairs


def cross_check(g: ConcreteGraph, seed: int = DEFAULT_SEED) -> CrossCheckReport:
    """Assert effective_resistance == d_j for pairs in every distance class.

    Exhaustive when n <= 256, otherwise a deterministic seeded sample of up
    to 64 pairs per class.  A mismatch falsifies the implementation, not the
    formulas, and raises :class:`ResistanceMismatch`.
    """
    phi = phi_recursive(g.claimed_array)
    profile = resistances(phi)
    D = g.claimed_array.diameter
    exhaustive = g.n <= EXHAUSTIVE_LIMIT
    counts = []
    if exhaustive:
        per_class: list[list[tuple[int, int]]] = [[] for _ in range(D + 1)]
        for u in range(g.n):
            dist = g.distances_from(u)
            for v in range(u + 1, g.n):
                per_class[dist[v]].append((u, v))
        class_pairs = per_class[1:]
    else:
        rng = random.Random(seed)
        class_pairs = [_sampled_pairs(g, j, rng) for j in range(1, D + 1)]
    for j, pairs in enumerate(class_pairs, start=1):
        expected = profile.d[j - 1]
        for u, v in pairs:
            got = effective_resistance(g, u, v)
            if got != expected:
                raise ResistanceMismatch(
                    f"{g.name}: pair ({u},{v}) at distance {j}: oracle {got}, formula {expected}"
                )
        counts.append(len(pairs))
    return CrossCheckReport(g.name, g.n, profile.d, tuple(counts), exhaustive)
