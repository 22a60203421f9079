"""Graph predicates used by the theorems: partiteness, cliques, universal vertices.

All certificates name vertices by ring element id, not by position in the graph.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field

import numpy as np

from .errors import FalsificationError, PreconditionError, UnsupportedError
from .graph import ComaxGraph, adjacent
from .ideals import LeftIdeal, avoidance_pick, intersection
from .ring import FiniteRing, is_commutative

VERTEX_LIMIT = 512
NODE_BUDGET = 2_000_000


@dataclass(frozen=True)
class PartiteCertificate:
    parts: tuple[tuple[int, ...], ...]
    complete: bool

    @property
    def n(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class CliqueCertificate:
    vertices: tuple[int, ...]
    construction: str  # brute_force | theorem2
    exact: bool = True

    @property
    def size(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class Coloring:
    n: int
    colors: dict[int, int] = field(compare=False)
    exact: bool = True

    @property
    def note(self) -> str | None:
        return None if self.exact else "upper bound only"


@dataclass(frozen=True)
class UniversalVertexReport:
    universal: tuple[int, ...]


def _bitsets(G: ComaxGraph) -> list[int]:
    out = []
    for row in G.adjacency:
        out.append(int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little"))
    return out


def _iter_bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


# --------------------------------------------------------------------------
# Multipartite structure
# --------------------------------------------------------------------------


def is_complete_multipartite(G: ComaxGraph) -> PartiteCertificate | None:
    """Partition into non-adjacency classes if "equal or non-adjacent" is an equivalence."""
    closed = ~G.adjacency
    groups: dict[bytes, list[int]] = {}
    for i, row in enumerate(closed):
        groups.setdefault(row.tobytes(), []).append(i)
    parts = []
    for key, members in groups.items():
        row = np.frombuffer(key, dtype=bool)
        if np.flatnonzero(row).tolist() != members:
            return None
        parts.append(tuple(G.vertices[i] for i in members))
    parts.sort()
    return PartiteCertificate(tuple(parts), True)


def verify_partition(G: ComaxGraph, cert: PartiteCertificate) -> bool:
    """Definitional check: parts cover V disjointly, are independent, and (if complete) fully joined."""
    flat = [v for part in cert.parts for v in part]
    if sorted(flat) != list(G.vertices):
        return False
    part_of = {v: k for k, part in enumerate(cert.parts) for v in part}
    for i, u in enumerate(G.vertices):
        for j in range(i + 1, len(G.vertices)):
            v = G.vertices[j]
            same = part_of[u] == part_of[v]
            edge = bool(G.adjacency[i, j])
            if same and edge:
                return False
            if cert.complete and not same and not edge:
                return False
    return True


# --------------------------------------------------------------------------
# Cliques
# --------------------------------------------------------------------------


def _color_bound(cand: int, nbrs: list[int]) -> int:
    """Number of colors a greedy sequential coloring of ``cand`` uses."""
    colors = 0
    rest = cand
    while rest:
        colors += 1
        avail = rest
        while avail:
            v = (avail & -avail).bit_length() - 1
            rest &= ~(1 << v)
            avail &= ~(1 << v) & ~nbrs[v]
    return colors


def _max_clique_indices(nbrs: list[int], n: int) -> tuple[list[int], bool]:
    best: list[int] = []
    nodes = 0
    exhausted = False

    def expand(cur: list[int], cand: int) -> None:
        nonlocal best, nodes, exhausted
        if len(cur) > len(best):
            best = list(cur)
        if not cand or exhausted:
            return
        if len(cur) + _color_bound(cand, nbrs) <= len(best):
            return
        # ascending branching order makes the first maximum clique found the lexicographically least
        while cand:
            nodes += 1
            if nodes > NODE_BUDGET:
                exhausted = True
                return
            if len(cur) + bin(cand).count("1") <= len(best):
                return
            v = (cand & -cand).bit_length() - 1
            cur.append(v)
            expand(cur, cand & nbrs[v])
            cur.pop()
            cand &= ~(1 << v)

    expand([], (1 << n) - 1)
    return best, not exhausted


def _greedy_clique(nbrs: list[int], n: int) -> list[int]:
    order = sorted(range(n), key=lambda v: (-bin(nbrs[v]).count("1"), v))
    clique: list[int] = []
    cand = (1 << n) - 1
    for v in order:
        if cand >> v & 1:
            clique.append(v)
            cand &= nbrs[v]
    return sorted(clique)


def max_clique(G: ComaxGraph, limit: int = VERTEX_LIMIT) -> CliqueCertificate:
    """Maximum clique by branch and bound; lexicographically least among maximum cliques."""
    n = len(G)
    nbrs = _bitsets(G)
    if n > limit:
        idx, exact = _greedy_clique(nbrs, n), False
    else:
        idx, exact = _max_clique_indices(nbrs, n)
    return CliqueCertificate(tuple(G.vertices[i] for i in idx), "brute_force", exact)


def is_clique(G: ComaxGraph, vertices) -> bool:
    idx = [G.index(v) for v in vertices]
    sub = G.adjacency[np.ix_(idx, idx)]
    return bool((sub | np.eye(len(idx), dtype=bool)).all())


# --------------------------------------------------------------------------
# Coloring
# --------------------------------------------------------------------------


def _dsatur_order_pick(uncolored: set[int], sat: list[set[int]], deg: list[int]) -> int:
    return max(uncolored, key=lambda v: (len(sat[v]), deg[v], -v))


def _greedy_dsatur(adj: list[list[int]], n: int) -> list[int]:
    colors = [-1] * n
    sat: list[set[int]] = [set() for _ in range(n)]
    deg = [len(a) for a in adj]
    uncolored = set(range(n))
    while uncolored:
        v = _dsatur_order_pick(uncolored, sat, deg)
        c = 0
        while c in sat[v]:
            c += 1
        colors[v] = c
        uncolored.discard(v)
        for u in adj[v]:
            sat[u].add(c)
    return colors


def _exact_coloring(adj: list[list[int]], n: int, lower: int, start: list[int]) -> tuple[list[int], bool]:
    """DSATUR branch and bound seeded with a known coloring; stops once ``lower`` is met."""
    best = list(start)
    best_k = max(best) + 1 if best else 0
    if best_k <= lower:
        return best, True
    colors = [-1] * n
    deg = [len(a) for a in adj]
    nodes = 0
    exhausted = False

    def pick() -> int:
        top, key = -1, None
        for v in range(n):
            if colors[v] < 0:
                k = (len({colors[u] for u in adj[v] if colors[u] >= 0}), deg[v], -v)
                if key is None or k > key:
                    top, key = v, k
        return top

    def search(done: int, used: int) -> bool:
        nonlocal best, best_k, nodes, exhausted
        if used >= best_k:
            return False
        if done == n:
            best, best_k = list(colors), used
            return best_k <= lower
        nodes += 1
        if nodes > NODE_BUDGET:
            exhausted = True
            return True
        v = pick()
        forbidden = {colors[u] for u in adj[v] if colors[u] >= 0}
        for c in range(min(used + 1, best_k - 1)):
            if c in forbidden:
                continue
            colors[v] = c
            if search(done + 1, max(used, c + 1)):
                colors[v] = -1
                return True
            colors[v] = -1
        return False

    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 4 * n + 100))
    try:
        search(0, 0)
    finally:
        sys.setrecursionlimit(old)
    return best, not exhausted


def chromatic_number(G: ComaxGraph, limit: int = VERTEX_LIMIT) -> Coloring:
    """Exact chromatic number: greedy DSATUR upper bound, max-clique lower bound, then branch and bound."""
    n = len(G)
    adj = [np.flatnonzero(row).tolist() for row in G.adjacency]
    start = _greedy_dsatur(adj, n)
    if n > limit:
        cols, exact = start, False
    else:
        clique = max_clique(G, limit)
        cols, exact = _exact_coloring(adj, n, clique.size, start)
        exact = exact and clique.exact
    k = max(cols) + 1 if cols else 0
    return Coloring(k, {G.vertices[i]: c for i, c in enumerate(cols)}, exact)


def is_proper_coloring(G: ComaxGraph, colors: dict[int, int]) -> bool:
    if set(colors) != set(G.vertices):
        return False
    ii, jj = np.nonzero(np.triu(G.adjacency, 1))
    return all(colors[G.vertices[i]] != colors[G.vertices[j]] for i, j in zip(ii, jj))


def is_n_partite(G: ComaxGraph, n: int, limit: int = VERTEX_LIMIT) -> tuple[bool, Coloring]:
    coloring = chromatic_number(G, limit)
    return coloring.n <= n, coloring


def ideal_coloring(G: ComaxGraph, ms) -> dict[int, int]:
    """Color each vertex by the least index of a maximal ideal containing it."""
    colors = {}
    for v in G.vertices:
        colors[v] = next((i for i, m in enumerate(ms) if v in m), -1)
    return colors


# --------------------------------------------------------------------------
# The constructive clique from maximal ideals
# --------------------------------------------------------------------------


def _adjacent_to(R: FiniteRing, pool: np.ndarray, target: int) -> int | None:
    for x in np.flatnonzero(pool):
        if int(x) != target and adjacent(R, int(x), target):
            return int(x)
    return None


def _clique_from(R: FiniteRing, x1: int, ms: list[LeftIdeal]) -> list[int]:
    """Given x1 ∈ m1 outside m2..mn, return [x1, x2, ..., xn] pairwise adjacent with x_i ∈ m_i."""
    n = len(ms)
    if n == 2:
        x2 = _adjacent_to(R, ms[1].mask, x1)
        if x2 is None:
            raise FalsificationError("no element of m2 is adjacent to x1", {"x1": x1})
        return [x1, x2]
    y = avoidance_pick(R, [ms[0], ms[-1]], ms[1:-1])
    if y is None:
        raise FalsificationError("m1 ∩ mn lies inside the union of the other ideals", {"n": n})
    x1y = R.mul(x1, y)
    sub = _clique_from(R, x1y, ms[:-1])
    xs = [x1] + sub[1:]
    prod = x1
    for x in xs[1:]:
        prod = R.mul(prod, x)
    if prod in ms[-1]:
        raise FalsificationError("x1·x2⋯x(n-1) lies in mn", {"clique": xs, "product": prod})
    xn = _adjacent_to(R, ms[-1].mask, prod)
    if xn is None:
        raise FalsificationError("no element of mn is adjacent to x1⋯x(n-1)", {"product": prod})
    return xs + [xn]


def theorem2_clique(R: FiniteRing, ms) -> CliqueCertificate:
    """An n-clique x_i ∈ m_i in the core graph, built by induction on n through prime avoidance.

    Least elements are taken at each choice point. Only defined for commutative rings.
    """
    ms = list(ms)
    if not is_commutative(R):
        raise UnsupportedError("the inductive clique construction needs a commutative ring")
    if len(ms) < 2 or len(set(ms)) != len(ms):
        raise PreconditionError("need at least two distinct maximal ideals")
    x1 = avoidance_pick(R, [ms[0]], ms[1:])
    if x1 is None:
        raise FalsificationError("m1 lies inside the union of the other maximal ideals")
    xs = _clique_from(R, x1, ms)
    for i, x in enumerate(xs):
        if x not in ms[i]:
            raise FalsificationError("constructed x_i is not in m_i", {"i": i, "x": x})
        for y in xs[i + 1:]:
            if x == y or not adjacent(R, x, y):
                raise FalsificationError("constructed vertices are not pairwise adjacent",
                                         {"clique": xs, "pair": (x, y)})
    return CliqueCertificate(tuple(xs), "theorem2")


def universal_vertices(G: ComaxGraph) -> UniversalVertexReport:
    n = len(G)
    deg = G.adjacency.sum(axis=1)
    return UniversalVertexReport(tuple(G.vertices[i] for i in np.flatnonzero(deg == n - 1)))


def naive_claim_counterexample(R: FiniteRing, ms) -> tuple[int, int, int, int] | None:
    """First (i, j, x, y) with x ∈ m_i minus m_j, y ∈ m_j minus m_i, x and y non-adjacent.

    Such a pair shows that choosing arbitrary x_i ∈ m_i outside the other chosen
    ideals does not give a clique once Max(R) has more than the chosen ideals.
    """
    ms = list(ms)
    for i in range(len(ms)):
        for j in range(i + 1, len(ms)):
            xs = np.flatnonzero(ms[i].mask & ~ms[j].mask)
            ys = np.flatnonzero(ms[j].mask & ~ms[i].mask)
            for x in xs:
                for y in ys:
                    if not adjacent(R, int(x), int(y)):
                        return i, j, int(x), int(y)
    return None
