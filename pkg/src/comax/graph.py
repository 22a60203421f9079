"""Comaximal graphs Γ(R) and their induced subgraphs.

Two distinct elements a, b are adjacent iff Ra + Rb = R. Variants:

* ``full``          every element
* ``units_only``    the units (Γ₁)
* ``nonunits_only`` the non-units (Γ₂)
* ``core``          non-units outside the Jacobson radical (Γ₂(R) minus J(R))
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .errors import PreconditionError
from .ideals import jacobson_radical, maximal_left_ideals, principal_masks
from .ring import FiniteRing, check_size, memoize, unit_mask

VARIANTS = ("full", "units_only", "nonunits_only", "core")
VARIANT_ALIASES = {"units": "units_only", "nonunits": "nonunits_only"}


@dataclass(frozen=True)
class ComaxGraph:
    ring_label: str
    variant: str
    vertices: tuple[int, ...]
    adjacency: np.ndarray = field(compare=False, repr=False)
    labels: tuple[str, ...] = field(compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.vertices)

    def index(self, v: int) -> int:
        return self.vertices.index(v)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[self.index(u), self.index(v)])

    def neighbors(self, v: int) -> list[int]:
        row = self.adjacency[self.index(v)]
        return [self.vertices[j] for j in np.flatnonzero(row)]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (i, j) index pairs with i < j, lexicographically sorted."""
        ii, jj = np.nonzero(np.triu(self.adjacency, 1))
        return [(int(i), int(j)) for i, j in zip(ii, jj)]

    @property
    def edge_count(self) -> int:
        return int(np.triu(self.adjacency, 1).sum())


@memoize
def _comax_classes(R: FiniteRing) -> tuple[np.ndarray, np.ndarray]:
    """Principal-ideal class of each element and the class-level comaximality matrix.

    Adjacency depends only on the pair (Ra, Rb); with k distinct principal
    ideals this needs k² membership scans instead of |R|².
    """
    pm = principal_masks(R)
    _, first, cls = np.unique(pm, axis=0, return_index=True, return_inverse=True)
    cls = np.asarray(cls).reshape(-1)
    k = len(first)
    comax = np.zeros((k, k), dtype=bool)
    for i, a in enumerate(first):
        # 1 - u for every u in Ra, then look for it in each Rb
        one_minus = R.add_table[R.one, R.neg_table[np.flatnonzero(pm[a])]]
        comax[i] = pm[first][:, one_minus].any(axis=1)
    comax.setflags(write=False)
    cls.setflags(write=False)
    return cls, comax


def adjacent(R: FiniteRing, a: int, b: int) -> bool:
    """Ra + Rb = R, decided as: some u ∈ Ra has 1 - u ∈ Rb."""
    if a == b:
        raise PreconditionError("the comaximal graph is simple; a and b must differ")
    pm = principal_masks(R)
    ra = np.flatnonzero(pm[a])
    return bool(pm[b][R.add_table[R.one, R.neg_table[ra]]].any())


def adjacent_naive(R: FiniteRing, a: int, b: int) -> bool:
    """∃ r, s with r·a + s·b = 1, by a full double loop over multipliers."""
    if a == b:
        raise PreconditionError("the comaximal graph is simple; a and b must differ")
    ra = R.mul_table[:, a]
    sb = R.mul_table[:, b]
    return bool((R.add_table[np.ix_(ra, sb)] == R.one).any())


def normalize_variant(variant: str) -> str:
    variant = VARIANT_ALIASES.get(variant, variant)
    if variant not in VARIANTS:
        raise ValueError(f"unknown graph variant {variant!r}; expected one of {VARIANTS}")
    return variant


def vertex_set(R: FiniteRing, variant: str) -> tuple[int, ...]:
    variant = normalize_variant(variant)
    um = unit_mask(R)
    if variant == "full":
        mask = np.ones(R.size, dtype=bool)
    elif variant == "units_only":
        mask = um.copy()
    elif variant == "nonunits_only":
        mask = ~um
    else:
        mask = ~um & ~jacobson_radical(R).mask
    return tuple(int(v) for v in np.flatnonzero(mask))


@memoize
def build_graph(R: FiniteRing, variant: str = "core") -> ComaxGraph:
    variant = normalize_variant(variant)
    check_size(R.size, R.label)
    verts = vertex_set(R, variant)
    cls, comax = _comax_classes(R)
    idx = np.array(verts, dtype=np.int64)
    adj = comax[np.ix_(cls[idx], cls[idx])].copy() if verts else np.zeros((0, 0), dtype=bool)
    np.fill_diagonal(adj, False)
    adj.setflags(write=False)
    return ComaxGraph(R.label, variant, verts, adj, tuple(R.format(v) for v in verts))


def core_graph(R: FiniteRing) -> ComaxGraph:
    return build_graph(R, "core")


# --------------------------------------------------------------------------
# Blow-up relation with R/J(R)
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class BlowupReport:
    fiber_size: int
    adjacency_transfer_ok: bool
    fibers_independent_ok: bool
    fiber_sizes_ok: bool
    core_vertices: int
    quotient_core_vertices: int
    witness_on_failure: tuple[int, int] | None = None

    @property
    def ok(self) -> bool:
        return self.adjacency_transfer_ok and self.fibers_independent_ok and self.fiber_sizes_ok

    @property
    def literal_isomorphism(self) -> bool:
        """Whether the two core graphs even have the same number of vertices."""
        return self.core_vertices == self.quotient_core_vertices


def blowup_check(R: FiniteRing) -> BlowupReport:
    """Compare the core graph of R with that of R/J(R) through the canonical projection.

    Checks (i) adjacency transfers for pairs with distinct images, (ii) pairs
    with equal images are non-adjacent, (iii) every fiber has |J(R)| vertices.
    """
    from .structure import quotient_by

    if not maximal_left_ideals(R):
        raise PreconditionError("the zero ring has no maximal left ideals")
    J = jacobson_radical(R)
    Q = quotient_by(R, J)
    G = core_graph(R)
    H = core_graph(Q.ring)
    proj = Q.projection[list(G.vertices)] if G.vertices else np.zeros(0, dtype=np.int64)
    h_index = {v: i for i, v in enumerate(H.vertices)}

    witness = None
    fiber_sizes_ok = set(int(p) for p in proj) == set(H.vertices)
    counts = np.bincount(proj, minlength=Q.ring.size) if len(proj) else np.zeros(0)
    fiber_sizes_ok = fiber_sizes_ok and all(int(counts[v]) == len(J) for v in H.vertices)

    same = proj[:, None] == proj[None, :]
    np.fill_diagonal(same, False)
    clash = np.argwhere(same & G.adjacency)
    fibers_ok = clash.size == 0
    if not fibers_ok:
        witness = (G.vertices[clash[0][0]], G.vertices[clash[0][1]])

    transfer_ok = fiber_sizes_ok
    if transfer_ok and len(proj):
        hp = np.array([h_index[int(p)] for p in proj])
        image_adj = H.adjacency[np.ix_(hp, hp)]
        bad = np.argwhere(~same & ~np.eye(len(proj), dtype=bool) & (image_adj != G.adjacency))
        transfer_ok = bad.size == 0
        if not transfer_ok and witness is None:
            witness = (G.vertices[bad[0][0]], G.vertices[bad[0][1]])
    return BlowupReport(
        fiber_size=len(J),
        adjacency_transfer_ok=bool(transfer_ok),
        fibers_independent_ok=bool(fibers_ok),
        fiber_sizes_ok=bool(fiber_sizes_ok),
        core_vertices=len(G),
        quotient_core_vertices=len(H),
        witness_on_failure=witness,
    )


# --------------------------------------------------------------------------
# Export
# --------------------------------------------------------------------------


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_graph(G: ComaxGraph, fmt: str = "json") -> bytes:
    if fmt == "json":
        doc = {
            "ring": G.ring_label,
            "variant": G.variant,
            "vertices": list(G.labels),
            "edges": [list(e) for e in G.edges()],
        }
        return (json.dumps(doc, indent=2) + "\n").encode("utf-8")
    if fmt == "dot":
        lines = [f"graph {_dot_quote(f'{G.ring_label} {G.variant}')} {{"]
        lines += [f"  v{i} [label={_dot_quote(lab)}];" for i, lab in enumerate(G.labels)]
        lines += [f"  v{i} -- v{j};" for i, j in G.edges()]
        lines.append("}")
        return ("\n".join(lines) + "\n").encode("utf-8")
    raise ValueError(f"unknown export format {fmt!r}; expected 'dot' or 'json'")
