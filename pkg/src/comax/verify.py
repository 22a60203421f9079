"""Theorem-by-theorem checks over ring catalogs.

Each check returns a :class:`TheoremReport` with verdict ``pass``, ``fail``
or ``inapplicable``. A fail means a published statement was contradicted
and always carries a ``witness`` entry in its certificate.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from .analysis import (
    chromatic_number,
    ideal_coloring,
    is_complete_multipartite,
    is_proper_coloring,
    max_clique,
    naive_claim_counterexample,
    theorem2_clique,
    universal_vertices,
)
from .catalog import Catalog, is_boolean_cube, is_m2_over_field
from .dsl import build_ring
from .errors import FalsificationError
from .fields import prime_power
from .graph import adjacent, blowup_check, core_graph
from .ideals import intersection, jacobson_radical, maximal_left_ideals, principal_masks
from .ring import (
    FiniteRing,
    is_commutative,
    make_gf_order,
    make_matrix_ring,
    make_product,
    make_zmod,
)
from .structure import remark6_maximal_ideals, ring_isomorphic, wedderburn_report

THEOREMS = ("T1a", "T2", "R4", "T5", "R6", "T7", "CEX")
PER_RING = ("T1a", "T2", "R4", "T5", "T7")


@dataclass
class TheoremReport:
    theorem_id: str
    ring_label: str
    verdict: str
    certificate: dict = field(default_factory=dict)
    elapsed: float | None = None

    def to_dict(self, timings: bool = False) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "ring_label": self.ring_label,
            "verdict": self.verdict,
            "certificate": self.certificate,
            "elapsed": round(self.elapsed, 6) if timings and self.elapsed is not None else None,
        }


def _labels(R: FiniteRing, elems: Iterable[int]) -> list[str]:
    return [R.format(int(a)) for a in elems]


def _verdict(ok: bool) -> str:
    return "pass" if ok else "fail"


def _timed(theorem_id: str):
    def wrap(fn: Callable[..., tuple[str, str, dict]]):
        def run(*args) -> TheoremReport:
            start = time.perf_counter()
            try:
                label, verdict, cert = fn(*args)
            except FalsificationError as exc:
                label = args[0].label if args and isinstance(args[0], FiniteRing) else str(args)
                verdict, cert = "fail", {"error": str(exc), "witness": exc.witness}
            return TheoremReport(theorem_id, label, verdict, cert, time.perf_counter() - start)

        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run

    return wrap


@_timed("T1a")
def check_T1a(R: FiniteRing):
    """Coloring the core graph by the least maximal ideal containing each vertex is proper.

    Also records the chromatic number; for commutative rings with at least two
    maximal ideals it must be at least |Max(R)|: an n-partite core graph forces |Max(R)| <= n.
    """
    ms = maximal_left_ideals(R)
    G = core_graph(R)
    colors = ideal_coloring(G, ms)
    uncovered = [v for v, c in colors.items() if c < 0]
    proper = not uncovered and is_proper_coloring(G, colors)
    chi = chromatic_number(G)
    cert = {
        "max_ideals": len(ms),
        "core_vertices": len(G),
        "coloring": {R.format(v): c for v, c in colors.items()},
        "proper": proper,
        "chromatic_number": chi.n,
        "chromatic_exact": chi.exact,
    }
    ok = proper
    if is_commutative(R) and len(ms) >= 2 and chi.exact:
        cert["chromatic_at_least_max"] = chi.n >= len(ms)
        ok = ok and chi.n >= len(ms)
    if not ok:
        bad = [(u, v) for u, v in ((G.vertices[i], G.vertices[j]) for i, j in G.edges())
               if colors[u] == colors[v]]
        cert["witness"] = {"uncovered": _labels(R, uncovered),
                           "monochromatic_edge": _labels(R, bad[0]) if bad else None,
                           "chromatic_number": chi.n, "max_ideals": len(ms)}
    return R.label, _verdict(ok), cert


@_timed("T2")
def check_T2(R: FiniteRing):
    """With n >= 2 maximal ideals the core graph has an n-clique.

    Commutative rings: the inductive construction plus an independent maximum
    clique search. Non-commutative rings: search only (outside the proven case).
    """
    ms = maximal_left_ideals(R)
    n = len(ms)
    if n < 2:
        return R.label, "inapplicable", {"max_ideals": n}
    G = core_graph(R)
    mc = max_clique(G)
    cert = {
        "max_ideals": n,
        "max_clique": _labels(R, mc.vertices),
        "clique_number": mc.size,
        "clique_exact": mc.exact,
    }
    if not is_commutative(R):
        cert["scope"] = "non-commutative: search only"
        if mc.size >= n:
            return R.label, "pass", cert
        cert["note"] = "clique number below |Max(R)| outside the commutative hypothesis"
        return R.label, "inapplicable", cert
    t2 = theorem2_clique(R, ms)
    cert["constructed_clique"] = _labels(R, t2.vertices)
    naive = naive_claim_counterexample(R, ms)
    if naive is not None:
        i, j, x, y = naive
        cert["naive_claim_counterexample"] = {
            "ideals": [i, j], "x_in_mi_not_mj": R.format(x), "y_in_mj_not_mi": R.format(y),
            "adjacent": False,
        }
    ok = t2.size == n and mc.size >= n
    if not ok:
        cert["witness"] = {"constructed": t2.size, "clique_number": mc.size, "max_ideals": n}
    return R.label, _verdict(ok), cert


@_timed("CEX")
def check_CEX():
    """In Z2 x Z2 x Z2: e1 ∈ m2 minus m1, e2 ∈ m1 minus m2, yet e1 and e2 are not adjacent."""
    R = make_product([make_zmod(2)] * 3)
    ms = maximal_left_ideals(R)
    coord_zero = []
    for k in range(2):
        mask = np.array([R.decode(a)[k] == 0 for a in R.elements()])
        coord_zero.append(next((m for m in ms if (m.mask == mask).all()), None))
    m1, m2 = coord_zero
    e1, e2 = R.encode((1, 0, 0)), R.encode((0, 1, 0))
    if m1 is None or m2 is None:
        raise FalsificationError("coordinate ideals are not maximal", {"max_ideals": [m.formatted() for m in ms]})
    cert = {
        "e1": R.format(e1),
        "e2": R.format(e2),
        "e1_in_m2_not_m1": e1 in m2 and e1 not in m1,
        "e2_in_m1_not_m2": e2 in m1 and e2 not in m2,
        "e1_adjacent_e2": adjacent(R, e1, e2),
        "sanity_e1_adjacent_011": adjacent(R, e1, R.encode((0, 1, 1))),
        "sanity_e1_adjacent_101": adjacent(R, e1, R.encode((1, 0, 1))),
    }
    ok = (cert["e1_in_m2_not_m1"] and cert["e2_in_m1_not_m2"] and not cert["e1_adjacent_e2"]
          and cert["sanity_e1_adjacent_011"] and not cert["sanity_e1_adjacent_101"])
    if not ok:
        cert["witness"] = {"pair": [cert["e1"], cert["e2"]]}
    return R.label, _verdict(ok), cert


@_timed("R4")
def check_R4(R: FiniteRing):
    """Core graph of R is the |J|-fold blow-up of the core graph of R/J(R)."""
    if not maximal_left_ideals(R):
        return R.label, "inapplicable", {"max_ideals": 0}
    b = blowup_check(R)
    cert = {
        "fiber_size": b.fiber_size,
        "core_vertices": b.core_vertices,
        "quotient_core_vertices": b.quotient_core_vertices,
        "adjacency_transfer_ok": b.adjacency_transfer_ok,
        "fibers_independent_ok": b.fibers_independent_ok,
        "fiber_sizes_ok": b.fiber_sizes_ok,
        "literal_isomorphism": b.literal_isomorphism,
    }
    if not b.literal_isomorphism:
        cert["note"] = "vertex counts differ: blow-up relation, not a graph isomorphism"
    ok = b.ok
    if not ok:
        cert["witness"] = {"pair": _labels(R, b.witness_on_failure) if b.witness_on_failure else None}
    return R.label, _verdict(ok), cert


@_timed("T5")
def check_T5(R: FiniteRing):
    """A complete n-partite core graph forces n = 2 with R/J ≅ GF × GF, or n = q+1 with R/J ≅ M2(GF(q))."""
    ms = maximal_left_ideals(R)
    G = core_graph(R)
    part = is_complete_multipartite(G)
    if len(ms) < 2 or part is None or part.n < 2:
        return R.label, "inapplicable", {
            "max_ideals": len(ms),
            "complete_multipartite": part is not None,
            "parts": part.n if part is not None else None,
        }
    n = part.n
    w = wedderburn_report(R)
    pairs = w.pairs()
    two_fields = n == 2 and len(pairs) == 2 and all(k == 1 for k, _ in pairs)
    matrix_case = len(pairs) == 1 and pairs[0][0] == 2 and n == pairs[0][1] + 1
    J = jacobson_radical(R)
    pairwise = all(
        (intersection(R, [ms[i], ms[j]]) == J.mask).all()
        for i in range(len(ms)) for j in range(i + 1, len(ms))
    )
    parts_are_ideals = sorted(part.parts) == sorted(
        tuple(int(x) for x in np.flatnonzero(m.mask & ~J.mask)) for m in ms
    )
    cert = {
        "parts": n,
        "part_sizes": [len(p) for p in part.parts],
        "max_ideals": len(ms),
        "wedderburn": [list(p) for p in pairs],
        "case": "two_division_rings" if two_fields else "M2(GF(q))" if matrix_case else None,
        "pairwise_intersection_is_J": pairwise,
        "parts_are_m_minus_J": parts_are_ideals,
    }
    ok = (two_fields != matrix_case) and pairwise and parts_are_ideals and len(ms) == n and w.consistent
    if not ok:
        cert["witness"] = {"wedderburn": [list(p) for p in pairs], "parts": n, "max_ideals": len(ms)}
    return R.label, _verdict(ok), cert


@_timed("R6")
def check_R6(q: int):
    """Core graph of M2(GF(q)) is complete (q+1)-partite with parts m minus {0}."""
    R = make_matrix_ring(make_gf_order(q), 2)
    G = core_graph(R)
    ms = maximal_left_ideals(R)
    part = is_complete_multipartite(G)
    expected_parts = sorted(tuple(v for v in m.elements if v != 0) for m in ms)
    explicit = remark6_maximal_ideals(q)
    pm = principal_masks(R)
    generates = all((pm[a] == m.mask).all() for m in ms for a in m.elements if a != 0)
    cert = {
        "q": q,
        "core_vertices": len(G),
        "edges": G.edge_count,
        "parts": part.n if part else None,
        "part_sizes": sorted({len(p) for p in part.parts}) if part else None,
        "parts_are_max_ideals": part is not None and sorted(part.parts) == expected_parts,
        "explicit_ideals_match": set(explicit) == set(ms),
        "nonzero_elements_generate_their_ideal": generates,
    }
    ok = (
        part is not None
        and part.n == q + 1
        and cert["parts_are_max_ideals"]
        and cert["part_sizes"] == [q * q - 1]
        and G.edge_count == math.comb(q + 1, 2) * (q * q - 1) ** 2
        and cert["explicit_ideals_match"]
        and generates
    )
    if not ok:
        cert["witness"] = {"parts": cert["parts"], "part_sizes": cert["part_sizes"]}
    return R.label, _verdict(ok), cert


def _z2_times_field(R: FiniteRing):
    """IsoResult against Z2 x GF(|R|/2), or None if |R|/2 is not a prime power."""
    if R.size % 2 or prime_power(R.size // 2) is None:
        return None
    return ring_isomorphic(R, make_product([make_zmod(2), make_gf_order(R.size // 2)]))


@_timed("T7")
def check_T7(R: FiniteRing):
    """A universal vertex in the core graph exists exactly when R ≅ Z2 x GF(q)."""
    ms = maximal_left_ideals(R)
    if len(ms) < 2:
        return R.label, "inapplicable", {"max_ideals": len(ms)}
    G = core_graph(R)
    uni = universal_vertices(G).universal
    iso = _z2_times_field(R)
    is_form = iso is not None and iso.isomorphic
    cert = {
        "universal_vertices": _labels(R, uni),
        "target": f"Z2 x GF({R.size // 2})" if iso is not None else None,
        "isomorphism": iso.verdict if iso is not None else "not_applicable",
        "obstruction": iso.obstruction if iso is not None else None,
        "note": "division ring realized as GF(q)",
    }
    if iso is not None and iso.verdict == "unknown":
        cert["note"] = "isomorphism search budget exhausted"
        return R.label, "inapplicable", cert
    if not uni:
        if is_form:
            cert["witness"] = {"reason": "R ≅ Z2 x GF(q) but no universal vertex"}
            return R.label, "fail", cert
        return R.label, "inapplicable", cert
    J = jacobson_radical(R)
    pm = principal_masks(R)
    witnesses = []
    for x in uni:
        rx = [int(a) for a in np.flatnonzero(pm[x])]
        witnesses.append({
            "x": R.format(x),
            "Rx": _labels(R, rx),
            "Rx_is_0_x": rx == sorted({0, x}),
            "idempotent": R.mul(x, x) == x,
        })
    cert["J_is_zero"] = len(J) == 1
    cert["universal_witnesses"] = witnesses
    ok = cert["J_is_zero"] and is_form and all(w["Rx_is_0_x"] and w["idempotent"] for w in witnesses)
    if not ok:
        cert["witness"] = {"universal": _labels(R, uni), "isomorphism": cert["isomorphism"]}
    return R.label, _verdict(ok), cert


_PER_RING = {"T1a": check_T1a, "T2": check_T2, "R4": check_R4, "T5": check_T5, "T7": check_T7}


def run_catalog(catalog: Catalog, theorems: Iterable[str] = THEOREMS,
                stop_on_fail: bool = False) -> list[TheoremReport]:
    """Run the selected checks over every entry, in catalog order then theorem order."""
    wanted = [t for t in THEOREMS if t in set(theorems)]
    reports: list[TheoremReport] = []
    for spec in catalog:
        R = build_ring(spec, catalog.base_dir)
        for t in wanted:
            if t in _PER_RING:
                rep = _PER_RING[t](R)
            elif t == "R6":
                q = is_m2_over_field(spec)
                if q is None:
                    continue
                rep = check_R6(q)
            else:
                if not is_boolean_cube(spec):
                    continue
                rep = check_CEX()
            reports.append(rep)
            if stop_on_fail and rep.verdict == "fail":
                return reports
    return reports


def summarize(reports: list[TheoremReport]) -> dict[str, int]:
    out = {"pass": 0, "fail": 0, "inapplicable": 0}
    for r in reports:
        out[r.verdict] += 1
    return out
