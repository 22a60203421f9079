"""Quotients, semisimple decomposition and Wedderburn–Artin identification.

Finite division rings are fields, so every simple component found here is
reported as M_n(GF(q)).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .errors import FalsificationError, PreconditionError
from .fields import prime_power
from .ideals import (
    LeftIdeal,
    is_left_ideal,
    is_two_sided,
    jacobson_radical,
    maximal_left_ideals,
)
from .ring import (
    FiniteRing,
    SubsetCodec,
    additive_orders,
    central_idempotents,
    characteristic,
    idempotents,
    is_commutative,
    make_gf_order,
    make_matrix_ring,
    memoize,
    multiplicative_orders,
    restrict,
    units,
)


# --------------------------------------------------------------------------
# Quotients
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class QuotientRing:
    ring: FiniteRing
    projection: np.ndarray = field(repr=False)
    section: np.ndarray = field(repr=False)
    ideal: LeftIdeal = field(repr=False)


@memoize
def _quotient(R: FiniteRing, elements: tuple[int, ...]) -> QuotientRing:
    I = LeftIdeal(R, elements)
    idx = np.array(elements)
    reps = R.add_table[:, idx].min(axis=1)
    section = np.unique(reps)
    proj = np.searchsorted(section, reps)
    add = proj[R.add_table[np.ix_(section, section)]]
    mul = proj[R.mul_table[np.ix_(section, section)]]
    label = R.label if len(I) == 1 else f"{R.label}/J" if I == jacobson_radical(R) else f"{R.label}/I"
    fmt = (lambda a: R.format(a)) if len(I) == 1 else (lambda a: f"{R.format(a)}+I")
    Q = FiniteRing(add, mul, label, SubsetCodec(R, section, fmt))
    for arr in (proj, section):
        arr.setflags(write=False)
    return QuotientRing(Q, proj, section, I)


def quotient_by(R: FiniteRing, I: LeftIdeal) -> QuotientRing:
    """R/I with the least element id of each coset as its representative."""
    if not is_two_sided(R, I):
        raise PreconditionError("can only take the quotient by a two-sided ideal")
    return _quotient(R, I.elements)


# --------------------------------------------------------------------------
# Semisimple decomposition
# --------------------------------------------------------------------------


def primitive_central_idempotents(S: FiniteRing) -> list[int]:
    """Minimal nonzero central idempotents under e <= f iff ef = e."""
    central = sorted(central_idempotents(S) - {0})
    return [e for e in central if not any(f != e and S.mul(f, e) == f for f in central)]


def semisimple_decompose(S: FiniteRing) -> list[FiniteRing]:
    """Split S = e₁S × ⋯ × e_kS along its primitive central idempotents."""
    if len(jacobson_radical(S)) != 1:
        raise PreconditionError("ring is not semisimple (J(S) != 0)")
    prims = primitive_central_idempotents(S)
    total = 0
    for i, e in enumerate(prims):
        total = S.add(total, e)
        for f in prims[i + 1:]:
            if S.mul(e, f) != 0:
                raise FalsificationError("primitive central idempotents are not orthogonal", {"e": e, "f": f})
    if total != S.one:
        raise FalsificationError("primitive central idempotents do not sum to 1", {"idempotents": prims})
    if len(prims) == 1:
        return [S]
    return [
        restrict(S, np.unique(S.mul_table[e, :]).tolist(), e, f"{S.label}·e{i + 1}")
        for i, e in enumerate(prims)
    ]


def identify_simple_component(S: FiniteRing) -> tuple[int, int]:
    """The (n, q) with |S| = q^(n²) and |Max(S)| = (qⁿ - 1)/(q - 1)."""
    size = S.size
    count = len(maximal_left_ideals(S))
    n = 1
    while 2 ** (n * n) <= size:
        q = round(size ** (1.0 / (n * n)))
        for cand in (q - 1, q, q + 1):
            if cand >= 2 and cand ** (n * n) == size and prime_power(cand):
                if (cand**n - 1) // (cand - 1) == count:
                    return n, cand
        n += 1
    raise FalsificationError(
        f"{S.label} is not a matrix ring over a finite field",
        {"size": size, "maximal_left_ideals": count},
    )


@dataclass(frozen=True)
class Component:
    n: int
    q: int
    evidence: dict = field(compare=False)

    def as_tuple(self) -> tuple[int, int]:
        return (self.n, self.q)


@dataclass(frozen=True)
class WedderburnReport:
    components: tuple[Component, ...]
    consistent: bool
    quotient_size: int
    note: str = "division rings realized as finite fields GF(q)"

    def pairs(self) -> list[tuple[int, int]]:
        return [c.as_tuple() for c in self.components]

    def to_dict(self) -> dict:
        return {
            "components": [
                {"n": c.n, "q": c.q, "evidence": dict(c.evidence)} for c in self.components
            ],
            "consistent": self.consistent,
            "quotient_size": self.quotient_size,
            "note": self.note,
        }


@memoize
def wedderburn_report(R: FiniteRing) -> WedderburnReport:
    """R/J(R) ≅ ∏ M_{n_i}(GF(q_i)), components sorted by (q, n)."""
    Q = quotient_by(R, jacobson_radical(R)).ring
    parts = semisimple_decompose(Q)
    comps = []
    for S in parts:
        n, q = identify_simple_component(S)
        comps.append(Component(n, q, {"cardinality": S.size,
                                      "max_left_ideal_count": len(maximal_left_ideals(S))}))
    comps.sort(key=lambda c: (c.q, c.n))
    product = int(np.prod([c.q ** (c.n * c.n) for c in comps])) if comps else 1
    consistent = product == Q.size and len(comps) == len(primitive_central_idempotents(Q))
    return WedderburnReport(tuple(comps), consistent, Q.size)


# --------------------------------------------------------------------------
# Explicit maximal left ideals of M₂(GF(q))
# --------------------------------------------------------------------------


def remark6_maximal_ideals(q: int) -> list[LeftIdeal]:
    """M_α for α ∈ GF(q) (in element order) followed by M′, built from their matrix formulas.

    M_α = {[a+αb, -aα-αbα; b, -bα]},  M′ = {[0, a; 0, b]}.
    Each is checked to be a maximal left ideal; together they must be all of Max(M₂(GF(q))).
    """
    if prime_power(q) is None:
        raise PreconditionError(f"q must be a prime power, got {q}")
    F = make_gf_order(q)
    M = make_matrix_ring(F, 2)
    add, mul, neg = F.add, F.mul, F.neg
    ideals = []
    for alpha in F.elements():
        elems = set()
        for a in F.elements():
            for b in F.elements():
                top_left = add(a, mul(alpha, b))
                top_right = neg(add(mul(a, alpha), mul(mul(alpha, b), alpha)))
                elems.add(M.encode(((top_left, top_right), (b, neg(mul(b, alpha))))))
        ideals.append(LeftIdeal(M, tuple(sorted(elems)), (alpha,)))
    m_prime = {M.encode(((0, a), (0, b))) for a in F.elements() for b in F.elements()}
    ideals.append(LeftIdeal(M, tuple(sorted(m_prime))))

    enumerated = set(maximal_left_ideals(M))
    for I in ideals:
        if not is_left_ideal(I) or not I.is_proper:
            raise FalsificationError("constructed set is not a proper left ideal", {"q": q, "ideal": I.elements})
        if I not in enumerated:
            raise FalsificationError("constructed ideal is not maximal", {"q": q, "ideal": I.elements})
    if len(set(ideals)) != q + 1 or set(ideals) != enumerated:
        raise FalsificationError(
            "explicit ideals do not match Max(M2(GF(q)))",
            {"q": q, "constructed": len(set(ideals)), "enumerated": len(enumerated)},
        )
    return ideals


# --------------------------------------------------------------------------
# Isomorphism
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class IsoResult:
    verdict: str  # isomorphic | not_isomorphic | unknown
    witness: tuple[int, ...] | None = None
    obstruction: str | None = None
    nodes: int = 0

    @property
    def isomorphic(self) -> bool:
        return self.verdict == "isomorphic"

    def to_dict(self) -> dict:
        return {"verdict": self.verdict, "obstruction": self.obstruction,
                "witness": list(self.witness) if self.witness is not None else None}


def _invariants(R: FiniteRing):
    yield "size", R.size
    yield "additive-order histogram", sorted(Counter(additive_orders(R)).items())
    yield "characteristic", characteristic(R)
    yield "commutativity", is_commutative(R)
    yield "unit count", len(units(R))
    yield "idempotent count", len(idempotents(R))
    yield "maximal-left-ideal count", len(maximal_left_ideals(R))
    yield "multiplicative-order histogram", sorted(Counter(multiplicative_orders(R).values()).items())


@memoize
def element_signatures(R: FiniteRing) -> tuple:
    """Per-element isomorphism invariants used to prune candidate images."""
    add_ord = additive_orders(R)
    mul = R.mul_table
    left = (np.sort(mul, axis=0)[1:] != np.sort(mul, axis=0)[:-1]).sum(axis=0) + 1
    right = (np.sort(mul, axis=1)[:, 1:] != np.sort(mul, axis=1)[:, :-1]).sum(axis=1) + 1
    centralizer = (mul == mul.T).sum(axis=1)
    sigs = []
    for a in range(R.size):
        seen = {}
        x, k = a, 1
        while x not in seen:
            seen[x] = k
            x = int(mul[x, a])
            k += 1
        # (index, period) of the power sequence a, a², a³, ...
        power_shape = (seen[x], k - seen[x])
        sigs.append((add_ord[a], int(left[a]), int(right[a]), int(centralizer[a]), power_shape))
    return tuple(sigs)


def _generation_plan(A: FiniteRing) -> tuple[list[int], list[list[tuple[int, str, int, int]]]]:
    """Greedy ring generators of A and, per generator, the straight-line steps it unlocks.

    Each step (target, op, x, y) computes a new element from earlier ones.
    """
    sigs = element_signatures(A)
    freq = Counter(sigs)
    known = np.zeros(A.size, dtype=bool)
    order: list[int] = []

    def grow(start: list[int]) -> list[tuple[int, str, int, int]]:
        steps = []
        frontier = list(start)
        for s in start:
            known[s] = True
            order.append(s)
        while frontier:
            nxt = []
            for z in frontier:
                ks = np.array(order)
                for op, table, z_left in (("+", A.add_table, True), ("*", A.mul_table, True),
                                          ("*", A.mul_table, False)):
                    vals = table[z, ks] if z_left else table[ks, z]
                    for pos in np.flatnonzero(~known[vals]):
                        t = int(vals[pos])
                        if known[t]:
                            continue
                        x, y = (z, int(ks[pos])) if z_left else (int(ks[pos]), z)
                        steps.append((t, op, x, y))
                        known[t] = True
                        order.append(t)
                        nxt.append(t)
            frontier = nxt
        return steps

    plans = [grow([0, A.one] if A.size > 1 else [0])]
    gens: list[int] = []
    # rare signatures first: fewer candidate images to branch over
    for a in sorted(range(A.size), key=lambda a: (freq[sigs[a]], a)):
        if not known[a]:
            gens.append(a)
            plans.append(grow([a]))
    return gens, plans


def ring_isomorphic(A: FiniteRing, B: FiniteRing, budget: int = 1_000_000) -> IsoResult:
    """Invariant screen, then backtracking over images of a generating set of A."""
    for (name, va), (_, vb) in zip(_invariants(A), _invariants(B)):
        if va != vb:
            return IsoResult("not_isomorphic", obstruction=name)
    sa, sb = element_signatures(A), element_signatures(B)
    if sorted(sa) != sorted(sb):
        return IsoResult("not_isomorphic", obstruction="element-signature multiset")
    by_sig: dict = {}
    for b in range(B.size):
        by_sig.setdefault(sb[b], []).append(b)

    gens, plans = _generation_plan(A)
    phi = np.full(A.size, -1, dtype=np.int64)
    used = np.zeros(B.size, dtype=bool)
    nodes = 0

    def apply(steps, assigned: list[int]) -> bool:
        for t, op, x, y in steps:
            table = B.add_table if op == "+" else B.mul_table
            img = int(table[phi[x], phi[y]])
            if used[img]:
                return False
            phi[t] = img
            used[img] = True
            assigned.append(t)
        return True

    def consistent(upto: np.ndarray) -> bool:
        pa = phi[upto]
        return bool(
            (phi[A.add_table[np.ix_(upto, upto)]] == B.add_table[np.ix_(pa, pa)]).all()
            and (phi[A.mul_table[np.ix_(upto, upto)]] == B.mul_table[np.ix_(pa, pa)]).all()
        )

    def undo(assigned: list[int]) -> None:
        for t in assigned:
            used[phi[t]] = False
            phi[t] = -1

    base: list[int] = []
    for s in ([0, A.one] if A.size > 1 else [0]):
        phi[s] = s
        used[s] = True
    if not apply(plans[0], base):
        return IsoResult("not_isomorphic", obstruction="prime subring")

    def search(level: int) -> bool | None:
        nonlocal nodes
        if level == len(gens):
            return True
        g = gens[level]
        for cand in by_sig.get(sa[g], []):
            if used[cand]:
                continue
            nodes += 1
            if nodes > budget:
                return None
            phi[g] = cand
            used[cand] = True
            assigned = [g]
            if apply(plans[level + 1], assigned) and consistent(np.flatnonzero(phi >= 0)):
                found = search(level + 1)
                if found is not False:
                    return found
            undo(assigned)
        return False

    if not consistent(np.flatnonzero(phi >= 0)):
        return IsoResult("not_isomorphic", obstruction="prime subring")
    found = search(0)
    if found is None:
        return IsoResult("unknown", nodes=nodes)
    if not found:
        return IsoResult("not_isomorphic", obstruction="exhaustive search", nodes=nodes)
    witness = tuple(int(x) for x in phi)
    assert verify_isomorphism(A, B, witness)
    return IsoResult("isomorphic", witness=witness, nodes=nodes)


def verify_isomorphism(A: FiniteRing, B: FiniteRing, phi) -> bool:
    """Bijective, unital, additive and multiplicative on every pair."""
    phi = np.asarray(phi)
    if A.size != B.size or len(phi) != A.size or len(set(phi.tolist())) != A.size:
        return False
    if phi[A.one] != B.one:
        return False
    return bool(
        (phi[A.add_table] == B.add_table[np.ix_(phi, phi)]).all()
        and (phi[A.mul_table] == B.mul_table[np.ix_(phi, phi)]).all()
    )
