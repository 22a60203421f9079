from __future__ import annotations

import numpy as np
import pytest

from comax.errors import FalsificationError, PreconditionError
from comax.ideals import LeftIdeal, jacobson_radical, maximal_left_ideals, principal_left_ideal
from comax.ring import idempotents, is_commutative, make_product, restrict
from comax.structure import (
    identify_simple_component,
    primitive_central_idempotents,
    quotient_by,
    remark6_maximal_ideals,
    ring_isomorphic,
    semisimple_decompose,
    verify_isomorphism,
    wedderburn_report,
)

from conftest import ring
from oracles import brute_cosets


def test_quotient_z12_by_radical():
    Z12 = ring("Z12")
    Q = quotient_by(Z12, jacobson_radical(Z12))
    assert Q.ring.size == 6
    assert ring_isomorphic(Q.ring, ring("Z6")).isomorphic


def test_quotient_by_zero_is_identity():
    Z6 = ring("Z6")
    Q = quotient_by(Z6, LeftIdeal(Z6, (0,)))
    assert Q.projection.tolist() == list(range(6))
    assert Q.ring.mul_table.tolist() == Z6.mul_table.tolist()


def test_quotient_upper_triangular():
    T = ring("table:t2_gf2.json")
    Q = quotient_by(T, jacobson_radical(T)).ring
    assert Q.size == 4 and is_commutative(Q) and len(idempotents(Q)) == 4
    assert ring_isomorphic(Q, ring("GF(2) x GF(2)")).isomorphic


def test_quotient_rejects_one_sided_ideal():
    M = ring("M2(GF(2))")
    with pytest.raises(PreconditionError):
        quotient_by(M, maximal_left_ideals(M)[0])


def test_quotient_sound_on_catalog(catalog):
    for _, R in catalog:
        J = jacobson_radical(R)
        Q = quotient_by(R, J)
        p = Q.projection
        assert Q.ring.size * len(J) == R.size, R.label
        assert (p[R.add_table] == Q.ring.add_table[p[:, None], p[None, :]]).all(), R.label
        assert (p[R.mul_table] == Q.ring.mul_table[p[:, None], p[None, :]]).all(), R.label
        assert p[Q.section].tolist() == list(range(Q.ring.size))
        assert p[1] == 1 and p[0] == 0
        if R.size <= 64:
            cosets = brute_cosets(R, set(J.elements))
            assert sorted(min(c) for c in cosets) == Q.section.tolist(), R.label


def test_decompose_examples():
    assert sorted(S.size for S in semisimple_decompose(ring("Z2 x GF(3)"))) == [2, 3]
    assert len(semisimple_decompose(ring("M2(GF(2))"))) == 1
    Z6 = ring("Z6")
    assert sorted(Z6.decode(e) for e in primitive_central_idempotents(Z6)) == [3, 4]
    assert sorted(S.size for S in semisimple_decompose(Z6)) == [2, 3]


def test_decompose_requires_semisimple():
    with pytest.raises(PreconditionError):
        semisimple_decompose(ring("Z4"))


def test_decomposition_product_is_isomorphic(catalog):
    for _, R in catalog:
        if len(jacobson_radical(R)) != 1 or R.size > 128:
            continue
        parts = semisimple_decompose(R)
        if len(parts) == 1:
            continue
        res = ring_isomorphic(make_product(parts), R)
        assert res.isomorphic, R.label


@pytest.mark.parametrize("n", [1, 2])
@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_identify_inverts_construction(n, q):
    spec = f"M2(GF({q}))" if n == 2 else f"GF({q})"
    assert identify_simple_component(ring(spec)) == (n, q)


def test_identify_gf16():
    assert identify_simple_component(ring("GF(2,4)")) == (1, 16)


def test_identify_rejects_non_simple():
    with pytest.raises(FalsificationError):
        identify_simple_component(ring("Z2 x Z3"))


def test_wedderburn_examples():
    assert wedderburn_report(ring("Z6")).pairs() == [(1, 2), (1, 3)]
    assert wedderburn_report(ring("M2(GF(3))")).pairs() == [(2, 3)]
    assert wedderburn_report(ring("table:t2_gf2.json")).pairs() == [(1, 2), (1, 2)]


def test_wedderburn_consistent_on_catalog(catalog):
    for _, R in catalog:
        w = wedderburn_report(R)
        assert w.consistent, R.label
        assert int(np.prod([q ** (n * n) for n, q in w.pairs()])) == R.size // len(jacobson_radical(R))


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_remark6_ideals(q):
    ideals = remark6_maximal_ideals(q)
    M = ideals[0].ring
    assert len(ideals) == len(set(ideals)) == q + 1
    assert all(len(I) == q * q for I in ideals)
    assert set(ideals) == set(maximal_left_ideals(M))
    # alpha = 0: matrices whose second column vanishes
    m0 = {M.decode(a) for a in ideals[0]}
    assert m0 == {((a, 0), (b, 0)) for a in range(q) for b in range(q)}


def test_remark6_rejects_non_prime_power():
    with pytest.raises(PreconditionError):
        remark6_maximal_ideals(6)


# ---------------------------------------------------------------------------
# isomorphism
# ---------------------------------------------------------------------------


def test_iso_examples():
    res = ring_isomorphic(ring("Z6"), ring("Z2 x GF(3)"))
    assert res.isomorphic and verify_isomorphism(ring("Z6"), ring("Z2 x GF(3)"), res.witness)
    res = ring_isomorphic(ring("Z4"), ring("Z2 x Z2"))
    assert res.verdict == "not_isomorphic" and res.obstruction == "additive-order histogram"
    res = ring_isomorphic(ring("M2(GF(2))"), ring("GF(2,4)"))
    assert res.verdict == "not_isomorphic" and res.obstruction == "commutativity"


@pytest.mark.parametrize(
    "a,b,expected",
    [
        ("Z15", "GF(3) x GF(5)", True),
        ("Z2 x GF(4)", "GF(4) x Z2", True),
        ("GF(4)", "Z2 x Z2", False),
        ("M2(GF(2))", "M2(GF(2))", True),
        ("table:t2_gf2.json", "table:t2_gf2.json", True),
        ("M2(GF(3))", "M2(GF(3))", True),
    ],
)
def test_iso_pairs(a, b, expected):
    A, B = ring(a), ring(b)
    res = ring_isomorphic(A, B)
    assert res.verdict == ("isomorphic" if expected else "not_isomorphic")
    if expected:
        assert verify_isomorphism(A, B, res.witness)


def test_iso_screens_same_size_characteristic_two():
    res = ring_isomorphic(ring("Z2 x Z2 x Z2"), ring("Z2 x GF(4)"))
    assert res.verdict == "not_isomorphic" and res.obstruction == "unit count"


def test_iso_on_restricted_subring():
    # the diagonal of T2(GF(2)) is a copy of GF(2) x GF(2)
    T = ring("table:t2_gf2.json")
    diag = [a for a in T.elements() if T.format(a).split(";")[0].endswith(",0")]
    D = restrict(T, diag, 1, "diag")
    assert D.size == 4
    assert ring_isomorphic(D, ring("GF(2) x GF(2)")).isomorphic


def test_verify_isomorphism_rejects_bad_maps():
    Z6 = ring("Z6")
    assert not verify_isomorphism(Z6, Z6, (0, 1, 2, 3, 5, 4))
    assert not verify_isomorphism(Z6, Z6, (0, 1, 1, 3, 4, 5))
    assert verify_isomorphism(Z6, Z6, tuple(range(6)))


def test_iso_witnesses_on_catalog_pairs(catalog):
    by_size = {}
    for _, R in catalog:
        if R.size <= 32:
            by_size.setdefault(R.size, []).append(R)
    for rings in by_size.values():
        for i, A in enumerate(rings):
            for B in rings[i + 1:]:
                res = ring_isomorphic(A, B)
                assert res.verdict != "unknown", (A.label, B.label)
                if res.isomorphic:
                    assert verify_isomorphism(A, B, res.witness), (A.label, B.label)
                else:
                    assert res.obstruction, (A.label, B.label)
