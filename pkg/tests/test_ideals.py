from __future__ import annotations

import pytest

from comax.errors import PreconditionError
from comax.ideals import (
    LeftIdeal,
    avoidance_pick,
    ideal_sum,
    is_left_ideal,
    is_two_sided,
    jacobson_radical,
    left_ideal_closure,
    maximal_left_ideals,
    principal_left_ideal,
    radical_by_quasi_inverses,
)
from comax.ring import make_zmod

from conftest import ring
from oracles import brute_maximal_left_ideals


def elems(I):
    return {I.ring.decode(a) for a in I.elements}


def test_principal_examples():
    Z6 = ring("Z6")
    assert elems(principal_left_ideal(Z6, 2)) == {0, 2, 4}
    M = ring("M2(GF(2))")
    e11 = M.encode(((1, 0), (0, 0)))
    I = principal_left_ideal(M, e11)
    assert {M.decode(a) for a in I} == {((a, 0), (b, 0)) for a in range(2) for b in range(2)}
    assert principal_left_ideal(M, 0).elements == (0,)


def test_closure_examples():
    Z6, Z12 = ring("Z6"), ring("Z12")
    assert len(left_ideal_closure(Z6, [2, 3])) == 6
    assert left_ideal_closure(Z6, []).elements == (0,)
    assert elems(left_ideal_closure(Z12, [4, 6])) == {0, 2, 4, 6, 8, 10}


def test_sum_examples():
    Z6 = ring("Z6")
    two, three = principal_left_ideal(Z6, 2), principal_left_ideal(Z6, 3)
    assert len(ideal_sum(Z6, two, three)) == 6
    zero = principal_left_ideal(Z6, 0)
    assert ideal_sum(Z6, two, zero) == two
    assert ideal_sum(Z6, two, two) == two


def test_sum_rejects_foreign_ideal():
    Z6 = ring("Z6")
    other = make_zmod(6)
    with pytest.raises(PreconditionError):
        ideal_sum(Z6, principal_left_ideal(Z6, 2), principal_left_ideal(other, 2))


def test_maximal_examples():
    assert [elems(m) for m in maximal_left_ideals(ring("Z6"))] == [{0, 2, 4}, {0, 3}]
    ms = maximal_left_ideals(ring("M2(GF(2))"))
    assert len(ms) == 3 and all(len(m) == 4 for m in ms)
    assert [m.elements for m in maximal_left_ideals(ring("GF(4)"))] == [(0,)]


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_m2_has_q_plus_1_maximal_ideals(q):
    assert len(maximal_left_ideals(ring(f"M2(GF({q}))"))) == q + 1


def test_maximal_matches_subset_enumeration(small_catalog):
    for _, R in small_catalog:
        if R.size <= 16:
            assert {m.members for m in maximal_left_ideals(R)} == brute_maximal_left_ideals(R), R.label


def test_maximality_witness_and_antichain(catalog):
    for _, R in catalog:
        if R.size > 256:
            continue
        ms = maximal_left_ideals(R)
        for m in ms:
            assert is_left_ideal(m) and m.is_proper
            outside = [x for x in R.elements() if x not in m]
            for x in outside[:8]:
                assert len(left_ideal_closure(R, list(m.elements) + [x])) == R.size
            assert not any(m < k for k in ms)


def test_jacobson_examples():
    assert elems(jacobson_radical(ring("Z12"))) == {0, 6}
    assert jacobson_radical(ring("GF(2) x GF(3)")).elements == (0,)
    T = ring("table:t2_gf2.json")
    J = jacobson_radical(T)
    assert [T.format(a) for a in J] == ["[0,0;0,0]", "[0,1;0,0]"]


def test_jacobson_matches_quasi_inverse_characterisation(catalog):
    for _, R in catalog:
        J = jacobson_radical(R)
        assert J.members == radical_by_quasi_inverses(R), R.label
        assert is_two_sided(R, J)


def test_two_sided_examples():
    M = ring("M2(GF(2))")
    assert not any(is_two_sided(M, m) for m in maximal_left_ideals(M))
    m = next(m for m in maximal_left_ideals(M) if all(M.decode(a)[0][1] == M.decode(a)[1][1] == 0 for a in m))
    assert not is_two_sided(M, m)
    assert is_two_sided(M, LeftIdeal(M, (0,)))


def test_avoidance_examples():
    Z30 = ring("Z30")
    two, three, five = (principal_left_ideal(Z30, k) for k in (2, 3, 5))
    assert Z30.decode(avoidance_pick(Z30, [two, five], [three])) == 10
    assert avoidance_pick(Z30, [two], [two]) is None
    assert avoidance_pick(Z30, [], []) == 0
