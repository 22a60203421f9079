from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from comax.errors import InvalidSpecError, RingAxiomError, SizeLimitError
from comax.fields import is_irreducible, prime_power, smallest_irreducible
from comax.ring import (
    central_idempotents,
    check_axioms,
    is_commutative,
    is_left_invertible,
    left_invertible_mask,
    make_gf,
    make_matrix_ring,
    make_product,
    make_table_ring,
    make_zmod,
    noncommuting_pair,
    subring_closure,
    units,
    upper_triangular,
)

from conftest import ring
from oracles import brute_left_invertible, brute_units, poly_irreducible_by_products


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("p,k", [(2, 2), (2, 3), (2, 4), (3, 2), (5, 2), (3, 3)])
def test_smallest_irreducible_matches_product_oracle(p, k):
    f = smallest_irreducible(p, k)
    assert poly_irreducible_by_products(f, p)
    # every monic polynomial that sorts earlier (constant term compared first) factors
    for low in __import__("itertools").product(range(p), repeat=k):
        g = tuple(low) + (1,)
        if g == f:
            break
        assert not poly_irreducible_by_products(g, p)


def test_trial_division_agrees_with_products_for_degree_4_over_gf2():
    import itertools

    for low in itertools.product(range(2), repeat=4):
        f = tuple(low) + (1,)
        assert is_irreducible(f, 2) == poly_irreducible_by_products(f, 2)


def test_gf4_modulus_and_mutual_inverses():
    F = make_gf(2, 2)
    assert F.modulus == (1, 1, 1)  # x^2 + x + 1
    assert F.mul(2, 3) == 1 and F.mul(3, 2) == 1


def test_field_elements_format_as_polynomials():
    F = make_gf(3, 2)
    assert [F.format(a) for a in range(9)] == ["0", "1", "2", "x", "x+1", "x+2", "2x", "2x+1", "2x+2"]
    assert make_gf(2, 3).format(7) == "x^2+x+1"


def test_prime_power():
    assert prime_power(16) == (2, 4)
    assert prime_power(9) == (3, 2)
    assert prime_power(6) is None
    assert prime_power(1) is None


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def test_z2_arithmetic():
    R = make_zmod(2)
    assert R.size == 2 and R.add(1, 1) == 0


def test_z6_units():
    assert {make_zmod(6).decode(u) for u in units(make_zmod(6))} == {1, 5}


def test_z12_zero_divisor():
    R = make_zmod(12)
    assert R.mul(R.encode(4), R.encode(9)) == R.encode(0)


def test_zmod_rejects_small_modulus():
    with pytest.raises(InvalidSpecError):
        make_zmod(1)


def test_gf2_is_z2():
    F = make_gf(2, 1)
    assert F.add_table.tolist() == make_zmod(2).add_table.tolist()
    assert F.mul_table.tolist() == make_zmod(2).mul_table.tolist()


def test_gf3_is_field():
    F = make_gf(3, 1)
    assert F.mul(2, 2) == 1
    assert units(F) == {1, 2}


def test_gf_rejects_composite_characteristic():
    with pytest.raises(InvalidSpecError):
        make_gf(4, 1)


def test_size_cap(monkeypatch):
    monkeypatch.setenv("COMAX_SIZE_CAP", "50")
    with pytest.raises(SizeLimitError):
        make_matrix_ring(make_gf(2), 3)
    with pytest.raises(SizeLimitError):
        make_gf(2, 6)
    with pytest.raises(SizeLimitError):
        make_product([make_zmod(7), make_zmod(8)])


@pytest.mark.parametrize("q,count", [(2, 6), (3, 48), (4, 180), (5, 480)])
def test_gl2_order(q, count):
    M = ring(f"M2(GF({q}))")
    assert M.size == q**4
    assert len(units(M)) == count == (q * q - 1) * (q * q - q)


def test_m2_gf2_unit_count_by_brute_force():
    assert len(brute_units(ring("M2(GF(2))"))) == 6


def test_m1_z6_is_z6():
    M = make_matrix_ring(make_zmod(6), 1)
    Z = make_zmod(6)
    lit = [M.decode(a)[0][0] for a in M.elements()]
    for a in M.elements():
        for b in M.elements():
            assert lit[M.add(a, b)] == Z.add(lit[a], lit[b])
            assert lit[M.mul(a, b)] == Z.mul(lit[a], lit[b])


def test_product_z2_gf3():
    R = make_product([make_zmod(2), make_gf(3)])
    assert R.size == 6
    assert R.add(R.encode((1, 0)), R.encode((0, 1))) == R.encode((1, 1)) == R.one


def test_boolean_cube_units():
    R = ring("Z2 x Z2 x Z2")
    assert R.size == 8
    assert {R.decode(u) for u in units(R)} == {(1, 1, 1)}


def test_z2_gf4_units():
    assert len(units(ring("Z2 x GF(4)"))) == 3


def test_matrix_codec_is_row_major():
    M = ring("M2(GF(3))")
    a = M.encode(((1, 2), (0, 1)))
    b = M.encode(((2, 0), (1, 1)))
    # [[1,2],[0,1]] [[2,0],[1,1]] = [[4,2],[1,1]] = [[1,2],[1,1]] mod 3
    assert M.decode(M.mul(a, b)) == ((1, 2), (1, 1))


# ---------------------------------------------------------------------------
# table rings
# ---------------------------------------------------------------------------


def test_table_ring_accepts_z2():
    R = make_table_ring([[0, 1], [1, 0]], [[0, 0], [0, 1]])
    assert R.size == 2


def test_table_ring_rejects_bad_unity():
    with pytest.raises(RingAxiomError, match="unity not neutral"):
        make_table_ring([[0, 1], [1, 0]], [[0, 0], [0, 0]])


def test_table_ring_rejects_nonassociative_multiplication():
    Z = make_zmod(4)
    mul = Z.mul_table.copy()
    mul[2, 3] = mul[3, 2] = 0  # 2·3 should be 2
    with pytest.raises(RingAxiomError) as err:
        make_table_ring(Z.add_table, mul)
    assert err.value.witness


def test_table_ring_rejects_out_of_range():
    with pytest.raises(RingAxiomError):
        make_table_ring([[0, 2], [1, 0]], [[0, 0], [0, 1]])


def test_upper_triangular_gf2():
    T = upper_triangular(2)
    assert T.size == 8
    assert not is_commutative(T)
    M = ring("M2(GF(2))")
    # the closure is exactly the upper-triangular matrices
    closure = subring_closure(M, [M.encode(((1, 0), (0, 0))), M.encode(((0, 1), (0, 0)))])
    assert sorted(M.decode(a) for a in closure) == sorted(
        ((a, b), (0, d)) for a in range(2) for b in range(2) for d in range(2)
    )


def test_bundled_t2_tables_match_generator():
    for q in (2, 3):
        bundled = ring(f"table:t2_gf{q}.json")
        fresh = upper_triangular(q)
        assert bundled.label == fresh.label
        assert bundled.add_table.tolist() == fresh.add_table.tolist()
        assert bundled.mul_table.tolist() == fresh.mul_table.tolist()


# ---------------------------------------------------------------------------
# element queries
# ---------------------------------------------------------------------------


def test_left_invertible_examples():
    Z6 = make_zmod(6)
    assert is_left_invertible(Z6, 5)
    assert not is_left_invertible(Z6, 3)
    assert is_left_invertible(ring("M2(GF(2))"), 1)


def test_central_idempotents_examples():
    R = make_product([make_zmod(2), make_gf(3)])
    assert {R.decode(e) for e in central_idempotents(R)} == {(0, 0), (1, 0), (0, 1), (1, 1)}
    assert central_idempotents(ring("M2(GF(2))")) == {0, 1}
    assert central_idempotents(make_gf(2, 2)) == {0, 1}


def test_commutativity_examples():
    assert is_commutative(make_zmod(30))
    M = ring("M2(GF(2))")
    assert not is_commutative(M)
    a, b = noncommuting_pair(M)
    assert M.mul(a, b) != M.mul(b, a)
    assert is_commutative(make_product([make_zmod(4), make_gf(2, 2)]))


# ---------------------------------------------------------------------------
# catalog-wide invariants
# ---------------------------------------------------------------------------


def test_axioms_hold_on_catalog(catalog):
    for _, R in catalog:
        check_axioms(R)  # exhaustive up to 256 elements, sampled above


def test_exhaustive_axioms_on_sampled_ring():
    check_axioms(ring("M2(GF(5))"), exhaustive_limit=10**6)


def test_left_invertible_equals_units_on_catalog(catalog):
    for _, R in catalog:
        li = set(np.flatnonzero(left_invertible_mask(R)).tolist())
        assert li == set(units(R)), R.label


def test_units_match_brute_force(small_catalog):
    for _, R in small_catalog:
        if R.size <= 32:
            assert units(R) == brute_units(R), R.label
            assert brute_left_invertible(R) == brute_units(R), R.label


def test_codec_round_trip_on_catalog(catalog):
    for _, R in catalog:
        for a in R.elements():
            assert R.encode(R.decode(a)) == a


def test_zero_and_one_positions(catalog):
    for _, R in catalog:
        assert (R.add_table[0] == np.arange(R.size)).all()
        assert (R.mul_table[1] == np.arange(R.size)).all()


@settings(max_examples=60, deadline=None)
@given(n=st.integers(2, 40), data=st.data())
def test_zmod_matches_integer_arithmetic(n, data):
    R = make_zmod(n)
    a = data.draw(st.integers(0, n - 1))
    b = data.draw(st.integers(0, n - 1))
    assert R.decode(R.add(a, b)) == (a + b) % n
    assert R.decode(R.mul(a, b)) == (a * b) % n
    assert R.decode(R.neg(a)) == (-a) % n
