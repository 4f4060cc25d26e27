import numpy as np
import pytest

import oracle
from fslab.errors import CeilingError, ValidationError
from fslab.rings import (
    IdempotentWitness,
    NilpotentWitness,
    brauer_check,
    brauer_split,
    ideals,
    is_local_ring,
    is_semiprime,
    is_us_ring,
    jacobson_cross_check,
    jacobson_radical,
    local_us_ring_check,
    quasi_regular_radical,
    ring_cyclic,
    ring_from_tables,
    ring_opposite,
    ring_poly_quotient,
    ring_product,
    semiprime_equivalence_check,
    theorem0_check,
)

F4 = ring_poly_quotient(2, [1, 1, 1])
DUAL2 = ring_poly_quotient(2, [0, 0, 1])  # F_2[x]/(x^2); x has id 2


def els(I):
    return set(I.elements)


# -- constructors -------------------------------------------------------------


def test_cyclic_one_is_zero_ring():
    R = ring_cyclic(1)
    assert R.order == 1 and R.one == 0 and R.is_zero_ring()


@pytest.mark.parametrize("n,J", [(4, {0, 2}), (6, {0})])
def test_cyclic_radical(n, J):
    R = ring_cyclic(n)
    assert els(jacobson_radical(R)) == J
    assert oracle.jacobson_quasi_regular(R.add, R.mul, R.one) == J


def test_product_z2_z3_matches_z6_ideal_count():
    P = ring_product([ring_cyclic(2), ring_cyclic(3)])
    assert P.order == 6
    assert len(ideals(P)) == len(oracle.ring_ideals(P.add, P.mul)) == 4
    assert len(ideals(ring_cyclic(6))) == 4


def test_unary_product_is_factor():
    P = ring_product([ring_cyclic(2)])
    assert np.array_equal(P.add, ring_cyclic(2).add) and np.array_equal(P.mul, ring_cyclic(2).mul)


def test_product_z2_z2_idempotents():
    P = ring_product([ring_cyclic(2), ring_cyclic(2)])
    brute = [e for e in range(4) if P.mul[e, e] == e]
    assert len(P.idempotents) == len(brute) == 4


def test_poly_quotient_dual_numbers():
    R = DUAL2
    assert R.order == 4
    J = jacobson_radical(R)
    assert els(J) == {0, 2}
    assert all(R.mul[a, b] == 0 for a in J.elements for b in J.elements)


def test_poly_quotient_field_f4():
    assert F4.order == 4
    assert els(jacobson_radical(F4)) == {0}
    assert all(any(F4.mul[a, b] == F4.one for b in range(4)) for a in range(1, 4))


def test_poly_quotient_degree_one():
    R = ring_poly_quotient(3, [0, 1])
    assert R.order == 3
    assert np.array_equal(R.mul, ring_cyclic(3).mul)


def test_poly_quotient_rejects_bad_input():
    with pytest.raises(ValidationError):
        ring_poly_quotient(4, [1, 0, 1])
    with pytest.raises(ValidationError):
        ring_poly_quotient(3, [1, 0, 2])


def test_order_ceiling():
    with pytest.raises(CeilingError) as exc:
        ring_cyclic(257)
    assert exc.value.ceiling == 256 and exc.value.found == 257


def test_tables_validation_reports_witness():
    add = ring_cyclic(3).add
    mul = np.array([[0, 0, 0], [0, 1, 2], [0, 2, 2]])
    with pytest.raises(ValidationError) as exc:
        ring_from_tables(add, mul, 1)
    assert exc.value.witness is not None


def test_opposite_of_commutative_is_same():
    R = ring_cyclic(6)
    assert np.array_equal(ring_opposite(R).mul, R.mul)


# -- ideals ---------------------------------------------------------------------


def test_ideals_z4():
    assert [I.elements for I in ideals(ring_cyclic(4))] == [(0,), (0, 2), (0, 1, 2, 3)]


def test_ideals_zero_ring():
    assert [I.elements for I in ideals(ring_cyclic(1))] == [(0,)]


def test_ideals_against_brute_force(small_rings):
    for R in small_rings:
        for side in ("right", "left"):
            assert {frozenset(I.elements) for I in ideals(R, side)} == set(oracle.ring_ideals(R.add, R.mul, side))


def test_radical_z12():
    assert els(jacobson_radical(ring_cyclic(12))) == {0, 6}


def test_radical_zero_ring_is_degenerate():
    J = jacobson_radical(ring_cyclic(1))
    assert J.elements == (0,) and J.degenerate


def test_quasi_regular_agrees(small_rings):
    for R in small_rings:
        assert quasi_regular_radical(R).elements == jacobson_radical(R).elements
        assert jacobson_cross_check(R).passed


# -- Brauer ---------------------------------------------------------------------


def test_brauer_idempotent_z6():
    R = ring_cyclic(6)
    w = brauer_split(R, [0, 2, 4])
    assert isinstance(w, IdempotentWitness) and w.e == 4
    assert R.mul[4, 4] == 4 and set(R.mul[4]) == {0, 2, 4}


@pytest.mark.parametrize("R,A", [(ring_cyclic(4), [0, 2]), (DUAL2, [0, 2])])
def test_brauer_nilpotent(R, A):
    assert isinstance(brauer_split(R, A), NilpotentWitness)


def test_brauer_rejects_non_minimal():
    with pytest.raises(ValidationError) as exc:
        brauer_split(ring_cyclic(8), [0, 2, 4, 6])
    assert exc.value.witness == (0, 4)


def test_brauer_check_small_rings(small_rings):
    assert all(brauer_check(R).passed for R in small_rings)


# -- us-rings, Theorem 0 --------------------------------------------------------


def test_us_ring_examples():
    assert is_us_ring(ring_cyclic(9))[0]
    us8, smalls8 = is_us_ring(ring_cyclic(8))
    assert not us8
    assert {s.elements for s in smalls8} == {(0,), (0, 4), (0, 2, 4, 6)}
    assert not is_us_ring(ring_cyclic(6))[0]


def _clauses(R):
    d = theorem0_check(R).details
    return d["clause1_us_ring"], d["clause2_J_minimal_and_square_zero"], d["clause3_minimal_or_non_small"]


def test_theorem0_clauses():
    assert _clauses(ring_cyclic(9)) == (True, True, True)
    assert _clauses(ring_cyclic(8)) == (False, False, False)
    assert _clauses(F4) == (False, False, False)


def test_theorem0_literal_third_clause_on_field():
    # with J = 0 the quantified statement is vacuously true
    assert theorem0_check(F4).details["clause3_literal"] is True


def test_theorem0_holds_on_small_rings(small_rings):
    for R in small_rings:
        if R.order > 1:
            assert theorem0_check(R, "right").passed and theorem0_check(R, "left").passed


# -- semiprime, local -----------------------------------------------------------


def test_semiprime_examples():
    assert is_semiprime(ring_cyclic(6))
    assert not is_semiprime(ring_cyclic(4))
    assert is_semiprime(F4)


def test_semiprime_equivalence_z6():
    res = semiprime_equivalence_check(ring_cyclic(6))
    assert res.passed
    assert res.details["right_fs_finite_hdim"] and res.details["left_fs_finite_hdim"] and res.details["semisimple"]


def test_semiprime_equivalence_rejects_dual_numbers():
    with pytest.raises(ValidationError):
        semiprime_equivalence_check(DUAL2)


def test_semiprime_equivalence_field():
    res = semiprime_equivalence_check(F4)
    assert res.passed and res.details["division_ring"]


@pytest.mark.parametrize("n,local", [(9, True), (6, False), (4, True)])
def test_local_cyclic(n, local):
    assert is_local_ring(ring_cyclic(n)) == local


def test_local_field():
    assert is_local_ring(F4)


def test_local_us_chain():
    res = local_us_ring_check(ring_cyclic(9))
    assert res.passed and res.hypothesis
    assert res.details["J"] == [0, 3, 6]
    assert not local_us_ring_check(ring_cyclic(8)).hypothesis
