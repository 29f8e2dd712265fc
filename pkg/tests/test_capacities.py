import math
from fractions import Fraction

import pytest

from capax import capacities, toric
from capax.errors import (
    DimensionMismatchError,
    KTooLargeForEnumerationError,
    NotApplicableError,
)
from conftest import random_downward_polytope, random_fraction, random_shaped_domain

F = Fraction


def min_T_oracle(params, k):
    """Independent ellipsoid oracle: least T with sum floor(T/a_i) >= k,
    found by scanning the candidate multiset {m a_i} in increasing order."""
    candidates = sorted({m * a for a in params for m in range(1, k + 1)})
    for t in candidates:
        if sum(math.floor(t / a) for a in params) >= k:
            return t
    raise AssertionError("oracle scan exhausted")


# -- closed forms -------------------------------------------------------------

def test_ellipsoid_closed_form_frozen_row():
    E = toric.ellipsoid(["7/2", 4])
    expected = [F(7, 2), F(4), F(7), F(8), F(21, 2), F(12), F(14)]
    got = [capacities.capacity_closed_form(E, k) for k in range(1, 8)]
    assert got == expected
    assert [min_T_oracle(E.params, k) for k in range(1, 8)] == expected


def test_ball_closed_form():
    B = toric.ball(5, 3)
    assert capacities.capacity_closed_form(B, 4) == 10  # ceil(4/3) * 5
    for k in range(1, 20):
        assert capacities.capacity_closed_form(B, k) == \
            math.ceil(F(k, 3)) * 5


def test_polydisk_closed_form():
    D = toric.polydisk([1, 1])
    assert capacities.capacity_closed_form(D, 9) == 9
    D2 = toric.polydisk(["7/2", 4])
    assert capacities.capacity_closed_form(D2, 5) == F(35, 2)


def test_closed_form_not_applicable_for_polytopes():
    P = toric.polytope([(0, 0), (1, 0), (0, 1), (1, 1)])
    with pytest.raises(NotApplicableError):
        capacities.capacity_closed_form(P, 1)


def test_closed_form_matches_min_T_oracle(rng):
    for _ in range(40):
        d = rng.randint(1, 4)
        E = toric.ellipsoid([random_fraction(rng, 0, 5, positive=True)
                             for _ in range(d)])
        k = rng.randint(1, 15)
        assert capacities.capacity_closed_form(E, k) == min_T_oracle(E.params, k)


# -- lattice route ------------------------------------------------------------

def test_lattice_examples():
    B = toric.ball(1, 2)
    assert capacities.capacity_lattice(B, 3) == (F(2), (2, 1))
    D = toric.polydisk(["7/2", 4])
    assert capacities.capacity_lattice(D, 5) == (F(35, 2), (5, 0))
    E = toric.ellipsoid(["7/2", 4])
    assert capacities.capacity_lattice(E, 4) == (F(8), (2, 2))


def test_lattice_witness_is_valid(rng):
    for _ in range(40):
        d = rng.randint(1, 3)
        dom = (random_downward_polytope(rng, d) if rng.random() < 0.5
               else random_shaped_domain(rng, d))
        k = rng.randint(1, 8)
        value, witness = capacities.capacity_lattice(dom, k)
        assert sum(witness) == k
        assert toric.support_norm(dom, witness) == value


def test_budget_error():
    B = toric.ball(1, 6)
    with pytest.raises(KTooLargeForEnumerationError):
        capacities.capacity_lattice(B, 10, budget=10)
    with pytest.raises(KTooLargeForEnumerationError):
        capacities.capacity_polar(B, 10, budget=10)


# -- polar route ---------------------------------------------------------------

def test_polar_examples():
    E = toric.ellipsoid(["7/2", 4])
    value, z = capacities.capacity_polar(E, 1)
    assert value == F(7, 2)
    assert capacities.capacity_polar(E, 3)[0] == 7
    # The witness is a point of the slice reaching the lattice functional.
    s = toric.polar_slice(E, value)
    assert s.contains(z) and toric.lattice_functional(z) >= 1


def test_polar_threshold_certificates(rng):
    # max I over the slice jumps below c_k: just under, the functional
    # cannot reach k; at c_k it does.
    for _ in range(20):
        d = rng.randint(1, 3)
        dom = (random_downward_polytope(rng, d) if rng.random() < 0.5
               else random_shaped_domain(rng, d))
        k = rng.randint(1, 6)
        value, _ = capacities.capacity_polar(dom, k)
        at, _ = toric.max_lattice_functional(toric.polar_slice(dom, value))
        assert at >= k
        below = value * F(999, 1000)
        under, _ = toric.max_lattice_functional(toric.polar_slice(dom, below))
        assert under < k


# -- cross-oracle equality ------------------------------------------------------

def test_cross_oracle_on_random_domains(rng):
    for _ in range(30):
        d = rng.randint(1, 3)
        dom = (random_downward_polytope(rng, d) if rng.random() < 0.5
               else random_shaped_domain(rng, d))
        k = rng.randint(1, 8)
        lattice = capacities.capacity_lattice(dom, k)[0]
        polar = capacities.capacity_polar(dom, k)[0]
        assert lattice == polar
        if dom.shape != "polytope":
            assert lattice == capacities.capacity_closed_form(dom, k)


def test_square_polytope_equals_polydisk():
    P = toric.polytope([(0, 0), (1, 0), (0, 1), (1, 1)])
    report = capacities.capacity_sequence(P, 3, capacities.METHOD_LATTICE)
    assert report.values() == (F(1), F(2), F(3))


# -- sequences and reports -------------------------------------------------------

def test_sequence_examples_and_monotonicity():
    E = toric.ellipsoid(["7/2", 4])
    rep = capacities.capacity_sequence(E, 2)
    assert rep.values() == (F(7, 2), F(4))
    B = toric.ball(1, 1)
    rep = capacities.capacity_sequence(B, 3)
    assert rep.values() == (F(1), F(2), F(3))


def test_sequence_witnesses_hold_for_every_method(rng):
    dom = random_downward_polytope(rng, 2)
    for method in (capacities.METHOD_LATTICE, capacities.METHOD_POLAR,
                   capacities.METHOD_CROSS_CHECK):
        rep = capacities.capacity_sequence(dom, 5, method)
        for e in rep.entries:
            assert sum(e.witness_vector) == e.k
            assert toric.support_norm(dom, e.witness_vector) == e.value
            assert e.witness_T == e.value


def test_cross_check_method_detects_nothing_on_valid_domains(rng):
    dom = random_shaped_domain(rng, 2)
    rep = capacities.capacity_sequence(dom, 6, capacities.METHOD_CROSS_CHECK)
    assert rep.method == capacities.METHOD_CROSS_CHECK
    assert len(rep.entries) == 6


# -- capacity axioms ---------------------------------------------------------------

def test_conformality(rng):
    for _ in range(40):
        d = rng.randint(1, 3)
        dom = random_shaped_domain(rng, d)
        s = random_fraction(rng, 0, 4, positive=True)
        k = rng.randint(1, 20)
        assert capacities.capacity_closed_form(toric.scale_domain(dom, s), k) \
            == s * capacities.capacity_closed_form(dom, k)


def test_monotonicity_under_inclusion(rng):
    for _ in range(25):
        d = rng.randint(1, 3)
        inner = random_downward_polytope(rng, d)
        s = F(rng.randint(1, 8), 8)
        smaller = toric.scale_domain(inner, s)
        for w in smaller.vertices:
            assert toric.contains_point(inner, w)
        k = rng.randint(1, 6)
        assert capacities.capacity_lattice(smaller, k)[0] <= \
            capacities.capacity_lattice(inner, k)[0]


def test_spectrum_surrogate(rng):
    # Every ellipsoid capacity is a multiple of some a_i, every polydisk
    # capacity a multiple of a_1.
    for _ in range(30):
        d = rng.randint(1, 3)
        params = [random_fraction(rng, 0, 5, positive=True) for _ in range(d)]
        k = rng.randint(1, 20)
        cE = capacities.capacity_closed_form(toric.ellipsoid(params), k)
        assert any((cE / a).denominator == 1 for a in params)
        cD = capacities.capacity_closed_form(toric.polydisk(params), k)
        assert (cD / min(params)).denominator == 1


# -- obstructions --------------------------------------------------------------------

def test_obstruction_examples():
    rep = capacities.obstruct_embedding(toric.ball(1, 2), toric.ball("9/10", 2), 5)
    assert rep.obstructed and rep.first_k == 1
    assert rep.source_value == 1 and rep.target_value == F(9, 10)

    D = toric.polydisk([1, 2])
    rep = capacities.obstruct_embedding(D, D, 6)
    assert not rep.obstructed
    assert any("necessary" in note for note in rep.notes)


def test_obstruction_E14_into_B2():
    E = toric.ellipsoid([1, 4])
    B = toric.ball(2, 2)
    c_e = [capacities.capacity_closed_form(E, k) for k in range(1, 11)]
    c_b = [capacities.capacity_closed_form(B, k) for k in range(1, 11)]
    assert c_e == [F(x) for x in (1, 2, 3, 4, 4, 5, 6, 7, 8, 8)]
    assert c_b == [F(x) for x in (2, 2, 4, 4, 6, 6, 8, 8, 10, 10)]
    rep = capacities.obstruct_embedding(E, B, 10)
    assert not rep.obstructed


def test_obstruction_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        capacities.obstruct_embedding(toric.ball(1, 2), toric.ball(1, 3), 3)
