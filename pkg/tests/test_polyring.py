"""Exact multigraded polynomial arithmetic: ring axioms, grading,
evaluation, matrices, rank, and JSON round-trips."""

from __future__ import annotations

import json
import random

import pytest

from monadforge.polyring import (
    DEFAULT_PRIME,
    GROUPS,
    Monomial,
    MultiDegree,
    Polynomial,
    PolyMatrix,
    SpaceParams,
    Variable,
    ZERO_DEGREE,
    dumps_canonical,
    evaluate_matrix,
    hstack,
    matrix_from_json,
    matrix_mul,
    matrix_to_json,
    multidegree_of,
    poly_from_json,
    poly_mul,
    poly_to_json,
    rank_over_field,
    t,
    unit_degree,
    variable_from_name,
    variables_for,
    vstack,
    x,
    y,
    z,
)
from oracles import rank_by_minors

PARAMS = SpaceParams(2, 3, 2)
VARS = variables_for(PARAMS)


def random_poly(rng: random.Random, max_terms: int = 4, max_exp: int = 3) -> Polynomial:
    p = Polynomial.zero()
    for _ in range(rng.randrange(max_terms + 1)):
        mono = Monomial.one()
        for _ in range(rng.randrange(1, 4)):
            mono = mono.mul(Monomial.of(rng.choice(VARS), rng.randrange(1, max_exp)))
        p = p + Polynomial({mono: rng.randrange(-9, 10) or 1})
    return p


def random_point(rng: random.Random, prime: int) -> dict:
    return {v: rng.randrange(prime) for v in VARS}


# ---------------------------------------------------------------------------
# parameters, variables, degrees
# ---------------------------------------------------------------------------


def test_space_params_validation_and_dims():
    p = SpaceParams(1, 2, 3)
    assert p.dim_x == 6
    assert p.group_dim("x") == 1 and p.group_dim("y") == 1
    assert p.group_dim("z") == 2 and p.group_dim("t") == 2
    for bad in [(0, 1, 1), (1, 0, 1), (1, 1, 0), (-2, 1, 1)]:
        with pytest.raises(ValueError):
            SpaceParams(*bad)


def test_variable_names_round_trip():
    for group in GROUPS:
        for idx in range(6):
            v = Variable(group, idx)
            assert variable_from_name(v.name) == v
    with pytest.raises(ValueError):
        variable_from_name("w3")
    with pytest.raises(ValueError):
        variable_from_name("x")


def test_variables_for_order_and_count():
    names = [v.name for v in VARS]
    # canonical group order x < y < z < t, index order inside each group
    assert names[:3] == ["x0", "x1", "x2"]
    assert len(VARS) == 2 * (PARAMS.n + 1) + 2 * (PARAMS.m + 1)
    assert names == sorted(names, key=lambda s: variable_from_name(s).sort_key)


def test_multidegree_arithmetic():
    d1 = MultiDegree(1, 0, -2, 3)
    d2 = MultiDegree(0, 1, 1, 1)
    assert (d1 + d2).as_tuple() == (1, 1, -1, 4)
    assert (d1 - d2).as_tuple() == (1, -1, -3, 2)
    assert (-d1).as_tuple() == (-1, 0, 2, -3)
    assert d1.scale(2).as_tuple() == (2, 0, -4, 6)
    assert d1.min_component() == -2
    assert ZERO_DEGREE.as_tuple() == (0, 0, 0, 0)
    assert unit_degree("z").as_tuple() == (0, 0, 1, 0)


# ---------------------------------------------------------------------------
# ring axioms on seeded random triples
# ---------------------------------------------------------------------------


def test_ring_axioms_random_triples():
    rng = random.Random(20240817)
    for _ in range(1000):
        p, q, r = (random_poly(rng) for _ in range(3))
        assert p + q == q + p
        assert poly_mul(p, q) == poly_mul(q, p)
        assert poly_mul(poly_mul(p, q), r) == poly_mul(p, poly_mul(q, r))
        assert poly_mul(p, q + r) == poly_mul(p, q) + poly_mul(p, r)
        assert p - p == Polynomial.zero()
        assert poly_mul(p, Polynomial.constant(1)) == p
        assert poly_mul(p, Polynomial.zero()).is_zero()


def test_evaluation_is_a_ring_homomorphism():
    rng = random.Random(97)
    prime = 101
    for _ in range(300):
        p, q = random_poly(rng), random_poly(rng)
        point = random_point(rng, prime)
        lhs = poly_mul(p, q).evaluate(point, prime)
        rhs = (p.evaluate(point, prime) * q.evaluate(point, prime)) % prime
        assert lhs == rhs
        assert (p + q).evaluate(point, prime) == (
            p.evaluate(point, prime) + q.evaluate(point, prime)
        ) % prime


def test_evaluate_missing_variable_raises_keyerror():
    p = x(0) * y(1)
    point = {variable_from_name("x0"): 3}
    with pytest.raises(KeyError, match="no value assigned to variable y1"):
        p.evaluate(point, DEFAULT_PRIME)


# ---------------------------------------------------------------------------
# multigrading
# ---------------------------------------------------------------------------


def test_multidegree_of_homogeneous_products():
    rng = random.Random(5)
    linear_makers = {"x": x, "y": y, "z": z, "t": t}
    for _ in range(200):
        group1, group2 = rng.choice(GROUPS), rng.choice(GROUPS)
        dim1, dim2 = PARAMS.group_dim(group1), PARAMS.group_dim(group2)
        p = sum(
            (linear_makers[group1](i).scale(rng.randrange(-3, 4)) for i in range(dim1 + 1)),
            Polynomial.zero(),
        )
        q = sum(
            (linear_makers[group2](i).scale(rng.randrange(-3, 4)) for i in range(dim2 + 1)),
            Polynomial.zero(),
        )
        if p.is_zero() or q.is_zero():
            continue
        product = poly_mul(p, q)
        assert multidegree_of(product) == p.multidegree() + q.multidegree()


def test_multidegree_none_for_inhomogeneous_and_zero():
    assert Polynomial.zero().multidegree() is None
    assert (x(0) + y(0)).multidegree() is None
    assert (x(0) + x(1)).multidegree() == unit_degree("x")


def test_string_form_is_canonical():
    p = y(1) - x(0)
    assert str(p) == "-x0 + y1"
    q = x(0) * x(0) - t(2).scale(3)
    assert str(q) == "x0^2 - 3*t2"
    assert str(Polynomial.zero()) == "0"


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------


def test_matrix_construction_and_access():
    m = PolyMatrix.from_rows([[x(0), y(0)], [z(0), t(0)]])
    assert (m.rows, m.cols) == (2, 2)
    assert m.entry(0, 1) == y(0)
    assert m.row(1) == [z(0), t(0)]
    assert not m.is_zero()
    assert PolyMatrix.zeros(3, 2).is_zero()
    empty = PolyMatrix.zeros(0, 0)
    assert empty.is_zero()


def test_matrix_mul_shapes_and_associativity():
    rng = random.Random(12)
    for _ in range(50):
        a = PolyMatrix.from_rows(
            [[random_poly(rng, 2, 2) for _ in range(3)] for _ in range(2)]
        )
        b = PolyMatrix.from_rows(
            [[random_poly(rng, 2, 2) for _ in range(2)] for _ in range(3)]
        )
        c = PolyMatrix.from_rows(
            [[random_poly(rng, 2, 2) for _ in range(2)] for _ in range(2)]
        )
        ab = matrix_mul(a, b)
        assert (ab.rows, ab.cols) == (2, 2)
        assert matrix_mul(ab, c) == matrix_mul(a, matrix_mul(b, c))
    with pytest.raises(ValueError, match="dimension mismatch"):
        matrix_mul(PolyMatrix.zeros(2, 3), PolyMatrix.zeros(2, 3))


def test_hstack_vstack():
    a = PolyMatrix.from_rows([[x(0)], [x(1)]])
    b = PolyMatrix.from_rows([[y(0)], [y(1)]])
    h = hstack([a, b])
    assert (h.rows, h.cols) == (2, 2)
    assert h.entry(0, 1) == y(0)
    v = vstack([a, b])
    assert (v.rows, v.cols) == (4, 1)
    assert v.entry(3, 0) == y(1)
    with pytest.raises(ValueError):
        hstack([a, PolyMatrix.zeros(3, 1)])
    with pytest.raises(ValueError):
        vstack([a, PolyMatrix.zeros(2, 2)])


def test_negation_distributes_over_entries():
    a = PolyMatrix.from_rows([[x(0), -y(0)], [z(1), t(1)]])
    n = -a
    assert n.entry(0, 0) == -x(0)
    assert n.entry(0, 1) == y(0)
    assert -n == a


# ---------------------------------------------------------------------------
# rank over a finite field
# ---------------------------------------------------------------------------


def test_rank_matches_minor_expansion_oracle():
    rng = random.Random(777)
    prime = 101
    for _ in range(200):
        rows = rng.randrange(1, 5)
        cols = rng.randrange(1, 5)
        m = [[rng.randrange(prime) for _ in range(cols)] for _ in range(rows)]
        assert rank_over_field(m, prime) == rank_by_minors(m, prime)


def test_rank_does_not_mutate_input():
    m = [[1, 2], [2, 4]]
    snapshot = [row[:] for row in m]
    assert rank_over_field(m, 5) == 1
    assert m == snapshot


def test_rank_respects_field_characteristic():
    # the second row is 2x the first modulo 5, independent over the rationals
    m = [[1, 2], [2, 4 + 5]]
    assert rank_over_field(m, 5) == 1
    assert rank_over_field(m, 7) == 2


def test_evaluate_matrix_then_rank():
    rng = random.Random(321)
    a = PolyMatrix.from_rows([[x(0), y(0)], [x(0), y(0)]])
    point = random_point(rng, DEFAULT_PRIME)
    values = evaluate_matrix(a, point, DEFAULT_PRIME)
    assert rank_over_field(values, DEFAULT_PRIME) <= 1


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def test_poly_json_round_trip_bit_exact():
    rng = random.Random(2718)
    for _ in range(200):
        p = random_poly(rng)
        blob = json.dumps(poly_to_json(p))
        assert poly_from_json(json.loads(blob)) == p
        # canonical term order makes the encoding itself stable
        assert json.dumps(poly_to_json(poly_from_json(json.loads(blob)))) == blob


def test_poly_json_uses_decimal_strings():
    p = Polynomial.constant(10**40) * x(0)
    encoded = poly_to_json(p)
    assert encoded[0]["coeff"] == str(10**40)
    assert poly_from_json(encoded) == p


def test_matrix_json_round_trip():
    rng = random.Random(1414)
    m = PolyMatrix.from_rows(
        [[random_poly(rng, 3, 2) for _ in range(3)] for _ in range(2)]
    )
    data = matrix_to_json(m)
    assert data["rows"] == 2 and data["cols"] == 3
    assert matrix_from_json(json.loads(json.dumps(data))) == m


def test_dumps_canonical_is_deterministic():
    doc = {"b": [1, 2], "a": {"y": 1, "x": 2}}
    s1 = dumps_canonical(doc)
    s2 = dumps_canonical(json.loads(s1))
    assert s1 == s2
    assert s1.endswith("\n")
    assert s1.index('"a"') < s1.index('"b"')
