"""Cyclotomic field kernel: canonical forms, field axioms, embeddings."""

import json
import random
from fractions import Fraction

import pytest
import sympy

from twochar.cyclotomic import (
    CycNumber, common_level, cyclotomic_polynomial, euler_phi, format_cyc,
    from_rational, mat_identity, mat_mul, matrix_trace, one, parse_cyc,
    root_of_unity, zero,
)
from twochar.errors import LevelMismatchError, ParseError, ShapeError


def test_cyclotomic_polynomial_base_case():
    assert cyclotomic_polynomial(1) == (-1, 1)


def test_cyclotomic_polynomial_small():
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)


def test_cyclotomic_polynomial_against_sympy():
    x = sympy.Symbol("x")
    for n in range(1, 25):
        want = tuple(int(c) for c in reversed(sympy.Poly(
            sympy.cyclotomic_poly(n, x), x).all_coeffs()))
        assert cyclotomic_polynomial(n) == want


def test_root_of_unity_basics():
    assert root_of_unity(5, 0) == 1
    assert root_of_unity(4, 2) == -1
    z3 = root_of_unity(3, 1)
    assert z3.coeffs == (Fraction(0), Fraction(1))


def test_root_powers_and_orders():
    for n in range(1, 25):
        z = root_of_unity(n)
        assert z ** n == 1
        for k in range(1, n):
            assert z ** k != 1


def test_vanishing_root_sums():
    for n in range(2, 25):
        acc = zero(n)
        for k in range(n):
            acc = acc + root_of_unity(n, k)
        assert acc.is_zero()


def _random_value(rng, level):
    phi = euler_phi(level)
    coeffs = tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 4)) for _ in range(phi))
    return CycNumber(level, coeffs)


def test_field_axioms_randomized():
    rng = random.Random(20240)
    for level in (1, 2, 3, 4, 5, 6, 8, 9, 10, 12):
        for _ in range(12):
            x, y, z = (_random_value(rng, level) for _ in range(3))
            assert (x + y) + z == x + (y + z)
            assert (x * y) * z == x * (y * z)
            assert x * (y + z) == x * y + x * z
            assert x + y == y + x
            assert x * y == y * x
            assert x + (-x) == 0
            if not x.is_zero():
                assert x * x.inv() == 1


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        zero(6).inv()


def test_level_mismatch_raises():
    with pytest.raises(LevelMismatchError):
        root_of_unity(3) * root_of_unity(4)
    with pytest.raises(LevelMismatchError):
        root_of_unity(3) == root_of_unity(4)


def test_mul_reduction_mod_minpoly():
    z4 = root_of_unity(4)
    assert z4 * z4 == -1
    # same through the generic (untagged) path
    x = CycNumber(4, z4.coeffs)
    assert x * x == -1


def test_embed_basics():
    m1 = from_rational(-1, 2)
    assert m1.embed(4) == from_rational(-1, 4)
    assert root_of_unity(2).embed(6) == root_of_unity(6, 3)
    x = _random_value(random.Random(7), 6)
    assert x.embed(6) is x


def test_embed_requires_divisibility():
    with pytest.raises(LevelMismatchError):
        root_of_unity(4).embed(6)


def test_embed_is_ring_homomorphism():
    rng = random.Random(99)
    for level, M in ((2, 8), (3, 12), (4, 12), (6, 24)):
        for _ in range(8):
            x, y = _random_value(rng, level), _random_value(rng, level)
            assert (x * y).embed(M) == x.embed(M) * y.embed(M)
            assert (x + y).embed(M) == x.embed(M) + y.embed(M)
    assert common_level([root_of_unity(2), root_of_unity(3)])[0].level == 6


def test_matrix_trace():
    assert matrix_trace(mat_identity(3, 4)) == 3
    z3 = root_of_unity(3)
    diag = tuple(tuple(v if i == j else zero(3) for j in range(3))
                 for i, v in enumerate((one(3), z3, z3 * z3)))
    assert matrix_trace(diag) + 1 == z3 + z3 ** 2 + 2  # 1 + z3 + z3^2 == 0
    assert matrix_trace(diag).is_zero()
    x = _random_value(random.Random(3), 6)
    assert matrix_trace(((x,),)) == x
    with pytest.raises(ShapeError):
        matrix_trace(((one(2), one(2)),))


def test_mat_mul_identity():
    rng = random.Random(5)
    a = tuple(tuple(_random_value(rng, 6) for _ in range(3)) for _ in range(2))
    assert mat_mul(a, mat_identity(3, 6)) == a
    assert mat_mul(mat_identity(2, 6), a) == a


def test_json_round_trip():
    rng = random.Random(11)
    for level in (1, 4, 6, 12):
        x = _random_value(rng, level)
        blob = json.dumps(x.to_json(), sort_keys=True)
        assert CycNumber.from_json(json.loads(blob)) == x
    assert json.dumps(root_of_unity(4).to_json()) == \
        '{"level": 4, "coeffs": [["0", "1"], ["1", "1"]]}'


def test_literal_round_trip():
    rng = random.Random(13)
    for level in (1, 2, 3, 4, 6, 8, 12):
        for _ in range(10):
            x = _random_value(rng, level)
            y = parse_cyc(format_cyc(x), level=level)
            assert y.embed(level) == x if y.level != level else y == x


def test_literal_grammar():
    assert parse_cyc("1/2*z8^1 - 3*z8^3 + 2") == \
        from_rational(2, 8) + root_of_unity(8) / 2 - 3 * root_of_unity(8, 3)
    assert parse_cyc("z6") == root_of_unity(6)
    assert parse_cyc("-5/3").as_rational() == Fraction(-5, 3)
    assert parse_cyc("z2^1", level=4) == root_of_unity(4, 2)
    for bad in ("", "z", "2**3", "1 + + 2", "z4^x", "q5"):
        with pytest.raises(ParseError):
            parse_cyc(bad)


def test_power_and_division():
    z12 = root_of_unity(12)
    assert z12 ** -1 == root_of_unity(12, 11)
    assert (z12 + 1) ** 3 == (z12 + 1) * (z12 + 1) * (z12 + 1)
    assert (one(12) * 6) / 2 == 3
    assert 1 / z12 == root_of_unity(12, 11)
