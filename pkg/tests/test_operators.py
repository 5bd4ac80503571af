from itertools import product
from math import gcd

import numpy as np
import pytest

from dpcodes.gf2field import default_spec, field
from dpcodes.operators import (
    MATRIX2,
    MATRIX3,
    OperatorError,
    differential_uniformity,
    direct_sum,
    gold,
    identity,
    inverse,
    is_apn,
    is_bijective,
    is_f_plus_id_bijective,
    matrix,
    parse_operator,
    power,
    primitive_mul,
    propf_solutions,
    satisfies_propf,
    table_operator,
)


def dense(rows, m):
    """Rows as bitmasks -> 0/1 matrix with entry (i, j) = bit j of row i."""
    return np.array([[r >> j & 1 for j in range(m)] for r in rows])


def apply_dense(M, x):
    m = len(M)
    v = np.array([x >> j & 1 for j in range(m)])
    out = M.dot(v) % 2
    return sum(int(b) << i for i, b in enumerate(out))


@pytest.mark.parametrize("rows", [MATRIX2, MATRIX3, (0b1011, 0b0110, 0b1100, 0b0001)])
def test_matrix_action_matches_dense_product(rows):
    m = len(rows)
    f = matrix(rows, default_spec(m))
    M = dense(rows, m)
    for x in range(1 << m):
        assert f(x) == apply_dense(M, x)


def test_matrix2_values():
    f = matrix(MATRIX2, default_spec(2))
    # [[1,1],[1,0]] times (1,0) and (0,1)
    assert f(0b01) == 0b11
    assert f(0b10) == 0b01
    assert f(0) == 0


def test_example_matrices_satisfy_conditions():
    for rows in (MATRIX2, MATRIX3):
        f = matrix(rows, default_spec(len(rows)))
        assert is_bijective(f) and is_f_plus_id_bijective(f)


def test_identity_fails_condition_b():
    f = identity(default_spec(3))
    assert is_bijective(f) and not is_f_plus_id_bijective(f)


@pytest.mark.parametrize("m", range(2, 9))
def test_primitive_mul(m):
    h = primitive_mul(default_spec(m))
    assert h(0) == 0
    assert is_bijective(h) and is_f_plus_id_bijective(h)
    gf = field(m)
    assert all(h(x) == gf.mul(0b10, x) for x in gf.elements())


def test_power_values():
    spec = default_spec(3)
    gf = field(spec)
    u = power(spec, 3)
    assert u(0b10) == gf.mul(gf.mul(0b10, 0b10), 0b10) == 0b011
    v = inverse(spec)
    assert v(0) == 0 and all(gf.mul(x, v(x)) == 1 for x in range(1, 8))


def test_table_agrees_with_definition():
    for f in (power(default_spec(5), 3), inverse(default_spec(4)), primitive_mul(default_spec(6))):
        assert [int(v) for v in f.table] == [f._eval(x) for x in range(f.spec.n)]


def apn_oracle(f) -> bool:
    """Count solutions of f(x) + f(x + a) = b for every a != 0 and b."""
    n = f.spec.n
    for a in range(1, n):
        counts = [0] * n
        for x in range(n):
            counts[f(x) ^ f(x ^ a)] += 1
        if any(c not in (0, 2) for c in counts):
            return False
    return True


@pytest.mark.parametrize("m", [3, 4, 5])
def test_cube_is_apn(m):
    u = power(default_spec(m), 3)
    assert is_apn(u) and apn_oracle(u)
    assert is_bijective(u) == (m % 2 == 1)


@pytest.mark.parametrize("m", [3, 4, 5, 6])
def test_inverse_apn_iff_odd(m):
    v = inverse(default_spec(m))
    assert is_apn(v) == apn_oracle(v) == (m % 2 == 1)
    assert is_bijective(v)


def test_linear_map_is_not_apn():
    f = matrix(MATRIX3, default_spec(3))
    assert differential_uniformity(f) == 8
    assert not is_apn(f)


def propf_oracle(f) -> bool:
    """Plain six-fold loop over (a, b, c, e) with no symmetry reduction."""
    n = f.spec.n
    for a, b, c, e in product(range(n), repeat=4):
        d, t = a ^ b ^ c, a ^ b ^ e
        if len({a, b, c, d, e, t}) == 6 and f(a) ^ f(b) ^ f(c) ^ f(d) ^ f(e) ^ f(t) == 0:
            return False
    return True


def test_propf_examples():
    assert satisfies_propf(power(default_spec(3), 3))
    assert propf_oracle(power(default_spec(3), 3))
    assert satisfies_propf(power(default_spec(5), 5))


def test_propf_holds_for_linear_bijection():
    # for linear f the third sum collapses to f(a + b), nonzero when a != b
    f = matrix(MATRIX3, default_spec(3))
    assert satisfies_propf(f) and propf_oracle(f)


def test_propf_fails_for_constant_map():
    f = table_operator(default_spec(3), [5] * 8)
    assert not satisfies_propf(f) and not propf_oracle(f)
    sol = propf_solutions(f, limit=1)[0]
    assert len(set(sol)) == 6
    a, b, c, d, e, t = sol
    assert a ^ b ^ c ^ d == 0 and a ^ b ^ e ^ t == 0
    assert f(a) ^ f(b) ^ f(c) ^ f(d) ^ f(e) ^ f(t) == 0


def test_propf_cube_gf16_recorded(capsys):
    u = power(default_spec(4), 3)
    value = satisfies_propf(u)
    assert value == propf_oracle(u)
    with capsys.disabled():
        print(f"\n  propf for pow:3 on GF(16): {value}")


def test_gold_examples():
    spec3, spec5 = default_spec(3), default_spec(5)
    assert gold(spec3, 1).params == (3,) and gold(spec3, 1).kind == "power"
    assert gold(spec5, 2).params == (5,)
    g = gold(spec5, 1)
    assert g.name == "gold(m=5,l=1)"
    assert is_bijective(g) and is_apn(g) and satisfies_propf(g)
    with pytest.raises(OperatorError):
        gold(default_spec(4), 2)


@pytest.mark.parametrize("m", [3, 5])
def test_fast_propf_agrees_with_full_scan(m):
    for l in range(1, m):
        if gcd(l, m) == 1:
            g = gold(default_spec(m), l)
            assert satisfies_propf(g, fast=True) == satisfies_propf(g)


def test_fast_propf_refuses_other_maps():
    with pytest.raises(OperatorError):
        satisfies_propf(inverse(default_spec(3)), fast=True)


@pytest.mark.parametrize("m", [3, 5, 7])
def test_gold_family_certified(m):
    for l in range(1, m):
        if gcd(l, m) != 1:
            continue
        g = gold(default_spec(m), l)
        assert is_bijective(g) and is_apn(g)
        assert satisfies_propf(g, fast=m > 5)


@pytest.mark.parametrize("m", [2, 4, 6])
def test_cube_not_bijective_for_even_m(m):
    assert not is_bijective(power(default_spec(m), 3))


def two_by_two_good():
    spec = default_spec(2)
    out = []
    for r0, r1 in product(range(4), repeat=2):
        f = matrix((r0, r1), spec)
        if is_bijective(f) and is_f_plus_id_bijective(f):
            out.append(f)
    return out


def test_direct_sum_preserves_conditions():
    good = two_by_two_good()
    assert len(good) == 2  # the two matrices of order 3 in GL(2,2)
    for left in good:
        for right in good:
            g = direct_sum(left, right, default_spec(4))
            assert is_bijective(g) and is_f_plus_id_bijective(g)
            for x in range(16):
                assert g(x) == left(x & 3) | right(x >> 2) << 2


def test_direct_sum_degree_check():
    with pytest.raises(OperatorError):
        direct_sum(matrix(MATRIX2, default_spec(2)), matrix(MATRIX3, default_spec(3)), default_spec(4))


def test_table_operator():
    spec = default_spec(2)
    f = table_operator(spec, [0, 2, 3, 1])
    assert f(1) == 2 and is_bijective(f)
    with pytest.raises(OperatorError):
        table_operator(spec, [0, 1, 2])


def test_parse_operator_literals():
    assert parse_operator("matrix2", 2).table.tolist() == matrix(MATRIX2, default_spec(2)).table.tolist()
    assert parse_operator("matrix:3,1", 2).table.tolist() == matrix(MATRIX2, default_spec(2)).table.tolist()
    assert parse_operator("gamma", 3).kind == "primitive_mul"
    assert parse_operator("pow:3", 3).params == (3,)
    assert parse_operator("inv", 3).kind == "inverse"
    assert parse_operator("gold:2", 5).params == (5,)
    assert parse_operator("gold(m=5,l=2)", 5).params == (5,)
    g = parse_operator("sum(matrix2,matrix2)", 4)
    assert g.kind == "direct_sum" and g.m == 4
    assert parse_operator("sum(gamma@2,matrix2)", 4).m == 4
    for bad in ("matrix3", "sum(gamma,matrix2)", "nonsense", "sum(matrix2)"):
        with pytest.raises(OperatorError):
            parse_operator(bad, 2 if bad == "matrix3" else 4)
