import random

import pytest
from hypothesis import given, strategies as st

from twistedburau.laurent import registry
from twistedburau.matrices import (RingMatrix, assemble_blocks, determinant, direct_sum,
                                   inverse)
from twistedburau.suite import random_unimodular

from conftest import mat, poly, polys

REG = registry(("s", "t"))
G = registry(("t1", "t2"))


def square(size, **kw):
    return st.lists(polys(REG, **kw), min_size=size * size, max_size=size * size).map(
        lambda xs: RingMatrix([xs[i * size:(i + 1) * size] for i in range(size)], REG, size))


def test_identity_and_zero():
    m = mat(REG, [["1 - t", "s"], ["t^-1", "0"]])
    assert RingMatrix.identity(2, REG) * m == m
    assert (m - m).is_zero()
    assert (m - m) == RingMatrix.zero(2, 2, REG)


def test_gassner_product():
    a = mat(G, [["1 - t1", "t2"], [1, 0]])
    b = mat(G, [["1 - t2", "t1"], [1, 0]])
    assert a * b == mat(G, [["1 - t1 + t1*t2", "t1*(1 - t1)"], ["1 - t2", "t1"]])


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        RingMatrix.identity(2, REG) * RingMatrix.identity(3, REG)
    with pytest.raises(ValueError):
        RingMatrix.identity(2, REG) + RingMatrix.identity(3, REG)
    with pytest.raises(ValueError):
        determinant(RingMatrix.zero(2, 3, REG))


def test_blocks():
    k = mat(REG, [["s", 1], [0, "t"]])
    assert assemble_blocks([[k]]) == k
    i2 = RingMatrix.identity(2, REG)
    z2 = RingMatrix.zero(2, 2, REG)
    assert assemble_blocks([[i2, z2], [z2, i2]]) == RingMatrix.identity(4, REG)
    big = assemble_blocks([[k, i2], [z2, k * k]])
    assert big.extract_block(0, 0, 2) == k
    assert big.extract_block(1, 1, 2) == k * k
    assert big.delete_block(0, 1, 2) == z2
    assert direct_sum(k, i2) == assemble_blocks([[k, z2], [z2, i2]])
    with pytest.raises(ValueError):
        assemble_blocks([[k, RingMatrix.identity(3, REG)]])


def test_determinant_examples():
    a = mat(REG, [["1 - t", "-s*t^2"], ["-s*t + s*t^2", "1 + s*t - s*t^2"]])
    expected = poly(REG, "(1 - t)*(1 + s*t)*(1 - s*t^2)")
    assert determinant(a) == expected
    b = mat(REG, [["1 + s*t", "-t"], [0, "1 - t"]])
    assert determinant(b) == poly(REG, "(1 - t)*(1 + s*t)")
    assert determinant(RingMatrix.identity(5, REG)) == 1
    assert determinant(RingMatrix([], REG, 0)) == 1


def test_inverse():
    m = mat(REG, [["-s", 1], [0, 1]])
    assert m * inverse(m) == RingMatrix.identity(2, REG)
    assert inverse(m) * m == RingMatrix.identity(2, REG)
    with pytest.raises(ValueError, match="not invertible"):
        inverse(mat(REG, [["1 + t", 0], [0, 1]]))


def test_bareiss_on_large_unimodular():
    rng = random.Random(7)
    m = RingMatrix.identity(10, REG)
    for _ in range(4):
        m = m * random_unimodular(rng, REG, 10)
    d = determinant(m)
    assert d.is_unit()
    assert determinant(m) == determinant(m, "bareiss") == determinant(m, "cofactor")


@given(square(2), square(2))
def test_det_multiplicative(a, b):
    assert determinant(a * b) == determinant(a) * determinant(b)


@given(square(3, terms=2))
def test_det_transpose(a):
    assert determinant(a.T) == determinant(a)


@given(square(3, terms=3), square(2, terms=3))
def test_block_triangular(a, b):
    # [[a, x], [0, b]] with an arbitrary 3x2 corner
    x = RingMatrix([r[:2] for r in a.rows], REG, 2)
    rows = [list(ra) + list(rx) for ra, rx in zip(a.rows, x.rows)]
    rows += [[0] * 3 + list(rb) for rb in b.rows]
    m = RingMatrix(rows, REG, 5)
    assert determinant(m) == determinant(a) * determinant(b)


@given(square(4, terms=2, exp=1))
def test_bareiss_matches_cofactor(a):
    assert determinant(a, "bareiss") == determinant(a, "cofactor")
