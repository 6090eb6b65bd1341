import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from selfdual.gf2 import (BitMatrix, BitVector, kernel, left_kernel, rank, rref, solve_membership,
                          span_contains, to_words)


@st.composite
def matrices(draw, max_rows=9, max_cols=70):
    ncols = draw(st.integers(1, max_cols))
    nrows = draw(st.integers(0, max_rows))
    rows = draw(st.lists(st.integers(0, (1 << ncols) - 1), min_size=nrows, max_size=nrows))
    return BitMatrix(ncols, tuple(rows))


def test_rref_identity():
    red, rk, piv = rref(BitMatrix.identity(3))
    assert red == BitMatrix.identity(3)
    assert rk == 3 and piv == [0, 1, 2]


def test_rref_zero():
    red, rk, piv = rref(BitMatrix.zeros(2, 4))
    assert rk == 0 and red.nrows == 0 and piv == []


def test_rref_dependent_rows():
    m = BitMatrix.from_strings(["1100", "0110", "1010"])
    assert rref(m)[1] == 2


def test_kernel_examples():
    assert kernel(BitMatrix.identity(5)).nrows == 0
    assert kernel(BitMatrix.zeros(2, 4)).nrows == 4
    k = kernel(BitMatrix.from_strings(["1111"]))
    assert k.nrows == 3
    assert all(v.weight % 2 == 0 for v in k)


def test_membership_examples():
    basis = BitMatrix.from_strings(["1100", "0011"])
    assert solve_membership(basis, BitVector.from_str("1100")) == BitVector.from_str("10")
    assert solve_membership(basis, BitVector(4)) == BitVector(2)
    assert solve_membership(basis, BitVector.from_str("1000")) is None
    with pytest.raises(ValueError, match="length mismatch"):
        solve_membership(basis, BitVector.from_str("110"))


def test_membership_dependent_basis_refused():
    with pytest.raises(ValueError, match="independent"):
        solve_membership(BitMatrix.from_strings(["11", "11"]), BitVector.from_str("11"))


def test_bitvector_basics():
    v = BitVector.from_str("10110")
    assert v.weight == 3 and v.support() == [0, 2, 3] and str(v) == "10110"
    assert v[2] == 1 and v[1] == 0
    assert (v + v).weight == 0
    assert v.dot(BitVector.from_str("10000")) == 1
    assert BitVector.from_support(5, [0, 2, 3]) == v
    with pytest.raises(ValueError):
        BitVector(3, 0b1000)
    with pytest.raises(ValueError):
        BitVector.from_bits([0, 2])


def test_words_have_zero_tails():
    v = BitVector.from_support(70, [0, 63, 64, 69])
    assert v.words == (1 | (1 << 63), 1 | (1 << 5))
    assert BitVector(0).words == (0,)


def test_to_words_matches_bitvector_words():
    rows = [(1 << 100) | 5, (1 << 64) - 1]
    arr = to_words(rows, 101)
    assert [tuple(int(x) for x in arr[i]) for i in range(2)] == [BitVector(101, r).words for r in rows]


def test_transpose_and_product():
    m = BitMatrix.from_strings(["110", "011"])
    assert m.transpose() == BitMatrix.from_strings(["10", "11", "01"])
    assert m @ m.transpose() == BitMatrix.from_strings(["01", "10"])


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_matches_dense_oracle(m):
    assert rank(m) == oracles.rank_np(m.rows, m.ncols)


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rref_same_row_space(m):
    red, rk, piv = rref(m)
    assert red.nrows == rk == len(piv)
    assert all(span_contains(m.rows, m.ncols, r) for r in red.rows)
    assert all(span_contains(red.rows, m.ncols, r) for r in m.rows)
    # reduced: each pivot column is a unit column
    for i, pc in enumerate(piv):
        assert [red.entry(j, pc) for j in range(rk)] == [int(j == i) for j in range(rk)]
        assert red.rows[i] & ((1 << pc) - 1) == 0


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rref_idempotent(m):
    red = rref(m)[0]
    assert rref(red)[0] == red


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_nullity(m):
    k = kernel(m)
    assert rank(m) + k.nrows == m.ncols
    assert all(m.mul_vec(v) == 0 for v in k.rows)
    assert rank(k) == k.nrows


@settings(max_examples=100, deadline=None)
@given(matrices(max_cols=12))
def test_left_kernel(m):
    lk = left_kernel(m)
    assert lk.nrows == m.nrows - rank(m)
    assert all(m.combine(c) == 0 for c in lk.rows)


@settings(max_examples=150, deadline=None)
@given(matrices(), st.data())
def test_membership_round_trip(m, data):
    basis = rref(m)[0]
    if basis.nrows == 0:
        return
    coeffs = data.draw(st.integers(0, (1 << basis.nrows) - 1))
    v = BitVector(m.ncols, basis.combine(coeffs))
    sol = solve_membership(basis, v)
    assert sol is not None and basis.combine(sol.bits) == v.bits
    outside = data.draw(st.integers(0, (1 << m.ncols) - 1))
    res = solve_membership(basis, BitVector(m.ncols, outside))
    assert (res is not None) == span_contains(basis.rows, m.ncols, outside)
