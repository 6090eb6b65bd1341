import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from fixtures import ambient_fixtures, decomposition_fixtures, invariant_self_dual_8, g_type_6_2
from selfdual.analysis import coro2_bound
from selfdual.codes import LinearCode, is_self_dual
from selfdual.modrep import (ModuleDecomposition, Poly2, decompose, factor_x_p_minus_1, is_projective,
                             poly_gcd, quotient_dimension, reciprocal_pairing, s_of_p, self_dual_irreducibles)
from selfdual.perms import NotAutomorphismError, Perm, fixed_subcode, orbit_projection, phi_map, power

PRIMES_200 = [p for p in range(3, 200) if oracles.is_prime(p)]
PRIMES_100 = [p for p in PRIMES_200 if p < 100]
FIXTURES = decomposition_fixtures()


# -- polynomials --------------------------------------------------------------------


def test_poly_arithmetic():
    f = Poly2.from_coeffs([1, 1, 0, 1])  # 1 + x + x^3
    assert f.degree == 3 and str(f) == "x^3 + x + 1"
    assert f.reciprocal() == Poly2.from_coeffs([1, 0, 1, 1])
    q, r = divmod(Poly2.x_power(7) + Poly2(1), f)
    assert r.is_zero() and q * f == Poly2.x_power(7) + Poly2(1)
    assert poly_gcd(f, f.reciprocal()) == Poly2(1)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 1 << 20), st.integers(1, 1 << 12))
def test_divmod_law(a, b):
    q, r = divmod(Poly2(a), Poly2(b))
    assert q * Poly2(b) + r == Poly2(a)
    assert r.is_zero() or r.degree < Poly2(b).degree
    assert (Poly2(a) * Poly2(b)).bits == oracles.pmul(a, b)


# -- s(p) and factorization -----------------------------------------------------------


def test_s_examples():
    assert s_of_p(3) == 2 and s_of_p(19) == 18 and s_of_p(7) == 3
    for bad in (2, 9, 1, -5):
        with pytest.raises(ValueError):
            s_of_p(bad)


def test_s_parity_law():
    for p in PRIMES_200:
        s = s_of_p(p)
        assert s == oracles.mult_order_2(p)
        if p % 8 in (3, 5):
            assert s % 2 == 0
        elif p % 8 == 7:
            assert s % 2 == 1


def test_small_factorizations():
    as_set = lambda p: {str(f) for f in factor_x_p_minus_1(p)}
    assert as_set(3) == {"x + 1", "x^2 + x + 1"}
    assert as_set(7) == {"x + 1", "x^3 + x + 1", "x^3 + x^2 + 1"}
    assert as_set(5) == {"x + 1", "x^4 + x^3 + x^2 + x + 1"}


@pytest.mark.parametrize("p", PRIMES_100)
def test_factorization(p):
    fs = factor_x_p_minus_1(p)
    s = s_of_p(p)
    nu = (p - 1) // s
    assert len(fs) == 1 + nu
    assert fs[0] == Poly2(0b11)
    assert sorted(f.degree for f in fs[1:]) == [s] * nu
    prod = Poly2(1)
    for f in fs:
        prod = prod * f
        assert oracles.is_irreducible(f.bits)
    assert prod == Poly2.x_power(p) + Poly2(1)
    assert len({f.bits for f in fs}) == len(fs)
    # self-reciprocal factors: all of them when s is even, only x + 1 when s is odd
    selfrec = self_dual_irreducibles(p)
    assert selfrec == [i for i, f in enumerate(fs) if f.reciprocal() == f]
    assert selfrec == (list(range(len(fs))) if s % 2 == 0 else [0])
    pairing = reciprocal_pairing(fs)
    assert all(fs[pairing[i]] == f.reciprocal() for i, f in enumerate(fs))


def test_factorization_is_seed_independent():
    for p in (31, 73, 89, 127):
        assert factor_x_p_minus_1(p, seed=0) == factor_x_p_minus_1(p, seed=99)


def test_self_dual_irreducible_examples():
    assert self_dual_irreducibles(5) == [0, 1]
    assert self_dual_irreducibles(7) == [0]
    assert self_dual_irreducibles(3) == [0, 1]


# -- decomposition ---------------------------------------------------------------------


def test_golay_decomposition(golay, g6_golay):
    d = decompose(golay, g6_golay, 3)
    assert (d.x, d.w) == (4, 0)
    assert [d.y[0], d.z[0], d.y[1], d.z[1]] == [2, 0, 2, 0]
    assert quotient_dimension(d) == 0
    assert is_projective(golay, g6_golay, 3)


def test_ambient_space_is_free():
    full, fixed = ambient_fixtures()
    d = decompose(full.code, full.g, 3)
    assert d.y == [2, 2] and d.z == [0, 0]
    assert is_projective(full.code, full.g, 3)
    d = decompose(fixed.code, fixed.g, 3)
    assert d.y == [0, 0]
    assert not is_projective(fixed.code, fixed.g, 3)


def test_quotient_dimension_formula():
    d = ModuleDecomposition(p=5, s=2, nu=2, factors=[], pairing=[], y=[0, 0, 0], z=[2, 1, 1],
                            x=0, w=0, dim=0, n=0)
    assert quotient_dimension(d) == 6


def test_decompose_refusals(golay, g6_golay):
    with pytest.raises(ValueError, match="order"):
        decompose(golay, power(g6_golay, 2), 3)
    g = Perm.from_cycles(8, [range(1, 7)])
    with pytest.raises(ValueError, match="fixed points"):
        decompose(LinearCode.full(8), g, 3)
    with pytest.raises(NotAutomorphismError):
        decompose(LinearCode.from_strings(["11000000"]), g_type_6_2(), 3)
    with pytest.raises(ValueError, match="odd dimension"):
        is_projective(LinearCode.from_strings(["110000", "001100", "000011"]),
                      Perm.from_cycles(6, [range(1, 7)]), 3)


@pytest.mark.parametrize("fx", FIXTURES, ids=lambda f: f.name)
def test_fixture_laws(fx):
    c, g, p = fx.code, fx.g, fx.p
    assert is_self_dual(c)
    d = decompose(c, g, p)
    assert all(d.constraints().values()), d.constraints()
    assert all(d.parity_laws().values()), d.parity_laws()
    h = power(g, p)
    cf = fixed_subcode(c, h)
    # two independent routes to dim C and dim C(h)
    assert sum((2 * yi + zi) * dg for yi, zi, dg in zip(d.y, d.z, d.degrees)) == c.k
    assert d.fixed_dim() == cf.k
    assert d.phi_dim() == phi_map(c, h).k
    if c.k <= 16:
        assert cf.k == oracles.fixed_dim(c.rows, h.image)
    quotient = quotient_dimension(d)
    assert quotient % 2 == (0 if c.n % 4 == 0 else 1)
    pi = orbit_projection(cf, h)
    if c.k % 2 == 0:
        assert is_projective(c, g, p) == is_self_dual(pi)
        assert is_projective(c, g, p) == all(zi == 0 for zi in d.z)
    else:
        assert not is_self_dual(pi)
    assert quotient == 2 * d.fixed_dim() - c.k


def test_odd_two_cycle_corollary():
    """4 | n, s even, w odd: dim C(h) >= n/4 + (p-1)/2 and C is not projective."""
    codes = invariant_self_dual_8()
    assert len(codes) >= 2
    g = g_type_6_2()
    for c in codes:
        d = decompose(c, g, 3)
        assert d.w % 2 == 1
        assert fixed_subcode(c, power(g, 3)).k >= coro2_bound(8, 3)
        assert not is_projective(c, g, 3)


def test_theorem_both_directions_exercised():
    proj = {is_projective(f.code, f.g, f.p) for f in FIXTURES if f.code.k % 2 == 0}
    assert proj == {True, False}


def test_decompose_seed_only_affects_work_not_result(golay, g6_golay):
    a = decompose(golay, g6_golay, 3, seed=0)
    b = decompose(golay, g6_golay, 3, seed=7)
    assert (a.y, a.z, a.factors) == (b.y, b.z, b.factors)


def test_random_invariant_subcodes():
    """Spans of g-orbits of random vectors; only the dimension identity holds without self-duality."""
    rng = random.Random(11)
    g = Perm.from_cycles(12, [range(1, 7), range(7, 13)])
    for _ in range(40):
        rows = []
        for _ in range(rng.randint(1, 3)):
            v = rng.getrandbits(12)
            for _ in range(6):
                rows.append(v)
                v = g.apply(v)
        c = LinearCode.from_rows(12, rows)
        d = decompose(c, g, 3)
        assert d.constraints()["dimension"]
        assert d.fixed_dim() == oracles.fixed_dim(c.rows, power(g, 3).image)
