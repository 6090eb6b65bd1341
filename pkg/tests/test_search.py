import random

import pytest

import oracles
from fixtures import DC60_ROWS, b_plus_b
from selfdual.codes import LinearCode, is_doubly_even, is_self_dual, min_distance, permute, weight_enumerator
from selfdual.constructions import bordered_double_circulant, extended_hamming8
from selfdual.perms import Perm, aut_type, fixed_subcode, involution_type, orbit_lift, orbit_projection, order, power
from selfdual.search import (_right_systematic, admissible_for_extremal, build_g58, dc_first_rows,
                             enumerate_selfdual_8_4_4, min_distance_two_sided, multiplier_orbits,
                             order58_structure_cases, pair_count_invariant, reference_g58_square,
                             pullback_fixed_dim, search_bordered_dc_60, words_of_weight)


@pytest.fixture(scope="module")
def enumeration():
    return enumerate_selfdual_8_4_4()


# -- [8,4,4] codes ------------------------------------------------------------------


def test_enumeration(enumeration, hamming):
    assert len(enumeration.survivors) == 30
    assert enumeration.complete
    for c, cert in zip(enumeration.survivors, enumeration.certificates):
        assert is_self_dual(c) and is_doubly_even(c) and min_distance(c) == 4
        assert permute(hamming, cert["equivalence_to_hamming"]) == c


def test_enumeration_matches_subspace_oracle(enumeration):
    oracle = {tuple(sorted(LinearCode.from_rows(8, b).rows))
              for b in oracles.self_dual_codes(8) if oracles.min_distance(b) == 4}
    assert {tuple(sorted(c.rows)) for c in enumeration.survivors} == oracle


def test_survivors_are_deduplicated(enumeration):
    assert len(set(enumeration.survivors)) == len(enumeration.survivors)
    assert not enumeration.add(enumeration.survivors[0], {})


# -- the order-58 permutation ----------------------------------------------------------


def test_g58_shape():
    g = build_g58()
    assert order(g) == 58
    assert str(aut_type(g, 29)) == "2*29-(2,0,2;0)"
    assert power(g, 2) == reference_g58_square()
    h = power(g, 29)
    assert involution_type(h) == involution_type(Perm.from_cycles(120, [(2 * i + 1, 2 * i + 2) for i in range(60)]))
    # (1,30) ... (59,88) ... (117,118)(119,120)
    for a, b in ((1, 30), (2, 31), (59, 88), (117, 118), (119, 120)):
        assert h(a - 1) == b - 1


def test_alignments_give_same_dimensions(enumeration):
    for offset in (0, 3):
        g = build_g58(offset)
        assert power(g, 2) == reference_g58_square() and order(g) == 58
    dims = {off: sorted(pullback_fixed_dim(a, build_g58(off)) for a in enumeration.survivors) for off in (0, 3, 15)}
    assert dims[0] == dims[3] == dims[15]


def test_pullback_values(enumeration):
    g = build_g58()
    dims = [pullback_fixed_dim(a, g) for a in enumeration.survivors]
    assert set(dims) <= {0, 1, 2, 3}
    # the maximum over codes whose lift could sit in a [120,60,24] code
    adm = [d for a, d in zip(enumeration.survivors, dims) if admissible_for_extremal(a)]
    assert max(adm) == 2
    # codes reaching 3 contain a word supported on the four fixed points of g^2
    for a, d in zip(enumeration.survivors, dims):
        if d == 3:
            assert 0b11110000 in a
            assert not admissible_for_extremal(a)


def test_pullback_matches_direct_count(enumeration):
    g = build_g58()
    for a in enumeration.survivors[:8] + [extended_hamming8()]:
        lift = orbit_lift(a, power(g, 2))
        assert lift.k == 4
        assert pullback_fixed_dim(a, g) == oracles.fixed_dim(lift.rows, g.image)


def test_pullback_refusals(hamming):
    with pytest.raises(ValueError, match="length 8"):
        pullback_fixed_dim(LinearCode.full(4), build_g58())
    with pytest.raises(ValueError, match="order-58"):
        pullback_fixed_dim(hamming, Perm.identity(120))


def test_structure_cases():
    cases = {c["case"]: c for c in order58_structure_cases()}
    assert cases["a"]["dim_B"] == 58 and cases["a"]["excluded"] and not cases["a"]["projective"]
    assert cases["b"]["dim_B"] == 30 and not cases["b"]["excluded"] and cases["b"]["projective"]
    assert all(c["constraints_hold"] and c["dim_C_g"] == 2 for c in cases.values())


@pytest.mark.parametrize("row", DC60_ROWS)
def test_projection_of_square_fixed_code_is_self_dual_8_4(row):
    c, g = b_plus_b(row)
    q = power(g, 2)
    assert str(aut_type(q, 29)) == "29-(4,4)"
    pi = orbit_projection(fixed_subcode(c, q), q)
    assert (pi.n, pi.k) == (8, 4) and is_self_dual(pi)
    assert fixed_subcode(c, g).k == 2


# -- bordered double circulants ------------------------------------------------------------


def _random_self_dual_dc(rng, ell):
    while True:
        r = [rng.randrange(2) for _ in range(ell)]
        c = bordered_double_circulant(r, (1, 1, 0))
        if is_self_dual(c):
            return c


def test_two_sided_distance_bound():
    rng = random.Random(4)
    for _ in range(25):
        ell = rng.choice([7, 9, 11, 13])
        c = _random_self_dual_dc(rng, ell)
        right = _right_systematic(c, ell + 1)
        d = min_distance(c)
        for t in (1, 2, 3):
            val, exact = min_distance_two_sided(c, right, t)
            if exact:
                assert val == d
            else:
                assert d >= val == 2 * t + 2


def test_words_of_weight_counts():
    rng = random.Random(6)
    for _ in range(10):
        c = _random_self_dual_dc(rng, rng.choice([9, 11, 13]))
        we = weight_enumerator(c)
        right = _right_systematic(c, c.n // 2)
        for w in (we.min_distance, we.min_distance + 2):
            words = words_of_weight(c, right, w)
            assert len(words) == we[w]
            assert all(bin(x).count("1") == w and x in c for x in words)


def test_pair_invariant_is_permutation_invariant():
    rng = random.Random(12)
    c = _random_self_dual_dc(rng, 11)
    right = _right_systematic(c, 12)
    d = min_distance(c)
    inv = pair_count_invariant(c.n, words_of_weight(c, right, d))
    pts = list(range(c.n))
    rng.shuffle(pts)
    s = Perm(tuple(pts))
    words = [s.apply(x) for x in words_of_weight(c, right, d)]
    assert pair_count_invariant(c.n, words) == inv


def test_multiplier_orbits_group_equivalent_rows():
    ell = 13
    rows, _ = dc_first_rows(ell)
    strs = ["".join(str((int(r) >> i) & 1) for i in range(ell)) for r in rows]
    orbits = multiplier_orbits(strs)
    assert sorted(sum(orbits, [])) == sorted(strs)
    for orb in orbits:
        wes = {weight_enumerator(bordered_double_circulant([int(b) for b in s], (1, 1, 0))) for s in orb}
        assert len(wes) == 1


def test_first_row_scan_matches_brute_force():
    ell = 9
    rows, cnt = dc_first_rows(ell)
    assert cnt == len(rows)
    got = {int(r) for r in rows}
    # every self-dual first row is a rotation/reversal of a scanned canonical row
    def orbit(r):
        rev = sum(((r >> i) & 1) << (ell - 1 - i) for i in range(ell))
        return {((x << t) | (x >> (ell - t))) & ((1 << ell) - 1) for x in (r, rev) for t in range(ell)}

    brute = set()
    for r in range(1 << ell):
        if is_self_dual(bordered_double_circulant([(r >> i) & 1 for i in range(ell)], (1, 1, 0))):
            brute.add(min(orbit(r)))
    assert got == brute


def test_other_borders_have_weight_two_words():
    rng = random.Random(2)
    for _ in range(200):
        ell = rng.choice([5, 7, 9, 11])
        r = [rng.randrange(2) for _ in range(ell)]
        for border in ((0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (1, 0, 0), (1, 0, 1), (1, 1, 1)):
            c = bordered_double_circulant(r, border)
            if is_self_dual(c):
                assert min_distance(c) <= 2


def test_budget_marks_outcome_incomplete():
    out = search_bordered_dc_60(12, budget=1 << 16, shard=3, num_shards=8, full_enumerators=False)
    assert not out.complete and out.examined == 1 << 16


@pytest.mark.heavy
def test_full_shard_search():
    out = search_bordered_dc_60(12, shard=0, num_shards=16)
    assert out.complete
    for c, cert in zip(out.survivors, out.certificates):
        assert is_self_dual(c) and cert["singly_even"]
        assert min(w for w in cert["weight_enumerator"] if w) == 12
