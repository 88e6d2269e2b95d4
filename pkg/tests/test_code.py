"""LinearCode core: construction, grams, hulls, duals, puncturing."""

import numpy as np
import pytest

from lcdembed import matgf
from lcdembed.code import (EUCLIDEAN, HERMITIAN, LinearCode, new_code, same_code)
from lcdembed.errors import RankDeficientError
from lcdembed.families import hamming, simplex
from lcdembed.fixtures import load_by_name
from lcdembed.gf import GF2, GF3, GF4, field
from lcdembed.matgf import GfMatrix, identity, matmul, rank
from lcdembed.rng import SplitMix64

from oracles import hull_dimension_oracle, rand_array, rand_full_rank, rand_invertible


def random_code(f, k, n, rng, ip=None):
    return LinearCode(GfMatrix(f, rand_full_rank(f, k, n, rng)), ip)


def test_new_code_identity():
    c = new_code(identity(GF2, 4))
    assert (c.n, c.k) == (4, 4)
    assert c.inner_product == EUCLIDEAN


def test_new_code_rejects_rank_deficiency():
    with pytest.raises(RankDeficientError, match="not full rank"):
        new_code(GfMatrix(GF2, [[1, 0, 1], [1, 0, 1]]))


def test_new_code_hamming_fixture():
    c = load_by_name("hamming_7_4_3")
    assert (c.n, c.k) == (7, 4)
    assert c.field == GF2


def test_inner_product_defaults_and_validation():
    c4 = new_code(identity(GF4, 2))
    assert c4.inner_product == HERMITIAN
    c4e = new_code(identity(GF4, 2), EUCLIDEAN)
    assert c4e.inner_product == EUCLIDEAN
    with pytest.raises(ValueError, match="hermitian"):
        new_code(identity(GF3, 2), HERMITIAN)
    with pytest.raises(ValueError):
        new_code(identity(GF3, 2), "symplectic")


def test_gram():
    s = simplex(3, 2)
    assert not s.gram.data.any()
    c = new_code(identity(GF3, 4))
    assert c.gram == identity(GF3, 4)
    rng = SplitMix64(61)
    for f, ip in ((GF2, EUCLIDEAN), (GF4, HERMITIAN), (GF4, EUCLIDEAN)):
        c = random_code(f, 3, 6, rng, ip)
        assert c.star(c.gram) == c.gram  # gram is star-symmetric


def test_hull_dimension():
    assert hamming(2, 3).hull_dimension == 3
    assert new_code(identity(GF3, 5)).hull_dimension == 0
    base = load_by_name("lcd_23_4_14").puncture(range(19, 23))
    assert base.hull_dimension == 4


def test_hull_dimension_matches_zassenhaus_oracle():
    rng = SplitMix64(67)
    cases = 0
    while cases < 60:
        q = (2, 3, 4)[rng.below(3)]
        f = field(q)
        n = 2 + rng.below(9)
        k = 1 + rng.below(min(n, 5))
        ips = (EUCLIDEAN, HERMITIAN) if q == 4 else (EUCLIDEAN,)
        for ip in ips:
            c = random_code(f, k, n, rng, ip)
            expected = hull_dimension_oracle(f, c.gen.data, ip == HERMITIAN)
            assert c.hull_dimension == expected
            cases += 1


def test_hull_dimension_invariant_under_row_operations():
    rng = SplitMix64(71)
    for f in (GF2, GF3, GF4):
        for _ in range(8):
            c = random_code(f, 3, 7, rng)
            t = GfMatrix(f, rand_invertible(f, 3, rng))
            c2 = new_code(matmul(t, c.gen), c.inner_product)
            assert c2.hull_dimension == c.hull_dimension


def test_lcd_preserved_by_signed_column_permutations():
    rng = SplitMix64(73)
    for f in (GF2, GF3, GF4):
        for _ in range(10):
            c = random_code(f, 3, 7, rng)
            perm = list(range(7))
            for i in range(6, 0, -1):
                j = rng.below(i + 1)
                perm[i], perm[j] = perm[j], perm[i]
            data = c.gen.data[:, perm].copy()
            if f is GF3:
                for j in range(7):
                    if rng.below(2):
                        data[:, j] = f.scale_array(f.neg(1), data[:, j])
            c2 = new_code(GfMatrix(f, data), c.inner_product)
            assert c2.is_lcd == c.is_lcd


def test_is_lcd():
    assert load_by_name("lcd_21_10_8").is_lcd
    assert not simplex(3, 2).is_lcd
    assert new_code(identity(GF2, 6)).is_lcd
    rng = SplitMix64(79)
    for _ in range(10):
        c = random_code(GF3, 3, 6, rng)
        assert c.is_lcd == (c.hull_dimension == 0)
        assert c.is_lcd == (matgf.determinant(c.gram) != 0)


def test_dual():
    h = hamming(2, 3)
    d = h.dual
    assert (d.n, d.k) == (7, 3)
    assert same_code(d, simplex(2, 3))
    rng = SplitMix64(83)
    c = random_code(GF3, 3, 6, rng)
    assert same_code(c.dual.dual, c)
    dual = c.dual
    assert not matmul(dual.gen, c.star(c.gen)).data.any()
    full = new_code(identity(GF2, 3))
    assert full.dual.k == 0


def test_hermitian_dual_orthogonality():
    rng = SplitMix64(89)
    c = random_code(GF4, 3, 7, rng, HERMITIAN)
    d = c.dual
    assert d.k == 4
    for x in d.gen.data:
        for g in c.gen.data:
            acc = 0
            for xi, gi in zip(x, g):
                acc = GF4.add(acc, GF4.mul(int(xi), GF4.conj(int(gi))))
            assert acc == 0


def test_hull_decomposition_lcd_code():
    c = new_code(identity(GF2, 4))
    dec = c.hull_decomposition
    assert dec.ell == 0
    assert dec.hull_rows.shape == (0, 4)
    assert same_code(new_code(dec.assembled), c)


def test_hull_decomposition_self_orthogonal():
    s = simplex(3, 2)
    dec = s.hull_decomposition
    assert dec.ell == s.k
    assert dec.complement_rows.shape == (0, s.n)
    assert matgf.same_row_space(dec.hull_rows, s.gen)


def test_hull_decomposition_hamming():
    h = hamming(2, 3)
    dec = h.hull_decomposition
    assert dec.ell == 3
    assert matgf.same_row_space(dec.hull_rows, simplex(2, 3).gen)


def test_hull_decomposition_structure():
    rng = SplitMix64(97)
    for f in (GF2, GF3, GF4):
        for _ in range(8):
            c = random_code(f, 4, 8, rng)
            dec = c.hull_decomposition
            assert dec.ell == c.hull_dimension
            assert rank(dec.assembled) == c.k
            assert same_code(new_code(dec.assembled, c.inner_product), c)
            # hull rows are orthogonal to the entire code
            prod = matmul(dec.hull_rows, c.star(dec.assembled))
            assert not prod.data.any()
            a = dec.complement_rows
            gram_a = matmul(a, c.star(a))
            assert rank(gram_a) == c.k - dec.ell


def test_puncture_identity_and_base_recovery():
    emb = load_by_name("lcd_10_4_4")
    assert same_code(emb.puncture([]), emb)
    base = emb.puncture({7, 8, 9})
    ref = load_by_name("hamming_7_4_3")
    assert same_code(base, ref)
    assert base.gen == ref.gen  # shipped base equals the punctured embedding exactly


def test_puncture_can_drop_dimension():
    c = new_code(GfMatrix(GF2, [[1, 1, 0], [0, 0, 1]]))
    p = c.puncture([2])
    assert (p.n, p.k) == (2, 1)
    zero = new_code(GfMatrix(GF2, [[1]])).puncture([0])
    assert (zero.n, zero.k) == (0, 0)


def test_puncture_validates_coordinates():
    c = new_code(identity(GF2, 3))
    with pytest.raises(ValueError):
        c.puncture([3])


def test_fingerprints():
    c = load_by_name("lcd_23_4_14")
    assert c.fingerprint() == c.fingerprint()
    rep = new_code(GfMatrix(GF2, [[1, 1, 1, 1]]))
    w2 = new_code(GfMatrix(GF2, [[1, 1, 0, 0]]))
    assert rep.fingerprint() != w2.fingerprint()
