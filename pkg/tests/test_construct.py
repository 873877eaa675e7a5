import random

import numpy as np
import pytest

from normbch import (
    BasisPair,
    Codeword,
    apply_affine_permutation,
    augmented_matrix,
    bch_matrix,
    build_locators,
    enumerate_weight_words,
    linalg,
    make_basis_pair,
    make_field,
    read_codeword_file,
    read_matrix_file,
    syndrome,
    validate_params,
    write_codeword_file,
    write_matrix_file,
)


class TestValidateParams:
    def test_535_valid(self):
        p = validate_params(5, 3, 5)
        assert p.valid
        assert (p.s, p.mu, p.n) == (1, 3, 125)

    def test_335_invalid_two_reasons(self):
        p = validate_params(3, 3, 5)
        assert not p.valid
        assert len(p.violations) == 2
        joined = " ".join(p.violations)
        assert "divides d-2" in joined
        assert "below d-1" in joined

    def test_544_relaxed_valid(self):
        assert validate_params(5, 4, 4, relaxed=True).valid

    def test_544_strict_invalid(self):
        p = validate_params(5, 4, 4)
        assert not p.valid
        assert any("not prime" in v for v in p.violations)

    def test_relaxed_divisor_failure(self):
        p = validate_params(7, 4, 5, relaxed=True)
        assert not p.valid
        assert any("divisors" in v for v in p.violations)

    def test_non_prime_q(self):
        assert not validate_params(6, 3, 4).valid

    def test_d_below_three(self):
        p = validate_params(5, 3, 2)
        assert any("minimum supported distance" in v for v in p.violations)


class TestLocators:
    def test_prime_field_permutation(self):
        loc = build_locators(validate_params(5, 1, 3))
        vals = [x.val for x in loc.values]
        assert sorted(vals) == [0, 1, 2, 3, 4]
        assert vals[-1] == 0

    def test_last_nonzero_position_is_one(self):
        loc = build_locators(validate_params(5, 2, 4))
        assert loc.locator(24) == loc.field.one
        assert loc.locator(25) == loc.field.zero

    def test_all_distinct(self):
        loc = build_locators(validate_params(5, 2, 4))
        assert len({x.val for x in loc.values}) == 25

    def test_position_roundtrip(self):
        loc = build_locators(validate_params(5, 2, 4))
        for j in range(1, 26):
            assert loc.position_of(loc.locator(j)) == j


class TestBchMatrix:
    def test_shape_and_rank_524(self, h524):
        assert (h524.row_count, h524.n) == (3, 25)
        assert h524.rank() == 3

    def test_extended_column(self, h524, ha524):
        for m in (h524, ha524):
            col = m.column(m.n)
            assert col[0] == 1
            assert not col[1:].any()

    def test_ones_row(self, h524):
        assert (h524.rows[0] == 1).all()

    def test_blocks(self, h535):
        assert h535.blocks == (("ones", 1), ("pow1", 3), ("pow2", 3))


class TestAugmentedMatrix:
    def test_shape_524(self, ha524):
        assert (ha524.row_count, ha524.n) == (4, 25)
        assert ha524.rank() == 4

    def test_shape_535(self, ha535):
        assert (ha535.row_count, ha535.n) == (8, 125)
        assert ha535.rank() == 8
        assert ha535.dimension() == 117

    def test_norm_entry_extended_position_zero(self, ha535):
        assert ha535.rows[-1, -1] == 0

    def test_rank_bound(self, ha535, params535):
        p = params535
        assert ha535.rank() <= (p.d - 3) * p.m + p.s + 1
        assert ha535.dimension() >= p.n - (p.d - 3) * p.m - p.s - 1

    def test_row_space_contains_base(self, h535, ha535):
        stacked = np.vstack([h535.rows, ha535.rows])
        assert linalg.rank(stacked, 5) == ha535.rank()

    def test_d3_rejected(self):
        p = validate_params(5, 2, 3)
        with pytest.raises(ValueError, match="bch_matrix"):
            augmented_matrix(p)
        assert bch_matrix(p).row_count == 1

    def test_columns_never_proportional(self, ha524):
        q = ha524.q
        cols = ha524.rows.T
        for i in range(ha524.n):
            for j in range(i + 1, ha524.n):
                for c in range(1, q):
                    assert ((cols[i] * c) % q != cols[j]).any()

    def test_determinism(self, params535, ha535):
        again = augmented_matrix(params535)
        assert again.to_text() == ha535.to_text()
        assert again.sha256() == ha535.sha256()

    def test_alternative_basis_same_distance_verdicts(self, params524, ha524):
        from normbch import min_distance_at_least

        bp = make_basis_pair(5, 2, 4)
        scaled = (bp.g[0], bp.field_mu.scalar(2) * bp.g[1])
        alt = augmented_matrix(params524, basis=BasisPair(bp.h, scaled, 1))
        assert alt.to_text() != ha524.to_text()
        for d in (4, 5):
            a = min_distance_at_least(ha524, d)
            b = min_distance_at_least(alt, d)
            assert a.verdict == b.verdict


class TestCodeword:
    def test_validation(self):
        with pytest.raises(ValueError):
            Codeword((3, 2), (1, 1))
        with pytest.raises(ValueError):
            Codeword((1, 2), (1, 0))
        with pytest.raises(ValueError):
            Codeword((0, 2), (1, 1))
        assert Codeword((1, 5), (2, 3)).weight == 2

    def test_empty_syndrome(self, h524):
        assert not syndrome(h524, Codeword((), ())).any()

    def test_single_coordinate_syndrome(self, ha524):
        word = Codeword((7,), (3,))
        s = syndrome(ha524, word)
        assert (s == (ha524.column(7) * 3) % 5).all()
        assert s.any()

    def test_out_of_range_position(self, h524):
        with pytest.raises(ValueError):
            syndrome(h524, Codeword((26,), (1,)))


class TestAffinePermutation:
    def test_identity(self, h524):
        loc = h524.locators
        f = loc.field
        word = Codeword((1, 5, 9), (1, 2, 3))
        assert apply_affine_permutation(word, f.zero, f.one, loc) == word

    def test_zero_multiplier_rejected(self, h524):
        loc = h524.locators
        with pytest.raises(ValueError):
            apply_affine_permutation(Codeword((1,), (1,)), loc.field.one, loc.field.zero, loc)

    def test_is_position_bijection(self, h524):
        loc = h524.locators
        f = loc.field
        a, b = f.elem(7), f.elem(19)
        images = {loc.position_of(a + b * loc.locator(j)) for j in range(1, 26)}
        assert images == set(range(1, 26))

    def test_preserves_membership_random(self, h524):
        loc = h524.locators
        f = loc.field
        pool = enumerate_weight_words(h524, 3)
        rng = random.Random(21)
        for _ in range(100):
            word = pool[rng.randrange(len(pool))]
            a = f.elem(rng.randrange(25))
            b = f.elem(rng.randrange(1, 25))
            moved = apply_affine_permutation(word, a, b, loc)
            assert not syndrome(h524, moved).any()


class TestFiles:
    def test_matrix_roundtrip(self, ha535, tmp_path):
        path = tmp_path / "m.txt"
        write_matrix_file(ha535, path)
        back = read_matrix_file(path)
        assert back.q == ha535.q
        assert back.blocks == ha535.blocks
        assert (back.rows == ha535.rows).all()
        assert back.to_text() == ha535.to_text()

    def test_matrix_text_format(self, h524):
        first = h524.to_text().splitlines()[0]
        assert first == "q=5 n=25 r=3 blocks=ones:1,pow1:2"

    def test_codeword_roundtrip(self, tmp_path):
        path = tmp_path / "w.txt"
        word = Codeword((2, 9, 25), (1, 4, 2))
        write_codeword_file(word, 25, path)
        back, n = read_codeword_file(path)
        assert back == word and n == 25

    def test_field_description(self):
        assert make_field(5, 2).describe() == "p=5 deg=2 modulus=2,1,1"
