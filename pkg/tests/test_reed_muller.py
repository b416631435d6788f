import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rmstuck import (
    InfeasibleLabelError,
    ParameterError,
    anf_degree,
    build_mask_set,
    choose_information_set,
    generator_matrix,
    is_codeword,
    rank,
    rm_decode,
    rm_decode_words,
    rm_params,
    systematic_encode,
    word_from_bits,
)

from oracles import all_words, anf_degree_by_rowspan, codebook, nearest_codewords

# generator of the length-8 first-order code as displayed in standard references
# (affine form: all-one row plus half-space indicators; same rowspace as ours)
AFFINE_G13 = np.array(
    [
        [1, 1, 1, 1, 1, 1, 1, 1],
        [1, 0, 1, 0, 1, 0, 1, 0],
        [1, 1, 0, 0, 1, 1, 0, 0],
        [1, 1, 1, 1, 0, 0, 0, 0],
    ],
    dtype=np.uint8,
)


def test_rm_params_known_codes():
    spc = rm_params(2, 3)
    assert (spc.n, spc.k, spc.d, spc.t) == (8, 7, 2, 0)
    assert rm_params(1, 3).k == 4
    assert rm_params(2, 6).t == 7
    assert rm_params(3, 9).t == 31
    with pytest.raises(ParameterError):
        rm_params(4, 3)


def test_generator_order_zero_is_repetition():
    for m in (1, 3, 5):
        gen = generator_matrix(0, m)
        assert gen.shape == (1, 1 << m)
        assert gen.all()


def test_generator_first_order_length8():
    gen = generator_matrix(1, 3)
    assert gen.shape == (4, 8)
    # same rowspace as the affine presentation
    assert rank(gen) == 4
    assert rank(np.vstack([gen, AFFINE_G13])) == 4


def test_generator_rowspace_equals_halved_block_construction():
    # stacking [G(r,m-1) | G(r,m-1)] over [0 | G(r-1,m-1)] spans the same code
    for r, m in [(1, 3), (2, 4), (2, 5)]:
        gen = generator_matrix(r, m)
        top = np.hstack([generator_matrix(r, m - 1)] * 2)
        low = generator_matrix(r - 1, m - 1)
        bottom = np.hstack([np.zeros_like(low), low])
        stacked = np.vstack([top, bottom])
        k = rm_params(r, m).k
        assert rank(gen) == k
        assert rank(np.vstack([gen, stacked])) == k


def test_generator_rows_have_exact_monomial_degree():
    for r, m in [(2, 3), (3, 4)]:
        gen = generator_matrix(r, m)
        degrees = sorted(anf_degree(row) for row in gen)
        expected = sorted(
            len(s) for d in range(r + 1) for s in itertools.combinations(range(m), d)
        )
        assert degrees == expected


def test_anf_degree_examples():
    assert anf_degree(word_from_bits("11111111")) == 0
    assert anf_degree(word_from_bits("01010101")) == 1
    assert anf_degree(np.zeros(8, dtype=np.uint8)) == -1
    for row in build_mask_set(3, 3).masks:
        assert anf_degree(row) <= 2


@given(st.integers(2, 4), st.data())
@settings(max_examples=100, deadline=None)
def test_anf_degree_matches_rowspan_oracle(m, data):
    n = 1 << m
    bits = data.draw(st.lists(st.integers(0, 1), min_size=n, max_size=n))
    word = word_from_bits(bits)
    assert anf_degree(word) == anf_degree_by_rowspan(word)


@given(st.integers(2, 4), st.data())
@settings(max_examples=100, deadline=None)
def test_anf_degree_subadditive_under_xor(m, data):
    n = 1 << m
    a = word_from_bits(data.draw(st.lists(st.integers(0, 1), min_size=n, max_size=n)))
    b = word_from_bits(data.draw(st.lists(st.integers(0, 1), min_size=n, max_size=n)))
    assert anf_degree(a ^ b) <= max(anf_degree(a), anf_degree(b))


def test_is_codeword():
    assert is_codeword(word_from_bits("01101100"), rm_params(2, 3))
    assert is_codeword(np.ones(16, dtype=np.uint8), rm_params(0, 4))
    weight_one = np.zeros(8, dtype=np.uint8)
    weight_one[3] = 1
    assert not is_codeword(weight_one, rm_params(1, 3))  # min distance 4
    with pytest.raises(ParameterError):
        is_codeword(np.zeros(4, dtype=np.uint8), rm_params(1, 3))


def test_codeword_nesting():
    rng = np.random.default_rng(7)
    for r, m in [(1, 4), (2, 5)]:
        gen = generator_matrix(r - 1, m)
        for _ in range(20):
            msg = rng.integers(0, 2, gen.shape[0], dtype=np.uint8)
            word = (msg.astype(np.int64) @ gen & 1).astype(np.uint8)
            assert is_codeword(word, rm_params(r, m))


def test_rank():
    assert rank(np.eye(3, dtype=np.uint8)) == 3
    assert rank(generator_matrix(1, 3)) == 4
    dup = np.array([[1, 0, 1], [1, 0, 1], [0, 1, 1]], dtype=np.uint8)
    assert rank(dup) == 2
    for r, m in [(1, 3), (2, 4), (3, 5)]:
        assert rank(generator_matrix(r, m)) == rm_params(r, m).k


def test_information_set_with_requirement():
    code = rm_params(2, 3)
    info = choose_information_set(code, (0, 3, 5))
    assert len(info) == 7
    assert {0, 3, 5} <= set(info)
    cols = generator_matrix(2, 3)[:, info]
    assert rank(cols.T) == 7


def test_information_set_default_is_first_independent_columns():
    assert choose_information_set(rm_params(1, 3)) == (0, 1, 2, 4)


def test_information_set_small_requirements_always_succeed():
    rng = np.random.default_rng(11)
    for r, m in [(1, 4), (2, 4)]:
        code = rm_params(r, m)
        limit = (1 << (r + 1)) - 1  # below the dual distance
        for _ in range(25):
            size = int(rng.integers(1, limit + 1))
            req = rng.choice(code.n, size=size, replace=False)
            info = choose_information_set(code, map(int, req))
            assert set(map(int, req)) <= set(info)


def test_information_set_dependent_columns_rejected():
    # columns 0,1,2,3 of the first-order length-8 generator are dependent
    with pytest.raises(InfeasibleLabelError):
        choose_information_set(rm_params(1, 3), (0, 1, 2, 3))


def test_systematic_encode_worked_vector():
    code = rm_params(2, 3)
    out = systematic_encode(word_from_bits("0110001"), code, range(7))
    assert np.array_equal(out, word_from_bits("01100011"))


def test_systematic_encode_zero_and_restriction():
    code = rm_params(2, 4)
    info = choose_information_set(code)
    assert not systematic_encode(np.zeros(code.k, np.uint8), code, info).any()
    rng = np.random.default_rng(3)
    for _ in range(20):
        msg = rng.integers(0, 2, code.k, dtype=np.uint8)
        word = systematic_encode(msg, code, info)
        assert np.array_equal(word[list(info)], msg)
        assert is_codeword(word, code)


def test_decode_identity_on_codewords():
    for r, m in [(1, 3), (2, 4), (2, 3)]:
        code = rm_params(r, m)
        book = codebook(r, m)
        words, ok = rm_decode_words(book, code)
        assert ok.all()
        assert np.array_equal(words, book)


def test_decode_corrects_single_flip():
    code = rm_params(1, 3)
    gen = generator_matrix(1, 3)
    word = (np.array([1, 0, 1, 1], np.int64) @ gen & 1).astype(np.uint8)
    for pos in range(8):
        noisy = word.copy()
        noisy[pos] ^= 1
        out, ok = rm_decode(noisy, code)
        assert ok and np.array_equal(out, word)


def test_detection_only_code_flags_errors():
    code = rm_params(2, 3)  # distance 2: detection only
    word = word_from_bits("01101100")
    noisy = word.copy()
    noisy[0] ^= 1
    _, ok = rm_decode(noisy, code)
    assert not ok


def test_decode_agrees_with_nearest_codeword_oracle():
    # exhaustive over every input word for the smallest code
    code = rm_params(1, 3)
    book = codebook(1, 3)
    words = all_words(8)
    decoded, ok = rm_decode_words(words, code)
    dist, idx = nearest_codewords(words, book)
    within = dist <= code.t
    assert ok[within].all()
    assert np.array_equal(decoded[within], book[idx[within]])


def test_decode_oracle_sampled_length32():
    # randomized spot-check on the largest code the nearest-codeword oracle can afford
    code = rm_params(2, 5)
    book = codebook(2, 5)
    rng = np.random.default_rng(13)
    base = book[rng.integers(0, len(book), 300)]
    words = base.copy()
    for row in words:
        flips = rng.choice(code.n, size=int(rng.integers(0, code.t + 1)), replace=False)
        row[flips] ^= 1
    decoded, ok = rm_decode_words(words, code)
    dist, idx = nearest_codewords(words, book)
    within = dist <= code.t
    assert within.all()
    assert ok.all()
    assert np.array_equal(decoded, book[idx])


def test_rate_one_code_decodes_to_itself():
    code = rm_params(3, 3)
    word = word_from_bits("10110010")
    out, ok = rm_decode(word, code)
    assert ok and np.array_equal(out, word)
