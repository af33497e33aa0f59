"""Engine tests: factor hashing, preprocessing, verification, and search."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wfr import (
    ConfigurationError,
    FilterParams,
    InvalidPatternError,
    check,
    extend_hash,
    hash_factor,
    naive_search,
    preprocess,
    search,
)

SHIFT1 = FilterParams(shift_s=1)


def closed_form_hash(z, params=FilterParams()):
    """Independent oracle: arbitrary-precision positional sum, masked once."""
    total = sum(c << (params.shift_s * i) for i, c in enumerate(z))
    return total & params.hash_mask


# --- hash_factor / extend_hash ---------------------------------------------


def test_hash_empty_is_zero():
    assert hash_factor(b"") == 0
    assert hash_factor(b"", SHIFT1) == 0


def test_hash_single_byte():
    assert hash_factor(b"a") == 97


def test_hash_two_bytes():
    # (98 << 2) + 97
    assert hash_factor(b"ab") == 489


def test_hash_two_bytes_shift1():
    # (98 << 1) + 97
    assert hash_factor(b"ab", SHIFT1) == 293


def test_hash_long_input_masked():
    z = b"\xff" * 9
    assert closed_form_hash(z) == 65451
    assert hash_factor(z) == 65451


@settings(max_examples=200, deadline=None)
@given(st.binary(max_size=64), st.sampled_from([1, 2]))
def test_hash_matches_closed_form(z, shift_s):
    params = FilterParams(shift_s=shift_s)
    assert hash_factor(z, params) == closed_form_hash(z, params)


def test_extend_examples():
    assert extend_hash(98, 97) == 489
    assert extend_hash(0, 0) == 0
    # ((65535 << 2) + 255) mod 65536
    assert extend_hash(65535, 255) == 251


@settings(max_examples=200, deadline=None)
@given(st.binary(max_size=64), st.integers(0, 255), st.sampled_from([1, 2]))
def test_extend_matches_prepend(z, c, shift_s):
    params = FilterParams(shift_s=shift_s)
    assert extend_hash(hash_factor(z, params), c, params) == hash_factor(bytes([c]) + z, params)


# --- preprocess --------------------------------------------------------------


def _set_values(flt):
    return {v for v in range(flt.params.table_bits) if flt.test_bit(v)}


def test_preprocess_ab_exact_bits():
    assert _set_values(preprocess(b"ab")) == {97, 98, 489}


def test_preprocess_aa_exact_bits():
    # "a" -> 97, "aa" -> (97 << 2) + 97
    assert _set_values(preprocess(b"aa")) == {97, 485}


def test_preprocess_empty_pattern_rejected():
    with pytest.raises(InvalidPatternError):
        preprocess(b"")


@settings(max_examples=60, deadline=None)
@given(st.binary(min_size=1, max_size=48), st.sampled_from([1, 2]))
def test_factor_completeness(pattern, shift_s):
    params = FilterParams(shift_s=shift_s)
    flt = preprocess(pattern, params)
    m = len(pattern)
    for i in range(m):
        for j in range(i, m):
            assert flt.test_bit(hash_factor(pattern[i : j + 1], params))


@settings(max_examples=60, deadline=None)
@given(st.binary(min_size=1, max_size=64))
def test_bit_budget(pattern):
    m = len(pattern)
    assert preprocess(pattern).popcount() <= m * (m + 1) // 2


# --- check -------------------------------------------------------------------


def test_check_examples():
    assert check(b"aab", b"aabaab", 0) is True
    assert check(b"aab", b"aabaab", 1) is False
    assert check(b"aab", b"aabaab", 3) is True


def test_check_out_of_range_rejected():
    with pytest.raises(ValueError):
        check(b"aab", b"aabaab", 4)
    with pytest.raises(ValueError):
        check(b"aab", b"aabaab", -1)


def test_check_empty_pattern_rejected():
    with pytest.raises(InvalidPatternError):
        check(b"", b"abc", 0)


# --- search ------------------------------------------------------------------


def test_search_finds_overlapping_occurrences():
    outcome = search(b"aab", b"aabaab")
    assert outcome.positions == [0, 3]
    assert outcome.verification_count == 2
    assert outcome.false_positive_count == 0


def test_search_whole_text_match():
    outcome = search(b"abc", b"abc")
    assert outcome.positions == [0]
    assert outcome.verification_count == 1


def test_search_no_match_no_verification():
    outcome = search(b"b", b"aaaa")
    assert outcome.positions == []
    assert outcome.verification_count == 0
    assert outcome.positions == naive_search(b"b", b"aaaa")


def test_search_periodic_text():
    outcome = search(b"a" * 10, b"a" * 100)
    assert len(outcome.positions) == 91
    assert outcome.verification_count == 91


def test_search_chained_matches_base():
    assert search(b"aab", b"aabaab", k=2).positions == [0, 3]


def test_search_instrumentation_aabaab():
    outcome = search(b"aab", b"aabaab")
    assert outcome.attempt_count == 3
    assert outcome.total_shift == 4
    assert outcome.check_comparisons == 6
    assert outcome.occurrence_count == 2
    assert outcome.mean_shift == pytest.approx(4 / 3)


def test_search_single_byte_pattern():
    outcome = search(b"a", b"banana")
    assert outcome.positions == [1, 3, 5]


def test_search_pattern_longer_than_text():
    outcome = search(b"abcdef", b"abc")
    assert outcome.positions == []
    assert outcome.attempt_count == 0
    assert outcome.total_shift == 0
    assert outcome.verification_count == 0


def test_search_empty_text():
    assert search(b"a", b"").positions == []


def test_search_empty_pattern_rejected():
    with pytest.raises(InvalidPatternError):
        search(b"", b"abc")


@pytest.mark.parametrize("k", [0, 5, -1])
def test_search_k_out_of_range_rejected(k):
    with pytest.raises(ConfigurationError):
        search(b"abcde", b"abcdeabcde", k=k)


def test_search_k_exceeding_m_rejected():
    with pytest.raises(ConfigurationError):
        search(b"abc", b"abcabc", k=4)


def test_search_with_prebuilt_filter():
    params = FilterParams()
    flt = preprocess(b"aab", params)
    fresh = search(b"aab", b"aabaab", params=params)
    reused = search(b"aab", b"aabaab", factors=flt)
    assert reused.positions == fresh.positions
    assert reused.verification_count == fresh.verification_count
    # one filter, many texts
    assert search(b"aab", b"xxaabxx", factors=flt).positions == [2]


def test_search_prebuilt_filter_param_conflict():
    flt = preprocess(b"aab", FilterParams(alpha=16))
    with pytest.raises(ConfigurationError):
        search(b"aab", b"aabaab", params=FilterParams(alpha=12), factors=flt)


def test_search_worst_case_counts():
    rng = random.Random(3)
    for _ in range(20):
        m = rng.randint(1, 12)
        n = rng.randint(m, 200)
        outcome = search(b"a" * m, b"a" * n)
        assert len(outcome.positions) == n - m + 1
        assert outcome.verification_count == n - m + 1
        assert outcome.check_comparisons == m * (n - m + 1)


def _random_instance(rng):
    sigma = rng.choice([2, 4, 20, 64, 256])
    m = rng.randint(1, 48)
    n = rng.randint(0, 2000)
    text = bytes(rng.choices(range(sigma), k=n))
    if n >= m and rng.random() < 0.5:
        off = rng.randint(0, n - m)
        pattern = text[off : off + m]
    else:
        pattern = bytes(rng.choices(range(sigma), k=m))
    return pattern, text


def test_oracle_equivalence_randomized():
    rng = random.Random(2024)
    for _ in range(300):
        pattern, text = _random_instance(rng)
        shift_s = rng.choice([1, 2])
        k = rng.randint(1, min(4, len(pattern)))
        params = FilterParams(shift_s=shift_s)
        outcome = search(pattern, text, params=params, k=k)
        assert outcome.positions == naive_search(pattern, text)


def test_chained_equivalence_randomized():
    rng = random.Random(99)
    for _ in range(150):
        pattern, text = _random_instance(rng)
        if len(pattern) < 4:
            pattern = pattern + bytes(4 - len(pattern))
        base = search(pattern, text)
        for k in (2, 3, 4):
            assert search(pattern, text, k=k).positions == base.positions


def test_verification_soundness_randomized():
    rng = random.Random(17)
    for _ in range(100):
        pattern, text = _random_instance(rng)
        outcome = search(pattern, text)
        assert outcome.verification_count >= outcome.occurrence_count
        assert outcome.false_positive_count >= 0
        for p in outcome.positions:
            assert check(pattern, text, p)
        assert outcome.positions == sorted(set(outcome.positions))
