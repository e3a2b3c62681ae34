"""Membership, enumeration, parameter selection, and redundancy."""

import math
from itertools import product

import pytest

from ordel.core import CodeParams, Word, parse_word
from ordel.vt_code import (
    best_params,
    class_sizes,
    enumerate_codebook,
    is_member,
    redundancy,
    render_codebook,
)


def brute_members(n: int, a1: int, a2: int) -> list[str]:
    """Independent oracle: filter all 2^n words with plain sums."""
    out = []
    for bits in product((0, 1), repeat=n):
        if sum(bits) % 3 != a1:
            continue
        if sum(i * b for i, b in enumerate(bits, start=1)) % (n + 1) != a2:
            continue
        out.append("".join(map(str, bits)))
    return out


class TestIsMember:
    def test_examples(self):
        assert is_member(parse_word("000"), CodeParams(3, 0, 0))
        # bit sum of 111 is 0 mod 3 but the weighted sum is 6 = 2 mod 4
        assert not is_member(parse_word("111"), CodeParams(3, 0, 0))
        # 1001: bit sum 2, weighted sum 5 = 0 mod 5
        assert is_member(parse_word("1001"), CodeParams(4, 2, 0))

    def test_rejects_length_mismatch(self):
        with pytest.raises(ValueError):
            is_member(parse_word("000"), CodeParams(4, 0, 0))

    @pytest.mark.parametrize("n", range(3, 9))
    def test_agrees_with_plain_sums(self, n):
        params = CodeParams(n, 1, 2)
        expected = set(brute_members(n, 1, 2))
        for bits in product((0, 1), repeat=n):
            w = Word(bits)
            assert is_member(w, params) == (w.render() in expected)


class TestEnumerate:
    def test_singleton_class(self):
        cb = enumerate_codebook(CodeParams(3, 0, 0))
        assert [w.render() for w in cb.words] == ["000"]

    def test_small_class_matches_oracle(self):
        cb = enumerate_codebook(CodeParams(3, 1, 1))
        assert [w.render() for w in cb.words] == brute_members(3, 1, 1) == ["100"]

    @pytest.mark.parametrize("n", range(3, 11))
    def test_matches_brute_force(self, n):
        for a1, a2 in [(0, 0), (1, n // 2), (2, n)]:
            cb = enumerate_codebook(CodeParams(n, a1, a2))
            assert [w.render() for w in cb.words] == brute_members(n, a1, a2)

    def test_words_sorted_and_members(self):
        cb = enumerate_codebook(CodeParams(8, 0, 0))
        rendered = [w.render() for w in cb.words]
        assert rendered == sorted(rendered)
        assert all(is_member(w, cb.params) for w in cb.words)

    @pytest.mark.parametrize("n", range(3, 9))
    def test_classes_partition_all_words(self, n):
        seen: dict[str, tuple[int, int]] = {}
        total = 0
        for a1 in range(3):
            for a2 in range(n + 1):
                for w in enumerate_codebook(CodeParams(n, a1, a2)).words:
                    text = w.render()
                    assert text not in seen, (text, seen[text], (a1, a2))
                    seen[text] = (a1, a2)
                    total += 1
        assert total == 2**n

    def test_class_sizes_agree_with_enumeration(self):
        n = 9
        sizes = class_sizes(n)
        for a1 in range(3):
            for a2 in range(n + 1):
                assert sizes[a1, a2] == len(enumerate_codebook(CodeParams(n, a1, a2)).words)

    def test_cap_refusal_and_override(self):
        with pytest.raises(ValueError, match="cap"):
            enumerate_codebook(CodeParams(6, 0, 0), cap=5)
        assert len(enumerate_codebook(CodeParams(6, 0, 0), cap=6).words) > 0
        with pytest.raises(ValueError, match="cap"):
            class_sizes(29)


class TestBestParams:
    def test_smallest_n(self):
        params = best_params(3)
        # eight singleton classes at n = 3; lexicographic tie-break picks (0, 0)
        assert (params.a1, params.a2) == (0, 0)
        assert len(enumerate_codebook(params).words) >= math.ceil(8 / 12)

    def test_n8_size(self):
        params = best_params(8)
        size = len(enumerate_codebook(params).words)
        # 2^8 / 27 = 9.48..., so the best class holds at least 10 words;
        # brute force says the maximum is 11, tied at (0,0) and (2,0)
        assert size == 11
        assert (params.a1, params.a2) == (0, 0)

    def test_deterministic(self):
        assert best_params(10) == best_params(10)

    @pytest.mark.parametrize("n", range(3, 15))
    def test_pigeonhole(self, n):
        size = len(enumerate_codebook(best_params(n)).words)
        assert size * 3 * (n + 1) >= 2**n


class TestRedundancy:
    def test_small_sizes(self):
        p = CodeParams(3, 0, 0)
        one = enumerate_codebook(p)
        assert redundancy(one) == 3.0
        two = type(one)(p, (parse_word("000"), parse_word("100")))
        assert redundancy(two) == 2.0

    def test_empty_codebook_rejected(self):
        cb = enumerate_codebook(CodeParams(3, 0, 1))
        assert len(cb.words) == 0
        with pytest.raises(ValueError):
            redundancy(cb)

    @pytest.mark.parametrize("n", range(3, 15))
    def test_upper_bound_holds_constructively(self, n):
        assert redundancy(enumerate_codebook(best_params(n))) <= math.log2(3 * (n + 1))


def test_render_codebook_format():
    text = render_codebook(enumerate_codebook(CodeParams(4, 2, 0)))
    assert text == "n=4 a1=2 a2=0\n0110\n1001"
