import pytest
from hypothesis import given, strategies as st

from trapezoid.errors import AlphabetError, EmptyWordError
from trapezoid.words import (
    Occurrence,
    Word,
    factor_set,
    fractional_root,
    is_internal,
    is_palindrome,
    is_prefix,
    is_suffix,
    letter_count,
    longest_repeated_prefix,
    longest_repeated_suffix,
    occurrences,
    parse_word,
    period,
    prefixes,
    primitive_root,
    reverse,
    suffixes,
)

from oracles import (
    binary_words,
    factors_of_length,
    naive_is_power,
    naive_lrp,
    naive_period,
    occurrence_starts,
)

words = st.text(alphabet="ab", max_size=18)
nonempty = st.text(alphabet="ab", min_size=1, max_size=18)


def test_parse_word_paper_example():
    w = parse_word("aaababa")
    assert isinstance(w, Word)
    assert len(w) == 7
    assert set(w) == {"a", "b"}


def test_parse_word_empty():
    assert parse_word("") == ""
    assert len(parse_word("")) == 0


def test_parse_word_keeps_letters_verbatim():
    assert parse_word("0110") == "0110"
    assert parse_word("xyyx").letters == ("x", "y", "y", "x")


def test_parse_word_rejects_three_letters():
    with pytest.raises(AlphabetError):
        parse_word("abc")


def test_one_based_access():
    w = parse_word("aab")
    assert [w.at(i) for i in (1, 2, 3)] == ["a", "a", "b"]
    with pytest.raises(IndexError):
        w.at(0)
    with pytest.raises(IndexError):
        w.at(4)


@pytest.mark.parametrize("w,expected", [
    ("aabbaaa", "aaabbaa"),
    ("aababaa", "aababaa"),
    ("", ""),
])
def test_reverse(w, expected):
    assert reverse(w) == expected


@pytest.mark.parametrize("w,expected", [
    ("aababaa", True),
    ("aabbaaa", False),
    ("", True),
])
def test_is_palindrome(w, expected):
    assert is_palindrome(w) is expected


@given(words)
def test_reverse_is_involution_and_keeps_counts(w):
    assert reverse(reverse(w)) == w
    assert letter_count(reverse(w), "a") == letter_count(w, "a")


@pytest.mark.parametrize("u,w,starts", [
    ("aa", "aabbaa", [1, 5]),
    ("aa", "aabbaaa", [1, 5, 6]),
    ("", "ab", [1, 2, 3]),
])
def test_occurrences(u, w, starts):
    occ = occurrences(u, w)
    assert [o.start for o in occ] == starts
    assert all(o.end - o.start + 1 == len(u) for o in occ)


def test_empty_occurrence_convention():
    occ = occurrences("", "ab")
    assert occ == [Occurrence(1, 0), Occurrence(2, 1), Occurrence(3, 2)]
    assert occ[-1].is_suffix(2) and occ[0].is_prefix


def test_occurrence_serialization():
    assert [o.to_dict() for o in occurrences("aa", "aabbaa")] == [
        {"start": 1, "end": 2}, {"start": 5, "end": 6},
    ]


@given(st.text(alphabet="ab", max_size=4), words)
def test_occurrences_match_scan(u, w):
    occ = occurrences(u, w)
    assert [o.start for o in occ] == occurrence_starts(u, w)
    assert bool(occ) == (u in w)
    assert any(o.is_prefix for o in occ) == is_prefix(u, w) == w.startswith(u)
    assert any(o.is_suffix(len(w)) for o in occ) == is_suffix(u, w)


def test_internal_factor():
    assert is_internal("bb", "aabbaa")
    assert not is_internal("aa", "aabbaa")
    assert not is_internal("ba", "aab")


@pytest.mark.parametrize("w,n,expected", [
    ("aabbb", 2, {"aa", "ab", "bb"}),
    ("aabbb", 0, {""}),
    ("aaababa", 7, {"aaababa"}),
    ("aaababa", 8, set()),
])
def test_factor_set(w, n, expected):
    assert factor_set(w, n) == expected


@given(words, st.integers(0, 20))
def test_factor_set_matches_oracle(w, n):
    assert factor_set(w, n) == factors_of_length(w, n)


def test_prefixes_and_suffixes_include_empty():
    assert prefixes("ab") == ["", "a", "ab"]
    assert suffixes("ab") == ["", "b", "ab"]


@pytest.mark.parametrize("w,p", [
    ("aabaaba", 3),
    ("aababaa", 5),
    ("aaaaaa", 1),
    ("ab", 2),
])
def test_period(w, p):
    assert period(w) == p == naive_period(w)


@given(nonempty)
def test_period_is_smallest_period(w):
    p = period(w)
    assert all(w[i] == w[i + p] for i in range(len(w) - p))
    assert p == naive_period(w)


@pytest.mark.parametrize("w,root", [
    ("aabaaba", "aab"),
    ("ab", "ab"),
    ("aaaa", "a"),
])
def test_fractional_root(w, root):
    assert fractional_root(w) == root


@pytest.mark.parametrize("w,root,exponent", [
    ("aabaab", "aab", 2),
    ("aabaaa", "aabaaa", 1),
    ("aaaa", "a", 4),
])
def test_primitive_root(w, root, exponent):
    r = primitive_root(w)
    assert (r.root, r.exponent) == (root, exponent)
    assert r.is_primitive == (exponent == 1)


@given(st.text(alphabet="ab", min_size=1, max_size=12))
def test_primitive_root_reconstructs(w):
    r = primitive_root(w)
    assert r.root * r.exponent == w
    assert not naive_is_power(r.root)
    assert r.is_primitive == (not naive_is_power(w))


@pytest.mark.parametrize("w,lrp", [
    ("aabbaa", "aa"),
    ("aaababa", "aa"),
    ("ab", ""),
])
def test_longest_repeated_prefix(w, lrp):
    assert longest_repeated_prefix(w) == lrp


@pytest.mark.parametrize("n", range(1, 11))
def test_longest_repeated_prefix_exhaustive(n):
    for w in binary_words(n):
        assert longest_repeated_prefix(w) == naive_lrp(w)
        assert longest_repeated_suffix(w) == naive_lrp(w[::-1])[::-1]


@pytest.mark.parametrize("fn", [period, fractional_root, primitive_root, longest_repeated_prefix])
def test_empty_word_rejected(fn):
    with pytest.raises(EmptyWordError):
        fn("")
