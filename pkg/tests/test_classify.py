import json

import pytest
from hypothesis import given, strategies as st

from trapezoid.classify import (
    BalanceViolation,
    Closedness,
    classify,
    closedness,
    find_balance_violation,
    is_balanced,
    is_central,
    is_periodic_like,
    is_rich,
    is_standard,
    is_sturmian,
    is_trapezoidal,
    palindromic_factors,
    prop4_conditions,
    trapezoidal_routes,
)
from trapezoid.errors import AlphabetError, UndefinedClassificationError
from trapezoid.words import reverse

from oracles import (
    binary_words,
    factors_of_length,
    naive_balanced,
    naive_closed,
    naive_palindromes,
    naive_trapezoidal,
)


@pytest.mark.parametrize("w,expected", [
    ("aaabab", False),
    ("aaababa", False),
    ("aaaaaaa", True),
    ("aababaa", True),
    ("", True),
])
def test_is_balanced(w, expected):
    assert is_balanced(w) is expected
    assert is_sturmian(w) is expected


def test_balance_witness_paper_example():
    v = find_balance_violation("aaabab")
    assert v == BalanceViolation("aaa", "bab", "a", 3)


def test_balance_rejects_three_letters():
    with pytest.raises(AlphabetError):
        is_balanced("abc")


@pytest.mark.parametrize("n", range(1, 10))
def test_balance_matches_naive_oracle(n):
    for w in binary_words(n):
        assert is_balanced(w) == naive_balanced(w), w


@given(st.text(alphabet="ab", min_size=1, max_size=16))
def test_witness_is_minimal_violation(w):
    v = find_balance_violation(w)
    if v is None:
        return
    f, g = v.factor_f, v.factor_g
    assert len(f) == len(g) == v.common_length
    assert f in w and g in w
    assert f.count(v.letter) - g.count(v.letter) >= 2
    for n in range(1, v.common_length):
        weights = {u.count("a") for u in factors_of_length(w, n)}
        assert max(weights) - min(weights) <= 1


@pytest.mark.parametrize("w,expected", [
    ("aaababa", True),
    ("aabbaa", False),
    ("ab", True),
    ("aaaa", False),
    ("", False),
])
def test_is_trapezoidal(w, expected):
    assert is_trapezoidal(w) is expected


def test_routes_by_hand_on_ab():
    assert trapezoidal_routes("ab") == {"shape": True, "parameters": True, "counting": True}


@pytest.mark.parametrize("n", range(2, 12))
def test_routes_and_conditions_agree(n):
    for w in binary_words(n):
        if len(set(w)) < 2:
            continue
        verdicts = {*trapezoidal_routes(w).values(), *prop4_conditions(w).values()}
        assert verdicts == {naive_trapezoidal(w)}, w


@pytest.mark.parametrize("w,count", [
    ("aabbaa", 7),
    ("", 1),
])
def test_palindromic_factors(w, count):
    assert len(palindromic_factors(w)) == count
    assert is_rich(w)


def test_palindromic_factors_aabbaa():
    assert palindromic_factors("aabbaa") == {"", "a", "b", "aa", "bb", "abba", "aabbaa"}


@given(st.text(alphabet="ab", max_size=14))
def test_palindromic_factors_match_oracle(w):
    assert palindromic_factors(w) == naive_palindromes(w)


def test_aaababa_is_rich():
    assert is_rich("aaababa")


@pytest.mark.parametrize("w,state", [
    ("aabbaa", Closedness.CLOSED),
    ("aabbaaa", Closedness.OPEN),
    ("aabaa", Closedness.CLOSED),
    ("aaabaa", Closedness.OPEN),
    ("a", Closedness.CLOSED),
    ("aaa", Closedness.CLOSED),
    ("ab", Closedness.OPEN),
])
def test_closedness(w, state):
    assert closedness(w) is state


def test_closedness_of_empty_word_is_undefined():
    with pytest.raises(UndefinedClassificationError):
        closedness("")


@pytest.mark.parametrize("n", range(1, 11))
def test_closed_iff_periodic_like_and_oracle(n):
    for w in binary_words(n):
        closed = closedness(w) is Closedness.CLOSED
        assert closed == naive_closed(w) == is_periodic_like(w), w


@pytest.mark.parametrize("u,expected", [
    ("aba", True),
    ("ab", False),
    ("", True),
    ("aa", True),
    ("aabaa", True),
    ("abba", False),
])
def test_is_central(u, expected):
    assert is_central(u) is expected


def test_is_central_fills_in_missing_letter():
    assert is_central("xx", alphabet="xy")
    assert is_central("0", alphabet="01")


@pytest.mark.parametrize("u,expected", [
    ("a", True),
    ("abaab", True),
    ("ab", True),
    ("aa", False),
    ("", False),
    ("abbab", False),
])
def test_is_standard(u, expected):
    assert is_standard(u) is expected


def test_abaab_standard_via_central_prefix():
    assert is_central("aba")
    assert is_standard("aba" + "a" + "b")


def test_classify_aaababa():
    c = classify("aaababa")
    assert c.trapezoidal and not c.sturmian and c.rich and c.primitive
    assert c.closedness is Closedness.OPEN


def test_classify_aaabaa():
    c = classify("aaabaa")
    assert c.sturmian and c.closedness is Closedness.OPEN


def test_classify_aabaab():
    c = classify("aabaab")
    assert c.trapezoidal and not c.primitive
    assert c.closedness is Closedness.CLOSED


def test_classify_unary_conventions():
    c = classify("aaaa")
    assert c.sturmian and not c.trapezoidal and not c.is_binary
    assert c.closedness is Closedness.CLOSED and c.parameters is None


def test_classify_empty_raises():
    with pytest.raises(UndefinedClassificationError):
        classify("")


def test_classification_json_field_names():
    d = json.loads(json.dumps(classify("aababaa").to_dict()))
    assert list(d) == [
        "word", "is_binary", "balanced", "sturmian", "trapezoidal", "rich",
        "closedness", "primitive", "palindrome", "central", "standard", "parameters",
    ]
    assert d["closedness"] == "closed"
    assert d["parameters"]["R"] == 4


@pytest.mark.parametrize("n", range(1, 11))
def test_classify_lattice_holds_exhaustively(n):
    # classify raises InvariantError itself if any implication fails
    for w in binary_words(n):
        c = classify(w)
        if c.trapezoidal:
            assert closedness(reverse(w)) is c.closedness
