import random

import pytest
from hypothesis import given, settings, strategies as st

from ans import Dfa, FiniteLanguageError, NotInLanguageError, NumerationSystem, OrderedAlphabet
from conftest import (
    AB,
    ab_star_dfa,
    binary_like_dfa,
    brute_words,
    fibonacci_dfa,
    remark_morphism,
    squares_dfa,
)
from ans import system_from_morphism


def all_systems():
    systems = [
        NumerationSystem(ab_star_dfa()),
        NumerationSystem(binary_like_dfa()),
        NumerationSystem(fibonacci_dfa()),
        system_from_morphism(remark_morphism(), 0)[0],
        NumerationSystem(squares_dfa()),
    ]
    return systems


def test_first_ten_words(ab_system):
    words = [ab_system.rep(n) for n in range(10)]
    assert words == [
        (),
        ("a",),
        ("b",),
        ("a", "a"),
        ("a", "b"),
        ("b", "b"),
        ("a", "a", "a"),
        ("a", "a", "b"),
        ("a", "b", "b"),
        ("b", "b", "b"),
    ]


def test_count_words_linear(ab_system):
    for n in range(101):
        assert ab_system.count_words(n) == n + 1


def test_enumeration_matches_brute_force():
    for system in all_systems():
        brute = brute_words(system.language, 7)
        gen = [system.rep(n) for n in range(len(brute))]
        assert gen == brute


def test_rank_unrank_roundtrip():
    for system in all_systems():
        for n in range(2_000):
            assert system.val(system.rep(n)) == n


def test_unrank_rank_roundtrip_on_random_words():
    rng = random.Random(11)
    for system in all_systems():
        ranks = [rng.randrange(100_000) for _ in range(100)]
        for n in ranks:
            w = system.rep(n)
            assert system.language.accepts(w)
            assert system.val(w) == n


def test_binary_like_values():
    system = NumerationSystem(binary_like_dfa())
    assert system.rep(0) == ()
    assert system.val(("1", "0", "1")) == 5
    assert system.count_words(6) == 32
    # rep(n) is the usual binary expansion with rep(0) the empty word
    for n in range(1, 200):
        assert "".join(system.rep(n)) == bin(n)[2:]


def test_fibonacci_values():
    system = NumerationSystem(fibonacci_dfa())
    assert system.rep(4) == ("1", "0", "1")
    # counts by length follow the Fibonacci recurrence
    counts = [system.count_words(n) for n in range(1, 15)]
    for i in range(2, len(counts)):
        assert counts[i] == counts[i - 1] + counts[i - 2]


def test_squares_system_values():
    system = NumerationSystem(squares_dfa())
    for m in range(60):
        assert system.val(("a",) * m) == m * m
        assert system.rep(m * m) == ("a",) * m


def test_val_rejects_bad_words(ab_system):
    with pytest.raises(NotInLanguageError, match="position 2"):
        ab_system.val(("b", "a"))
    with pytest.raises(NotInLanguageError):
        ab_system.val(("a", "c"))


def test_val_rejects_prefix_only():
    system = NumerationSystem(
        Dfa(AB, ("p", "q"), "p", frozenset({"q"}), {("p", "a"): "p", ("p", "b"): "q"})
    )
    with pytest.raises(NotInLanguageError, match="non-final"):
        system.val(("a", "a"))


def test_finite_language_rejected():
    finite = Dfa(AB, ("p", "q"), "p", frozenset({"q"}), {("p", "a"): "q"})
    with pytest.raises(FiniteLanguageError):
        NumerationSystem(finite)


def test_enumerate_with_start_rank(ab_system):
    from itertools import islice

    words = list(islice(ab_system.enumerate(5), 4))
    assert words == [ab_system.rep(n) for n in range(5, 9)]


def test_words_from_inner_state(ab_system):
    from itertools import islice

    # continuations from the b-only state
    words = list(islice(ab_system.words_from("q"), 4))
    assert words == [(), ("b",), ("b", "b"), ("b", "b", "b")]


def test_words_from_handles_finite_continuations():
    # from state y of the squares language only a* remains — still infinite;
    # build a language with a genuinely finite continuation set instead
    sig = OrderedAlphabet(("a", "b"))
    d = Dfa(
        sig,
        ("s", "t"),
        "s",
        frozenset({"s", "t"}),
        {("s", "a"): "s", ("s", "b"): "t"},
    )
    system = NumerationSystem(d)
    assert list(system.words_from("t")) == [()]


@settings(max_examples=60)
@given(st.integers(min_value=0, max_value=10**30))
def test_roundtrip_at_arbitrary_magnitude(n):
    system = NumerationSystem(binary_like_dfa())
    assert system.val(system.rep(n)) == n
