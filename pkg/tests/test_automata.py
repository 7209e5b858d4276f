import random

import pytest
from hypothesis import given, strategies as st

from ans import (
    BOTTOM,
    Dfa,
    Dfao,
    OrderedAlphabet,
    difference,
    distinguishing_word,
    equivalent,
    intersect,
    is_empty,
    is_infinite,
    minimize,
    product,
    reduce_dfao,
    union,
)
from conftest import AB, ab_star_dfa, binary_like_dfa, brute_words, teaching_dfao


def ab_bplus_dfa():
    """a's followed by at least one b."""
    return Dfa(
        AB,
        ("p", "q"),
        "p",
        frozenset({"q"}),
        {("p", "a"): "p", ("p", "b"): "q", ("q", "b"): "q"},
    )


def ab_evenb_dfa():
    """a's followed by an even number of b's."""
    return Dfa(
        AB,
        ("p", "e", "o"),
        "p",
        frozenset({"p", "e"}),
        {
            ("p", "a"): "p",
            ("p", "b"): "o",
            ("o", "b"): "e",
            ("e", "b"): "o",
        },
    )


def test_ordered_alphabet():
    assert AB.index("a") == 0 and AB.index("b") == 1
    assert "a" in AB and "c" not in AB
    assert AB.word_key(("b", "a")) == (2, (1, 0))
    assert AB.word_key(("b",)) < AB.word_key(("a", "a"))  # shortlex: length first
    with pytest.raises(ValueError):
        OrderedAlphabet(("a", "a"))


def test_accepts_and_run():
    d = ab_star_dfa()
    assert d.accepts(())
    assert d.accepts(("a", "b", "b"))
    assert not d.accepts(("b", "a"))
    assert d.run(("b", "a")) is None


def test_completed_adds_single_sink():
    d = ab_star_dfa().completed()
    assert d.is_complete()
    assert d.run(("b", "a")) is not None
    assert not d.accepts(("b", "a"))
    assert d.completed() is d


def test_trimmed_keeps_start():
    empty = Dfa(AB, ("p",), "p", frozenset(), {})
    t = empty.trimmed()
    assert t.start == "p" and t.states == ("p",)


def test_minimize_collapses_redundant_states():
    # five states recognizing a*b* with duplicated live states
    d = Dfa(
        AB,
        ("s", "a1", "a2", "b1", "b2"),
        "s",
        frozenset({"s", "a1", "a2", "b1", "b2"}),
        {
            ("s", "a"): "a1",
            ("s", "b"): "b1",
            ("a1", "a"): "a2",
            ("a2", "a"): "a1",
            ("a1", "b"): "b2",
            ("a2", "b"): "b1",
            ("b1", "b"): "b2",
            ("b2", "b"): "b1",
        },
    )
    m = minimize(d)
    assert len(m.states) == 2
    assert equivalent(m, ab_star_dfa())


def test_minimize_is_canonical():
    a = minimize(ab_star_dfa())
    b = minimize(ab_star_dfa().completed().renumbered("z"))
    assert a == b
    assert minimize(a) == a


@given(st.lists(st.sampled_from(["a", "b"]), max_size=12))
def test_minimize_preserves_acceptance(word):
    for d in (ab_star_dfa(), ab_bplus_dfa(), ab_evenb_dfa()):
        assert minimize(d).accepts(word) == d.accepts(word)


def test_boolean_operations_against_brute_force():
    x, y = ab_star_dfa(), ab_evenb_dfa()
    wx = set(brute_words(x, 8))
    wy = set(brute_words(y, 8))
    assert set(brute_words(intersect(x, y), 8)) == wx & wy
    assert set(brute_words(union(x, y), 8)) == wx | wy
    assert set(brute_words(difference(x, y), 8)) == wx - wy


def test_emptiness_and_infiniteness():
    assert is_empty(difference(ab_bplus_dfa(), ab_star_dfa()))
    assert not is_empty(ab_star_dfa())
    assert is_infinite(ab_star_dfa())
    single = Dfa(AB, ("p", "q"), "p", frozenset({"q"}), {("p", "a"): "q"})
    assert not is_infinite(single)


def test_equivalence_and_witnesses():
    assert equivalent(ab_star_dfa(), minimize(ab_star_dfa()))
    # the empty word separates a*b* from a*b+
    assert distinguishing_word(ab_star_dfa(), ab_bplus_dfa()) == ()
    # an odd number of b's separates a*b* from a*(bb)*
    assert distinguishing_word(ab_star_dfa(), ab_evenb_dfa()) == ("b",)
    assert distinguishing_word(ab_star_dfa(), ab_star_dfa()) is None


def test_dfao_transform_and_acceptor():
    m = teaching_dfao()
    assert m.transform(()) == "0"
    assert m.transform(("a",)) == "1"
    assert m.transform(("a", "b", "b")) == "2"
    acc = m.as_acceptor({"0"})
    assert acc.accepts(("a", "a", "a", "a"))
    assert not acc.accepts(("a",))


def test_dfao_completed_outputs_bottom():
    sig = OrderedAlphabet(("a",))
    m = Dfao(sig, ("x",), "x", {}, {"x": "1"}, ("1",))
    c = m.completed()
    assert c.is_complete()
    assert c.transform(("a", "a")) == BOTTOM


def test_reduce_dfao_collapses_equal_behavior():
    sig = OrderedAlphabet(("a",))
    m = Dfao(
        sig,
        ("x", "y", "z"),
        "x",
        {("x", "a"): "y", ("y", "a"): "z", ("z", "a"): "y"},
        {"x": "0", "y": "0", "z": "0"},
        ("0",),
    )
    r = reduce_dfao(m)
    assert len(r.states) == 1
    assert r.transform(("a",) * 5) == "0"


def test_reduce_dfao_preserves_all_outputs():
    m = teaching_dfao()
    r = reduce_dfao(m)
    assert len(r.states) == 12  # the 12 mod-classes are pairwise distinguishable
    for w in brute_words(ab_star_dfa(), 9):
        assert r.transform(w) == m.transform(w)


def test_reduce_dfao_is_canonical():
    m = teaching_dfao()
    assert reduce_dfao(reduce_dfao(m)) == reduce_dfao(m)


def test_product_pairs_and_runs():
    pm = product(ab_star_dfa(), teaching_dfao())
    assert len(pm.dfao.states) == 28  # not all 3*12 completed pairs are reachable
    rng = random.Random(7)
    lang = ab_star_dfa()
    mach = teaching_dfao().completed()
    for _ in range(300):
        w = tuple(rng.choice(("a", "b")) for _ in range(rng.randrange(12)))
        q = pm.dfao.run(w)
        assert (q in pm.finals) == lang.accepts(w)
        assert pm.dfao.output[q] == mach.transform(w)


def test_product_rejects_mismatched_alphabets():
    bad = Dfao(OrderedAlphabet(("x",)), ("q",), "q", {("q", "x"): "q"}, {"q": "0"}, ("0",))
    with pytest.raises(Exception):
        product(ab_star_dfa(), bad)


def test_product_is_complete():
    pm = product(binary_like_dfa(), Dfao(
        OrderedAlphabet(("0", "1")),
        ("e", "o"),
        "e",
        {("e", "0"): "e", ("e", "1"): "o", ("o", "0"): "o", ("o", "1"): "e"},
        {"e": "0", "o": "1"},
        ("0", "1"),
    ))
    assert pm.dfao.is_complete()
