import pytest

from ans import (
    BOTTOM,
    FormatError,
    OrderedAlphabet,
    canonical_substitution,
    equivalent,
    format_dfa,
    format_dfao,
    format_morphism,
    format_substitution,
    parse_dfa,
    parse_dfao,
    parse_morphism,
    parse_substitution,
    parse_word,
    render_word,
)
from conftest import AB, ab_star_dfa, teaching_dfao, witness_morphism

AB_TEXT = """\
# a's followed by b's
alphabet: a b
states: p q
start: p
final: p q
trans: p a p
trans: p b q
trans: q b q
"""


def test_parse_dfa_basic():
    d = parse_dfa(AB_TEXT, "ab.dfa")
    assert d == ab_star_dfa()


def test_dfa_roundtrip():
    d = ab_star_dfa()
    assert parse_dfa(format_dfa(d)) == d


def test_dfao_roundtrip_renames_tuple_states():
    m = teaching_dfao()
    text = format_dfao(m)
    # tuple states cannot be written literally, so the file uses generated names
    assert "q0" in text
    m2 = parse_dfao(text)
    for w in [(), ("a",), ("b", "b"), ("a", "b", "a", "b", "a")]:
        assert m2.transform(w) == m.transform(w)


def test_format_parse_preserves_language():
    d = ab_star_dfa()
    assert equivalent(parse_dfa(format_dfa(d)), d)


def test_empty_final_line_means_no_finals():
    text = "alphabet: a\nstates: p\nstart: p\nfinal:\ntrans: p a p\n"
    d = parse_dfa(text)
    assert d.finals == frozenset()


def test_error_messages_carry_path_and_line():
    bad = "alphabet: a b\nstates: p\nstart: p\nfinal: p\ntrans: p c p\n"
    with pytest.raises(FormatError) as exc:
        parse_dfa(bad, "m.dfa")
    assert str(exc.value).startswith("m.dfa:5: ")
    assert exc.value.line == 5


def test_duplicate_transition_rejected():
    text = AB_TEXT + "trans: p a q\n"
    with pytest.raises(FormatError, match="duplicate transition"):
        parse_dfa(text, "dup.dfa")


def test_reserved_names_rejected():
    with pytest.raises(FormatError, match="reserved"):
        parse_dfa("alphabet: a\nstates: @dead p\nstart: p\nfinal: p\ntrans: p a p\n")
    with pytest.raises(FormatError, match="reserved"):
        parse_dfa("alphabet: @eps\nstates: p\nstart: p\nfinal: p\n")
    with pytest.raises(FormatError, match="reserved"):
        parse_dfa(f"alphabet: a\nstates: {BOTTOM}\nstart: {BOTTOM}\nfinal:\n")


def test_bottom_allowed_as_declared_output():
    text = (
        "alphabet: a\nstates: p q\nstart: p\n"
        f"output: p 1\noutput: q {BOTTOM}\n"
        "trans: p a q\ntrans: q a q\n"
    )
    m = parse_dfao(text)
    assert m.transform(("a",)) == BOTTOM


def test_dfao_requires_all_outputs():
    text = "alphabet: a\nstates: p q\nstart: p\noutput: p 1\ntrans: p a q\ntrans: q a q\n"
    with pytest.raises(FormatError, match="states without output"):
        parse_dfao(text)


def test_final_line_rejected_in_dfao_and_vice_versa():
    with pytest.raises(FormatError, match="'output:'"):
        parse_dfao("alphabet: a\nstates: p\nstart: p\nfinal: p\n")
    with pytest.raises(FormatError, match="'final:'"):
        parse_dfa("alphabet: a\nstates: p\nstart: p\noutput: p 1\n")


def test_missing_directives_reported():
    with pytest.raises(FormatError, match="missing alphabet"):
        parse_dfa("states: p\nstart: p\nfinal: p\n")
    with pytest.raises(FormatError, match="missing start"):
        parse_dfa("alphabet: a\nstates: p\nfinal: p\n")


def test_output_alphabet_order_is_first_appearance():
    text = (
        "alphabet: a\nstates: p q r\nstart: p\n"
        "output: p 2\noutput: q 0\noutput: r 2\n"
        "trans: p a q\ntrans: q a r\ntrans: r a p\n"
    )
    m = parse_dfao(text)
    assert m.output_alphabet == ("2", "0")


MOR_TEXT = """\
axiom: x
x -> x y
y -> y
"""


def test_parse_morphism():
    phi, axiom = parse_morphism(MOR_TEXT, "m.mor")
    assert axiom == "x"
    assert phi.images["x"] == ("x", "y")
    assert phi.apply(("x", "y")) == ("x", "y", "y")


def test_morphism_roundtrip():
    phi = witness_morphism()
    text = format_morphism(phi, 0)
    phi2, axiom2 = parse_morphism(text)
    # integer letters get generated names; iterates must line up under i -> s{i}
    assert axiom2 == "s0"
    w, w2 = (0,), (axiom2,)
    for _ in range(6):
        w, w2 = phi.apply(w), phi2.apply(w2)
    assert [f"s{x}" for x in w] == list(w2)


def test_morphism_rejects_unknown_image_letter():
    with pytest.raises(FormatError, match="no image line"):
        parse_morphism("axiom: x\nx -> x z\n")


def test_morphism_requires_axiom():
    with pytest.raises(FormatError, match="missing axiom"):
        parse_morphism("x -> x\n")


def test_substitution_roundtrip():
    t = canonical_substitution(ab_star_dfa(), teaching_dfao())
    t2 = parse_substitution(format_substitution(t), "t.sub")
    from itertools import islice

    assert list(islice(t.generate(), 200)) == list(islice(t2.generate(), 200))


def test_substitution_coding_lines():
    text = MOR_TEXT + "h: x -> 0\nh: y -> @eps\n"
    t = parse_substitution(text)
    assert t.coding.images["x"] == ("0",)
    assert t.coding.images["y"] == ()


def test_substitution_rejects_total_erasure():
    text = MOR_TEXT + "h: x -> @eps\nh: y -> @eps\n"
    with pytest.raises(FormatError, match="erases every letter"):
        parse_substitution(text)


def test_plain_morphism_rejects_h_lines():
    with pytest.raises(FormatError, match="cannot carry 'h:'"):
        parse_morphism(MOR_TEXT + "h: x -> 0\n")


def test_parse_word_forms():
    assert parse_word("@eps", AB) == ()
    assert parse_word("abba", AB) == ("a", "b", "b", "a")
    assert parse_word("a b b a", AB) == ("a", "b", "b", "a")
    wide = OrderedAlphabet(("aa", "b"))
    assert parse_word("aa", wide) == ("aa",)  # whole-token match beats gluing
    with pytest.raises(ValueError, match="not a symbol"):
        parse_word("ac", AB)


def test_render_word_inverse():
    for w in [(), ("a",), ("a", "b", "b"), ("a", "a", "a", "b")]:
        assert parse_word(render_word(w), AB) == w
    assert render_word(()) == "@eps"
    assert render_word(("aa", "b")) == "aa b"


def test_comments_and_blank_lines_ignored():
    noisy = "\n# header\n\n" + AB_TEXT.replace("trans: q b q", "trans: q b q  # loop")
    assert parse_dfa(noisy) == ab_star_dfa()
