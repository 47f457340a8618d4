import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lagconcord.braid_core import (BraidSyntaxError, BraidWord, ErleForm,
                                   NegativeWord, PositiveWord,
                                   QuasipositiveFactorization, Type1Form, Type2,
                                   Type3, UnknotOutcome, Unrecognized,
                                   algebraic_length, braids_equal, burau3,
                                   closure_components, conjugate_by_rotation,
                                   cyclically_equal, format_braid, full_twist,
                                   murasugi_classify, parse_braid, sigma,
                                   to_sigma1_form, type1_to_erle_form,
                                   type3_rewrite)
from lagconcord.invariants import determinant, seifert_matrix, signature

E3 = BraidWord(3)


def w3(text):
    return parse_braid(text, 3)


# ---------------------------------------------------------------- parsing

def test_parse_figure_eight_twenty_word():
    w = parse_braid("1 2^3 1 2^-3")
    assert w.strands == 3
    assert w.letters == (1, 2, 2, 2, 1, -2, -2, -2)


def test_parse_empty_with_strands():
    w = parse_braid("", strands=3)
    assert w.letters == () and w.strands == 3


def test_parse_ten_one_five_five_word():
    w = parse_braid("1 -2^2 1 -2 1 2 -1 2^2")
    assert w.letters == (1, -2, -2, 1, -2, 1, 2, -1, 2, 2)


def test_parse_prefix_and_commas():
    w = parse_braid("strands=4; 1,2 , -3^2")
    assert w.strands == 4 and w.letters == (1, 2, -3, -3)


def test_parse_negative_exponent_inverts():
    assert parse_braid("-2^-2").letters == (2, 2)


@pytest.mark.parametrize("text,offset", [
    ("1 2 x", 4),
    ("1 0", 2),
    ("1^0", 0),
    ("12a", 2),
    ("strands=3; 1 ^2", 13),
])
def test_parse_errors_carry_byte_offset(text, offset):
    with pytest.raises(BraidSyntaxError) as exc:
        parse_braid(text)
    assert exc.value.offset == offset


def test_parse_offset_counts_bytes_not_characters():
    with pytest.raises(BraidSyntaxError) as exc:
        parse_braid("1 σ")
    assert exc.value.offset == 2
    with pytest.raises(BraidSyntaxError) as exc:
        parse_braid("σ x")
    assert exc.value.offset == 0


def test_parse_generator_too_large_for_strands():
    with pytest.raises(ValueError):
        parse_braid("strands=3; 3")


def test_format_round_trip():
    w = parse_braid("strands=3; 1 2^3 1 2^-3")
    assert format_braid(w) == "strands=3; 1 2^3 1 2^-3"
    assert parse_braid(format_braid(w)) == w


def test_free_reduction_on_construction():
    assert BraidWord(3, (1, 2, -2, -1, 2)).letters == (2,)
    assert (w3("1 2") * w3("-2 -1")).letters == ()


def test_bad_letters_rejected():
    with pytest.raises(ValueError):
        BraidWord(3, (3,))
    with pytest.raises(ValueError):
        BraidWord(3, (0,))


# ---------------------------------------------------------------- closures

def test_closure_components_examples():
    assert closure_components(full_twist(1) * sigma(3, 2, 2, 2, 2, 2)) == 2
    assert closure_components(E3) == 3
    assert closure_components(w3("1 2^3 1 2^-3")) == 1


def test_algebraic_length_examples():
    assert algebraic_length(w3("1 2^3 1 2^-3")) == 2
    assert algebraic_length(E3) == 0
    assert algebraic_length(full_twist(1) * w3("-1^3 -2")) == 2


def test_cyclically_equal():
    assert cyclically_equal(w3("1 2 -1 2"), w3("2 1 2 -1"))
    assert cyclically_equal(w3("2 1 -2"), w3("1"))
    assert not cyclically_equal(w3("1 2"), w3("1 -2"))


def test_burau_decides_braid_relations():
    assert braids_equal(w3("1 2 1"), w3("2 1 2"))
    assert not braids_equal(w3("1 2"), w3("2 1"))
    assert braids_equal(full_twist(1) * w3("1"), w3("1") * full_twist(1))
    assert burau3(E3) == (({0: 1}, {}), ({}, {0: 1}))


def test_unknot_word_equals_band_product():
    w = full_twist(1) * w3("-1^3 -2")
    assert braids_equal(w, w3("2 1 -2 1"))
    assert conjugate_by_rotation(w, w3("1 2 1 -2"))


# ---------------------------------------------------------------- Murasugi forms

def test_classify_type1():
    w = full_twist(2) * w3("1 -2 1 -2^2")
    assert murasugi_classify(w) == Type1Form(2, (1, 2))


def test_classify_type2():
    assert murasugi_classify(full_twist(1) * w3("2^4")) == Type2(1, 4)


def test_classify_type3():
    assert murasugi_classify(full_twist(1) * w3("-1^3 -2")) == Type3(1, -3)


def test_classify_is_syntactic():
    assert isinstance(murasugi_classify(w3("1 2^3 1 2^-3")), Unrecognized)


def test_classify_tries_rotations():
    w = full_twist(1) * w3("1 -2^3 1 -2")
    rotated = BraidWord(3, w.letters[3:] + w.letters[:3])
    assert murasugi_classify(rotated) == Type1Form(1, (3, 1)) or \
        murasugi_classify(rotated) == Type1Form(1, (1, 3))


def test_classify_wrong_strand_count():
    with pytest.raises(ValueError):
        murasugi_classify(parse_braid("1 2 3"))


def test_type1_expansion_template():
    assert Type1Form(1, (3, 3)).expansion() == full_twist(1) * w3("1 -2^3 1 -2^3")


# ---------------------------------------------------------------- two-band form

def test_to_sigma1_form_trivial_conjugators():
    f = QuasipositiveFactorization(3, ((E3, 1), (E3, 1)))
    assert to_sigma1_form(f).letters == ()


def test_to_sigma1_form_figure_eight_twenty():
    f = QuasipositiveFactorization(3, ((E3, 1), (w3("-2^3"), 1)))
    assert to_sigma1_form(f) == w3("-2^3")


def test_to_sigma1_form_two_sigma2_bands():
    # both substitutions cancel: B' = s1^-1 s2^-1 for each band, so B is empty
    f = QuasipositiveFactorization(3, ((E3, 2), (E3, 2)))
    B = to_sigma1_form(f)
    assert B.letters == ()
    s1 = w3("1")
    assert braids_equal(s1 * B * s1 * B.inverse(), w3("1 1"))
    assert conjugate_by_rotation(w3("2 2"), w3("1 1")) is False
    a = seifert_matrix(s1 * B * s1 * B.inverse())
    b = seifert_matrix(f.flatten())
    assert (determinant(a), signature(a)) == (determinant(b), signature(b))


def test_to_sigma1_form_errors():
    with pytest.raises(ValueError):
        to_sigma1_form(QuasipositiveFactorization(3, ((E3, 1),)))
    with pytest.raises(ValueError):
        to_sigma1_form(QuasipositiveFactorization(4, ((BraidWord(4), 1), (BraidWord(4), 1))))


def test_flatten_length_equals_band_count():
    f = QuasipositiveFactorization(3, ((w3("1 2^3"), 1), (E3, 1), (w3("-1"), 2)))
    assert algebraic_length(f.flatten()) == 3


# ---------------------------------------------------------------- rewrites

def test_type3_rewrite_examples():
    assert type3_rewrite(1, -1) == PositiveWord(w3("1 2 1 1"))
    assert type3_rewrite(2, -3) == PositiveWord(w3("1 2 1 1 2 2 1 1"))
    assert type3_rewrite(1, -3) == UnknotOutcome()
    assert isinstance(type3_rewrite(0, -2), NegativeWord)
    with pytest.raises(ValueError):
        type3_rewrite(1, -4)


@pytest.mark.parametrize("d,k", [(d, k) for d in (1, 2, 3) for k in (-1, -2, -3)
                                 if (d, k) != (1, -3)])
def test_type3_rewrite_positive_words_are_equal_braids(d, k):
    out = type3_rewrite(d, k)
    assert isinstance(out, PositiveWord)
    assert all(g > 0 for g in out.word.letters)
    assert braids_equal(out.word, Type3(d, k).expansion())


@pytest.mark.parametrize("d", [0, -1, -2])
def test_type3_rewrite_nonpositive_twist_mirror_is_positive(d):
    for k in (-1, -2, -3):
        out = type3_rewrite(d, k)
        assert isinstance(out, NegativeWord)
        assert out.word == Type3(d, k).expansion()
        assert all(g > 0 for g in out.word.mirror().letters)


def test_type1_to_erle_form_examples():
    assert type1_to_erle_form(Type1Form(1, (3, 3))) == ErleForm(1, ((3, 1), (3, 1)))
    assert type1_to_erle_form(Type1Form(1, (1, 5))) == ErleForm(1, ((1, 1), (5, 1)))
    assert type1_to_erle_form(Type1Form(0, (2,))) == ErleForm(0, ((2, 1),))
    with pytest.raises(ValueError):
        type1_to_erle_form(Type1Form(1, (0, 0)))


def test_erle_expansion_is_conjugate_by_sigma1_sigma2():
    x = w3("1 2")
    for t in (Type1Form(1, (3, 3)), Type1Form(0, (2,)), Type1Form(2, (1, 4, 2))):
        e = type1_to_erle_form(t).expansion()
        assert braids_equal(x * t.expansion() * x.inverse(), e)


# ---------------------------------------------------------------- properties

letters3 = st.lists(st.sampled_from([1, -1, 2, -2]), max_size=16)


@settings(max_examples=150, deadline=None)
@given(letters3, letters3)
def test_length_and_components_conjugation_invariant(a, b):
    w, c = BraidWord(3, tuple(a)), BraidWord(3, tuple(b))
    conj = c * w * c.inverse()
    assert algebraic_length(conj) == algebraic_length(w)
    assert closure_components(conj) == closure_components(w)


@settings(max_examples=150, deadline=None)
@given(letters3, letters3)
def test_length_and_components_braid_relation_invariant(a, b):
    u = BraidWord(3, tuple(a)) * w3("1 2 1") * BraidWord(3, tuple(b))
    v = BraidWord(3, tuple(a)) * w3("2 1 2") * BraidWord(3, tuple(b))
    assert braids_equal(u, v)
    assert algebraic_length(u) == algebraic_length(v)
    assert closure_components(u) == closure_components(v)


@settings(max_examples=60, deadline=None)
@given(st.integers(-2, 2), st.integers(-8, 8).filter(lambda m: m != 0))
def test_type2_never_a_knot(d, m):
    assert closure_components(Type2(d, m).expansion()) >= 2


@settings(max_examples=120, deadline=None)
@given(st.integers(-2, 2), st.lists(st.integers(0, 5), min_size=1, max_size=4))
def test_erle_conversion_preserves_invariants(d, a):
    if not any(a):
        return
    t = Type1Form(d, tuple(a))
    A, B = seifert_matrix(t.expansion()), seifert_matrix(type1_to_erle_form(t).expansion())
    assert determinant(A) == determinant(B)
    assert signature(A) == signature(B)


@settings(max_examples=100, deadline=None)
@given(letters3, letters3, st.sampled_from([1, 2]), st.sampled_from([1, 2]))
def test_to_sigma1_form_preserves_invariants(c1, c2, g1, g2):
    f = QuasipositiveFactorization(3, ((BraidWord(3, tuple(c1)), g1),
                                       (BraidWord(3, tuple(c2)), g2)))
    B = to_sigma1_form(f)
    s1 = w3("1")
    lhs = s1 * B * s1 * B.inverse()
    a, b = seifert_matrix(lhs), seifert_matrix(f.flatten())
    assert closure_components(lhs) == closure_components(f.flatten())
    assert determinant(a) == determinant(b)
    assert signature(a) == signature(b)
