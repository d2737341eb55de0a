import random

import pytest

from braidtiles import braid
from braidtiles.braid import (
    BraidParseError,
    BraidWord,
    FreeGroupEndo,
    Permutation,
    artin_action,
    cable,
    equal,
    format_braid_word,
    free_reduce,
    handle_reduce,
    is_trivial,
    mirror,
    parse_braid_word,
    underlying_permutation,
    wreath_multiply,
)


def w(text: str) -> BraidWord:
    return parse_braid_word(text)


def rand_word(rng: random.Random, n: int, length: int) -> BraidWord:
    if n == 1:
        return BraidWord(1, ())
    letters = []
    for _ in range(length):
        i = rng.randint(1, n - 1)
        letters.append(i if rng.random() < 0.5 else -i)
    return BraidWord(n, tuple(letters))


# -- construction and validation ---------------------------------------------

def test_word_validation():
    with pytest.raises(ValueError):
        BraidWord(0, ())
    with pytest.raises(ValueError):
        BraidWord(3, (0,))
    with pytest.raises(ValueError):
        BraidWord(3, (3,))
    assert BraidWord(1, ()).n == 1  # one strand, no generators


def test_mul_requires_same_strand_count():
    with pytest.raises(ValueError):
        w("b3: s1") * w("b4: s1")


def test_generator_and_pow():
    assert BraidWord.generator(3, 2).letters == (2,)
    assert BraidWord.generator(3, 2, -1).letters == (-2,)
    assert (w("b3: s1") ** 3).letters == (1, 1, 1)
    assert (w("b3: s1 s2") ** -1).letters == (-2, -1)
    with pytest.raises(ValueError):
        BraidWord.generator(3, 3)


def test_inverse_reverses_and_flips():
    word = w("b4: s1 s2^-1 s3")
    assert word.inverse().letters == (-3, 2, -1)
    assert is_trivial(word * word.inverse())


# -- text format --------------------------------------------------------------

def test_parse_format_round_trip():
    for text in ["b3: s1 s2^-1", "b1: e", "b5: s4 s4 s1^-1", "b2: e"]:
        assert format_braid_word(parse_braid_word(text)) == text


def test_parse_empty_word():
    assert parse_braid_word("b3: e").letters == ()


@pytest.mark.parametrize(
    "text,position",
    [
        ("nope", 0),
        ("b3 s1", 0),
        ("b0: e", 1),
        ("b3:", 3),
        ("b3: s9", 4),
        ("b3: s0", 4),
        ("b3: t2", 4),
        ("b3: s1^2", 4),
    ],
)
def test_parse_errors_carry_positions(text, position):
    with pytest.raises(BraidParseError) as err:
        parse_braid_word(text)
    assert err.value.position == position


# -- permutations --------------------------------------------------------------

def test_permutation_composition_order():
    # letters act left to right: 1 goes to 2 under s1, then to 3 under s2
    p = underlying_permutation(w("b3: s1 s2"))
    assert p.images == (3, 1, 2)
    assert p.cycles() == ((1, 3, 2),)


def test_permutation_inverse_and_identity():
    p = underlying_permutation(w("b4: s1 s3 s2"))
    assert (p * p.inverse()).is_identity()
    assert str(Permutation.identity(3)) == "()"


def test_sign_does_not_change_permutation():
    assert underlying_permutation(w("b3: s1")) == underlying_permutation(w("b3: s1^-1"))


# -- the free group action ------------------------------------------------------

def test_action_on_generators():
    # first strand generator: x1 -> x1 x2 x1^-1, x2 -> x1
    endo = artin_action(w("b2: s1"))
    assert endo.images == ((1, 2, -1), (1,))
    inv = artin_action(w("b2: s1^-1"))
    assert inv.images == ((2,), (-2, 1, 2))
    # the two compose back to the identity
    assert all(endo.apply(img) == (i,) for i, img in enumerate(inv.images, start=1))


def test_action_composes_with_concatenation():
    rng = random.Random(3)
    for _ in range(20):
        a = rand_word(rng, 4, rng.randint(0, 6))
        b = rand_word(rng, 4, rng.randint(0, 6))
        lhs = artin_action(a * b)
        composed = FreeGroupEndo(
            4, tuple(artin_action(b).apply(img) for img in artin_action(a).images)
        )
        assert lhs == composed


def test_action_of_inverse_composes_to_identity():
    word = w("b4: s1 s2^-1 s3 s1")
    endo = artin_action(word * word.inverse())
    assert endo.is_identity()


def test_free_reduce():
    assert free_reduce(BraidWord(3, (1, -1, 2))).letters == (2,)
    assert free_reduce(BraidWord(3, (1, 2, -2, -1))).letters == ()


# -- word problem ----------------------------------------------------------------

def test_braid_relation():
    assert equal(w("b3: s1 s2 s1"), w("b3: s2 s1 s2"))
    assert equal(w("b4: s1 s3"), w("b4: s3 s1"))
    assert not equal(w("b3: s1"), w("b3: s2"))


def test_braid_relation_conjugated():
    assert is_trivial(w("b3: s1 s2 s1 s2^-1 s1^-1 s2^-1"))


def test_handle_reduce_examples():
    assert handle_reduce(w("b3: s1 s2 s2^-1 s1^-1")).letters == ()
    # a reduced nontrivial word stays nontrivial
    assert handle_reduce(w("b3: s1 s2")).letters != ()


def test_nontrivial_words():
    assert not is_trivial(w("b3: s1"))
    assert not is_trivial(w("b3: s1 s2 s1 s2 s1 s2"))  # full twist squared root
    assert not is_trivial(w("b2: s1 s1"))


def test_trivial_on_one_strand():
    assert is_trivial(BraidWord(1, ()))


def test_oracle_agreement_explicit():
    rng = random.Random(9)
    for _ in range(50):
        word = rand_word(rng, 4, rng.randint(0, 10))
        fast = is_trivial(word)
        checked = is_trivial(word, oracle=True)
        assert fast == checked


def test_oracle_flag_off_still_answers():
    word = w("b3: s1 s2^-1")
    assert is_trivial(word, oracle=False) is False


def test_pseudo_anosov_power_fast():
    # the action images grow exponentially here; the auto path must not stall
    word = (w("b3: s1 s2^-1")) ** 16
    assert len(word) == 32
    assert not is_trivial(word)


def test_equal_respects_strand_count():
    with pytest.raises(ValueError):
        equal(w("b3: s1"), w("b4: s1"))


# -- mirroring --------------------------------------------------------------------

def test_mirror_flips_crossings():
    assert mirror(w("b3: s1 s2^-1")).letters == (-1, 2)
    assert mirror(mirror(w("b3: s1 s2"))) == w("b3: s1 s2")


def test_mirror_is_a_homomorphism():
    rng = random.Random(21)
    for _ in range(10):
        a = rand_word(rng, 3, 5)
        b = rand_word(rng, 3, 5)
        assert equal(mirror(a * b), mirror(a) * mirror(b))


def test_mirror_preserves_permutation():
    word = w("b4: s1 s2 s3 s1")
    assert underlying_permutation(mirror(word)) == underlying_permutation(word)


# -- cabling -----------------------------------------------------------------------

def test_cable_frozen_example():
    # one crossing of two 2-strand cables: the four strands cross blockwise
    eps = BraidWord(2, ())
    out = cable(2, 2, w("b2: s1"), (eps, eps))
    assert format_braid_word(out) == "b4: s2 s1 s3 s2"
    assert underlying_permutation(out).cycles() == ((1, 3), (2, 4))


def test_cable_inserts_inner_words_first():
    out = cable(2, 2, BraidWord(2, ()), (w("b2: s1"), w("b2: s1^-1")))
    assert out.letters == (1, -3)


def test_cable_validates_shapes():
    with pytest.raises(ValueError):
        cable(2, 2, w("b2: s1"), (w("b2: e"),))  # needs one word per strand
    with pytest.raises(ValueError):
        cable(2, 2, w("b3: s1"), (w("b2: e"), w("b2: e")))
    with pytest.raises(ValueError):
        cable(2, 2, w("b2: s1"), (w("b2: e"), w("b3: e")))


def test_cable_is_multiplicative():
    rng = random.Random(14)
    for _ in range(15):
        q, k = rng.choice([(2, 2), (3, 2), (2, 3)])
        s1 = rand_word(rng, q, rng.randint(0, 3))
        s2 = rand_word(rng, q, rng.randint(0, 3))
        mus1 = tuple(rand_word(rng, k, rng.randint(0, 2)) for _ in range(q))
        mus2 = tuple(rand_word(rng, k, rng.randint(0, 2)) for _ in range(q))
        sigma, mus = wreath_multiply((s1, mus1), (s2, mus2))
        lhs = cable(q, k, s1, mus1) * cable(q, k, s2, mus2)
        assert equal(lhs, cable(q, k, sigma, mus), oracle=True)


def test_wreath_multiply_twists_by_the_first_permutation():
    # with sigma = s1 in the outer group, the second pair's inner words swap slots
    s1 = w("b2: s1")
    eps2 = BraidWord(2, ())
    a = w("b2: s1")
    b = w("b2: s1^-1")
    _, mus = wreath_multiply((s1, (a, eps2)), (eps2, (b, eps2)))
    assert mus[0] == a * eps2
    assert mus[1] == eps2 * b
