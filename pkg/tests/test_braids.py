import random

import pytest

from solbraid.braids import (
    BraidWord,
    Permutation,
    compose,
    exponent_sum,
    inverse,
    linking_matrix,
    permutation_of,
)


def word(text, n):
    return BraidWord.parse(text, n)


def test_parse_signed_integers():
    assert word("1 -2 1", 3).letters == (1, -2, 1)


def test_parse_named_tokens():
    assert word("s1 s2^-1", 3).letters == (1, -2)


def test_parse_out_of_range():
    with pytest.raises(ValueError):
        word("3", 3)


def test_parse_malformed_token():
    with pytest.raises(ValueError):
        word("x7", 3)


def test_parse_needs_two_strands():
    with pytest.raises(ValueError):
        BraidWord(1, ())


def test_emit_round_trip():
    w = word("1 -2 1", 3)
    assert BraidWord.parse(str(w), 3) == w
    assert str(BraidWord.identity(4)) == ""


def test_compose_concatenates_verbatim():
    assert (word("1", 3) * word("-1", 3)).letters == (1, -1)
    assert (word("1 2", 3) * BraidWord.identity(3)).letters == (1, 2)
    assert compose(word("1", 3), word("2", 3)).letters == (1, 2)


def test_compose_strand_mismatch():
    with pytest.raises(ValueError):
        compose(word("1", 3), word("1", 4))


def test_inverse():
    assert inverse(word("1 -2", 3)).letters == (2, -1)
    assert inverse(BraidWord.identity(3)).letters == ()
    assert inverse(word("1 1", 3)).letters == (-1, -1)


def test_permutation_of_generator():
    assert str(permutation_of(word("1", 3))) == "(1 2)"


def test_permutation_of_cycle():
    p = permutation_of(word("1 2 3 4", 5))
    assert len(p.cycles()) == 1
    assert len(p.cycles()[0]) == 5


def test_permutation_square_trivial():
    assert permutation_of(word("1 1", 3)).is_identity()


def test_permutation_sign_irrelevant():
    assert permutation_of(word("1", 3)) == permutation_of(word("-1", 3))


def test_permutation_homomorphism():
    rng = random.Random(11)
    for _ in range(1000):
        n = rng.randint(3, 6)
        w1 = BraidWord(n, tuple(rng.choice([1, -1]) * rng.randint(1, n - 1)
                                for _ in range(rng.randint(0, 8))))
        w2 = BraidWord(n, tuple(rng.choice([1, -1]) * rng.randint(1, n - 1)
                                for _ in range(rng.randint(0, 8))))
        assert permutation_of(w1 * w2) == permutation_of(w1).then(permutation_of(w2))


def test_exponent_sum():
    assert exponent_sum(word("1 -2 1", 3)) == 1
    assert exponent_sum(BraidWord.identity(3)) == 0
    assert exponent_sum(word("1 2 1", 3)) == exponent_sum(word("2 1 2", 3)) == 3


def random_word(rng, n, length):
    return BraidWord(n, tuple(rng.choice([1, -1]) * rng.randint(1, n - 1)
                              for _ in range(length)))


def sorting_word(perm):
    """A braid word over positive generators inducing the given permutation."""
    images = list(perm.images)
    letters = []
    # bubble sort back to the identity; each swap is an adjacent transposition
    changed = True
    while changed:
        changed = False
        for i in range(len(images) - 1):
            if images[i] > images[i + 1]:
                images[i], images[i + 1] = images[i + 1], images[i]
                letters.append(i + 1)
                changed = True
    # p composed with the recorded swaps is the identity, so the swaps in
    # recorded order, read as a left-to-right word, induce p itself
    return BraidWord(perm.degree, tuple(letters))


def random_pure_word(rng, n, length):
    w = random_word(rng, n, length)
    closer = sorting_word(permutation_of(w).inverse())
    return w * closer


def test_sorting_word_inverts_permutation():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(3, 6)
        w = random_word(rng, n, rng.randint(0, 10))
        assert permutation_of(random_pure_word(rng, n, rng.randint(0, 10))).is_identity()
        s = sorting_word(permutation_of(w))
        assert permutation_of(s) == permutation_of(w)


def test_invariance_under_cancelling_insertion():
    rng = random.Random(17)
    for _ in range(300):
        n = rng.randint(3, 6)
        w = random_pure_word(rng, n, rng.randint(0, 8))
        k = rng.choice([1, -1]) * rng.randint(1, n - 1)
        pos = rng.randint(0, len(w.letters))
        w2 = BraidWord(n, w.letters[:pos] + (k, -k) + w.letters[pos:])
        assert exponent_sum(w2) == exponent_sum(w)
        assert linking_matrix(w2) == linking_matrix(w)


def test_invariance_under_braid_relation():
    rng = random.Random(23)
    for _ in range(300):
        n = rng.randint(3, 6)
        k = rng.randint(1, n - 2)
        prefix = random_word(rng, n, rng.randint(0, 5))
        suffix = random_word(rng, n, rng.randint(0, 5))
        w1 = prefix * BraidWord(n, (k, k + 1, k)) * suffix
        w2 = prefix * BraidWord(n, (k + 1, k, k + 1)) * suffix
        assert exponent_sum(w1) == exponent_sum(w2)
        assert permutation_of(w1) == permutation_of(w2)
        if permutation_of(w1).is_identity():
            assert linking_matrix(w1) == linking_matrix(w2)


def test_linking_of_generator_square():
    lk = linking_matrix(word("1 1", 3))
    assert lk[0][1] == lk[1][0] == 1
    assert lk[0][2] == lk[1][2] == lk[2][2] == 0


def test_linking_of_empty_word():
    lk = linking_matrix(BraidWord.identity(3))
    assert all(x == 0 for row in lk for x in row)


def test_linking_of_negative_square():
    lk = linking_matrix(word("-1 -1", 3))
    assert lk[0][1] == -1


def test_linking_requires_pure():
    with pytest.raises(ValueError):
        linking_matrix(word("1", 3))


def test_linking_additive_on_pure_words():
    rng = random.Random(31)
    for _ in range(200):
        n = rng.randint(3, 6)
        w1 = random_pure_word(rng, n, rng.randint(0, 6))
        w2 = random_pure_word(rng, n, rng.randint(0, 6))
        lk1 = linking_matrix(w1)
        lk2 = linking_matrix(w2)
        lk = linking_matrix(w1 * w2)
        for i in range(n):
            for j in range(n):
                assert lk[i][j] == lk1[i][j] + lk2[i][j]


def test_cycle_notation_round_trip():
    p = Permutation.from_cycles("(1 2)(3 4 5)", 5)
    assert str(p) == "(1 2)(3 4 5)"
    assert Permutation.from_cycles("()", 4) == Permutation.identity(4)
    assert str(Permutation.identity(4)) == "()"
    with pytest.raises(ValueError):
        Permutation.from_cycles("(1 9)", 5)
    with pytest.raises(ValueError):
        Permutation.from_cycles("(1 2", 5)
