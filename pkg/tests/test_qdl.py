import pytest

from conftest import random_word
from toruslink import (
    BraidWord,
    CommutingPair,
    InapplicableMoveError,
    PhiPolynomial,
    QdlMove,
    apply_move,
    bracket_reduce,
    classify,
    decompose_commuting,
    format_word,
    full_twist,
    full_twist_exponent,
    full_twist_power,
    in_same_bracket,
    inverse,
    normal_form,
    phi3,
    s4_family_phi3,
    sigma,
    tc_index_bound,
)

S1 = sigma(3, 1)
S2 = sigma(3, 2)
D = full_twist(3)
E = BraidWord.identity(3)


# ---------------------------------------------------------------------------
# Moves
# ---------------------------------------------------------------------------


def test_swap_move():
    pair = CommutingPair(S1 * inverse(S2), D)
    moved = apply_move(pair, QdlMove("E3"))
    assert moved.a.letters == inverse(D).letters
    assert moved.b.letters == pair.a.letters


def test_twist_strip_move():
    pair = CommutingPair(S1, full_twist_power(3, 3))
    moved = apply_move(pair, QdlMove("Q3", sign=-1))
    assert full_twist_exponent(moved.b) == 1


def test_residue_replacement_move():
    pair = CommutingPair(S1 ** 4 * inverse(S2), D)
    moved = apply_move(pair, QdlMove("Q4", replacement=S1 * inverse(S2)))
    assert moved.a.letters == (S1 * inverse(S2)).letters


def test_q_moves_need_twist_power():
    pair = CommutingPair(S1, S1 ** 2)
    for tag in ("Q2", "Q3", "Q4"):
        with pytest.raises(InapplicableMoveError):
            apply_move(pair, QdlMove(tag, replacement=S1))


def test_q4_rejects_foreign_replacement():
    pair = CommutingPair(S1 ** 4, D)
    with pytest.raises(InapplicableMoveError):
        apply_move(pair, QdlMove("Q4", replacement=S2))


def test_conjugation_move_preserves_class(rng):
    pair = CommutingPair(S1 * inverse(S2), D)
    count = phi3(pair)
    for _ in range(10):
        conj = random_word(rng, 3, 2)
        moved = apply_move(pair, QdlMove("E2", conjugator=conj))
        assert phi3(moved) == count


# ---------------------------------------------------------------------------
# Residue bracket
# ---------------------------------------------------------------------------


def test_bracket_examples():
    assert bracket_reduce(S1 ** 4 * inverse(S2), 3).letters == (S1 * inverse(S2)).letters
    assert bracket_reduce(S1 ** 3, 3).letters == ()
    word = S1 ** 2 * S2 ** 2
    assert bracket_reduce(word, 5).letters == word.letters


def test_bracket_cascade():
    # middle syllable vanishes mod 3 and the outer powers merge and re-reduce
    word = S1 ** 2 * S2 ** 3 * S1 ** 2
    assert bracket_reduce(word, 3).letters == S1.letters


def test_bracket_membership():
    assert in_same_bracket(S1 ** 4, S1, 3)
    assert in_same_bracket(S1 ** -2, S1, 3)
    assert not in_same_bracket(S1, S2, 3)


def test_bracket_preserves_coloring_count(rng):
    from toruslink import coloring_kernel

    for _ in range(40):
        word = random_word(rng, 3, 10)
        for p in (3, 5):
            reduced = bracket_reduce(word, p)
            assert (
                coloring_kernel([word], p).count == coloring_kernel([reduced], p).count
            )


# ---------------------------------------------------------------------------
# Decomposition
# ---------------------------------------------------------------------------


def test_decompose_visible_root():
    dec = decompose_commuting(S1 ** 2, S1 ** 3)
    assert (format_word(dec.c), dec.l1, dec.l2, dec.m1, dec.m2) == ("s1", 2, 3, 0, 0)


def test_decompose_central_pair():
    dec = decompose_commuting(full_twist_power(3, 2), full_twist_power(3, -1))
    assert (format_word(dec.c), dec.l1, dec.l2, dec.m1, dec.m2) == ("e", 0, 0, 2, -1)


def test_decompose_mixed_pair():
    dec = decompose_commuting((S1 * inverse(S2)) ** 2 * D, S1 * inverse(S2))
    assert (format_word(dec.c), dec.l1, dec.l2, dec.m1, dec.m2) == ("s1 s2^-1", 2, 1, 1, 0)


def test_decompose_round_trip(rng):
    for _ in range(60):
        root = random_word(rng, 3, 7)
        a = root ** rng.randint(-3, 3) * full_twist_power(3, rng.randint(-2, 2))
        b = root ** rng.randint(-3, 3) * full_twist_power(3, rng.randint(-2, 2))
        dec = decompose_commuting(a, b)
        rebuilt_a = dec.c ** dec.l1 * full_twist_power(3, dec.m1)
        rebuilt_b = dec.c ** dec.l2 * full_twist_power(3, dec.m2)
        assert normal_form(rebuilt_a) == normal_form(a)
        assert normal_form(rebuilt_b) == normal_form(b)


def test_decompose_deterministic(rng):
    word = (S1 * inverse(S2)) ** 2
    first = decompose_commuting(word, word ** 2)
    second = decompose_commuting(word, word ** 2)
    assert first == second


# ---------------------------------------------------------------------------
# Counts and classification
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "a,b,expected",
    [
        (E, E, 27),
        (S1, E, 9),
        (S1 * inverse(S2), D, 3),
        (S1 * S2, D, 3),
    ],
)
def test_phi3_examples(a, b, expected):
    assert phi3(CommutingPair(a, b)) == expected


def test_classification_normal_form_counts():
    roots = [E, S1, S1 * S2, S1 * inverse(S2), (S1 * inverse(S2)) ** 2]
    seen = []
    for root in roots:
        for twist in (0, 1):
            count = phi3(CommutingPair(root, full_twist_power(3, twist)))
            seen.append(count)
    assert seen == [27, 3, 9, 3, 3, 3, 3, 3, 3, 3]


def test_classify_examples():
    result = classify(CommutingPair(E, full_twist_power(3, 2)))
    assert result.tag == "full27"
    assert result.representative is not None
    assert format_word(result.representative[0]) == "e"
    assert format_word(result.representative[1]) == "e"

    result = classify(CommutingPair(S1 ** 4, E))
    assert result.tag == "nine"
    assert format_word(result.representative[0]) == "s1"

    result = classify(CommutingPair(S1 * S2, D))
    assert result.tag == "three"


def test_classify_representative_has_same_count(rng):
    for _ in range(10):
        root = random_word(rng, 3, 4)
        pair = CommutingPair(
            root ** rng.randint(-2, 2) * full_twist_power(3, rng.randint(-1, 1)),
            root ** rng.randint(-2, 2) * full_twist_power(3, rng.randint(-1, 1)),
        )
        result = classify(pair, depth=6, max_states=800)
        assert result.tag in ("full27", "nine", "three")
        if result.representative is not None:
            rep = CommutingPair(*result.representative)
            assert phi3(rep) == phi3(pair)


def test_phi3_range_on_random_pairs(rng):
    for _ in range(50):
        root = random_word(rng, 3, 8)
        pair = CommutingPair(
            root ** rng.randint(-3, 3) * full_twist_power(3, rng.randint(-3, 3)),
            root ** rng.randint(-3, 3) * full_twist_power(3, rng.randint(-3, 3)),
        )
        assert phi3(pair) in (27, 9, 3)


# ---------------------------------------------------------------------------
# Covering-degree bound
# ---------------------------------------------------------------------------


def test_tc_bound_examples():
    assert tc_index_bound(PhiPolynomial(3, (27, 0, 0))) == 0
    assert tc_index_bound(PhiPolynomial(3, (3, 0, 6))) == 4
    assert tc_index_bound(PhiPolynomial(3, (9, 0, 0))) == 0


def test_tc_bound_needs_tricolorings():
    with pytest.raises(ValueError):
        tc_index_bound(PhiPolynomial(5, (125, 0, 0, 0, 0)))


@pytest.mark.parametrize(
    "k,m,coeffs",
    [(1, 1, (3, 0, 6)), (3, 1, (9, 0, 0)), (1, 3, (9, 0, 0)), (2, 1, (3, 6, 0))],
)
def test_s4_family_examples(k, m, coeffs):
    assert s4_family_phi3(k, m).coeffs == coeffs


def test_s4_family_bound():
    for k in range(-6, 7):
        for m in range(-6, 7):
            poly = s4_family_phi3(k, m)
            expected = 4 if (k * m) % 3 else 0
            assert tc_index_bound(poly) == expected
