import itertools

import pytest

from conftest import random_word
from toruslink import (
    BraidWord,
    CommutingPair,
    NotPureError,
    UZExponents,
    UZ_MATRIX,
    UZ_MATRIX_INV,
    chirality_certificate,
    full_twist,
    full_twist_power,
    inverse,
    is_pure,
    linking_profile,
    sigma,
    triple_linking,
    triple_linking_tensor,
    triple_linking_variant,
    uz_exponents,
)

S1 = sigma(3, 1) ** 2
S2 = sigma(3, 2) ** 2
D = full_twist(3)
E = BraidWord.identity(3)


def naive_triple(word):
    """Independent oracle: track each label's position separately."""
    n = word.strands
    position = {label: label for label in range(1, n + 1)}
    counts = {}
    for index, sign in word.letters:
        left = next(l for l, q in position.items() if q == index)
        right = next(l for l, q in position.items() if q == index + 1)
        key = (min(left, right), max(left, right))
        counts[key] = counts.get(key, 0) + sign
        position[left], position[right] = index + 1, index
    assert all(v % 2 == 0 for v in counts.values())
    return (
        counts.get((1, 3), 0) // 2,
        counts.get((1, 2), 0) // 2,
        counts.get((2, 3), 0) // 2,
    )


# ---------------------------------------------------------------------------
# Linking profiles
# ---------------------------------------------------------------------------


def test_profile_examples():
    assert linking_profile(S1).triple == (0, 1, 0)
    assert linking_profile(D).triple == (1, 1, 1)
    assert linking_profile(E).triple == (0, 0, 0)


def test_profile_rejects_non_pure():
    with pytest.raises(NotPureError):
        linking_profile(sigma(3, 1))


def test_profile_against_naive_oracle(rng):
    checked = 0
    while checked < 150:
        word = random_word(rng, 3, 8)
        if not is_pure(word):
            continue
        assert linking_profile(word).triple == naive_triple(word)
        checked += 1


def test_profile_symmetry(rng):
    checked = 0
    while checked < 40:
        word = random_word(rng, 4, 10)
        if not is_pure(word):
            continue
        profile = linking_profile(word)
        for i in range(1, 5):
            for j in range(1, 5):
                assert profile.lk(i, j) == profile.lk(j, i)
        checked += 1


# ---------------------------------------------------------------------------
# Exponent coordinates
# ---------------------------------------------------------------------------


def test_uz_examples():
    assert uz_exponents(D) == UZExponents(0, 0, 1)
    assert uz_exponents(S1 * S2) == UZExponents(1, 1, 0)
    assert uz_exponents(E) == UZExponents(0, 0, 0)


def test_uz_matrix_inverse():
    for i in range(3):
        for j in range(3):
            entry = sum(UZ_MATRIX[i][k] * UZ_MATRIX_INV[k][j] for k in range(3))
            assert entry == (1 if i == j else 0)


def test_uz_consistency_on_generated_words(rng):
    atoms = [(S1, 1), (S2, 1), (D, 1), (S1, -1), (S2, -1), (D, -1)]
    for _ in range(80):
        word = E
        alpha = beta = delta = 0
        for _ in range(rng.randint(0, 6)):
            base, s = rng.choice(atoms)
            word = word * (base if s > 0 else inverse(base))
            if base is S1:
                alpha += s
            elif base is S2:
                beta += s
            else:
                delta += s
        exps = uz_exponents(word)
        assert (exps.alpha, exps.beta, exps.delta) == (alpha, beta, delta)
        vec = (alpha, beta, delta)
        expected = tuple(sum(UZ_MATRIX[r][c] * vec[c] for c in range(3)) for r in range(3))
        assert linking_profile(word).triple == expected


# ---------------------------------------------------------------------------
# Triple linking
# ---------------------------------------------------------------------------


def test_triple_linking_examples():
    pair = CommutingPair(S1 * S2 ** 2, D)
    assert triple_linking(pair).as_tuple == (1, -2, 1)
    assert triple_linking(CommutingPair(S1 * S2, E)).as_tuple == (0, 0, 0)
    assert triple_linking(CommutingPair(D, D)).as_tuple == (0, 0, 0)


def test_twist_family_formula():
    for n1, n2, m in itertools.product(range(-2, 3), repeat=3):
        pair = CommutingPair(S1 ** n1 * S2 ** n2, full_twist_power(3, m))
        assert triple_linking(pair).as_tuple == (m * (n2 - n1), -m * n2, m * n1)


def test_variant_sign_relations():
    pair = CommutingPair(S1 * S2 ** 2, D)
    t = triple_linking(pair).as_tuple
    assert triple_linking_variant(pair, "mirror").as_tuple == t
    assert triple_linking_variant(pair, "reverse").as_tuple == tuple(-x for x in t)
    assert triple_linking_variant(pair, "reverse_mirror").as_tuple == tuple(-x for x in t)
    trivial = CommutingPair(E, E)
    for kind in ("reverse", "mirror", "reverse_mirror"):
        assert triple_linking_variant(trivial, kind).as_tuple == (0, 0, 0)


def test_tensor_antisymmetry_and_degeneracy(rng):
    s = [None] + [sigma(4, i) for i in range(1, 4)]
    pair = CommutingPair(s[1] ** 2 * s[3] ** 4, full_twist(4))
    tensor = triple_linking_tensor(pair)
    for (i, j, k), value in tensor.items():
        assert tensor[(k, j, i)] == -value
        if i == j or j == k:
            assert value == 0


def test_tensor_matches_degree3_vector():
    pair = CommutingPair(S1 * S2 ** 2, D)
    tensor = triple_linking_tensor(pair)
    t = triple_linking(pair)
    assert (tensor[(1, 2, 3)], tensor[(2, 3, 1)], tensor[(3, 1, 2)]) == t.as_tuple


def test_swap_move_consistency(rng):
    # the (b^-1, a) move negates both factors of the product, fixing the result
    for _ in range(30):
        base = random_word(rng, 3, 5)
        a = base ** rng.randint(-2, 2) * full_twist_power(3, rng.randint(-2, 2))
        b = base ** rng.randint(-2, 2) * full_twist_power(3, rng.randint(-2, 2))
        if not (is_pure(a) and is_pure(b)):
            continue
        pair = CommutingPair(a, b)
        swapped = CommutingPair(inverse(b), a)
        assert triple_linking(swapped).as_tuple == triple_linking(pair).as_tuple


def test_triple_linking_rejects_non_pure():
    with pytest.raises(NotPureError):
        triple_linking(CommutingPair(sigma(3, 1), E))


# ---------------------------------------------------------------------------
# Chirality certificate
# ---------------------------------------------------------------------------


def test_certificate_example_applies():
    cert = chirality_certificate(CommutingPair(sigma(3, 1) ** 2 * sigma(3, 2) ** 4, D))
    assert cert.applies
    assert cert.conclusion == "neither reversible nor (-)-amphicheiral"
    assert cert.witness.failed == ()


def test_certificate_proportional_fails():
    cert = chirality_certificate(CommutingPair(D, full_twist_power(3, 2)))
    assert not cert.applies
    assert cert.conclusion is None
    assert not cert.witness.nonproportional


def test_certificate_trivial_linking_fails():
    cert = chirality_certificate(CommutingPair(E, D))
    assert not cert.applies
    assert not cert.witness.nontrivial_linking


def test_certificate_renumbering_clause():
    # equal linking numbers in every slot for both words trips the clause
    cert = chirality_certificate(CommutingPair(D, full_twist_power(3, 2)))
    assert not cert.witness.renumbering_clause
