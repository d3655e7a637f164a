import pytest

from conftest import random_word
from toruslink import (
    BraidWord,
    CommutingPair,
    NotOddPrimeError,
    QuadraticUnit,
    coloring_kernel,
    coloring_matrix,
    count_colorings_link,
    eps_power,
    full_twist,
    full_twist_power,
    golden_unit_criterion,
    inverse,
    mirror,
    phi_p_exponent,
    sigma,
    sigma12_count_closed_form,
)
from toruslink.coloring import identity_matrix, mat_mul, mat_pow_mod


def _s12(n):
    return (sigma(3, 1) * sigma(3, 2)) ** n


def _s12inv(n):
    return (sigma(3, 1) * inverse(sigma(3, 2))) ** n


# ---------------------------------------------------------------------------
# Transport matrices
# ---------------------------------------------------------------------------


def test_matrix_examples():
    assert coloring_matrix(_s12(1)).entries == ((0, 1, 0), (0, 0, 1), (1, -2, 2))
    assert coloring_matrix(_s12inv(1)).entries == ((0, 1, 0), (-2, 4, -1), (-1, 2, 0))
    assert coloring_matrix(BraidWord.identity(3)).entries == identity_matrix(3)


def test_matrix_anti_homomorphism(rng):
    for _ in range(60):
        n = rng.randint(2, 5)
        v, w = random_word(rng, n, 10), random_word(rng, n, 10)
        assert coloring_matrix(v * w).entries == mat_mul(
            coloring_matrix(w).entries, coloring_matrix(v).entries
        )


def test_matrix_inverse(rng):
    for _ in range(40):
        n = rng.randint(2, 5)
        word = random_word(rng, n, 12)
        product = mat_mul(coloring_matrix(inverse(word)).entries, coloring_matrix(word).entries)
        assert product == identity_matrix(n)


def test_matrix_row_sums_and_determinant(rng):
    from toruslink.coloring import mat_det

    for _ in range(30):
        mat = coloring_matrix(random_word(rng, rng.randint(2, 5), 15))
        assert all(sum(row) == 1 for row in mat.entries)
        assert mat_det(mat.entries) in (1, -1)


# ---------------------------------------------------------------------------
# Kernels and counts
# ---------------------------------------------------------------------------


def test_kernel_examples():
    assert coloring_kernel([_s12(6)], 5).dimension == 3
    assert coloring_kernel([_s12(6)], 5).count == 125
    assert coloring_kernel([_s12(2)], 3).dimension == 2
    assert coloring_kernel([_s12(2)], 3).count == 9
    assert coloring_kernel([BraidWord.identity(3)], 7).count == 343


def test_kernel_vectors_are_fixed(rng):
    for _ in range(30):
        n = rng.randint(2, 5)
        p = rng.choice((3, 5, 7))
        word = random_word(rng, n, 12)
        space = coloring_kernel([word], p)
        mat = coloring_matrix(word).entries
        for vec in space.basis:
            image = tuple(sum(mat[i][j] * vec[j] for j in range(n)) % p for i in range(n))
            assert image == tuple(v % p for v in vec)


def test_constant_vector_always_colors(rng):
    for _ in range(20):
        n = rng.randint(2, 5)
        word = random_word(rng, n, 12)
        space = coloring_kernel([word], 5)
        # the all-ones vector is in the span of the basis
        assert space.dimension >= 1


def test_count_colorings_link_examples():
    ident = BraidWord.identity(3)
    assert count_colorings_link(CommutingPair(ident, ident), 3) == 27
    assert count_colorings_link(CommutingPair(sigma(3, 1), full_twist(3)), 3) == 3
    pair = CommutingPair(sigma(3, 1) ** 3, full_twist_power(3, 2))
    assert count_colorings_link(pair, 3) == 27


def test_count_invariant_under_pair_moves(rng):
    # counts agree for (a,b), (a^-1,b^-1), (c^-1 a c, c^-1 b c), (b^-1,a), (a,a^2 b)
    for _ in range(25):
        base = random_word(rng, 3, 6)
        a = base ** rng.randint(-2, 2) * full_twist_power(3, rng.randint(-1, 1))
        b = base ** rng.randint(-2, 2) * full_twist_power(3, rng.randint(-1, 1))
        p = rng.choice((3, 5))
        pair = CommutingPair(a, b)
        count = count_colorings_link(pair, p)
        conj = random_word(rng, 3, 3)
        variants = [
            CommutingPair(inverse(a), inverse(b)),
            CommutingPair(inverse(conj) * a * conj, inverse(conj) * b * conj),
            CommutingPair(inverse(b), a),
            CommutingPair(a, a * a * b),
        ]
        for variant in variants:
            assert count_colorings_link(variant, p) == count


def test_count_mirror_symmetry(rng):
    for _ in range(25):
        base = random_word(rng, 3, 6)
        a = base ** rng.randint(-2, 2) * full_twist_power(3, rng.randint(-1, 1))
        b = base ** rng.randint(-2, 2) * full_twist_power(3, rng.randint(-1, 1))
        pair = CommutingPair(a, b)
        mirrored = CommutingPair(mirror(a), mirror(b))
        for p in (3, 5):
            assert count_colorings_link(pair, p) == count_colorings_link(mirrored, p)


def test_non_prime_modulus_rejected():
    with pytest.raises(NotOddPrimeError):
        coloring_kernel([sigma(3, 1)], 9)
    with pytest.raises(NotOddPrimeError):
        sigma12_count_closed_form(3, 2)


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("n,p,expected", [(12, 7, 343), (4, 3, 9), (1, 5, 5)])
def test_sigma12_closed_form_examples(n, p, expected):
    assert sigma12_count_closed_form(n, p) == expected


def test_sigma12_closed_form_matches_kernel():
    for p in (3, 5, 7):
        for n in range(-12, 25):
            assert coloring_kernel([_s12(n)], p).count == sigma12_count_closed_form(n, p)


def test_full_twist_congruences():
    for n in (3, 4, 5, 6):
        mat = coloring_matrix(full_twist(n)).entries
        for p in (3, 5, 7):
            exponent = 2 if n % 2 else p
            assert mat_pow_mod(mat, exponent, p) == identity_matrix(n)


# ---------------------------------------------------------------------------
# Golden unit
# ---------------------------------------------------------------------------


def test_golden_unit_examples():
    report = golden_unit_criterion(4, 3)
    assert report.full_count and report.count_p3 == 27
    report = golden_unit_criterion(2, 3)
    assert not report.full_count and report.count_p3 == 3
    for p in (3, 5, 7, 11):
        assert golden_unit_criterion(0, p).full_count


def test_unit_arithmetic():
    p = 7
    eps = QuadraticUnit.eps(p)
    assert eps * QuadraticUnit.eps_inverse(p) == QuadraticUnit.one(p)
    assert eps_power(5, p) == eps * eps * eps * eps * eps
    assert eps_power(-3, p) * eps_power(3, p) == QuadraticUnit.one(p)


def test_golden_unit_agrees_with_kernel():
    for p in (3, 7, 11, 13, 19, 5):
        for n in range(0, 41):
            full = coloring_kernel([_s12inv(n)], p).count == p ** 3
            assert golden_unit_criterion(n, p).full_count == full


def test_golden_p5_exact_residues():
    """Exact p = 5 behaviour: dimension 2 at every even power outside 10Z.

    The n = 2 closure is the figure-eight knot with 25 five-colorings;
    this pins the behaviour the artifact actually computes (the stated
    acceptance clause claims the smaller set {4, 6} mod 10 and is checked,
    faithfully failing, in the acceptance suite).
    """
    for n in range(0, 41):
        count = coloring_kernel([_s12inv(n)], 5).count
        if n % 10 == 0:
            assert count == 125
        elif n % 2 == 0:
            assert count == 25
        else:
            assert count == 5


@pytest.mark.parametrize("p,expected", [(11, 100), (3, 8), (5, 20)])
def test_phi_p_exponent_examples(p, expected):
    assert phi_p_exponent(p) == expected


def test_unit_order_divides_phi_p():
    for p in (3, 7, 11, 13, 17, 19):
        bound = phi_p_exponent(p)
        order = next(
            k for k in range(1, bound + 1) if eps_power(2 * k, p) == QuadraticUnit.one(p)
        )
        assert bound % order == 0
