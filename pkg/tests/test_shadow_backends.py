"""The compiled kernel and the pure-Python fallback must agree exactly."""

import pytest

from conftest import random_word
from toruslink import backend_name, coloring_kernel
from toruslink._shadow import weight_histogram, weight_histogram_py
from toruslink.cocycle import theta_table


def test_backends_agree_on_random_inputs(rng):
    for _ in range(60):
        strands = rng.choice((3, 4, 5))
        p = rng.choice((3, 5, 7))
        word = random_word(rng, strands, 12)
        space = coloring_kernel([word], p)
        theta = theta_table(p)
        base = rng.randrange(p)
        fast = weight_histogram(p, strands, word.letters, space.basis, theta, base)
        slow = weight_histogram_py(p, strands, word.letters, space.basis, theta, base)
        assert fast == slow


def test_histogram_total_is_coloring_count(rng):
    for _ in range(30):
        strands = rng.choice((3, 4))
        p = rng.choice((3, 5))
        word = random_word(rng, strands, 10)
        space = coloring_kernel([word], p)
        hist = weight_histogram(p, strands, word.letters, space.basis, theta_table(p), 0)
        assert sum(hist) == space.count


def test_empty_basis_single_coloring():
    hist = weight_histogram(3, 3, ((1, 1), (1, -1)), [], theta_table(3), 0)
    assert sum(hist) == 1


def test_backend_is_reported():
    assert backend_name() in ("cython", "python")
