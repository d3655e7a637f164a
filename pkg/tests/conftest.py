import random

import pytest

from toruslink import BraidWord


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)


def random_word(rng: random.Random, strands: int, max_len: int) -> BraidWord:
    return BraidWord(
        strands,
        tuple(
            (rng.randint(1, strands - 1), rng.choice((1, -1)))
            for _ in range(rng.randint(0, max_len))
        ),
    )
