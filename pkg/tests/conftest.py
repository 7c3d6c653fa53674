import random

import pytest

from su2words.engine import TraceEngine


@pytest.fixture(scope="session")
def engine():
    """Shared engine; the memo table accumulates across the whole session."""
    return TraceEngine()


@pytest.fixture
def rng():
    return random.Random(20240817)


def random_reduced_word(rng, max_len):
    from su2words.words import Word

    length = rng.randrange(max_len + 1)
    letters = []
    while len(letters) < length:
        l = rng.randrange(4)
        if letters and letters[-1] == l ^ 1:
            continue
        letters.append(l)
    return Word(letters)
