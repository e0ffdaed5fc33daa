import random

import pytest

from mustrata.fields import GF, QQ
from mustrata.forms import BinaryForm


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def st():
    return BinaryForm.s(QQ), BinaryForm.t(QQ)


@pytest.fixture
def fp():
    return GF()


def form(*coeffs, field=QQ):
    return BinaryForm(field, coeffs)
