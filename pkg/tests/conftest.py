import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from algebra.ringDescriptor import gradedPoly, integers, integersMod, rationals  # noqa: E402


@pytest.fixture
def Z():
    return integers()


@pytest.fixture
def Q():
    return rationals()


@pytest.fixture
def Qx():
    return gradedPoly(rationals(), ["x"])


@pytest.fixture
def Qxy():
    return gradedPoly(rationals(), ["x", "y"])


@pytest.fixture
def F2x():
    return gradedPoly(integersMod(2), ["x"])
