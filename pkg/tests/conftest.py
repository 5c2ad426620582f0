import itertools

import numpy as np
import pytest
from hypothesis import settings
from hypothesis import strategies as st

from monobn.netcore import BooleanNetwork, Configuration

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def net(n, func):
    return BooleanNetwork.from_function(n, func)


SWAP = net(2, lambda x: (x[1], x[0]))
NEG_SWAP = net(2, lambda x: (1 - x[1], x[0]))
NOT1 = net(1, lambda x: (1 - x[0],))
AND_OR = net(2, lambda x: (x[0] & x[1], x[0] | x[1]))
CHAIN = net(2, lambda x: (0, x[0]))


def all_networks(n):
    """Every network on n components (use only for n <= 2)."""
    size = n << n
    for bits in itertools.product((0, 1), repeat=size):
        yield BooleanNetwork(n, np.array(bits, dtype=np.uint8).reshape(n, 1 << n))


@st.composite
def networks(draw, min_n=1, max_n=4):
    n = draw(st.integers(min_n, max_n))
    bits = draw(st.lists(st.integers(0, 1), min_size=n << n, max_size=n << n))
    return BooleanNetwork(n, np.array(bits, dtype=np.uint8).reshape(n, 1 << n))


@st.composite
def configurations(draw, n=None, max_n=8):
    if n is None:
        n = draw(st.integers(1, max_n))
    return Configuration(n, draw(st.integers(0, (1 << n) - 1)))


def lit(text):
    return Configuration.from_literal(text)


@pytest.fixture
def identity2():
    return BooleanNetwork.identity(2)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
