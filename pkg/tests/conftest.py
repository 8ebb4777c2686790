import itertools

import pytest
from hypothesis import settings, strategies as st

from arcbrick.arcs import Arc

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def brute_arcs(n):
    """Every (left, right, word) triple, built without the library's enumerator."""
    out = []
    for left in range(n):
        for right in range(left + 1, n + 1):
            for word in itertools.product("uo", repeat=right - left - 1):
                out.append((left, "".join(word)))
    return out


@st.composite
def arcs_st(draw, n=None, min_n=1, max_n=6):
    if n is None:
        n = draw(st.integers(min_n, max_n))
    left = draw(st.integers(0, n - 1))
    length = draw(st.integers(0, n - left - 1))
    word = draw(st.text(alphabet="uo", min_size=length, max_size=length))
    return Arc(left, word, n)


@st.composite
def arc_pairs_st(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    return draw(arcs_st(n=n)), draw(arcs_st(n=n))


def A(left, pattern, n):
    return Arc(left, pattern, n)


@pytest.fixture
def arc():
    return A
