import os
import subprocess
import sys

import numpy as np
import pytest

from arcbrick import kernels
from arcbrick.arcs import crossing_report, directed_pairs, enumerate_arcs, is_weak_pair_arcs

needs_numba = pytest.mark.skipif(not kernels.HAVE_NUMBA, reason="numba not installed")


@pytest.mark.parametrize("n", range(1, 7))
def test_numpy_pair_counts_match_scalar_scan(n):
    arcs = enumerate_arcs(n)
    hom, shared = kernels.pair_counts(arcs, use_jit=False)
    for a, g1 in enumerate(arcs):
        for b, g2 in enumerate(arcs):
            r = crossing_report(g1, g2)
            assert hom[a, b] == len(directed_pairs(g1, g2))
            if a != b:
                assert shared[a, b] == r.shared_directed_1to2


@needs_numba
@pytest.mark.parametrize("n", range(1, 7))
def test_jit_pair_counts_match_numpy(n):
    arcs = enumerate_arcs(n)
    h1, s1 = kernels.pair_counts(arcs, use_jit=True)
    h2, s2 = kernels.pair_counts(arcs, use_jit=False)
    assert np.array_equal(h1, h2) and np.array_equal(s1, s2)


@pytest.mark.parametrize("n", range(1, 5))
def test_weak_allowed_matches_predicate(n):
    arcs = enumerate_arcs(n)
    allowed = kernels.weak_allowed(arcs)
    expect = np.array([[is_weak_pair_arcs(x, y) for y in arcs] for x in arcs])
    assert np.array_equal(allowed, expect)


@needs_numba
@pytest.mark.parametrize("n", range(1, 6))
def test_longest_jit_and_fallback_agree(n):
    allowed = kernels.weak_allowed(enumerate_arcs(n))
    a = kernels.longest_compatible(allowed, None, use_jit=True)
    b = kernels.longest_compatible(allowed, None, use_jit=False)
    assert len(a) == len(b) == max(1, 2 * n - 2)


def test_disable_flag_forces_fallback():
    env = dict(os.environ, ARCBRICK_DISABLE_JIT="1")
    out = subprocess.run([sys.executable, "-c", "from arcbrick import kernels; print(kernels.HAVE_NUMBA)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "False"


def test_encode_sentinel():
    arcs = enumerate_arcs(2)
    left, right, letters = kernels.encode(arcs)
    assert letters.dtype == np.int8
    assert list(left) == [g.left for g in arcs]
    assert letters[0, 0] == 9
