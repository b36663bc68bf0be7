import os
import subprocess
import sys
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from sepcodes import _kernels, _pykernels
from sepcodes.bounds import triple_set
from sepcodes.core import Code, CodeParams, onehot
from sepcodes.verify import is_frameproof, is_separable

from oracles import brute_separable

compiled = pytest.mark.skipif("cython" not in _kernels.backends(), reason="compiled kernels not built")


def test_unrank_subset_matches_enumeration():
    for m in range(1, 7):
        order = [X for k in range(1, m + 1) for X in combinations(range(m), k)]
        assert [_kernels.unrank_subset(m, i) for i in range(len(order))] == order
        with pytest.raises(IndexError):
            _kernels.unrank_subset(m, len(order))


def test_select():
    assert _kernels.select(10, "python") is _pykernels
    assert _kernels.select(200) is _pykernels
    with pytest.raises(ValueError):
        _kernels.select(10, "fortran")
    if "cython" in _kernels.backends():
        assert _kernels.select(64) is _kernels.backends()["cython"]
        with pytest.raises(ValueError):
            _kernels.select(65, "cython")


def test_wide_words_use_python_kernels():
    # n*q = 100 bits, beyond one machine word
    p = CodeParams(50, 2)
    code = Code(p, ((0, 49), (49, 0), (0, 0), (49, 49), (7, 7)))
    ok, w = is_separable(code, 2)
    assert not ok
    assert (w.X, w.X_prime) == ((0, 1), (2, 3))
    assert (w.X, w.X_prime) == brute_separable(code.words, 2)[1:]
    assert not is_frameproof(code, 2)[0]


packed_st = st.integers(2, 4).flatmap(
    lambda q: st.integers(2, 4).flatmap(
        lambda n: st.tuples(
            st.just((q, n)),
            st.lists(st.tuples(*[st.integers(0, q - 1)] * n), min_size=1, max_size=8),
        )
    )
)


@compiled
@settings(max_examples=200, deadline=None)
@given(packed_st, st.integers(1, 3))
def test_detection_kernels_agree(data, t):
    (q, n), words = data
    cy = _kernels.backends()["cython"]
    o = [onehot(w, q) for w in words]
    assert cy.frameproof_witness(o, t) == _pykernels.frameproof_witness(o, t)
    for first in (True, False):
        assert cy.separable_candidates(o, t, first) == _pykernels.separable_candidates(o, t, first)
    assert cy.t2_events(o) == _pykernels.t2_events(o)
    if t >= 2:
        T = t + 1
        triples = triple_set(T).triples
        assert cy.general_events(o, n, T, triples) == _pykernels.general_events(o, n, T, triples)


@compiled
@settings(max_examples=60, deadline=None)
@given(st.integers(2, 3), st.integers(2, 3), st.integers(1, 3), st.booleans(), st.randoms())
def test_search_kernels_agree(q, n, t, separable, rnd):
    cy = _kernels.backends()["cython"]
    words = [tuple((i // q**k) % q for k in reversed(range(n))) for i in range(q**n)]
    o = [onehot(w, q) for w in words]
    order = list(range(len(o)))
    rnd.shuffle(order)
    assert cy.greedy_insert(o, order, t, separable) == _pykernels.greedy_insert(o, order, t, separable)
    second = rnd.randrange(1, len(o))
    assert cy.search_branch(o, t, separable, second, 1) == _pykernels.search_branch(o, t, separable, second, 1)


def test_env_var_forces_python():
    env = dict(os.environ, SEPCODES_PURE_PYTHON="1")
    proc = subprocess.run(
        [sys.executable, "-c", "from sepcodes import _kernels; print(_kernels.BACKEND, sorted(_kernels.backends()))"],
        capture_output=True, text=True, env=env, check=True,
    )
    assert proc.stdout.strip() == "python ['python']"


def test_benchmark_runs():
    proc = subprocess.run(
        [sys.executable, "benchmarks/bench_kernels.py", "--repeat", "1"],
        capture_output=True, text=True, check=True,
        cwd=os.path.dirname(os.path.dirname(os.path.abspath(__file__))),
    )
    assert "search (3,3,2) separable" in proc.stdout
