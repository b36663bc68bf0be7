"""Exhaustive and greedy search for large frameproof / separable codes.

The exhaustive search is a depth-first search over words in lexicographic
order with incremental property checks and a counting bound. Two symmetry
reductions are applied, both sound because the properties only depend on
per-coordinate patterns of symbol equality:

* the least codeword is the all-zero word (relabel symbols per coordinate);
* the second least codeword has all symbols in {0, 1}. Pick the remaining
  word whose zero/nonzero pattern is lexicographically least and relabel its
  nonzero symbols to 1; every other word then compares greater.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from sepcodes import _kernels
from sepcodes.core import Code, CodeError, CodeParams, index_to_word, onehot

PROPERTIES = ("separable", "frameproof")
DEFAULT_CAP = 256
GREEDY_CAP = 1 << 20


class SearchTooLarge(CodeError):
    pass


@dataclass(frozen=True)
class SearchResult:
    q: int
    n: int
    t: int
    property: str
    optimum: int
    witness_code: Code
    nodes_explored: int

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "t": self.t,
            "property": self.property,
            "optimum": self.optimum,
            "witness_code": [list(w) for w in self.witness_code.words],
            "nodes_explored": self.nodes_explored,
        }


def _check(params: CodeParams, t: int, prop: str) -> None:
    if prop not in PROPERTIES:
        raise ValueError(f"property must be one of {PROPERTIES}, got {prop!r}")
    if t < 1:
        raise CodeError(f"t must be >= 1, got {t}")


def _all_words(params: CodeParams):
    words = [index_to_word(i, params) for i in range(params.space_size)]
    return words, [onehot(w, params.q) for w in words]


def greedy_max(
    params: CodeParams, t: int, prop: str, seed: int = 0, *, backend: str | None = None
) -> Code:
    """Shuffle F^n with ``seed`` and insert each word that keeps the property."""
    _check(params, t, prop)
    if params.space_size > GREEDY_CAP:
        raise SearchTooLarge(f"q^n = {params.space_size} words is too many for greedy search")
    words, onehots = _all_words(params)
    order = list(range(len(words)))
    random.Random(seed).shuffle(order)
    kern = _kernels.select(params.n * params.q, backend)
    chosen = kern.greedy_insert(onehots, order, t, prop == "separable")
    return Code(params, tuple(words[i] for i in chosen))


def _branch(args):
    name, onehots, t, separable, second, floor = args
    kern = _kernels.backends()[name]
    return kern.search_branch(onehots, t, separable, second, floor)


def max_code(
    params: CodeParams,
    t: int,
    prop: str,
    *,
    cap: int = DEFAULT_CAP,
    jobs: int = 1,
    backend: str | None = None,
) -> SearchResult:
    """Largest code with the property, certified by exhausting the search tree.

    Each top-level branch (choice of the second codeword) is searched on its
    own, seeded with the greedy lower bound, so results and node counts do not
    depend on ``jobs``. Among maximum codes the lexicographically least one in
    the reduced search space is returned.
    """
    _check(params, t, prop)
    if params.space_size > cap:
        raise SearchTooLarge(
            f"q^n = {params.space_size} exceeds the exhaustive-search cap {cap}; use greedy mode"
        )
    words, onehots = _all_words(params)
    separable = prop == "separable"
    lower = len(greedy_max(params, t, prop, seed=0, backend=backend))
    floor = lower - 1
    seconds = [i for i in range(1, len(words)) if max(words[i]) <= 1]
    kern = _kernels.select(params.n * params.q, backend)
    name = "cython" if kern is _kernels.backends().get("cython") else "python"
    tasks = [(name, onehots, t, separable, s, floor) for s in seconds]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_branch, tasks))
    else:
        results = [_branch(task) for task in tasks]
    best_size, best_code, nodes = 0, [], 0
    for size, code, explored in results:
        nodes += explored
        if size > best_size:
            best_size, best_code = size, code
    if best_size == 0:
        # only possible if the optimum is a single word
        best_size, best_code = 1, [0]
    return SearchResult(
        params.q, params.n, t, prop, best_size,
        Code(params, tuple(words[i] for i in best_code)), nodes,
    )
