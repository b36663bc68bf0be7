"""Exact decision procedures for the frameproof and separable properties.

Subsets are index tuples into ``code.words``, enumerated by size and then
lexicographically. Witnesses are chosen deterministically:

* frameproof: smallest ``(|X|, X, c)``;
* separable: smallest ``(|X| + |X'|, X, X')`` where X precedes X' in the
  enumeration order.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from sepcodes import _kernels
from sepcodes.core import Code, CodeError, DescendantProfile, Word, desc_profile, onehot


@dataclass(frozen=True, slots=True)
class FrameproofWitness:
    X: tuple[int, ...]
    c: int
    profile: DescendantProfile


@dataclass(frozen=True, slots=True)
class SeparabilityWitness:
    X: tuple[int, ...]
    X_prime: tuple[int, ...]
    profile: DescendantProfile


def _check_args(code: Code, t: int) -> None:
    if t < 1:
        raise CodeError(f"t must be >= 1, got {t}")
    if len(code) == 0:
        raise CodeError("code must be nonempty")


def _packed(code: Code) -> list[int]:
    q = code.params.q
    return [onehot(w, q) for w in code.words]


def _width(code: Code) -> int:
    return code.params.n * code.params.q


def subsets_upto(m: int, t: int) -> Iterator[tuple[int, ...]]:
    """Nonempty subsets of range(m) with at most ``t`` elements, by size then lex."""
    for k in range(1, min(t, m) + 1):
        yield from combinations(range(m), k)


def is_frameproof(
    code: Code, t: int, *, backend: str | None = None
) -> tuple[bool, FrameproofWitness | None]:
    """Decide whether ``code`` is t-frameproof.

    Returns ``(True, None)`` or ``(False, witness)`` where the witness word
    ``c`` lies in desc(X) but not in X.
    """
    _check_args(code, t)
    kern = _kernels.select(_width(code), backend)
    hit = kern.frameproof_witness(_packed(code), t)
    if hit is None:
        return True, None
    X, c = hit
    X = tuple(X)
    return False, FrameproofWitness(X, c, desc_profile((code[i] for i in X), code.params))


def separable_naive(code: Code, t: int) -> tuple[bool, SeparabilityWitness | None]:
    """Oracle: compare the profiles of every pair of subsets of size <= t."""
    _check_args(code, t)
    subsets = list(subsets_upto(len(code), t))
    profiles = [desc_profile((code[i] for i in X), code.params) for X in subsets]
    best = None
    for a in range(len(subsets)):
        for b in range(a + 1, len(subsets)):
            if profiles[a] == profiles[b]:
                key = (len(subsets[a]) + len(subsets[b]), subsets[a], subsets[b])
                if best is None or key < best[0]:
                    best = (key, a)
    if best is None:
        return True, None
    _, X, X2 = best[0]
    return False, SeparabilityWitness(X, X2, profiles[best[1]])


def separable_hash(
    code: Code, t: int, *, backend: str | None = None
) -> tuple[bool, SeparabilityWitness | None]:
    """Single pass over subsets with a hash index of packed profiles."""
    _check_args(code, t)
    m = len(code)
    kern = _kernels.select(_width(code), backend)
    pairs = kern.separable_candidates(_packed(code), t, False)
    if not pairs:
        return True, None
    best = None
    for sa, sb in pairs:
        X = _kernels.unrank_subset(m, sa)
        X2 = _kernels.unrank_subset(m, sb)
        key = (len(X) + len(X2), X, X2)
        if best is None or key < best:
            best = key
    _, X, X2 = best
    return False, SeparabilityWitness(X, X2, desc_profile((code[i] for i in X), code.params))


def is_separable(
    code: Code, t: int, *, method: str = "hash", backend: str | None = None
) -> tuple[bool, SeparabilityWitness | None]:
    """Decide whether ``code`` is t-bar-separable.

    ``method`` is ``"hash"`` (default) or ``"naive"``; both return the same
    verdict and the same witness.
    """
    if method == "hash":
        return separable_hash(code, t, backend=backend)
    if method == "naive":
        return separable_naive(code, t)
    raise ValueError(f"unknown method {method!r}")


def uniquely_determined(code: Code, L: Iterable[int]) -> frozenset[int]:
    """Indices of codewords whose restriction to positions ``L`` (0-based) is unique."""
    L = sorted(set(L))
    if not L:
        raise CodeError("position set L must be nonempty")
    for k in L:
        if not 0 <= k < code.params.n:
            raise CodeError(f"position {k} out of range for n={code.params.n}")
    counts: dict[tuple[int, ...], list[int]] = defaultdict(list)
    for i, w in enumerate(code.words):
        counts[tuple(w[k] for k in L)].append(i)
    return frozenset(idx[0] for idx in counts.values() if len(idx) == 1)


def suffix_table(code: Code, r: int) -> dict[Word, frozenset[Word]]:
    """Map each length-r prefix occurring in ``code`` to its set of suffixes."""
    if not 1 <= r < code.params.n:
        raise CodeError(f"prefix length r must satisfy 1 <= r < n={code.params.n}, got {r}")
    table: dict[Word, set[Word]] = defaultdict(set)
    for w in code.words:
        table[w[:r]].add(w[r:])
    return {a: frozenset(s) for a, s in table.items()}


def balanced_partitions(n: int, parts: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Partitions of range(n) into ``parts`` nonempty blocks of size <= ceil(n/parts).

    Blocks are listed by their smallest element, so each partition appears once.
    """
    if parts < 1 or parts > n:
        return
    cap = -(-n // parts)

    def rec(i: int, blocks: list[list[int]]):
        if i == n:
            if len(blocks) == parts:
                yield tuple(tuple(b) for b in blocks)
            return
        if len(blocks) + (n - i) < parts:
            return
        for b in blocks:
            if len(b) < cap:
                b.append(i)
                yield from rec(i + 1, blocks)
                b.pop()
        if len(blocks) < parts:
            blocks.append([i])
            yield from rec(i + 1, blocks)
            blocks.pop()

    yield from rec(0, [])
