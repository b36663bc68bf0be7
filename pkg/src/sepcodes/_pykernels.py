"""Pure-Python kernels.

Every word is passed in packed one-hot form (see :func:`sepcodes.core.onehot`),
so the profile of a set is the OR of its members and the agreement count of
two words is ``(a & b).bit_count()``. Python integers are unbounded, so these
kernels accept any (q, n). The compiled kernels in ``_ckernels.pyx`` mirror
them line for line on 64-bit words and must return identical results.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence


def frameproof_witness(onehots: Sequence[int], t: int):
    """First (X, c) in (|X|, X, c) order with c outside X and c in desc(X)."""
    m = len(onehots)
    for k in range(1, min(t, m) + 1):
        for X in combinations(range(m), k):
            p = 0
            for i in X:
                p |= onehots[i]
            for c in range(m):
                if c in X:
                    continue
                if onehots[c] & ~p == 0:
                    return X, c
    return None


def separable_candidates(onehots: Sequence[int], t: int, first_only: bool):
    """Hash-index collision scan over all subsets of size <= t.

    Subsets are numbered serially in (size, lex) order. For every profile that
    occurs twice, the serials of its first two subsets are reported. Scanning
    stops once no later subset size can give a smaller total |X| + |X'|.
    """
    m = len(onehots)
    first: dict[int, tuple[int, int]] = {}
    done: set[int] = set()
    out = []
    best_total = 1 << 30
    serial = 0
    for k in range(1, min(t, m) + 1):
        if k >= best_total:
            break
        for X in combinations(range(m), k):
            p = 0
            for i in X:
                p |= onehots[i]
            hit = first.get(p)
            if hit is None:
                first[p] = (serial, k)
            elif p not in done:
                done.add(p)
                out.append((hit[0], serial))
                best_total = min(best_total, hit[1] + k)
                if first_only:
                    return out
            serial += 1
    return out


def t2_events(onehots: Sequence[int]):
    """E-events (equal pairs) and F-events (pair/pair profile collisions) for t = 2.

    Returns ``(e_events, f_events, f_candidates)`` where ``f_candidates`` is the
    number of index quadruples examined.
    """
    m = len(onehots)
    e = [(i, j) for i, j in combinations(range(m), 2) if onehots[i] == onehots[j]]
    f = []
    examined = 0
    for a, b, c, d in combinations(range(m), 4):
        for i, j, i2, j2 in ((a, b, c, d), (a, c, b, d), (a, d, b, c)):
            examined += 1
            if onehots[i] | onehots[j] == onehots[i2] | onehots[j2]:
                f.append((i, j, i2, j2))
    return e, f, examined


def _or(onehots, idx) -> int:
    p = 0
    for i in idx:
        p |= onehots[i]
    return p


def general_events(onehots: Sequence[int], n: int, t: int, triples):
    """E/F/G events of the t >= 3 construction.

    E: i < j agreeing in at least n/(t-1) positions.
    F: disjoint (A, B, B') with (|A|, |B|, |B'|) in ``triples`` and
       desc(A u B) == desc(A u B'); triples with A u B' empty never fire.
    G: (A, j, j'), |A| = t-1, j < j' outside A, agreeing in fewer
       than n/(t-1) positions, with desc(A u {j}) == desc(A u {j'}).
    """
    m = len(onehots)
    idx = range(m)
    e = [
        (i, j)
        for i, j in combinations(idx, 2)
        if (onehots[i] & onehots[j]).bit_count() * (t - 1) >= n
    ]
    f = []
    for r, s, s2 in triples:
        if r + s2 == 0:
            continue
        for A in combinations(idx, r):
            pa = _or(onehots, A)
            rest = [i for i in idx if i not in A]
            for B in combinations(rest, s):
                pab = pa | _or(onehots, B)
                rest2 = [i for i in rest if i not in B]
                for B2 in combinations(rest2, s2):
                    if pab == pa | _or(onehots, B2):
                        f.append((r, s, s2, A, B, B2))
    g = []
    for A in combinations(idx, t - 1):
        pa = _or(onehots, A)
        rest = [i for i in idx if i not in A]
        for pos, j in enumerate(rest):
            pj = pa | onehots[j]
            for j2 in rest[pos + 1 :]:
                if (onehots[j] & onehots[j2]).bit_count() * (t - 1) >= n:
                    continue
                if pj == pa | onehots[j2]:
                    g.append((A, j, j2))
    return e, f, g


class _Partial:
    """Partial code with cached subset profiles for incremental property checks."""

    def __init__(self, onehots: Sequence[int], t: int, separable: bool):
        self.o = onehots
        self.t = t
        self.separable = separable
        self.code: list[int] = []
        # by_size[k]: profiles of all k-subsets of the partial code
        top = t if not separable else t - 1
        self.by_size: list[list[int]] = [[0]] + [[] for _ in range(top)]
        self.top = top
        self.seen: set[int] = set()
        self.log: list[tuple[list[int], list[int]]] = []

    def try_add(self, w: int) -> bool:
        o = self.o
        ow = o[w]
        t = self.t
        if self.separable:
            new = []
            fresh: set[int] = set()
            for k in range(min(t - 1, len(self.code)) + 1):
                for p in self.by_size[k]:
                    pn = p | ow
                    if pn in self.seen or pn in fresh:
                        return False
                    fresh.add(pn)
                    new.append((k + 1, pn))
        else:
            # w must not lie in desc(X) for an existing X with |X| <= t
            for k in range(1, min(t, len(self.code)) + 1):
                for p in self.by_size[k]:
                    if ow & ~p == 0:
                        return False
            # no existing codeword may lie in desc(S u {w}) outside S
            new = []
            for k in range(min(t - 1, len(self.code)) + 1):
                for p in self.by_size[k]:
                    pn = p | ow
                    inside = 0
                    for c in self.code:
                        if o[c] & ~pn == 0:
                            inside += 1
                    if inside > k:
                        return False
                    new.append((k + 1, pn))
        lengths = [len(b) for b in self.by_size]
        added = []
        for size, pn in new:
            if size <= self.top:
                self.by_size[size].append(pn)
            if self.separable:
                self.seen.add(pn)
                added.append(pn)
        self.code.append(w)
        self.log.append((lengths, added))
        return True

    def pop(self) -> None:
        lengths, added = self.log.pop()
        self.code.pop()
        for k, ln in enumerate(lengths):
            del self.by_size[k][ln:]
        for pn in added:
            self.seen.discard(pn)


def search_branch(onehots: Sequence[int], t: int, separable: bool, second: int, floor: int):
    """Depth-first search for the largest code containing word 0 and word ``second``.

    Candidates are tried in index order after ``second``; only codes larger
    than ``floor`` are recorded. Returns ``(best_size, best_code, nodes)``
    with ``best_size == 0`` when nothing beats ``floor``.
    """
    total = len(onehots)
    st = _Partial(onehots, t, separable)
    best = [floor, []]
    nodes = 0
    if not st.try_add(0) or not st.try_add(second):
        return 0, [], 0

    def dfs(start: int, size: int) -> None:
        nonlocal nodes
        nodes += 1
        if size > best[0]:
            best[0] = size
            best[1] = list(st.code)
        for w in range(start, total):
            if size + (total - w) <= best[0]:
                break
            if st.try_add(w):
                dfs(w + 1, size + 1)
                st.pop()

    dfs(second + 1, 2)
    if best[0] == floor and not best[1]:
        return 0, [], nodes
    return best[0], best[1], nodes


def greedy_insert(onehots: Sequence[int], order: Sequence[int], t: int, separable: bool) -> list[int]:
    st = _Partial(onehots, t, separable)
    for w in order:
        st.try_add(w)
    return list(st.code)
