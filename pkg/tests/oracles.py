"""Brute-force reference implementations used as independent test oracles.

Descendant sets are materialised as explicit sets of tuples via
itertools.product, so nothing here shares code with the bitmask kernels.
"""

from itertools import combinations, product


def desc_set(words):
    words = list(words)
    n = len(words[0])
    return frozenset(product(*[sorted({w[k] for w in words}) for k in range(n)]))


def subsets(m, t):
    for k in range(1, min(t, m) + 1):
        yield from combinations(range(m), k)


def brute_frameproof(words, t):
    """(ok, X, c) with the least (|X|, X, c) witness."""
    for X in subsets(len(words), t):
        d = desc_set(words[i] for i in X)
        for c in range(len(words)):
            if c not in X and words[c] in d:
                return False, X, c
    return True, None, None


def brute_separable(words, t):
    """(ok, X, X') with the least (|X|+|X'|, X, X') witness, X before X' in (size, lex) order."""
    subs = list(subsets(len(words), t))
    descs = [desc_set(words[i] for i in X) for X in subs]
    best = None
    for a in range(len(subs)):
        for b in range(a + 1, len(subs)):
            if descs[a] == descs[b]:
                key = (len(subs[a]) + len(subs[b]), subs[a], subs[b])
                if best is None or key < best:
                    best = key
    if best is None:
        return True, None, None
    return False, best[1], best[2]


def separability_violations(words, t):
    """Every pair of distinct index sets of size <= t with equal descendant sets."""
    subs = list(subsets(len(words), t))
    descs = [desc_set(words[i] for i in X) for X in subs]
    for a in range(len(subs)):
        for b in range(a + 1, len(subs)):
            if descs[a] == descs[b]:
                yield subs[a], subs[b]


def best_code_size(all_words, t, check):
    """Largest subset of ``all_words`` passing ``check`` by full enumeration."""
    m = len(all_words)
    for size in range(m, 0, -1):
        for S in combinations(range(m), size):
            if check([all_words[i] for i in S], t):
                return size
    return 0
