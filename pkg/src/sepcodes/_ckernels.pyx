# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled kernels on 64-bit packed words (n * q <= 64).

Semantics, argument conventions and output order are identical to
``sepcodes._pykernels``; see that module for the definitions.
"""

from cython.operator cimport dereference as deref
from libc.stdint cimport uint64_t
from libcpp.unordered_map cimport unordered_map
from libcpp.unordered_set cimport unordered_set
from libcpp.vector cimport vector


cdef extern from *:
    int popcount64 "__builtin_popcountll"(unsigned long long)


cdef inline bint next_comb(int* c, int k, int m) noexcept nogil:
    """Advance c[0..k) to the next k-combination of range(m) in lex order."""
    cdef int i = k - 1
    cdef int j
    while i >= 0 and c[i] == m - k + i:
        i -= 1
    if i < 0:
        return False
    c[i] += 1
    for j in range(i + 1, k):
        c[j] = c[j - 1] + 1
    return True


cdef inline void first_comb(int* c, int k) noexcept nogil:
    cdef int i
    for i in range(k):
        c[i] = i


cdef vector[uint64_t] _load(onehots):
    cdef vector[uint64_t] v
    v.reserve(len(onehots))
    for x in onehots:
        v.push_back(<uint64_t>x)
    return v


def frameproof_witness(onehots, int t):
    cdef vector[uint64_t] o = _load(onehots)
    cdef int m = <int>o.size()
    cdef int k, i, c, pos
    cdef uint64_t p
    cdef vector[int] comb
    comb.resize(max(t, 1) + 1)
    for k in range(1, min(t, m) + 1):
        first_comb(&comb[0], k)
        while True:
            p = 0
            for i in range(k):
                p |= o[comb[i]]
            pos = 0
            for c in range(m):
                if pos < k and comb[pos] == c:
                    pos += 1
                    continue
                if (o[c] & ~p) == 0:
                    return tuple([comb[i] for i in range(k)]), c
            if not next_comb(&comb[0], k, m):
                break
    return None


def separable_candidates(onehots, int t, bint first_only):
    cdef vector[uint64_t] o = _load(onehots)
    cdef int m = <int>o.size()
    cdef unordered_map[uint64_t, long long] first
    cdef unordered_map[uint64_t, long long].iterator it
    cdef unordered_set[uint64_t] done
    cdef long long serial = 0, hit
    cdef int best_total = 1 << 30
    cdef int k, i, hk
    cdef uint64_t p
    cdef vector[int] comb
    comb.resize(max(t, 1) + 1)
    out = []
    for k in range(1, min(t, m) + 1):
        if k >= best_total:
            break
        first_comb(&comb[0], k)
        while True:
            p = 0
            for i in range(k):
                p |= o[comb[i]]
            it = first.find(p)
            if it == first.end():
                first[p] = (serial << 8) | k
            elif done.count(p) == 0:
                done.insert(p)
                hit = deref(it).second >> 8
                hk = <int>(deref(it).second & 0xFF)
                out.append((hit, serial))
                if hk + k < best_total:
                    best_total = hk + k
                if first_only:
                    return out
            serial += 1
            if not next_comb(&comb[0], k, m):
                break
    return out


def t2_events(onehots):
    cdef vector[uint64_t] o = _load(onehots)
    cdef int m = <int>o.size()
    cdef int a, b, c, d
    cdef long long examined = 0
    e = []
    f = []
    for a in range(m):
        for b in range(a + 1, m):
            if o[a] == o[b]:
                e.append((a, b))
    for a in range(m):
        for b in range(a + 1, m):
            for c in range(b + 1, m):
                for d in range(c + 1, m):
                    examined += 3
                    if (o[a] | o[b]) == (o[c] | o[d]):
                        f.append((a, b, c, d))
                    if (o[a] | o[c]) == (o[b] | o[d]):
                        f.append((a, c, b, d))
                    if (o[a] | o[d]) == (o[b] | o[c]):
                        f.append((a, d, b, c))
    return e, f, examined


cdef int _complement(int m, int* chosen, int k, int* out) noexcept nogil:
    """Write range(m) minus the sorted chosen[0..k) into out; return its length."""
    cdef int i, pos = 0, n_out = 0
    for i in range(m):
        if pos < k and chosen[pos] == i:
            pos += 1
            continue
        out[n_out] = i
        n_out += 1
    return n_out


cdef int _complement_of(int* base, int nb, int* chosen_pos, int k, int* out) noexcept nogil:
    """Write base minus base[chosen_pos[0..k)] into out (order kept); return its length."""
    cdef int i, pos = 0, n_out = 0
    for i in range(nb):
        if pos < k and chosen_pos[pos] == i:
            pos += 1
            continue
        out[n_out] = base[i]
        n_out += 1
    return n_out


def general_events(onehots, int n, int t, triples):
    cdef vector[uint64_t] o = _load(onehots)
    cdef int m = <int>o.size()
    cdef int i, j, j2, r, s, s2, nrest, nrest2, kk
    cdef uint64_t pa, pab, pb2, pj
    cdef vector[int] ca, cb, cb2, rest, rest2
    ca.resize(m + t + 2)
    cb.resize(m + t + 2)
    cb2.resize(m + t + 2)
    rest.resize(m + 1)
    rest2.resize(m + 1)
    e = []
    f = []
    g = []
    for i in range(m):
        for j in range(i + 1, m):
            if popcount64(o[i] & o[j]) * (t - 1) >= n:
                e.append((i, j))
    for trip in triples:
        r, s, s2 = trip
        if r + s2 == 0 or r > m:
            continue
        first_comb(&ca[0], r)
        while True:
            pa = 0
            for i in range(r):
                pa |= o[ca[i]]
            nrest = _complement(m, &ca[0], r, &rest[0])
            if s <= nrest:
                first_comb(&cb[0], s)
                while True:
                    pab = pa
                    for i in range(s):
                        pab |= o[rest[cb[i]]]
                    nrest2 = _complement_of(&rest[0], nrest, &cb[0], s, &rest2[0])
                    if s2 <= nrest2:
                        first_comb(&cb2[0], s2)
                        while True:
                            pb2 = pa
                            for i in range(s2):
                                pb2 |= o[rest2[cb2[i]]]
                            if pb2 == pab:
                                f.append((
                                    r, s, s2,
                                    tuple([ca[i] for i in range(r)]),
                                    tuple([rest[cb[i]] for i in range(s)]),
                                    tuple([rest2[cb2[i]] for i in range(s2)]),
                                ))
                            if s2 == 0 or not next_comb(&cb2[0], s2, nrest2):
                                break
                    if not next_comb(&cb[0], s, nrest):
                        break
            if r == 0 or not next_comb(&ca[0], r, m):
                break
    r = t - 1
    if r <= m:
        first_comb(&ca[0], r)
        while True:
            pa = 0
            for i in range(r):
                pa |= o[ca[i]]
            nrest = _complement(m, &ca[0], r, &rest[0])
            for i in range(nrest):
                j = rest[i]
                pj = pa | o[j]
                for s in range(i + 1, nrest):
                    j2 = rest[s]
                    if popcount64(o[j] & o[j2]) * (t - 1) >= n:
                        continue
                    if pj == (pa | o[j2]):
                        g.append((tuple([ca[kk] for kk in range(r)]), j, j2))
            if not next_comb(&ca[0], r, m):
                break
    return e, f, g


cdef class _Search:
    cdef vector[uint64_t] o
    cdef int t
    cdef bint separable
    cdef int top
    cdef int total
    cdef vector[int] code
    cdef vector[vector[uint64_t]] by_size
    cdef unordered_set[uint64_t] seen
    # undo log: per level, the by_size lengths and the profiles added to seen
    cdef vector[vector[size_t]] log_lengths
    cdef vector[vector[uint64_t]] log_added
    cdef vector[uint64_t] new_p
    cdef vector[int] new_k
    cdef unordered_set[uint64_t] fresh
    cdef int best
    cdef vector[int] best_code
    cdef long long nodes

    def __init__(self, onehots, int t, bint separable):
        self.o = _load(onehots)
        self.total = <int>self.o.size()
        self.t = t
        self.separable = separable
        self.top = t - 1 if separable else t
        self.by_size.resize(self.top + 1)
        self.by_size[0].push_back(0)

    cdef bint try_add(self, int w):
        cdef uint64_t ow = self.o[w]
        cdef uint64_t p, pn
        cdef int k, kmax, inside
        cdef size_t a, c
        cdef int ncode = <int>self.code.size()
        self.new_p.clear()
        self.new_k.clear()
        kmax = self.t - 1 if self.t - 1 < ncode else ncode
        if self.separable:
            self.fresh.clear()
            for k in range(kmax + 1):
                for a in range(self.by_size[k].size()):
                    pn = self.by_size[k][a] | ow
                    if self.seen.count(pn) or self.fresh.count(pn):
                        return False
                    self.fresh.insert(pn)
                    self.new_p.push_back(pn)
                    self.new_k.push_back(k + 1)
        else:
            for k in range(1, (self.t if self.t < ncode else ncode) + 1):
                for a in range(self.by_size[k].size()):
                    if (ow & ~self.by_size[k][a]) == 0:
                        return False
            for k in range(kmax + 1):
                for a in range(self.by_size[k].size()):
                    pn = self.by_size[k][a] | ow
                    inside = 0
                    for c in range(<size_t>ncode):
                        if (self.o[self.code[c]] & ~pn) == 0:
                            inside += 1
                    if inside > k:
                        return False
                    self.new_p.push_back(pn)
                    self.new_k.push_back(k + 1)
        cdef vector[size_t] lengths
        cdef vector[uint64_t] added
        for k in range(self.top + 1):
            lengths.push_back(self.by_size[k].size())
        for a in range(self.new_p.size()):
            if self.new_k[a] <= self.top:
                self.by_size[self.new_k[a]].push_back(self.new_p[a])
            if self.separable:
                self.seen.insert(self.new_p[a])
                added.push_back(self.new_p[a])
        self.code.push_back(w)
        self.log_lengths.push_back(lengths)
        self.log_added.push_back(added)
        return True

    cdef void pop(self):
        cdef size_t a
        cdef int k
        cdef vector[size_t] lengths = self.log_lengths.back()
        cdef vector[uint64_t] added = self.log_added.back()
        self.log_lengths.pop_back()
        self.log_added.pop_back()
        self.code.pop_back()
        for k in range(self.top + 1):
            self.by_size[k].resize(lengths[k])
        for a in range(added.size()):
            self.seen.erase(added[a])

    cdef void dfs(self, int start, int size):
        cdef int w
        self.nodes += 1
        if size > self.best:
            self.best = size
            self.best_code = self.code
        for w in range(start, self.total):
            if size + (self.total - w) <= self.best:
                break
            if self.try_add(w):
                self.dfs(w + 1, size + 1)
                self.pop()

    def run(self, int second, int floor):
        self.best = floor
        self.best_code.clear()
        self.nodes = 0
        if not self.try_add(0) or not self.try_add(second):
            return 0, [], 0
        self.dfs(second + 1, 2)
        if self.best == floor and self.best_code.size() == 0:
            return 0, [], self.nodes
        return self.best, [self.best_code[i] for i in range(self.best_code.size())], self.nodes

    def greedy(self, order):
        for w in order:
            self.try_add(w)
        return [self.code[i] for i in range(self.code.size())]


def search_branch(onehots, int t, bint separable, int second, int floor):
    return _Search(onehots, t, separable).run(second, floor)


def greedy_insert(onehots, order, int t, bint separable):
    return _Search(onehots, t, separable).greedy(order)
