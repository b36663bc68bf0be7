"""Words, codes and descendant sets over the alphabet {0, ..., q-1}."""

from __future__ import annotations

import struct
from dataclasses import dataclass
from typing import Iterable, Sequence

Word = tuple[int, ...]


class CodeError(ValueError):
    """Raised for malformed parameters, words or codes."""


@dataclass(frozen=True, slots=True)
class CodeParams:
    q: int
    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.q, int) or self.q < 2:
            raise CodeError(f"alphabet size q must be an integer >= 2, got {self.q!r}")
        if not isinstance(self.n, int) or self.n < 2:
            raise CodeError(f"word length n must be an integer >= 2, got {self.n!r}")

    @property
    def space_size(self) -> int:
        return self.q**self.n


def make_word(symbols: Iterable[int], params: CodeParams) -> Word:
    """Validate ``symbols`` against ``params`` and return it as an immutable word."""
    w = tuple(int(s) for s in symbols)
    if len(w) != params.n:
        raise CodeError(f"word {w} has length {len(w)}, expected {params.n}")
    for s in w:
        if not 0 <= s < params.q:
            raise CodeError(f"symbol {s} out of range for q={params.q}")
    return w


def word_from_string(text: str, params: CodeParams) -> Word:
    """Parse a compact word such as ``"0102"`` (only valid for q <= 10)."""
    return make_word((int(ch) for ch in text), params)


def word_to_string(w: Word) -> str:
    if all(s < 10 for s in w):
        return "".join(map(str, w))
    return " ".join(map(str, w))


def word_to_index(w: Word, q: int) -> int:
    """Rank of ``w`` in lexicographic order of F^n."""
    idx = 0
    for s in w:
        idx = idx * q + s
    return idx


def index_to_word(idx: int, params: CodeParams) -> Word:
    out = []
    for _ in range(params.n):
        idx, s = divmod(idx, params.q)
        out.append(s)
    return tuple(reversed(out))


@dataclass(frozen=True, slots=True)
class Code:
    """An ordered collection of distinct words sharing ``params``."""

    params: CodeParams
    words: tuple[Word, ...]

    def __post_init__(self) -> None:
        words = tuple(make_word(w, self.params) for w in self.words)
        object.__setattr__(self, "words", words)
        seen: dict[Word, int] = {}
        for i, w in enumerate(words):
            if w in seen:
                raise CodeError(f"duplicate word {word_to_string(w)} at indices {seen[w]} and {i}")
            seen[w] = i

    @classmethod
    def from_strings(cls, params: CodeParams, texts: Iterable[str]) -> Code:
        return cls(params, tuple(word_from_string(s, params) for s in texts))

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __getitem__(self, i: int) -> Word:
        return self.words[i]

    def subcode(self, indices: Iterable[int]) -> Code:
        return Code(self.params, tuple(self.words[i] for i in indices))

    def without(self, index: int) -> Code:
        return Code(self.params, self.words[:index] + self.words[index + 1 :])


@dataclass(frozen=True, slots=True)
class DescendantProfile:
    """Per-component symbol sets X(1), ..., X(n) of a set of words.

    Each component set is held as an integer bitmask (bit ``s`` set iff symbol
    ``s`` occurs). Python integers are unbounded, so the same representation
    covers every alphabet size; equality of masks coincides with equality of
    the canonical byte encoding.
    """

    masks: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.masks:
            raise CodeError("a profile needs at least one component")
        for m in self.masks:
            if m <= 0:
                raise CodeError("component sets of a descendant profile must be nonempty")

    @classmethod
    def from_sets(cls, components: Iterable[Iterable[int]]) -> DescendantProfile:
        masks = []
        for comp in components:
            m = 0
            for s in comp:
                if s < 0:
                    raise CodeError(f"negative symbol {s}")
                m |= 1 << s
            masks.append(m)
        return cls(tuple(masks))

    @property
    def n(self) -> int:
        return len(self.masks)

    @property
    def components(self) -> tuple[tuple[int, ...], ...]:
        return tuple(_mask_symbols(m) for m in self.masks)

    def encode(self) -> bytes:
        """Canonical encoding: per component a u32 count then ascending u32 symbols, little-endian."""
        parts = []
        for m in self.masks:
            syms = _mask_symbols(m)
            parts.append(struct.pack(f"<I{len(syms)}I", len(syms), *syms))
        return b"".join(parts)

    @classmethod
    def decode(cls, data: bytes) -> DescendantProfile:
        comps = []
        pos = 0
        try:
            while pos < len(data):
                (k,) = struct.unpack_from("<I", data, pos)
                pos += 4
                syms = struct.unpack_from(f"<{k}I", data, pos)
                pos += 4 * k
                if list(syms) != sorted(set(syms)):
                    raise CodeError("component symbols must be strictly ascending")
                comps.append(syms)
        except struct.error as exc:
            raise CodeError(f"truncated profile encoding: {exc}") from None
        return cls.from_sets(comps)

    def __str__(self) -> str:
        return " x ".join("{" + ",".join(map(str, c)) + "}" for c in self.components)


def _mask_symbols(m: int) -> tuple[int, ...]:
    out = []
    s = 0
    while m:
        if m & 1:
            out.append(s)
        m >>= 1
        s += 1
    return tuple(out)


def desc_profile(subset: Iterable[Word], params: CodeParams) -> DescendantProfile:
    """Descendant profile of a nonempty set of words."""
    masks = [0] * params.n
    empty = True
    for w in subset:
        w = make_word(w, params)
        empty = False
        for k, s in enumerate(w):
            masks[k] |= 1 << s
    if empty:
        raise CodeError("descendant set of an empty subset is undefined")
    return DescendantProfile(tuple(masks))


def desc_size(profile: DescendantProfile) -> int:
    size = 1
    for m in profile.masks:
        size *= m.bit_count()
    return size


def desc_contains(profile: DescendantProfile, w: Sequence[int]) -> bool:
    if len(w) != profile.n:
        raise CodeError(f"word length {len(w)} does not match profile length {profile.n}")
    return all((m >> s) & 1 for m, s in zip(profile.masks, w))


def agreement_count(u: Sequence[int], v: Sequence[int]) -> int:
    """Number of positions where ``u`` and ``v`` carry the same symbol."""
    if len(u) != len(v):
        raise CodeError(f"length mismatch: {len(u)} vs {len(v)}")
    return sum(a == b for a, b in zip(u, v))


def onehot(w: Word, q: int) -> int:
    """Pack a word into an n*q-bit integer: bit k*q + s set iff w[k] == s.

    The bitwise OR of the packed words of a set is its descendant profile in
    packed form, and ``popcount(a & b)`` is the agreement count of two words.
    """
    x = 0
    for k, s in enumerate(w):
        x |= 1 << (k * q + s)
    return x


def packed_profile(packed: int, params: CodeParams) -> DescendantProfile:
    full = (1 << params.q) - 1
    return DescendantProfile(tuple((packed >> (k * params.q)) & full for k in range(params.n)))
