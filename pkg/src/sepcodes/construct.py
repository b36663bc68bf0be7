"""Random choice with expurgation.

Sample N words uniformly, record every "bad event" among them, remove one
index per event and keep the survivors. For t = 2 the bad events are equal
pairs (E) and pairs of disjoint pairs with equal descendant sets (F). For
t >= 3 they are pairs agreeing in at least n/(t-1) positions (E), profile
collisions whose size class lies in :func:`sepcodes.bounds.triple_set` (F),
and the remaining near-frameproof collisions between low-agreement words (G).
Every separability violation among the samples triggers an event, so the
survivors always form a t-bar-separable code.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field
from math import comb, factorial
from typing import NamedTuple, Sequence

from sepcodes import _kernels
from sepcodes.bounds import lower_bound_t2, samples_for_epsilon, triple_set
from sepcodes.core import Code, CodeError, CodeParams, Word, onehot
from sepcodes.verify import is_separable


class ConstructionError(CodeError):
    pass


class TargetNotMet(ConstructionError):
    """No attempt reached the target size; carries the best code found."""

    def __init__(self, message: str, code: Code, ledger: EventLedger, attempts: int):
        super().__init__(message)
        self.code = code
        self.ledger = ledger
        self.attempts = attempts


@dataclass(frozen=True, slots=True)
class FEvent:
    A: tuple[int, ...]
    B: tuple[int, ...]
    B_prime: tuple[int, ...]

    @property
    def cls(self) -> tuple[int, int, int]:
        return len(self.A), len(self.B), len(self.B_prime)

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(sorted(self.A + self.B + self.B_prime))


@dataclass(frozen=True, slots=True)
class GEvent:
    A: tuple[int, ...]
    j: int
    j_prime: int

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(sorted(self.A + (self.j, self.j_prime)))


def _ids(xs) -> str:
    return ",".join(map(str, xs))


@dataclass(frozen=True)
class EventLedger:
    """Bad events found in one sample and the derived removal set."""

    t: int
    N: int
    e_events: tuple[tuple[int, int], ...]
    f_events: tuple[FEvent, ...]
    g_events: tuple[GEvent, ...] = ()
    removal_set: frozenset[int] = field(default_factory=frozenset)
    f_candidates: int | None = None

    @property
    def Z(self) -> int:
        return len(self.e_events) + len(self.f_events) + len(self.g_events)

    def to_text(self) -> str:
        lines = [f"# events t={self.t} N={self.N} Z={self.Z}"]
        lines += [f"E {i} {j}" for i, j in self.e_events]
        for ev in self.f_events:
            r, s, s2 = ev.cls
            lines.append(f"F ({r},{s},{s2}) A={_ids(ev.A)} B={_ids(ev.B)} B'={_ids(ev.B_prime)}")
        lines += [f"G A={_ids(ev.A)} j={ev.j} j'={ev.j_prime}" for ev in self.g_events]
        lines.append(f"I {_ids(sorted(self.removal_set))}".rstrip())
        return "\n".join(lines) + "\n"


def derive_seed(seed: int, attempt: int) -> int:
    """Seed for attempt ``attempt``; attempt 0 uses ``seed`` itself."""
    if attempt == 0:
        return seed
    digest = hashlib.blake2b(f"{seed}:{attempt}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "little")


def sample_words(params: CodeParams, N: int, seed: int) -> list[Word]:
    """N words drawn uniformly and independently.

    Uses ``random.Random(seed)`` (Mersenne Twister) and draws symbols row by
    row with ``randrange(q)``, so output is stable across Python versions.
    """
    if N < 1:
        raise ConstructionError(f"N must be >= 1, got {N}")
    rng = random.Random(seed)
    q, n = params.q, params.n
    return [tuple(rng.randrange(q) for _ in range(n)) for _ in range(N)]


def t2_quadruples(N: int):
    """Index quadruples (i, j, i', j') with i the least index, i' < j' the other two."""
    for a in range(N):
        for b in range(a + 1, N):
            for c in range(b + 1, N):
                for d in range(c + 1, N):
                    yield a, b, c, d
                    yield a, c, b, d
                    yield a, d, b, c


def _packed(words: Sequence[Word], params: CodeParams) -> list[int]:
    for w in words:
        if len(w) != params.n:
            raise ConstructionError(f"word {w} does not have length {params.n}")
    return [onehot(w, params.q) for w in words]


def detect_events_t2(words: Sequence[Word], params: CodeParams, *, backend: str | None = None) -> EventLedger:
    kern = _kernels.select(params.n * params.q, backend)
    e, f, examined = kern.t2_events(_packed(words, params))
    e = sorted(e)
    f = sorted(f)
    removal = {i for i, _ in e} | {quad[0] for quad in f}
    return EventLedger(
        t=2,
        N=len(words),
        e_events=tuple(e),
        f_events=tuple(FEvent((), (i, j), (i2, j2)) for i, j, i2, j2 in f),
        removal_set=frozenset(removal),
        f_candidates=examined,
    )


def event_tuple_count(N: int, t: int) -> int:
    """Number of index tuples the t >= 3 detector examines for F- and G-events."""
    total = 0
    for r, s, s2 in triple_set(t):
        used = r + s + s2
        if used <= N:
            total += factorial(N) // (factorial(r) * factorial(s) * factorial(s2) * factorial(N - used))
    if N >= t + 1:
        total += comb(N, t - 1) * comb(N - t + 1, 2)
    return total


#: Enumeration budget for the t >= 3 detector; equals the work at N = 12, t = 3.
MAX_EVENT_TUPLES = event_tuple_count(12, 3)


def detect_events_general(
    words: Sequence[Word],
    params: CodeParams,
    t: int,
    *,
    backend: str | None = None,
    max_tuples: int | None = MAX_EVENT_TUPLES,
) -> EventLedger:
    if t < 3:
        raise ConstructionError(f"general event detection needs t >= 3, got {t}")
    N = len(words)
    if max_tuples is not None and event_tuple_count(N, t) > max_tuples:
        raise ConstructionError(
            f"N={N} at t={t} needs {event_tuple_count(N, t)} index tuples, over the "
            f"budget of {max_tuples} (N <= 12 for t = 3); lower N or raise max_tuples"
        )
    kern = _kernels.select(params.n * params.q, backend)
    triples = triple_set(t).triples
    e, f, g = kern.general_events(_packed(words, params), params.n, t, triples)
    e = sorted(e)
    f = sorted(f)
    g = sorted(g)
    fev = tuple(FEvent(A, B, B2) for _, _, _, A, B, B2 in f)
    gev = tuple(GEvent(A, j, j2) for A, j, j2 in g)
    removal = {i for i, _ in e}
    removal |= {min(ev.indices) for ev in fev}
    removal |= {min(ev.indices) for ev in gev}
    return EventLedger(
        t=t, N=N, e_events=tuple(e), f_events=fev, g_events=gev, removal_set=frozenset(removal)
    )


def detect_events(words, params: CodeParams, t: int, *, backend: str | None = None) -> EventLedger:
    if t == 2:
        return detect_events_t2(words, params, backend=backend)
    return detect_events_general(words, params, t, backend=backend)


def expurgate(words: Sequence[Word], ledger: EventLedger, params: CodeParams) -> Code:
    """Code formed by the words whose index is not in the removal set."""
    kept = tuple(w for i, w in enumerate(words) if i not in ledger.removal_set)
    if not kept:
        raise ConstructionError("every sampled word was removed; N is too small for these parameters")
    return Code(params, kept)


@dataclass(frozen=True)
class ConstructionConfig:
    q: int
    n: int
    t: int
    N: int | None = None
    epsilon: float | None = None
    seed: int = 0
    max_attempts: int = 1
    target_size: int | None = None

    def __post_init__(self) -> None:
        CodeParams(self.q, self.n)
        if self.t < 2:
            raise ConstructionError(f"construction needs t >= 2, got {self.t}")
        if self.N is not None and self.N < 1:
            raise ConstructionError(f"N must be >= 1, got {self.N}")
        if self.epsilon is not None and not 0 < self.epsilon < 1:
            raise ConstructionError(f"epsilon must lie in (0, 1), got {self.epsilon}")
        if self.max_attempts < 1:
            raise ConstructionError("max_attempts must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise ConstructionError("seed must be a 64-bit unsigned integer")

    @property
    def params(self) -> CodeParams:
        return CodeParams(self.q, self.n)

    def samples(self) -> int:
        """Explicit N, else the expurgation argmax (t = 2) or floor(eps q^(n/(t-1)))."""
        if self.N is not None:
            return self.N
        if self.t == 2:
            return lower_bound_t2(self.q, self.n)[1]
        if self.epsilon is None:
            raise ConstructionError("t >= 3 needs an explicit N or an epsilon")
        N = samples_for_epsilon(self.q, self.n, self.t, self.epsilon)
        if N < 1:
            raise ConstructionError(f"epsilon={self.epsilon} gives N=0 at q={self.q}, n={self.n}")
        return N


class Construction(NamedTuple):
    code: Code
    ledger: EventLedger
    attempts: int


def construct_once(params: CodeParams, t: int, N: int, seed: int, *, backend: str | None = None):
    words = sample_words(params, N, seed)
    ledger = detect_events(words, params, t, backend=backend)
    return expurgate(words, ledger, params), ledger


def construct(config: ConstructionConfig, *, backend: str | None = None) -> Construction:
    """Sample, detect, expurgate; retry with derived seeds until the target size is met.

    Without a target a single attempt is made. Raises :class:`TargetNotMet`
    (carrying the largest code seen) when no attempt reaches the target.
    """
    params = config.params
    N = config.samples()
    best: tuple[Code, EventLedger] | None = None
    attempts = config.max_attempts if config.target_size is not None else 1
    for k in range(attempts):
        code, ledger = construct_once(params, config.t, N, derive_seed(config.seed, k), backend=backend)
        if best is None or len(code) > len(best[0]):
            best = (code, ledger)
        if config.target_size is None or len(code) >= config.target_size:
            return Construction(code, ledger, k + 1)
    raise TargetNotMet(
        f"no code of size >= {config.target_size} in {attempts} attempts (best {len(best[0])})",
        best[0],
        best[1],
        attempts,
    )


def adaptive_construct(
    q: int, n: int, t: int, target_size: int, seed: int = 0, *, backend: str | None = None
) -> tuple[int, Construction]:
    """Double N from ``target_size`` while the expurgated code still meets the target.

    Returns the largest successful N with its construction. N never exceeds
    the event-enumeration budget.
    """
    params = CodeParams(q, n)
    best = None
    last = None
    N = max(target_size, 1)
    while t == 2 or event_tuple_count(N, t) <= MAX_EVENT_TUPLES:
        code, ledger = construct_once(params, t, N, seed, backend=backend)
        last = (code, ledger)
        if len(code) < target_size:
            break
        best = (N, Construction(code, ledger, 1))
        N *= 2
        if t == 2 and N > params.space_size:
            break
    if best is None:
        if last is None:
            raise ConstructionError(f"N={N} is over the event-enumeration budget at t={t}")
        raise TargetNotMet(f"no N reached target size {target_size}", last[0], last[1], 1)
    return best


def greedy_repair(code: Code, t: int) -> Code:
    """Remove the least index of the current witness until the code is t-bar-separable."""
    while True:
        ok, witness = is_separable(code, t)
        if ok:
            return code
        code = code.without(min(witness.X + witness.X_prime))
