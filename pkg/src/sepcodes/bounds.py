"""Closed-form bounds on the size of separable codes.

Integer-valued bounds are exact (arbitrary-precision integers). The
expected-bad-event terms with fractional exponents of q are evaluated with
mpmath at :data:`PRECISION_BITS` bits.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from fractions import Fraction
from math import comb

import mpmath

from sepcodes.core import CodeError, CodeParams

#: Working precision for terms with irrational exponents (quad precision).
PRECISION_BITS = 113


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _check_qn(q: int, n: int) -> None:
    CodeParams(q, n)


def upper_bound_general(q: int, n: int, t: int) -> int:
    """(t-1) * q**ceil(n/(t-1)): no t-bar-separable code is larger."""
    _check_qn(q, n)
    if t < 2:
        raise CodeError(f"the general upper bound needs t >= 2, got {t}")
    return (t - 1) * q ** _ceil_div(n, t - 1)


def upper_bound_t2(q: int, n: int) -> int:
    """Improved bound for t = 2: q**ceil(2n/3) + q**s * (q**s - 1) / 2 with s = floor(n/3)."""
    _check_qn(q, n)
    r = _ceil_div(2 * n, 3)
    s = n // 3
    assert r + s == n
    return q**r + q**s * (q**s - 1) // 2


def upper_bound_gao_ge(q: int, n: int) -> int:
    """Gao and Ge's t = 2 bound (3/2) q**(2c) - (1/2) q**c with c = ceil(n/3)."""
    _check_qn(q, n)
    c = _ceil_div(n, 3)
    return (3 * q ** (2 * c) - q**c) // 2


def expurgation_value_t2(q: int, n: int, N: int) -> int:
    """N - floor(C(N,2) q^-n + 3 C(N,4) 2^n q^-2n), evaluated exactly."""
    expected = Fraction(comb(N, 2), q**n) + Fraction(3 * comb(N, 4) * 2**n, q ** (2 * n))
    return N - (expected.numerator // expected.denominator)


def lower_bound_t2(q: int, n: int) -> tuple[int, int]:
    """Guaranteed size of a 2-bar-separable code by random choice with expurgation.

    Returns ``(M, N)``: the maximum of :func:`expurgation_value_t2` over N >= 1
    and the smallest N attaining it. The scan stops after three consecutive
    negative values; the subtracted term grows like N**4, so the value never
    recovers once it turns negative.
    """
    _check_qn(q, n)
    best, arg = expurgation_value_t2(q, n, 1), 1
    negatives = 0
    N = 1
    while negatives < 3:
        N += 1
        v = expurgation_value_t2(q, n, N)
        if v > best:
            best, arg = v, N
        negatives = negatives + 1 if v < 0 else 0
    return best, arg


@dataclass(frozen=True, slots=True)
class TripleSet:
    """Size classes (|A|, |B|, |B'|) whose profile collisions are F-events."""

    t: int
    triples: tuple[tuple[int, int, int], ...]

    def __len__(self) -> int:
        return len(self.triples)

    def __iter__(self):
        return iter(self.triples)

    def __contains__(self, item) -> bool:
        return tuple(item) in self.triples


def triple_set(t: int) -> TripleSet:
    """All (r, s, s') with 0 <= r <= t-1, 1 <= s <= t-r, 0 <= s' <= s, r+s >= 2,
    excluding (t-1, 1, 1); in lexicographic order."""
    if t < 3:
        raise CodeError(f"the triple set is only defined for t >= 3, got {t}")
    out = []
    for r in range(t):
        for s in range(1, t - r + 1):
            for s2 in range(s + 1):
                if r + s >= 2 and (r, s, s2) != (t - 1, 1, 1):
                    out.append((r, s, s2))
    return TripleSet(t, tuple(out))


@dataclass(frozen=True)
class BadEventBound:
    b: mpmath.mpf
    b1: mpmath.mpf
    b2: Fraction
    b3: mpmath.mpf
    precision_bits: int = PRECISION_BITS


def expected_bad_events_bound(q: int, n: int, t: int, N: int) -> BadEventBound:
    """Upper bound b = b1 + b2 + b3 on the expected number of bad events for t >= 3.

    b1 = N^2 2^n q^(-n/(t-1)) bounds the E-events, b2 (exact) the F-events
    summed over :func:`triple_set`, and b3 = N^(t+1) (2t)^(2n) q^(-(2 - 1/(t-1)) n)
    the G-events. The b3 term is only a valid bound when q > (t-1)^2.
    """
    _check_qn(q, n)
    if t < 3:
        raise CodeError(f"bad-event bound needs t >= 3, got {t}")
    if N < 0:
        raise CodeError(f"N must be >= 0, got {N}")
    b2 = sum(
        (Fraction(N ** (r + s + s2) * (r + s) ** (s * n), q ** (s * n)) for r, s, s2 in triple_set(t)),
        Fraction(0),
    )
    with mpmath.workprec(PRECISION_BITS):
        e1 = mpmath.mpf(n) / (t - 1)
        b1 = mpmath.mpf(N) ** 2 * mpmath.mpf(2) ** n * mpmath.power(q, -e1)
        e3 = (2 - mpmath.mpf(1) / (t - 1)) * n
        b3 = mpmath.mpf(N) ** (t + 1) * mpmath.mpf(2 * t) ** (2 * n) * mpmath.power(q, -e3)
        b = b1 + mpmath.mpf(b2.numerator) / b2.denominator + b3
    return BadEventBound(b=b, b1=b1, b2=b2, b3=b3)


def kappa_prime_terms(n: int, t: int) -> tuple[int, int, int]:
    """Constants (a1, a2, a3) = (2^n, (t+1)^3 t^(tn), (2t)^(2n)) bounding b / (eps^2 q^(n/(t-1)))."""
    if t < 3 or n < 2:
        raise CodeError("need n >= 2 and t >= 3")
    return 2**n, (t + 1) ** 3 * t ** (t * n), (2 * t) ** (2 * n)


def g_event_bound_valid(q: int, t: int) -> bool:
    """The G-event probability estimate needs ((t-1)/q)^2 < 1/q, i.e. q > (t-1)^2."""
    return q > (t - 1) ** 2


def samples_for_epsilon(q: int, n: int, t: int, epsilon) -> int:
    """floor(epsilon * q^(n/(t-1))) computed exactly.

    ``epsilon`` is converted with :class:`fractions.Fraction`; N satisfies
    N <= eps * q^(n/(t-1)) iff N^(t-1) <= eps^(t-1) q^n.
    """
    if t < 3:
        raise CodeError(f"epsilon mode needs t >= 3, got {t}")
    eps = Fraction(epsilon)
    if not 0 < eps < 1:
        raise CodeError(f"epsilon must lie in (0, 1), got {epsilon}")
    target = eps ** (t - 1) * q**n
    lo, hi = 0, 1
    while Fraction(hi) ** (t - 1) <= target:
        hi *= 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if Fraction(mid) ** (t - 1) <= target:
            lo = mid
        else:
            hi = mid
    return lo


@dataclass(frozen=True)
class BoundReport:
    q: int
    n: int
    t: int
    upper_general: int
    upper_t2: int | None
    upper_gao_ge: int | None
    lower_t2: int | None
    lower_t2_samples: int | None
    frameproof_lower_exponent: int
    g_event_bound_valid: bool | None

    def to_dict(self) -> dict:
        d = asdict(self)
        d["frameproof_lower_exponent"] = f"q^{self.frameproof_lower_exponent}"
        return d

    def to_text(self) -> str:
        lines = []
        for key, value in self.to_dict().items():
            if value is None:
                value = "n/a"
            elif isinstance(value, bool):
                value = "yes" if value else "no"
            lines.append(f"{key}={value}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)


def bound_report(q: int, n: int, t: int) -> BoundReport:
    """Evaluate every bound that applies at (q, n, t), t >= 2."""
    general = upper_bound_general(q, n, t)
    if t == 2:
        lower, samples = lower_bound_t2(q, n)
        return BoundReport(
            q, n, t, general, upper_bound_t2(q, n), upper_bound_gao_ge(q, n),
            lower, samples, _ceil_div(n, t), None,
        )
    return BoundReport(
        q, n, t, general, None, None, None, None, _ceil_div(n, t), g_event_bound_valid(q, t)
    )
