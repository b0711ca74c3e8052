"""Closed-form ball sizes and the exact minimum-size characterization.

Everything here is exact integer arithmetic; nothing enumerates.  The
headline facts, asserted empirically by the verification harness:

* every (t, s, p)-ball of a length-n word over A_q has at least
  ``sum(C(n+t-s, i) * (q-1)**i for i in range(t+p+1))`` members, the
  size always attained by the all-zero word;
* equality holds exactly when t = s = 0, or s = p = 0, or s + p >= n,
  or the word is a single run.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .balls import BallParams
from .errors import DomainError
from .seqcore import Sequence, run_count

#: Labels for the four equality conditions, in evaluation order.
MINIMALITY_CONDITIONS = ("t=s=0", "s=p=0", "s+p>=n", "r(x)=1")


def binomial(n: int, k: int) -> int:
    """C(n, k), totalized: 0 whenever k < 0, n < 0, or k > n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def _check_sizes(n: int, q: int) -> None:
    if n < 0:
        raise DomainError(f"length must be >= 0, got {n}")
    if q < 1:
        raise DomainError(f"alphabet size must be >= 1, got {q}")


def size_substitution_ball(n: int, q: int, p: int) -> int:
    """Members within Hamming distance p of any length-n word."""
    _check_sizes(n, q)
    if p < 0:
        raise DomainError(f"substitution count must be >= 0, got {p}")
    return sum(binomial(n, i) * (q - 1) ** i for i in range(p + 1))


def size_insertion_ball(n: int, q: int, t: int) -> int:
    """Supersequence count after t insertions; the same for every
    length-n word over A_q."""
    _check_sizes(n, q)
    if t < 0:
        raise DomainError(f"insertion count must be >= 0, got {t}")
    return sum(binomial(n + t, i) * (q - 1) ** i for i in range(t + 1))


def size_zero_ball(n: int, q: int, params: BallParams) -> int:
    """Exact size of the (t, s, p)-ball of the all-zero length-n word."""
    _check_sizes(n, q)
    params.validate_for_length(n)
    m = n + params.t - params.s
    return sum(binomial(m, i) * (q - 1) ** i for i in range(params.t + params.p + 1))


def min_ball_bound(n: int, q: int, params: BallParams) -> int:
    """Smallest possible (t, s, p)-ball size over all length-n words;
    numerically identical to :func:`size_zero_ball`."""
    return size_zero_ball(n, q, params)


@dataclass(frozen=True)
class BoundReport:
    """Minimum-size bound plus the equality prediction for one word."""

    bound: int
    minimal_predicted: bool
    condition_fired: tuple[str, ...]

    def __post_init__(self) -> None:
        if self.minimal_predicted != bool(self.condition_fired):
            raise DomainError("minimal_predicted must mirror the fired conditions")


def minimality_predicate(x: Sequence, params: BallParams) -> BoundReport:
    """Evaluate all four equality conditions for x and report every one
    that holds, alongside the bound itself."""
    n = len(x)
    params.validate_for_length(n)
    fired = []
    if params.t == 0 and params.s == 0:
        fired.append("t=s=0")
    if params.s == 0 and params.p == 0:
        fired.append("s=p=0")
    if params.s + params.p >= n:
        fired.append("s+p>=n")
    if run_count(x) == 1:
        fired.append("r(x)=1")
    return BoundReport(
        bound=min_ball_bound(n, x.q, params),
        minimal_predicted=bool(fired),
        condition_fired=tuple(fired),
    )


def levenshtein_intersection_max(n: int, q: int, p: int) -> int:
    """Largest intersection of two distinct radius-p substitution balls
    over length-n words: q * sum(C(n-1, i) * (q-1)**i for i < p).

    Rejects q < 2 and n < 1, where no distinct pair of centers exists.
    """
    if q < 2:
        raise DomainError(f"a distinct pair of centers needs q >= 2, got q={q}")
    if n < 1:
        raise DomainError(f"a distinct pair of centers needs n >= 1, got n={n}")
    if p < 0:
        raise DomainError(f"substitution count must be >= 0, got {p}")
    return q * sum(binomial(n - 1, i) * (q - 1) ** i for i in range(p))
