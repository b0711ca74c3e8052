"""Exact enumeration of insertion/deletion/substitution balls.

The (t, s, p)-ball of a length-n word x holds every word of length
n + t - s reachable from x by exactly t insertions, exactly s deletions,
and at most p substitutions.  Two independent routes compute it:

* :func:`ball` composes the operations (deletions, then substitutions,
  then insertions) and deduplicates;
* :func:`member_definitional` / :func:`definitional_ball` test the
  index-set characterization directly: some length-(n-s) subsequence of
  x must agree with some equally long subsequence of the candidate in
  all but at most p positions.

Their agreement is asserted by tests and the verification harness, never
assumed.  Closed-form sizes live in :mod:`idsballs.formulas`, kept
separate so formula/enumeration agreement stays evidence.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from ._backend import kernels
from .errors import DomainError, WordCapExceededError
from .seqcore import Sequence, _check_same_alphabet

#: Default guard on enumeration: refuse when q ** (output length) exceeds it.
DEFAULT_WORD_CAP = 10**7

#: Hard limit on enumerated word length, far beyond desk scale.
MAX_WORD_LEN = 64

# The compiled kernels pack words into 64-bit indices; caps above this
# would overflow long before they became sensible.
_HARD_SPACE_LIMIT = 2**62


@dataclass(frozen=True)
class BallParams:
    """Budgets (t insertions, s deletions, p substitutions), all >= 0."""

    t: int
    s: int
    p: int

    def __post_init__(self) -> None:
        for name, value in (("t", self.t), ("s", self.s), ("p", self.p)):
            if not isinstance(value, int) or value < 0:
                raise DomainError(f"budget {name} must be a non-negative integer, got {value!r}")

    def validate_for_length(self, n: int) -> None:
        if self.s > n:
            raise DomainError(f"cannot delete {self.s} symbols from a length-{n} word")


@dataclass(frozen=True)
class BallSet:
    """A deduplicated collection of equal-length words, ascending.

    Members are raw symbol tuples in lexicographic order, so output is
    deterministic and diffable; :meth:`sequences` re-wraps them.
    """

    q: int
    word_length: int
    members: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.members)

    @cached_property
    def member_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self.members)

    def __contains__(self, word: object) -> bool:
        if isinstance(word, Sequence):
            return word.q == self.q and word.symbols in self.member_set
        return word in self.member_set

    def sequences(self) -> Iterator[Sequence]:
        for symbols in self.members:
            yield Sequence(self.q, symbols)

    def texts(self) -> list[str]:
        return [Sequence(self.q, symbols).text() for symbols in self.members]


def _check_enum_len(length: int) -> None:
    if length > MAX_WORD_LEN:
        raise DomainError(f"enumeration limited to words of length <= {MAX_WORD_LEN}, got {length}")


def enumeration_space(q: int, out_len: int) -> int:
    """q ** out_len, the output-space size the word cap is checked against."""
    return q**out_len


def _checked_space(q: int, out_len: int, word_cap: int) -> int:
    space = enumeration_space(q, out_len)
    cap = min(word_cap, _HARD_SPACE_LIMIT)
    if space > cap:
        raise WordCapExceededError(
            f"enumeration space {q}^{out_len} = {space} exceeds the word cap {cap}"
        )
    return space


def member_definitional(z: Sequence, x: Sequence, params: BallParams) -> bool:
    """Direct membership test of z in the (t, s, p)-ball of x.

    Searches subset pairs with early exit; this is the ground-truth
    route that enumeration is validated against.
    """
    _check_same_alphabet(z, x)
    n = len(x)
    params.validate_for_length(n)
    expected = n + params.t - params.s
    if len(z) != expected:
        raise DomainError(
            f"candidate length {len(z)} does not match n + t - s = {expected}"
        )
    _check_enum_len(max(len(z), n))
    return kernels.is_member(z.symbols, x.symbols, params.s, params.p)


def deletion_ball(x: Sequence, s: int) -> BallSet:
    """All distinct words obtained from x by exactly s deletions."""
    n = len(x)
    if not 0 <= s <= n:
        raise DomainError(f"deletion count must be in [0, {n}], got {s}")
    _check_enum_len(n)
    members = kernels.deletion_ball(x.symbols, s)
    return BallSet(q=x.q, word_length=n - s, members=tuple(members))


def insertion_ball(x: Sequence, t: int) -> BallSet:
    """All words of length len(x) + t containing x as a subsequence."""
    if t < 0:
        raise DomainError(f"insertion count must be >= 0, got {t}")
    _check_enum_len(len(x) + t)
    members = kernels.insertion_ball(x.symbols, t, x.q)
    return BallSet(q=x.q, word_length=len(x) + t, members=tuple(members))


def substitution_ball(x: Sequence, p: int) -> BallSet:
    """All words within Hamming distance p of x."""
    if p < 0:
        raise DomainError(f"substitution count must be >= 0, got {p}")
    _check_enum_len(len(x))
    members = kernels.substitution_ball(x.symbols, p, x.q)
    return BallSet(q=x.q, word_length=len(x), members=tuple(members))


def ball(x: Sequence, params: BallParams, *, word_cap: int = DEFAULT_WORD_CAP) -> BallSet:
    """The full (t, s, p)-ball of x, by compositional enumeration.

    Composition order is deletions, substitutions, insertions; its
    equivalence to the definitional route is continuously asserted by
    the test suite rather than assumed.
    """
    n = len(x)
    params.validate_for_length(n)
    m = n + params.t - params.s
    _check_enum_len(max(n + params.t, m))
    space = _checked_space(x.q, m, word_cap)
    members = kernels.ball(x.symbols, params.t, params.s, params.p, x.q, space)
    return BallSet(q=x.q, word_length=m, members=tuple(members))


def ball_size(x: Sequence, params: BallParams, *, word_cap: int = DEFAULT_WORD_CAP) -> int:
    """|ball(x, params)| without retaining the members."""
    n = len(x)
    params.validate_for_length(n)
    m = n + params.t - params.s
    _check_enum_len(max(n + params.t, m))
    space = _checked_space(x.q, m, word_cap)
    return kernels.ball_size(x.symbols, params.t, params.s, params.p, x.q, space)


def definitional_ball(x: Sequence, params: BallParams, *, word_cap: int = DEFAULT_WORD_CAP) -> BallSet:
    """The (t, s, p)-ball of x by filtering the whole output space
    through :func:`member_definitional`.

    Independent of :func:`ball`; comparing the two on small grids is the
    keystone agreement test.
    """
    import math

    n = len(x)
    params.validate_for_length(n)
    m = n + params.t - params.s
    _check_enum_len(max(n + params.t, m))
    _checked_space(x.q, m, word_cap)
    k = n - params.s
    if max(math.comb(n, k), math.comb(m, k)) > 10**6:
        raise WordCapExceededError(
            f"definitional subset tables too large for n={n}, m={m}, k={k}"
        )
    members = kernels.definitional_ball(x.symbols, params.t, params.s, params.p, x.q)
    return BallSet(q=x.q, word_length=m, members=tuple(members))
