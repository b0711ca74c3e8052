"""Constructive mappings and witnesses behind the ball-size facts.

Each procedure here certifies a combinatorial statement by building an
explicit object:

* a size-preserving bijection between the pure-insertion neighborhoods
  of the all-zero word and of an arbitrary word (plus its inverse);
* an injection from the (t, 0, p)-ball of the all-zero word into that of
  an arbitrary word, together with a word proving the injection misses
  part of its codomain;
* witnesses separating a (t, t, p)-ball from the radius-(t+p)
  substitution ball, and a pair of distinct s-deletion results.

Every procedure validates its own postconditions on every call and
raises :class:`~idsballs.errors.PostconditionError` on failure; silent
deviation here would be the worst possible bug.  Where a construction
says "pick any", we deterministically pick the smallest indices, so
outputs are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .balls import BallParams, member_definitional
from .errors import DomainError, NotASubsequenceError, PostconditionError
from .seqcore import (
    IndexSet,
    Sequence,
    hamming,
    is_subsequence,
    matching_set,
    overline,
    project,
    run_count,
    sym_add,
    sym_sub,
)


@dataclass(frozen=True)
class InjectionTrace:
    """A block mapping's input, output, and the index sets it used.

    ``match_set`` holds the greedy zero-matching positions.  For the
    substitution-tolerant injection, ``fill_set`` holds the positions
    promoted to absorb substitutions and ``anchor_set`` their union (the
    positions the output projects onto the target word through); the
    pure-insertion bijection carries neither.
    """

    source: Sequence
    match_set: IndexSet
    fill_set: IndexSet | None
    anchor_set: IndexSet | None
    output: Sequence

    def __post_init__(self) -> None:
        if (self.fill_set is None) != (self.anchor_set is None):
            raise DomainError("fill_set and anchor_set must be supplied together")
        if self.fill_set is not None:
            match = set(self.match_set.positions)
            fill = set(self.fill_set.positions)
            if match & fill:
                raise DomainError("match_set and fill_set must be disjoint")
            if tuple(sorted(match | fill)) != self.anchor_set.positions:
                raise DomainError("anchor_set must be the union of match_set and fill_set")
        if len(self.output) != len(self.source):
            raise DomainError("output must have the source's length")


def _apply_block_offsets(y: Sequence, x: Sequence, anchors: tuple[int, ...], *, invert: bool = False) -> Sequence:
    # Walk 1-based positions e = 1..len(y); position e in the block ending
    # at the l-th anchor gets x_l added (subtracted when inverting);
    # positions past the last anchor are copied unchanged.  The implicit
    # "anchor 0 = position 0" start is local to this walk.
    op = sym_sub if invert else sym_add
    out = list(y.symbols)
    l = 0
    for e0 in range(len(out)):
        if l >= len(anchors):
            break
        out[e0] = op(out[e0], x.symbols[l], y.q)
        if e0 + 1 == anchors[l]:
            l += 1
    return Sequence(y.q, tuple(out))


def _check_map_inputs(y: Sequence, x: Sequence, t: int) -> None:
    if y.q != x.q:
        raise DomainError(f"alphabet mismatch: {y.q} vs {x.q}")
    if t < 0:
        raise DomainError(f"insertion count must be >= 0, got {t}")
    if len(y) != len(x) + t:
        raise DomainError(
            f"input length {len(y)} does not match target length {len(x)} plus t={t}"
        )


def bijection_insertion(y: Sequence, x: Sequence, t: int) -> InjectionTrace:
    """Map the t-insertion neighborhood of the all-zero word onto that of x.

    Greedily match the zeros of y, then add x's l-th symbol to every
    position of y's l-th block.  The output projects back to x on the
    matched positions, and the map is a bijection onto the t-insertion
    neighborhood of x.
    """
    _check_map_inputs(y, x, t)
    n = len(x)
    try:
        match = matching_set(Sequence.zeros(y.q, n), y)
    except NotASubsequenceError:
        raise DomainError(
            f"{y.text()!r} has fewer than {n} zeros, so it is not reachable "
            "from the all-zero word by insertions alone"
        )
    z = _apply_block_offsets(y, x, match.positions)
    if project(z, match) != x:
        raise PostconditionError("output does not project back to the target word")
    if not is_subsequence(x, z):
        raise PostconditionError("output does not contain the target word as a subsequence")
    return InjectionTrace(source=y, match_set=match, fill_set=None, anchor_set=None, output=z)


def bijection_insertion_inverse(z: Sequence, x: Sequence, t: int) -> Sequence:
    """Invert :func:`bijection_insertion`: recover the unique preimage of z."""
    _check_map_inputs(z, x, t)
    if not is_subsequence(x, z):
        raise DomainError(
            f"{z.text()!r} is not reachable from {x.text()!r} by insertions alone"
        )
    anchors = matching_set(x, z)
    y = _apply_block_offsets(z, x, anchors.positions, invert=True)
    if bijection_insertion(y, x, t).output != z:
        raise PostconditionError("forward map does not reproduce the inverted word")
    return y


def injection_idp(y: Sequence, x: Sequence, t: int, p: int) -> InjectionTrace:
    """Map the (t, 0, p)-ball of the all-zero word into that of x, injectively.

    Greedily match the first len(x) - p zeros of y, promote the p
    smallest unmatched positions, and add x's symbols blockwise over the
    union.  The output then differs from x in at most p of the anchor
    positions.
    """
    _check_map_inputs(y, x, t)
    n = len(x)
    if not 0 <= p <= n:
        raise DomainError(f"substitution budget must be in [0, {n}], got {p}")
    try:
        match = matching_set(Sequence.zeros(y.q, n - p), y)
    except NotASubsequenceError:
        raise DomainError(
            f"{y.text()!r} has fewer than {n - p} zeros, so it is outside the "
            "all-zero word's ball"
        )
    matched = set(match.positions)
    fill: list[int] = []
    for e in range(1, n + t + 1):
        if len(fill) == p:
            break
        if e not in matched:
            fill.append(e)
    fill_set = IndexSet(tuple(fill))
    anchor = IndexSet(match.positions + fill_set.positions)
    z = _apply_block_offsets(y, x, anchor.positions)
    if hamming(project(z, anchor), x) > p:
        raise PostconditionError("output strays more than p symbols from the target word")
    if not member_definitional(z, x, BallParams(t, 0, p)):
        raise PostconditionError("output failed the definitional membership test")
    return InjectionTrace(source=y, match_set=match, fill_set=fill_set, anchor_set=anchor, output=z)


def _least_break(x: Sequence) -> int:
    # smallest 1-based m with x_m != x_{m+1}; caller guarantees one exists
    for m in range(1, len(x)):
        if x.symbols[m - 1] != x.symbols[m]:
            return m
    raise DomainError("the word is a single run; no adjacent symbols differ")


def witness_nonsurjective(x: Sequence, t: int, p: int) -> Sequence:
    """A member of the (t, 0, p)-ball of x that the injection cannot reach.

    Built in two stages: flip the last symbol while prepending one
    flipped copy of the first and appending t-1 flipped copies of the
    last; then flip a case-dependent slice of the early positions.  The
    result (a) lies in the ball, (b) disagrees with x on each of the
    first p positions, and (c) has a tail that no longer embeds x's
    tail.  All three are machine-checked.
    """
    n = len(x)
    q = x.q
    if t < 1:
        raise DomainError(f"needs at least one insertion, got t={t}")
    if not 1 <= p < n:
        raise DomainError(f"needs 1 <= p < n, got p={p} for n={n}")
    if run_count(x) <= 1:
        raise DomainError("needs a word with at least two runs")
    xs = x.symbols
    w = [overline(xs[0], q)] + list(xs[: n - 1]) + [overline(xs[n - 1], q)] * t
    early_break = next((i for i in range(1, p) if xs[i - 1] != xs[i]), None)
    if early_break is not None:
        flips = [e for e in (*range(2, p + 1), n) if e != early_break + 1]
    else:
        # the first p symbols are one run, so a break exists at or after p
        flips = list(range(2, p + 1))
    for e in flips:
        w[e - 1] = overline(xs[e - 1], q)
    z = Sequence(q, tuple(w))
    if not member_definitional(z, x, BallParams(t, 0, p)):
        raise PostconditionError("witness failed the definitional membership test")
    if any(z.symbols[i] == xs[i] for i in range(p)):
        raise PostconditionError("witness agrees with the word inside the first p positions")
    if is_subsequence(Sequence(q, xs[p:]), Sequence(q, z.symbols[p:])):
        raise PostconditionError("witness tail still embeds the word's tail")
    return z


def witness_swap_flip(x: Sequence, t: int, p: int) -> Sequence:
    """A member of the (t, t, p)-ball of x at Hamming distance exactly
    t + p + 1, hence outside the radius-(t+p) substitution ball.

    Swap the first adjacent differing pair and flip the t + p - 1
    smallest remaining positions.
    """
    n = len(x)
    q = x.q
    if t < 1:
        raise DomainError(f"needs at least one insertion/deletion, got t={t}")
    if p < 0:
        raise DomainError(f"substitution budget must be >= 0, got {p}")
    if t + p >= n:
        raise DomainError(f"needs t + p < n, got t+p={t + p} for n={n}")
    if run_count(x) <= 1:
        raise DomainError("needs a word with at least two runs")
    m = _least_break(x)
    flips = [e for e in range(1, n + 1) if e not in (m, m + 1)][: t + p - 1]
    out = list(x.symbols)
    out[m - 1], out[m] = x.symbols[m], x.symbols[m - 1]
    for e in flips:
        out[e - 1] = overline(x.symbols[e - 1], q)
    z = Sequence(q, tuple(out))
    if hamming(z, x) != t + p + 1:
        raise PostconditionError("witness is not at Hamming distance exactly t + p + 1")
    if not member_definitional(z, x, BallParams(t, t, p)):
        raise PostconditionError("witness failed the definitional membership test")
    return z


def witness_deletion_pair(x: Sequence, s: int) -> tuple[Sequence, Sequence]:
    """Two distinct s-deletion results of x.

    Keep the n - s - 1 smallest positions away from the first adjacent
    differing pair, then complete with either side of that pair.
    """
    n = len(x)
    if s < 1:
        raise DomainError(f"needs at least one deletion, got s={s}")
    if s > n - 1:
        raise DomainError(f"needs s <= n - 1, got s={s} for n={n}")
    if run_count(x) <= 1:
        raise DomainError("needs a word with at least two runs")
    m = _least_break(x)
    keep = [e for e in range(1, n + 1) if e not in (m, m + 1)][: n - s - 1]
    u = project(x, IndexSet(tuple(keep) + (m,)))
    v = project(x, IndexSet(tuple(keep) + (m + 1,)))
    if u == v:
        raise PostconditionError("the two deletion results coincide")
    if not (is_subsequence(u, x) and is_subsequence(v, x)):
        raise PostconditionError("a deletion result does not embed into the word")
    return u, v
