"""Pure-Python enumeration kernels.

Reference implementation of the kernel API.  The compiled twin in
``_kernels_c`` must return identical output for identical input; the
test suite asserts this.  Words are plain tuples of ints and every
list-returning kernel yields lexicographically ascending, duplicate-free
output.  Validation lives in the wrappers (:mod:`idsballs.balls`), so
kernels assume well-formed arguments.
"""

from __future__ import annotations

import itertools

BACKEND = "python"


def insertion_ball(x: tuple[int, ...], t: int, q: int) -> list[tuple[int, ...]]:
    """All length-(len(x)+t) supersequences of x."""
    words = {tuple(x)}
    for _ in range(t):
        words = {
            w[:i] + (c,) + w[i:]
            for w in words
            for i in range(len(w) + 1)
            for c in range(q)
        }
    return sorted(words)


def deletion_ball(x: tuple[int, ...], s: int) -> list[tuple[int, ...]]:
    """All distinct length-(len(x)-s) subsequences of x."""
    n = len(x)
    return sorted(
        {tuple(x[i] for i in keep) for keep in itertools.combinations(range(n), n - s)}
    )


def _substitutions(x, p, q):
    # every word within Hamming distance p of x, generated exactly once:
    # pick the differing positions, then a nonzero offset at each
    yield tuple(x)
    if q < 2:
        return
    n = len(x)
    for d in range(1, min(p, n) + 1):
        for pos in itertools.combinations(range(n), d):
            for offs in itertools.product(range(1, q), repeat=d):
                w = list(x)
                for j, off in zip(pos, offs):
                    w[j] = (w[j] + off) % q
                yield tuple(w)


def substitution_ball(x: tuple[int, ...], p: int, q: int) -> list[tuple[int, ...]]:
    """All words within Hamming distance p of x."""
    return sorted(_substitutions(x, p, q))


def ball(x, t, s, p, q, space) -> list[tuple[int, ...]]:
    """Deletions, then substitutions, then insertions, deduplicated.

    ``space`` (= q ** output length) is unused here; the compiled twin
    sizes its dedup bitset with it.
    """
    out: set[tuple[int, ...]] = set()
    n = len(x)
    for keep in itertools.combinations(range(n), n - s):
        u = tuple(x[i] for i in keep)
        for v in _substitutions(u, p, q):
            out.update(insertion_ball(v, t, q))
    return sorted(out)


def ball_size(x, t, s, p, q, space) -> int:
    return len(ball(x, t, s, p, q, space))


def is_member(z: tuple[int, ...], x: tuple[int, ...], s: int, p: int) -> bool:
    """Index-set membership test, by search over subset pairs.

    True iff some length-(n-s) subsequence of x agrees with some
    equally long subsequence of z in all but at most p positions.
    """
    n, m = len(x), len(z)
    k = n - s
    for s1 in itertools.combinations(range(n), k):
        xs = tuple(x[i] for i in s1)
        for s2 in itertools.combinations(range(m), k):
            d = 0
            for a, j in zip(xs, s2):
                if a != z[j]:
                    d += 1
                    if d > p:
                        break
            else:
                return True
    return False


def definitional_ball(x, t, s, p, q) -> list[tuple[int, ...]]:
    """Filter the whole output space through :func:`is_member`."""
    m = len(x) + t - s
    return [
        z for z in itertools.product(range(q), repeat=m) if is_member(z, x, s, p)
    ]
