"""Independent brute-force oracles for freezing expected values.

Nothing here imports the package: oracle and implementation can only
agree by computing the same mathematics.  All functions work on raw
symbol tuples and are written for clarity at desk scale, not speed.
"""

import itertools


def is_subsequence(u, v):
    """Exhaustive: some size-len(u) index subset of v projects to u."""
    u = tuple(u)
    if len(u) > len(v):
        return False
    return any(
        tuple(v[i] for i in keep) == u
        for keep in itertools.combinations(range(len(v)), len(u))
    )


def member(z, x, s, p):
    """Index-set membership by full subset-pair search."""
    n, m, k = len(x), len(z), len(x) - s
    for s1 in itertools.combinations(range(n), k):
        for s2 in itertools.combinations(range(m), k):
            if sum(x[i] != z[j] for i, j in zip(s1, s2)) <= p:
                return True
    return False


def ball(x, t, s, p, q):
    """Filter the whole output space through `member`."""
    m = len(x) + t - s
    return {z for z in itertools.product(range(q), repeat=m) if member(z, x, s, p)}


def hamming_ball(x, p, q):
    return {
        z
        for z in itertools.product(range(q), repeat=len(x))
        if sum(a != b for a, b in zip(x, z)) <= p
    }


def deletions(x, s):
    n = len(x)
    return {tuple(x[i] for i in keep) for keep in itertools.combinations(range(n), n - s)}


def insertions(x, t, q):
    """Filter the longer space by the exhaustive subsequence test."""
    return {
        z
        for z in itertools.product(range(q), repeat=len(x) + t)
        if is_subsequence(x, z)
    }
