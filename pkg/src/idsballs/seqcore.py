"""q-ary symbols, sequences, runs, and greedy subsequence matching.

The symbol-level substrate of the package: modular symbol arithmetic,
Hamming distance, projection onto 1-based index sets, and the greedy
leftmost embedding of one word into another.  Everything here is a pure
function on immutable values, safe for concurrent use.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DomainError, NotASubsequenceError

#: Largest supported alphabet.  Symbols stay small unsigned integers so
#: enumeration memory is predictable.
MAX_ALPHABET = 2**16


def _check_symbol(a: int, q: int) -> None:
    if not 0 <= a < q:
        raise DomainError(f"symbol {a} outside alphabet of size {q}")


def sym_add(a: int, b: int, q: int) -> int:
    """(a + b) mod q with both operands validated against the alphabet."""
    _check_symbol(a, q)
    _check_symbol(b, q)
    return (a + b) % q


def sym_sub(a: int, b: int, q: int) -> int:
    """(a - b) mod q; inverse of :func:`sym_add` in its second operand."""
    _check_symbol(a, q)
    _check_symbol(b, q)
    return (a - b) % q


def overline(a: int, q: int) -> int:
    """The cyclic successor (a + 1) mod q; differs from ``a`` whenever q >= 2."""
    return sym_add(a, 1, q)


@dataclass(frozen=True)
class Sequence:
    """A word over the alphabet {0, ..., q-1}; the empty word is legal.

    The alphabet size travels with the word and is never inferred from
    the symbols.
    """

    q: int
    symbols: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.q, int) or not 1 <= self.q <= MAX_ALPHABET:
            raise DomainError(
                f"alphabet size must be an integer in [1, {MAX_ALPHABET}], got {self.q!r}"
            )
        symbols = tuple(self.symbols)
        object.__setattr__(self, "symbols", symbols)
        for a in symbols:
            _check_symbol(a, self.q)

    @classmethod
    def zeros(cls, q: int, n: int) -> "Sequence":
        """The all-zero word of length n."""
        if n < 0:
            raise DomainError(f"length must be >= 0, got {n}")
        return cls(q, (0,) * n)

    @classmethod
    def from_text(cls, text: str, q: int) -> "Sequence":
        """Parse the text form: a digit string for q <= 10, otherwise
        comma-separated decimal symbols (e.g. ``"12,0,11"``)."""
        text = text.strip()
        try:
            if q <= 10:
                symbols = tuple(int(ch) for ch in text)
            else:
                symbols = tuple(int(part) for part in text.split(",")) if text else ()
        except ValueError:
            raise DomainError(f"cannot parse {text!r} as a word over an alphabet of size {q}")
        return cls(q, symbols)

    def text(self) -> str:
        """Inverse of :meth:`from_text` for this word's alphabet."""
        if self.q <= 10:
            return "".join(str(a) for a in self.symbols)
        return ",".join(str(a) for a in self.symbols)

    def __str__(self) -> str:
        return self.text()

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)


@dataclass(frozen=True)
class IndexSet:
    """A set of 1-based positions, stored strictly ascending.

    Input order is irrelevant; duplicates and positions below 1 are
    rejected.  Upper bounds are checked at the point of use, against the
    word being indexed.
    """

    positions: tuple[int, ...]

    def __post_init__(self) -> None:
        pos = tuple(sorted(self.positions))
        object.__setattr__(self, "positions", pos)
        for i in pos:
            if not isinstance(i, int) or i < 1:
                raise DomainError(f"index {i!r} is not a positive integer position")
        if len(set(pos)) != len(pos):
            raise DomainError(f"duplicate positions in {pos}")

    @classmethod
    def of(cls, *positions: int) -> "IndexSet":
        return cls(tuple(positions))

    def __len__(self) -> int:
        return len(self.positions)

    def __iter__(self) -> Iterator[int]:
        return iter(self.positions)

    def __contains__(self, i: object) -> bool:
        return i in self.positions

    def __str__(self) -> str:
        return "{" + ",".join(str(i) for i in self.positions) + "}"


def _check_same_alphabet(u: Sequence, v: Sequence) -> None:
    if u.q != v.q:
        raise DomainError(f"alphabet mismatch: {u.q} vs {v.q}")


def run_count(x: Sequence) -> int:
    """Number of maximal blocks of equal adjacent symbols; 0 for the empty word."""
    if len(x) == 0:
        return 0
    return 1 + sum(1 for a, b in zip(x.symbols, x.symbols[1:]) if a != b)


def hamming(x: Sequence, y: Sequence) -> int:
    """Count of positions where two equal-length words differ."""
    _check_same_alphabet(x, y)
    if len(x) != len(y):
        raise DomainError(f"length mismatch: {len(x)} vs {len(y)}")
    return sum(1 for a, b in zip(x.symbols, y.symbols) if a != b)


def project(x: Sequence, t: IndexSet) -> Sequence:
    """The subsequence of x at the 1-based positions of ``t``, in order."""
    n = len(x)
    if t.positions and t.positions[-1] > n:
        raise DomainError(f"position {t.positions[-1]} out of range for length {n}")
    return Sequence(x.q, tuple(x.symbols[i - 1] for i in t.positions))


def is_subsequence(u: Sequence, v: Sequence) -> bool:
    """True iff u embeds into v as a subsequence (greedy scan)."""
    _check_same_alphabet(u, v)
    it = iter(v.symbols)
    return all(a in it for a in u.symbols)


def matching_set(z: Sequence, x: Sequence) -> IndexSet:
    """The greedy leftmost embedding of subsequence z into x.

    Position i_1 is the first index of x carrying z's first symbol, and
    each later i_j is the first index past i_{j-1} carrying z's j-th
    symbol.  Raises :class:`NotASubsequenceError` when z does not embed.
    """
    _check_same_alphabet(z, x)
    out: list[int] = []
    e = 0
    n = len(x)
    for sym in z.symbols:
        while e < n and x.symbols[e] != sym:
            e += 1
        if e == n:
            raise NotASubsequenceError(f"{z.text()!r} is not a subsequence of {x.text()!r}")
        out.append(e + 1)
        e += 1
    return IndexSet(tuple(out))
