"""Symbol arithmetic, runs, projections, and greedy matching."""

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from idsballs import (
    DomainError,
    IndexSet,
    NotASubsequenceError,
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


def words(q, n):
    for symbols in itertools.product(range(q), repeat=n):
        yield Sequence(q, symbols)


class TestSymbolArithmetic:
    def test_examples(self):
        assert sym_add(2, 1, 3) == 0
        assert sym_sub(0, 1, 3) == 2

    def test_overline_moves_every_symbol_when_q_at_least_2(self):
        for q in range(2, 8):
            for a in range(q):
                assert overline(a, q) != a
        with pytest.raises(DomainError):
            overline(0, 1)  # the +1 operand is not a unary-alphabet symbol

    def test_add_sub_mutually_inverse_exhaustively(self):
        for q in range(1, 8):
            for a in range(q):
                for b in range(q):
                    assert sym_sub(sym_add(a, b, q), b, q) == a
                    assert sym_add(sym_sub(a, b, q), b, q) == a

    @pytest.mark.parametrize("a,b", [(-1, 0), (0, 3), (3, 0), (5, 5)])
    def test_out_of_range_symbols_rejected(self, a, b):
        with pytest.raises(DomainError):
            sym_add(a, b, 3)
        with pytest.raises(DomainError):
            sym_sub(a, b, 3)


class TestSequence:
    def test_text_round_trip_small_alphabet(self, seq):
        assert seq("21010", 3).symbols == (2, 1, 0, 1, 0)
        assert seq("21010", 3).text() == "21010"
        assert seq("", 2).symbols == ()
        assert seq("", 2).text() == ""

    def test_text_round_trip_large_alphabet(self):
        x = Sequence.from_text("12,0,11", 13)
        assert x.symbols == (12, 0, 11)
        assert x.text() == "12,0,11"
        assert Sequence.from_text("", 13).symbols == ()

    def test_symbol_validation(self):
        with pytest.raises(DomainError):
            Sequence(2, (0, 2))
        with pytest.raises(DomainError):
            Sequence(0, ())
        with pytest.raises(DomainError):
            Sequence(2**16 + 1, ())
        with pytest.raises(DomainError):
            Sequence.from_text("0a1", 2)

    def test_zeros(self):
        assert Sequence.zeros(3, 4).symbols == (0, 0, 0, 0)
        with pytest.raises(DomainError):
            Sequence.zeros(3, -1)


class TestIndexSet:
    def test_sorts_input(self):
        assert IndexSet((5, 2, 4)).positions == (2, 4, 5)
        assert str(IndexSet.of(2, 4, 5)) == "{2,4,5}"

    def test_rejects_duplicates_and_nonpositive(self):
        with pytest.raises(DomainError):
            IndexSet((1, 1))
        with pytest.raises(DomainError):
            IndexSet((0, 2))


class TestRunCount:
    def test_examples(self, seq):
        assert run_count(seq("0000")) == 1
        assert run_count(seq("21010", 3)) == 5
        assert run_count(seq("")) == 0

    def test_exhaustive_structure(self):
        # r(x) <= n always; r(x) = 1 iff nonempty and constant
        for q in (1, 2, 3):
            for n in range(5):
                for x in words(q, n):
                    r = run_count(x)
                    assert 0 <= r <= n
                    constant = n >= 1 and len(set(x.symbols)) == 1
                    assert (r == 1) == constant


class TestHamming:
    def test_examples(self, seq):
        assert hamming(seq("0000"), seq("0000")) == 0
        assert hamming(seq("1001"), seq("0110")) == 4
        assert hamming(seq("01100210", 3), seq("00110100", 3)) == 4

    def test_mismatch_errors(self, seq):
        with pytest.raises(DomainError):
            hamming(seq("00"), seq("000"))
        with pytest.raises(DomainError):
            hamming(seq("00", 2), seq("00", 3))

    @given(st.data())
    def test_metric_properties(self, data):
        q = data.draw(st.integers(2, 4))
        n = data.draw(st.integers(0, 6))
        sym = st.integers(0, q - 1)
        a, b, c = (
            Sequence(q, tuple(data.draw(st.lists(sym, min_size=n, max_size=n))))
            for _ in range(3)
        )
        assert hamming(a, b) == hamming(b, a)
        assert (hamming(a, b) == 0) == (a == b)
        assert hamming(a, c) <= hamming(a, b) + hamming(b, c)


class TestProject:
    def test_examples(self, seq):
        x = seq("21010", 3)
        assert project(x, IndexSet.of(2, 4, 5)) == seq("110", 3)
        assert project(x, IndexSet.of(*range(1, 6))) == x
        assert project(x, IndexSet(())) == seq("", 3)

    def test_out_of_range(self, seq):
        with pytest.raises(DomainError):
            project(seq("10"), IndexSet.of(3))


class TestIsSubsequence:
    def test_examples(self, seq):
        assert is_subsequence(seq("110", 3), seq("21010", 3))
        assert is_subsequence(seq("", 3), seq("21010", 3))
        assert not is_subsequence(seq("11"), seq("00"))
        assert not is_subsequence(seq("0"), seq(""))

    def test_alphabet_mismatch(self, seq):
        with pytest.raises(DomainError):
            is_subsequence(seq("0", 2), seq("0", 3))

    def test_agrees_with_exhaustive_search_small(self):
        for nv in range(7):
            for v in words(2, nv):
                for nu in range(nv + 1):
                    for u in words(2, nu):
                        assert is_subsequence(u, v) == oracles.is_subsequence(
                            u.symbols, v.symbols
                        )

    @given(st.data())
    def test_agrees_with_exhaustive_search_sampled(self, data):
        q = data.draw(st.integers(2, 3))
        v = tuple(data.draw(st.lists(st.integers(0, q - 1), max_size=10)))
        u = tuple(data.draw(st.lists(st.integers(0, q - 1), max_size=6)))
        assert is_subsequence(Sequence(q, u), Sequence(q, v)) == oracles.is_subsequence(u, v)


class TestMatchingSet:
    def test_examples(self, seq):
        assert matching_set(seq("110", 3), seq("21010", 3)).positions == (2, 4, 5)
        x = seq("0110")
        assert matching_set(x, x).positions == (1, 2, 3, 4)
        assert matching_set(seq("0000", 3), seq("20100100", 3)).positions == (2, 4, 5, 7)

    def test_rejects_non_subsequence(self, seq):
        with pytest.raises(NotASubsequenceError):
            matching_set(seq("11"), seq("00"))

    def test_projection_round_trip_and_pointwise_minimality(self):
        # For every subsequence z of x: x projected at the matching set is
        # z again, and the greedy positions are coordinatewise <= any
        # other embedding of z.
        for x in words(2, 6):
            for s in range(len(x) + 1):
                for z_syms in oracles.deletions(x.symbols, s):
                    z = Sequence(2, z_syms)
                    m = matching_set(z, x)
                    assert project(x, m) == z
                    for keep in itertools.combinations(range(len(x)), len(z)):
                        if tuple(x.symbols[i] for i in keep) == z_syms:
                            embedding = tuple(i + 1 for i in keep)
                            assert all(a <= b for a, b in zip(m.positions, embedding))
