"""Tests for the encoding families and the idealizability gates."""

from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from idealform.encoding import (
    Encoding,
    EncodingKind,
    explicit_encoding,
    gray_matrix,
    is_hole_free,
    is_in_convex_position,
    make_encoding,
    zigzag_matrix,
)
from idealform.errors import (
    HoleCheckTooLarge,
    InputError,
    InvalidOrder,
    NeedsExplicitRows,
    TooFewAlternatives,
)
from oracles import in_hull_caratheodory

K3 = (
    (0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0),
    (0, 1, 1), (1, 1, 1), (1, 0, 1), (0, 0, 1),
)
C3 = (
    (0, 0, 0), (1, 0, 0), (1, 1, 0), (2, 1, 0),
    (2, 1, 1), (3, 1, 1), (3, 2, 1), (4, 2, 1),
)


class TestRecursions:
    def test_order_one_base_case(self):
        assert gray_matrix(1) == ((0,), (1,))
        assert zigzag_matrix(1) == ((0,), (1,))

    def test_order_two(self):
        assert gray_matrix(2) == ((0, 0), (1, 0), (1, 1), (0, 1))
        assert zigzag_matrix(2) == ((0, 0), (1, 0), (1, 1), (2, 1))

    def test_order_three_matches_frozen_matrices(self):
        assert gray_matrix(3) == K3
        assert zigzag_matrix(3) == C3

    def test_bad_order_rejected(self):
        with pytest.raises(InvalidOrder):
            gray_matrix(0)
        with pytest.raises(InvalidOrder):
            zigzag_matrix(-1)

    @pytest.mark.parametrize("s", [1, 2, 3, 4])
    def test_reflected_steps_flip_one_bit(self, s):
        rows = gray_matrix(s)
        assert len(rows) == 2**s
        assert len(set(rows)) == 2**s
        for a, b in zip(rows, rows[1:]):
            diffs = [x - y for x, y in zip(b, a)]
            assert sorted(map(abs, diffs)) == [0] * (s - 1) + [1]
        # Cyclic closure: one single-coordinate step, in the last coordinate.
        closure = tuple(x - y for x, y in zip(rows[-1], rows[0]))
        assert closure == (0,) * (s - 1) + (1,)

    @pytest.mark.parametrize("s", [1, 2, 3, 4])
    def test_zigzag_steps_increase_one_coordinate(self, s):
        rows = zigzag_matrix(s)
        assert len(rows) == 2**s
        assert len(set(rows)) == 2**s
        for a, b in zip(rows, rows[1:]):
            diffs = [x - y for x, y in zip(b, a)]
            assert sorted(diffs) == [0] * (s - 1) + [1]
        closure = tuple(x - y for x, y in zip(rows[-1], rows[0]))
        assert closure == tuple(2**k for k in range(s - 1, -1, -1))


class TestMakeEncoding:
    def test_prefix_of_five(self):
        e = make_encoding(5, EncodingKind.GRAY)
        assert e.rows == K3[:5]
        assert (e.d, e.r) == (5, 3)

    def test_power_of_two_uses_full_matrix(self):
        e = make_encoding(8, EncodingKind.ZIGZAG)
        assert e.rows == C3

    def test_too_few_alternatives(self):
        with pytest.raises(TooFewAlternatives):
            make_encoding(1, EncodingKind.GRAY)

    def test_explicit_kind_needs_rows(self):
        with pytest.raises(NeedsExplicitRows):
            make_encoding(4, EncodingKind.EXPLICIT)

    def test_explicit_rows_validated(self):
        with pytest.raises(InputError):
            explicit_encoding([(0, 0), (0, 0)])
        with pytest.raises(InputError):
            explicit_encoding([(0, 0), (1,)])
        e = explicit_encoding([(0, 0), (1, 1)])
        assert e.kind is EncodingKind.EXPLICIT


def _convex_position_oracle(rows):
    return all(
        not in_hull_caratheodory(row, rows[:i] + rows[i + 1 :])
        for i, row in enumerate(rows)
    )


def _hole_free_oracle(rows):
    r = len(rows[0])
    lows = [min(row[k] for row in rows) for k in range(r)]
    highs = [max(row[k] for row in rows) for k in range(r)]
    box = product(*(range(lo, hi + 1) for lo, hi in zip(lows, highs)))
    return all(
        point in set(rows) or not in_hull_caratheodory(point, list(rows))
        for point in box
    )


class TestGates:
    def test_square_codes_are_in_convex_position(self):
        assert is_in_convex_position(make_encoding(4, EncodingKind.GRAY))

    def test_collinear_codes_are_not(self):
        assert not is_in_convex_position(explicit_encoding([(0,), (1,), (2,)]))

    def test_zigzag_prefix_is_hole_free(self):
        assert is_hole_free(explicit_encoding(C3[:6]))

    def test_dilated_triangle_has_holes(self):
        assert not is_hole_free(explicit_encoding([(0, 0), (2, 0), (0, 2)]))

    @pytest.mark.parametrize("kind", [EncodingKind.GRAY, EncodingKind.ZIGZAG])
    @pytest.mark.parametrize("s", [1, 2, 3, 4])
    def test_both_families_pass_both_gates(self, kind, s):
        e = make_encoding(2**s, kind)
        assert is_in_convex_position(e)
        assert is_hole_free(e)

    @pytest.mark.parametrize("d", [2, 3, 4, 5, 6, 7, 8])
    @pytest.mark.parametrize("kind", [EncodingKind.GRAY, EncodingKind.ZIGZAG])
    def test_gates_agree_with_oracle_on_prefixes(self, d, kind):
        e = make_encoding(d, kind)
        assert is_in_convex_position(e) == _convex_position_oracle(list(e.rows))
        assert is_hole_free(e) == _hole_free_oracle(e.rows)

    @given(
        st.lists(
            st.tuples(st.integers(0, 3), st.integers(0, 3)),
            min_size=2, max_size=6, unique=True,
        )
    )
    @settings(max_examples=40, deadline=None)
    def test_gates_agree_with_oracle_on_random_rows(self, rows):
        e = explicit_encoding(rows)
        assert is_in_convex_position(e) == _convex_position_oracle(rows)
        assert is_hole_free(e) == _hole_free_oracle(tuple(tuple(r) for r in rows))

    def test_hole_cap_is_enforced(self):
        e = explicit_encoding([(0, 0), (40, 40)])
        with pytest.raises(HoleCheckTooLarge):
            is_hole_free(e, cap=100)
