"""Tests for the exact vertex enumeration and ideality certification."""

import random
from fractions import Fraction

import pytest

from idealform.cdc import cdc, intersection_digraph, is_weakly_connected, theorem1_formulation
from idealform.encoding import EncodingKind, make_encoding
from idealform.errors import InputError, TooLargeToEnumerate
from idealform.formulation import Formulation, GeneralRow, LinearEquality
from idealform.verify import (
    _base_rows,
    _formulation_rows,
    check_ideal,
    check_validity_only,
    embedding_extreme_points,
    enumerate_vertices,
)
from oracles import vertices_by_tight_subsets

F = Fraction


def sos2(d):
    return cdc(d + 1, [(i, i + 1) for i in range(1, d + 1)])


def windows8():
    """Four cyclic length-4 windows over eight ground elements."""
    return cdc(8, [(7, 8, 1, 2), (1, 2, 3, 4), (3, 4, 5, 6), (5, 6, 7, 8)])


def fr(*xs):
    return tuple(F(x) for x in xs)


def drop_row(f, k):
    rows = f.general_rows[:k] + f.general_rows[k + 1 :]
    return Formulation(f.n_lambda, f.r_z, f.equalities, rows, f.z_bounds)


def oracle_vertex_set(f):
    """The same polytope, enumerated by exhaustive tight-subset search."""
    eqs, ineqs = _formulation_rows(f)
    base_eqs, base_ineqs = _base_rows(f.n_lambda, f.z_bounds)
    all_eqs = base_eqs + eqs
    all_ineqs = [(tuple(-c for c in coeffs), -rhs) for coeffs, rhs in base_ineqs + ineqs]
    return vertices_by_tight_subsets(f.n_lambda + f.r_z, all_eqs, all_ineqs)


class TestEmbeddingExtremePoints:
    def test_sos2_two_pieces(self):
        pts = embedding_extreme_points(sos2(2), make_encoding(2, EncodingKind.GRAY))
        assert pts.vertices == {
            fr(1, 0, 0, 0),
            fr(0, 1, 0, 0),
            fr(0, 1, 0, 1),
            fr(0, 0, 1, 1),
        }

    def test_window_count(self):
        pts = embedding_extreme_points(windows8(), make_encoding(4, EncodingKind.GRAY))
        assert pts.count == 16

    def test_size_mismatch(self):
        with pytest.raises(InputError):
            embedding_extreme_points(sos2(2), make_encoding(4, EncodingKind.GRAY))


class TestEnumerateVertices:
    def test_simplex_alone(self):
        f = Formulation(3, 0, (LinearEquality((1, 1, 1), (), 1),), (), ())
        assert enumerate_vertices(f).vertices == {fr(1, 0, 0), fr(0, 1, 0), fr(0, 0, 1)}

    def test_box_corners(self):
        f = Formulation(
            1, 2, (LinearEquality((1,), (0, 0), 1),), (), ((0, 1), (0, 1))
        )
        assert enumerate_vertices(f).vertices == {
            fr(1, 0, 0), fr(1, 0, 1), fr(1, 1, 0), fr(1, 1, 1)
        }

    def test_redundant_row_changes_nothing(self):
        f = Formulation(
            1, 2,
            (LinearEquality((1,), (0, 0), 1),),
            (GeneralRow(normal=(1, 0), lower=(0,), upper=(1,)),),
            ((0, 1), (0, 1)),
        )
        assert enumerate_vertices(f).count == 4

    def test_corner_cut_keeps_boundary_vertices(self):
        f = Formulation(
            1, 2,
            (LinearEquality((1,), (0, 0), 1),),
            (GeneralRow(normal=(1, 1), lower=(0,), upper=(1,)),),
            ((0, 1), (0, 1)),
        )
        assert enumerate_vertices(f).vertices == {
            fr(1, 0, 0), fr(1, 1, 0), fr(1, 0, 1)
        }

    def test_slanted_cut_creates_fractional_vertex(self):
        f = Formulation(
            1, 2,
            (LinearEquality((1,), (0, 0), 1),),
            (GeneralRow(normal=(2, 1), lower=(0,), upper=(1,)),),
            ((0, 1), (0, 1)),
        )
        assert enumerate_vertices(f).vertices == {
            fr(1, 0, 0), (F(1), F(1, 2), F(0)), fr(1, 0, 1)
        }

    def test_sos2_two_pieces_exact_match(self):
        c = sos2(2)
        e = make_encoding(2, EncodingKind.GRAY)
        f = theorem1_formulation(c, e)
        assert enumerate_vertices(f).vertices == embedding_extreme_points(c, e).vertices

    def test_cap_on_base_polytope(self):
        f = theorem1_formulation(sos2(4), make_encoding(4, EncodingKind.GRAY))
        with pytest.raises(TooLargeToEnumerate):
            enumerate_vertices(f, max_vertices=3)

    def test_row_order_does_not_matter(self):
        f = theorem1_formulation(sos2(4), make_encoding(4, EncodingKind.GRAY))
        rng = random.Random(3)
        base = enumerate_vertices(f).vertices
        for _ in range(4):
            rows = list(f.general_rows)
            rng.shuffle(rows)
            g = Formulation(f.n_lambda, f.r_z, f.equalities, tuple(rows), f.z_bounds)
            assert enumerate_vertices(g).vertices == base


class TestAgainstTightSubsetOracle:
    """The incremental engine and exhaustive subset search must agree."""

    def test_sos2_instances(self):
        for d in (2, 4):
            f = theorem1_formulation(sos2(d), make_encoding(d, EncodingKind.GRAY))
            assert enumerate_vertices(f).vertices == oracle_vertex_set(f)

    def test_window_cycle(self):
        f = theorem1_formulation(windows8(), make_encoding(4, EncodingKind.GRAY))
        assert enumerate_vertices(f).vertices == oracle_vertex_set(f)

    def test_after_row_deletion(self):
        f = theorem1_formulation(sos2(4), make_encoding(4, EncodingKind.GRAY))
        g = drop_row(f, 0)
        assert enumerate_vertices(g).vertices == oracle_vertex_set(g)

    def test_zigzag_encoding(self):
        f = theorem1_formulation(sos2(4), make_encoding(4, EncodingKind.ZIGZAG))
        assert enumerate_vertices(f).vertices == oracle_vertex_set(f)


class TestCheckIdeal:
    def test_sos2_counts(self):
        for d in (2, 4):
            c = sos2(d)
            e = make_encoding(d, EncodingKind.GRAY)
            report = check_ideal(c, e, theorem1_formulation(c, e))
            assert report.passed
            assert report.counts == (2 * d, 2 * d)
            assert report.missing == () and report.extra == ()

    def test_window_cycle_counts(self):
        c = windows8()
        e = make_encoding(4, EncodingKind.GRAY)
        report = check_ideal(c, e, theorem1_formulation(c, e))
        assert report.passed and report.counts == (16, 16)

    def test_row_deletion_fails_with_extras(self):
        c = sos2(4)
        e = make_encoding(4, EncodingKind.GRAY)
        f = theorem1_formulation(c, e)
        report = check_ideal(c, e, drop_row(f, 1))
        assert not report.passed
        assert report.missing == ()
        assert report.extra == (
            fr(0, 0, 0, 0, 1, 1, 1),
            fr(0, 0, 1, 0, 0, 0, 0),
            fr(0, 0, 1, 0, 0, 0, 1),
            fr(1, 0, 0, 0, 0, 1, 0),
        )

    def test_random_connected_instances_pass(self):
        rng = random.Random(11)
        done = 0
        while done < 10:
            d = rng.randint(2, 4)
            n = rng.randint(2, 6)
            alts = [set(rng.sample(range(1, n + 1), rng.randint(1, n)))
                    for _ in range(d)]
            for v in range(1, n + 1):
                if not any(v in a for a in alts):
                    alts[rng.randrange(d)].add(v)
            if len({frozenset(a) for a in alts}) < d:
                continue
            c = cdc(n, alts)
            if not is_weakly_connected(intersection_digraph(c)):
                continue
            e = make_encoding(d, EncodingKind.GRAY)
            report = check_ideal(c, e, theorem1_formulation(c, e))
            assert report.passed, (c, report.extra, report.missing)
            done += 1


class TestCheckValidityOnly:
    def test_theorem_output_is_valid(self):
        c = sos2(4)
        e = make_encoding(4, EncodingKind.GRAY)
        assert check_validity_only(c, e, theorem1_formulation(c, e))

    def test_perturbed_lower_cuts_a_point(self):
        c = sos2(2)
        e = make_encoding(2, EncodingKind.GRAY)
        f = theorem1_formulation(c, e)
        row = f.general_rows[0]
        bumped = GeneralRow(row.normal, (0, 1) + row.lower[2:], row.upper)
        g = Formulation(f.n_lambda, f.r_z, f.equalities, (bumped,), f.z_bounds)
        assert not check_validity_only(c, e, g)

    def test_equalities_only(self):
        c = sos2(2)
        e = make_encoding(2, EncodingKind.GRAY)
        f = Formulation(3, 1, (LinearEquality((1, 1, 1), (0,), 1),), (), ((0, 1),))
        assert check_validity_only(c, e, f)

    def test_implied_by_check_ideal(self):
        c = windows8()
        e = make_encoding(4, EncodingKind.GRAY)
        f = theorem1_formulation(c, e)
        if check_ideal(c, e, f).passed:
            assert check_validity_only(c, e, f)
