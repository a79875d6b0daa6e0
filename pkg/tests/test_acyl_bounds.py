"""Tests for edge classification, the counting certificate and closed-form bounds."""

from fractions import Fraction

import pytest

from acylbounds.core.acyl_bounds import (
    EdgeLabel,
    Verdict,
    classify_edges,
    counting_certificate,
    heegaard_bound,
    prop1_bound,
)
from acylbounds.core.errors import ArityMismatch, NonPositive, OneSided, ReducibleDisc
from acylbounds.core.normal_surface import NormalVector
from acylbounds.core.triangulation import vertex_link_vector

TWICE_Q = (0, 0, 0, 0, 0, 2, 0)


class TestClassification:
    """Test good/fair/bad labelling of the doubled surface's edges."""

    def test_vertex_link(self, t2_closed):
        """Test that a doubled vertex link has only fair and bad edges."""
        labelled = classify_edges(t2_closed, vertex_link_vector(t2_closed, 0))
        assert labelled.count(EdgeLabel.FAIR) == 3
        assert labelled.bad_total == 3
        assert labelled.good_total == 0
        assert [(t.bad_edges, t.bad_discs) for t in labelled.per_tet] == [(3, 1), (3, 1)]

    def test_torus(self, l41):
        """Test the tallies for twice the L(4,1) quad."""
        labelled = classify_edges(l41, TWICE_Q)
        assert labelled.bad_total == 4
        assert labelled.good_total == 4
        tally = labelled.per_tet[0]
        assert (tally.bad_edges, tally.bad_discs) == (8, 2)
        assert tally.excess == 2

    def test_structural_limits(self, t2_closed, l41):
        """Test that good and fair edges share no vertex and faces hold at most six non-good."""
        for tri, v in ((t2_closed, vertex_link_vector(t2_closed, 0)), (l41, TWICE_Q)):
            labelled = classify_edges(tri, v)
            assert labelled.good_fair_disjoint()
            assert labelled.max_face_nongood() <= 6
            assert all(t.excess <= 2 for t in labelled.per_tet)

    def test_one_sided_rejected(self, l41):
        """Test that a one-sided surface cannot be classified."""
        with pytest.raises(OneSided):
            classify_edges(l41, NormalVector((0, 0, 0, 0, 0, 1, 0)))


class TestCountingCertificate:
    """Test the Euler-characteristic accounting."""

    def test_vertex_link(self, t2_closed):
        """Test the certificate for two spheres."""
        cert = counting_certificate(t2_closed, vertex_link_vector(t2_closed, 0))
        assert cert.rank_h1_fbar == 0
        assert cert.chi_fbar == 4
        assert cert.chi_fs_bound == 1
        assert cert.verdict is Verdict.CONSISTENT
        assert cert.genus_from_counting == Fraction(3, 4)
        assert cert.bound_value == 1
        assert cert.chi_accounting_holds

    def test_torus(self, l41):
        """Test the certificate for two tori."""
        cert = counting_certificate(l41, TWICE_Q)
        assert cert.bad_total == 4
        assert cert.rank_h1_fbar == 4
        assert cert.chi_fbar == 0
        assert cert.chi_fs_bound == 0
        assert cert.verdict is Verdict.CONSISTENT
        assert cert.genus_from_counting == 1
        assert cert.excess_total == 2

    def test_reuses_classification(self, l41):
        """Test that a precomputed classification is accepted."""
        labelled = classify_edges(l41, TWICE_Q)
        assert counting_certificate(l41, TWICE_Q, labelled) == counting_certificate(l41, TWICE_Q)


class TestProp1Bound:
    """Test the tetrahedron-count bound."""

    @pytest.mark.parametrize("t,expected", [(1, 1), (2, 1), (3, 2), (4, 2), (9, 5), (100, 50)])
    def test_values(self, t: int, expected: int):
        """Test floor((t + 1) / 2)."""
        assert prop1_bound(t) == expected

    def test_nonpositive(self):
        """Test that zero tetrahedra is rejected."""
        with pytest.raises(NonPositive):
            prop1_bound(0)


class TestHeegaardBound:
    """Test the Heegaard-splitting bound."""

    def test_genus_two(self):
        """Test g = 2 with three intersections per disc."""
        result = heegaard_bound(2, [3, 3])
        assert result.bound == 3
        assert result.integer_bound == 3
        assert result.bad_edge_caps == (6, 6)
        assert result.cap_total == 12

    def test_fractional(self):
        """Test that a half-integer bound floors down."""
        result = heegaard_bound(1, [2])
        assert result.bound == Fraction(1, 2)
        assert result.integer_bound == 0

    def test_reducible(self):
        """Test that a disc meeting the other side once is rejected."""
        with pytest.raises(ReducibleDisc):
            heegaard_bound(1, [1])

    def test_arity(self):
        """Test that the count list must have g entries."""
        with pytest.raises(ArityMismatch):
            heegaard_bound(2, [3])

    def test_genus(self):
        """Test that genus zero is rejected."""
        with pytest.raises(NonPositive):
            heegaard_bound(0, [])
