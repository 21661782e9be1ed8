"""Pushforward / Kuenneth cohomology dimensions and their dualities."""

from __future__ import annotations

import pytest

from sigma2.cohomology import (
    CohomologyDims,
    hom_dims_line_bundles,
    line_bundle_cohomology,
)
from sigma2.lattice import QUADRIC, SIGMA2, pic, riemann_roch_chi
from sigma2.mutations import standard_collection


def dims(surface, a, b):
    return line_bundle_cohomology(pic(surface, a, b)).astuple()


class TestHirzebruchAnchors:
    def test_negative_section_is_rigid(self):
        # O(0) + O(-2) on the base: one section, one obstruction
        assert dims(SIGMA2, 1, 0) == (1, 1, 0)

    def test_fiber(self):
        assert dims(SIGMA2, 0, 1) == (2, 0, 0)

    def test_section_plus_two_fibers(self):
        assert dims(SIGMA2, 1, 2) == (4, 0, 0)

    def test_canonical_bundle(self):
        # h^2(K) = h^0(O) = 1
        assert dims(SIGMA2, -2, -4) == (0, 0, 1)

    def test_minus_one_row_vanishes(self):
        for b in range(-8, 9):
            assert dims(SIGMA2, -1, b) == (0, 0, 0)

    def test_big_antiample_direction(self):
        assert dims(SIGMA2, -3, -5) == (0, 0, 2)
        assert dims(SIGMA2, -3, -4) == (0, 1, 1)


class TestQuadric:
    def test_bidegree_1_1(self):
        assert dims(QUADRIC, 1, 1) == (4, 0, 0)

    def test_ruling_with_negative_partner(self):
        assert dims(QUADRIC, -1, 5) == (0, 0, 0)
        assert dims(QUADRIC, 3, -2) == (0, 4, 0)

    def test_canonical(self):
        assert dims(QUADRIC, -2, -2) == (0, 0, 1)


class TestAgreementWithRiemannRoch:
    @pytest.mark.parametrize("surface", [SIGMA2, QUADRIC])
    def test_chi_matches_closed_form(self, surface):
        for a in range(-20, 21):
            for b in range(-20, 21):
                d = pic(surface, a, b)
                assert line_bundle_cohomology(d).chi == riemann_roch_chi(d), d


class TestSerreDuality:
    @pytest.mark.parametrize("surface", [SIGMA2, QUADRIC])
    def test_dimension_level(self, surface):
        k = surface.canonical_class
        for a in range(-12, 13):
            for b in range(-12, 13):
                d = pic(surface, a, b)
                lhs = line_bundle_cohomology(d)
                rhs = line_bundle_cohomology(k - d)
                assert lhs.astuple() == (rhs.h2, rhs.h1, rhs.h0), d


class TestHomDims:
    def test_structure_sheaf_to_fiber(self):
        lhs = hom_dims_line_bundles(pic(SIGMA2, 0, 0), pic(SIGMA2, 0, 1))
        assert lhs.astuple() == (2, 0, 0)

    def test_identity(self):
        d = pic(SIGMA2, 2, -3)
        assert hom_dims_line_bundles(d, d).astuple() == (1, 0, 0)

    def test_backwards_with_obstruction(self):
        # Serre dual of h^2 here is h^0(C + f) = 2
        lhs = hom_dims_line_bundles(pic(SIGMA2, 3, 5), pic(SIGMA2, 0, 0))
        assert lhs.astuple() == (0, 0, 2)

    def test_backwards_from_adjacent_slots_vanishes(self):
        lhs = hom_dims_line_bundles(pic(SIGMA2, 1, 3), pic(SIGMA2, 0, 0))
        assert lhs.astuple() == (0, 0, 0)

    @pytest.mark.parametrize("surface", [SIGMA2, QUADRIC])
    def test_standard_collection_semiorthogonality(self, surface):
        std = standard_collection(surface).classes
        for j in range(4):
            for i in range(j):
                assert hom_dims_line_bundles(std[j].c1, std[i].c1).astuple() \
                    == (0, 0, 0), (surface.kind, j, i)

    @pytest.mark.parametrize("surface", [SIGMA2, QUADRIC])
    def test_standard_collection_strong(self, surface):
        # forwards direction concentrates in degree zero
        std = standard_collection(surface).classes
        for i in range(4):
            for j in range(i, 4):
                d = hom_dims_line_bundles(std[i].c1, std[j].c1)
                assert d.h1 == 0 and d.h2 == 0


def test_negative_dimension_rejected():
    with pytest.raises(ValueError):
        CohomologyDims(1, -1, 0)
