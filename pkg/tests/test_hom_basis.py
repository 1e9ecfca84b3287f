import unittest

from src.core.coefficient_quiver import build_coeff_quiver, enumerate_fixed_points
from src.core.errors import PreconditionError
from src.core.hom_basis import (
    cell_dimension, cell_dimension_recursive, fixed_point_k, hom_plus_dim, hom_standard_basis,
)
from src.core.kronecker import hom_dim
from src.models.models import DimVector, FixedPoint, Indecomposable, PlacedSummand, RepDescriptor


def _shapes(max_rank):
    for n in range(max_rank + 1):
        yield Indecomposable.P(n)
        if n:
            yield Indecomposable.R(n)
        yield Indecomposable.I(n)


class TestStandardBasis(unittest.TestCase):
    def test_size_matches_hom_dimension(self):
        shapes = list(_shapes(4))
        for m in shapes:
            for n in shapes:
                with self.subTest(m=m.label, n=n.label):
                    basis = hom_standard_basis(build_coeff_quiver(m), build_coeff_quiver(n))
                    self.assertEqual(len(basis), hom_dim(RepDescriptor.of(m), RepDescriptor.of(n)))

    def test_endomorphisms_of_r3(self):
        r3 = build_coeff_quiver(Indecomposable.R(3))
        basis = hom_standard_basis(r3, r3)
        self.assertEqual(sorted(f.weight for f in basis), [0, 1, 2])
        self.assertEqual(hom_plus_dim(r3, r3), 2)

    def test_single_vertex(self):
        basis = hom_standard_basis(build_coeff_quiver(Indecomposable.P(0)), build_coeff_quiver(Indecomposable.I(1)))
        self.assertEqual(len(basis), 1)
        self.assertEqual(basis[0].gamma_prime, frozenset({(2, 1)}))


class TestCellDimension(unittest.TestCase):
    def test_regular_three(self):
        m = Indecomposable.R(3)
        dims = {p.label: cell_dimension(m, p) for p in enumerate_fixed_points(m, DimVector.of(1, 2))}
        self.assertEqual(dims, {"1(P1)": 2, "2(P1)": 1, "1(P0) + R1": 1, "2(P0) + R1": 0})

    def test_preprojective_summand_in_r5(self):
        m = Indecomposable.R(5)
        point = next(p for p in enumerate_fixed_points(m, DimVector.of(1, 2)) if p.s1 == (2,) and p.s2 == (2, 3))
        self.assertEqual(cell_dimension(m, point), 3)

    def test_recursion_agrees(self):
        for n in range(1, 5):
            m = Indecomposable.R(n)
            for e1 in range(n + 1):
                for e2 in range(e1, n + 1):
                    for point in enumerate_fixed_points(m, DimVector.of(e1, e2)):
                        with self.subTest(n=n, point=point.label):
                            self.assertEqual(cell_dimension(m, point), cell_dimension_recursive(n, point.summands))


class TestRecursionPreconditions(unittest.TestCase):
    def test_values(self):
        summands = [PlacedSummand(shape=Indecomposable.P(0), position=1), PlacedSummand(shape=Indecomposable.R(1), position=3)]
        self.assertEqual(cell_dimension_recursive(3, summands), 1)
        self.assertEqual(cell_dimension_recursive(3, []), 0)

    def test_rejections(self):
        p0_1 = PlacedSummand(shape=Indecomposable.P(0), position=1)
        p0_2 = PlacedSummand(shape=Indecomposable.P(0), position=2)
        p1_1 = PlacedSummand(shape=Indecomposable.P(1), position=1)
        p1_3 = PlacedSummand(shape=Indecomposable.P(1), position=3)
        r1 = PlacedSummand(shape=Indecomposable.R(1), position=3)
        cases = {
            "regular first": [r1, p0_1],
            "unsorted": [p0_2, p0_1],
            "does not fit": [p1_3],
            "overlap": [p1_1, p0_2],
            "preinjective": [PlacedSummand(shape=Indecomposable.I(0), position=1)],
        }
        for name, summands in cases.items():
            with self.subTest(case=name), self.assertRaises(PreconditionError):
                cell_dimension_recursive(3, summands)


class TestKOfFixedPoint(unittest.TestCase):
    def test_values(self):
        points = enumerate_fixed_points(Indecomposable.R(3), DimVector.of(1, 2))
        self.assertEqual([fixed_point_k(3, p) for p in points], [0, 0, 0, 1])

    def test_full_and_empty(self):
        self.assertEqual(fixed_point_k(2, FixedPoint(s1=(), s2=())), 0)
        (full,) = enumerate_fixed_points(Indecomposable.R(2), DimVector.of(2, 2))
        self.assertEqual(fixed_point_k(2, full), 0)


if __name__ == "__main__":
    unittest.main()
