import unittest

from src.core.alpha_beta import (
    alpha_beta_bijection, alpha_dimension, alpha_set, beta_alpha_inverse, beta_dimension, beta_set,
)
from src.core.coefficient_quiver import enumerate_fixed_points
from src.core.errors import PreconditionError
from src.core.hom_basis import cell_dimension
from src.core.invariants import preprojective_locus_closed
from src.models.models import AlphaIndex, BetaIndex, DimVector, GradedPoly, Indecomposable, Kind


def _regular_range(max_n):
    for n in range(1, max_n + 1):
        for e1 in range(n + 1):
            for e2 in range(e1, n + 1):
                yield n, DimVector.of(e1, e2)


class TestBijection(unittest.TestCase):
    def test_single_summand(self):
        alpha = AlphaIndex(k=(2,), r=(1,))
        beta = alpha_beta_bijection(4, DimVector.of(1, 2), alpha)
        self.assertEqual(beta, BetaIndex(a=(2,), b=()))
        self.assertEqual(alpha_dimension(4, alpha), 2)
        self.assertEqual(beta_dimension(4, beta), 2)

    def test_two_summands(self):
        alpha = AlphaIndex(k=(1, 3), r=(1, 0))
        beta = alpha_beta_bijection(4, DimVector.of(1, 3), alpha)
        self.assertEqual(beta, BetaIndex(a=(1, 2), b=(2,)))
        self.assertEqual(alpha_dimension(4, alpha), 4)
        self.assertEqual(beta_dimension(4, beta), 4)

    def test_set_sizes(self):
        self.assertEqual(len(alpha_set(4, DimVector.of(1, 3))), 6)
        self.assertEqual(len(beta_set(4, DimVector.of(1, 3))), 6)
        self.assertEqual(alpha_set(3, DimVector.of(2, 1)), [])
        self.assertEqual(beta_set(3, DimVector.of(0, 0)), [BetaIndex(a=(), b=())])
        self.assertEqual(beta_set(3, DimVector.of(1, 1)), [])

    def test_invalid_alpha(self):
        e = DimVector.of(1, 3)
        cases = {
            "overlap": AlphaIndex(k=(1, 2), r=(1, 0)),
            "too long": AlphaIndex(k=(1, 2, 3), r=(1, 0, 0)),
            "wrong rank sum": AlphaIndex(k=(1, 3), r=(0, 0)),
            "past the end": AlphaIndex(k=(1, 4), r=(0, 1)),
            "position zero": AlphaIndex(k=(0, 3), r=(1, 0)),
        }
        for name, alpha in cases.items():
            with self.subTest(case=name), self.assertRaises(PreconditionError):
                alpha_beta_bijection(4, e, alpha)

    def test_bijective_and_dimension_preserving(self):
        for n, e in _regular_range(5):
            with self.subTest(n=n, e=str(e)):
                alphas = alpha_set(n, e)
                images = [alpha_beta_bijection(n, e, a) for a in alphas]
                self.assertEqual(len(set(images)), len(alphas))
                self.assertEqual(set(images), set(beta_set(n, e)))
                for alpha, beta in zip(alphas, images):
                    self.assertEqual(alpha_dimension(n, alpha), beta_dimension(n, beta))
                    self.assertEqual(beta_alpha_inverse(n, e, beta), alpha)

    def test_inverse_rejects_mismatch(self):
        with self.assertRaises(PreconditionError):
            beta_alpha_inverse(4, DimVector.of(1, 3), BetaIndex(a=(1,), b=()))


class TestDimensionFilter(unittest.TestCase):
    def test_filter_partitions_the_set(self):
        n, e = 5, DimVector.of(2, 4)
        total = len(alpha_set(n, e))
        self.assertEqual(sum(len(alpha_set(n, e, k)) for k in range(n * n)), total)
        for k in range(n * n):
            with self.subTest(k=k):
                self.assertEqual(len(alpha_set(n, e, k)), len(beta_set(n, e, k)))


class TestAgainstCells(unittest.TestCase):
    def test_alpha_dimension_is_cell_dimension(self):
        for n, e in _regular_range(5):
            m = Indecomposable.R(n)
            for point in enumerate_fixed_points(m, e):
                if point.descriptor.of_kind(Kind.REGULAR):
                    continue
                alpha = AlphaIndex(k=tuple(s.position for s in point.summands), r=tuple(s.shape.rank for s in point.summands))
                with self.subTest(n=n, point=point.label):
                    self.assertEqual(alpha_dimension(n, alpha), cell_dimension(m, point))

    def test_generating_function(self):
        for n, e in _regular_range(5):
            with self.subTest(n=n, e=str(e)):
                total = GradedPoly.zero()
                for beta in beta_set(n, e):
                    total = total + GradedPoly.monomial(beta_dimension(n, beta))
                self.assertEqual(total, preprojective_locus_closed(n, e))


if __name__ == "__main__":
    unittest.main()
