import unittest

from pydantic import ValidationError

from src.core.errors import PreconditionError
from src.models.models import (
    CCInput, DimVector, GradedPoly, Indecomposable, Kind, OutputEnvelope, RepDescriptor,
)


class TestDimVector(unittest.TestCase):
    def test_arithmetic(self):
        a, b = DimVector.of(2, 3), DimVector.of(1, 1)
        self.assertEqual(a + b, DimVector.of(3, 4))
        self.assertEqual(a - b, DimVector.of(1, 2))
        self.assertEqual(b * 3, DimVector.of(3, 3))
        self.assertEqual(3 * b, DimVector.of(3, 3))
        self.assertTrue(b <= a)
        self.assertFalse(a <= b)
        self.assertEqual(str(a), "(2,3)")

    def test_negative_difference_rejected(self):
        with self.assertRaises(PreconditionError):
            DimVector.of(0, 1) - DimVector.of(1, 1)

    def test_negative_components_rejected(self):
        with self.assertRaises(ValidationError):
            DimVector(d1=-1, d2=0)


class TestIndecomposable(unittest.TestCase):
    def test_dimension_vectors(self):
        self.assertEqual(Indecomposable.P(3).dim, DimVector.of(3, 4))
        self.assertEqual(Indecomposable.R(3).dim, DimVector.of(3, 3))
        self.assertEqual(Indecomposable.I(3).dim, DimVector.of(4, 3))

    def test_r0_is_zero(self):
        self.assertTrue(Indecomposable.R(0).is_zero)
        self.assertEqual(RepDescriptor.of(Indecomposable.R(0), Indecomposable.P(1)).label, "P1")

    def test_negative_rank_rejected(self):
        with self.assertRaises(ValidationError):
            Indecomposable(kind=Kind.PREPROJECTIVE, rank=-1)


class TestRepDescriptor(unittest.TestCase):
    def test_parse_and_canonical_order(self):
        rep = RepDescriptor.parse("I0+R1+P2")
        self.assertEqual(rep.label, "P2+R1+I0")
        self.assertEqual(rep.dim, DimVector.of(2 + 1 + 1, 3 + 1 + 0))

    def test_multiplicity(self):
        rep = RepDescriptor.parse("2*P1+R3")
        self.assertEqual([s.label for s in rep.summands], ["P1", "P1", "R3"])

    def test_zero(self):
        self.assertEqual(RepDescriptor.parse("0").summands, ())
        self.assertEqual(RepDescriptor().label, "0")

    def test_garbage(self):
        for text in ("Q1", "P", "P1+", "-1*P2"):
            with self.subTest(text=text), self.assertRaises(PreconditionError):
                RepDescriptor.parse(text)


class TestGradedPoly(unittest.TestCase):
    def test_trailing_zeros_trimmed(self):
        self.assertEqual(GradedPoly.of(1, 2, 0, 0).to_list(), [1, 2])
        self.assertTrue(GradedPoly.of(0, 0).is_zero)
        self.assertEqual(GradedPoly.zero().degree, -1)

    def test_ring_operations(self):
        p = GradedPoly.of(1, 1)
        self.assertEqual((p * p).to_list(), [1, 2, 1])
        self.assertEqual((p + GradedPoly.one()).to_list(), [2, 1])
        self.assertEqual((p * p - p).to_list(), [0, 1, 1])
        self.assertEqual(p.shift(2).to_list(), [0, 0, 1, 1])
        self.assertEqual((p * p).evaluate(1), 4)
        self.assertEqual((p * p).evaluate(2), 9)

    def test_negative_coefficients_rejected(self):
        with self.assertRaises(PreconditionError):
            GradedPoly.one() - GradedPoly.of(2)
        with self.assertRaises(ValidationError):
            GradedPoly.of(-1)


class TestCCInput(unittest.TestCase):
    def test_support_checked(self):
        CCInput(d=(1, 2), chi={(0, 0): 1, (1, 2): 1})
        with self.assertRaises(ValidationError):
            CCInput(d=(1, 2), chi={(2, 0): 1})
        with self.assertRaises(ValidationError):
            CCInput(d=(1, 2, 3, 4), chi={})


class TestOutputEnvelope(unittest.TestCase):
    def test_json_round_trip(self):
        env = OutputEnvelope(command="poincare", parameters={"n": 3}, result={"coefficients": [1, 2, 1]}, version="0.1.0")
        self.assertEqual(OutputEnvelope.model_validate_json(env.model_dump_json()), env)


if __name__ == "__main__":
    unittest.main()
