#!/usr/bin/python3

import decimal
import math
import unittest
from fractions import Fraction as F

import Density


class EulerNumberTest(unittest.TestCase):
	def test_tail_bound(self):
		for digits in (20, 50, 100):
			e_value, K, bound = Density.euler_number(digits)
			self.assertLess(bound, F(1, 10 ** (digits + 5)))
			self.assertEqual(bound, F(1, math.factorial(K) * K))
			self.assertAlmostEqual(float(e_value), math.e, places=14)

	def test_lower_approximation(self):
		e_value, _, _ = Density.euler_number(20)
		self.assertLess(e_value, F(27182818284590452354, 10 ** 19))


class DensityTest(unittest.TestCase):
	def test_n2(self):
		report = Density.density(2)
		self.assertEqual(report.p_n, 1)
		self.assertEqual(report.kind, 'prime')
		self.assertEqual(report.digits, 50)

	def test_exact_density(self):
		report = Density.density(6, digits=30)
		self.assertEqual(report.p_n, F(22, 120))
		with decimal.localcontext() as ctx:
			ctx.prec = 30
			self.assertEqual(report.predicted, decimal.Decimal(31) / 72)

	def test_residual_matches_fields(self):
		report = Density.density(100, digits=40)
		with decimal.localcontext() as ctx:
			ctx.prec = 40
			self.assertLess(abs(report.e_p_n - report.predicted - report.residual), decimal.Decimal('1e-35'))

	def test_sif_density(self):
		report = Density.sif_density(4)
		self.assertEqual(report.p_n, F(7, 24))
		self.assertEqual(report.kind, 'sif')

	def test_precision_floor(self):
		with self.assertRaises(ValueError):
			Density.density(10, digits=19)
		with self.assertRaises(ValueError):
			Density.sif_density(10, digits=5)

	def test_small_n(self):
		with self.assertRaises(ValueError):
			Density.density(1)
		with self.assertRaises(ValueError):
			Density.sif_density(0)


class ResidualDecayTest(unittest.TestCase):
	def test_prime_residual_is_cubic(self):
		passed, constant, rows = Density.residual_decay([50, 100, 200], digits=50)
		self.assertTrue(passed)
		self.assertGreater(constant, 0)
		self.assertEqual([n for n, _ in rows], [50, 100, 200])

	def test_float_scale_factor(self):
		passed, constant, rows = Density.residual_decay([50, 100], digits=40, factor=2.0)
		self.assertTrue(passed)
		self.assertIsInstance(constant, decimal.Decimal)
		self.assertFalse(Density.residual_decay([50, 100], digits=40, factor=0.5)[0])

	def test_sif_residual_is_cubic(self):
		passed, _, _ = Density.residual_decay([50, 100, 200], digits=50, sif=True)
		self.assertTrue(passed)

	def test_correction_estimates(self):
		c1, c2 = Density.correction_estimates(400)
		self.assertLess(abs(c1 + 3), decimal.Decimal('0.1'))
		self.assertLess(abs(c2 + decimal.Decimal('2.5')), 1)


if __name__ == '__main__':
	unittest.main()
