#!/usr/bin/python3

import math
import threading
import unittest
from fractions import Fraction as F

import GeneratorSeries
import GoldenSequences
import PowerSeries
from PowerSeries import Series


class LieSeriesTest(unittest.TestCase):
	def test_coefficients(self):
		f = GeneratorSeries.lie_series(10)
		self.assertEqual(f.coeffs[:5], (0, 1, 1, 2, 6))
		self.assertEqual(f[10], 362880)

	def test_inverse_pair(self):
		f = GeneratorSeries.lie_series(20)
		b = GeneratorSeries.b_series(20)
		self.assertEqual(-PowerSeries.compose(b, f), Series.x(20))
		self.assertEqual(PowerSeries.compose(f, -b), Series.x(20))


class BRecurrenceTest(unittest.TestCase):
	def test_matches_prime_counts(self):
		b = GeneratorSeries.b_recurrence(10)
		self.assertEqual(b, [GoldenSequences.PRIME_COUNTS[n] for n in range(2, 11)])
		self.assertEqual(b[5 - 2], 4)

	def test_agrees_with_inversion(self):
		self.assertEqual(GeneratorSeries.b_from_inverse(30), GeneratorSeries.b_series(30))

	def test_ode_vanishes(self):
		self.assertTrue(GeneratorSeries.ode_residual(50).is_zero())

	def test_ode_detects_perturbation(self):
		modified = list(GeneratorSeries.b_coefficients(51))
		modified[6] += 1
		residual = GeneratorSeries.ode_residual(b=Series(modified, 51))
		self.assertEqual(residual.valuation(), 6)
		self.assertEqual(residual[6], -1)

	def test_lagrange(self):
		b = GeneratorSeries.b_coefficients(12)
		for n in range(2, 13):
			self.assertEqual(GeneratorSeries.lagrange_coefficient(n), b[n])

	def test_p_recurrence(self):
		self.assertEqual(GeneratorSeries.p_recurrence(4), [1, 0, F(1, 6)])
		b = GeneratorSeries.b_coefficients(15)
		p = GeneratorSeries.p_recurrence(15)
		for n in range(2, 16):
			self.assertEqual(p[n - 2], F(b[n], math.factorial(n - 1)))

	def test_concurrent_extension(self):
		expected = GeneratorSeries.b_coefficients(300)
		GeneratorSeries._b_table = (0, -1, 1)
		barrier = threading.Barrier(4)
		results = [None] * 4

		def extend(slot):
			barrier.wait()
			results[slot] = GeneratorSeries.b_coefficients(300)

		workers = [threading.Thread(target=extend, args=(slot,)) for slot in range(4)]
		for w in workers:
			w.start()
		for w in workers:
			w.join()
		self.assertEqual(results, [expected] * 4)
		self.assertEqual(len(GeneratorSeries._b_table), 301)
		self.assertEqual(GeneratorSeries.b_coefficients(300), expected)

	def test_bad_orders(self):
		with self.assertRaises(ValueError):
			GeneratorSeries.b_recurrence(1)
		with self.assertRaises(ValueError):
			GeneratorSeries.lie_series(0)
		with self.assertRaises(ValueError):
			GeneratorSeries.lagrange_coefficient(1)


class SifSeriesTest(unittest.TestCase):
	def test_matches_sif_counts(self):
		expected = [GoldenSequences.SIF_COUNTS[n] for n in range(0, 9)]
		self.assertEqual(GeneratorSeries.sif_series(8).integer_coeffs(), expected)
		self.assertEqual(GeneratorSeries.a_recurrence(8), expected)
		self.assertEqual(GeneratorSeries.a_recurrence(4)[4], 7)

	def test_recurrence_agrees_with_series(self):
		self.assertEqual(GeneratorSeries.a_recurrence(40), GeneratorSeries.sif_series(40).integer_coeffs())

	def test_callan(self):
		a = GeneratorSeries.sif_series(12)
		for n in range(1, 13):
			self.assertEqual(GeneratorSeries.callan_coefficient(n, a), math.factorial(n - 1))

	def test_density_from_primes(self):
		a = GeneratorSeries.a_recurrence(20)
		for n in range(2, 21):
			self.assertEqual(GeneratorSeries.sif_density_from_primes(n), F(a[n], math.factorial(n)))


class FreeOperadSeriesTest(unittest.TestCase):
	def test_prime_generators_give_lie_series(self):
		b = GeneratorSeries.b_series(15)
		beta = b + Series.x(15)
		self.assertEqual(GeneratorSeries.free_operad_series(beta, 15), GeneratorSeries.lie_series(15))

	def test_single_binary_generator(self):
		# one generator of arity 2 counts planar binary trees
		alpha = GeneratorSeries.free_operad_series(Series([0, 0, 1], 8))
		self.assertEqual(alpha.integer_coeffs(), [0, 1, 1, 2, 5, 14, 42, 132, 429])

	def test_rejects_low_arity(self):
		with self.assertRaises(ValueError):
			GeneratorSeries.free_operad_series(Series([0, 1], 5))


if __name__ == '__main__':
	unittest.main()
