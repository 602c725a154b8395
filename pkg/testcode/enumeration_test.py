#!/usr/bin/python3

import math
import unittest

import numpy as np

import BracketExpr
import Enumeration
import GoldenSequences
from Enumeration import ResourceLimitError


class EnumerateLTest(unittest.TestCase):
	def test_small_cases(self):
		self.assertEqual([e.text for e in Enumeration.enumerate_L(3)], ['[[x1,x2],x3]', '[x1,[x2,x3]]'])
		self.assertEqual([e.text for e in Enumeration.enumerate_L(1)], ['x1'])
		self.assertEqual([e.text for e in Enumeration.enumerate_L(2)], ['[x1,x2]'])

	def test_L7(self):
		words = Enumeration.enumerate_L(7)
		self.assertEqual(len(words), 720)
		texts = [e.text for e in words]
		self.assertEqual(texts, sorted(texts))
		self.assertEqual(len(set(texts)), 720)
		for e in words:
			self.assertTrue(BracketExpr.is_in_L(e))

	def test_cardinality(self):
		for n in range(1, 9):
			self.assertEqual(Enumeration.count_L(n), math.factorial(n - 1))
		self.assertEqual(Enumeration.count_L(9), 40320)

	def test_split_counts_add_up(self):
		for n in range(2, 10):
			total = sum(ways * size for _, ways, size in Enumeration.split_counts(n))
			self.assertEqual(total, math.factorial(n - 1))

	def test_resource_limit(self):
		with self.assertRaises(ResourceLimitError):
			Enumeration.enumerate_L(12)
		with self.assertRaises(ResourceLimitError):
			Enumeration.count_L(6, max_n=5)


class EnumeratePTest(unittest.TestCase):
	def test_small_cases(self):
		self.assertEqual(Enumeration.enumerate_P(3), [])
		self.assertEqual([e.text for e in Enumeration.enumerate_P(4)], ['[[x1,x3],[x2,x4]]'])
		self.assertEqual(len(Enumeration.enumerate_P(6)), 22)

	def test_primes_are_sorted_subset(self):
		everything = Enumeration.enumerate_L(6)
		primes = Enumeration.enumerate_P(6)
		self.assertEqual(primes, [e for e in everything if BracketExpr.is_prime(e)])

	def test_prime_counts(self):
		self.assertEqual(Enumeration.count_P(2), 1)
		for n in range(2, 10):
			self.assertEqual(Enumeration.count_P(n), GoldenSequences.PRIME_COUNTS[n])

	def test_prime_count_10(self):
		self.assertEqual(Enumeration.count_P(10), 88562)

	def test_needs_two_symbols(self):
		with self.assertRaises(ValueError):
			Enumeration.enumerate_P(1)


class WordsTest(unittest.TestCase):
	def test_enumerate_words(self):
		words = list(Enumeration.enumerate_words([1, 2, 3]))
		# Catalan(2) bracketings of 3! orderings
		self.assertEqual(len(words), 12)
		self.assertEqual(len(set(words)), 12)
		for e in words:
			self.assertEqual(BracketExpr.validate_word(e), 3)

	def test_random_word(self):
		rng = np.random.RandomState(7)
		for _ in range(50):
			e = Enumeration.random_word([2, 4, 6, 8], rng)
			self.assertEqual(sorted(BracketExpr.leaves(e)), [2, 4, 6, 8])

	def test_random_L_covers_L4(self):
		rng = np.random.RandomState(11)
		seen = set(Enumeration.random_L(4, rng).text for _ in range(300))
		self.assertEqual(seen, set(e.text for e in Enumeration.enumerate_L(4)))

	def test_random_L_on_index_set(self):
		rng = np.random.RandomState(3)
		for _ in range(50):
			e = Enumeration.random_L([3, 5, 9], rng)
			self.assertEqual(sorted(BracketExpr.leaves(e)), [3, 5, 9])
			self.assertTrue(BracketExpr.is_in_L(BracketExpr.standardize(e)))


if __name__ == '__main__':
	unittest.main()
