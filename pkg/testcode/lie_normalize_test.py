#!/usr/bin/python3

import math
import unittest

import numpy as np
import numpy.testing as npt
from hypothesis import given, settings
from hypothesis import strategies as st

import Enumeration
import LieNormalize
from BracketExpr import parse
from LieNormalize import LinComb


def _comb(*pairs):
	return LinComb({parse(text): c for text, c in pairs})


def _random_parts(seed, n, parts):
	rng = np.random.RandomState(seed)
	order = [int(i) for i in rng.permutation(np.arange(1, n + 1))]
	cuts = sorted(int(c) + 1 for c in rng.choice(n - 1, parts - 1, replace=False))
	bounds = [0] + cuts + [n]
	return [Enumeration.random_word(order[bounds[p]:bounds[p + 1]], rng) for p in range(parts)]


class NormalizeTest(unittest.TestCase):
	def test_single_antisymmetry(self):
		self.assertEqual(LieNormalize.normalize(parse('[x2,x1]')), _comb(('[x1,x2]', -1)))

	def test_jacobi_example(self):
		result = LieNormalize.normalize(parse('[[x1,x3],x2]'))
		self.assertEqual(result, _comb(('[[x1,x2],x3]', 1), ('[x1,[x2,x3]]', -1)))
		self.assertTrue(result.is_normal())
		# [[x1,x3],x2] = [x1,[x3,x2]] + [x3,[x2,x1]]
		other = LieNormalize.normalize(_comb(('[x1,[x3,x2]]', 1), ('[x3,[x2,x1]]', 1)))
		self.assertEqual(result, other)

	def test_fixes_L(self):
		for n in range(1, 7):
			for e in Enumeration.iter_L(n):
				self.assertEqual(LieNormalize.normalize(e), LinComb.from_expr(e))

	def test_idempotent_on_words(self):
		for e in Enumeration.enumerate_words([1, 2, 3, 4]):
			once = LieNormalize.normalize(e)
			self.assertTrue(once.is_normal())
			self.assertEqual(LieNormalize.normalize(once), once)

	def test_memo_is_bounded_and_reused(self):
		self.assertEqual(LieNormalize._normal_form.cache_info().maxsize, LieNormalize.NORMAL_FORM_CACHE_SIZE)
		e = parse('[[x3,x1],[x4,x2]]')
		first = LieNormalize.normalize(e)
		hits = LieNormalize._normal_form.cache_info().hits
		self.assertEqual(LieNormalize.normalize(e), first)
		self.assertGreater(LieNormalize._normal_form.cache_info().hits, hits)
		self.assertFalse(hasattr(LieNormalize, 'clear_cache'))

	def test_halts_on_n8_words(self):
		rng = np.random.RandomState(8)
		for _ in range(5):
			self.assertTrue(LieNormalize.normalize(Enumeration.random_word(range(1, 9), rng)).is_normal())

	def test_rejects_malformed(self):
		with self.assertRaises(ValueError):
			LieNormalize.normalize(parse('[x1,x3]'))

	def test_bracket_normal(self):
		self.assertEqual(LieNormalize.bracket_normal(parse('x1'), parse('x1')), _comb(('[x1,x2]', 1)))
		self.assertEqual(LieNormalize.bracket_normal(parse('x1'), parse('[x1,x2]')), _comb(('[x1,[x2,x3]]', 1)))

	def test_bracket_normal_antisymmetry(self):
		a = _comb(('[x1,x2]', 2))
		b = _comb(('[[x1,x2],x3]', 1), ('[x1,[x2,x3]]', -3))
		ab = LieNormalize.bracket_normal(a, b)
		# [B,A] with B on 1..3 and A on 4..5, relabeled back to A on 1..2 and B on 3..5
		ba = LieNormalize.bracket_normal(b, a)
		swap = {1: 3, 2: 4, 3: 5, 4: 1, 5: 2}
		self.assertTrue((ab + LieNormalize.normalize(ba.relabel(swap))).is_zero())

	@settings(max_examples=60, deadline=None)
	@given(st.integers(min_value=2, max_value=7), st.integers(min_value=0, max_value=2 ** 31 - 1))
	def test_antisymmetry_vanishes(self, n, seed):
		a, b = _random_parts(seed, n, 2)
		self.assertTrue(LieNormalize.antisymmetry_defect(a, b).is_zero())

	@settings(max_examples=60, deadline=None)
	@given(st.integers(min_value=3, max_value=7), st.integers(min_value=0, max_value=2 ** 31 - 1))
	def test_jacobi_vanishes(self, n, seed):
		a, b, c = _random_parts(seed, n, 3)
		self.assertTrue(LieNormalize.jacobi_defect(a, b, c).is_zero())

	def test_span_rank(self):
		for n in range(1, 5):
			self.assertEqual(LieNormalize.span_rank(n), math.factorial(n - 1))


class WeightTest(unittest.TestCase):
	def test_weights(self):
		self.assertEqual(LieNormalize.weight_of(parse('x1')).weight, 0)
		self.assertEqual(LieNormalize.weight_of(parse('[[x1,x3],[x2,x4]]')).weight, 1)
		self.assertEqual(LieNormalize.weight_of(parse('[[x1,x4],x2]')).weight, 2)
		self.assertEqual(LieNormalize.weight_of(parse('[[[x4,x1],x3],x2]')).weight, 3)


class LinCombTest(unittest.TestCase):
	def test_arithmetic(self):
		a = _comb(('[x1,x2]', 3))
		self.assertTrue((a - a).is_zero())
		self.assertTrue((a + (-a)).is_zero())
		self.assertEqual((2 * a).coefficient(parse('[x1,x2]')), 6)
		self.assertEqual(len(a + _comb(('[x2,x1]', 1))), 2)

	def test_zero_coefficients_dropped(self):
		c = LinComb({parse('[x1,x2]'): 0, parse('[x2,x1]'): 4})
		self.assertEqual(len(c), 1)

	def test_arity_mismatch(self):
		with self.assertRaises(ValueError):
			_comb(('[x1,x2]', 1)) + _comb(('[x1,[x2,x3]]', 1))
		with self.assertRaises(ValueError):
			LinComb({parse('[x1,x2]'): 1, parse('[x1,[x2,x3]]'): 1})

	def test_lines_sorted(self):
		c = _comb(('[x1,[x2,x3]]', -1), ('[[x1,x2],x3]', 1))
		self.assertEqual(c.to_lines(), ['+1·[[x1,x2],x3]', '-1·[x1,[x2,x3]]'])


class EvaluateTest(unittest.TestCase):
	def test_commutator_of_equal_matrices(self):
		m = np.arange(9).reshape(3, 3)
		value = LieNormalize.evaluate(parse('[x1,x2]'), {1: m, 2: m})
		npt.assert_array_equal(value.astype(np.int64), np.zeros((3, 3), dtype=np.int64))

	def test_oracle_agrees_with_normal_form(self):
		rng = np.random.RandomState(100)
		for _ in range(100):
			n = int(rng.randint(2, 8))
			word = Enumeration.random_word(range(1, n + 1), rng)
			assignment = LieNormalize.random_assignment(n, 5, rng)
			lhs = LieNormalize.evaluate(word, assignment)
			rhs = LieNormalize.evaluate(LieNormalize.normalize(word), assignment)
			npt.assert_array_equal(lhs, rhs)

	def test_jacobi_example_on_matrices(self):
		rng = np.random.RandomState(3)
		assignment = LieNormalize.random_assignment(3, 4, rng)
		lhs = LieNormalize.evaluate(parse('[[x1,x3],x2]'), assignment)
		rhs = LieNormalize.evaluate(_comb(('[x1,[x3,x2]]', 1), ('[x3,[x2,x1]]', 1)), assignment)
		npt.assert_array_equal(lhs, rhs)

	def test_dimension_mismatch(self):
		with self.assertRaises(ValueError):
			LieNormalize.evaluate(parse('[x1,x2]'), {1: np.eye(2, dtype=int), 2: np.eye(3, dtype=int)})
		with self.assertRaises(ValueError):
			LieNormalize.evaluate(parse('[x1,x2]'), {1: np.eye(2, dtype=int)})


if __name__ == '__main__':
	unittest.main()
