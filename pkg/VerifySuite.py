#!/usr/bin/python3

## @package VerifySuite
#
# Named checks that re-derive every counting, series and asymptotic claim
# at desk scale. Each check is a callable taking a ToolParameters and
# returning `(passed, detail)`.
#

import json
import logging
import math
import time
from collections import namedtuple
from fractions import Fraction as F

import numpy as np

import BracketExpr
import Density
import Enumeration
import FreeOperad
import GeneratorSeries
import GoldenSequences
import LieNormalize
import PowerSeries
import SifPermutation
from PowerSeries import Series

logger = logging.getLogger(__name__)


CheckResult = namedtuple('CheckResult', ['check', 'passed', 'detail', 'seconds'])


class VerifySuite:
	def __init__(self, params):
		self.params = params
		self._checks = []

	def register(self, name, func):
		if any(existing == name for existing, _ in self._checks):
			raise KeyError('Check {} is already registered'.format(name))
		self._checks.append((name, func))

	def names(self):
		return [name for name, _ in self._checks]

	## Runs every check in registration order.
	#
	# An exception inside a check counts as a failure of that check; the
	# remaining checks still run.
	#
	# @returns (list of CheckResult)
	#
	def run(self):
		results = []
		for name, func in self._checks:
			logger.info('running %s', name)
			start = time.perf_counter()
			try:
				passed, detail = func(self.params)
			except Exception as err:
				logger.exception('check %s raised', name)
				passed, detail = False, '{}: {}'.format(type(err).__name__, err)
			seconds = time.perf_counter() - start
			logger.info('%s %s in %.2fs: %s', name, 'passed' if passed else 'FAILED', seconds, detail)
			results.append(CheckResult(name, bool(passed), detail, seconds))
		return results


def all_passed(results):
	return all(r.passed for r in results)


def format_table(results):
	width = max([len(r.check) for r in results] + [5])
	lines = []
	for r in results:
		tag = 'PASS' if r.passed else 'FAIL'
		lines.append('{:4}  {:<{w}}  {:8.2f}s  {}'.format(tag, r.check, r.seconds, r.detail, w=width))
	lines.append('{} of {} checks passed'.format(sum(r.passed for r in results), len(results)))
	return '\n'.join(lines) + '\n'


def format_json_lines(results):
	return ''.join(json.dumps({'check': r.check, 'passed': r.passed, 'detail': r.detail, 'seconds': round(r.seconds, 4)}) + '\n' for r in results)


def _mismatches(pairs):
	return [key for key, expected, actual in pairs if expected != actual]


#######################
# Enumeration and freeness
#######################

def check_cardinality(params):
	top = params.verify_max_n + 1
	bad = _mismatches((n, GoldenSequences.lie_dimension(n), Enumeration.count_L(n, max_n=None)) for n in range(2, top + 1))
	return not bad, '|L(n)| = (n-1)! for n = 2..{}{}'.format(top, '; mismatch at n = {}'.format(bad) if bad else '')


def check_prime_counts(params):
	top = min(max(GoldenSequences.PRIME_COUNTS), params.verify_max_n + 2)
	recurrence = GeneratorSeries.b_coefficients(top)
	bad = []
	for n in range(2, top + 1):
		counted = Enumeration.count_P(n, max_n=None)
		if not (counted == recurrence[n] == GoldenSequences.PRIME_COUNTS[n]):
			bad.append(n)
	return not bad, '|P(n)| = b_n = A134988 for n = 2..{}{}'.format(top, '; mismatch at n = {}'.format(bad) if bad else '')


def _pattern_table(max_arity):
	return {m: Enumeration.enumerate_P(m, max_n=None) for m in range(2, max_arity + 1)}


## Random free-operad elements for the psi/theta round trip
#
# Widths are uniform on `1..FreeWidth`; prime labels of every arity up to
# the width are available.
#
def free_samples(params):
	rng = np.random.RandomState(params.seed)
	patterns = _pattern_table(min(params.max_pattern_arity, params.free_width))
	for _ in range(params.verify_samples):
		width = int(rng.randint(1, params.free_width + 1))
		yield FreeOperad.random_free_element(width, rng, patterns)


def check_freeness_round_trip(params):
	total = 0
	failures = 0
	for n in range(2, params.verify_max_n + 1):
		for e in Enumeration.iter_L(n):
			total += 1
			if FreeOperad.compose_free(FreeOperad.decompose(e)) != e:
				failures += 1

	for f in free_samples(params):
		if FreeOperad.decompose(FreeOperad.compose_free(f)) != f:
			failures += 1
	return failures == 0, 'theta(psi(A)) = A on {} expressions, psi(theta(f)) = f on {} samples, {} failures'.format(total, params.verify_samples, failures)


def _random_triple(rng, max_arity):
	return [Enumeration.random_L(int(rng.randint(1, max_arity + 1)), rng) for _ in range(3)]


## Unit, sequential and parallel associativity, and closure in L
#
def operad_axiom_failures(a, b, c, i, j):
	failures = []
	k, l = a.count, b.count
	compose = BracketExpr.compose
	if compose(BracketExpr.UNIT, 1, a) != a or compose(a, i, BracketExpr.UNIT) != a:
		failures.append('unit')
	jb = (j - 1) % l + 1
	if compose(compose(a, i, b), i + jb - 1, c) != compose(a, i, compose(b, jb, c)):
		failures.append('sequential')
	if k >= 2:
		p, q = sorted((i, j if j != i else (i % k) + 1))
		if p != q:
			lhs = compose(compose(a, q, c), p, b)
			rhs = compose(compose(a, p, b), q + l - 1, c)
			if lhs != rhs:
				failures.append('parallel')
	if not BracketExpr.is_in_L(compose(a, i, b)):
		failures.append('closure')
	return failures


def check_operad_axioms(params):
	rng = np.random.RandomState(params.seed + 1)
	failures = 0
	for _ in range(params.verify_samples):
		a, b, c = _random_triple(rng, 5)
		i = int(rng.randint(1, a.count + 1))
		j = int(rng.randint(1, a.count + 1))
		if operad_axiom_failures(a, b, c, i, j):
			failures += 1
	return failures == 0, '{} random triples, {} failures'.format(params.verify_samples, failures)


def check_tree_compatibility(params):
	rng = np.random.RandomState(params.seed + 2)
	failures = 0
	for _ in range(params.verify_tree_samples):
		a = Enumeration.random_L(int(rng.randint(1, 7)), rng)
		b = Enumeration.random_L(int(rng.randint(1, 7)), rng)
		i = int(rng.randint(1, a.count + 1))
		lhs = FreeOperad.tree_of(BracketExpr.compose(a, i, b))
		rhs = FreeOperad.tree_compose(FreeOperad.tree_of(a), i, FreeOperad.tree_of(b))
		if lhs != rhs:
			failures += 1
	return failures == 0, '{} random pairs, {} failures'.format(params.verify_tree_samples, failures)


def check_reduced_trees(params):
	top = min(max(GoldenSequences.REDUCED_TREE_COUNTS), params.verify_max_n)
	bad = _mismatches((k, GoldenSequences.REDUCED_TREE_COUNTS[k], sum(1 for _ in FreeOperad.enumerate_trees(k))) for k in range(1, top + 1))
	b = GeneratorSeries.b_coefficients(top)
	bad += _mismatches(('free{}'.format(n), GoldenSequences.lie_dimension(n), FreeOperad.count_free_elements(n, b)) for n in range(1, top + 1))
	return not bad, 'reduced tree counts and sum over trees of prod b_arity = (n-1)! for n <= {}{}'.format(top, '; mismatch: {}'.format(bad) if bad else '')


#######################
# Series
#######################

def check_inverse_pair(params):
	N = params.series_order
	f = GeneratorSeries.lie_series(N)
	b = GeneratorSeries.b_series(N)
	x = Series.x(N)
	ok = (-PowerSeries.compose(b, f) == x) and (PowerSeries.compose(f, -b) == x)
	return ok, '-B(F(x)) = x and F(-B(x)) = x to order {}'.format(N)


def check_free_operad_series(params):
	N = params.series_order
	beta = GeneratorSeries.b_series(N) + Series.x(N)
	alpha = GeneratorSeries.free_operad_series(beta, N)
	return alpha == GeneratorSeries.lie_series(N), 'beta(alpha(x)) + x = alpha(x) with alpha = F to order {}'.format(N)


def check_ode(params):
	N = params.ode_order
	residual = GeneratorSeries.ode_residual(N)
	return residual.is_zero(), "x B' + (B' + B) B = 0 to order {}".format(N)


def check_sif_series(params):
	N = params.ode_order
	product = PowerSeries.mul(GeneratorSeries.sif_series(N), -GeneratorSeries.b_series(N))
	return product == Series.x(N), 'A(x) (-B(x)) = x to order {}'.format(N)


def check_b_inverse(params):
	N = params.ode_order
	ok = GeneratorSeries.b_from_inverse(N) == GeneratorSeries.b_series(N)
	return ok, 'b recurrence = -F^<-1> coefficients to order {}'.format(N)


def check_callan(params):
	N = params.series_order
	a = GeneratorSeries.sif_series(N)
	bad = [n for n in range(2, N + 1) if GeneratorSeries.callan_coefficient(n, a) != math.factorial(n - 1)]
	return not bad, '(1/n)[x^(n-1)] A^n = (n-1)! for n = 2..{}{}'.format(N, '; mismatch at {}'.format(bad) if bad else '')


def check_p_recurrence(params):
	N = params.series_order
	b = GeneratorSeries.b_coefficients(N)
	expected = [F(b[n], math.factorial(n - 1)) for n in range(2, N + 1)]
	return GeneratorSeries.p_recurrence(N) == expected, 'p_n recurrence = b_n / (n-1)! for n = 2..{}'.format(N)


def check_lagrange(params):
	N = params.series_order
	b = GeneratorSeries.b_coefficients(N)
	bad = [n for n in range(2, N + 1) if GeneratorSeries.lagrange_coefficient(n) != b[n]]
	return not bad, '-(1/n)[x^(n-1)](x/F)^n = b_n for n = 2..{}{}'.format(N, '; mismatch at {}'.format(bad) if bad else '')


#######################
# SIF permutations
#######################

def check_sif_counts(params):
	top = min(GoldenSequences.SIF_BRUTE_FORCE_MAX, params.sif_max_n)
	bad = _mismatches((n, GoldenSequences.SIF_COUNTS[n], SifPermutation.count_sif(n, max_n=None)) for n in range(0, top + 1))
	return not bad, 'brute-force SIF counts = A075834 for n = 0..{}{}'.format(top, '; mismatch at {}'.format(bad) if bad else '')


def check_sif_recurrence(params):
	N = max(60, params.ode_order)
	# a_recurrence raises unless every division is exact
	a = GeneratorSeries.a_recurrence(N)
	series = GeneratorSeries.sif_series(N).integer_coeffs()
	golden = [GoldenSequences.SIF_COUNTS[n] for n in sorted(GoldenSequences.SIF_COUNTS)]
	ok = a == series and a[:len(golden)] == golden
	return ok, '(n-1) a_n = (n+1) b_(n+1) + b_n exactly for n = 2..{}'.format(N)


def check_sif_density_from_primes(params):
	N = params.series_order
	a = GeneratorSeries.a_recurrence(N)
	bad = [n for n in range(2, N + 1) if GeneratorSeries.sif_density_from_primes(n) != F(a[n], math.factorial(n))]
	return not bad, 'a_n / n! from prime densities for n = 2..{}'.format(N)


#######################
# Densities
#######################

def _density_check(params, sif):
	passed, constant, rows = Density.residual_decay(params.density_table_n, params.digits, sif=sif, factor=params.density_scale_factor)
	table = ', '.join('n={}: {:.6g}'.format(n, float(scaled)) for n, scaled in rows)
	return passed, 'C = |r_{}| n^3 = {:.6g}; {}'.format(rows[0][0], float(constant), table)


def check_prime_density(params):
	return _density_check(params, sif=False)


def check_sif_density(params):
	return _density_check(params, sif=True)


def check_correction_estimates(params):
	n = max(params.density_table_n)
	c1, c2 = Density.correction_estimates(n, params.digits)
	ok = abs(float(c1) + 3) < 1 and abs(float(c2) + 2.5) < 1
	return ok, 'at n = {}: c1 ~ {:.6f}, c2 ~ {:.6f}'.format(n, float(c1), float(c2))


#######################
# Normalization
#######################

def check_normal_forms_fixed(params):
	top = min(7, params.verify_max_n)
	bad = 0
	for n in range(1, top + 1):
		for e in Enumeration.iter_L(n):
			c = LieNormalize.LinComb.from_expr(e)
			once = LieNormalize.normalize(c)
			if once != c or LieNormalize.normalize(once) != once:
				bad += 1
	return bad == 0, 'normalize fixes L(n) and is idempotent for n <= {}; {} failures'.format(top, bad)


def _random_parts(rng, n, parts):
	order = [int(i) for i in rng.permutation(np.arange(1, n + 1))]
	cuts = sorted(int(c) + 1 for c in rng.choice(n - 1, parts - 1, replace=False))
	bounds = [0] + cuts + [n]
	return [Enumeration.random_word(order[bounds[p]:bounds[p + 1]], rng) for p in range(parts)]


def check_rewriting_laws(params):
	rng = np.random.RandomState(params.seed + 3)
	failures = 0
	for _ in range(params.verify_tree_samples):
		a, b = _random_parts(rng, int(rng.randint(2, 8)), 2)
		if not LieNormalize.antisymmetry_defect(a, b).is_zero():
			failures += 1
		a, b, c = _random_parts(rng, int(rng.randint(3, 8)), 3)
		if not LieNormalize.jacobi_defect(a, b, c).is_zero():
			failures += 1
	return failures == 0, 'antisymmetry and Jacobi vanish on {} instances each, {} failures'.format(params.verify_tree_samples, failures)


def check_matrix_oracle(params):
	rng = np.random.RandomState(params.seed + 4)
	failures = 0
	for _ in range(params.verify_oracle_samples):
		n = int(rng.randint(2, 8))
		word = Enumeration.random_word(range(1, n + 1), rng)
		assignment = LieNormalize.random_assignment(n, 5, rng)
		lhs = LieNormalize.evaluate(word, assignment)
		rhs = LieNormalize.evaluate(LieNormalize.normalize(word), assignment)
		if not np.array_equal(lhs, rhs):
			failures += 1
	return failures == 0, '5x5 commutator evaluation agrees on {} random words, {} failures'.format(params.verify_oracle_samples, failures)


def check_span_rank(params):
	bad = _mismatches((n, GoldenSequences.lie_dimension(n), LieNormalize.span_rank(n)) for n in range(1, 6))
	return not bad, 'rank of normal forms of all words = (n-1)! for n <= 5{}'.format('; mismatch at {}'.format(bad) if bad else '')


#######################
# Suites
#######################

IDENTITY_CHECKS = [
	('series-inverse-pair', check_inverse_pair),
	('series-free-operad', check_free_operad_series),
	('series-ode', check_ode),
	('series-sif-product', check_sif_series),
	('series-b-inverse', check_b_inverse),
	('series-callan', check_callan),
	('series-p-recurrence', check_p_recurrence),
	('series-lagrange', check_lagrange),
]

FULL_CHECKS = [
	('cardinality', check_cardinality),
	('prime-counts', check_prime_counts),
	('freeness-round-trip', check_freeness_round_trip),
	('operad-axioms', check_operad_axioms),
	('tree-compatibility', check_tree_compatibility),
	('reduced-trees', check_reduced_trees),
] + IDENTITY_CHECKS + [
	('sif-counts', check_sif_counts),
	('sif-recurrence', check_sif_recurrence),
	('sif-density-from-primes', check_sif_density_from_primes),
	('prime-density', check_prime_density),
	('sif-density', check_sif_density),
	('correction-estimates', check_correction_estimates),
	('normal-forms-fixed', check_normal_forms_fixed),
	('rewriting-laws', check_rewriting_laws),
	('matrix-oracle', check_matrix_oracle),
	('span-rank', check_span_rank),
]


def build_suite(params, checks):
	suite = VerifySuite(params)
	for name, func in checks:
		suite.register(name, func)
	return suite


def build_full_suite(params):
	return build_suite(params, FULL_CHECKS)


def build_identity_suite(params):
	return build_suite(params, IDENTITY_CHECKS)
