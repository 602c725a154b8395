#!/usr/bin/python3

## @package Density
#
# High-precision evaluation of the densities
#
#     p_n = b_n / (n-1)!   (primes in L(n))
#     a_n / n!             (SIF permutations of [n])
#
# against their predicted expansions `e^-1 (1 + c1/n + c2/n^2 + O(1/n^3))`.
# Densities are exact rationals; `e` is a partial sum of `1/k!` with an
# explicit tail bound, and decimals appear only in the final report.
#

import decimal
import logging
import math
from collections import namedtuple
from fractions import Fraction as F

import GeneratorSeries

logger = logging.getLogger(__name__)


MIN_DIGITS = 20

## Predicted `(c1, c2)` of the expansion, by density kind
#
PREDICTIONS = {
	'prime': (F(-3), F(-5, 2)),
	'sif': (F(-1), F(-5, 2)),
}


## One density evaluation
#
# `p_n` is exact; `e_p_n`, `predicted` and `residual` are Decimals at
# `digits` significant digits, with `residual = e_p_n - predicted`.
#
DensityReport = namedtuple('DensityReport', ['kind', 'n', 'p_n', 'e_p_n', 'predicted', 'residual', 'digits'])


## A rational lower approximation of `e`.
#
# @returns (tuple)
# <br>	Format: `(e_K, K, bound)`
# <br>	-- `e_K = sum_{k=0}^{K} 1/k!` and `0 < e - e_K < bound`, where
# 	`bound = 1/(K! K) < 10^-(digits+5)`
#
def euler_number(digits):
	target = F(1, 10 ** (digits + 5))
	total = F(1)
	fact = 1
	K = 0
	while True:
		K += 1
		fact *= K
		total += F(1, fact)
		bound = F(1, fact * K)
		if bound < target:
			return total, K, bound


def _to_decimal(q, digits):
	with decimal.localcontext() as ctx:
		ctx.prec = digits
		return decimal.Decimal(q.numerator) / decimal.Decimal(q.denominator)


def _check_digits(digits):
	if digits < MIN_DIGITS:
		raise ValueError('Precision of {} digits requested; at least {} are required'.format(digits, MIN_DIGITS))


def _report(kind, n, p, digits):
	c1, c2 = PREDICTIONS[kind]
	e_value, K, bound = euler_number(digits)
	e_p = e_value * p
	predicted = 1 + c1 / n + c2 / (n * n)
	logger.debug('%s density n=%d: e from %d terms, tail < %s', kind, n, K, float(bound))
	return DensityReport(kind, n, p, _to_decimal(e_p, digits), _to_decimal(predicted, digits), _to_decimal(e_p - predicted, digits), digits)


## Density of the primes in L(n)
#
# @param n (int)
# <br>	-- `n >= 2`
#
# @param digits (int)
# <br>	-- decimal precision, at least 20
#
# @returns (DensityReport)
#
def density(n, digits=50):
	_check_digits(digits)
	if n < 2:
		raise ValueError('density needs n >= 2, got {}'.format(n))
	b = GeneratorSeries.b_coefficients(n)
	return _report('prime', n, F(b[n], math.factorial(n - 1)), digits)


## Density of the SIF permutations of [n]
#
def sif_density(n, digits=50):
	_check_digits(digits)
	if n < 1:
		raise ValueError('sif_density needs n >= 1, got {}'.format(n))
	a = GeneratorSeries.a_recurrence(n)
	return _report('sif', n, F(a[n], math.factorial(n)), digits)


## `|residual| * n^3` for each report
#
def scaled_residual(report):
	return abs(report.residual) * report.n ** 3


## Checks that the n^3-scaled residual stays bounded.
#
# The first entry of `ns` calibrates the constant `C = |r| n^3`; every
# later n must satisfy `|r_n| n^3 <= factor * C`.
#
# @returns (tuple)
# <br>	Format: `(passed, constant, [(n, scaled), ...])`
#
def residual_decay(ns, digits=50, sif=False, factor=2):
	factor = decimal.Decimal(str(factor))
	evaluate = sif_density if sif else density
	# One pass over the recurrence up to the largest n
	GeneratorSeries.b_coefficients(max(ns) + 1)
	rows = []
	for n in ns:
		rows.append((n, scaled_residual(evaluate(n, digits))))
	constant = rows[0][1]
	passed = all(scaled <= factor * constant for _, scaled in rows[1:])
	logger.info('residual decay (%s): C = %s, passed = %s', 'sif' if sif else 'prime', constant, passed)
	return passed, constant, rows


## Numerical estimates of `c1` and `c2` at a given n
#
# `c1 ~ n (e p_n - 1)` and `c2 ~ n^2 (e p_n - 1 + 3/n)`.
#
def correction_estimates(n, digits=50):
	report = density(n, digits)
	with decimal.localcontext() as ctx:
		ctx.prec = digits
		deviation = report.e_p_n - 1
		return deviation * n, (deviation + decimal.Decimal(3) / n) * n * n
