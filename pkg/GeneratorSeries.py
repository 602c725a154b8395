#!/usr/bin/python3

## @package GeneratorSeries
#
# Generating series of the Lie operad and of its prime generators:
#
#   - `F(x) = sum (n-1)! x^n`, the dimensions of Lie(n)
#   - `B(x) = -x + sum b_n x^n = -F^{<-1>}(x)`, signed prime counts
#   - `A(x) = -x / B(x)`, the stabilized-interval-free permutations
#
# with the recurrences, differential equation and Lagrange-inversion
# identities that tie them together. All arithmetic is exact.
#

import logging
import math
from fractions import Fraction as F

import PowerSeries
from PowerSeries import Series

logger = logging.getLogger(__name__)


## `F(x)` truncated at degree `N`
#
def lie_series(N):
	if N < 1:
		raise ValueError('lie_series needs N >= 1, got {}'.format(N))
	return Series([0] + [math.factorial(n - 1) for n in range(1, N + 1)], N)


# b_0 = 0, b_1 = -1, b_2 = 1. Longer tables replace the tuple by a single
# assignment, so a reader always sees a complete prefix.
_b_table = (0, -1, 1)


## Coefficients `b_0..b_N` of `B(x)` from the recurrence
#
#     b_n = sum_{k=2}^{n-2} ((k+1) b_{k+1} + b_k) b_{n-k},  n >= 3
#
def b_coefficients(N):
	global _b_table
	table = _b_table
	start = len(table)
	if N >= start:
		b = list(table)
		for n in range(start, N + 1):
			b.append(sum(((k + 1) * b[k + 1] + b[k]) * b[n - k] for k in range(2, n - 1)))
		# A concurrent caller may have published a longer table meanwhile
		if len(b) > len(_b_table):
			_b_table = tuple(b)
		logger.debug('b recurrence extended from %d to %d', start - 1, N)
		return b
	return list(table[:N + 1])


## The prime counts `b_2..b_N`
#
def b_recurrence(N):
	if N < 2:
		raise ValueError('b_recurrence needs N >= 2, got {}'.format(N))
	return b_coefficients(N)[2:]


def b_series(N):
	return Series(b_coefficients(N), N)


## `B(x)` computed as `-F^{<-1>}(x)` instead of by the recurrence
#
def b_from_inverse(N):
	return -PowerSeries.comp_inverse(lie_series(N))


## `x B'(x) + (B'(x) + B(x)) B(x)`, which vanishes identically.
#
# @param N (int)
# <br>	-- truncation order of the result
#
# @param b (Series)
# <br>	-- series to test in place of `B`; the result then has order
# 	`b.order - 1`
#
def ode_residual(N=None, b=None):
	if b is None:
		b = b_series(N + 1)
	db = b.derivative()
	residual = db.shift_up(1) + (db + b) * b
	if N is not None and N < residual.order:
		residual = residual.truncate(N)
	return residual


## `A(x) = x / (-B(x))` truncated at degree `N`
#
def sif_series(N):
	if N < 0:
		raise ValueError('sif_series needs N >= 0, got {}'.format(N))
	minus_b = -b_series(N + 1)
	return PowerSeries.divide(Series.constant(1, N), minus_b.shift_down(1))


## `a_0..a_N` from `(n-1) a_n = (n+1) b_{n+1} + b_n`, with `a_0 = a_1 = 1`
#
def a_recurrence(N):
	b = b_coefficients(N + 1)
	a = [1, 1][:N + 1]
	for n in range(2, N + 1):
		q, r = divmod((n + 1) * b[n + 1] + b[n], n - 1)
		if r != 0:
			raise ArithmeticError('a_{} is not an integer: remainder {}'.format(n, r))
		a.append(q)
	return a


## Prime densities `p_n = b_n / (n-1)!` for `n = 2..N` from the rational
# recurrence
#
#     p_n = sum_{k=2}^{n-2} ((k+1) p_{k+1} + p_k / k) p_{n-k} / binom(n-1, k)
#
def p_recurrence(N):
	if N < 2:
		raise ValueError('p_recurrence needs N >= 2, got {}'.format(N))
	p = [F(0), F(-1), F(1)]
	for n in range(3, N + 1):
		total = F(0)
		for k in range(2, n - 1):
			total += ((k + 1) * p[k + 1] + p[k] / k) * p[n - k] / math.comb(n - 1, k)
		p.append(total)
	return p[2:N + 1]


## `b_n = -(1/n) [x^(n-1)] (x / F(x))^n`, by Lagrange inversion
#
def lagrange_coefficient(n):
	if n < 2:
		raise ValueError('lagrange_coefficient needs n >= 2, got {}'.format(n))
	f_over_x = lie_series(n).shift_down(1)
	x_over_f = PowerSeries.divide(Series.constant(1, n - 1), f_over_x)
	value = -PowerSeries.power_coefficient(x_over_f, n, n - 1) / n
	if value.denominator != 1:
		raise ArithmeticError('Lagrange coefficient {} is not an integer'.format(value))
	return int(value)


## `(1/n) [x^(n-1)] A(x)^n`, which equals `(n-1)!` for the SIF series
#
def callan_coefficient(n, a=None):
	if a is None:
		a = sif_series(n - 1)
	return PowerSeries.power_coefficient(a, n, n - 1) / n


## The free operad counts `alpha` for generator counts `beta`.
#
# Solves `beta(alpha(x)) + x = alpha(x)`; each round of the fixed-point
# iteration settles one more degree, since `beta` starts at degree 2.
#
# @param beta (Series)
# <br>	-- generator counts, zero in degrees 0 and 1
#
def free_operad_series(beta, N=None):
	if N is None:
		N = beta.order
	if beta.coeffs[0] != 0 or (beta.order >= 1 and beta.coeffs[1] != 0):
		raise ValueError('Generators must live in arity >= 2')
	beta = beta.truncate(N)
	x = Series.x(N)
	alpha = x
	for _ in range(N):
		alpha = x + PowerSeries.compose(beta, alpha)
	return alpha


## `a_n / n!` written through the prime densities:
# `((n+1)/(n-1)) p_{n+1} + p_n / (n (n-1))`
#
def sif_density_from_primes(n):
	if n < 2:
		raise ValueError('sif_density_from_primes needs n >= 2, got {}'.format(n))
	b = b_coefficients(n + 1)
	p_n = F(b[n], math.factorial(n - 1))
	p_next = F(b[n + 1], math.factorial(n))
	return F(n + 1, n - 1) * p_next + p_n / (n * (n - 1))
