#!/usr/bin/python3

## @package PowerSeries
#
# Truncated formal power series with exact rational coefficients.
#
# A Series of order N knows its coefficients of degree 0..N. Results of
# arithmetic are only as precise as their operands: the order of a result
# is the largest N for which every coefficient up to N is determined.
#

from fractions import Fraction as F


class Series:
	__slots__ = ('coeffs', 'order')

	## Constructor
	#
	# @param coeffs (sequence)
	# <br>	-- coefficients by degree, starting at degree 0; missing
	# 	degrees up to `order` are zero
	#
	# @param order (int)
	# <br>	-- truncation order; defaults to `len(coeffs) - 1`
	#
	def __init__(self, coeffs, order=None):
		coeffs = [F(c) for c in coeffs]
		if order is None:
			order = len(coeffs) - 1
		if order < 0:
			raise ValueError('Series order must be nonnegative, got {}'.format(order))
		coeffs = coeffs[:order + 1]
		coeffs.extend([F(0)] * (order + 1 - len(coeffs)))
		self.coeffs = tuple(coeffs)
		self.order = order

	## The series `x` truncated at `order`
	#
	@classmethod
	def x(cls, order):
		return cls([0, 1], order)

	@classmethod
	def constant(cls, value, order):
		return cls([value], order)

	def __getitem__(self, degree):
		if degree < 0 or degree > self.order:
			raise IndexError('Degree {} outside 0..{}'.format(degree, self.order))
		return self.coeffs[degree]

	def truncate(self, order):
		if order > self.order:
			raise ValueError('Cannot extend a series of order {} to {}'.format(self.order, order))
		return Series(self.coeffs, order)

	## Smallest degree with a nonzero coefficient, `None` for zero
	#
	def valuation(self):
		for degree, c in enumerate(self.coeffs):
			if c != 0:
				return degree
		return None

	def is_zero(self):
		return self.valuation() is None

	def _lift(self, other):
		if isinstance(other, Series):
			return other
		return Series.constant(other, self.order)

	def __add__(self, other):
		other = self._lift(other)
		order = min(self.order, other.order)
		return Series([self.coeffs[d] + other.coeffs[d] for d in range(order + 1)], order)

	__radd__ = __add__

	def __neg__(self):
		return Series([-c for c in self.coeffs], self.order)

	def __sub__(self, other):
		return self + (-self._lift(other))

	def __rsub__(self, other):
		return (-self) + other

	def __mul__(self, other):
		if not isinstance(other, Series):
			return Series([c * other for c in self.coeffs], self.order)
		return mul(self, other)

	__rmul__ = __mul__

	def __truediv__(self, other):
		if not isinstance(other, Series):
			return Series([c / F(other) for c in self.coeffs], self.order)
		return divide(self, other)

	def __pow__(self, exponent):
		if exponent < 0:
			return divide(Series.constant(1, self.order), self ** (-exponent))
		result = Series.constant(1, self.order)
		base = self
		while exponent:
			if exponent & 1:
				result = mul(result, base)
			base = mul(base, base)
			exponent >>= 1
		return result

	def __eq__(self, other):
		if not isinstance(other, Series):
			return NotImplemented
		return self.order == other.order and self.coeffs == other.coeffs

	def __hash__(self):
		return hash((self.order, self.coeffs))

	## Multiplies by `x**k`; the order grows by `k`
	#
	def shift_up(self, k=1):
		return Series([0] * k + list(self.coeffs), self.order + k)

	## Divides by `x**k`; the low `k` coefficients must vanish
	#
	def shift_down(self, k=1):
		if any(c != 0 for c in self.coeffs[:k]):
			raise ValueError('Series is not divisible by x^{}'.format(k))
		if self.order < k:
			raise ValueError('Series of order {} has nothing left after dividing by x^{}'.format(self.order, k))
		return Series(self.coeffs[k:], self.order - k)

	def derivative(self):
		if self.order == 0:
			raise ValueError('The derivative of an order-0 series is undetermined')
		return Series([d * self.coeffs[d] for d in range(1, self.order + 1)], self.order - 1)

	def compose(self, other):
		return compose(self, other)

	def comp_inverse(self):
		return comp_inverse(self)

	## Coefficients as integers when they all are, otherwise as Fractions
	#
	def integer_coeffs(self):
		if all(c.denominator == 1 for c in self.coeffs):
			return [int(c) for c in self.coeffs]
		return list(self.coeffs)

	def __repr__(self):
		terms = ['{}*x^{}'.format(c, d) for d, c in enumerate(self.coeffs) if c != 0]
		return 'Series({} + O(x^{}))'.format(' + '.join(terms) or '0', self.order + 1)


def mul(a, b):
	order = min(a.order, b.order)
	ac, bc = a.coeffs, b.coeffs
	out = [F(0)] * (order + 1)
	for i in range(order + 1):
		ai = ac[i]
		if ai == 0:
			continue
		for j in range(order + 1 - i):
			out[i + j] += ai * bc[j]
	return Series(out, order)


## Exact quotient `a / b`; `b` must have a nonzero constant term
#
def divide(a, b):
	b0 = b.coeffs[0]
	if b0 == 0:
		raise ValueError('Division needs a divisor with nonzero constant term')
	order = min(a.order, b.order)
	q = []
	for n in range(order + 1):
		acc = a.coeffs[n]
		for k in range(1, n + 1):
			acc -= b.coeffs[k] * q[n - k]
		q.append(acc / b0)
	return Series(q, order)


## Substitutes `b` into `a`, i.e. `a(b(x))`; requires `b(0) = 0`
#
def compose(a, b):
	if b.coeffs[0] != 0:
		raise ValueError('Composition needs an inner series with zero constant term')
	order = min(a.order, b.order)
	b = b.truncate(order)
	result = Series.constant(a.coeffs[order], order)
	for degree in range(order - 1, -1, -1):
		result = mul(result, b) + a.coeffs[degree]
	return result


## The compositional inverse `g` with `a(g(x)) = x`.
#
# Computed by Lagrange inversion: `[x^n] g = (1/n) [x^(n-1)] (x/a(x))^n`.
#
# @throws ValueError unless `a(0) = 0` and `a'(0) != 0`
#
def comp_inverse(a):
	if a.coeffs[0] != 0:
		raise ValueError('Compositional inverse needs zero constant term')
	if a.order < 1 or a.coeffs[1] == 0:
		raise ValueError('Compositional inverse needs an invertible linear coefficient')
	h = divide(Series.constant(1, a.order - 1), a.shift_down(1))
	out = [F(0)]
	power = h
	for n in range(1, a.order + 1):
		out.append(power.coeffs[n - 1] / n)
		if n < a.order:
			power = mul(power, h)
	return Series(out, a.order)


## `[x^degree]` of `s**exponent`
#
def power_coefficient(s, exponent, degree):
	return (s.truncate(degree) ** exponent)[degree]
