#!/usr/bin/python3

## @package SifPermutation
#
# Brute-force ground truth for stabilized-interval-free (SIF)
# permutations: a permutation of [n] is SIF if it maps no proper
# subinterval `{i..j}` of [n] onto itself.
#

import itertools
import logging

import cython

from Enumeration import ResourceLimitError

logger = logging.getLogger(__name__)


## Default upper bound on n for exhaustive counting (9! permutations)
#
DEFAULT_MAX_N = 9


## A permutation of `1..n` in one-line notation
#
# `images[i-1]` is the image of `i`.
#
class Permutation:
	__slots__ = ('images',)

	def __init__(self, images):
		images = tuple(int(v) for v in images)
		if sorted(images) != list(range(1, len(images) + 1)):
			raise ValueError('{} is not a permutation of 1..{}'.format(images, len(images)))
		self.images = images

	@property
	def n(self):
		return len(self.images)

	def __call__(self, i):
		return self.images[i - 1]

	def cycles(self):
		seen = set()
		out = []
		for start in range(1, self.n + 1):
			if start in seen:
				continue
			cycle = [start]
			seen.add(start)
			nxt = self(start)
			while nxt != start:
				cycle.append(nxt)
				seen.add(nxt)
				nxt = self(nxt)
			out.append(cycle)
		return out

	def __eq__(self, other):
		if not isinstance(other, Permutation):
			return NotImplemented
		return self.images == other.images

	def __hash__(self):
		return hash(self.images)

	def __repr__(self):
		return 'Permutation({})'.format(list(self.images))


## Builds a Permutation from cycle notation, e.g. `"(1 3)(2 4)"`
#
# @param n (int)
# <br>	-- size of the ground set; symbols missing from the cycles are fixed
#
def from_cycles(text, n):
	images = list(range(1, n + 1))
	for chunk in text.replace(')', ' ').split('('):
		cycle = [int(tok) for tok in chunk.split()]
		for pos, symbol in enumerate(cycle):
			images[symbol - 1] = cycle[(pos + 1) % len(cycle)]
	return Permutation(images)


## Cycle notation with fixed points omitted, e.g. `(1 3)(2 4)`
#
# The empty permutation prints as `()` and the one on `{1}` as `(1)`.
#
def cycle_notation(p):
	if p.n == 1:
		return '(1)'
	parts = ['(' + ' '.join(str(s) for s in cycle) + ')' for cycle in p.cycles() if len(cycle) > 1]
	return ''.join(parts) or '()'


## Tests whether `p` stabilizes no proper subinterval of [n].
#
# For each start `i`, the running minimum and maximum of the images of
# `i..j` are tracked while `j` grows; `{i..j}` is stabilized exactly when
# the minimum is at least `i` and the maximum is `j`.
#
def is_sif(p):
	return _is_sif_images(p.images)


@cython.locals(n=cython.int, i=cython.int, j=cython.int, lo=cython.int, hi=cython.int, v=cython.int)
def _is_sif_images(images):
	n = len(images)
	for i in range(1, n + 1):
		lo = n + 1
		hi = 0
		for j in range(i, n + 1):
			v = images[j - 1]
			if v < lo:
				lo = v
			if v > hi:
				hi = v
			# Once an image falls below i, no interval starting at i works
			if lo < i:
				break
			if hi == j and j - i + 1 < n:
				return False
	return True


## Reference version of `is_sif()` that compares image sets directly
#
def is_sif_naive(p):
	n = p.n
	for i in range(1, n + 1):
		for j in range(i, n + 1):
			if j - i + 1 == n:
				continue
			if set(p.images[i - 1:j]) == set(range(i, j + 1)):
				return False
	return True


def _check_limit(n, max_n):
	if max_n is not None and n > max_n:
		raise ResourceLimitError('n = {} exceeds the SIF enumeration limit of {}; raise it with --max-n'.format(n, max_n))


## Iterates over the SIF permutations of [n] in lexicographic order of
# their one-line notation
#
def enumerate_sif(n, max_n=DEFAULT_MAX_N):
	if n < 0:
		raise ValueError('n must be nonnegative, got {}'.format(n))
	_check_limit(n, max_n)
	for images in itertools.permutations(range(1, n + 1)):
		if _is_sif_images(images):
			yield Permutation(images)


## Counts the SIF permutations of [n] by exhaustive enumeration
#
# @throws ResourceLimitError if `n > max_n`
#
def count_sif(n, max_n=DEFAULT_MAX_N):
	if n < 0:
		raise ValueError('n must be nonnegative, got {}'.format(n))
	_check_limit(n, max_n)
	total = 0
	for images in itertools.permutations(range(1, n + 1)):
		if _is_sif_images(images):
			total += 1
	logger.debug('count_sif(%d) = %d', n, total)
	return total
