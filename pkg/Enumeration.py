#!/usr/bin/python3

## @package Enumeration
#
# Exhaustive generation of L(n) and of its prime subset P(n).
#
# Generation follows the cardinality argument for L(n): an element of L(n)
# is `[A1, A2]` where the leaf set of `A1` contains 1, the leaf set of `A2`
# contains n, and the remaining indices `2..n-1` are shuffled between them.
# The words on a given index set are the order-isomorphic images of
# L(size of the set), so they are generated once per index set and shared
# between every expression that uses them.
#

import itertools
import logging
import math

from BracketExpr import Leaf, Bracket

logger = logging.getLogger(__name__)


## Default upper bound on n for exhaustive generation (10! expressions)
#
DEFAULT_MAX_N = 11


## Raised when a request exceeds a configured size cap
#
class ResourceLimitError(RuntimeError):
	pass


def _check_limit(n, max_n, flag='--max-n'):
	if max_n is not None and n > max_n:
		raise ResourceLimitError('n = {} exceeds the configured limit of {}; raise it with {}'.format(n, max_n, flag))


## Generates the elements of L on the index set `indices` (a sorted tuple)
#
# `memo` caches the result for every proper index subset.
#
def _generate(indices, memo):
	if len(indices) == 1:
		yield Leaf(indices[0])
		return

	first, last = indices[0], indices[-1]
	middle = indices[1:-1]
	for left_size in range(1, len(indices)):
		for chosen in itertools.combinations(middle, left_size - 1):
			left_indices = (first,) + chosen
			chosen_set = set(chosen)
			right_indices = tuple(i for i in middle if i not in chosen_set) + (last,)
			for left in _generated(left_indices, memo):
				for right in _generated(right_indices, memo):
					yield Bracket(left, right)


def _generated(indices, memo):
	words = memo.get(indices)
	if words is None:
		words = list(_generate(indices, memo))
		memo[indices] = words
	return words


## Iterates over L(n) in generation order (not sorted).
#
def iter_L(n):
	if n < 1:
		raise ValueError('n must be positive, got {}'.format(n))
	memo = dict()
	yield from _generate(tuple(range(1, n + 1)), memo)
	logger.debug('L(%d): %d index sets cached', n, len(memo))


## Returns every element of L(n) exactly once, sorted by canonical text.
#
# @param n (int)
# <br>	-- number of symbols, `n >= 1`
#
# @param max_n (int)
# <br>	-- size cap; `None` disables it
#
# @returns (list of Expr)
# <br>	-- `(n-1)!` expressions
#
# @throws ResourceLimitError if `n > max_n`
#
def enumerate_L(n, max_n=DEFAULT_MAX_N):
	_check_limit(n, max_n)
	words = list(iter_L(n))
	words.sort(key=lambda e: e.text)
	logger.debug('enumerate_L(%d) produced %d expressions', n, len(words))
	return words


## Returns the prime elements of L(n), sorted by canonical text.
#
# Every generated word is in L(n), so an element is prime exactly when no
# bracket strictly inside it is connected.
#
def enumerate_P(n, max_n=DEFAULT_MAX_N):
	if n < 2:
		raise ValueError('enumerate_P expects n >= 2, got {}'.format(n))
	_check_limit(n, max_n)
	primes = [e for e in iter_L(n) if not e.inner_connected]
	primes.sort(key=lambda e: e.text)
	return primes


## Counts L(n) by generation
#
def count_L(n, max_n=DEFAULT_MAX_N):
	_check_limit(n, max_n)
	total = 0
	for _ in iter_L(n):
		total += 1
	return total


## Counts P(n) by generation
#
def count_P(n, max_n=DEFAULT_MAX_N):
	if n < 2:
		raise ValueError('count_P expects n >= 2, got {}'.format(n))
	_check_limit(n, max_n)
	total = 0
	for e in iter_L(n):
		if not e.inner_connected:
			total += 1
	logger.debug('count_P(%d) = %d', n, total)
	return total


## Number of (left size, shuffle) splits of the top-level bracket, with the
# number of expressions each contributes. The totals sum to `(n-1)!`.
#
# @returns (list of tuple)
# <br>	Format: `[(j, binom(n-2, j-1), (j-1)! (n-j-1)!), ...]`
#
def split_counts(n):
	if n < 2:
		return []
	return [(j, math.comb(n - 2, j - 1), math.factorial(j - 1) * math.factorial(n - j - 1)) for j in range(1, n)]


#######################
# General bracket words
#######################

def _bracketings(seq):
	if len(seq) == 1:
		yield Leaf(seq[0])
		return
	for cut in range(1, len(seq)):
		for left in list(_bracketings(seq[:cut])):
			for right in _bracketings(seq[cut:]):
				yield Bracket(left, right)


## Iterates over every full binary bracketing of every ordering of `indices`.
#
# These are general words, most of them not in L(n). There are
# `Catalan(n-1) * n!` of them.
#
def enumerate_words(indices):
	for ordering in itertools.permutations(indices):
		yield from _bracketings(ordering)


## Returns a random bracket word on `indices`
#
# @param rng (numpy.random.RandomState)
#
def random_word(indices, rng):
	ordering = [int(i) for i in rng.permutation(list(indices))]
	return _random_shape(ordering, rng)


def _random_shape(seq, rng):
	if len(seq) == 1:
		return Leaf(seq[0])
	cut = int(rng.randint(1, len(seq)))
	return Bracket(_random_shape(seq[:cut], rng), _random_shape(seq[cut:], rng))


## Draws an element of L on `indices` uniformly at random.
#
# Every top-level split of L(n) contributes `binom(n-2, j-1) (j-1)! (n-j-1)!
# = (n-2)!` expressions, so the left size `j` is uniform on `1..n-1` and
# the shuffle of the middle indices is a uniform subset of size `j-1`.
#
# @param indices (int or sequence)
# <br>	-- n for `1..n`, or a sequence of distinct indices
#
# @param rng (numpy.random.RandomState)
#
def random_L(indices, rng):
	if isinstance(indices, int):
		indices = range(1, indices + 1)
	indices = tuple(sorted(int(i) for i in indices))
	if not indices:
		raise ValueError('random_L needs at least one index')
	return _random_L(indices, rng)


def _random_L(indices, rng):
	if len(indices) == 1:
		return Leaf(indices[0])
	middle = indices[1:-1]
	left_size = int(rng.randint(1, len(indices)))
	chosen = set(int(i) for i in rng.choice(middle, left_size - 1, replace=False)) if left_size > 1 else set()
	left_indices = (indices[0],) + tuple(i for i in middle if i in chosen)
	right_indices = tuple(i for i in middle if i not in chosen) + (indices[-1],)
	return Bracket(_random_L(left_indices, rng), _random_L(right_indices, rng))
