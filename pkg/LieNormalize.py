#!/usr/bin/python3

## @package LieNormalize
#
# Rewrites integer combinations of bracket words onto the L(n) basis using
# only antisymmetry and the Jacobi identity, and evaluates combinations in
# the commutator algebra of integer matrices as an independent check.
#
# Rewriting rules:
#   - antisymmetry: `[A,B] = -[B,A]`
#   - Jacobi: `[[A,B],C] = [A,[B,C]] + [[A,C],B]`
#
# At a bracket whose smallest and largest index `lo`, `hi` share a child,
# that child is first brought to normal form (so `lo` sits on its left and
# `hi` on its right) and one Jacobi move then leaves two words in which
# `lo` and `hi` are split between the two children. Once they are split,
# antisymmetry orients `lo` to the left and the two children are
# normalized on their own. Every recursive call is on a strictly smaller
# word or on a word whose weight is 1, so rewriting terminates.
#

import functools
import logging
from collections import namedtuple, defaultdict

import numpy as np
import sympy

import BracketExpr
import Enumeration
from BracketExpr import Bracket

logger = logging.getLogger(__name__)


## Entries kept by the normal-form cache
#
NORMAL_FORM_CACHE_SIZE = 1 << 18


## A word together with its weight at the outer level
#
# `weight` is the number of nested brackets, starting from the outer one,
# that contain both the smallest and the largest index of the word.
#
WeightContext = namedtuple('WeightContext', ['expr', 'weight'])


def weight_of(e):
	if e.is_leaf():
		return WeightContext(e, 0)
	lo, hi = e.lo, e.hi
	weight = 0
	node = e
	while not node.is_leaf():
		weight += 1
		if node.left.lo == lo and node.left.hi == hi:
			node = node.left
		elif node.right.lo == lo and node.right.hi == hi:
			node = node.right
		else:
			break
	return WeightContext(e, weight)


## A formal integer combination of bracket words on `1..arity`
#
# Terms are keyed by Expr, whose identity is its canonical text. Zero
# coefficients are never stored.
#
class LinComb:
	__slots__ = ('terms', 'arity')

	## Constructor
	#
	# @param terms (dict)
	# <br>	-- Expr to integer coefficient
	#
	# @param arity (int)
	# <br>	-- number of symbols; inferred from the terms when omitted
	#
	def __init__(self, terms=None, arity=None):
		self.terms = {e: int(c) for e, c in (terms or {}).items() if c != 0}
		if arity is None:
			if not self.terms:
				raise ValueError('The arity of an empty combination must be given')
			arity = next(iter(self.terms)).count
		for e in self.terms:
			if e.count != arity:
				raise ValueError('Term {} does not have {} symbols'.format(e.text, arity))
		self.arity = arity

	@classmethod
	def from_expr(cls, e, coeff=1):
		return cls({e: coeff}, e.count)

	@classmethod
	def zero(cls, arity):
		return cls({}, arity)

	## Terms as `(Expr, coeff)` pairs, sorted by canonical text
	#
	def items(self):
		return sorted(self.terms.items(), key=lambda item: item[0].text)

	def coefficient(self, e):
		return self.terms.get(e, 0)

	def is_zero(self):
		return not self.terms

	## True iff every term is in L(arity)
	#
	def is_normal(self):
		return all(BracketExpr.is_in_L(e) for e in self.terms)

	def relabel(self, mapping):
		out = defaultdict(int)
		for e, c in self.terms.items():
			out[BracketExpr.relabel(e, mapping)] += c
		return LinComb(out, self.arity)

	def _check_arity(self, other):
		if self.arity != other.arity:
			raise ValueError('Cannot combine arities {} and {}'.format(self.arity, other.arity))

	def __add__(self, other):
		self._check_arity(other)
		out = defaultdict(int, self.terms)
		for e, c in other.terms.items():
			out[e] += c
		return LinComb(out, self.arity)

	def __sub__(self, other):
		return self + (-other)

	def __neg__(self):
		return LinComb({e: -c for e, c in self.terms.items()}, self.arity)

	def __mul__(self, scalar):
		return LinComb({e: scalar * c for e, c in self.terms.items()}, self.arity)

	__rmul__ = __mul__

	def __eq__(self, other):
		if not isinstance(other, LinComb):
			return NotImplemented
		return self.arity == other.arity and self.terms == other.terms

	def __len__(self):
		return len(self.terms)

	## One `±c·expr` line per term, sorted by term text
	#
	def to_lines(self):
		return ['{:+d}·{}'.format(c, e.text) for e, c in self.items()]

	def __repr__(self):
		return 'LinComb({})'.format(' '.join(self.to_lines()) or '0')


def as_lincomb(value):
	if isinstance(value, LinComb):
		return value
	return LinComb.from_expr(value)


#######################
# Rewriting
#######################

## Rewrites a combination of words into the L(n) basis.
#
# @param c (LinComb or Expr)
# <br>	-- every term a word on `1..n`
#
# @returns (LinComb)
# <br>	-- in normal form: every term is in L(n)
#
# @throws ValueError on a malformed term
#
def normalize(c):
	c = as_lincomb(c)
	out = defaultdict(int)
	for e, coeff in c.terms.items():
		BracketExpr.validate_word(e)
		for term, tc in _normal_form(e):
			out[term] += coeff * tc
	result = LinComb(out, c.arity)
	logger.debug('normalize: %d terms in, %d terms out, cache %s', len(c), len(result), _normal_form.cache_info())
	return result


## Normal form of a single word on any set of distinct indices
#
# @returns (tuple)
# <br>	Format: `((Expr, coeff), ...)`
#
@functools.lru_cache(maxsize=NORMAL_FORM_CACHE_SIZE)
def _normal_form(e):
	if e.is_leaf():
		return ((e, 1),)

	lo, hi = e.lo, e.hi
	left, right = e.left, e.right
	sign = 1
	if right.lo == lo:
		left, right = right, left
		sign = -1

	acc = defaultdict(int)
	if left.hi == hi:
		# lo and hi share the left child
		for inner, ci in _normal_form(left):
			a1, a2 = inner.left, inner.right
			for term in (Bracket(a1, Bracket(a2, right)), Bracket(Bracket(a1, right), a2)):
				for t, ct in _normal_form(term):
					acc[t] += sign * ci * ct
	else:
		left_terms = _normal_form(left)
		right_terms = _normal_form(right)
		for l, cl in left_terms:
			for r, cr in right_terms:
				acc[Bracket(l, r)] += sign * cl * cr

	return tuple((t, c) for t, c in acc.items() if c != 0)


## Brackets two combinations and normalizes the result.
#
# `b` is shifted past the symbols of `a`, so a combination on `1..k` and
# one on `1..l` give one on `1..k+l`.
#
def bracket_normal(a, b):
	a = as_lincomb(a)
	b = as_lincomb(b)
	k = a.arity
	out = defaultdict(int)
	for ea, ca in a.terms.items():
		for eb, cb in b.terms.items():
			out[Bracket(ea, BracketExpr.shift(eb, k))] += ca * cb
	return normalize(LinComb(out, k + b.arity))


## `N([A,B]) + N([B,A])` for words on disjoint index sets covering `1..n`
#
def antisymmetry_defect(a, b):
	return normalize(Bracket(a, b)) + normalize(Bracket(b, a))


## `N([[A,B],C]) - N([A,[B,C]]) - N([[A,C],B])`
#
def jacobi_defect(a, b, c):
	lhs = normalize(Bracket(Bracket(a, b), c))
	return lhs - normalize(Bracket(a, Bracket(b, c))) - normalize(Bracket(Bracket(a, c), b))


#######################
# Matrix commutator oracle
#######################

## Evaluates a combination in the commutator algebra of integer matrices.
#
# @param c (LinComb or Expr)
#
# @param assignment (dict)
# <br>	-- index to square integer matrix, all of the same dimension
#
# @returns (numpy array, dtype object)
# <br>	-- exact integer matrix
#
# @throws ValueError on a dimension mismatch or a missing index
#
def evaluate(c, assignment):
	c = as_lincomb(c)
	mats = dict()
	dim = None
	for index, m in assignment.items():
		m = np.array(m, dtype=object)
		if m.ndim != 2 or m.shape[0] != m.shape[1]:
			raise ValueError('Matrix for x{} is not square: shape {}'.format(index, m.shape))
		if dim is not None and m.shape[0] != dim:
			raise ValueError('Matrix for x{} has dimension {}, expected {}'.format(index, m.shape[0], dim))
		dim = m.shape[0]
		mats[index] = m
	if dim is None:
		raise ValueError('Empty assignment')

	total = np.zeros((dim, dim), dtype=object)
	memo = dict()
	for e, coeff in c.terms.items():
		total = total + coeff * _evaluate_word(e, mats, memo)
	return total


def _evaluate_word(e, mats, memo):
	if e.is_leaf():
		if e.index not in mats:
			raise ValueError('No matrix assigned to x{}'.format(e.index))
		return mats[e.index]
	value = memo.get(e)
	if value is None:
		x = _evaluate_word(e.left, mats, memo)
		y = _evaluate_word(e.right, mats, memo)
		value = np.dot(x, y) - np.dot(y, x)
		memo[e] = value
	return value


## Random integer matrices for `x1..xn`, entries uniform in `[-bound, bound]`
#
def random_assignment(n, dim, rng, bound=3):
	return {i: rng.randint(-bound, bound + 1, size=(dim, dim)).astype(object) for i in range(1, n + 1)}


#######################
# Rank of the span
#######################

## Exact rank of the normal forms of every bracket word on `1..n`.
#
# Each normal form is written in coordinates over the L(n) basis; the rank
# of the resulting integer matrix is `(n-1)!` when L(n) spans the whole
# degree-n part.
#
def span_rank(n):
	basis = Enumeration.enumerate_L(n, max_n=None)
	position = {e: pos for pos, e in enumerate(basis)}
	rows = set()
	for word in Enumeration.enumerate_words(range(1, n + 1)):
		row = [0] * len(basis)
		for e, c in normalize(word).terms.items():
			row[position[e]] = c
		# Rows that differ by a sign span the same line
		first = next((x for x in row if x != 0), 0)
		if first < 0:
			row = [-x for x in row]
		rows.add(tuple(row))
	rows.discard(tuple([0] * len(basis)))
	logger.info('span_rank(%d): %d distinct normal forms over a basis of %d', n, len(rows), len(basis))
	if not rows:
		return 0
	return sympy.Matrix(sorted(rows)).rank()
