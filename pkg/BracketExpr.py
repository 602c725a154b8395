#!/usr/bin/python3

## @package BracketExpr
#
# Bracket expressions on indexed symbols `x1, x2, ...`: construction, the
# canonical text form, membership in L(n), connected and prime brackets, and
# the operadic composition.
#
# Every Expr caches the (lo, hi, count) span of its leaf indices, so the
# interval test for a bracket is a constant-time comparison.
#

import logging
import re
from collections import namedtuple

import pyparsing as pp

logger = logging.getLogger(__name__)


## The grammar accepted by `parse()`, used in error messages and CLI help
#
GRAMMAR_TEXT = "expr := leaf | '[' expr ',' expr ']' ; leaf := 'x' nonzero-digit digit*"


## Raised on malformed expression text.
#
# `position` is the 0-based offset into the input where the problem was
# detected, or `None` when no single offset applies.
#
class ExprSyntaxError(ValueError):
	def __init__(self, message, position=None):
		if position is not None:
			message = '{} (at position {})'.format(message, position)
		super().__init__(message)
		self.position = position


## Smallest index, largest index and number of leaves of a subtree
#
# The subtree's index set is an interval exactly when
# `count == hi - lo + 1`.
#
IndexSpan = namedtuple('IndexSpan', ['lo', 'hi', 'count'])


## Base class for bracket expressions. Values are immutable.
#
# Two expressions are equal exactly when their canonical texts are equal.
#
class Expr:
	__slots__ = ('lo', 'hi', 'count', '_text')

	def is_leaf(self):
		return False

	## Canonical text, e.g. `[[x1,x3],[x2,x4]]`
	#
	@property
	def text(self):
		if self._text is None:
			self._text = self._build_text()
		return self._text

	def __eq__(self, other):
		if not isinstance(other, Expr):
			return NotImplemented
		return self is other or self.text == other.text

	def __lt__(self, other):
		return self.text < other.text

	def __hash__(self):
		return hash(self.text)

	def __str__(self):
		return self.text

	def __repr__(self):
		return "Expr('{}')".format(self.text)


class Leaf(Expr):
	__slots__ = ('index',)

	def __init__(self, index):
		if index < 1:
			raise ValueError('Leaf index must be a positive integer, got {}'.format(index))
		self.index = index
		self.lo = index
		self.hi = index
		self.count = 1
		self._text = None

	def is_leaf(self):
		return True

	def _build_text(self):
		return 'x{:d}'.format(self.index)


## A binary bracket `[left, right]`
#
# The leaf index sets of `left` and `right` must be disjoint; this is not
# checked here (use `validate_word()`), so that enumeration stays cheap.
#
# Besides the span, each bracket records:
#   - `connected`: its index set is an interval
#   - `inner_connected`: some bracket strictly below it is connected
#   - `ordered`: at every bracket of the subtree the minimum index is on the
#     left and the maximum index on the right
#
class Bracket(Expr):
	__slots__ = ('left', 'right', 'connected', 'inner_connected', 'ordered')

	def __init__(self, left, right):
		self.left = left
		self.right = right
		self.lo = min(left.lo, right.lo)
		self.hi = max(left.hi, right.hi)
		self.count = left.count + right.count
		self._text = None
		self.connected = (self.count == self.hi - self.lo + 1)
		self.inner_connected = _has_connected_bracket(left) or _has_connected_bracket(right)
		self.ordered = left.lo < right.lo and left.hi < right.hi and _is_ordered(left) and _is_ordered(right)

	def _build_text(self):
		# Children first, from an explicit stack
		stack = [self]
		while stack:
			node = stack[-1]
			pending = [c for c in (node.left, node.right) if c._text is None and not c.is_leaf()]
			if pending:
				stack.extend(pending)
				continue
			stack.pop()
			if node._text is None:
				node._text = '[' + node.left.text + ',' + node.right.text + ']'
		return self._text


def _has_connected_bracket(e):
	return (not e.is_leaf()) and (e.connected or e.inner_connected)


def _is_ordered(e):
	return e.is_leaf() or e.ordered


#######################
# Text form
#######################

## One token of the text form and its 0-based offset
#
class _Token:
	__slots__ = ('loc', 'text')

	def __init__(self, loc, text):
		self.loc = loc
		self.text = text


def _make_tokenizer():
	token = pp.Regex(r'x\d+') | pp.Char('[,]')
	token.set_parse_action(lambda s, loc, toks: _Token(loc, toks[0]))
	return pp.ZeroOrMore(token)

_TOKENIZER = _make_tokenizer()
_LEAF_RE = re.compile(r'x(\d+)')


def _malformed(text, problem, position):
	return ExprSyntaxError('Malformed expression {!r}: {}'.format(text, problem), position=position)


def _make_leaf(token, text):
	digits = token.text[1:]
	if int(digits) == 0:
		raise _malformed(text, 'index 0 is not allowed', token.loc)
	if digits[0] == '0':
		raise _malformed(text, 'index has a leading zero', token.loc)
	return Leaf(int(digits))


## Assembles brackets from the token stream with an explicit stack.
#
# Each open bracket is a frame `[left, right, seen_comma]`, so the nesting
# depth of the input is not bounded by the interpreter's recursion limit.
#
def _assemble(tokens, text):
	frames = []
	done = None

	def place(e, loc):
		nonlocal done
		if not frames:
			if done is not None:
				raise _malformed(text, 'unexpected input after the expression', loc)
			done = e
		elif not frames[-1][2]:
			if frames[-1][0] is not None:
				raise _malformed(text, "expected ','", loc)
			frames[-1][0] = e
		else:
			if frames[-1][1] is not None:
				raise _malformed(text, "expected ']'", loc)
			frames[-1][1] = e

	for token in tokens:
		if token.text == ',':
			if not frames or frames[-1][0] is None or frames[-1][2]:
				raise _malformed(text, "unexpected ','", token.loc)
			frames[-1][2] = True
		elif token.text == ']':
			if not frames or frames[-1][1] is None:
				raise _malformed(text, "unexpected ']'", token.loc)
			left, right, _ = frames.pop()
			place(Bracket(left, right), token.loc)
		elif token.text == '[':
			if not frames and done is not None:
				raise _malformed(text, 'unexpected input after the expression', token.loc)
			if frames and (frames[-1][1] is not None or (frames[-1][0] is not None and not frames[-1][2])):
				raise _malformed(text, "expected ',' or ']'", token.loc)
			frames.append([None, None, False])
		else:
			place(_make_leaf(token, text), token.loc)

	if frames:
		raise _malformed(text, "missing ']'", len(text))
	if done is None:
		raise _malformed(text, 'empty expression', 0)
	return done


## Parses the canonical text form into an Expr.
#
# Whitespace between tokens is ignored. Leaf indices need not form
# `1..n`, but they must be positive and pairwise distinct.
#
# @param text (str)
# <br>	-- e.g. `"[x1,[x2,x3]]"`
#
# @returns (Expr)
#
# @throws ExprSyntaxError on malformed input, index 0 or a duplicate index
#
def parse(text):
	try:
		tokens = _TOKENIZER.parse_string(text, parse_all=True)
	except pp.ParseBaseException as err:
		raise _malformed(text, err.msg, err.loc) from None
	result = _assemble(tokens, text)

	seen = set()
	for match in _LEAF_RE.finditer(text):
		index = int(match.group(1))
		if index in seen:
			raise ExprSyntaxError('Duplicate index x{} in {!r}'.format(index, text), position=match.start())
		seen.add(index)

	return result


## Canonical text form of an expression (no whitespace)
#
def to_text(e):
	return e.text


#######################
# Structure helpers
#######################

## Leaf indices of `e` in left-to-right order
#
def leaves(e):
	out = []
	stack = [e]
	while stack:
		node = stack.pop()
		if node.is_leaf():
			out.append(node.index)
		else:
			stack.append(node.right)
			stack.append(node.left)
	return out


def span(e):
	return IndexSpan(e.lo, e.hi, e.count)


## Iterates over the Bracket nodes of `e` in post-order (children first,
# the outer bracket last).
#
def subexpressions(e):
	if e.is_leaf():
		return
	yield from subexpressions(e.left)
	yield from subexpressions(e.right)
	yield e


## Checks that `e` is a well-formed word on exactly the symbols `1..n`.
#
# @returns (int)
# <br>	-- n, the number of symbols
#
# @throws ValueError otherwise
#
def validate_word(e):
	indices = sorted(leaves(e))
	if indices != list(range(1, len(indices) + 1)):
		raise ValueError('Leaf indices of {} are not exactly {{1..{}}}'.format(e.text, len(indices)))
	return len(indices)


## Applies an index mapping to every leaf.
#
# @param mapping (dict or callable)
# <br>	-- old index to new index
#
def relabel(e, mapping):
	if not callable(mapping):
		mapping = mapping.__getitem__
	if e.is_leaf():
		return Leaf(mapping(e.index))
	return Bracket(relabel(e.left, mapping), relabel(e.right, mapping))


def shift(e, offset):
	if offset == 0:
		return e
	return relabel(e, lambda index: index + offset)


## Relabels a word on any index set to the order-isomorphic word on `1..n`
#
def standardize(e):
	order = sorted(leaves(e))
	if order[0] == 1 and order[-1] == len(order):
		return e
	rank = {index: pos + 1 for pos, index in enumerate(order)}
	return relabel(e, rank)


#######################
# L(n), connectedness, primality
#######################

## Tests membership in L(n).
#
# True iff at every bracket the smallest index of the bracket is in the
# left child and the largest is in the right child.
#
# @throws ValueError if the leaf indices are not exactly `1..n`
#
def is_in_L(e):
	validate_word(e)
	return _is_ordered(e)


## Tests whether the leaf indices under a bracket form an interval.
#
# The order in which the indices appear is irrelevant.
#
# @throws ValueError on a Leaf
#
def is_connected(node):
	if node.is_leaf():
		raise ValueError('is_connected expects a bracket, got the leaf {}'.format(node.text))
	return node.connected


## Tests whether the outer bracket is the only connected bracket of `e`.
#
# @param e (Expr)
# <br>	-- an element of L(n), n >= 2
#
# @throws ValueError if `e` is not in L(n) with n >= 2
#
def is_prime(e):
	if e.is_leaf():
		raise ValueError('is_prime expects an element of L(n) with n >= 2, got {}'.format(e.text))
	if not is_in_L(e):
		raise ValueError('{} is not in L({})'.format(e.text, e.count))
	return not e.inner_connected


#######################
# Operad structure
#######################

## The operad unit `x1`
#
UNIT = Leaf(1)


## Operadic composition: substitutes `b` for the symbol `x_i` of `a`.
#
# The indices of `b` are shifted by `i-1`, and those of `a` above `i` by
# `l-1`, where `l` is the number of symbols of `b`.
#
# @param a (Expr)
# <br>	-- a word on `1..k`
#
# @param i (int)
# <br>	-- position, `1 <= i <= k`
#
# @param b (Expr)
# <br>	-- a word on `1..l`
#
# @returns (Expr)
# <br>	-- a word on `1..k+l-1`
#
def compose(a, i, b):
	k = a.count
	if i < 1 or i > k:
		raise ValueError('Composition index {} out of range 1..{}'.format(i, k))
	l = b.count
	inserted = shift(b, i - 1)
	return _substitute(a, i, l - 1, inserted)


def _substitute(e, i, offset, inserted):
	if e.is_leaf():
		if e.index == i:
			return inserted
		if e.index > i:
			return Leaf(e.index + offset)
		return e
	# Subtrees entirely below i are unchanged
	if e.hi < i:
		return e
	return Bracket(_substitute(e.left, i, offset, inserted), _substitute(e.right, i, offset, inserted))
