#!/usr/bin/python3

## @package FreeOperad
#
# The free non-symmetric operad on the prime expressions, and its
# identification with L.
#
# A reduced tree on k leaves is a laminar family of intervals of `1..k`,
# each with at least two elements, that contains `1..k` itself. A point of
# the free operad is a reduced tree whose vertices carry prime labels; here
# it is stored recursively as a FreeElement. `decompose()` (psi) cuts an
# element of L along its connected brackets, `compose_free()` (theta) glues
# it back with the operadic composition.
#

import logging

import BracketExpr
from BracketExpr import Leaf, Bracket, is_prime

logger = logging.getLogger(__name__)


#######################
# Reduced trees
#######################

## An unlabeled reduced tree
#
# Vertices are `(lo, hi)` pairs standing for the interval `lo..hi`.
# The tree on one leaf (the unit) has no vertices.
#
class ReducedTree:
	__slots__ = ('leaf_count', 'vertices')

	## Constructor
	#
	# @param leaf_count (int)
	#
	# @param vertices (iterable of tuple)
	# <br>	Format: `[(lo, hi), ...]`
	#
	# @throws ValueError if the vertices do not form a reduced tree
	#
	def __init__(self, leaf_count, vertices):
		self.leaf_count = leaf_count
		self.vertices = frozenset(vertices)
		self._validate()

	def _validate(self):
		k = self.leaf_count
		if k < 1:
			raise ValueError('A reduced tree needs at least one leaf')
		for lo, hi in self.vertices:
			if not (1 <= lo < hi <= k):
				raise ValueError('Vertex [{}..{}] is not an interval of cardinality >= 2 inside 1..{}'.format(lo, hi, k))
		if k >= 2 and (1, k) not in self.vertices:
			raise ValueError('The full interval [1..{}] must be a vertex'.format(k))
		# Wider vertices first among equal low ends
		ordered = sorted(self.vertices, key=lambda v: (v[0], -v[1]))
		for idx, (lo1, hi1) in enumerate(ordered):
			for lo2, hi2 in ordered[idx + 1:]:
				# (lo2, hi2) starts inside or after (lo1, hi1); the only bad case is a partial overlap
				if lo2 <= hi1 and hi2 > hi1:
					raise ValueError('Vertices [{}..{}] and [{}..{}] overlap without nesting'.format(lo1, hi1, lo2, hi2))

	## Children of a vertex in the nesting forest, left to right
	#
	# @returns (list of tuple)
	# <br>	-- maximal sub-vertices as `(lo, hi)` and uncovered leaves as
	# 	`(t, t)`
	#
	def children(self, vertex):
		lo, hi = vertex
		inner = [v for v in self.vertices if v != vertex and lo <= v[0] and v[1] <= hi]
		maximal = [v for v in inner if not any(w != v and w[0] <= v[0] and v[1] <= w[1] for w in inner)]
		starts = {v[0]: v for v in maximal}
		out = []
		t = lo
		while t <= hi:
			if t in starts:
				out.append(starts[t])
				t = starts[t][1] + 1
			else:
				out.append((t, t))
				t += 1
		return out

	## Number of children of a vertex; its label lives in P(arity)
	#
	def arity(self, vertex):
		return len(self.children(vertex))

	def __eq__(self, other):
		if not isinstance(other, ReducedTree):
			return NotImplemented
		return self.leaf_count == other.leaf_count and self.vertices == other.vertices

	def __hash__(self):
		return hash((self.leaf_count, self.vertices))

	def __repr__(self):
		inner = ','.join('[{}..{}]'.format(lo, hi) for lo, hi in sorted(self.vertices, key=lambda v: (v[0], -v[1])))
		return 'ReducedTree({}, {{{}}})'.format(self.leaf_count, inner)


## Grafts `t2` onto leaf `i` of `t1`.
#
# Vertices of `t1` keep indices below `i`, shift those above `i` by `l-1`
# and expand `i` to the block `i..i+l-1`; vertices of `t2` shift by `i-1`.
#
def tree_compose(t1, i, t2):
	k = t1.leaf_count
	l = t2.leaf_count
	if i < 1 or i > k:
		raise ValueError('Tree composition index {} out of range 1..{}'.format(i, k))

	def move_lo(j):
		return j if j <= i else j + l - 1

	def move_hi(j):
		return j if j < i else j + l - 1

	vertices = set((move_lo(lo), move_hi(hi)) for lo, hi in t1.vertices)
	vertices.update((lo + i - 1, hi + i - 1) for lo, hi in t2.vertices)
	if len(vertices) != len(t1.vertices) + len(t2.vertices):
		raise ValueError('Tree composition collapsed two vertices')
	return ReducedTree(k + l - 1, vertices)


## The tree with one vertex per connected bracket of `e`
#
# @param e (Expr)
# <br>	-- an element of L(k)
#
def tree_of(e):
	_require_L(e)
	return ReducedTree(e.count, [(node.lo, node.hi) for node in BracketExpr.subexpressions(e) if node.connected])


## Iterates over every reduced tree on `k` leaves
#
def enumerate_trees(k):
	if k < 1:
		raise ValueError('k must be positive, got {}'.format(k))
	if k == 1:
		yield ReducedTree(1, [])
		return
	for vertices in _vertex_sets(1, k):
		yield ReducedTree(k, vertices)


def _vertex_sets(lo, hi):
	# The vertex lo..hi, over every split into at least two consecutive parts
	for parts in _compositions(lo, hi, minimum_parts=2):
		for inner in _product_of_parts(parts):
			yield [(lo, hi)] + inner


def _product_of_parts(parts):
	if not parts:
		yield []
		return
	(lo, hi), rest = parts[0], parts[1:]
	head_options = [[]] if lo == hi else list(_vertex_sets(lo, hi))
	for tail in list(_product_of_parts(rest)):
		for head in head_options:
			yield head + tail


def _compositions(lo, hi, minimum_parts):
	# Splits lo..hi into consecutive intervals, at least `minimum_parts` of them
	n = hi - lo + 1
	for mask in range(1 << (n - 1)):
		cuts = [lo + b + 1 for b in range(n - 1) if mask >> b & 1]
		if len(cuts) + 1 < minimum_parts:
			continue
		bounds = [lo] + cuts + [hi + 1]
		yield [(bounds[p], bounds[p + 1] - 1) for p in range(len(bounds) - 1)]


#######################
# Prime-labeled trees
#######################

## Base class for points of the free operad F(P)
#
class FreeElement:
	__slots__ = ()

	def is_unit(self):
		return False

	def __eq__(self, other):
		if not isinstance(other, FreeElement):
			return NotImplemented
		return self.to_key() == other.to_key()

	def __hash__(self):
		return hash(self.to_key())

	def __repr__(self):
		return 'FreeElement({})'.format(self.to_key())


class Unit(FreeElement):
	__slots__ = ()

	width = 1

	def is_unit(self):
		return True

	def to_key(self):
		return 'leaf'

	## JSON-ready form: `"leaf"`
	#
	def to_json(self):
		return 'leaf'


UNIT = Unit()


## A vertex labeled by a prime pattern, with one child per pattern symbol
#
class Node(FreeElement):
	__slots__ = ('pattern', 'children', 'width', '_key')

	## Constructor
	#
	# @param pattern (Expr)
	# <br>	-- an element of P(m), m >= 2
	#
	# @param children (sequence of FreeElement)
	# <br>	-- exactly m of them
	#
	def __init__(self, pattern, children):
		children = tuple(children)
		if len(children) < 2 or len(children) != pattern.count:
			raise ValueError('Pattern {} needs {} children, got {}'.format(pattern.text, pattern.count, len(children)))
		if not is_prime(pattern):
			raise ValueError('Pattern {} is not prime'.format(pattern.text))
		self.pattern = pattern
		self.children = children
		self.width = sum(child.width for child in children)
		self._key = None

	def to_key(self):
		if self._key is None:
			self._key = (self.pattern.text, tuple(child.to_key() for child in self.children))
		return self._key

	## JSON-ready form: `{"pattern": "...", "children": [...]}`
	#
	def to_json(self):
		return {'pattern': self.pattern.text, 'children': [child.to_json() for child in self.children]}


## Builds a FreeElement from its JSON-ready form
#
def from_json(obj):
	if obj == 'leaf':
		return UNIT
	return Node(BracketExpr.parse(obj['pattern']), [from_json(child) for child in obj['children']])


def _require_L(e):
	if not BracketExpr.is_in_L(e):
		raise ValueError('{} is not in L({})'.format(e.text, e.count))


## Decomposes an element of L(k) into a prime-labeled tree (psi).
#
# The maximal connected brackets strictly inside `e`, and the symbols not
# covered by them, are collapsed to single symbols by the unique monotone
# relabeling; the collapsed outer expression is the prime label of the
# root and each maximal bracket is decomposed in turn.
#
# @param e (Expr)
# <br>	-- an element of L(k), k >= 1
#
# @returns (FreeElement)
# <br>	-- of width k
#
def decompose(e):
	_require_L(e)
	return _decompose(e)


def _decompose(e):
	if e.is_leaf():
		return UNIT

	blocks = []
	_collect_blocks(e.left, blocks)
	_collect_blocks(e.right, blocks)
	# Blocks are disjoint intervals, so sorting by the low end is the
	# monotone relabeling
	blocks.sort(key=lambda node: node.lo)
	position = {node.lo: pos + 1 for pos, node in enumerate(blocks)}

	pattern = Bracket(_collapse(e.left, position), _collapse(e.right, position))
	children = []
	for node in blocks:
		if node.is_leaf():
			children.append(UNIT)
		else:
			children.append(_decompose(BracketExpr.shift(node, 1 - node.lo)))
	return Node(pattern, children)


def _collect_blocks(node, blocks):
	if node.is_leaf() or node.connected:
		blocks.append(node)
		return
	_collect_blocks(node.left, blocks)
	_collect_blocks(node.right, blocks)


def _collapse(node, position):
	if node.is_leaf() or node.connected:
		return Leaf(position[node.lo])
	return Bracket(_collapse(node.left, position), _collapse(node.right, position))


## Recomposes a prime-labeled tree into an element of L (theta).
#
# The children are substituted at descending positions so that the
# positions still to be filled keep their original indices.
#
def compose_free(f):
	if f.is_unit():
		return BracketExpr.UNIT
	result = f.pattern
	for position in range(len(f.children), 0, -1):
		result = BracketExpr.compose(result, position, compose_free(f.children[position - 1]))
	return result


## The reduced tree underlying a FreeElement
#
def tree_of_free(f):
	vertices = []
	_free_vertices(f, 1, vertices)
	return ReducedTree(f.width, vertices)


def _free_vertices(f, lo, vertices):
	if f.is_unit():
		return
	vertices.append((lo, lo + f.width - 1))
	for child in f.children:
		_free_vertices(child, lo, vertices)
		lo += child.width


#######################
# Counting and sampling
#######################

## Counts the points of F(P) of width `n` tree by tree.
#
# @param prime_counts (dict or sequence)
# <br>	-- `prime_counts[m]` is the number of prime labels of arity m
#
# @returns (int)
# <br>	-- the sum over reduced trees of the product, over vertices, of the
# 	number of labels for the vertex arity
#
def count_free_elements(n, prime_counts):
	total = 0
	for tree in enumerate_trees(n):
		product = 1
		for vertex in tree.vertices:
			product *= prime_counts[tree.arity(vertex)]
			if product == 0:
				break
		total += product
	return total


## Draws a random FreeElement of the given width.
#
# @param width (int)
#
# @param rng (numpy.random.RandomState)
#
# @param patterns (dict)
# <br>	-- arity to list of prime patterns of that arity; arities with no
# 	patterns are never chosen
#
def random_free_element(width, rng, patterns):
	if width == 1:
		return UNIT
	arities = [m for m in sorted(patterns) if 2 <= m <= width and len(patterns[m]) > 0]
	if not arities:
		raise ValueError('No prime pattern fits width {}'.format(width))
	m = arities[int(rng.randint(len(arities)))]
	pattern = patterns[m][int(rng.randint(len(patterns[m])))]

	cuts = sorted(int(c) for c in rng.choice(width - 1, m - 1, replace=False))
	bounds = [0] + [c + 1 for c in cuts] + [width]
	sizes = [bounds[p + 1] - bounds[p] for p in range(m)]
	return Node(pattern, [random_free_element(size, rng, patterns) for size in sizes])
