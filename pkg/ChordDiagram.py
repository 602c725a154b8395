#!/usr/bin/python3

## @package ChordDiagram
#
# Chord diagrams of elements of L(n): the symbols 1..n sit on a horizontal
# line and every bracket is drawn as a chord from the smallest to the
# largest index it contains. A chord whose bracket is connected is drawn in
# red, so a prime expression shows exactly one red chord, the outer one.
#

import logging
from collections import namedtuple

import BracketExpr
from DrawTool import SvgDrawTool, TextDrawTool

logger = logging.getLogger(__name__)


FORMATS = ('svg', 'ascii')

# Pixels between neighbouring symbols on the SVG baseline
SVG_UNIT = 40

# Characters between neighbouring symbols in the ASCII diagram
ASCII_UNIT = 4

CONNECTED_COLOR = (200, 0, 0)
PLAIN_COLOR = (0, 0, 0)


## One chord, i.e. one bracket, as its (smallest, largest) index
#
Chord = namedtuple('Chord', ['lo', 'hi'])


## The chords of `e`, one per bracket, in post-order
#
# @param e (Expr)
# <br>	-- an element of L(n)
#
# @returns (list of Chord)
# <br>	-- `n-1` chords, the outer bracket's `(1, n)` last
#
# @throws ValueError if `e` is not in L(n)
#
def chords_of(e):
	if not BracketExpr.is_in_L(e):
		raise ValueError('{} is not in L({})'.format(e.text, e.count))
	return [Chord(node.lo, node.hi) for node in BracketExpr.subexpressions(e)]


## The chords of the connected brackets of `e`, in post-order
#
def connected_chords(e):
	if not BracketExpr.is_in_L(e):
		raise ValueError('{} is not in L({})'.format(e.text, e.count))
	return [Chord(node.lo, node.hi) for node in BracketExpr.subexpressions(e) if node.connected]


## Renders the chord diagram of `e`.
#
# @param e (Expr)
# <br>	-- an element of L(n)
#
# @param format (str)
# <br>	-- `'svg'` or `'ascii'`
#
# @returns (str)
#
# @throws ValueError on an unknown format or if `e` is not in L(n)
#
def render(e, format='svg'):
	if format not in FORMATS:
		raise ValueError('Unknown diagram format {!r}; expected one of {}'.format(format, ', '.join(FORMATS)))
	if not BracketExpr.is_in_L(e):
		raise ValueError('{} is not in L({})'.format(e.text, e.count))
	brackets = list(BracketExpr.subexpressions(e))
	logger.debug('rendering %d chords of %s as %s', len(brackets), e.text, format)
	if format == 'svg':
		return _render_svg(e.count, brackets)
	return _render_ascii(e.count, brackets)


def _render_svg(n, brackets):
	u = SVG_UNIT
	baseline = (u // 2) * (n + 1)
	dtool = SvgDrawTool(img_size=(u * (n + 1), (u // 2) * (n + 2)))

	dtool.set_color(PLAIN_COLOR)
	for i in range(1, n + 1):
		dtool.draw_circle((u * i, baseline), 3)
		dtool.draw_text((u * i, baseline + 15), i)

	dtool.set_stroke_width(1.5)
	for node in brackets:
		dtool.set_color(CONNECTED_COLOR if node.connected else PLAIN_COLOR)
		dtool.draw_semicircle((u * node.lo, baseline), (u * node.hi, baseline))

	return dtool.get_output()


def _render_ascii(n, brackets):
	# Widest chord on top; ties left to right
	rows = sorted(brackets, key=lambda node: (node.lo - node.hi, node.lo))
	label_row = len(rows)
	width = ASCII_UNIT * (n - 1) + len(str(n)) + 2
	dtool = TextDrawTool(width, label_row + 1)

	for r, node in enumerate(rows):
		dtool.draw_semicircle((ASCII_UNIT * (node.lo - 1), r), (ASCII_UNIT * (node.hi - 1), r))
		if node.connected:
			dtool.draw_text((ASCII_UNIT * (node.hi - 1) + 1, r), '*')
	for r, node in enumerate(rows):
		for index in (node.lo, node.hi):
			dtool.draw_vertical_leg(ASCII_UNIT * (index - 1), r + 1, label_row - 1)

	for i in range(1, n + 1):
		dtool.draw_text((ASCII_UNIT * (i - 1), label_row), str(i))
	return dtool.get_output()
