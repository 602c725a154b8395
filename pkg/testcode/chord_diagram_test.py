#!/usr/bin/python3

import unittest

import BracketExpr
import ChordDiagram
import DrawTool
import Enumeration
from BracketExpr import parse
from ChordDiagram import Chord


class ChordsTest(unittest.TestCase):
	def test_examples(self):
		e = parse('[[[x1,x3],[x2,x4]],x5]')
		self.assertEqual(ChordDiagram.chords_of(e), [Chord(1, 3), Chord(2, 4), Chord(1, 4), Chord(1, 5)])
		self.assertEqual(ChordDiagram.connected_chords(e), [Chord(1, 4), Chord(1, 5)])

	def test_one_chord_per_bracket(self):
		for e in Enumeration.enumerate_L(5):
			self.assertEqual(len(ChordDiagram.chords_of(e)), 4)
			self.assertEqual(ChordDiagram.chords_of(e)[-1], Chord(1, 5))

	def test_prime_has_single_connected_chord(self):
		for e in Enumeration.enumerate_L(5):
			self.assertEqual(BracketExpr.is_prime(e), ChordDiagram.connected_chords(e) == [Chord(1, 5)])

	def test_rejects_non_L(self):
		with self.assertRaises(ValueError):
			ChordDiagram.chords_of(parse('[x2,x1]'))


class SvgRenderTest(unittest.TestCase):
	def test_single_chord(self):
		svg = ChordDiagram.render(parse('[x1,x2]'))
		self.assertTrue(svg.startswith('<?xml'))
		self.assertIn('width="120" height="80"', svg)
		self.assertEqual(svg.count('<path'), 1)
		self.assertEqual(svg.count('<circle'), 2)
		self.assertIn('d="M 40.000000,60.000000 A 20.000000,20.000000 0 0,1 80.000000,60.000000"', svg)
		self.assertIn('stroke:#c80000', svg)

	def test_red_chords_are_connected(self):
		for e in Enumeration.enumerate_L(5):
			svg = ChordDiagram.render(e, 'svg')
			self.assertEqual(svg.count('<path'), 4)
			self.assertEqual(svg.count('stroke:#c80000'), len(ChordDiagram.connected_chords(e)))

	def test_deterministic(self):
		e = parse('[[x1,x3],[[x2,x4],x5]]')
		self.assertEqual(ChordDiagram.render(e), ChordDiagram.render(e))


class AsciiRenderTest(unittest.TestCase):
	def test_single_chord(self):
		self.assertEqual(ChordDiagram.render(parse('[x1,x2]'), 'ascii'), '+---+*\n1   2\n')

	def test_nested_chords(self):
		expected = '+-------+*\n|   +---+*\n1   2   3\n'
		self.assertEqual(ChordDiagram.render(parse('[x1,[x2,x3]]'), 'ascii'), expected)

	def test_prime_marks_only_outer_chord(self):
		text = ChordDiagram.render(parse('[[x1,x3],[[x2,x4],x5]]'), 'ascii')
		lines = text.splitlines()
		self.assertEqual(text.count('*'), 1)
		self.assertTrue(lines[0].endswith('*'))
		self.assertEqual(lines[-1], '1   2   3   4   5')

	def test_unknown_format(self):
		with self.assertRaises(ValueError):
			ChordDiagram.render(parse('[x1,x2]'), 'png')


class DrawToolTest(unittest.TestCase):
	def test_color_to_int(self):
		self.assertEqual(DrawTool._color_to_int((200, 0, 0)), 0xc80000)
		self.assertEqual(DrawTool._color_to_int(7), 7)

	def test_text_tool_lines(self):
		dtool = DrawTool.TextDrawTool(5, 3)
		dtool.draw_line((0, 1), (4, 1))
		dtool.draw_line((2, 0), (2, 2))
		self.assertEqual(dtool.get_output(), '  |\n--|--\n  |\n')
		with self.assertRaises(ValueError):
			dtool.draw_line((0, 0), (2, 2))

	def test_svg_tool_draws_arcs_and_points_only(self):
		self.assertIs(DrawTool.SvgDrawTool.draw_line, DrawTool.DrawTool.draw_line)
		svg = ChordDiagram.render(parse('[[x1,x3],[[x2,x4],x5]]'), 'svg')
		self.assertEqual(svg.count('<path'), 4)
		self.assertEqual(svg.count('<circle'), 5)
		self.assertNotIn('<line', svg)


if __name__ == '__main__':
	unittest.main()
