#!/usr/bin/python3

import numpy as np


## Draws things
#
# The base tool draws nothing; subclasses render to a concrete format and
# return it from `get_output()`.
#
class DrawTool:
	def __init__(self):
		self._color = (0,0,0);
		self._stroke_width = 1;

	def draw_circle(self, center, radius):
		pass;

	def draw_line(self, point1, point2):
		pass;

	## Draws the upper half of a circle whose diameter joins two points on
	# the same horizontal line
	#
	# @param point1 (array-like)
	# <br>  Format: `[x, y]`
	# <br>  -- the left end of the diameter
	#
	# @param point2 (array-like)
	# <br>  Format: `[x, y]`
	# <br>  -- the right end of the diameter
	#
	def draw_semicircle(self, point1, point2):
		pass

	def draw_text(self, location, text):
		pass

	def get_output(self):
		return ''

	def set_color(self, color):
		self._color = color;

	def get_color(self):
		return self._color;

	def set_stroke_width(self, width):
		self._stroke_width = width;

	def get_stroke_width(self):
		return self._stroke_width;


def _color_to_int(color_tuple):
	if isinstance(color_tuple, tuple) or isinstance(color_tuple, list):
		total = len(color_tuple);
		color_int = 0;
		for i in range(len(color_tuple)):
			color_int |= int(np.uint8(color_tuple[i])) << (total-i-1)*8
		return color_int
	return color_tuple


## Draws to SVG 1.1 markup
#
class SvgDrawTool(DrawTool):
	def __init__(self, img_size=(800, 600)):
		super().__init__()
		self._svg_template_xml = """<?xml version="1.0" encoding="UTF-8"?>\n<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{:d}" height="{:d}" viewBox="0 0 {:d} {:d}">\n{{}}\n</svg>\n""".format(img_size[0], img_size[1], img_size[0], img_size[1]);
		self._elems = [];

	def get_svg_xml(self):
		return self._svg_template_xml.format("\n".join(self._elems));

	def get_output(self):
		return self.get_svg_xml()


	def _gen_style_str(self, filled=False):
		style_attr = "stroke-width:{:f};".format(self._stroke_width);
		color = '#{:06x}'.format(_color_to_int(self._color));
		style_attr += ("fill:{0};stroke:{0};" if filled else "fill:none;stroke:{};").format(color);
		return style_attr


	def draw_circle(self, center, radius, filled=True):
		style_attr = self._gen_style_str(filled);
		self._elems.append("""<circle id="circle{:d}" r="{:f}" cx="{:f}" cy="{:f}" style="{}"/>""".format(len(self._elems), radius, center[0], center[1], style_attr));


	def draw_semicircle(self, point1, point2):
		style_attr = self._gen_style_str();
		radius = abs(point2[0] - point1[0]) / 2
		# Sweep flag 1 runs clockwise in screen coordinates, i.e. above the line
		d = "M {:f},{:f} A {:f},{:f} 0 0,1 {:f},{:f}".format(point1[0], point1[1], radius, radius, point2[0], point2[1]);
		self._elems.append("""<path id="arc{:d}" class="chord" style="{}" d="{}" />""".format(len(self._elems), style_attr, d));


	def draw_text(self, location, text):
		color = '#{:06x}'.format(_color_to_int(self._color));
		self._elems.append("""<text id="text{:d}" x="{:f}" y="{:f}" text-anchor="middle" font-family="monospace" font-size="12" fill="{}">{}</text>""".format(len(self._elems), location[0], location[1], color, text));


## Draws to a fixed-size grid of characters
#
# Only horizontal and vertical lines are supported. Later strokes
# overwrite earlier ones, except that `draw_vertical_leg()` fills blank
# cells only.
#
class TextDrawTool(DrawTool):
	def __init__(self, width, height):
		super().__init__()
		self._grid = np.full((height, width), ' ', dtype='<U1')

	def draw_line(self, point1, point2):
		(x1, y1), (x2, y2) = point1, point2
		if y1 == y2:
			lo, hi = sorted((x1, x2))
			self._grid[y1, lo:hi + 1] = '-'
		elif x1 == x2:
			lo, hi = sorted((y1, y2))
			self._grid[lo:hi + 1, x1] = '|'
		else:
			raise ValueError('TextDrawTool only draws horizontal or vertical lines')

	def draw_vertical_leg(self, column, top, bottom):
		for row in range(top, bottom + 1):
			if self._grid[row, column] == ' ':
				self._grid[row, column] = '|'

	## Draws a chord as `+---+` on one row
	#
	def draw_semicircle(self, point1, point2):
		self.draw_line(point1, point2)
		self._grid[point1[1], point1[0]] = '+'
		self._grid[point2[1], point2[0]] = '+'

	def draw_text(self, location, text):
		x, y = location
		for offset, ch in enumerate(text):
			if x + offset < self._grid.shape[1]:
				self._grid[y, x + offset] = ch

	def get_output(self):
		return '\n'.join(''.join(row).rstrip() for row in self._grid) + '\n'
