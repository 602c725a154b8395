#!/usr/bin/python3

from setuptools import setup
from Cython.Build import cythonize

extensions = cythonize(
		module_list = [
			"BracketExpr.py",
			"Enumeration.py",
			"FreeOperad.py",
			"LieNormalize.py",
			"PowerSeries.py",
			"GeneratorSeries.py",
			"SifPermutation.py",
		],
		language_level=3)

setup(
	name = "lie-operad-tools",
	version = "0.1.0",
	py_modules = [
		"BracketExpr",
		"ChordDiagram",
		"Density",
		"DrawTool",
		"Enumeration",
		"FreeOperad",
		"GeneratorSeries",
		"GoldenSequences",
		"LieNormalize",
		"PowerSeries",
		"SetupUtils",
		"SifPermutation",
		"VerifySuite",
		"run_lieoperad",
	],
	ext_modules = extensions,
	install_requires = [
		"numpy",
		"pyparsing>=3",
		"sympy",
		"Cython",
	],
	extras_require = {
		"test": ["hypothesis"],
	},
	entry_points = {
		"console_scripts": ["lieoperad = run_lieoperad:main"],
	},
)
