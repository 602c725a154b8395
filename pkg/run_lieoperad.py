#!/usr/bin/python3

## @file run_lieoperad.py
#
# Command-line entry point. Results go to standard output, as plain text or
# one JSON object per line with `--json`; logs go to standard error.
#
# Exit codes: 0 on success, 1 when a verification check fails, 2 on a
# usage or input error.
#

import json
import logging
import sys
from fractions import Fraction as F

import BracketExpr
import ChordDiagram
import Density
import Enumeration
import FreeOperad
import GeneratorSeries
import LieNormalize
import SetupUtils
import SifPermutation
import VerifySuite
from BracketExpr import ExprSyntaxError, GRAMMAR_TEXT
from Enumeration import ResourceLimitError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


def _json_line(obj):
	return json.dumps(obj) + '\n'


def _json_number(q):
	# Integers stay numbers; other rationals become "p/q" strings
	q = F(q)
	if q.denominator == 1:
		return int(q)
	return str(q)


def cmd_enumerate(args, params, out):
	n = args.n
	if args.primes:
		exprs = Enumeration.enumerate_P(n, max_n=params.enumeration_max_n)
	else:
		exprs = Enumeration.enumerate_L(n, max_n=params.enumeration_max_n)

	if args.count:
		out.write(_json_line({'n': n, 'count': len(exprs)}) if args.json else '{}\n'.format(len(exprs)))
		return EXIT_OK

	for e in exprs:
		if args.json:
			out.write(_json_line({'expr': e.text, 'prime': (not e.is_leaf()) and not e.inner_connected}))
		else:
			out.write(e.text + '\n')
	return EXIT_OK


def cmd_decompose(args, params, out):
	f = FreeOperad.decompose(BracketExpr.parse(args.expr))
	# Nested JSON either way; `--json` only drops the indentation
	if args.json:
		out.write(_json_line(f.to_json()))
	else:
		out.write(json.dumps(f.to_json(), indent=2) + '\n')
	return EXIT_OK


def cmd_compose(args, params, out):
	a = BracketExpr.parse(args.a)
	b = BracketExpr.parse(args.b)
	BracketExpr.validate_word(a)
	BracketExpr.validate_word(b)
	result = BracketExpr.compose(a, args.i, b)
	out.write(_json_line({'expr': result.text}) if args.json else result.text + '\n')
	return EXIT_OK


def cmd_normalize(args, params, out):
	words = [BracketExpr.parse(text) for text in args.exprs]
	total = LieNormalize.LinComb.zero(words[0].count)
	for e in words:
		total = total + LieNormalize.LinComb.from_expr(e)
	result = LieNormalize.normalize(total)
	if args.json:
		for e, c in result.items():
			out.write(_json_line({'expr': e.text, 'coeff': c}))
	elif result.is_zero():
		out.write('0\n')
	else:
		out.write('\n'.join(result.to_lines()) + '\n')
	return EXIT_OK


def _series_coefficients(args, top):
	if args.which == 'F':
		return list(GeneratorSeries.lie_series(top).coeffs)
	if args.which == 'A':
		return GeneratorSeries.a_recurrence(top)
	if args.which == 'P':
		return [F(0), F(-1)] + GeneratorSeries.p_recurrence(top)
	if args.method == 'inverse':
		return list(GeneratorSeries.b_from_inverse(top).coeffs)
	if args.method == 'lagrange':
		return [0, -1] + [GeneratorSeries.lagrange_coefficient(n) for n in range(2, top + 1)]
	return GeneratorSeries.b_coefficients(top)


def cmd_series(args, params, out):
	top = args.max_degree if args.max_degree is not None else params.series_order
	if top < 2:
		raise ValueError('--max must be at least 2, got {}'.format(top))
	coeffs = _series_coefficients(args, top)
	# A starts at degree 0; the other series vanish there
	first = 0 if args.which == 'A' else 1
	for degree in range(first, top + 1):
		c = _json_number(coeffs[degree])
		if args.json:
			out.write(_json_line({'degree': degree, 'coeff': c}))
		else:
			out.write('{} {}\n'.format(degree, c))
	return EXIT_OK


def cmd_density(args, params, out):
	ns = (args.n + args.n_flag) or params.density_table_n
	evaluate = Density.sif_density if args.sif else Density.density
	# Grow the recurrence once for the largest n
	GeneratorSeries.b_coefficients(max(ns) + 1)
	shown = min(params.digits, 30)
	if not args.json:
		out.write('{:>6}  {:>{w}}  {:>{w}}  {:>{w}}  {:>14}\n'.format('n', 'e*density', 'predicted', 'residual', 'n^3*|residual|', w=shown + 3))
	for n in ns:
		report = evaluate(n, params.digits)
		scaled = Density.scaled_residual(report)
		if args.json:
			out.write(_json_line({'kind': report.kind, 'n': n, 'e_density': str(report.e_p_n), 'predicted': str(report.predicted),
				'residual': str(report.residual), 'scaled_residual': str(scaled), 'digits': report.digits}))
		else:
			out.write('{:>6}  {:>{w}.{p}f}  {:>{w}.{p}f}  {:>{w}.{p}e}  {:>14.6f}\n'.format(n, report.e_p_n, report.predicted, report.residual, scaled, w=shown + 3, p=shown - 3))
	return EXIT_OK


def cmd_sif(args, params, out):
	n = args.n if args.n is not None else args.n_flag
	if n is None:
		raise ValueError('sif needs n, given as a positional argument or with --n')
	if args.list:
		for p in SifPermutation.enumerate_sif(n, max_n=params.sif_max_n):
			if args.json:
				out.write(_json_line({'cycles': SifPermutation.cycle_notation(p), 'images': list(p.images)}))
			else:
				out.write(SifPermutation.cycle_notation(p) + '\n')
		return EXIT_OK
	count = SifPermutation.count_sif(n, max_n=params.sif_max_n)
	out.write(_json_line({'n': n, 'count': count}) if args.json else '{}\n'.format(count))
	return EXIT_OK


def cmd_chord(args, params, out):
	e = BracketExpr.parse(args.expr)
	BracketExpr.validate_word(e)
	text = ChordDiagram.render(e, args.format)
	if args.out is not None:
		with open(args.out, 'w', encoding='utf-8') as f:
			f.write(text)
		logger.info('wrote %s diagram of %s to %s', args.format, e.text, args.out)
		if args.json:
			out.write(_json_line({'expr': e.text, 'format': args.format, 'out': args.out, 'chords': [list(c) for c in ChordDiagram.chords_of(e)]}))
		return EXIT_OK
	if args.json:
		out.write(_json_line({'expr': e.text, 'format': args.format, 'chords': [list(c) for c in ChordDiagram.chords_of(e)], 'diagram': text}))
	else:
		out.write(text)
	return EXIT_OK


def _run_suite(suite, args, out):
	results = suite.run()
	out.write(VerifySuite.format_json_lines(results) if args.json else VerifySuite.format_table(results))
	return EXIT_OK if VerifySuite.all_passed(results) else EXIT_CHECK_FAILED


def cmd_verify(args, params, out):
	return _run_suite(VerifySuite.build_full_suite(params), args, out)


def cmd_verify_identities(args, params, out):
	return _run_suite(VerifySuite.build_identity_suite(params), args, out)


COMMANDS = {
	'enumerate': cmd_enumerate,
	'decompose': cmd_decompose,
	'compose': cmd_compose,
	'normalize': cmd_normalize,
	'series': cmd_series,
	'density': cmd_density,
	'sif': cmd_sif,
	'chord': cmd_chord,
	'verify': cmd_verify,
	'verify-identities': cmd_verify_identities,
}


## Runs one subcommand.
#
# @param argv (list of str)
# <br>	-- arguments without the program name
#
# @returns (int)
# <br>	-- the process exit code
#
def main(argv=None, out=None, err=None):
	out = sys.stdout if out is None else out
	err = sys.stderr if err is None else err
	parser = SetupUtils.create_default_cmdline_parser()
	try:
		args = parser.parse_args(sys.argv[1:] if argv is None else argv)
	except SystemExit as exit_request:
		if exit_request.code in (0, None):
			return EXIT_OK
		err.write('Expression grammar: {}\n'.format(GRAMMAR_TEXT))
		return EXIT_USAGE

	SetupUtils.setup_logging(args.verbose)
	try:
		params = SetupUtils.apply_cmdline_overrides(SetupUtils.ToolParameters(args.config), args)
		return COMMANDS[args.command](args, params, out)
	except ExprSyntaxError as e:
		err.write('error: {}\nExpression grammar: {}\n'.format(e, GRAMMAR_TEXT))
	except ResourceLimitError as e:
		err.write('error: {}\n'.format(e))
	except (ValueError, OSError) as e:
		err.write('error: {}\n'.format(e))
	except RecursionError:
		logger.debug('recursion limit hit', exc_info=True)
		err.write('error: expression nested too deeply (recursion limit {})\n'.format(sys.getrecursionlimit()))
	err.write(parser.format_usage())
	return EXIT_USAGE


if __name__ == '__main__':
	sys.exit(main())
