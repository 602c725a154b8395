import logging
import os
import sys
import configparser

from BracketExpr import GRAMMAR_TEXT


DEFAULT_CONFIG_FILE = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'local_configs', 'defaults.ini')


## Tunable limits and sample sizes.
#
# Values are read from an `.ini` file; keys that are missing fall back to
# the built-in defaults. Command-line flags override both through
# `apply_cmdline_overrides()`.
#
class ToolParameters:

	## Constructor
	#
	# @param config_file (str)
	# <br>	-- path to an `.ini` file; `None` reads `local_configs/defaults.ini`
	# 	if it exists and otherwise uses only built-in defaults
	#
	# @throws FileNotFoundError if an explicitly named file does not exist
	#
	def __init__(self, config_file=None):
		self.config = configparser.ConfigParser()
		self.config.optionxform = str
		if config_file is not None:
			if not os.path.isfile(config_file):
				raise FileNotFoundError("No config file found at {}".format(str(config_file)))
			self.config.read(config_file)
		elif os.path.isfile(DEFAULT_CONFIG_FILE):
			self.config.read(DEFAULT_CONFIG_FILE)

		# Largest n for exhaustive generation of L(n) and P(n)
		self.enumeration_max_n = self.config.getint(
			'Enumeration', 'MaxN', fallback=11)

		# Largest n for brute-force SIF counting
		self.sif_max_n = self.config.getint(
			'Sif', 'MaxN', fallback=9)

		# Truncation order for the series identities
		self.series_order = self.config.getint(
			'Series', 'Order', fallback=25)

		# Truncation order for the differential equation and the long
		# recurrence comparisons
		self.ode_order = self.config.getint(
			'Series', 'OdeOrder', fallback=50)

		self.digits = self.config.getint(
			'Density', 'Digits', fallback=50)

		# The first entry calibrates the residual bound
		self.density_table_n = [int(v) for v in self.config.get(
			'Density', 'TableN', fallback='50,100,200,400,800').split(',')]

		self.density_scale_factor = self.config.getfloat(
			'Density', 'ScaleFactor', fallback=2.0)

		# Largest n for the exhaustive checks of `verify`
		self.verify_max_n = self.config.getint(
			'Verify', 'MaxN', fallback=8)

		self.verify_samples = self.config.getint(
			'Verify', 'Samples', fallback=1000)

		self.verify_tree_samples = self.config.getint(
			'Verify', 'TreeSamples', fallback=500)

		self.verify_oracle_samples = self.config.getint(
			'Verify', 'OracleSamples', fallback=100)

		self.seed = self.config.getint(
			'Verify', 'Seed', fallback=12345)

		self.free_width = self.config.getint(
			'Verify', 'FreeWidth', fallback=10)

		self.max_pattern_arity = self.config.getint(
			'Verify', 'MaxPatternArity', fallback=10)

		self._validate()

	def _validate(self):
		if self.series_order < 2 or self.ode_order < 2:
			raise ValueError('Series orders must be at least 2')
		if len(self.density_table_n) < 2 or min(self.density_table_n) < 2:
			raise ValueError('Density.TableN needs at least two values of n >= 2')
		if self.verify_max_n < 2:
			raise ValueError('Verify.MaxN must be at least 2')
		if self.free_width < 1 or self.max_pattern_arity < self.free_width:
			raise ValueError('Verify.MaxPatternArity must be at least Verify.FreeWidth, which must be positive')


## Copies explicitly given command-line flags onto `params`
#
def apply_cmdline_overrides(params, args):
	if getattr(args, 'max_n', None) is not None:
		params.enumeration_max_n = args.max_n
		params.sif_max_n = args.max_n
		params.verify_max_n = args.max_n
	if getattr(args, 'order', None) is not None:
		params.series_order = args.order
	if getattr(args, 'digits', None) is not None:
		params.digits = args.digits
	if getattr(args, 'seed', None) is not None:
		params.seed = args.seed
	params._validate()
	return params


## Sends log records to standard error.
#
# @param verbosity (int)
# <br>	-- 0 for warnings only, 1 for INFO, 2 or more for DEBUG
#
def setup_logging(verbosity=0):
	level = logging.WARNING
	if verbosity == 1:
		level = logging.INFO
	elif verbosity >= 2:
		level = logging.DEBUG
	logging.basicConfig(stream=sys.stderr, level=level, format='%(asctime)s %(name)s %(levelname)s: %(message)s', force=True)


def _create_common_parser():
	import argparse

	common = argparse.ArgumentParser(add_help=False)
	common.add_argument('--json',
			help='Write one JSON object per line instead of plain text',
			dest='json',
			default=False,
			action='store_true'
	);
	common.add_argument('--max-n',
			help='Upper bound on n for exhaustive enumeration (also the range of the exhaustive verify checks)',
			dest='max_n',
			type=int,
			default=None,
			action='store'
	);
	common.add_argument('--order',
			help='Truncation order of power series',
			dest='order',
			type=int,
			default=None,
			action='store'
	);
	common.add_argument('--digits',
			help='Decimal precision for densities (at least 20)',
			dest='digits',
			type=int,
			default=None,
			action='store'
	);
	common.add_argument('--config',
			help='Configuration file replacing local_configs/defaults.ini',
			dest='config',
			type=str,
			default=None,
			action='store'
	);
	common.add_argument('--seed',
			help='Seed for the random samples drawn by verify',
			dest='seed',
			type=int,
			default=None,
			action='store'
	);
	common.add_argument('-v', '--verbose',
			help='Log progress to standard error (repeat for debug output)',
			dest='verbose',
			default=0,
			action='count'
	);
	return common


def create_default_cmdline_parser():
	import argparse

	common = _create_common_parser()
	epilog = 'Expression grammar: ' + GRAMMAR_TEXT + '. Whitespace is ignored.'

	parser = argparse.ArgumentParser(description="Bracket expressions, the free operad on primes, and the Lie generating series", prog=os.path.basename(sys.argv[0]), epilog=epilog)
	subparsers = parser.add_subparsers(dest='command', metavar='command')
	subparsers.required = True

	sub = subparsers.add_parser('enumerate', parents=[common], epilog=epilog,
			help='List the elements of L(n), or its primes')
	sub.add_argument('n', type=int, help='Number of symbols')
	sub.add_argument('--primes',
			help='List only the prime expressions P(n)',
			dest='primes',
			default=False,
			action='store_true'
	);
	sub.add_argument('--count',
			help='Print only the number of expressions',
			dest='count',
			default=False,
			action='store_true'
	);

	sub = subparsers.add_parser('decompose', parents=[common], epilog=epilog,
			help='Decompose an element of L(n) into a tree of prime expressions')
	sub.add_argument('expr', help='An element of L(n)')

	sub = subparsers.add_parser('compose', parents=[common], epilog=epilog,
			help='Substitute one expression for a symbol of another')
	sub.add_argument('a', help='Outer expression, a word on x1..xk')
	sub.add_argument('i', type=int, help='Index of the symbol to replace, 1..k')
	sub.add_argument('b', help='Inner expression, a word on x1..xl')

	sub = subparsers.add_parser('normalize', parents=[common], epilog=epilog,
			help='Rewrite the sum of bracket words into the L(n) basis')
	sub.add_argument('exprs', nargs='+', help='Words on x1..xn; the result is the normal form of their sum')

	sub = subparsers.add_parser('series', parents=[common],
			help='Print coefficients of a generating series')
	sub.add_argument('--which',
			help='F: (n-1)!, B: signed prime counts, A: SIF permutations, P: prime densities',
			dest='which',
			choices=['F', 'B', 'A', 'P'],
			default='B',
			action='store'
	);
	sub.add_argument('--max',
			help='Largest degree to print (defaults to --order)',
			dest='max_degree',
			type=int,
			default=None,
			action='store'
	);
	sub.add_argument('--method',
			help='How B is computed',
			dest='method',
			choices=['recurrence', 'inverse', 'lagrange'],
			default='recurrence',
			action='store'
	);

	sub = subparsers.add_parser('density', parents=[common],
			help='Evaluate e * p_n against its predicted expansion')
	sub.add_argument('n', type=int, nargs='*', help='Values of n (defaults to Density.TableN)')
	sub.add_argument('--n',
			help='A value of n; may be repeated',
			dest='n_flag',
			type=int,
			default=[],
			action='append'
	);
	sub.add_argument('--sif',
			help='Use the SIF permutation density a_n / n! instead',
			dest='sif',
			default=False,
			action='store_true'
	);

	sub = subparsers.add_parser('sif', parents=[common],
			help='Count stabilized-interval-free permutations by brute force')
	sub.add_argument('n', type=int, nargs='?', default=None, help='Size of the permutations')
	sub.add_argument('--n',
			help='Size of the permutations',
			dest='n_flag',
			type=int,
			default=None,
			action='store'
	);
	sub.add_argument('--list',
			help='List the permutations in cycle notation',
			dest='list',
			default=False,
			action='store_true'
	);

	sub = subparsers.add_parser('chord', parents=[common], epilog=epilog,
			help='Draw the chord diagram of an element of L(n)')
	sub.add_argument('expr', help='An element of L(n)')
	sub.add_argument('--format',
			help='Output format',
			dest='format',
			choices=['svg', 'ascii'],
			default='svg',
			action='store'
	);
	sub.add_argument('--out',
			help='Write the diagram to this file instead of standard output',
			dest='out',
			type=str,
			default=None,
			action='store'
	);

	subparsers.add_parser('verify', parents=[common],
			help='Run every verification check')
	subparsers.add_parser('verify-identities', parents=[common],
			help='Run only the power series identities')

	return parser
