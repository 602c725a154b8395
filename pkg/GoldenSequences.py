#!/usr/bin/python3

## @package GoldenSequences
#
# Integer sequences the computations must reproduce exactly. They are
# embedded here so that tests and `verify` never need the network.
#

import math


## Number of prime expressions `b_n = |P(n)|` for n = 2..10 (OEIS A134988)
#
PRIME_COUNTS = {n: b for n, b in zip(range(2, 11), [1, 0, 1, 4, 22, 144, 1089, 9308, 88562])}

## Stabilized-interval-free permutations `a_n` for n = 0..8 (OEIS A075834)
#
SIF_COUNTS = {n: a for n, a in zip(range(0, 9), [1, 1, 1, 2, 7, 34, 206, 1476, 12123])}

## Reduced trees on k leaves for k = 1..8 (little Schroeder numbers)
#
REDUCED_TREE_COUNTS = {k: s for k, s in zip(range(1, 9), [1, 1, 3, 11, 45, 197, 903, 4279])}


## `|L(n)| = (n-1)!`
#
def lie_dimension(n):
	return math.factorial(n - 1)


## Brute-force SIF counting stops here by default (9! permutations)
#
SIF_BRUTE_FORCE_MAX = max(SIF_COUNTS)
