"""
Monomials as exponent tuples, ordered graded-lexicographically with
x0 > x1 > ... > xn.
"""
from functools import lru_cache
from math import comb


@lru_cache(maxsize=None)
def monomials_of_degree(num_vars, d):
    """
    All exponent tuples of total degree d in ``num_vars`` variables, in
    decreasing lex order (x0^d first). There are C(num_vars + d - 1, d).
    """
    if num_vars < 1 or d < 0:
        raise ValueError(f'need num_vars >= 1 and d >= 0, got ({num_vars}, {d})')
    if num_vars == 1:
        return ((d,),)
    out = []
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(num_vars - 1, d - first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(num_vars, d):
    return {m: i for i, m in enumerate(monomials_of_degree(num_vars, d))}


def ring_dimension(num_vars, d):
    """dim R_d."""
    if d < 0:
        return 0
    return comb(num_vars + d - 1, d)


def multiply(m1, m2):
    return tuple(a + b for a, b in zip(m1, m2))


def sort_key(m):
    # descending degree, then descending lex
    return (-sum(m), tuple(-e for e in m))


def format_monomial(m):
    factors = []
    for i, e in enumerate(m):
        if e == 1:
            factors.append(f'x{i}')
        elif e > 1:
            factors.append(f'x{i}^{e}')
    return '*'.join(factors)
