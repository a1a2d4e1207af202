"""Univariate polynomials over Q, just enough for eigenvalue hunting.

Polynomials are lists of Fractions, low degree first, with no trailing
zeros (the zero polynomial is the empty list).  The one consumer is the
idempotent-splitting routine, which needs the rational roots of minimal
polynomials of endomorphisms.  Roots are searched on the squarefree
part, whose integer coefficients stay small, via the rational root
theorem.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

__all__ = ['normalize', 'p_eval', 'p_mul', 'p_divmod', 'p_gcd',
           'derivative', 'squarefree_part', 'rational_roots']


def normalize(p: list) -> list[Fraction]:
    p = [Fraction(c) for c in p]
    while p and p[-1] == 0:
        p.pop()
    return p


def p_eval(p: list, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def p_mul(p: list, q: list) -> list:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return normalize(out)


def p_divmod(p: list, q: list) -> tuple[list, list]:
    p, q = normalize(p), normalize(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(0, len(p) - len(q) + 1)
    rem = p[:]
    while len(rem) >= len(q) and rem:
        f = rem[-1] / q[-1]
        d = len(rem) - len(q)
        quot[d] = f
        rem = [rem[i] - f * q[i - d] if 0 <= i - d < len(q) else rem[i]
               for i in range(len(rem))]
        rem = normalize(rem)
    return normalize(quot), rem


def p_gcd(p: list, q: list) -> list:
    p, q = normalize(p), normalize(q)
    while q:
        p, q = q, p_divmod(p, q)[1]
    if p:
        lead = p[-1]
        p = [c / lead for c in p]  # monic
    return p


def derivative(p: list) -> list:
    return normalize([i * c for i, c in enumerate(p)][1:])


def squarefree_part(p: list) -> list:
    p = normalize(p)
    if len(p) <= 1:
        return p
    g = p_gcd(p, derivative(p))
    return p_divmod(p, g)[0]


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(p: list) -> list[Fraction]:
    """All rational roots of p (each listed once), via the root theorem.

    Roots are read off the squarefree part, so coefficient blowup from
    repeated factors does not slow down the divisor search.
    """
    p = squarefree_part(p)
    if not p:
        raise ValueError("the zero polynomial has every root")
    roots: list[Fraction] = []
    # strip powers of x
    k = 0
    while k < len(p) and p[k] == 0:
        k += 1
    if k:
        roots.append(Fraction(0))
        p = p[k:]
    if len(p) <= 1:
        return roots
    den = 1
    for c in p:
        den = den * c.denominator // gcd(den, c.denominator)
    ip = [int(c * den) for c in p]
    g = 0
    for c in ip:
        g = gcd(g, c)
    if g > 1:
        ip = [c // g for c in ip]
    for num in _divisors(ip[0]):
        for q in _divisors(ip[-1]):
            for sign in (1, -1):
                cand = Fraction(sign * num, q)
                if cand not in roots and p_eval(p, cand) == 0:
                    roots.append(cand)
    return sorted(roots)
