"""Exact real-root counting by Sturm sequences over the rationals.

The count is taken with multiplicity: the square-free part is counted by
sign variations of its Sturm chain at -infinity and +infinity, and the
repeated part gcd(p, p') is handled recursively.  No floating point is
involved anywhere, so ``is_real_rooted`` is a decision procedure.
"""

from __future__ import annotations

from fractions import Fraction

from .polynomials import IntPolynomial

QPoly = tuple[Fraction, ...]


def _q_strip(coeffs: list[Fraction]) -> QPoly:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


def _q_from_int(p: IntPolynomial) -> QPoly:
    return tuple(Fraction(c) for c in p.coeffs)


def _q_degree(p: QPoly) -> int:
    return len(p) - 1


def _q_derivative(p: QPoly) -> QPoly:
    return _q_strip([k * c for k, c in enumerate(p)][1:])


def _q_divmod(a: QPoly, b: QPoly) -> tuple[QPoly, QPoly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    quo = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    db, lead = len(b) - 1, b[-1]
    while len(rem) - 1 >= db and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < db:
            break
        shift = len(rem) - 1 - db
        factor = rem[-1] / lead
        quo[shift] = factor
        for i, c in enumerate(b):
            rem[shift + i] -= factor * c
        rem.pop()
    return _q_strip(quo), _q_strip(rem)


def _q_monic(p: QPoly) -> QPoly:
    if not p:
        return p
    lead = p[-1]
    return tuple(c / lead for c in p)


def _q_gcd(a: QPoly, b: QPoly) -> QPoly:
    while b:
        a, b = b, _q_divmod(a, b)[1]
    return _q_monic(a)


def _sturm_chain(p: QPoly) -> list[QPoly]:
    chain = [p, _q_derivative(p)]
    while chain[-1]:
        rem = _q_divmod(chain[-2], chain[-1])[1]
        if not rem:
            break
        chain.append(tuple(-c for c in rem))
    return chain


def _sign_at_infinity(p: QPoly, positive: bool) -> int:
    if not p:
        return 0
    lead = p[-1]
    sign = 1 if lead > 0 else -1
    if not positive and _q_degree(p) % 2 == 1:
        sign = -sign
    return sign


def _variations(signs: list[int]) -> int:
    filtered = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(filtered, filtered[1:]) if a * b < 0)


def _distinct_real_roots(p: QPoly) -> int:
    """Number of distinct real roots of a square-free rational polynomial."""
    if _q_degree(p) == 0:
        return 0
    chain = _sturm_chain(p)
    at_minus = _variations([_sign_at_infinity(q, positive=False) for q in chain])
    at_plus = _variations([_sign_at_infinity(q, positive=True) for q in chain])
    return at_minus - at_plus


def real_root_count(p: IntPolynomial) -> int:
    """Real roots counted with multiplicity, exactly.

    >>> real_root_count(IntPolynomial((1, 4, 1)))
    2
    >>> real_root_count(IntPolynomial((1, 0, 1)))
    0
    >>> real_root_count(IntPolynomial((0, 0, 1)))
    2
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has every number as a root")
    q = _q_from_int(p)
    total = 0
    while _q_degree(q) >= 1:
        repeated = _q_gcd(q, _q_derivative(q))
        squarefree = _q_divmod(q, repeated)[0]
        total += _distinct_real_roots(squarefree)
        q = repeated
    return total


def is_real_rooted(p: IntPolynomial) -> bool:
    """True when every complex root is real (count equals degree)."""
    return real_root_count(p) == p.degree
