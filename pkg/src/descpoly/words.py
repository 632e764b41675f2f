"""Schröder words and the sweeping decomposition of separable permutations.

A Schröder word of length n is a fully parenthesized expression built from
n copies of the atom "1" joined by the operators ⊕ (written ``+``) and
⊖ (written ``-``), subject to the right-chain restriction: no operator node
whose *right* operand is an operator node with the same operator.  The two
nestings ``(A+(B+C))`` and ``(A-(B-C))`` can never arise because the sweep
always merges the leftmost eligible pair first, producing ``((A+B)+C)``
instead.

The sweep itself reads a permutation left to right as a list of blocks,
each covering an interval of values.  Whenever the two adjacent blocks with
the least index hold consecutive values they merge: ``+`` if the left block
is the smaller interval, ``-`` if it is the larger.  A permutation sweeps
down to a single block exactly when it avoids 2413 and 3142.

Grammar for the textual form (whitespace ignored on parse, never emitted):

    W  ::=  "1"  |  "(" W op W ")"
    op ::=  "+"  |  "-"
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Union

from .permutations import (
    PATTERN_2413,
    PATTERN_3142,
    Permutation,
    find_pattern,
)

PLUS = "+"
MINUS = "-"


class InvalidWordError(ValueError):
    """Raised for expressions violating the right-chain restriction."""


class NotSeparableError(ValueError):
    """Sweep failure; carries one witness occurrence of 2413 or 3142."""

    def __init__(self, perm: Permutation, pattern: Permutation, positions: tuple[int, ...]):
        self.perm = perm
        self.pattern = pattern
        self.positions = positions
        super().__init__(
            f"{perm} is not separable: pattern {pattern} at positions {positions}"
        )


# Expression nodes: the atom is the singleton LEAF, operator nodes are
# (op, left, right) tuples.  Sharing is safe because nodes are immutable.
LEAF = "1"
Expr = Union[str, tuple]


def _node(op: str, left: Expr, right: Expr) -> tuple:
    return (op, left, right)


def expr_is_valid(expr: Expr) -> bool:
    if expr == LEAF:
        return True
    op, left, right = expr
    if isinstance(right, tuple) and right[0] == op:
        return False
    return expr_is_valid(left) and expr_is_valid(right)


@dataclass(frozen=True)
class SchroderWord:
    """A valid Schröder word, wrapping its expression tree."""

    expr: Expr

    def __init__(self, expr: Expr, _validate: bool = True):
        if _validate and not expr_is_valid(expr):
            raise InvalidWordError(f"right-chain restriction violated: {expr_to_text(expr)}")
        object.__setattr__(self, "expr", expr)

    @property
    def n(self) -> int:
        """Number of leaves."""
        return _leaf_count(self.expr)

    def operators(self) -> tuple[str, ...]:
        """Operators in left-to-right textual order.

        >>> SchroderWord.parse("((1+1)-1)").operators()
        ('+', '-')
        """
        out: list[str] = []

        def walk(e: Expr) -> None:
            if e == LEAF:
                return
            op, left, right = e
            walk(left)
            out.append(op)
            walk(right)

        walk(self.expr)
        return tuple(out)

    def minus_positions(self) -> frozenset[int]:
        """1-based positions of ``-`` in the operator sequence."""
        return frozenset(
            i for i, op in enumerate(self.operators(), start=1) if op == MINUS
        )

    def __str__(self) -> str:
        return expr_to_text(self.expr)

    @classmethod
    def parse(cls, text: str) -> "SchroderWord":
        return cls(parse_expr(text))


@lru_cache(maxsize=None)
def _leaf_count(expr: Expr) -> int:
    if expr == LEAF:
        return 1
    return _leaf_count(expr[1]) + _leaf_count(expr[2])


def expr_to_text(expr: Expr) -> str:
    if expr == LEAF:
        return "1"
    op, left, right = expr
    return f"({expr_to_text(left)}{op}{expr_to_text(right)})"


def parse_expr(text: str) -> Expr:
    stripped = "".join(text.split())
    pos = 0

    def parse() -> Expr:
        nonlocal pos
        if pos >= len(stripped):
            raise InvalidWordError("unexpected end of word")
        ch = stripped[pos]
        if ch == "1":
            pos += 1
            return LEAF
        if ch != "(":
            raise InvalidWordError(f"expected '1' or '(' at offset {pos}")
        pos += 1
        left = parse()
        if pos >= len(stripped) or stripped[pos] not in (PLUS, MINUS):
            raise InvalidWordError(f"expected operator at offset {pos}")
        op = stripped[pos]
        pos += 1
        right = parse()
        if pos >= len(stripped) or stripped[pos] != ")":
            raise InvalidWordError(f"expected ')' at offset {pos}")
        pos += 1
        return _node(op, left, right)

    expr = parse()
    if pos != len(stripped):
        raise InvalidWordError(f"trailing input at offset {pos}")
    return expr


def sweep(p: Permutation) -> SchroderWord:
    """Decompose a separable permutation into its Schröder word.

    Each block is (expression, lo, hi) covering the value interval
    [lo, hi].  Two adjacent blocks merge when their intervals are adjacent:
    increasing (left below right) gives ``+``, decreasing gives ``-``.  The
    leftmost eligible pair merges first, and the scan restarts because a
    merge can enable a new merge immediately to its left.

    >>> str(sweep(Permutation((9, 8, 4, 1, 3, 2, 7, 5, 6))))
    '((1-1)-((1-(1+(1-1)))+(1-(1+1))))'

    Raises NotSeparableError (with a witness occurrence) exactly when p
    contains 2413 or 3142.
    """
    blocks: list[tuple[Expr, int, int]] = [(LEAF, v, v) for v in p.word]
    while len(blocks) > 1:
        for j in range(len(blocks) - 1):
            _, llo, lhi = blocks[j]
            _, rlo, rhi = blocks[j + 1]
            if lhi + 1 == rlo:
                op = PLUS
            elif rhi + 1 == llo:
                op = MINUS
            else:
                continue
            le, re = blocks[j][0], blocks[j + 1][0]
            blocks[j : j + 2] = [(_node(op, le, re), min(llo, rlo), max(lhi, rhi))]
            break
        else:
            for pattern in (PATTERN_2413, PATTERN_3142):
                hit = find_pattern(p, pattern)
                if hit is not None:
                    raise NotSeparableError(p, pattern, hit)
            raise AssertionError(f"sweep stuck on {p} with no forbidden pattern")
    return SchroderWord(blocks[0][0])


def word_to_perm(w: SchroderWord) -> Permutation:
    """Inverse of sweep: evaluate the expression with ``+`` as direct sum
    and ``-`` as skew sum on singleton permutations.

    >>> str(word_to_perm(SchroderWord.parse("((1+1)-1)")))
    '231'
    """

    def evaluate(e: Expr) -> Permutation:
        if e == LEAF:
            return Permutation((1,))
        op, left, right = e
        l, r = evaluate(left), evaluate(right)
        return l.direct_sum(r) if op == PLUS else l.skew_sum(r)

    return evaluate(w.expr)


def enumerate_words(n: int) -> Iterator[SchroderWord]:
    """Generate every Schröder word with n leaves exactly once.

    Counts follow the large Schröder numbers 1, 2, 6, 22, 90, 394, 1806, ...
    """
    if n < 1:
        raise ValueError("need n >= 1")
    for expr in _gen_exprs(n):
        yield SchroderWord(expr, _validate=False)


@lru_cache(maxsize=None)
def _gen_exprs(n: int) -> tuple[Expr, ...]:
    if n == 1:
        return (LEAF,)
    out: list[Expr] = []
    for i in range(1, n):
        for right in _gen_exprs(n - i):
            # The right operand may not repeat the operator at its root.
            allowed = (PLUS, MINUS)
            if isinstance(right, tuple):
                allowed = (MINUS,) if right[0] == PLUS else (PLUS,)
            for left in _gen_exprs(i):
                for op in allowed:
                    out.append(_node(op, left, right))
    return tuple(out)
