"""
Integer Laurent polynomials in t and small matrices over them.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Mapping, Sequence, Union


class LaurentPoly:
    """An element of Z[t, t^-1], stored as {exponent: nonzero coefficient}."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Union[Mapping[int, int], Iterable[tuple[int, int]], None] = None) -> None:
        c: dict[int, int] = {}
        if coeffs is not None:
            items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
            for e, a in items:
                c[e] = c.get(e, 0) + a
        self._c = {e: a for e, a in c.items() if a != 0}
        self._hash = None

    @classmethod
    def const(cls, a: int) -> LaurentPoly:
        return cls({0: a})

    @classmethod
    def monomial(cls, e: int, a: int = 1) -> LaurentPoly:
        return cls({e: a})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def terms(self) -> list[tuple[int, int]]:
        return sorted(self._c.items())

    def min_exp(self) -> int:
        return min(self._c)

    def max_exp(self) -> int:
        return max(self._c)

    def monomial_form(self) -> tuple[int, int] | None:
        """(sign, exponent) if this is +-t^e, else None."""
        if len(self._c) == 1:
            (e, a), = self._c.items()
            if a in (1, -1):
                return a, e
        return None

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __add__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        c = dict(self._c)
        for e, a in other._c.items():
            c[e] = c.get(e, 0) + a
        return LaurentPoly(c)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -a for e, a in self._c.items()})

    def __sub__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly({e: a * other for e, a in self._c.items()})
        c: dict[int, int] = {}
        for e1, a1 in self._c.items():
            for e2, a2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + a1 * a2
        return LaurentPoly(c)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            m = self.monomial_form()
            if m is None:
                raise ValueError("only units +-t^e have negative powers")
            sign, e = m
            return LaurentPoly.monomial(e * n, sign ** n)
        out = LaurentPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def exact_div(self, other: LaurentPoly) -> LaurentPoly:
        """Quotient self / other, raising ArithmeticError unless it is exact."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = dict(self._c)
        quot: dict[int, int] = {}
        d_top = other.max_exp()
        d_lead = other._c[d_top]
        span = d_top - other.min_exp()
        while rem:
            top = max(rem)
            if top - min(rem) < span:
                raise ArithmeticError("inexact Laurent division")
            q, r = divmod(rem[top], d_lead)
            if r:
                raise ArithmeticError("inexact Laurent division")
            shift = top - d_top
            quot[shift] = q
            for e, a in other._c.items():
                v = rem.get(e + shift, 0) - q * a
                if v:
                    rem[e + shift] = v
                else:
                    rem.pop(e + shift, None)
        return LaurentPoly(quot)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        out = []
        for e, a in self.terms():
            if e == 0:
                body = str(abs(a))
            else:
                mono = "t" if e == 1 else f"t^{e}"
                body = mono if abs(a) == 1 else f"{abs(a)}{mono}"
            sign = "-" if a < 0 else "+"
            out.append((sign, body))
        first_sign, first_body = out[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in out[1:]:
            text += sign + body
        return text


T = LaurentPoly.monomial(1)
ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)

Matrix = list[list[LaurentPoly]]


def identity_matrix(n: int) -> Matrix:
    return [[ONE if a == b else ZERO for b in range(n)] for a in range(n)]


def mat_mul(a: Sequence[Sequence[LaurentPoly]], b: Sequence[Sequence[LaurentPoly]]) -> Matrix:
    if not a or len(a[0]) != len(b):
        raise ValueError("dimension mismatch in matrix product")
    cols = len(b[0])
    out = []
    for row in a:
        new_row = []
        for j in range(cols):
            acc = ZERO
            for k, x in enumerate(row):
                if not x.is_zero() and not b[k][j].is_zero():
                    acc = acc + x * b[k][j]
            new_row.append(acc)
        out.append(new_row)
    return out


def _check_square(m: Sequence[Sequence[LaurentPoly]]) -> int:
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    return n


def det_bareiss(m: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Fraction-free elimination; every division is exact in Z[t, t^-1]."""
    n = _check_square(m)
    if n == 0:
        return ONE
    a = [list(row) for row in m]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k].is_zero():
            for r in range(k + 1, n):
                if not a[r][k].is_zero():
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return ZERO
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev)
        prev = a[k][k]
    return a[n - 1][n - 1] * sign


def det_cofactor(m: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Leibniz expansion over all permutations; meant for n <= 6."""
    n = _check_square(m)
    total = ZERO
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = ONE
        for r, c in enumerate(perm):
            x = m[r][c]
            if x.is_zero():
                break
            term = term * x
        else:
            total = total + (term if inversions % 2 == 0 else -term)
    return total


def determinant(m: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    return det_bareiss(m)


def format_matrix(m: Sequence[Sequence[LaurentPoly]]) -> str:
    cells = [[str(x) for x in row] for row in m]
    width = max((len(c) for row in cells for c in row), default=1)
    return "\n".join("[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)
