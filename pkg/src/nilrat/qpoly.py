"""Exact Laurent polynomials in one variable ``q`` with integer coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

import numpy as np

Number = Union[int, Fraction]

# np.convolve on int64 is exact while every partial sum stays below this.
_INT64_SAFE = 1 << 62


class QPoly:
    """Immutable Laurent polynomial ``sum_k c_k q^k`` with ``c_k`` in Z.

    Stored as the lowest exponent ``low`` plus a dense tuple of coefficients
    whose first and last entries are nonzero. The zero polynomial has an empty
    tuple and ``low == 0``.
    """

    __slots__ = ("low", "coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = (), low: int = 0):
        cs = [int(c) for c in coeffs]
        start = 0
        while start < len(cs) and cs[start] == 0:
            start += 1
        end = len(cs)
        while end > start and cs[end - 1] == 0:
            end -= 1
        if start == end:
            self.low = 0
            self.coeffs: tuple[int, ...] = ()
        else:
            self.low = low + start
            self.coeffs = tuple(cs[start:end])
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "QPoly":
        return cls((coeff,), exponent)

    @classmethod
    def from_dict(cls, terms: dict[int, int]) -> "QPoly":
        terms = {k: v for k, v in terms.items() if v}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls([terms.get(k, 0) for k in range(lo, hi + 1)], lo)

    @classmethod
    def const(cls, c: int) -> "QPoly":
        return cls((c,))

    # -- inspection -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def valuation(self) -> int:
        if not self.coeffs:
            raise ValueError("valuation of the zero polynomial")
        return self.low

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("degree of the zero polynomial")
        return self.low + len(self.coeffs) - 1

    def is_polynomial(self) -> bool:
        return not self.coeffs or self.low >= 0

    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    def is_one(self) -> bool:
        return self.low == 0 and self.coeffs == (1,)

    def coefficient(self, k: int) -> int:
        i = k - self.low
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def to_dict(self) -> dict[int, int]:
        return {self.low + i: c for i, c in enumerate(self.coeffs) if c}

    def coefficient_list(self) -> list[int]:
        """Coefficients of ``q^0, q^1, ...``; only for genuine polynomials."""
        if not self.is_polynomial():
            raise ValueError(f"{self} has negative exponents")
        if not self.coeffs:
            return []
        return [0] * self.low + list(self.coeffs)

    def max_abs(self) -> int:
        return max((abs(c) for c in self.coeffs), default=0)

    # -- arithmetic -------------------------------------------------------
    def __neg__(self) -> "QPoly":
        return QPoly([-c for c in self.coeffs], self.low)

    def __add__(self, other) -> "QPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        lo = min(self.low, other.low)
        hi = max(self.low + len(self.coeffs), other.low + len(other.coeffs))
        out = [0] * (hi - lo)
        for i, c in enumerate(self.coeffs):
            out[self.low - lo + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.low - lo + i] += c
        return QPoly(out, lo)

    __radd__ = __add__

    def __sub__(self, other) -> "QPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "QPoly":
        return (-self) + other

    def __mul__(self, other) -> "QPoly":
        if isinstance(other, int):
            return QPoly([c * other for c in self.coeffs], self.low)
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return QPoly()
        a, b = self.coeffs, other.coeffs
        if len(a) == 1:
            return QPoly([a[0] * c for c in b], self.low + other.low)
        if len(b) == 1:
            return QPoly([b[0] * c for c in a], self.low + other.low)
        bound = self.max_abs() * other.max_abs() * min(len(a), len(b))
        if bound < _INT64_SAFE:
            prod = np.convolve(np.asarray(a, dtype=np.int64),
                               np.asarray(b, dtype=np.int64)).tolist()
        else:
            prod = [0] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        prod[i + j] += x * y
        return QPoly(prod, self.low + other.low)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QPoly":
        if k < 0:
            raise ValueError("negative power")
        out = QPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "QPoly":
        """Multiply by ``q^k``."""
        if not self.coeffs:
            return self
        return QPoly(self.coeffs, self.low + k)

    def invert_variable(self) -> "QPoly":
        """Substitute ``q -> 1/q``."""
        if not self.coeffs:
            return self
        return QPoly(reversed(self.coeffs), -self.degree)

    def exact_div_int(self, d: int) -> "QPoly":
        out = []
        for c in self.coeffs:
            qt, r = divmod(c, d)
            if r:
                raise ArithmeticError(f"{self} is not divisible by {d}")
            out.append(qt)
        return QPoly(out, self.low)

    def exact_div(self, other: "QPoly") -> "QPoly":
        """Quotient in Z[q, 1/q]; raises ``ArithmeticError`` if inexact."""
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.coeffs:
            return QPoly()
        if len(other.coeffs) == 1:
            c = other.coeffs[0]
            return self.exact_div_int(c).shift(-other.low)
        # long division on the dense parts, from the top coefficient down
        rem = list(self.coeffs)
        div = other.coeffs
        n_q = len(rem) - len(div) + 1
        if n_q <= 0:
            raise ArithmeticError(f"{self} is not divisible by {other}")
        lead = div[-1]
        quot = [0] * n_q
        for i in range(n_q - 1, -1, -1):
            top = rem[i + len(div) - 1]
            if top:
                qt, r = divmod(top, lead)
                if r:
                    raise ArithmeticError(f"{self} is not divisible by {other}")
                quot[i] = qt
                for j, d in enumerate(div):
                    rem[i + j] -= qt * d
        if any(rem):
            raise ArithmeticError(f"{self} is not divisible by {other}")
        return QPoly(quot, self.low - other.low)

    def __call__(self, x: Number) -> Number:
        if not self.coeffs:
            return 0
        if self.low < 0:
            x = Fraction(x)
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc * x**self.low if self.low else acc

    # -- comparison / hashing ---------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QPoly.const(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.low == other.low and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.low, self.coeffs))
        return self._hash

    # -- text -------------------------------------------------------------
    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            k = self.low + i
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            mag = abs(c)
            if mono == "":
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)!r}, low={self.low})"

    def to_json(self) -> dict:
        return {"low": self.low, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, data: dict) -> "QPoly":
        return cls(data["coeffs"], data["low"])


def _coerce(x):
    if isinstance(x, QPoly):
        return x
    if isinstance(x, int):
        return QPoly.const(x)
    return NotImplemented


Q = QPoly.monomial(1)
ONE = QPoly.const(1)
ZERO = QPoly()


def q_integer(n: int) -> QPoly:
    """The q-integer ``1 + q + ... + q^(n-1)``."""
    return QPoly([1] * n)
