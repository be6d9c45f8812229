"""Scalar fields: GF(p) for primes below 2^31, or the rationals."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

import numpy as np
from sympy import isprime

from haemers.core.exceptions import BadParameter, ParseError

PRIME_LIMIT = 2**31
RATIONAL_TOKEN = "Q"


@dataclass(frozen=True)
class FieldSpec:
    """
    Field carrier for exact arithmetic.

    ``p`` is the characteristic of a prime field, or ``None`` for Q. Prime
    field scalars are stored as ``int`` in ``[0, p)`` (``int64`` arrays);
    rational scalars are ``Fraction`` (``object`` arrays).
    """

    p: Optional[int] = None

    def __post_init__(self):
        if self.p is None:
            return
        if isinstance(self.p, bool) or not isinstance(self.p, int):
            raise BadParameter(f"field characteristic must be an integer, got {self.p!r}")
        if self.p >= PRIME_LIMIT or not isprime(self.p):
            raise BadParameter(f"{self.p} is not a prime below 2^31")

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def rational(cls) -> "FieldSpec":
        return cls(None)

    @classmethod
    def parse(cls, token: str) -> "FieldSpec":
        """Parse the file/CLI token: a prime number or ``Q``."""
        token = token.strip()
        if token.upper() == RATIONAL_TOKEN:
            return cls.rational()
        try:
            return cls.prime(int(token))
        except ValueError:
            raise ParseError(f"invalid field token {token!r}")

    @property
    def is_rational(self) -> bool:
        return self.p is None

    @property
    def token(self) -> str:
        return RATIONAL_TOKEN if self.p is None else str(self.p)

    @property
    def dtype(self):
        return object if self.p is None else np.int64

    def __str__(self) -> str:
        return "Q" if self.p is None else f"GF({self.p})"

    def scalar(self, value: Any):
        """Canonical scalar for ``value`` (int, Fraction or text such as ``3/4``)."""
        if self.p is None:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator == 1:
                return int(value.numerator) % self.p
            return self.scalar(value.numerator) * self.inverse(value.denominator % self.p) % self.p
        if isinstance(value, str):
            return self.scalar(Fraction(value))
        return int(value) % self.p

    def inverse(self, value):
        if value == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.p is None:
            return 1 / Fraction(value)
        return pow(int(value), -1, self.p)

    def reduce(self, array: np.ndarray) -> np.ndarray:
        """Bring an array of raw integer results back to canonical residues."""
        if self.p is None:
            return array
        return array % self.p

    def array(self, values) -> np.ndarray:
        if self.p is None:
            return np.array(values, dtype=object)
        return np.array(values, dtype=np.int64)

    def zeros(self, shape) -> np.ndarray:
        if self.p is None:
            out = np.empty(shape, dtype=object)
            out.fill(Fraction(0))
            return out
        return np.zeros(shape, dtype=np.int64)
