"""Coefficient field descriptions and exact scalar arithmetic.

Three kinds of field are supported: the rationals, a prime field F_p, and an
"algebraically closed" flag wrapping one of the former.  The flag does not
change any coefficient arithmetic (there is no general algebraic-closure
arithmetic here); it is consulted only by the factor-counting helpers, which
may then count points over the closure instead of irreducible factors over
the base.

Scalars are plain Python objects: int or Fraction in characteristic zero,
canonical residues 0 <= x < p in characteristic p.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateInput


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A coefficient field: characteristic plus an algebraically-closed flag."""

    char: int
    closed: bool = False

    def __post_init__(self):
        if self.char != 0 and not _is_prime(self.char):
            raise DegenerateInput(f"field characteristic must be 0 or prime, got {self.char}")

    # constructors

    @staticmethod
    def rationals() -> "FieldSpec":
        return FieldSpec(0)

    @staticmethod
    def prime(p: int) -> "FieldSpec":
        return FieldSpec(p)

    def closure(self) -> "FieldSpec":
        return FieldSpec(self.char, True)

    def base(self) -> "FieldSpec":
        """The underlying computable field (drops the closed flag)."""
        return FieldSpec(self.char)

    @staticmethod
    def parse(text: str) -> "FieldSpec":
        """Parse "Q", "F7", "Qbar", "F7bar"."""
        s = text.strip()
        closed = False
        if s.endswith("bar"):
            closed = True
            s = s[:-3]
        if s == "Q":
            return FieldSpec(0, closed)
        if s.startswith("F") and s[1:].isdigit():
            return FieldSpec(int(s[1:]), closed)
        raise DegenerateInput(f"unrecognized field {text!r}; expected Q, Fp, Qbar or Fpbar")

    def __str__(self) -> str:
        name = "Q" if self.char == 0 else f"F{self.char}"
        return name + ("bar" if self.closed else "")

    # scalar arithmetic

    def canon(self, x):
        """Canonical form of a scalar: residue in [0, p) or int/Fraction."""
        if self.char:
            return x % self.char
        if isinstance(x, Fraction) and x.denominator == 1:
            return int(x)
        return x

    def from_int(self, k: int):
        return k % self.char if self.char else k

    def add(self, x, y):
        return (x + y) % self.char if self.char else self.canon(x + y)

    def sub(self, x, y):
        return (x - y) % self.char if self.char else self.canon(x - y)

    def mul(self, x, y):
        return (x * y) % self.char if self.char else self.canon(x * y)

    def neg(self, x):
        return (-x) % self.char if self.char else -x

    def inv(self, x):
        if self.char:
            return pow(x % self.char, self.char - 2, self.char)
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.canon(Fraction(1, 1) / Fraction(x))

    def is_zero(self, x) -> bool:
        return (x % self.char == 0) if self.char else x == 0

    @property
    def one(self):
        return 1

    @property
    def zero(self):
        return 0
