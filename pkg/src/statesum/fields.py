"""Exact scalar fields: arbitrary-precision rationals and prime fields F_p.

Scalars are plain Python values -- ``fractions.Fraction`` over the rationals
and canonical residues ``0..p-1`` (ints) over a prime field.  Both
representations are canonical: equal values have identical representations,
so exact equality of matrices and tensors is plain ``==``.  A :class:`Field`
instance supplies the arithmetic; it is the only piece of shared context
threaded through the linear algebra.
"""

from __future__ import annotations

from fractions import Fraction


def is_prime(n: int) -> bool:
    """Trial division; inputs at desk scale are tiny."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Field:
    """The coefficient field, either Q (``p is None``) or F_p."""

    __slots__ = ("p",)

    def __init__(self, p: int | None = None):
        if p is not None and not is_prime(p):
            raise ValueError(f"prime field modulus must be prime, got {p}")
        self.p = p

    # -- identity ----------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.p is None

    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "Field(Q)" if self.p is None else f"Field(F_{self.p})"

    # -- element construction ----------------------------------------------

    def zero(self):
        return Fraction(0) if self.p is None else 0

    def one(self):
        return Fraction(1) if self.p is None else 1

    def of_int(self, n: int):
        return Fraction(n) if self.p is None else n % self.p

    # -- arithmetic ----------------------------------------------------------

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def inv(self, a):
        if self.p is None:
            if a == 0:
                raise ZeroDivisionError("division by zero in Q")
            return 1 / Fraction(a)
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a / b if self.p is None else (a * pow(b, -1, self.p)) % self.p

    def is_zero(self, a) -> bool:
        return a == 0

    # -- text form (CLI file format) -----------------------------------------

    def parse(self, s: str):
        """Parse a coefficient string: "a/b" or "a" (rationals), residue (F_p)."""
        s = s.strip()
        if self.p is None:
            return Fraction(s)
        if "/" in s:
            num, den = s.split("/", 1)
            return self.div(int(num) % self.p, int(den) % self.p)
        return int(s) % self.p

    def format(self, a) -> str:
        if self.p is None:
            return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
        return str(a % self.p)


#: The rationals, shared instance.
QQ = Field()


def GF(p: int) -> Field:
    """Prime field of order ``p``."""
    return Field(p)
