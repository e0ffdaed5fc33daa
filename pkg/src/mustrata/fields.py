"""Exact ground fields: the rationals and prime fields.

Field elements are plain Python numbers.  Over ``Q`` they are
:class:`fractions.Fraction` instances; over ``F_p`` they are ints in
``[0, p)``.  A :class:`Field` converts, normalizes and encodes them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import FieldMismatchError, MustrataError

DEFAULT_PRIME = 2**31 - 1


@dataclass(frozen=True)
class Field:
    """``Field()`` is Q; ``Field(p)`` is the prime field with p elements."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and (self.p < 2 or not _is_probable_prime(self.p)):
            raise MustrataError(f"field characteristic {self.p} is not prime")

    @property
    def is_rational(self) -> bool:
        return self.p is None

    @property
    def zero(self):
        return Fraction(0) if self.p is None else 0

    @property
    def one(self):
        return Fraction(1) if self.p is None else 1

    def __call__(self, x):
        if self.p is None:
            if isinstance(x, str):
                return Fraction(x.strip())
            return Fraction(x)
        if isinstance(x, str):
            x = Fraction(x.strip())
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image in F_{self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def norm(self, x):
        return x if self.p is None else x % self.p

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        if self.p is None:
            return 1 / x
        return pow(x, -1, self.p)

    def random(self, rng, bound: int = 20):
        """Uniform draw: integers in [-bound, bound] over Q, all of F_p otherwise."""
        if self.p is None:
            return Fraction(rng.randint(-bound, bound))
        return rng.randrange(self.p)

    def random_nonzero(self, rng, bound: int = 20):
        while True:
            x = self.random(rng, bound)
            if x:
                return x

    def encode(self, x) -> str:
        if self.p is None:
            x = Fraction(x)
            return f"{x.numerator}/{x.denominator}"
        return str(x % self.p)

    def decode(self, text: str):
        if self.p is not None:
            value = int(text)
            if not 0 <= value < self.p:
                raise MustrataError(f"{text!r} is not a canonical representative mod {self.p}")
            return value
        return Fraction(text)

    def check_same(self, other: "Field"):
        if self != other:
            raise FieldMismatchError(f"cannot mix fields {self} and {other}")

    def __str__(self):
        return "Q" if self.p is None else f"Fp:{self.p}"

    @classmethod
    def parse(cls, spec: str) -> "Field":
        spec = spec.strip()
        if spec in ("Q", "QQ"):
            return QQ
        if spec == "Fp":
            return cls(DEFAULT_PRIME)
        if spec.startswith("Fp:"):
            try:
                p = int(spec[3:])
            except ValueError:
                raise MustrataError(f"bad field spec {spec!r}") from None
            return cls(p)
        raise MustrataError(f"bad field spec {spec!r}; expected Q or Fp:<p>")


def _is_probable_prime(n: int) -> bool:
    if n < 4:
        return n in (2, 3)
    if n % 2 == 0:
        return False
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


QQ = Field()


def GF(p: int = DEFAULT_PRIME) -> Field:
    return Field(p)
