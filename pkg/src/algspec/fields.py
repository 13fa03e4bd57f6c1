"""Scalar fields: the rationals and prime fields GF(p).

Rationals are represented by :class:`fractions.Fraction`, which is already
kept in lowest terms with a positive denominator.  Residues modulo ``p`` are
:class:`Residue` objects.  Rational-function fields live in
:mod:`algspec.ratfunc` because they are built on polynomials.

A field object is the *descriptor*: it coerces Python numbers into elements,
knows its zero and one, formats elements canonically and enumerates sample
points.
"""

from fractions import Fraction
from itertools import count

from .errors import DivisionByZero, FieldMismatch, PreconditionError

PRIME_FIELD_LIMIT = 2 ** 16


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Field:
    """Common behaviour of the scalar fields."""

    is_field = True
    characteristic = 0
    order = None  # number of elements, None when infinite

    @property
    def is_finite(self):
        return self.order is not None

    def is_zero(self, x):
        return not x

    def elements(self):
        raise PreconditionError(f"{self} is infinite")

    def sample_points(self):
        """Deterministic sequence of distinct elements: 0, 1, -1, 2, -2, ..."""
        yield self(0)
        for k in count(1):
            yield self(k)
            yield self(-k)

    def format(self, x):
        return str(x)

    def __repr__(self):
        return str(self)


class Rationals(Field):
    """The field of rational numbers, elements are ``Fraction`` instances."""

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def __call__(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, bool):
            return Fraction(int(x))
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, Residue):
            raise FieldMismatch(f"residue mod {x.p} is not a rational")
        if hasattr(x, "numerator") and hasattr(x, "denominator") and not hasattr(x, "num"):
            return Fraction(x.numerator, x.denominator)
        raise FieldMismatch(f"cannot interpret {x!r} as a rational")

    def contains(self, x):
        return isinstance(x, Fraction)

    def inv(self, x):
        if not x:
            raise DivisionByZero("inverse of zero")
        return 1 / x

    def sample_points(self):
        yield Fraction(0)
        for k in count(1):
            yield Fraction(k)
            yield Fraction(-k)

    def random_element(self, rng, bound=5, denominators=(1,)):
        return Fraction(rng.randint(-bound, bound), rng.choice(denominators))

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __str__(self):
        return "Q"


QQ = Rationals()


class Residue:
    """An element of GF(p), stored as its representative in ``[0, p)``."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Residue):
            if other.p != self.p:
                raise FieldMismatch(f"GF({self.p}) and GF({other.p}) elements mixed")
            return other.v
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            if other.denominator % self.p == 0:
                raise DivisionByZero(f"{other} has no image in GF({self.p})")
            return other.numerator * pow(other.denominator, -1, self.p) % self.p
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.v, self.p)

    def __pos__(self):
        return self

    def inverse(self):
        if self.v == 0:
            raise DivisionByZero(f"0 has no inverse in GF({self.p})")
        return Residue(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o == 0:
            raise DivisionByZero(f"division by 0 in GF({self.p})")
        return Residue(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(o, self.p) / self

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        return Residue(pow(self.v, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __lt__(self, other):
        # ordering by representative, only used for canonical sorting
        return self.v < Residue(0, self.p)._coerce(other)

    def __repr__(self):
        return f"Residue({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


class PrimeField(Field):
    """GF(p) for a prime ``p < 2**16``."""

    def __init__(self, p):
        if not isinstance(p, int) or not is_prime(p):
            raise PreconditionError(f"{p} is not prime")
        if p >= PRIME_FIELD_LIMIT:
            raise PreconditionError(f"prime fields are limited to p < {PRIME_FIELD_LIMIT}")
        self.p = p
        self.characteristic = p
        self.order = p
        self.zero = Residue(0, p)
        self.one = Residue(1, p)

    def __call__(self, x):
        if isinstance(x, Residue):
            if x.p != self.p:
                raise FieldMismatch(f"residue mod {x.p} is not in GF({self.p})")
            return x
        if isinstance(x, bool):
            x = int(x)
        if isinstance(x, (int, Fraction)):
            v = self.zero._coerce(x)
            return Residue(v, self.p)
        raise FieldMismatch(f"cannot interpret {x!r} as an element of GF({self.p})")

    def contains(self, x):
        return isinstance(x, Residue) and x.p == self.p

    def inv(self, x):
        return self(x).inverse()

    def elements(self):
        return [Residue(v, self.p) for v in range(self.p)]

    def sample_points(self):
        return iter(self.elements())

    def random_element(self, rng, bound=None, denominators=None):
        return Residue(rng.randrange(self.p), self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __str__(self):
        return f"GF({self.p})"


def common_field(*fields):
    first = fields[0]
    for f in fields[1:]:
        if f != first:
            raise FieldMismatch(f"{first} and {f} mixed")
    return first
