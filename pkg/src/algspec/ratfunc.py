"""Rational-function fields F(t) over Q or GF(p).

Elements are stored as a coprime pair (numerator, denominator) with a monic
denominator, which makes equality a structural comparison.
"""

from fractions import Fraction
from math import isqrt

from .errors import DivisionByZero, FieldMismatch, PreconditionError
from .fields import Field, PrimeField, Rationals, Residue
from .poly import Poly, format_poly, poly_gcd, squarefree_factorization


class RatFunc:
    __slots__ = ("field", "num", "den")

    def __init__(self, field, num, den=None):
        base = field.base
        num = _as_poly(base, num, field.var)
        den = _as_poly(base, 1 if den is None else den, field.var)
        if not den:
            raise DivisionByZero("rational function with zero denominator")
        if not num:
            den = Poly(base, (1,), field.var)
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
            lc = den.lead()
            if lc != 1:
                num, den = num / lc, den / lc
        self.field = field
        self.num = num
        self.den = den

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} and {other.field} elements mixed")
            return other
        if isinstance(other, (int, Fraction, Residue, Poly)):
            return self.field(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFunc(self.field, self.num + o.num, self.den)
        return RatFunc(self.field, self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(self.field, -self.num, self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.field, self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise DivisionByZero("inverse of the zero rational function")
        return RatFunc(self.field, self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        return RatFunc(self.field, self.num ** e, self.den ** e)

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except FieldMismatch:
            return False
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def __call__(self, x):
        """Evaluate at a point of the base field; ``None`` at a pole."""
        d = self.den(x)
        if not d:
            return None
        return self.num(x) / d

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        return self.field.format(self)


def _as_poly(base, x, var):
    if isinstance(x, Poly):
        if x.field != base:
            raise FieldMismatch(f"polynomial over {x.field} in a function field over {base}")
        return x if x.var == var else x.with_var(var)
    return Poly(base, (x,), var)


class RationalFunctions(Field):
    """The field ``base(var)``; ``base`` must be Q or a prime field."""

    def __init__(self, base, var="t"):
        if not isinstance(base, (Rationals, PrimeField)):
            raise PreconditionError("rational functions are built over Q or GF(p) only")
        self.base = base
        self.var = var
        self.characteristic = base.characteristic
        self.zero = RatFunc(self, 0)
        self.one = RatFunc(self, 1)

    def __call__(self, x):
        if isinstance(x, RatFunc):
            if x.field != self:
                raise FieldMismatch(f"element of {x.field} is not in {self}")
            return x
        if isinstance(x, Poly):
            return RatFunc(self, x)
        if isinstance(x, (int, Fraction, Residue)) and not isinstance(x, bool):
            return RatFunc(self, self.base(x))
        if isinstance(x, bool):
            return RatFunc(self, int(x))
        raise FieldMismatch(f"cannot interpret {x!r} as an element of {self}")

    def gen(self):
        return RatFunc(self, Poly.gen(self.base, self.var))

    def contains(self, x):
        return isinstance(x, RatFunc) and x.field == self

    def inv(self, x):
        return self(x).inverse()

    def format(self, x):
        num = format_poly(x.num, self.var)
        if x.den.degree == 0:
            return num
        den = format_poly(x.den, self.var)
        # parentheses only where the parser would otherwise regroup
        if " " in num or "/" in num:
            num = f"({num})"
        if " " in den:
            den = f"({den})"
        return f"{num}/{den}"

    def random_element(self, rng, bound=3, degree=2):
        def rand_poly(d):
            return Poly(self.base, [self.base.random_element(rng, bound) for _ in range(d + 1)], self.var)

        num = rand_poly(rng.randint(0, degree))
        den = rand_poly(rng.randint(0, degree))
        while not den:
            den = rand_poly(rng.randint(0, degree))
        return RatFunc(self, num, den)

    def __eq__(self, other):
        return isinstance(other, RationalFunctions) and other.base == self.base and other.var == self.var

    def __hash__(self):
        return hash(("ratfunc", self.base, self.var))

    def __str__(self):
        return f"{self.base}({self.var})"


def _rational_sqrt(q):
    """Square root of a nonnegative rational, or ``None`` if it is not a square."""
    if q < 0:
        return None
    n, d = isqrt(q.numerator), isqrt(q.denominator)
    if n * n == q.numerator and d * d == q.denominator:
        return Fraction(n, d)
    return None


def rf_sqrt(f):
    """A square root of ``f`` in Q(t), or ``None`` when none exists.

    A root exists exactly when every zero and pole of ``f`` has even order
    and the ratio of leading coefficients is a rational square; the second
    condition is needed because the coefficients are rational.

    >>> F = RationalFunctions(Rationals())
    >>> t = F.gen()
    >>> print(rf_sqrt((t**2 + 2*t + 1) / t**2))
    (t + 1)/t
    >>> rf_sqrt(t) is None
    True
    """
    field = f.field
    if not isinstance(field, RationalFunctions) or not isinstance(field.base, Rationals):
        raise PreconditionError("rf_sqrt is defined for rational functions over Q")
    if not f:
        return field.zero
    root = []
    for part in (f.num, f.den):
        lead, factors = squarefree_factorization(part)
        r = Poly(field.base, (1,), field.var)
        for factor, mult in factors:
            if mult % 2:
                return None
            r = r * factor ** (mult // 2)
        root.append((lead, r))
    (ln, rn), (ld, rd) = root
    c = _rational_sqrt(ln / ld)
    if c is None:
        return None
    return RatFunc(field, rn * c, rd)
