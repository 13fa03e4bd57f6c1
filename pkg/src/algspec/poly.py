"""Dense univariate polynomials over a field, and sparse bivariate ones.

Coefficients are stored low-to-high with no trailing zeros, so the zero
polynomial has an empty coefficient tuple and ``degree == -1``.
"""

from fractions import Fraction

from .errors import DivisionByZero, FieldMismatch, PreconditionError, Unsupported, ZeroPolynomial
from .fields import Residue


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


class Poly:
    """A polynomial ``c[0] + c[1] z + ... + c[d] z^d`` over ``field``.

    >>> from algspec.fields import QQ
    >>> z = Poly.gen(QQ)
    >>> p = z**2 - 1
    >>> q, r = divmod(p, z - 1)
    >>> print(q, r)
    z + 1 0
    """

    __slots__ = ("field", "coeffs", "var")

    def __init__(self, field, coeffs=(), var="z"):
        self.field = field
        self.coeffs = _trim(field(c) for c in coeffs)
        self.var = var

    @classmethod
    def gen(cls, field, var="z"):
        return cls(field, (0, 1), var)

    @classmethod
    def constant(cls, field, c, var="z"):
        return cls(field, (c,), var)

    @classmethod
    def from_roots(cls, field, roots, var="z"):
        p = cls(field, (1,), var)
        for r in roots:
            p = p * cls(field, (-field(r), 1), var)
        return p

    def _new(self, coeffs):
        p = Poly.__new__(Poly)
        p.field = self.field
        p.coeffs = _trim(coeffs)
        p.var = self.var
        return p

    # ------------------------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1

    def lead(self):
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.field.zero

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_constant(self):
        return len(self.coeffs) <= 1

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def monic(self):
        if not self.coeffs:
            return self
        inv = self.field.one / self.coeffs[-1]
        return self._new(c * inv for c in self.coeffs)

    # ------------------------------------------------------------------
    def _lift(self, other):
        if isinstance(other, Poly):
            if other.field != self.field:
                raise FieldMismatch(f"polynomials over {self.field} and {other.field} mixed")
            return other
        try:
            c = self.field(other)
        except FieldMismatch:
            return None
        return self._new((c,))

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return self._new([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __neg__(self):
        return self._new(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self._new(())
        out = [self.field.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return self._new(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise PreconditionError("negative power of a polynomial")
        result = self._new((self.field.one,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return poly_divmod(self, other)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __truediv__(self, other):
        """Division by a scalar, or exact division by a polynomial."""
        if isinstance(other, Poly):
            q, r = poly_divmod(self, other)
            if r:
                raise PreconditionError(f"{other} does not divide {self}")
            return q
        c = self.field(other)
        if not c:
            raise DivisionByZero("polynomial divided by zero")
        inv = self.field.one / c
        return self._new(x * inv for x in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, Residue)):
            other = self._lift(other)
            return other is not None and self.coeffs == other.coeffs
        lifted = self._lift(other) if hasattr(other, "num") else None
        if lifted is not None:
            return self.coeffs == lifted.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    # ------------------------------------------------------------------
    def __call__(self, x):
        """Horner evaluation at a scalar."""
        x = self.field(x)
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return self._new(k * c for k, c in enumerate(self.coeffs) if k)

    def compose(self, inner):
        """``self(inner(z))`` for a polynomial ``inner``."""
        acc = inner._new(())
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def with_var(self, var):
        p = self._new(self.coeffs)
        p.var = var
        return p

    def __repr__(self):
        return f"Poly({self.field}, {self})"

    def __str__(self):
        return format_poly(self)


def format_poly(p, var=None):
    """Canonical text form, e.g. ``z^3 - 2*z + 1/2``."""
    var = var or p.var
    if not p.coeffs:
        return "0"
    parts = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        s = p.field.format(c)
        neg = s.startswith("-") and _is_atomic(s[1:])
        if neg:
            s = s[1:]
        elif not _is_atomic(s):
            s = f"({s})"
        if k == 0:
            term = s
        else:
            mono = var if k == 1 else f"{var}^{k}"
            term = mono if s == "1" else f"{s}*{mono}"
        if not parts:
            parts.append(("-" if neg else "") + term)
        else:
            parts.append((" - " if neg else " + ") + term)
    return "".join(parts)


def _is_atomic(s):
    return not any(ch in s for ch in "+-() *^") or (s.count("/") == 1 and s.replace("/", "").isdigit())


# ----------------------------------------------------------------------
def poly_divmod(a, b):
    """Euclidean division ``a = q*b + r`` with ``deg r < deg b``."""
    if a.field != b.field:
        raise FieldMismatch(f"polynomials over {a.field} and {b.field} mixed")
    if not b.coeffs:
        raise DivisionByZero("polynomial division by zero")
    field = a.field
    rem = list(a.coeffs)
    db = len(b.coeffs) - 1
    inv = field.one / b.coeffs[-1]
    quot = [field.zero] * max(len(rem) - db, 0)
    for k in range(len(rem) - 1 - db, -1, -1):
        c = rem[k + db] * inv
        quot[k] = c
        if c:
            for j, bc in enumerate(b.coeffs):
                rem[k + j] = rem[k + j] - c * bc
    return a._new(quot), a._new(rem[:db])


def poly_eval(p, x):
    return p(x)


def poly_gcd(a, b):
    while b:
        a, b = b, a % b
    return a.monic()


def poly_xgcd(p, q):
    """Return ``(g, h, k)`` with ``g`` the monic gcd and ``p*h + q*k == g``.

    >>> from algspec.fields import QQ
    >>> z = Poly.gen(QQ)
    >>> g, h, k = poly_xgcd(z - 1, z - 2)
    >>> print(g, h, k)
    1 1 -1
    """
    if not p and not q:
        raise ZeroPolynomial("gcd(0, 0) is undefined")
    one, zero = p._new((p.field.one,)), p._new(())
    r0, r1 = p, q
    s0, s1 = one, zero
    t0, t1 = zero, one
    while r1:
        quo, rem = poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
        t0, t1 = t1, t0 - quo * t1
    inv = p.field.one / r0.lead()
    return r0 * inv, s0 * inv, t0 * inv


def invert_mod(g, f):
    """Inverse of ``g`` in ``F[z]/(f)``, or ``None`` when ``gcd(g, f) != 1``."""
    if f.degree < 1:
        raise PreconditionError("modulus must have positive degree")
    g = g % f
    if not g:
        return None
    d, h, _ = poly_xgcd(g, f)
    if d.degree != 0:
        return None
    return h % f


def squarefree_part(p):
    """``p / gcd(p, p')`` made monic."""
    if not p:
        raise ZeroPolynomial("squarefree part of 0")
    if p.degree < 1:
        return p._new((p.field.one,))
    dp = p.derivative()
    if not dp:
        raise Unsupported("NotSquarefreeReducible: derivative vanishes identically")
    return (p // poly_gcd(p, dp)).monic()


def squarefree_factorization(p):
    """Yun's algorithm over a field of characteristic zero.

    Returns ``(lead, [(f1, 1), (f2, 2), ...])`` with monic squarefree,
    pairwise coprime ``fi`` such that ``p = lead * prod fi**i``.
    """
    if not p:
        raise ZeroPolynomial("factorization of 0")
    if p.field.characteristic:
        raise Unsupported("squarefree factorization implemented for characteristic 0 only")
    lead = p.lead()
    a = p.monic()
    factors = []
    if a.degree < 1:
        return lead, factors
    b = a.derivative()
    c = poly_gcd(a, b)
    w = a // c
    y = b // c
    z = y - w.derivative()
    i = 1
    while w.degree > 0:
        g = poly_gcd(w, z)
        if g.degree > 0:
            factors.append((g, i))
        w = w // g
        y = z // g
        z = y - w.derivative()
        i += 1
    return lead, factors


class PolyRing:
    """The ring ``F[var]``, used as the entry ring of polynomial matrices."""

    is_field = False

    def __init__(self, field, var="x"):
        self.field = field
        self.var = var
        self.characteristic = field.characteristic
        self.zero = Poly(field, (), var)
        self.one = Poly(field, (1,), var)

    def __call__(self, x):
        if isinstance(x, Poly):
            if x.field != self.field:
                raise FieldMismatch(f"polynomial over {x.field} is not in {self}")
            return x if x.var == self.var else x.with_var(self.var)
        return Poly(self.field, (self.field(x),), self.var)

    def gen(self):
        return Poly.gen(self.field, self.var)

    def is_zero(self, x):
        return not x

    def exact_div(self, a, b):
        q, r = poly_divmod(a, b)
        if r:
            raise PreconditionError("inexact division in polynomial ring")
        return q

    def format(self, x):
        return format_poly(x, self.var)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and other.field == self.field and other.var == self.var

    def __hash__(self):
        return hash(("polyring", self.field, self.var))

    def __str__(self):
        return f"{self.field}[{self.var}]"

    __repr__ = __str__


# ----------------------------------------------------------------------
class BiPoly:
    """Sparse polynomial in two commuting variables, ``{(i, j): c}`` for ``c x^i y^j``."""

    __slots__ = ("field", "terms")

    def __init__(self, field, terms=None):
        self.field = field
        self.terms = {}
        for key, c in (terms or {}).items():
            c = field(c)
            if c:
                self.terms[key] = c

    @classmethod
    def from_univariate(cls, f, which):
        if which == "x":
            return cls(f.field, {(k, 0): c for k, c in enumerate(f.coeffs)})
        return cls(f.field, {(0, k): c for k, c in enumerate(f.coeffs)})

    def __add__(self, other):
        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms.get(key, self.field.zero) + c
        return BiPoly(self.field, terms)

    def __neg__(self):
        return BiPoly(self.field, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        terms = {}
        for (i, j), c in self.terms.items():
            for (k, l), d in other.terms.items():
                key = (i + k, j + l)
                terms[key] = terms.get(key, self.field.zero) + c * d
        return BiPoly(self.field, terms)

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.field == other.field and self.terms == other.terms

    def __hash__(self):
        return hash((self.field, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def __call__(self, x, y):
        acc = self.field.zero
        for (i, j), c in self.terms.items():
            acc = acc + c * x ** i * y ** j
        return acc

    def items(self):
        return sorted(self.terms.items())

    def __repr__(self):
        return f"BiPoly({self})"

    def __str__(self):
        """Terms by descending total degree, then descending power of ``x``.

        >>> from algspec.fields import QQ
        >>> print(difference_quotient(Poly(QQ, (0, 0, 0, 1))))
        x^2 + x*y + y^2
        """
        if not self.terms:
            return "0"
        out = []
        for (i, j), c in sorted(self.terms.items(), key=lambda t: (-sum(t[0]), -t[0][0])):
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in (("x", i), ("y", j)) if k)
            neg = _negative(c)
            a = -c if neg else c
            if not mono:
                body = str(a)
            else:
                body = mono if a == 1 else f"{a}*{mono}"
            sign = "-" if neg else "+"
            out.append((sign, body))
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text


def _negative(c):
    return isinstance(c, Fraction) and c < 0


def difference_quotient(f):
    """The ``g`` with ``f(x) - f(y) = (x - y) g(x, y)``.

    Built termwise from ``x^n - y^n = (x - y)(x^(n-1) + x^(n-2) y + ... + y^(n-1))``.
    """
    terms = {}
    for n, c in enumerate(f.coeffs):
        if not c or n == 0:
            continue
        for i in range(n):
            key = (i, n - 1 - i)
            terms[key] = terms.get(key, f.field.zero) + c
    return BiPoly(f.field, terms)
