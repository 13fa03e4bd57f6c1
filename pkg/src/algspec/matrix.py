"""Dense exact matrices over a field or over a polynomial ring F[t].

Matrices are immutable; rows are tuples of ring elements.  Vectorization of
an ``m x n`` matrix is row-major (entry ``(i, j)`` sits at index ``i*n + j``),
which fixes the basis used by the multiplication operators.
"""

from dataclasses import dataclass

from .certify import certify
from .errors import FieldMismatch, NotSquare, PreconditionError, ShapeMismatch
from .poly import Poly, PolyRing


class Mat:
    __slots__ = ("ring", "rows", "nrows", "ncols")

    def __init__(self, ring, rows):
        rows = tuple(tuple(ring(x) for x in row) for row in rows)
        if not rows or not rows[0]:
            raise ShapeMismatch("matrices must have at least one row and column")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ShapeMismatch("ragged rows")
        self.ring = ring
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = len(rows[0])

    @classmethod
    def _raw(cls, ring, rows):
        m = cls.__new__(cls)
        m.ring = ring
        m.rows = tuple(tuple(r) for r in rows)
        m.nrows = len(m.rows)
        m.ncols = len(m.rows[0])
        return m

    @classmethod
    def identity(cls, ring, n):
        z, o = ring.zero, ring.one
        return cls._raw(ring, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, ring, m, n=None):
        n = m if n is None else n
        return cls._raw(ring, [[ring.zero] * n for _ in range(m)])

    @classmethod
    def diag(cls, ring, entries):
        n = len(entries)
        return cls(ring, [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, ring, cols):
        return cls(ring, list(zip(*cols)))

    # ------------------------------------------------------------------
    @property
    def shape(self):
        return self.nrows, self.ncols

    @property
    def is_square(self):
        return self.nrows == self.ncols

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def column(self, j):
        return [r[j] for r in self.rows]

    @property
    def T(self):
        return Mat._raw(self.ring, list(zip(*self.rows)))

    def entries(self):
        return [x for r in self.rows for x in r]

    def map(self, fn, ring):
        return Mat(ring, [[fn(x) for x in r] for r in self.rows])

    def is_zero(self):
        return all(not x for r in self.rows for x in r)

    def trace(self):
        _require_square(self)
        acc = self.ring.zero
        for i in range(self.nrows):
            acc = acc + self.rows[i][i]
        return acc

    def block(self, r0, r1, c0, c1):
        return Mat._raw(self.ring, [row[c0:c1] for row in self.rows[r0:r1]])

    # ------------------------------------------------------------------
    def _check(self, other):
        if other.ring != self.ring:
            raise FieldMismatch(f"matrices over {self.ring} and {other.ring} mixed")

    def __add__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        self._check(other)
        if other.shape != self.shape:
            raise ShapeMismatch(f"cannot add {self.shape} and {other.shape}")
        return Mat._raw(self.ring, [[x + y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        self._check(other)
        if other.shape != self.shape:
            raise ShapeMismatch(f"cannot subtract {other.shape} from {self.shape}")
        return Mat._raw(self.ring, [[x - y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return Mat._raw(self.ring, [[-x for x in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, Mat):
            self._check(other)
            if self.ncols != other.nrows:
                raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
            cols = list(zip(*other.rows))
            zero = self.ring.zero
            out = []
            for r in self.rows:
                row = []
                for c in cols:
                    acc = zero
                    for x, y in zip(r, c):
                        if x and y:
                            acc = acc + x * y
                    row.append(acc)
                out.append(row)
            return Mat._raw(self.ring, out)
        try:
            c = self.ring(other)
        except FieldMismatch:
            return NotImplemented
        return Mat._raw(self.ring, [[c * x for x in r] for r in self.rows])

    def __rmul__(self, other):
        try:
            c = self.ring(other)
        except FieldMismatch:
            return NotImplemented
        return Mat._raw(self.ring, [[c * x for x in r] for r in self.rows])

    def __pow__(self, e):
        _require_square(self)
        if e < 0:
            inv = mat_inverse(self)
            if inv is None:
                raise PreconditionError("negative power of a singular matrix")
            return inv ** (-e)
        result = Mat.identity(self.ring, self.nrows)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.ring == other.ring and self.rows == other.rows

    def __hash__(self):
        return hash((self.ring, self.rows))

    def __repr__(self):
        return f"Mat({self.ring}, {format_matrix(self)})"

    def __str__(self):
        return format_matrix(self)

    def commutes_with(self, other):
        return self * other == other * self

    def is_scalar(self):
        """True for multiples of the identity, i.e. the centre of M(n, F)."""
        if not self.is_square:
            return False
        d = self.rows[0][0]
        return all((x == d) if i == j else (not x) for i, r in enumerate(self.rows) for j, x in enumerate(r))

    def evaluate(self, x):
        """Entrywise evaluation of a polynomial matrix at a base-field point."""
        if not isinstance(self.ring, PolyRing):
            raise PreconditionError("evaluation needs a matrix over a polynomial ring")
        return Mat._raw(self.ring.field, [[p(x) for p in r] for r in self.rows])


def format_matrix(a):
    fmt = a.ring.format
    return "[" + ", ".join("[" + ", ".join(fmt(x) for x in r) + "]" for r in a.rows) + "]"


def _require_square(a):
    if not a.is_square:
        raise NotSquare(f"expected a square matrix, got {a.nrows}x{a.ncols}")


def _require_field(a):
    if not a.ring.is_field:
        raise PreconditionError(f"operation needs a matrix over a field, not {a.ring}")


# ----------------------------------------------------------------------
# elimination over a field

def rref(a):
    """Reduced row echelon form and pivot columns (first nonzero pivot)."""
    _require_field(a)
    rows = [list(r) for r in a.rows]
    m, n = a.nrows, a.ncols
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = a.ring.one / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return Mat._raw(a.ring, rows), pivots


def rank(a):
    return len(rref(a)[1])


def kernel_basis(a):
    """Basis of the right null space, as a list of column vectors (lists)."""
    _require_field(a)
    red, pivots = rref(a)
    free = [j for j in range(a.ncols) if j not in pivots]
    basis = []
    for f in free:
        v = [a.ring.zero] * a.ncols
        v[f] = a.ring.one
        for i, pc in enumerate(pivots):
            v[pc] = -red.rows[i][f]
        basis.append(v)
    return basis


def solve(a, b):
    """A solution ``x`` of ``a x = b`` (``b`` a matrix), or ``None``."""
    _require_field(a)
    if b.nrows != a.nrows:
        raise ShapeMismatch("right-hand side has the wrong number of rows")
    aug = Mat._raw(a.ring, [ra + rb for ra, rb in zip(a.rows, b.rows)])
    red, pivots = rref(aug)
    if any(p >= a.ncols for p in pivots):
        return None
    x = [[a.ring.zero] * b.ncols for _ in range(a.ncols)]
    for i, pc in enumerate(pivots):
        x[pc] = list(red.rows[i][a.ncols:])
    return Mat._raw(a.ring, x)


def mat_inverse(a, name="a"):
    """Exact inverse over a field, or ``None`` when singular."""
    _require_square(a)
    _require_field(a)
    x = solve(a, Mat.identity(a.ring, a.nrows))
    if x is None:
        return None
    certify(f"inverse: {name} * {name}^-1 = e", a * x == Mat.identity(a.ring, a.nrows))
    return x


def _gauss_det(a):
    rows = [list(r) for r in a.rows]
    n = a.nrows
    det = a.ring.one
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c]), None)
        if p is None:
            return a.ring.zero
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            det = -det
        piv = rows[c][c]
        det = det * piv
        inv = a.ring.one / piv
        for i in range(c + 1, n):
            if rows[i][c]:
                f = rows[i][c] * inv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return det


def bareiss_det(a):
    """Fraction-free determinant; every division is exact in the entry ring."""
    _require_square(a)
    ring = a.ring
    div = ring.exact_div if not ring.is_field else (lambda x, y: x / y)
    m = [list(r) for r in a.rows]
    n = a.nrows
    sign = 1
    prev = ring.one
    for k in range(n - 1):
        if not m[k][k]:
            p = next((i for i in range(k + 1, n) if m[i][k]), None)
            if p is None:
                return ring.zero
            m[k], m[p] = m[p], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev)
        prev = m[k][k]
    d = m[n - 1][n - 1]
    return d if sign > 0 else -d


def mat_det(a):
    """Gaussian elimination over a field, Bareiss over a polynomial ring."""
    _require_square(a)
    if a.ring.is_field:
        return _gauss_det(a)
    return bareiss_det(a)


def char_poly(a, var="z"):
    """``det(zI - a)`` via Bareiss over F[z]."""
    _require_square(a)
    _require_field(a)
    ring = PolyRing(a.ring, var)
    z = ring.gen()
    n = a.nrows
    m = Mat._raw(ring, [[(z if i == j else ring.zero) - a.rows[i][j] for j in range(n)] for i in range(n)])
    return bareiss_det(m)


def adjugate(a):
    _require_square(a)
    n = a.nrows
    if n == 1:
        return Mat.identity(a.ring, 1)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = Mat._raw(a.ring, [r[:i] + r[i + 1:] for k, r in enumerate(a.rows) if k != j])
            d = mat_det(minor)
            row.append(d if (i + j) % 2 == 0 else -d)
        out.append(row)
    return Mat._raw(a.ring, out)


def matpoly_ring_inverse(a):
    """Inverse inside M(n, F[t]); exists iff the determinant is a nonzero constant."""
    _require_square(a)
    if not isinstance(a.ring, PolyRing):
        raise PreconditionError("expected a matrix over a polynomial ring")
    d = mat_det(a)
    if not d or d.degree > 0:
        return None
    inv = adjugate(a) * (a.ring.field.one / d.lead())
    certify("ring inverse: a * a^-1 = e", a * inv == Mat.identity(a.ring, a.nrows))
    return inv


# ----------------------------------------------------------------------
@dataclass(frozen=True)
class MinPolyResult:
    poly: Poly

    @property
    def degree(self):
        return self.poly.degree


def matrix_poly_eval(p, a):
    """``p(a)`` by Horner's rule, the constant term multiplying the identity."""
    _require_square(a)
    if p.field != a.ring:
        raise FieldMismatch(f"polynomial over {p.field} applied to a matrix over {a.ring}")
    n = a.nrows
    acc = Mat.zeros(a.ring, n)
    eye = Mat.identity(a.ring, n)
    for c in reversed(p.coeffs):
        acc = acc * a + eye * c
    return acc


def min_poly(a, var="z", name="a"):
    """Minimum polynomial by the first linear dependence among I, a, a^2, ..."""
    _require_square(a)
    _require_field(a)
    ring, n = a.ring, a.nrows
    powers = [Mat.identity(ring, n).entries()]
    power = Mat.identity(ring, n)
    for k in range(1, n * n + 2):
        power = power * a
        cols = powers + [power.entries()]
        ker = kernel_basis(Mat.from_columns(ring, cols))
        if ker:
            # earlier powers are independent, so the kernel is a line
            v = ker[0]
            lead = v[k]
            p = Poly(ring, [c / lead for c in v], var)
            certify(f"minimum polynomial annihilates {name}", matrix_poly_eval(p, a).is_zero())
            return MinPolyResult(p)
        powers.append(power.entries())
    raise AssertionError("Krylov sequence failed to become dependent")


# ----------------------------------------------------------------------
def left_mult_operator(a, ncols=None):
    """Matrix of ``x -> a x`` on ``m x ncols`` matrices (row-major basis)."""
    _require_square(a)
    m = a.nrows
    n = m if ncols is None else ncols
    z = a.ring.zero
    out = [[z] * (m * n) for _ in range(m * n)]
    for i in range(m):
        for j in range(n):
            for k in range(m):
                out[i * n + j][k * n + j] = a.rows[i][k]
    return Mat._raw(a.ring, out)


def right_mult_operator(b, nrows=None):
    """Matrix of ``x -> x b`` on ``nrows x n`` matrices (row-major basis)."""
    _require_square(b)
    n = b.nrows
    m = n if nrows is None else nrows
    z = b.ring.zero
    out = [[z] * (m * n) for _ in range(m * n)]
    for i in range(m):
        for j in range(n):
            for k in range(n):
                out[i * n + j][i * n + k] = b.rows[k][j]
    return Mat._raw(b.ring, out)


def vec(x):
    return Mat._raw(x.ring, [[e] for e in x.entries()])


def unvec(ring, flat, m, n):
    flat = list(flat)
    return Mat._raw(ring, [flat[i * n:(i + 1) * n] for i in range(m)])
