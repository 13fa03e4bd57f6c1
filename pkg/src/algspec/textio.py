"""Text grammar for fields, scalars, polynomials, matrices and input documents.

Scalars are arithmetic expressions: ``-3/4``, ``2^10``, ``(t^2+1)/(2*t)``,
``3 mod 5``.  A polynomial is an expression in one variable.  A matrix is a
nested list ``[[1, -1/2], [0, 1]]`` or rows separated by ``;`` with entries
separated by ``,``.

An input document is a sequence of ``key: value`` statements separated by
newlines, or by ``;`` when the next statement starts with a known key::

    field: GF(5)
    matrix a: [[1, 2], [3, 4]]
    cmd: spectrum

``#`` starts a comment.
"""

import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .errors import AlgSpecError, FieldMismatch, ParseError
from .fields import QQ, Field, PrimeField
from .matrix import Mat
from .pencil import MatPoly, Moebius
from .poly import Poly, PolyRing, format_poly
from .ratfunc import RationalFunctions
from .sylvester import Quaternion

_TOKEN = re.compile(r"\s+|(?P<num>\d+(?:\.\d+)?)|(?P<id>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>\*\*|[-+*/^(),\[\];])")


@dataclass
class Token:
    kind: str  # "num", "id", "op" or "end"
    text: str
    pos: int


def tokenize(text, line=1, offset=0):
    text = text.replace("−", "-")
    out, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, offset + pos + 1)
        if m.lastgroup:
            tok = m.group(m.lastgroup)
            out.append(Token(m.lastgroup, "^" if tok == "**" else tok, pos))
        pos = m.end()
    out.append(Token("end", "", len(text)))
    return out


class _Parser:
    """Recursive descent over a token list; values come from ``domain``."""

    def __init__(self, text, domain, line=1, offset=0):
        self.tokens = tokenize(text, line, offset)
        self.i = 0
        self.domain = domain
        self.line = line
        self.offset = offset

    def error(self, message, tok=None):
        tok = tok or self.peek()
        return ParseError(message, self.line, self.offset + tok.pos + 1)

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def accept(self, text):
        if self.peek().kind == "op" and self.peek().text == text:
            return self.take()
        return None

    def expect(self, text):
        tok = self.accept(text)
        if tok is None:
            found = self.peek().text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}")
        return tok

    def at_end(self):
        return self.peek().kind == "end"

    def finish(self):
        if not self.at_end():
            raise self.error(f"unexpected {self.peek().text!r}")

    # expressions -----------------------------------------------------
    def expr(self):
        value = self.term()
        while True:
            tok = self.accept("+") or self.accept("-")
            if tok is None:
                break
            rhs = self.term()
            value = self.apply(tok, value, rhs)
        return self.mod_suffix(value)

    def mod_suffix(self, value):
        tok = self.peek()
        if tok.kind == "id" and tok.text == "mod":
            self.take()
            p = self.take()
            if p.kind != "num" or "." in p.text:
                raise self.error("expected a modulus after 'mod'", p)
            self.domain.check_modulus(int(p.text), self)
        return value

    def term(self):
        value = self.unary()
        while True:
            tok = self.accept("*") or self.accept("/")
            if tok is None:
                nxt = self.peek()
                # implicit product such as 2z or 3(t + 1)
                if nxt.kind == "id" and nxt.text != "mod" or nxt.kind == "op" and nxt.text == "(":
                    tok = Token("op", "*", nxt.pos)
                else:
                    break
            rhs = self.unary()
            value = self.apply(tok, value, rhs)
        return value

    def unary(self):
        tok = self.accept("-")
        if tok is not None:
            return -self.unary()
        if self.accept("+"):
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        tok = self.accept("^")
        if tok is None:
            return base
        sign = -1 if self.accept("-") else 1
        e = self.take()
        if e.kind != "num" or "." in e.text:
            raise self.error("exponents must be integers", e)
        return self.apply(tok, base, sign * int(e.text))

    def atom(self):
        tok = self.take()
        if tok.kind == "num":
            return self.domain.number(Fraction(tok.text))
        if tok.kind == "id":
            return self.domain.name(tok.text, tok, self)
        if tok.kind == "op" and tok.text == "(":
            value = self.expr()
            self.expect(")")
            return value
        raise self.error(f"unexpected {tok.text or 'end of input'!r}", tok)

    def apply(self, tok, a, b):
        try:
            if tok.text == "+":
                return a + b
            if tok.text == "-":
                return a - b
            if tok.text == "*":
                return a * b
            if tok.text == "^":
                return a ** b
            return self.domain.divide(a, b)
        except TypeError as exc:
            raise self.error(f"cannot apply {tok.text!r}: {exc}", tok) from None

    # nested lists ------------------------------------------------------
    def item(self):
        if self.accept("["):
            items = []
            if not self.accept("]"):
                items.append(self.item())
                while self.accept(","):
                    items.append(self.item())
                self.expect("]")
            return items
        return self.expr()

    def rows(self):
        """``a, b; c, d`` (no brackets)."""
        rows = [[self.expr()]]
        while True:
            if self.accept(","):
                rows[-1].append(self.expr())
            elif self.accept(";"):
                rows.append([self.expr()])
            else:
                return rows

    def csv(self):
        if self.accept("["):
            values = self.csv()
            self.expect("]")
            return values
        values = [self.expr()]
        while self.accept(","):
            values.append(self.expr())
        return values


class _Domain:
    """Where numbers and names evaluate to.

    ``ring`` is a field, ``Q(t)``-style rational functions, or a polynomial
    ring; ``var`` names the indeterminate allowed in expressions.
    """

    def __init__(self, ring, var=None):
        self.ring = ring
        self.var = var
        self.base = base_field(ring)

    def number(self, q):
        if isinstance(self.ring, PolyRing):
            return self.ring.field(q)
        return self.ring(q)

    def name(self, text, tok, parser):
        if text == self.var:
            if isinstance(self.ring, (PolyRing, RationalFunctions)):
                return self.ring.gen()
            return Poly.gen(self.ring, text)
        raise parser.error(f"unknown name {text!r}", tok)

    def divide(self, a, b):
        if isinstance(b, Poly) and b.degree <= 0:
            b = b[0]
        if isinstance(b, Poly) and not isinstance(a, Poly):
            a = Poly.constant(b.field, a, b.var)
        return a / b

    def check_modulus(self, p, parser):
        if not isinstance(self.base, PrimeField) or self.base.p != p:
            raise FieldMismatch(f"a residue mod {p} is not an element of {self.ring}")


def base_field(ring):
    if isinstance(ring, PolyRing):
        return ring.field
    if isinstance(ring, RationalFunctions):
        return ring.base
    return ring


# ----------------------------------------------------------------------
# fields

_GF = re.compile(r"^(?:GF\s*\(\s*(\d+)\s*\)|F_?p\s+(\d+)|F_?(\d+)|GF\s*(\d+))")


def parse_field(text, line=1, column=1):
    """``Q``, ``GF(5)`` (or ``Fp 5``), ``Q(t)``, ``GF(5)(t)``, ``Q[x]``.

    >>> print(parse_field("Fp 7"), parse_field("Q(t)"), parse_field("GF(3)[x]"))
    GF(7) Q(t) GF(3)[x]
    """
    s = text.strip()
    m = _GF.match(s)
    if m:
        p = int(next(g for g in m.groups() if g))
        try:
            base = PrimeField(p)
        except AlgSpecError as exc:
            raise ParseError(str(exc), line, column) from None
        rest = s[m.end():].strip()
    elif s[:2] in ("QQ",) or s[:1] == "Q":
        base = QQ
        rest = s[2:] if s.startswith("QQ") else s[1:]
        rest = rest.strip()
    else:
        raise ParseError(f"unknown field {text.strip()!r}", line, column)
    if not rest:
        return base
    m = re.fullmatch(r"\(\s*([A-Za-z])\s*\)", rest)
    if m:
        return RationalFunctions(base, m.group(1))
    m = re.fullmatch(r"\[\s*([A-Za-z])\s*\]", rest)
    if m:
        return PolyRing(base, m.group(1))
    raise ParseError(f"unknown field {text.strip()!r}", line, column)


def default_var(ring):
    if isinstance(ring, (PolyRing, RationalFunctions)):
        return ring.var
    return None


# ----------------------------------------------------------------------
# values

def parse_scalar(text, ring, line=1, offset=0):
    """An element of ``ring``.

    >>> from algspec.fields import PrimeField
    >>> parse_scalar("7", PrimeField(5))
    Residue(2, 5)
    >>> parse_scalar("3 mod 5", PrimeField(5))
    Residue(3, 5)
    """
    p = _Parser(text, _Domain(ring, default_var(ring)), line, offset)
    value = p.expr()
    p.finish()
    return _coerce(ring, value)


def _coerce(ring, value):
    if isinstance(ring, Field) and isinstance(value, Poly):
        if value.degree > 0:
            raise FieldMismatch(f"{value} is not an element of {ring}")
        value = value[0]
    return ring(value)


def parse_poly(text, field, var="z", line=1, offset=0):
    """A polynomial over ``field`` in ``var``.

    >>> print(parse_poly("z^3 - 2*z + 1/2", QQ))
    z^3 - 2*z + 1/2
    """
    p = _Parser(text, _Domain(field, var), line, offset)
    value = p.expr()
    p.finish()
    if isinstance(value, Poly):
        return value
    return Poly.constant(field, value, var)


def parse_matrix(text, ring, line=1, offset=0):
    """A matrix with entries in ``ring``.

    >>> print(parse_matrix("1, 2; 3, 4", QQ))
    [[1, 2], [3, 4]]
    """
    p = _Parser(text, _Domain(ring, default_var(ring)), line, offset)
    if p.peek().text == "[":
        start = p.peek()
        rows = p.item()
        if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
            raise p.error("a matrix is a nonempty list of rows", start)
        if any(isinstance(x, list) for r in rows for x in r):
            raise p.error("matrix entries must be scalars", start)
    else:
        rows = p.rows()
    p.finish()
    if len({len(r) for r in rows}) != 1 or not rows[0]:
        raise ParseError("matrix rows must be nonempty and of equal length", line, offset + 1)
    return Mat(ring, [[_coerce(ring, x) for x in r] for r in rows])


def _depth(x):
    return 1 + _depth(x[0]) if isinstance(x, list) and x else int(isinstance(x, list))


def parse_pencil(text, field, var="x", line=1, offset=0):
    """A matrix polynomial.

    Either a list of coefficient matrices ``[A0, A1, ...]`` (lowest degree
    first) or a single matrix whose entries are polynomials in ``var``.
    """
    p = _Parser(text, _Domain(field, var), line, offset)
    start = p.peek()
    if start.text == "[":
        value = p.item()
    else:
        value = p.rows()
    p.finish()
    if _depth(value) == 3:
        mats = []
        for m in value:
            if len({len(r) for r in m}) != 1:
                raise p.error("coefficient rows must have equal length", start)
            mats.append(Mat(field, [[_coerce(field, x) for x in r] for r in m]))
        sizes = {m.shape for m in mats}
        if len(sizes) != 1 or not mats[0].is_square:
            raise p.error("coefficients must be square matrices of one size", start)
        return MatPoly(mats, field, mats[0].nrows)
    if _depth(value) != 2 or len({len(r) for r in value}) != 1 or len(value) != len(value[0]):
        raise p.error("a pencil is a square polynomial matrix or a list of coefficient matrices", start)
    n = len(value)
    entries = [[x if isinstance(x, Poly) else Poly.constant(field, x, var) for x in r] for r in value]
    degree = max(max(e.degree for r in entries for e in r), 0)
    mats = [Mat(field, [[e[k] for e in r] for r in entries]) for k in range(degree + 1)]
    return MatPoly(mats, field, n)


def parse_points(text, field, line=1, offset=0):
    p = _Parser(text, _Domain(field), line, offset)
    values = p.csv() if not p.at_end() else []
    p.finish()
    return tuple(_coerce(field, v) for v in values)


def parse_moebius(text, field, line=1, offset=0):
    """Four scalars ``a, b, c, d`` or ``[[a, b], [c, d]]`` with ``ad - bc = 1``."""
    p = _Parser(text, _Domain(field), line, offset)
    if p.peek().text == "[":
        value = p.item()
        flat = [x for r in value for x in r] if _depth(value) == 2 else value
    else:
        flat = p.csv()
    p.finish()
    if len(flat) != 4 or any(isinstance(x, list) for x in flat):
        raise ParseError("a Moebius element needs exactly four scalars", line, offset + 1)
    return Moebius(field, *(_coerce(field, x) for x in flat))


def parse_quaternion(text, line=1, offset=0):
    """``a0, a1, a2, a3`` over Q; missing trailing components are zero."""
    values = parse_points(text, QQ, line, offset)
    if not 1 <= len(values) <= 4:
        raise ParseError("a quaternion has at most four components", line, offset + 1)
    return Quaternion(*values)


def parse_int(text, line=1, offset=0):
    s = text.strip().replace("−", "-")
    if not re.fullmatch(r"[-+]?\d+", s):
        raise ParseError(f"expected an integer, found {s!r}", line, offset + 1)
    return int(s)


# ----------------------------------------------------------------------
# formatting (inverse of the parsers above)

def format_scalar(x):
    return str(x)


def format_matrix(a):
    return str(a)


def format_pencil(P):
    return "[" + ", ".join(str(c) for c in P.coeffs) + "]"


def format_quaternion(q):
    return ", ".join(str(c) for c in q.components)


def format_value(x):
    if isinstance(x, Moebius):
        return ", ".join(str(c) for c in x.entries())
    if isinstance(x, MatPoly):
        return format_pencil(x)
    if isinstance(x, Quaternion):
        return format_quaternion(x)
    if isinstance(x, Poly):
        return format_poly(x)
    if isinstance(x, (list, tuple, set, frozenset)):
        return "{" + ", ".join(format_value(v) for v in x) + "}"
    return str(x)


# ----------------------------------------------------------------------
# documents

VALUE_KEYS = ("matrix", "poly", "scalar", "points", "pencil", "moebius", "quat", "int")
PLAIN_KEYS = ("field", "cmd", "var", "weight")
_KEY = re.compile(r"\s*(?:(?:%s)\b[^:;\n]*|(?:%s))\s*:" % ("|".join(VALUE_KEYS), "|".join(PLAIN_KEYS)))


@dataclass
class Statement:
    key: str
    name: str
    value: str
    line: int
    column: int  # 1-based column where the value starts


def split_statements(text):
    """Break a document into statements, keeping line and column positions."""
    out = []
    for lineno, raw in enumerate(text.replace("−", "-").split("\n"), start=1):
        line = raw.split("#", 1)[0]
        depth, start = 0, 0
        pieces = []
        for i, ch in enumerate(line):
            if ch in "([":
                depth += 1
            elif ch in ")]":
                depth -= 1
                if depth < 0:
                    raise ParseError("unbalanced closing bracket", lineno, i + 1)
            elif ch == ";" and depth == 0 and _KEY.match(line, i + 1):
                pieces.append((start, line[start:i]))
                start = i + 1
        if depth != 0:
            raise ParseError("unbalanced brackets", lineno, len(line) + 1)
        pieces.append((start, line[start:]))
        for start, piece in pieces:
            if piece.strip():
                out.append(_statement(piece, lineno, start))
    return out


def _statement(piece, line, start):
    head, sep, value = piece.partition(":")
    if not sep:
        raise ParseError("expected 'key: value'", line, start + 1)
    words = head.split()
    if not words:
        raise ParseError("missing key", line, start + 1)
    key = words[0]
    if key in PLAIN_KEYS:
        if len(words) != 1:
            raise ParseError(f"{key!r} takes no name", line, start + 1)
        name = key
    elif key in VALUE_KEYS:
        if key == "points" and len(words) == 1:
            words.append("S")
        if len(words) != 2 or not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", words[1]):
            raise ParseError(f"{key!r} needs exactly one name", line, start + 1)
        name = words[1]
    else:
        raise ParseError(f"unknown key {key!r}", line, start + 1 + piece.index(key))
    column = start + len(head) + 2
    return Statement(key, name, value, line, column)


@dataclass
class Document:
    field: object
    command: str = None
    var: str = None
    weight: int = None
    values: dict = dc_field(default_factory=dict)
    kinds: dict = dc_field(default_factory=dict)


def parse_document(text, field=None):
    """Parse a document; ``field`` (a descriptor string or field) is a default."""
    stmts = split_statements(text)
    doc_field = None
    for s in stmts:
        if s.key == "field":
            if doc_field is not None:
                raise ParseError("field given twice", s.line, s.column)
            doc_field = parse_field(s.value, s.line, s.column)
    if isinstance(field, str):
        field = parse_field(field)
    if doc_field is not None and field is not None and doc_field != field:
        raise FieldMismatch(f"document field {doc_field} disagrees with requested field {field}")
    ring = doc_field or field or QQ
    doc = Document(ring)
    for s in stmts:
        if s.key == "var":
            if not re.fullmatch(r"\s*[A-Za-z]\s*", s.value):
                raise ParseError("a variable is a single letter", s.line, s.column)
            doc.var = s.value.strip()
    base = base_field(ring)
    for s in stmts:
        args = (s.line, s.column - 1)
        if s.key in ("field", "var"):
            continue
        if s.key == "cmd":
            doc.command = s.value.strip()
            continue
        if s.key == "weight":
            doc.weight = parse_int(s.value, *args)
            continue
        if s.name in doc.values:
            raise ParseError(f"{s.name!r} defined twice", s.line, s.column)
        if s.key == "matrix":
            value = parse_matrix(s.value, ring, *args)
        elif s.key == "poly":
            value = parse_poly(s.value, base, doc.var or "z", *args)
        elif s.key == "scalar":
            value = parse_scalar(s.value, ring if isinstance(ring, RationalFunctions) else base, *args)
        elif s.key == "points":
            value = parse_points(s.value, base, *args)
        elif s.key == "pencil":
            value = parse_pencil(s.value, base, doc.var or "x", *args)
        elif s.key == "moebius":
            value = parse_moebius(s.value, base, *args)
        elif s.key == "quat":
            value = parse_quaternion(s.value, *args)
        else:
            value = parse_int(s.value, *args)
        doc.values[s.name] = value
        doc.kinds[s.name] = s.key
    return doc
