"""Command-line front end.

    algspec spectrum --field Q "matrix a: [[1,1],[-1,1]]"
    algspec --input problem.txt --format machine

Definitions come from positional ``key: value`` arguments and/or an input
file (``-`` for stdin); the command comes from the first positional argument
or a ``cmd:`` statement.  Exit status: 0 success, 1 failed self-check,
2 parse error, 3 violated precondition, 4 a mathematical non-existence
result (no inverse, no factorization, no solution).
"""

import argparse
import json
import sys
from dataclasses import dataclass, field as dc_field
from itertools import islice

from . import factorization as fac
from . import pencil as pen
from . import resolvent as res
from . import spectrum as spc
from . import sylvester as syl
from .certify import certify, recording
from .errors import AlgSpecError, NonExistence, ParseError
from .fields import PrimeField, Rationals
from .matrix import left_mult_operator, mat_det, matpoly_ring_inverse, min_poly, right_mult_operator
from .poly import BiPoly, PolyRing, difference_quotient
from .ratfunc import RationalFunctions, rf_sqrt
from .textio import format_value, parse_document, parse_field


class Absent(NonExistence):
    """The requested object does not exist (e.g. a singular matrix has no inverse)."""


# ----------------------------------------------------------------------
# request / report

@dataclass
class Request:
    command: str
    field: object
    payload: dict
    options: dict = dc_field(default_factory=dict)


@dataclass
class Report:
    command: str
    field: object
    entries: list = dc_field(default_factory=list)
    certified: list = dc_field(default_factory=list)
    error: AlgSpecError = None

    @property
    def exit_code(self):
        return 0 if self.error is None else self.error.exit_code

    def add(self, key, value):
        self.entries.append((key, value))

    def text(self):
        lines = [f"command: {self.command}", f"field: {self.field}"]
        for key, value in self.entries:
            lines.append(f"{key}: {_text(value)}")
        if self.error is not None:
            lines.append(f"error: {type(self.error).__name__}")
            lines.append(f"message: {self.error}")
            for key, value in _error_details(self.error):
                lines.append(f"{key}: {_text(value)}")
        for label in self.certified:
            lines.append(f"certified: {label}")
        lines.append(f"status: {'ok' if self.error is None else 'error'}")
        return "\n".join(lines) + "\n"

    def machine(self):
        doc = {
            "command": self.command,
            "field": str(self.field),
            "result": {k: _plain(v) for k, v in self.entries},
            "certified": list(self.certified),
            "status": "ok" if self.error is None else "error",
            "exit_code": self.exit_code,
        }
        if self.error is not None:
            doc["error"] = {"type": type(self.error).__name__, "message": str(self.error)}
            doc["error"].update({k: _plain(v) for k, v in _error_details(self.error)})
        return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _error_details(err):
    for key in ("reason", "forced", "residual", "roots", "gcd", "consistent"):
        value = getattr(err, key, None)
        if value is not None and value != ():
            yield key, value


def _text(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    return format_value(value)


def _plain(value):
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    if isinstance(value, (list, tuple)) and not isinstance(value, str):
        return [_plain(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return [_plain(v) for v in sorted(value, key=pen.ext_sort_key)]
    return format_value(value)


def _sorted(points):
    return tuple(sorted(points, key=pen.ext_sort_key))


# ----------------------------------------------------------------------
# commands

COMMANDS = {}


def command(name, required=(), optional=(), help=""):
    def register(fn):
        COMMANDS[name] = (fn, tuple(required), tuple(optional), help)
        return fn
    return register


def _completeness(report, field):
    if report.complete:
        return "all zeros lie in the field"
    if isinstance(field, PrimeField):
        return "every field element was tested; the residual has no zeros in the field"
    return "rational root test; the residual has no rational zeros"


def _spectrum_entries(rep, report, field, prefix=""):
    report.add(prefix + "min_poly", rep.defining_poly)
    report.add(prefix + "spectrum", rep.roots)
    report.add(prefix + "complete", rep.complete)
    report.add(prefix + "residual", rep.residual)
    report.add(prefix + "completeness", _completeness(rep, field))


@command("spectrum", [("a", "matrix")], help="spectrum of a matrix (over F or F[x])")
def cmd_spectrum(req, report):
    a = req.payload["a"]
    if isinstance(req.field, PolyRing):
        rs = res.polyring_spectrum(a)
        report.add("det_coefficients", list(rs.det_coeffs))
        report.add("cofinite", rs.cofinite)
        report.add("points", rs.points)
        report.add("complete", rs.complete)
        return
    _spectrum_entries(spc.spectrum_of(a), report, req.field)


@command("invert", [("a", "matrix")], help="inverse via the minimum polynomial")
def cmd_invert(req, report):
    a = req.payload["a"]
    if isinstance(req.field, PolyRing):
        inv = matpoly_ring_inverse(a)
        report.add("det", mat_det(a))
        if inv is None:
            raise Absent("det(a) is not a nonzero constant; a is not invertible over the polynomial ring")
        report.add("inverse", inv)
        return
    report.add("min_poly", min_poly(a).poly)
    report.add("sidedness", spc.one_sided_invertibility(a).value)
    inv = spc.inverse_via_minpoly(a)
    if inv is None:
        raise Absent("the minimum polynomial vanishes at 0; a is not invertible")
    report.add("inverse", inv)


@command("specmap", [("p", "poly"), ("a", "matrix")], help="spectral mapping p(spec a) vs spec p(a)")
def cmd_specmap(req, report):
    rep = spc.spectral_map(req.payload["p"], req.payload["a"])
    report.add("mapped", _sorted(rep.mapped))
    _spectrum_entries(rep.spec_a, report, req.field, "a_")
    _spectrum_entries(rep.spec_pa, report, req.field, "pa_")
    report.add("equality", rep.equality.value)


@command("jordan-dim", [("a", "matrix"), ("lam", "scalar"), ("k", "int")], help="dim of the ideal of x with (a - lam e)^k x = 0")
def cmd_jordan_dim(req, report):
    p = req.payload
    report.add("dimension", spc.jordan_ideal_dim(p["a"], p["lam"], p["k"]))


@command("resolvent-verify", [("S", "points")], [("a", "matrix")],
         help="check the resolvent identity on a sampled family (from a, or r_0, r_1, ... at S)")
def cmd_resolvent_verify(req, report):
    p = req.payload
    if "a" in p:
        fam = res.ResolventFamily.of_matrix(p["a"], p["S"])
    else:
        samples = {}
        for i, lam in enumerate(p["S"]):
            key = f"r_{i}"
            if key not in p:
                raise ParseError(f"missing matrix {key} for the sample at {lam}")
            samples[lam] = p[key]
        fam = res.ResolventFamily(samples)
    check = res.verify_family(fam)
    report.add("points", tuple(lam for lam, _ in fam.items()))
    report.add("valid", check.valid)
    if not check.valid:
        report.add("violating_pair", check.violating_pair)


@command("resolvent-extend", [("alpha", "scalar"), ("r", "matrix")], help="maximal extension from one value r at alpha")
def cmd_resolvent_extend(req, report):
    p = req.payload
    ext = res.extend_maximal(p["alpha"], p["r"])
    report.add("excluded_poly", ext.excluded_poly)
    report.add("spectrum", ext.excluded_roots.roots)
    report.add("complete", ext.excluded_roots.complete)
    count = req.options.get("samples") or 3
    pts = ext.domain_points(count, avoid=[ext.anchor])
    for lam in pts:
        report.add(f"r({lam})", ext(lam))
    a = res.associated_element(p["alpha"], p["r"], checks=count, extension=ext)
    if a is None:
        raise Absent("r is singular, so no element a has r as its resolvent")
    report.add("associated_element", a)


@command("jspectrum", [("a", "matrix"), ("S", "points")], [("r1", "matrix"), ("r2", "matrix"), ("lam", "scalar")],
         help="spectrum modulo the evaluation ideal of S (matrices over F[x])")
def cmd_jspectrum(req, report):
    p = req.payload
    q = res.evaluation_quotient_spectrum(p["a"], p["S"])
    for s in _sorted(q.per_point):
        report.add(f"spectrum_at({s})", q.per_point[s].roots)
    report.add("spectrum", _sorted(q.union))
    report.add("complete", q.complete)
    if "r1" in p and "r2" in p and "lam" in p:
        chk = res.j_spectrum_perturbation_check(p["r1"], p["r2"], p["lam"], p["S"])
        report.add("perturbation_in_ideal", chk.in_ideal)
        report.add("perturbation_spectra_equal", chk.spectra_equal)


@command("spec-union", [("S", "points"), ("p_1", "matrix")], help="orthogonal-sum spectral union over F[x] (parts p_1, p_2, ...)")
def cmd_spec_union(req, report):
    parts, i = [], 1
    while f"p_{i}" in req.payload:
        parts.append(req.payload[f"p_{i}"])
        i += 1
    rep = res.spec_union_orthogonal(parts, req.payload["S"])
    report.add("sum_spectrum", _sorted(rep.left))
    report.add("union_of_spectra", _sorted(rep.right))
    report.add("equal", rep.holds)
    report.add("complete", rep.complete)


def _pencil_weight(req):
    return req.options.get("weight")


@command("pencil-spectrum", [("P", "pencil")], help="spectrum of a pencil in F u {oo}")
def cmd_pencil_spectrum(req, report):
    P = req.payload["P"]
    sp = pen.pencil_spectrum(P, _pencil_weight(req))
    report.add("weight", sp.weight)
    report.add("det", P.det())
    report.add("finite_spectrum", sp.finite_part.roots)
    report.add("infinity", sp.contains_infinity)
    report.add("complete", sp.finite_part.complete)
    report.add("completeness", _completeness(sp.finite_part, req.field))


@command("pencil-transform", [("g", "moebius"), ("P", "pencil")], help="Moebius transform of a pencil")
def cmd_pencil_transform(req, report):
    g, P = req.payload["g"], req.payload["P"]
    w = _pencil_weight(req)
    Q = pen.moebius_transform_pencil(g, P, w)
    report.add("transformed", Q)
    report.add("det", Q.det())
    eq = pen.spectrum_equivariance_check(g, P, w)
    report.add("image_of_spectrum", _sorted(eq.image))
    report.add("spectrum_of_transform", _sorted(eq.transformed))
    report.add("equivariance", eq.holds)
    report.add("method", eq.method)


@command("pencil-regularize", [("P", "pencil")], help="Moebius transform making both end coefficients invertible")
def cmd_pencil_regularize(req, report):
    P = req.payload["P"]
    bound = req.options.get("search_bound")
    pts = None
    if bound is not None:
        F = P.field
        pts = list(islice(F.elements() if F.is_finite else F.sample_points(), bound))
    reg = pen.regularize(P, pts)
    report.add("moebius", reg.g)
    report.add("points", reg.points)
    report.add("candidates_tried", reg.tried)
    report.add("regularized", reg.pencil)


@command("pencil-linearize", [("P", "pencil")], [("S", "points")], help="companion linearization and the G/H identity")
def cmd_pencil_linearize(req, report):
    P = req.payload["P"]
    comp = fac.companion_linearize(P)
    report.add("companion", comp.X)
    F = P.field
    pts = req.payload.get("S") or (F(0), F(1), F(-1))
    chk = fac.linearization_identity_check(P, pts, comp)
    report.add("identity_points", chk.points)
    report.add("identity_holds", chk.holds)


@command("pencil-factor", [("P", "pencil")], help="factor a monic pencil into linear factors")
def cmd_pencil_factor(req, report):
    P = req.payload["P"]
    report.add("det", P.det())
    f = fac.factor_pencil(P)
    for i, c in enumerate(f.factors, start=1):
        report.add(f"C_{i}", c)


@command("euclid", [("P", "pencil"), ("d", "matrix")], help="right division of a monic pencil by x e - d")
def cmd_euclid(req, report):
    Q, rem = fac.euclid_divide(req.payload["P"], req.payload["d"])
    report.add("quotient", Q)
    report.add("remainder", rem)


@command("quad-search", [("u", "matrix"), ("v", "matrix"), ("w", "matrix")],
         help="all factorizations of x^2 + u x + x v + w over a tiny prime field")
def cmd_quad_search(req, report):
    p = req.payload
    limit = req.options.get("search_bound") or 81
    found = fac.quad_factor_search(p["u"], p["v"], p["w"], limit)
    report.add("count", len(found))
    for i, (a, b) in enumerate(found, start=1):
        report.add(f"factorization_{i}_a", a)
        report.add(f"factorization_{i}_b", b)
    if not found:
        raise Absent("no factorization (x - a)(x - b) exists")


@command("quad-check", [("u", "matrix"), ("v", "matrix"), ("w", "matrix"), ("a", "matrix")],
         [("b", "matrix"), ("a2", "matrix"), ("b2", "matrix")],
         help="test a left factor a, or compare factorizations (a, b) and (a2, b2)")
def cmd_quad_check(req, report):
    p = req.payload
    u, v, w = p["u"], p["v"], p["w"]
    if "b" in p and "a2" in p and "b2" in p:
        verdict, c = fac.quad_uniqueness_check((p["a"], p["b"]), (p["a2"], p["b2"]), u, v, w)
        report.add("verdict", verdict)
        if c is not None:
            report.add("central_difference", c)
        return
    if "b" in p:
        ok = fac.quad_identity_equiv(u, v, w, -p["a"], -p["b"], p["a"] * p["b"])
        report.add("factorization", ok)
        if not ok:
            raise Absent("(x - a)(x - b) differs from the quadratic")
        return
    report.add("p(a)", fac.quad_eval(u, v, w, p["a"]))
    att = fac.ring_left_factorization(u, v, w, p["a"])
    report.add("b", att.b)


@command("quad-root", [("a", "matrix"), ("b", "matrix"), ("c", "matrix")],
         help="factor x^2 e - x a + b from a root c (x a scalar variable)")
def cmd_quad_root(req, report):
    p = req.payload
    c, d = fac.quad_root_to_factorization(p["a"], p["b"], p["c"])
    report.add("c", c)
    report.add("d", d)


@command("sylvester", [("a", "matrix"), ("b", "matrix"), ("c", "matrix")], [("S", "points")],
         help="solve a x - x b = c (over F[x] also check ideal membership on S)")
def cmd_sylvester(req, report):
    p = req.payload
    if isinstance(req.field, PolyRing):
        if "S" not in p:
            raise ParseError("sylvester over a polynomial ring needs 'points S'")
        rep = syl.sylvester_ideal_membership(p["a"], p["b"], p["c"], p["S"])
        report.add("x", rep.solution)
        report.add("x_vanishes_on_S", rep.x_vanishes)
        report.add("c_vanishes_on_S", rep.c_vanishes)
        report.add("polynomial_solution", rep.polynomial_solution)
        report.add("membership_equivalent", rep.holds)
        return
    cert = syl.spectral_disjointness(p["a"], p["b"])
    report.add("min_poly_a", cert.p)
    report.add("min_poly_b", cert.q)
    report.add("f", cert.f)
    report.add("x", syl.solve_sylvester(p["a"], p["b"], p["c"], cert))


@command("commuter", [("a", "matrix"), ("b", "matrix")], help="inverse of a - b for commuting spectrally disjoint a, b")
def cmd_commuter(req, report):
    report.add("inverse", syl.commuting_difference_inverse(req.payload["a"], req.payload["b"]))


@command("commutant-dim", [("a", "matrix")], help="dimension of the commutant and of the range of x -> ax - xa")
def cmd_commutant_dim(req, report):
    d, c = syl.commutant_dimension(req.payload["a"])
    report.add("commutant_dim", c)
    report.add("solvable_dim", d)


@command("trace-check", [("a", "matrix"), ("c", "matrix")], help="trace constraints tr(a^m c) for a x - x a = c")
def cmd_trace_check(req, report):
    rep = syl.trace_obstruction(req.payload["a"], req.payload["c"])
    for m, t in rep.traces:
        report.add(f"tr(a^{m} c)", t)
    report.add("obstructed", rep.obstructed)
    if rep.obstructed:
        report.add("first_obstruction", rep.first_obstruction)
    report.add("note", "all-zero traces are necessary, not sufficient")


@command("minpoly-transfer", [("a", "matrix")], help="min poly of a vs min poly of left multiplication by a")
def cmd_minpoly_transfer(req, report):
    rep = syl.minpoly_transfer_check(req.payload["a"])
    report.add("min_poly", rep.element)
    report.add("operator_min_poly", rep.operator)
    report.add("equal", rep.equal)


@command("quat-solve", [("a", "quat"), ("b", "quat"), ("c", "quat")], help="solve a x - x b = c in the quaternions over Q")
def cmd_quat_solve(req, report):
    p = req.payload
    for name in ("a", "b"):
        if p[name]:
            report.add(f"min_poly_{name}", syl.quaternion_minpoly(p[name]))
    report.add("criterion", syl.quaternion_criterion(p["a"], p["b"]))
    report.add("x", syl.quaternion_sylvester(p["a"], p["b"], p["c"]))


@command("rf-sqrt", [("f", "scalar")], help="square root in Q(t)")
def cmd_rf_sqrt(req, report):
    r = rf_sqrt(req.payload["f"])
    if r is None:
        raise Absent("f is not a square in Q(t)")
    report.add("sqrt", r)


@command("det", [("a", "matrix")], help="determinant")
def cmd_det(req, report):
    report.add("det", mat_det(req.payload["a"]))


@command("minpoly", [("a", "matrix")], help="minimum polynomial")
def cmd_minpoly(req, report):
    report.add("min_poly", min_poly(req.payload["a"]).poly)


@command("ab-ba", [("a", "matrix"), ("b", "matrix"), ("lam", "scalar")], help="inverse of lam e - ba from that of lam e - ab")
def cmd_ab_ba(req, report):
    p = req.payload
    zero = req.field.zero
    report.add("spec_ab_with_0", _sorted(spc.spectrum_of(p["a"] * p["b"], name="ab").root_set | {zero}))
    report.add("spec_ba_with_0", _sorted(spc.spectrum_of(p["b"] * p["a"], name="ba").root_set | {zero}))
    c = spc.ab_ba_witness(p["a"], p["b"], p["lam"])
    if c is None:
        raise Absent("lam e - ab is singular")
    report.add("inverse", c)


@command("diffquot", [("f", "poly")], help="g with f(x) - f(y) = (x - y) g(x, y)")
def cmd_diffquot(req, report):
    f = req.payload["f"]
    g = difference_quotient(f)
    x, y = BiPoly.from_univariate(f, "x"), BiPoly.from_univariate(f, "y")
    diff = BiPoly(f.field, {(1, 0): 1, (0, 1): -1})
    ok = (x - y) == diff * g
    certify("f(x) - f(y) = (x - y) g(x, y)", ok)
    report.add("g", g)


@command("mult-ops", [("a", "matrix"), ("b", "matrix")], help="matrices of x -> a x and x -> x b; they commute")
def cmd_mult_ops(req, report):
    p = req.payload
    la = left_mult_operator(p["a"], p["b"].nrows)
    rb = right_mult_operator(p["b"], p["a"].nrows)
    report.add("L_a", la)
    report.add("R_b", rb)
    ok = la * rb == rb * la
    certify("L_a R_b = R_b L_a", ok)
    report.add("commute", ok)


@command("quad-equiv", [("u", "matrix"), ("v", "matrix"), ("w", "matrix"), ("u2", "matrix"), ("v2", "matrix"), ("w2", "matrix")],
         help="whether x^2 + u x + x v + w and x^2 + u2 x + x v2 + w2 agree for every matrix x")
def cmd_quad_equiv(req, report):
    p = req.payload
    report.add("equivalent", fac.quad_identity_equiv(p["u"], p["v"], p["w"], p["u2"], p["v2"], p["w2"]))
    report.add("central_difference", p["u"] - p["u2"])


@command("quat-minpoly", [("q", "quat")], help="minimum polynomial of a quaternion over Q")
def cmd_quat_minpoly(req, report):
    report.add("min_poly", syl.quaternion_minpoly(req.payload["q"]))


# ----------------------------------------------------------------------
# parsing and dispatch

_FIELD_RULES = {
    "rf-sqrt": lambda F: isinstance(F, RationalFunctions) and isinstance(F.base, Rationals),
    "jspectrum": lambda F: isinstance(F, PolyRing),
    "spec-union": lambda F: isinstance(F, PolyRing),
    "quat-solve": lambda F: isinstance(F, Rationals),
    "quat-minpoly": lambda F: isinstance(F, Rationals),
}


def parse_input(text, command=None, field=None, options=None):
    """Parse a document into a validated :class:`Request`."""
    doc = parse_document(text, field)
    name = command or doc.command
    if doc.command and command and doc.command != command:
        raise ParseError(f"command {command!r} conflicts with 'cmd: {doc.command}' in the input")
    if name is None:
        raise ParseError("no command given")
    if name not in COMMANDS:
        raise ParseError(f"unknown command {name!r}")
    _, required, optional, _ = COMMANDS[name]
    for key, kind in required:
        if key not in doc.values:
            raise ParseError(f"{name} needs '{kind} {key}'")
        if doc.kinds[key] != kind:
            raise ParseError(f"{key!r} must be a {kind}, got a {doc.kinds[key]}")
    for key, kind in optional:
        if key in doc.values and doc.kinds[key] != kind:
            raise ParseError(f"{key!r} must be a {kind}, got a {doc.kinds[key]}")
    rule = _FIELD_RULES.get(name)
    if rule and not rule(doc.field):
        raise ParseError(f"{name} is not available over {doc.field}")
    opts = dict(options or {})
    if doc.weight is not None:
        opts["weight"] = doc.weight
    return Request(name, doc.field, doc.values, opts)


def run(req):
    """Execute a request, returning a :class:`Report` (errors included)."""
    report = Report(req.command, req.field)
    fn = COMMANDS[req.command][0]
    with recording() as log:
        try:
            fn(req, report)
        except AlgSpecError as exc:
            report.error = exc
        report.certified = list(log)
    return report


def build_parser():
    names = ", ".join(COMMANDS)
    parser = argparse.ArgumentParser(
        prog="algspec",
        description="Exact spectral computations for matrices over Q, GF(p), Q(t) and F[x].",
        epilog=f"commands: {names}",
    )
    parser.add_argument("command", nargs="?", help="command name (or give 'cmd:' in the input)")
    parser.add_argument("defs", nargs="*", help="definitions such as 'matrix a: [[1,2],[3,4]]'")
    parser.add_argument("--field", help="Q, GF(p), Q(t) or Q[x] (default Q)")
    parser.add_argument("--input", metavar="FILE", help="input document ('-' for stdin)")
    parser.add_argument("--format", choices=("text", "machine"), default="text")
    parser.add_argument("--search-bound", type=int, metavar="N", help="candidate limit for searches")
    parser.add_argument("--samples", type=int, metavar="N", help="number of sample points to check")
    return parser


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_intermixed_args(argv)
    defs = list(args.defs)
    name = args.command
    if name is not None and name not in COMMANDS:
        if ":" in name:
            defs.insert(0, name)
            name = None
        else:
            print(f"error: ParseError: unknown command {name!r}", file=stderr)
            return 2
    parts = []
    try:
        if args.input:
            if args.input == "-":
                parts.append(sys.stdin.read())
            else:
                with open(args.input, encoding="utf-8") as fh:
                    parts.append(fh.read())
        parts.extend(defs)
        options = {"search_bound": args.search_bound, "samples": args.samples}
        req = parse_input("\n".join(parts), name, parse_field(args.field) if args.field else None,
                          {k: v for k, v in options.items() if v is not None})
    except OSError as exc:
        print(f"error: cannot read input: {exc}", file=stderr)
        return 2
    except AlgSpecError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return exc.exit_code
    report = run(req)
    stdout.write(report.machine() if args.format == "machine" else report.text())
    if report.error is not None:
        print(f"error: {type(report.error).__name__}: {report.error}", file=stderr)
    return report.exit_code


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
