"""Certificate files, their parser, and the exact verifiers.

A certificate asserts an upper bound on the density of a target graph:
the expansion of

    target_coefficient * target  +  sum of linear terms
                                 +  sum of multiplier * [[ F M F^T ]]

over the label-free basis of ``expansion-order`` must have every
coefficient, times ``scale``, at most ``bound`` (strictly, if declared).
Square terms are nonnegative when M is PSD and the multiplier is
nonnegative; linear terms vanish (numeric kind) or are nonnegative
(parametric kind) under the certificate's edge-density assumption, so a
verified expansion bounds the target density by bound/scale.

File format: ``key: value`` header lines, then term blocks bracketed by
``begin linear``/``begin square`` ... ``end``.  ``#`` starts a comment.
Coefficient literals are rationals (``-0.74``, ``15/2``), polynomials in
k as ascending coefficient lists (``[30,-45,15]``), or quotients of two
such lists (``[-30,15]/[-1,1]``).  Numeric certificates allow only
rationals; parametric certificates allow all three.

Header keys: format, name, kind (numeric|parametric), expansion-order,
target (paircode), target-coefficient, scale, bound, strict (yes|no),
k0 (parametric), alt-bound (optional), note (optional).

Linear blocks: ``vector`` and ``factor`` hold ``coeff * paircode``
entries separated by ``;``; the factor may use ``const`` for the
constant 1 (expanded as the full basis of the factor's order).

Square blocks: ``labels`` (type size), ``type`` (paircode of the labeled
type, ``-`` when labels is 0), ``multiplier``, ``flags`` (paircodes,
``;``-separated), then either ``vector`` (rank-one square) or repeated
``row`` lines (full matrix).  Optional ``congruence-row`` lines give a
rectangular B so the expanded matrix is B M B^T.  Parametric matrix
blocks may declare ``psd-condition`` (a polynomial P) together with
``psd-condition-factor`` (a positive quotient q with det M = q * P), so
PSD-ness on the ray reduces to P >= 0 there.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .exactmath import (
    KPolynomial,
    RationalFunction,
    SymMatrix,
    frac,
    isolate_largest_real_root,
    nonneg_on_ray,
    positive_on_ray,
    psd_check,
    rf_nonneg_on_ray,
)
from .flags import Flag, FlagVector, bilinear_expansion, expand_quadratic_form, lift
from .graphs import SmallGraph, enumerate_graphs, emit_paircode, parse_paircode


# ---------------------------------------------------------------------------
# value literals


def _parse_poly_literal(tok: str) -> KPolynomial:
    tok = tok.strip()
    if not (tok.startswith("[") and tok.endswith("]")):
        raise ValueError(f"bad polynomial literal {tok!r}")
    inner = tok[1:-1].strip()
    if not inner:
        raise ValueError(f"empty polynomial literal {tok!r}")
    return KPolynomial([Fraction(p.strip()) for p in inner.split(",")])


def parse_value(tok: str, parametric: bool):
    """One coefficient literal -> Fraction or RationalFunction."""
    tok = tok.strip()
    if tok.startswith("["):
        if not parametric:
            raise ValueError(f"polynomial value {tok!r} in a numeric certificate")
        if "]/[" in tok:
            ns, ds = tok.split("]/[", 1)
            return RationalFunction(
                _parse_poly_literal(ns + "]"), _parse_poly_literal("[" + ds)
            )
        return RationalFunction(_parse_poly_literal(tok))
    value = Fraction(tok)
    return RationalFunction(KPolynomial([value])) if parametric else value


# ---------------------------------------------------------------------------
# certificate structure


@dataclass(frozen=True)
class LinearTerm:
    """(sum of coeff * graph) times (sum of coeff * graph-or-constant)."""

    vector: tuple
    factor: tuple
    vector_order: int
    factor_order: int


@dataclass(frozen=True)
class SquareTerm:
    """multiplier * [[ F (B M B^T) F^T ]]; vector terms mean M = v v^T."""

    labels: int
    multiplier: object
    flags: tuple
    vector: tuple | None
    matrix: tuple | None
    congruence: tuple | None
    psd_condition: KPolynomial | None
    psd_condition_factor: RationalFunction | None

    def inner_order(self) -> int:
        if self.vector is not None:
            return len(self.vector)
        return len(self.matrix)

    def full_matrix(self) -> list[list]:
        """The matrix the expansion actually uses, congruence applied."""
        if self.vector is not None:
            inner = [[vi * vj for vj in self.vector] for vi in self.vector]
        else:
            inner = [list(r) for r in self.matrix]
        if self.congruence is None:
            return inner
        b = self.congruence
        n, m = len(b), len(b[0])
        out = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                acc = 0
                for p in range(m):
                    for q in range(m):
                        acc = acc + b[i][p] * inner[p][q] * b[j][q]
                out[i][j] = acc
        return out


@dataclass(frozen=True)
class Certificate:
    name: str
    kind: str
    expansion_order: int
    target: SmallGraph
    target_coefficient: object
    scale: object
    bound: object
    strict: bool
    k0: Fraction | None
    alt_bound: object | None
    note: str | None
    linear_terms: tuple
    square_terms: tuple

    @property
    def parametric(self) -> bool:
        return self.kind == "parametric"


def _clean_lines(text: str):
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def _split_entries(value: str):
    return [e.strip() for e in value.split(";") if e.strip()]


def _parse_combo(value: str, parametric: bool, allow_const: bool):
    """';'-separated 'coeff * paircode' entries; 'const' means 1."""
    out = []
    for entry in _split_entries(value):
        if "*" not in entry:
            raise ValueError(f"expected 'coeff * code' in {entry!r}")
        cs, code = entry.split("*", 1)
        coeff = parse_value(cs, parametric)
        code = code.strip()
        if code == "const":
            if not allow_const:
                raise ValueError("'const' is only allowed in factors")
            out.append((coeff, None))
        else:
            out.append((coeff, parse_paircode(code)))
    return out


_HEADER_KEYS = frozenset((
    "format", "name", "kind", "expansion-order", "target",
    "target-coefficient", "scale", "bound", "strict", "k0",
    "alt-bound", "note",
))
_BLOCK_KEYS = {
    "linear": frozenset(("vector", "factor")),
    "square": frozenset((
        "labels", "type", "multiplier", "flags", "vector",
        "row", "congruence-row", "psd-condition", "psd-condition-factor",
    )),
}


def parse_certificate(text: str) -> Certificate:
    header: dict[str, str] = {}
    blocks: list[tuple[str, dict]] = []
    current: dict | None = None
    current_kind = ""
    for line in _clean_lines(text):
        if line.startswith("begin "):
            if current is not None:
                raise ValueError("nested begin")
            current_kind = line[len("begin ") :].strip()
            if current_kind not in ("linear", "square"):
                raise ValueError(f"unknown block kind {current_kind!r}")
            current = {}
            continue
        if line == "end":
            if current is None:
                raise ValueError("end without begin")
            blocks.append((current_kind, current))
            current = None
            continue
        if ":" not in line:
            raise ValueError(f"expected 'key: value', got {line!r}")
        key, value = line.split(":", 1)
        key, value = key.strip(), value.strip()
        allowed = _HEADER_KEYS if current is None else _BLOCK_KEYS[current_kind]
        if key not in allowed:
            where = "header" if current is None else f"{current_kind} block"
            raise ValueError(f"unknown key {key!r} in {where}")
        store = header if current is None else current
        if key in ("row", "congruence-row"):
            store.setdefault(key, []).append(value)
        elif key in store:
            raise ValueError(f"duplicate key {key!r}")
        else:
            store[key] = value
    if current is not None:
        raise ValueError("unterminated block")

    kind = header.get("kind", "")
    if kind not in ("numeric", "parametric"):
        raise ValueError(f"kind must be numeric or parametric, got {kind!r}")
    parametric = kind == "parametric"

    def header_value(key, default=None):
        if key not in header:
            if default is None:
                raise ValueError(f"missing header key {key!r}")
            return default
        return header[key]

    order = int(header_value("expansion-order"))
    if not 2 <= order <= 6:
        raise ValueError(f"expansion-order {order} outside 2..6")
    target = parse_paircode(header_value("target"))
    strict = {"yes": True, "no": False}[header_value("strict", "no")]

    def poly_value(key):
        v = parse_value(header[key], parametric)
        if parametric:
            if not v.is_polynomial:
                raise ValueError(f"{key} must be a polynomial")
            return v.as_polynomial()
        return v

    target_coefficient = poly_value("target-coefficient")
    scale = poly_value("scale")
    bound = poly_value("bound")
    alt_bound = poly_value("alt-bound") if "alt-bound" in header else None
    k0 = Fraction(header["k0"]) if "k0" in header else None
    if parametric and k0 is None:
        raise ValueError("parametric certificates must declare k0")

    linear_terms = []
    square_terms = []
    for bkind, body in blocks:
        if bkind == "linear":
            vector = _parse_combo(body["vector"], parametric, allow_const=False)
            factor = _parse_combo(body["factor"], parametric, allow_const=True)
            vorders = {g.n for _, g in vector}
            forders = {g.n for _, g in factor if g is not None}
            if len(vorders) != 1 or len(forders) != 1:
                raise ValueError("linear entries must share one order per side")
            vo, fo = vorders.pop(), forders.pop()
            if vo + fo > order:
                raise ValueError("linear product exceeds the expansion order")
            linear_terms.append(LinearTerm(tuple(vector), tuple(factor), vo, fo))
            continue

        labels = int(body["labels"])
        flags = tuple(
            Flag(parse_paircode(c), labels) for c in _split_entries(body["flags"])
        )
        if labels:
            tgraph = parse_paircode(body["type"])
            if tgraph.n != labels:
                raise ValueError("type order does not match labels")
            for f in flags:
                sub = f.graph.induced(tuple(range(labels)))
                if sub.mask != tgraph.mask:
                    raise ValueError(
                        f"flag {emit_paircode(f.graph)!r} does not carry the "
                        "declared type"
                    )
        forder = {f.order for f in flags}
        if len(forder) != 1:
            raise ValueError("square flags must share one order")
        if 2 * forder.pop() - labels > order:
            raise ValueError("square term exceeds the expansion order")

        multiplier = parse_value(body["multiplier"], parametric)
        if not parametric and multiplier < 0:
            raise ValueError(f"negative square multiplier {multiplier}")
        vector = matrix = congruence = None
        if "vector" in body:
            vector = tuple(
                parse_value(v, parametric) for v in _split_entries(body["vector"])
            )
            if len(vector) != len(flags):
                raise ValueError("vector length does not match flag count")
        else:
            matrix = tuple(
                tuple(parse_value(v, parametric) for v in _split_entries(r))
                for r in body["row"]
            )
            m = len(matrix)
            if any(len(r) != m for r in matrix):
                raise ValueError("matrix is not square")
            for i in range(m):
                for j in range(i):
                    if matrix[i][j] != matrix[j][i]:
                        raise ValueError("matrix is not symmetric")
        if "congruence-row" in body:
            congruence = tuple(
                tuple(parse_value(v, parametric) for v in _split_entries(r))
                for r in body["congruence-row"]
            )
            width = {len(r) for r in congruence}
            if len(width) != 1:
                raise ValueError("ragged congruence")
            inner = len(vector) if vector is not None else len(matrix)
            if width.pop() != inner or len(congruence) != len(flags):
                raise ValueError("congruence shape does not match")
        elif (len(vector) if vector is not None else len(matrix)) != len(flags):
            raise ValueError("matrix order does not match flag count")

        psd_condition = psd_factor = None
        if "psd-condition" in body:
            if not parametric:
                raise ValueError("psd-condition only applies to parametric kind")
            psd_condition = _parse_poly_literal(body["psd-condition"])
            pf = parse_value(body["psd-condition-factor"], True)
            psd_factor = pf
        square_terms.append(
            SquareTerm(
                labels,
                multiplier,
                flags,
                vector,
                matrix,
                congruence,
                psd_condition,
                psd_factor,
            )
        )

    return Certificate(
        name=header_value("name"),
        kind=kind,
        expansion_order=order,
        target=target,
        target_coefficient=target_coefficient,
        scale=scale,
        bound=bound,
        strict=strict,
        k0=k0,
        alt_bound=alt_bound,
        note=header.get("note"),
        linear_terms=tuple(linear_terms),
        square_terms=tuple(square_terms),
    )


def _bundled(name: str):
    return resources.files("flagcert").joinpath("certs").joinpath(name)


def load_certificate(source) -> Certificate:
    """Parse a certificate from a path, a bundled name, or document text."""
    return parse_certificate(_read_text(source))


def _read_text(source) -> str:
    text = str(source)
    if "\n" in text:
        return text
    if os.path.exists(text):
        with open(text, encoding="utf-8") as f:
            return f.read()
    res = _bundled(os.path.basename(text))
    if res.is_file():
        return res.read_text(encoding="utf-8")
    raise FileNotFoundError(f"{text}: not a file and not a bundled name")


# ---------------------------------------------------------------------------
# expansion


def _vector_from(entries, order: int, parametric: bool) -> FlagVector:
    out = FlagVector(0, order)
    basis = enumerate_graphs(order)
    one = RationalFunction(KPolynomial([1])) if parametric else Fraction(1)
    for coeff, g in entries:
        if g is None:
            for h in basis:
                out.add(Flag(h, 0), coeff * one)
        else:
            out.add(Flag(g, 0), coeff)
    return out


def certificate_expansion(cert: Certificate) -> FlagVector:
    """target_coefficient * target + all terms, over F_{expansion_order}."""
    order = cert.expansion_order
    parametric = cert.parametric
    tvec = FlagVector(0, cert.target.n)
    tvec.add(Flag(cert.target, 0), cert.target_coefficient)
    total = lift(tvec, order)
    for lt in cert.linear_terms:
        v = _vector_from(lt.vector, lt.vector_order, parametric)
        f = _vector_from(lt.factor, lt.factor_order, parametric)
        prod = bilinear_expansion(v, f)
        total = total + lift(prod, order)
    for st in cert.square_terms:
        expanded = expand_quadratic_form(st.full_matrix(), list(st.flags))
        total = total + lift(expanded, order).scaled(st.multiplier)
    return total


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class VerificationReport:
    name: str
    kind: str
    verdict: str
    k0: Fraction | None
    coefficients: dict
    max_coefficient: object | None
    argmax: str | None
    zero_set: tuple
    largest_roots: dict | None
    psd_condition_root: Fraction | None
    failures: tuple
    notes: tuple

    @property
    def passed(self) -> bool:
        return self.verdict == "PASS"

    def lines(self) -> list[str]:
        out = [f"certificate: {self.name}", f"kind: {self.kind}"]
        if self.k0 is not None:
            out.append(f"k0: {self.k0}")
        if self.max_coefficient is not None:
            upper = math.ceil(self.max_coefficient * 1000) / 1000
            out.append(
                f"max scaled coefficient: {self.max_coefficient} "
                f"(~{float(self.max_coefficient):.6f}, at most {upper:.3f})"
                f" at {self.argmax}"
            )
        if self.psd_condition_root is not None:
            out.append(
                f"psd condition largest root: ~{float(self.psd_condition_root):.9f}"
            )
        out.append(f"zero set ({len(self.zero_set)}): " + (
            "; ".join(self.zero_set) if self.zero_set else "(empty)"
        ))
        for n in self.notes:
            out.append(f"note: {n}")
        for f in self.failures:
            out.append(f"FAIL: {f}")
        out.append(f"verdict: {self.verdict}")
        return out


def _code_of(g: SmallGraph) -> str:
    return emit_paircode(g.canonical_form())


def verify_density_certificate(cert: Certificate) -> VerificationReport:
    """Check a numeric certificate; see the module docstring for the rules."""
    if cert.parametric:
        raise ValueError("numeric verifier given a parametric certificate")
    failures: list[str] = []
    notes: list[str] = []
    if cert.note:
        notes.append(cert.note)

    for i, st in enumerate(cert.square_terms):
        if st.multiplier < 0:
            failures.append(f"square term {i}: negative multiplier {st.multiplier}")
        m = SymMatrix.from_rows(st.full_matrix())
        res = psd_check(m)
        if not res.psd:
            failures.append(f"square term {i}: matrix is not PSD")
        elif not res.verify(m):
            failures.append(f"square term {i}: PSD witness failed to verify")

    expansion = certificate_expansion(cert)
    coefficients: dict[str, Fraction] = {}
    max_c = None
    argmax = None
    zero = []
    for g in enumerate_graphs(cert.expansion_order):
        c = expansion.coefficient(Flag(g, 0)) * cert.scale
        code = _code_of(g)
        coefficients[code] = c
        if max_c is None or c > max_c:
            max_c, argmax = c, code
        ok = c < cert.bound if cert.strict else c <= cert.bound
        if not ok:
            rel = "<" if cert.strict else "<="
            failures.append(f"coefficient {c} at {code} violates {rel} {cert.bound}")
        if c == cert.bound:
            zero.append(code)

    if cert.alt_bound is not None:
        met = max_c < cert.alt_bound if cert.strict else max_c <= cert.alt_bound
        if met:
            notes.append(f"alternative bound {cert.alt_bound} also holds")
        else:
            notes.append(
                f"alternative bound {cert.alt_bound} NOT met: max scaled "
                f"coefficient is {max_c} (~{float(max_c):.6f}); only the "
                f"declared bound {cert.bound} verifies"
            )

    return VerificationReport(
        name=cert.name,
        kind=cert.kind,
        verdict="PASS" if not failures else "FAIL",
        k0=None,
        coefficients=coefficients,
        max_coefficient=max_c,
        argmax=argmax,
        zero_set=tuple(zero),
        largest_roots=None,
        psd_condition_root=None,
        failures=tuple(failures),
        notes=tuple(notes),
    )


def _rf_nonneg(value, k0: Fraction, what: str, failures: list[str]) -> None:
    try:
        ok = rf_nonneg_on_ray(value, k0)
    except ValueError as e:
        failures.append(f"{what}: {e}")
        return
    if not ok:
        failures.append(f"{what}: {value} is negative somewhere on [{k0}, oo)")


def verify_parametric_certificate(cert: Certificate, k0=None) -> VerificationReport:
    """Check a parametric certificate on the ray [k0, oo)."""
    if not cert.parametric:
        raise ValueError("parametric verifier given a numeric certificate")
    k0 = frac(k0) if k0 is not None else cert.k0
    failures: list[str] = []
    notes: list[str] = []
    if cert.note:
        notes.append(cert.note)

    for i, lt in enumerate(cert.linear_terms):
        for coeff, g in lt.vector:
            _rf_nonneg(
                coeff, k0, f"linear term {i}, multiplier of {emit_paircode(g)}",
                failures,
            )

    psd_root = None
    for i, st in enumerate(cert.square_terms):
        _rf_nonneg(st.multiplier, k0, f"square term {i} multiplier", failures)
        if st.vector is not None:
            continue  # v v^T is PSD whenever the multiplier is nonnegative
        n = len(st.matrix)
        for d in range(n):
            _rf_nonneg(st.matrix[d][d], k0, f"square term {i} diagonal [{d}]",
                       failures)
        if st.psd_condition is not None:
            det = st.matrix[0][0] * st.matrix[1][1] - st.matrix[0][1] * st.matrix[0][1]
            if n != 2:
                failures.append(
                    f"square term {i}: psd-condition requires a 2x2 matrix"
                )
                continue
            claimed = st.psd_condition_factor * RationalFunction(st.psd_condition)
            if det != claimed:
                failures.append(
                    f"square term {i}: det does not factor through the "
                    "declared psd-condition"
                )
            fnum, fden = st.psd_condition_factor.num, st.psd_condition_factor.den
            if not (positive_on_ray(fnum, k0) and positive_on_ray(fden, k0)):
                failures.append(
                    f"square term {i}: psd-condition-factor is not positive "
                    f"on [{k0}, oo)"
                )
            try:
                psd_root = isolate_largest_real_root(
                    st.psd_condition, Fraction(1, 10**9)
                ).midpoint
            except ValueError:
                psd_root = None
            if not nonneg_on_ray(st.psd_condition, k0):
                failures.append(
                    f"square term {i}: psd condition polynomial "
                    f"{st.psd_condition.pretty()} is negative on [{k0}, oo)"
                    + (f" (largest root ~{float(psd_root):.7f})" if psd_root else "")
                )
        elif n == 2:
            det = st.matrix[0][0] * st.matrix[1][1] - st.matrix[0][1] * st.matrix[0][1]
            _rf_nonneg(det, k0, f"square term {i} determinant", failures)
        else:
            failures.append(
                f"square term {i}: matrices larger than 2x2 need a "
                "declared psd-condition"
            )

    expansion = certificate_expansion(cert)
    scale_rf = RationalFunction(cert.scale)
    bound_rf = RationalFunction(cert.bound)
    coefficients: dict[str, KPolynomial] = {}
    roots: dict[str, Fraction] = {}
    zero = []
    for g in enumerate_graphs(cert.expansion_order):
        c = expansion.coefficient(Flag(g, 0))
        if c == 0:
            c = RationalFunction(KPolynomial([0]))
        deficit = scale_rf * (bound_rf - c)
        code = _code_of(g)
        if not deficit.is_polynomial:
            failures.append(f"deficit at {code} is not a polynomial: {deficit}")
            continue
        poly = deficit.as_polynomial()
        coefficients[code] = poly
        if poly.is_zero:
            zero.append(code)
            continue
        if not nonneg_on_ray(poly, k0):
            failures.append(
                f"deficit {poly.pretty()} at {code} is negative on [{k0}, oo)"
            )
        try:
            roots[code] = isolate_largest_real_root(
                poly, Fraction(1, 10**9)
            ).midpoint
        except ValueError:
            pass

    return VerificationReport(
        name=cert.name,
        kind=cert.kind,
        verdict="PASS" if not failures else "FAIL",
        k0=k0,
        coefficients=coefficients,
        max_coefficient=None,
        argmax=None,
        zero_set=tuple(zero),
        largest_roots=roots,
        psd_condition_root=psd_root,
        failures=tuple(failures),
        notes=tuple(notes),
    )


def verify_certificate(cert: Certificate, k0=None) -> VerificationReport:
    if cert.parametric:
        return verify_parametric_certificate(cert, k0)
    return verify_density_certificate(cert)


# ---------------------------------------------------------------------------
# golden tables


@dataclass(frozen=True)
class Golden:
    label: str
    coefficient_rows: tuple = ()
    polynomial_rows: tuple = ()
    zero_codes: tuple = ()
    profile_rows: tuple = ()


def load_golden(source) -> Golden:
    text = _read_text(source)
    label = None
    coeff_rows: list[tuple[Fraction, str]] = []
    poly_rows: list[tuple[KPolynomial, str, Fraction]] = []
    zeros: list[str] = []
    profile: list[tuple[str, str]] = []
    for line in _clean_lines(text):
        if label is None:
            if not line.startswith("golden:"):
                raise ValueError("golden files start with a 'golden:' label")
            label = line.split(":", 1)[1].strip()
            continue
        parts = [p.strip() for p in line.split("|")]
        if label == "profile":
            profile.append((parts[0], parts[1]))
        elif parts[0] == "zero":
            zeros.append(_code_of(parse_paircode(parts[1])))
        elif parts[0].startswith("["):
            poly_rows.append(
                (
                    _parse_poly_literal(parts[0]),
                    _code_of(parse_paircode(parts[1])),
                    Fraction(parts[2]),
                )
            )
        else:
            coeff_rows.append((Fraction(parts[0]), _code_of(parse_paircode(parts[1]))))
    if label is None:
        raise ValueError("golden file lacks a 'golden:' label")
    return Golden(
        label=label,
        coefficient_rows=tuple(coeff_rows),
        polynomial_rows=tuple(poly_rows),
        zero_codes=tuple(zeros),
        profile_rows=tuple(profile),
    )


COEFF_TOLERANCE = Fraction(1, 1000)
ROOT_TOLERANCE = Fraction(1, 10**6)


def compare_with_golden(report: VerificationReport, golden: Golden) -> list[str]:
    """Mismatch descriptions; empty means the report matches the golden."""
    problems: list[str] = []
    if golden.coefficient_rows:
        for ref, code in golden.coefficient_rows:
            mine = report.coefficients.get(code)
            if mine is None:
                problems.append(f"no computed coefficient for {code}")
            elif abs(mine - ref) > COEFF_TOLERANCE:
                problems.append(
                    f"coefficient at {code}: computed {mine} "
                    f"(~{float(mine):.6f}), reference {ref}"
                )
    if golden.polynomial_rows:
        for poly, code, root in golden.polynomial_rows:
            mine = report.coefficients.get(code)
            if mine != poly:
                problems.append(
                    f"deficit at {code}: computed "
                    f"{mine.pretty() if mine is not None else None}, "
                    f"reference {poly.pretty()}"
                )
                continue
            my_root = (report.largest_roots or {}).get(code)
            if my_root is None:
                problems.append(f"no largest root isolated at {code}")
            elif abs(my_root - root) > ROOT_TOLERANCE:
                problems.append(
                    f"largest root at {code}: computed ~{float(my_root):.9f}, "
                    f"reference {root}"
                )
    if golden.zero_codes:
        want = set(golden.zero_codes)
        got = set(report.zero_set)
        for code in sorted(want - got):
            problems.append(f"expected zero deficit at {code}")
        for code in sorted(got - want):
            problems.append(f"unexpected zero deficit at {code}")
    return problems
