"""Eigenform files and report documents.

The eigenform file is versioned line-oriented text with every rational
written as ``num/den``, so nothing depends on platform number formatting and
files diff cleanly.  Reports are JSON with sorted keys and a fixed layout;
serializing the same analysis twice yields identical bytes.
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import __version__
from .errors import ParseError
from .numberfield import NumberField
from .poly import ZZ, Poly

FORMAT_MAGIC = "heckecong-eigenform"
FORMAT_VERSION = 1


@dataclass
class EigenformFile:
    """Parsed eigenform file: exact coefficients on the power basis."""
    weight: int
    level: int
    field_poly: list        # monic integer coefficients, low to high
    coefficients: list      # list of lists of Fractions, a_1 first

    @property
    def count(self):
        return len(self.coefficients)


def _parse_rational(tok, lineno, what):
    try:
        if "/" in tok:
            num, den = tok.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(int(tok))
    except (ValueError, ZeroDivisionError):
        raise ParseError("line %d: %s is not a rational: %r" % (lineno, what, tok))


def parse_eigenform_file(text):
    """Parse and fully validate an eigenform file."""
    lines = text.splitlines()
    idx = 0

    def next_line():
        nonlocal idx
        while idx < len(lines):
            raw = lines[idx]
            idx += 1
            stripped = raw.split("#", 1)[0].strip()
            if stripped:
                return idx, stripped
        return idx, None

    lineno, header = next_line()
    if header is None:
        raise ParseError("empty file: missing header")
    parts = header.split()
    if len(parts) != 2 or parts[0] != FORMAT_MAGIC:
        raise ParseError("line %d: bad header, expected %r" % (lineno, FORMAT_MAGIC))
    if int(parts[1]) != FORMAT_VERSION:
        raise ParseError("line %d: unsupported format version %s" % (lineno, parts[1]))

    fields = {}
    for key in ("weight", "level", "field", "coeffs"):
        lineno, line = next_line()
        if line is None:
            raise ParseError("missing field %r" % key)
        toks = line.split()
        if toks[0] != key:
            raise ParseError("line %d: expected field %r, found %r" % (lineno, key, toks[0]))
        fields[key] = (lineno, toks[1:])

    try:
        weight = int(fields["weight"][1][0])
        level = int(fields["level"][1][0])
    except (IndexError, ValueError):
        raise ParseError("weight/level must be single integers")
    try:
        poly = [int(t) for t in fields["field"][1]]
    except ValueError:
        raise ParseError("line %d: field polynomial coefficients must be integers"
                         % fields["field"][0])
    if len(poly) < 2:
        raise ParseError("field polynomial must have degree >= 1")
    if poly[-1] != 1:
        raise ParseError("field polynomial must be monic")
    try:
        count = int(fields["coeffs"][1][0])
    except (IndexError, ValueError):
        raise ParseError("coeffs must be a single integer")
    if count < 1:
        raise ParseError("need at least one coefficient")

    degree = len(poly) - 1
    coeff_rows = [None] * count
    for _ in range(count):
        lineno, line = next_line()
        if line is None:
            raise ParseError("truncated file: %d coefficient lines expected" % count)
        toks = line.split()
        if toks[0] != "a":
            raise ParseError("line %d: expected a coefficient line" % lineno)
        if len(toks) != 2 + degree:
            raise ParseError("line %d: coefficient needs %d coordinates, found %d"
                             % (lineno, degree, len(toks) - 2))
        n = int(toks[1])
        if not 1 <= n <= count:
            raise ParseError("line %d: coefficient index %d out of range" % (lineno, n))
        if coeff_rows[n - 1] is not None:
            raise ParseError("line %d: duplicate coefficient a_%d" % (lineno, n))
        coeff_rows[n - 1] = [
            _parse_rational(t, lineno, "coordinate of a_%d" % n) for t in toks[2:]]
    missing = [i + 1 for i, row in enumerate(coeff_rows) if row is None]
    if missing:
        raise ParseError("missing coefficients: a_%s" % ", a_".join(map(str, missing)))
    lineno, extra = next_line()
    if extra is not None:
        raise ParseError("line %d: trailing content after coefficients" % lineno)

    doc = EigenformFile(weight, level, poly, coeff_rows)
    validate_eigenform_file(doc)
    return doc


def validate_eigenform_file(doc):
    """Spec invariants: monic irreducible field, a_1 = 1, every coefficient
    an algebraic integer, multiplicativity within the stored precision."""
    try:
        field = NumberField(Poly(doc.field_poly, ZZ))
    except Exception as exc:
        raise ParseError("field polynomial invalid: %s" % exc)
    elements = [field.element(row) for row in doc.coefficients]
    if elements[0] != field.one():
        raise ParseError("not normalized: a_1 must decode to 1")
    for n, e in enumerate(elements, start=1):
        if not e.is_algebraic_integer():
            raise ParseError("a_%d is not an algebraic integer" % n)
    B = len(elements)
    for m in range(2, B + 1):
        for n in range(2, B // m + 1):
            if gcd(m, n) == 1 and elements[m * n - 1] != elements[m - 1] * elements[n - 1]:
                raise ParseError("multiplicativity fails at a_%d * a_%d" % (m, n))
    return field, elements


def serialize_eigenform_file(doc):
    lines = ["%s %d" % (FORMAT_MAGIC, FORMAT_VERSION),
             "weight %d" % doc.weight,
             "level %d" % doc.level,
             "field %s" % " ".join(str(c) for c in doc.field_poly),
             "coeffs %d" % doc.count]
    for n, row in enumerate(doc.coefficients, start=1):
        body = " ".join("%d/%d" % (Fraction(c).numerator, Fraction(c).denominator)
                        for c in row)
        lines.append("a %d %s" % (n, body))
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# report documents
# --------------------------------------------------------------------------

def _frac_str(q):
    q = Fraction(q)
    return "%d/%d" % (q.numerator, q.denominator)


def witness_to_doc(w):
    return {
        "sigma_theta_image": [_frac_str(c) for c in w.sigma.image.coords],
        "prime": {
            "p": w.p,
            "e": w.prime.e,
            "f": w.prime.f,
            "lattice": [list(r) for r in w.prime.lattice],
        },
        "bound": w.bound,
        "branch": w.branch,
        "residue_log": [[n, list(res)] for n, res in w.residue_log],
    }


def orbit_report_to_doc(report, bound_limited=False):
    doc = {
        "orbit": report.orbit,
        "field_poly": report.minpoly,
        "index_in_maximal": report.index_in_maximal,
        "disc_maximal": report.disc_maximal,
        "disc_closure": report.disc_closure,
        "ramified_primes": report.ramified,
        "galois": report.galois,
        "bound_limited": bound_limited,
        "prime_verdicts": [
            {
                "p": v.p,
                "divides_index": v.divides_index,
                "ramifies": v.ramifies,
                "witness_found": v.witness_found,
                "witness": witness_to_doc(v.witness) if v.witness else None,
            }
            for v in report.verdicts
        ],
    }
    if report.galois:
        doc["iff"] = {
            "hypothesis_primes": report.iff_left,
            "witness_primes": report.iff_right,
            "consistent": report.iff_consistent,
        }
    return doc


def make_report_document(provenance, weight, orbit_docs, disc_doc=None,
                         index_in_normalization=None, consistent=True):
    return {
        "tool": "heckecong",
        "version": __version__,
        "provenance": provenance,
        "weight": weight,
        "orbits": orbit_docs,
        "disc_factorization": disc_doc,
        "index_in_normalization": index_in_normalization,
        "consistent": consistent,
    }


def serialize_report(doc):
    """Canonical JSON bytes: sorted keys, fixed separators, trailing newline."""
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def parse_report(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("report is not valid JSON: %s" % exc)
