"""Retrieval of externally computed eigenforms.

A fetched document is JSON of the shape

    {"label": str, "weight": int, "level": int,
     "field_poly": [int, ...],            # monic, low to high
     "an": [[rational, ...], ...]}        # a_1 first, power-basis rows

where rationals are ints or "num/den" strings.  Sources are either a local
fixture directory ({dir}/{id}.json) or an HTTP endpoint ({url}/{id}.json);
the endpoint is configured explicitly and nothing touches the network by
default.  The result is converted to the eigenform file format and fully
validated on the way through.
"""

import json
import os
from fractions import Fraction

from .errors import FetchError, SchemaError
from .formats import EigenformFile, serialize_eigenform_file, validate_eigenform_file

ENDPOINT_ENV = "HECKECONG_ENDPOINT"


def _rational(v, where):
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        try:
            if "/" in v:
                num, den = v.split("/", 1)
                return Fraction(int(num), int(den))
            return Fraction(int(v))
        except (ValueError, ZeroDivisionError):
            pass
    raise SchemaError("%s: not a rational value: %r" % (where, v))


def document_to_eigenform(doc):
    """Validate a fetched JSON document and convert it."""
    if not isinstance(doc, dict):
        raise SchemaError("document must be a JSON object")
    for key in ("weight", "level", "field_poly", "an"):
        if key not in doc:
            raise SchemaError("missing key %r" % key)
    if not isinstance(doc["weight"], int) or not isinstance(doc["level"], int):
        raise SchemaError("keys 'weight' and 'level' must be integers")
    poly = doc["field_poly"]
    if (not isinstance(poly, list) or len(poly) < 2
            or not all(isinstance(c, int) for c in poly)):
        raise SchemaError("key 'field_poly' must be a list of >= 2 integers")
    if poly[-1] != 1:
        raise SchemaError("key 'field_poly' must be monic")
    degree = len(poly) - 1
    an = doc["an"]
    if not isinstance(an, list) or not an:
        raise SchemaError("key 'an' must be a nonempty list")
    rows = []
    for i, row in enumerate(an, start=1):
        if not isinstance(row, list) or len(row) != degree:
            raise SchemaError("key 'an'[%d] must be a list of %d rationals" % (i, degree))
        rows.append([_rational(v, "an[%d]" % i) for v in row])
    eff = EigenformFile(doc["weight"], doc["level"], list(poly), rows)
    validate_eigenform_file(eff)
    return eff


def fetch_eigenform(form_id, endpoint=None, fixtures_dir=None):
    """Fetch by id from a fixture directory or an HTTP endpoint."""
    if fixtures_dir:
        path = os.path.join(fixtures_dir, form_id + ".json")
        if not os.path.exists(path):
            raise FetchError("fixture id %r not found under %s" % (form_id, fixtures_dir))
        with open(path, "r", encoding="utf-8") as fh:
            try:
                doc = json.load(fh)
            except json.JSONDecodeError as exc:
                raise SchemaError("fixture %s is not valid JSON: %s" % (path, exc))
        return document_to_eigenform(doc)
    endpoint = endpoint or os.environ.get(ENDPOINT_ENV)
    if not endpoint:
        raise FetchError("no endpoint configured and no fixture directory given")
    url = endpoint.rstrip("/") + "/" + form_id + ".json"
    from urllib.error import URLError
    from urllib.request import urlopen
    try:
        with urlopen(url) as resp:
            body = resp.read().decode("utf-8")
    except URLError as exc:
        raise FetchError("fetch failed for %s: %s" % (url, exc))
    try:
        doc = json.loads(body)
    except json.JSONDecodeError as exc:
        raise SchemaError("response from %s is not valid JSON: %s" % (url, exc))
    return document_to_eigenform(doc)


def write_eigenform_file(eff, out_path):
    with open(out_path, "w", encoding="utf-8") as fh:
        fh.write(serialize_eigenform_file(eff))
    return out_path
