"""JSON encodings of forms and parametrizations."""

from __future__ import annotations

import json

from .errors import MustrataError
from .fields import Field
from .forms import BinaryForm


def form_to_json(f: BinaryForm) -> dict:
    return {"degree": f.degree, "coeffs": [f.field.encode(c) for c in f.coeffs]}


def form_from_json(obj, field: Field, where: str = "form") -> BinaryForm:
    try:
        degree = obj["degree"]
        coeffs = obj["coeffs"]
    except (KeyError, TypeError):
        raise MustrataError(f"{where}: expected an object with 'degree' and 'coeffs'") from None
    if not isinstance(degree, int) or degree < 0:
        raise MustrataError(f"{where}.degree: expected a nonnegative integer")
    if not isinstance(coeffs, list) or len(coeffs) != degree + 1:
        raise MustrataError(f"{where}.coeffs: expected {degree + 1} coefficients")
    values = []
    for j, c in enumerate(coeffs):
        try:
            values.append(field.decode(str(c)))
        except (ValueError, ZeroDivisionError, MustrataError) as exc:
            raise MustrataError(f"{where}.coeffs[{j}]: {exc}") from None
    return BinaryForm._raw(field, values)


def parametrization_to_json(P) -> dict:
    return {
        "d": P.d,
        "n": P.n,
        "field": str(P.field),
        "forms": [form_to_json(f) for f in P.forms],
    }


def parametrization_from_json(obj):
    from .syzygy import Parametrization

    if not isinstance(obj, dict):
        raise MustrataError("curve: expected a JSON object")
    for key in ("d", "n", "field", "forms"):
        if key not in obj:
            raise MustrataError(f"curve: missing key {key!r}")
    field = Field.parse(str(obj["field"]))
    forms = [form_from_json(f, field, f"forms[{i}]") for i, f in enumerate(obj["forms"])]
    if len(forms) != obj["d"] + 1:
        raise MustrataError(f"curve: d = {obj['d']} but {len(forms)} forms given")
    if any(f.degree != obj["n"] for f in forms):
        raise MustrataError(f"curve: every form must have degree n = {obj['n']}")
    return Parametrization(tuple(forms))


def load_parametrization(path):
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise MustrataError(f"{path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise MustrataError(f"{path}: malformed JSON at line {exc.lineno} column {exc.colno}") from None
    return parametrization_from_json(obj)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"
