import json
import random

import pytest
from hypothesis import given, strategies as hs

from mustrata.errors import DegreeMismatchError, LinearDependenceError, MustrataError
from mustrata.fields import GF, QQ
from mustrata.forms import BinaryForm
from mustrata.sampler import SampleSpec, sample_in_stratum
from mustrata.serialize import (
    form_from_json,
    form_to_json,
    load_parametrization,
    parametrization_from_json,
    parametrization_to_json,
)

rationals = hs.fractions(max_denominator=10**12).filter(lambda x: abs(x.numerator) < 10**30)


@given(hs.lists(rationals, min_size=1, max_size=8))
def test_rational_round_trip(coeffs):
    f = BinaryForm(QQ, coeffs)
    assert form_from_json(json.loads(json.dumps(form_to_json(f))), QQ) == f


@given(hs.lists(hs.integers(0, 2**31 - 2), min_size=1, max_size=8))
def test_prime_round_trip(coeffs):
    F = GF()
    f = BinaryForm(F, coeffs)
    obj = form_to_json(f)
    assert all(c == str(x) for c, x in zip(obj["coeffs"], coeffs))
    assert form_from_json(obj, F) == f


def test_encoding_shape(st):
    s, t = st
    assert form_to_json(s * s - t.scale(3) * t) == {"degree": 2, "coeffs": ["1/1", "0/1", "-3/1"]}


@pytest.mark.parametrize("field", [QQ, GF()])
def test_curve_round_trip(field, tmp_path):
    P = sample_in_stratum(SampleSpec((1, 2, 3), 6, 3, seed=1, field=field))
    path = tmp_path / "c.json"
    path.write_text(json.dumps(parametrization_to_json(P)))
    assert load_parametrization(path) == P


class TestErrors:
    def test_bad_coefficient(self):
        with pytest.raises(MustrataError, match=r"forms\[1\]\.coeffs\[0\]"):
            parametrization_from_json({"d": 2, "n": 1, "field": "Q",
                                       "forms": [{"degree": 1, "coeffs": ["1", "0"]},
                                                 {"degree": 1, "coeffs": ["x", "1"]},
                                                 {"degree": 1, "coeffs": ["1", "1"]}]})

    def test_wrong_length(self):
        with pytest.raises(MustrataError, match="expected 3 coefficients"):
            form_from_json({"degree": 2, "coeffs": ["1"]}, QQ)

    def test_missing_key(self):
        with pytest.raises(MustrataError, match="missing key 'forms'"):
            parametrization_from_json({"d": 2, "n": 2, "field": "Q"})

    def test_non_canonical_residue(self):
        with pytest.raises(MustrataError):
            form_from_json({"degree": 0, "coeffs": ["7"]}, GF(7))

    def test_degree_disagreement(self):
        forms = [{"degree": 2, "coeffs": ["1", "0", "0"]}] * 3
        with pytest.raises(MustrataError, match="d = 3"):
            parametrization_from_json({"d": 3, "n": 2, "field": "Q", "forms": forms})

    def test_dependent(self):
        forms = [{"degree": 2, "coeffs": ["1", "0", "0"]}] * 3
        with pytest.raises(LinearDependenceError):
            parametrization_from_json({"d": 2, "n": 2, "field": "Q", "forms": forms})

    def test_files(self, tmp_path):
        with pytest.raises(MustrataError, match="No such file"):
            load_parametrization(tmp_path / "missing.json")
        bad = tmp_path / "bad.json"
        bad.write_text("{ not json")
        with pytest.raises(MustrataError, match="line 1"):
            load_parametrization(bad)
