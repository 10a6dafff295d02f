"""Certificate data shape and its serialization."""

import json

import pytest

from confn.certificates import (
    LOWER,
    SCHEMA_VERSION,
    UPPER,
    Certificate,
    dumps_certificates,
    make_certificate,
)


def test_schema_version_pinned():
    assert SCHEMA_VERSION == "1"


def test_kind_and_value_validated():
    with pytest.raises(ValueError):
        make_certificate("sideways", "r", 1, "c")
    with pytest.raises(ValueError):
        make_certificate(UPPER, "r", -1, "c")


def test_witness_frozen_and_hashable():
    cert = make_certificate(
        UPPER,
        "exact-threshold",
        3,
        "toric adjoint freeness",
        premises=("toric",),
        witness={"m_star": 3, "per_functional": [{"index": 0, "value": 4}]},
    )
    hash(cert)  # dataclass stays hashable after freezing the dict
    data = cert.witness_data()
    assert data["m_star"] == 3
    assert data["per_functional"][0]["index"] == 0
    # mutating the thawed copy does not touch the certificate
    data["m_star"] = 99
    assert cert.witness_data()["m_star"] == 3


def test_witness_rejects_unserializable_payload():
    with pytest.raises(TypeError):
        make_certificate(UPPER, "r", 1, "c", witness={"bad": object()})


def test_json_round_trip():
    cert = make_certificate(
        LOWER,
        "not-nef-witness",
        2,
        "an adjoint that meets an effective class negatively is not nef",
        premises=("known_effective",),
        witness={
            "effective_class": "E",
            "pairing": -1,
            "tuple": [[1, 0], [0, 1]],
            "flag": True,
            "missing": None,
        },
    )
    back = Certificate.from_json_dict(json.loads(json.dumps(cert.to_json_dict())))
    assert back == cert


def test_dumps_is_deterministic_json():
    certs = [
        make_certificate(UPPER, "a", 1, "c1", witness={"k": [1, 2]}),
        make_certificate(LOWER, "b", 0, "c2"),
    ]
    text = dumps_certificates(certs)
    assert text == dumps_certificates(list(certs))
    parsed = json.loads(text)
    assert [p["rule"] for p in parsed] == ["a", "b"]
    assert parsed[0]["witness"] == {"k": [1, 2]}
    assert parsed[1]["witness"] == {}


def test_empty_witness_normalizes_to_empty_dict():
    cert = make_certificate(UPPER, "r", 1, "c")
    assert cert.witness_data() == {}
    assert cert.to_json_dict()["witness"] == {}
