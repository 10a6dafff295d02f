"""Certificates: the machine-checkable payload of every reported bound.

A certificate names the rule that produced it, the side it bounds, the
bound itself, the literature it is a consequence of, the premises it
needs, and enough witness data to re-run the check without trusting the
resolver.  The verifier lives next to the rules in the engine module;
this module owns the data shape and its stable serialization, which is
part of the tool's external interface (schema version 1).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

UPPER = "upper"
LOWER = "lower"

SCHEMA_VERSION = "1"


def _freeze(value):
    if isinstance(value, dict):
        return tuple((str(k), _freeze(v)) for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return tuple(_freeze(v) for v in value)
    if isinstance(value, (str, int, bool)) or value is None:
        return value
    raise TypeError(f"certificate witness data cannot hold {type(value).__name__}")


def _thaw(value):
    if isinstance(value, tuple) and all(
        isinstance(p, tuple) and len(p) == 2 and isinstance(p[0], str) for p in value
    ):
        return {k: _thaw(v) for k, v in value}
    if isinstance(value, tuple):
        return [_thaw(v) for v in value]
    return value


@dataclass(frozen=True)
class Certificate:
    kind: str
    rule: str
    value: int
    citation: str
    premises: tuple[str, ...] = ()
    witness: tuple = field(default=())

    def __post_init__(self) -> None:
        if self.kind not in (UPPER, LOWER):
            raise ValueError(f"certificate kind must be upper or lower, got {self.kind!r}")
        if self.value < 0:
            raise ValueError("certified bounds are nonnegative")
        object.__setattr__(self, "premises", tuple(self.premises))
        object.__setattr__(self, "witness", _freeze(self.witness))

    def witness_data(self) -> dict:
        out = _thaw(self.witness)
        return out if isinstance(out, dict) else {}

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "rule": self.rule,
            "value": self.value,
            "citation": self.citation,
            "premises": list(self.premises),
            "witness": _as_jsonable(self.witness_data()),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Certificate":
        return cls(
            kind=data["kind"],
            rule=data["rule"],
            value=data["value"],
            citation=data["citation"],
            premises=tuple(data.get("premises", ())),
            witness=data.get("witness", {}) or {},
        )


def _as_jsonable(value):
    if isinstance(value, dict):
        return {k: _as_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_as_jsonable(v) for v in value]
    return value


def make_certificate(
    kind: str,
    rule: str,
    value: int,
    citation: str,
    premises=(),
    witness=None,
) -> Certificate:
    return Certificate(
        kind=kind,
        rule=rule,
        value=value,
        citation=citation,
        premises=tuple(premises),
        witness=witness or {},
    )


def dumps_certificates(certs) -> str:
    return json.dumps([c.to_json_dict() for c in certs], indent=2)
