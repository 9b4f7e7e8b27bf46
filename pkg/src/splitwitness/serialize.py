"""Canonical JSON envelope for certificates and reports.

Serialization is byte-reproducible: sorted keys, compact separators, ASCII
only.  A certificate emitted twice yields identical bytes, and
emit -> parse -> verify agrees with in-memory verification.
"""

from __future__ import annotations

import json

from .parsing import format_poly, parse_poly
from .witness import (
    CheckRecord,
    DegreeData,
    FamilySpec,
    WitnessCertificate,
    format_family_spec,
    parse_family_spec,
)


def canonical_json_bytes(obj) -> bytes:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True).encode(
        "utf-8"
    )


def certificate_to_doc(cert: WitnessCertificate) -> dict:
    dd = cert.degree_data
    return {
        "family": format_family_spec(cert.family),
        "witness": {
            "min_poly": format_poly(cert.witness_min_poly),
            "description": cert.witness_description,
        },
        "prime": cert.prime_p,
        "obstruction": cert.obstruction,
        "degree_data": {
            "kind": dd.kind,
            "total": dd.total,
            "steps": list(dd.steps) if dd.steps is not None else None,
            "k": dd.k,
            "prefix_size": dd.prefix_size,
        },
        "checks": [
            {"op": c.op, "inputs": c.inputs, "expected": c.expected}
            for c in cert.checks
        ],
    }


def certificate_from_doc(doc: dict) -> WitnessCertificate:
    dd = doc["degree_data"]
    return WitnessCertificate(
        family=parse_family_spec(doc["family"]),
        witness_min_poly=parse_poly(doc["witness"]["min_poly"]),
        witness_description=doc["witness"]["description"],
        prime_p=int(doc["prime"]),
        obstruction=doc["obstruction"],
        degree_data=DegreeData(
            kind=dd["kind"],
            total=dd.get("total"),
            steps=tuple(dd["steps"]) if dd.get("steps") is not None else None,
            k=dd.get("k"),
            prefix_size=dd.get("prefix_size"),
        ),
        checks=tuple(
            CheckRecord(c["op"], c["inputs"], c["expected"]) for c in doc["checks"]
        ),
    )


def emit_certificate(cert: WitnessCertificate) -> bytes:
    return canonical_json_bytes(certificate_to_doc(cert))


def load_certificate(data) -> WitnessCertificate:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    return certificate_from_doc(json.loads(data))
