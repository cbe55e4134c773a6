"""Python wrapper over the _qsigma extension: dict-in, dict-out."""

import json
from typing import Any, Optional

import _qsigma

__all__ = [
    "decide",
    "verify",
    "oracle",
    "gm_group",
    "theta_relation_residual",
    "theta_functional_residual",
]


def decide(document: dict, trace: bool = False) -> dict:
    """Run the zero-row criterion on an equation document."""
    raw = (
        _qsigma.decide_traced_json(json.dumps(document))
        if trace
        else _qsigma.decide_json(json.dumps(document))
    )
    return json.loads(raw)


def verify(document: dict, witness: dict) -> bool:
    result = json.loads(_qsigma.verify_json(json.dumps(document), json.dumps(witness)))
    return result["verified"]


def oracle(document: dict, bound: int) -> dict:
    return json.loads(_qsigma.oracle_json(json.dumps(document), bound))


def gm_group(document: dict) -> dict:
    return json.loads(_qsigma.gm_group_json(json.dumps(document)))


def theta_relation_residual(
    kind: int,
    t: int,
    u: Optional[int] = None,
    v: Optional[int] = None,
    n: Optional[int] = None,
    q: float = 2.0,
    truncation: int = 40,
    samples: int = 32,
) -> float:
    return _qsigma.theta_relation_residual(kind, t, u, v, n, q, truncation, samples)


def theta_functional_residual(q: float = 2.0, truncation: int = 40, samples: int = 32) -> float:
    return _qsigma.theta_functional_residual(q, truncation, samples)
