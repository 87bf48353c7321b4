"""JSON encodings of the domain objects.

All rationals are rendered as exact ``p/q`` strings (plain ``n`` when the
denominator is one); nothing is ever converted to floating point.  Output
dictionaries are emitted with sorted keys so repeated runs are
byte-identical.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .algebra import AlgebraElement, format_element
from .classify import ReflectionStep, SideClass, SpinorOscillatorDescriptor
from .errors import ParseError
from .modules import ClassDescriptor, ExplicitModule
from .roots import Root, VerificationReport
from .weights import (
    INFINITE,
    AlgebraKind,
    AlgebraSignature,
    ClassicalWeight,
    Weight,
)


def rational_str(value: Fraction) -> str:
    return str(value)


def rank_json(rank) -> Any:
    return "inf" if rank is INFINITE else rank


def rank_from_json(value) -> Any:
    if value == "inf":
        return INFINITE
    return int(value)


def signature_to_json(sig: AlgebraSignature) -> dict:
    out = {
        "kind": sig.kind.value,
        "pos_rank": rank_json(sig.pos_rank),
        "neg_rank": rank_json(sig.neg_rank),
    }
    if sig.daggered:
        out["daggered"] = True
    return out


def signature_from_json(data: dict) -> AlgebraSignature:
    return AlgebraSignature(
        AlgebraKind(data["kind"]),
        rank_from_json(data["pos_rank"]),
        rank_from_json(data["neg_rank"]),
        bool(data.get("daggered", False)),
    )


def weight_to_json(w: Weight) -> dict:
    return {
        "entries": {str(i): rational_str(v) for i, v in w.entries},
        "window": w.window,
        "pos_tail": rational_str(w.pos_tail),
        "neg_tail": rational_str(w.neg_tail),
    }


def weight_from_json(data: dict) -> Weight:
    try:
        entries = {int(i): Fraction(v) for i, v in data.get("entries", {}).items()}
        return Weight.make(
            entries,
            Fraction(data.get("pos_tail", 0)),
            Fraction(data.get("neg_tail", 0)),
            data.get("window"),
        )
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad weight object: {exc}")


def classical_to_json(w: ClassicalWeight) -> dict:
    out: dict[str, Any] = {
        "eps": {str(i): rational_str(c) for i, c in w.eps},
        "delta": {str(j): rational_str(c) for j, c in w.delta},
    }
    if w.tau:
        out["tau"] = rational_str(w.tau)
    return out


def root_to_json(alpha: Root) -> dict:
    return {
        "eps": {str(i): c for i, c in alpha.eps},
        "delta": {str(j): c for j, c in alpha.delta},
    }


def element_to_json(e: AlgebraElement) -> dict:
    terms = []
    for (raising, lowering), coeff in sorted(e.terms.items()):
        terms.append(
            {
                "coeff": rational_str(coeff),
                "raising": [[i, exp] for i, exp in raising],
                "lowering": [[i, exp] for i, exp in lowering],
            }
        )
    return {
        "signature": signature_to_json(e.signature),
        "terms": terms,
        "text": format_element(e),
    }


def class_to_json(c: ClassDescriptor) -> dict:
    return {
        "signature": signature_to_json(c.signature),
        "base": weight_to_json(c.base),
        "domains": c.domains(),
    }


def module_to_json(m: ExplicitModule) -> dict:
    out = {
        "kind": m.kind.value,
        "signature": signature_to_json(m.signature),
        "base": weight_to_json(m.base),
        "acting": m.acting.value,
    }
    if m.parity_flip:
        out["parity_flip"] = True
    if m.restriction is not None:
        tag, anchor = m.restriction
        out["restriction"] = {"functional": tag.value, "anchor": weight_to_json(anchor)}
    return out


def side_class_to_json(c: SideClass) -> dict:
    return {
        "side": c.side.value,
        "signature": signature_to_json(c.signature),
        "base": weight_to_json(c.base),
        "parity_bit": c.parity_bit,
    }


def descriptor_to_json(d: SpinorOscillatorDescriptor) -> dict:
    return {
        "s": side_class_to_json(d.s_class),
        "t": side_class_to_json(d.t_class),
        "s_twin": side_class_to_json(d.s_twin_class),
        "t_twin": side_class_to_json(d.t_twin_class),
        "s_support": sorted_weights(d.s_support),
        "t_support": sorted_weights(d.t_support),
        "s_twin_support": sorted_weights(d.s_twin_support),
        "t_twin_support": sorted_weights(d.t_twin_support),
    }


def sorted_weights(weights) -> list[dict]:
    return [weight_to_json(w) for w in sorted(weights, key=_weight_key)]


def _weight_key(w: Weight):
    return (w.entries, w.pos_tail, w.neg_tail)


def trace_to_json(trace: list[ReflectionStep]) -> list[dict]:
    out = []
    for step in trace:
        out.append(
            {
                "lambda": classical_to_json(step.weight),
                "root": None if step.root is None else root_to_json(step.root),
                "typical": None if step.typicality is None else step.typicality.value == "typical",
            }
        )
    return out


def report_to_json(report: VerificationReport) -> dict:
    return {
        "hom": report.hom.value,
        "a": report.a,
        "b": report.b,
        "pairs_checked": report.pairs_checked,
        "weight_sign": report.weight_sign,
        "failures": [
            {"pair": f.pair, "status": f.status, "witness": f.witness}
            for f in report.failures
        ],
    }


def dumps(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"
