"""JSON Schemas for the documents printed by the command line.

``PAYLOADS`` maps each document ``kind`` to the schema of its payload;
``RUN_DOCUMENT`` wraps any of them.  The package only ships the schemas as
data; validating them needs a separate JSON Schema implementation.
"""

from __future__ import annotations

DRAFT = "https://json-schema.org/draft/2020-12/schema"

_int = {"type": "integer"}
_nonneg = {"type": "integer", "minimum": 0}
_pos = {"type": "integer", "minimum": 1}
_str = {"type": "string"}
_bool = {"type": "boolean"}
_num = {"type": "number"}


def _obj(props: dict, required: list | None = None, extra: bool = False) -> dict:
    return {
        "type": "object",
        "properties": props,
        "required": list(props) if required is None else required,
        "additionalProperties": extra,
    }


ELEMENT = _obj({"index": _nonneg, "cycles": _str})
WITNESS = _obj({"g": _nonneg, "e": _pos, "count_g": _nonneg, "count_ge": _nonneg}, required=["g", "e"])

_verdict_props = {
    "mode": {"enum": ["weak", "full"]},
    "group": _str,
    "word": _str,
    "m": _pos,
    "holds": _bool,
    "witness": WITNESS,
    "order_g_variant": _obj({"holds": _bool, "witness": WITNESS}, required=["holds"]),
}
VERDICT = _obj(_verdict_props, required=["mode", "group", "word", "m", "holds"])

TRIPLE_COUNT = _obj({
    "group": _str, "D": _str, "C": _str, "e": _pos, "e_effective": _pos,
    "D_e": _str, "C_e": _str,
    "N_brute": _nonneg, "N_brute_e": _nonneg, "N_formula": _num, "N_formula_e": _num,
    "brute_equal": _bool, "formula_matches": _bool, "formula_matches_e": _bool, "holds": _bool,
})

INEQUALITY = _obj({"name": _str, "lhs": _int, "rhs": _int, "asserted": _bool, "passed": _bool})

FAM_BOUND = _obj({"group": _str, "word": _str, "m": _pos, "order_W": _pos, "bound": _int,
                  "holds": _bool, "degenerate": _bool})

_concise_props = {
    "group": _str, "word": _str, "m": _pos, "order_W": _pos,
    "order_centralizer": _pos, "index_centralizer": _pos, "m_factorial": _pos,
    "order_center_W": _pos, "order_derived_W": _pos, "W_abelian": _bool,
    "kernel_equals_centralizer": _bool,
    "value_orders": {"type": "array", "items": {"type": "array", "items": _pos, "minItems": 2, "maxItems": 2}},
    "L_m": _pos,
    "final_bound": {"type": ["integer", "null"]},
    "weakly_rational": _bool,
    "inequalities": {"type": "array", "items": INEQUALITY},
    "passed": _bool,
    "fam_bound": FAM_BOUND,
}
CONCISE = _obj(_concise_props, required=[k for k in _concise_props if k != "fam_bound"])

_complex = _obj({"re": _num, "im": _num})
_class_row = _obj({"name": _str, "rep": _str, "size": _pos, "element_order": _pos})

PAYLOADS = {
    "group_info": _obj({
        "group": _str, "order": _pos, "degree": _pos, "exponent": _pos, "abelian": _bool,
        "generators": {"type": "array", "items": _str},
        "classes": {"type": "array", "items": _obj({
            "name": _str, "rep": _str, "size": _pos, "element_order": _pos, "inverse": _str})},
    }),
    "group_list": _obj({"groups": {"type": "array", "items": _obj({"name": _str, "order": _pos})}}),
    "word_eval": _obj({
        "group": _str, "word": _str,
        "assignment": {"type": "object", "additionalProperties": _nonneg},
        "value": ELEMENT,
    }),
    "word_image": _obj({
        "group": _str, "word": _str, "m": _pos, "assignments": _pos,
        "values": {"type": "array", "items": _obj({"index": _nonneg, "cycles": _str, "count": _pos})},
    }),
    "verbal_subgroup": _obj({
        "group": _str, "word": _str, "m": _pos, "order": _pos, "index": _pos, "normal": _bool,
        "members": {"type": "array", "items": ELEMENT},
    }),
    "rationality": _obj(
        dict(_verdict_props, definition_check=VERDICT, scope=_str),
        required=["mode", "group", "word", "m", "holds", "scope"],
    ),
    "character_table": _obj({
        "group": _str, "order": _pos,
        "classes": {"type": "array", "items": _class_row},
        "degrees": {"type": "array", "items": _pos},
        "values": {"type": "array", "items": {"type": "array", "items": _complex}},
        "mod_p": _obj({"prime": _pos, "primitive_root": _pos, "root_of_unity": _pos, "exponent": _pos,
                       "table": {"type": "array", "items": {"type": "array", "items": _nonneg}}}),
    }, required=["group", "order", "classes", "degrees"]),
    "triple_count": TRIPLE_COUNT,
    "triple_count_sweep": _obj({
        "group": _str, "checked": _nonneg, "holds": _bool,
        "reports": {"type": "array", "items": TRIPLE_COUNT},
    }),
    "corollary": _obj({
        "exponents": {"type": "array", "items": _pos, "minItems": 1},
        "word": _str,
        "verdicts": {"type": "array", "items": VERDICT},
        "skipped": {"type": "array", "items": _obj({"group": _str, "reason": _str})},
        "holds": _bool,
        "scope": _str,
    }),
    "concise": CONCISE,
    "power_closed": _obj({
        "group": _str, "set": {"type": "array", "items": _str}, "size": _nonneg,
        "power_closed": _bool, "conjugation_closed": _bool, "contains_identity": _bool,
        "witness": WITNESS,
        "conjugation_witness": _obj({"s": _nonneg, "x": _nonneg}),
    }, required=["group", "set", "size", "power_closed", "conjugation_closed", "contains_identity"]),
}

RUN_DOCUMENT = {
    "$schema": DRAFT,
    **_obj({
        "tool": {"const": "wordlab"},
        "version": _str,
        "backend": {"enum": ["cython", "numpy"]},
        "command": {"type": "array", "items": _str},
        "kind": {"enum": sorted(PAYLOADS)},
        "payload": {"type": "object"},
        "elapsed_s": {"type": "number", "minimum": 0},
    }, required=["tool", "version", "backend", "command", "kind", "payload"]),
}


def payload_schema(kind: str) -> dict:
    return {"$schema": DRAFT, **PAYLOADS[kind]}
