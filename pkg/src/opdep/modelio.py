"""Lossless JSON serialization of model objects.

Real numbers are written as decimal strings produced by ``repr(float)``,
which round-trips every double exactly; readers also accept plain JSON
numbers for hand-written files.  Every schema violation raises
:class:`ModelFormatError` carrying the dotted path of the offending field.

Two kinds are supported and distinguished by the top-level ``kind`` field:

``piecewise``::

    {"kind": "piecewise", "order": 2, "cells": [
        {"value": "1.0", "blocks": [
            {"axis": "x", "positions": [1, 2], "lo": "0.0", "hi": "1.0",
             "kind": "chain"}]}]}

``discrete``::

    {"kind": "discrete", "order": 2, "atoms": [
        {"point": ["1.0", "5.0", "3.0", "5.0"], "prob": "0.25"}]}
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .discrete import DiscreteJoint
from .errors import ModelFormatError, OpdepError
from .piecewise import Block, Cell, PiecewiseUniformDensity

Model = PiecewiseUniformDensity | DiscreteJoint


def _real_out(value: float) -> str:
    return repr(float(value))


def _real_in(value: Any, field: str) -> float:
    if isinstance(value, bool):
        raise ModelFormatError(field, f"expected a real number, got {value!r}")
    if isinstance(value, (int, float)):
        return float(value)
    if isinstance(value, str):
        try:
            return float(value.strip())
        except ValueError:
            raise ModelFormatError(field, f"not a decimal real: {value!r}") from None
    raise ModelFormatError(field, f"expected a real number, got {type(value).__name__}")


def _int_in(value: Any, field: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ModelFormatError(field, f"expected an integer, got {value!r}")
    return value


def _str_in(value: Any, field: str) -> str:
    if not isinstance(value, str):
        raise ModelFormatError(field, f"expected a string, got {type(value).__name__}")
    return value


def _list_in(value: Any, field: str) -> list:
    if not isinstance(value, list):
        raise ModelFormatError(field, f"expected a list, got {type(value).__name__}")
    return value


def _dict_in(value: Any, field: str, allowed: set[str]) -> dict:
    if not isinstance(value, dict):
        raise ModelFormatError(field, f"expected an object, got {type(value).__name__}")
    unknown = set(value) - allowed
    if unknown:
        raise ModelFormatError(f"{field}.{sorted(unknown)[0]}", "unknown field")
    missing = allowed - set(value)
    if missing:
        raise ModelFormatError(f"{field}.{sorted(missing)[0]}", "missing field")
    return value


def model_to_dict(model: Model) -> dict:
    """JSON-ready dictionary for either model kind."""
    if isinstance(model, PiecewiseUniformDensity):
        return {
            "kind": "piecewise",
            "order": model.order,
            "cells": [
                {
                    "value": _real_out(cell.value),
                    "blocks": [
                        {
                            "axis": block.axis,
                            "positions": list(block.positions),
                            "lo": _real_out(block.lo),
                            "hi": _real_out(block.hi),
                            "kind": block.kind,
                        }
                        for block in cell.blocks
                    ],
                }
                for cell in model.cells
            ],
        }
    if isinstance(model, DiscreteJoint):
        return {
            "kind": "discrete",
            "order": model.order,
            "atoms": [
                {"point": [_real_out(v) for v in point], "prob": _real_out(prob)}
                for point, prob in model.atoms
            ],
        }
    raise ModelFormatError("kind", f"unsupported model type {type(model).__name__}")


def _block_from_dict(data: Any, field: str) -> Block:
    obj = _dict_in(data, field, {"axis", "positions", "lo", "hi", "kind"})
    positions = [
        _int_in(p, f"{field}.positions[{k}]")
        for k, p in enumerate(_list_in(obj["positions"], f"{field}.positions"))
    ]
    try:
        return Block(
            axis=_str_in(obj["axis"], f"{field}.axis"),
            positions=tuple(positions),
            lo=_real_in(obj["lo"], f"{field}.lo"),
            hi=_real_in(obj["hi"], f"{field}.hi"),
            kind=_str_in(obj["kind"], f"{field}.kind"),
        )
    except ModelFormatError:
        raise
    except OpdepError as exc:
        raise ModelFormatError(field, str(exc)) from exc


def _piecewise_from_dict(data: dict) -> PiecewiseUniformDensity:
    order = _int_in(data["order"], "order")
    cells = []
    for ci, raw_cell in enumerate(_list_in(data["cells"], "cells")):
        field = f"cells[{ci}]"
        obj = _dict_in(raw_cell, field, {"value", "blocks"})
        blocks = [
            _block_from_dict(raw_block, f"{field}.blocks[{bi}]")
            for bi, raw_block in enumerate(_list_in(obj["blocks"], f"{field}.blocks"))
        ]
        try:
            cells.append(Cell(value=_real_in(obj["value"], f"{field}.value"), blocks=tuple(blocks)))
        except ModelFormatError:
            raise
        except OpdepError as exc:
            raise ModelFormatError(field, str(exc)) from exc
    try:
        return PiecewiseUniformDensity(order=order, cells=tuple(cells))
    except OpdepError as exc:
        raise ModelFormatError("cells", str(exc)) from exc


def _discrete_from_dict(data: dict) -> DiscreteJoint:
    order = _int_in(data["order"], "order")
    atoms = []
    for ai, raw_atom in enumerate(_list_in(data["atoms"], "atoms")):
        field = f"atoms[{ai}]"
        obj = _dict_in(raw_atom, field, {"point", "prob"})
        point = [
            _real_in(v, f"{field}.point[{k}]")
            for k, v in enumerate(_list_in(obj["point"], f"{field}.point"))
        ]
        atoms.append((tuple(point), _real_in(obj["prob"], f"{field}.prob")))
    try:
        return DiscreteJoint(order=order, atoms=atoms)
    except OpdepError as exc:
        raise ModelFormatError("atoms", str(exc)) from exc


def model_from_dict(data: Any) -> Model:
    """Parse a model dictionary, dispatching on its ``kind`` field."""
    if not isinstance(data, dict):
        raise ModelFormatError("", f"expected a JSON object, got {type(data).__name__}")
    kind = data.get("kind")
    if kind == "piecewise":
        _dict_in(data, "", {"kind", "order", "cells"})
        return _piecewise_from_dict(data)
    if kind == "discrete":
        _dict_in(data, "", {"kind", "order", "atoms"})
        return _discrete_from_dict(data)
    raise ModelFormatError("kind", f"expected 'piecewise' or 'discrete', got {kind!r}")


def model_to_json(model: Model) -> str:
    return json.dumps(model_to_dict(model), indent=2) + "\n"


def model_from_json(text: str) -> Model:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelFormatError("", f"invalid JSON: {exc}") from exc
    return model_from_dict(data)


def save_model(model: Model, path: str | Path) -> None:
    Path(path).write_text(model_to_json(model), encoding="utf-8")


def load_model(path: str | Path) -> Model:
    return model_from_json(Path(path).read_text(encoding="utf-8"))
