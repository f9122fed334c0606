"""Deterministic JSON/CSV records for the report dataclasses.

Exact integers stay JSON numbers while a double holds them exactly and become
decimal strings beyond that (C(2000, 8)^2 fits neither a double nor an int64).  Reals, including exact fractions, are rounded half-even to 12
significant digits.  Every record carries a ``"type"`` tag so that
:func:`from_record` can rebuild the dataclass.
"""
from __future__ import annotations

import csv
import dataclasses
import decimal
import enum
import io
import json
import types
import typing
from fractions import Fraction

from .case_two import Case2Report, DichotomyCell
from .fit import FitResult
from .highdim import HighDimReport, LocalExtremes
from .oracle import SpectrumMultiset
from .probes import ProbeState
from .qfi_optimal import QfiReport
from .qfi_product import SpMax

__all__ = ["dumps_csv", "dumps_json", "encode", "from_record", "real", "real_str", "to_record"]

SIG_DIGITS = 12
MAX_SAFE_INT = 2**53 - 1

_TYPES = {
    cls.__name__: cls
    for cls in (QfiReport, ProbeState, Case2Report, DichotomyCell, HighDimReport, LocalExtremes, SpMax, FitResult, SpectrumMultiset)
}

# derived values added to records for readers; ignored by from_record
_EXTRAS = {
    HighDimReport: ("qfi",),
    DichotomyCell: ("zero_in_argmin",),
    FitResult: ("prefactor",),
}


def real_str(x) -> str:
    """``x`` rounded half-even to 12 significant digits, as text."""
    with decimal.localcontext() as ctx:
        ctx.prec = SIG_DIGITS
        ctx.rounding = decimal.ROUND_HALF_EVEN
        if isinstance(x, Fraction):
            d = decimal.Decimal(x.numerator) / decimal.Decimal(x.denominator)
        else:
            d = +decimal.Decimal(float(x))
    return format(d, "f") if d == d.to_integral_value() and abs(d) < 10**SIG_DIGITS else str(d)


def real(x) -> float:
    return float(real_str(x))


def encode(value):
    """JSON-ready form of one value (see module docstring)."""
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value if abs(value) <= MAX_SAFE_INT else str(value)
    if isinstance(value, (float, Fraction)):
        return real(value)
    if dataclasses.is_dataclass(value):
        return to_record(value)
    if isinstance(value, dict):
        # keys may be big ints or fractions, so a dict travels as sorted pairs
        return [[encode(k), encode(v)] for k, v in sorted(value.items())]
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    if hasattr(value, "item"):  # numpy scalar
        return encode(value.item())
    raise TypeError(f"cannot serialise {type(value).__name__}")


def to_record(obj) -> dict:
    rec = {"type": type(obj).__name__}
    for f in dataclasses.fields(obj):
        rec[f.name] = encode(getattr(obj, f.name))
    for name in _EXTRAS.get(type(obj), ()):
        rec[name] = encode(getattr(obj, name))
    return rec


def _decode_scalar(v):
    if isinstance(v, str):
        try:
            return int(v)
        except ValueError:
            return v
    return v


def _decode(hint, v):
    if v is None:
        return None
    origin = typing.get_origin(hint)
    args = typing.get_args(hint)
    if hint is int:
        return int(v)
    if hint is float:
        return float(v)
    if hint is str:
        return v
    if hint is bool:
        return bool(v)
    if isinstance(hint, type) and issubclass(hint, enum.Enum):
        return hint(v)
    if isinstance(hint, type) and hint.__name__ in _TYPES:
        return from_record(v)
    if origin is tuple:
        if args and args[-1] is Ellipsis:
            return tuple(_decode(args[0], x) for x in v)
        return tuple(_decode_scalar(x) for x in v)
    if hint is tuple:
        return tuple(_decode_scalar(x) for x in v)
    if hint is dict or origin is dict:
        return {_decode_scalar(a): _decode_scalar(b) for a, b in v}
    if origin in (typing.Union, getattr(types, "UnionType", None)):
        for a in args:
            if a is type(None):
                continue
            try:
                return _decode(a, v)
            except (TypeError, ValueError):
                continue
    # numbers.Rational and friends: ints travel as strings, reals as numbers
    return _decode_scalar(v)


def from_record(rec: dict):
    cls = _TYPES[rec["type"]]
    hints = typing.get_type_hints(cls)
    kwargs = {}
    for f in dataclasses.fields(cls):
        if not f.init:
            continue
        kwargs[f.name] = _decode(hints[f.name], rec[f.name])
    return cls(**kwargs)


def dumps_json(records: list) -> str:
    payload = records[0] if len(records) == 1 else records
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _csv_cell(v) -> str:
    if isinstance(v, list):
        return " ".join(_csv_cell(x) for x in v)
    if isinstance(v, dict):
        return json.dumps(v, sort_keys=True, separators=(",", ":"))
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return real_str(v)
    return "" if v is None else str(v)


def dumps_csv(rows: list[dict], header: list[str]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_csv_cell(row.get(h)) for h in header])
    return buf.getvalue()
