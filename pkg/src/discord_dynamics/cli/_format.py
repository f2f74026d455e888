from __future__ import annotations

import io
import json
from typing import Any

import pandas as pd

SIGNIFICANT_DIGITS = 9
FLOAT_FORMAT = f"%.{SIGNIFICANT_DIGITS}g"


def round_significant(value: float) -> float:
    """Round to the number of significant digits used in every output."""
    return float(FLOAT_FORMAT % value)


def _rounded(obj: Any) -> Any:
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, float):
        return round_significant(obj)
    if isinstance(obj, dict):
        return {k: _rounded(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_rounded(v) for v in obj]
    return obj


def to_json_text(obj: Any) -> str:
    """Serialize a JSON-compatible object with floats at 9 significant digits."""
    return json.dumps(_rounded(obj), indent=2) + "\n"


def to_csv_text(frame: pd.DataFrame) -> str:
    """Serialize a trajectory table as CSV, independent of locale and platform."""
    return frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n")


def read_csv_text(text: str) -> pd.DataFrame:
    """Parse CSV written by ``to_csv_text`` back into exactly the same floats."""
    return pd.read_csv(io.StringIO(text), float_precision="round_trip")
