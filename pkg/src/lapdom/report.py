"""JSON helpers shared by certificates and CLI reports."""

from __future__ import annotations

from fractions import Fraction
from typing import Optional


def rational_json(x) -> Optional[dict]:
    """``{"num": "3", "den": "4", "decimal": 0.75}``; ``None`` passes through."""
    if x is None:
        return None
    x = Fraction(x)
    return {"num": str(x.numerator), "den": str(x.denominator), "decimal": float(x)}


def rational_from_json(d: dict) -> Fraction:
    return Fraction(int(d["num"]), int(d["den"]))
