"""
Helper functions for common operations across the engine.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Any, Callable, Iterable, List, Sequence, TypeVar

from pydantic import BaseModel

from config import settings

T = TypeVar("T")
R = TypeVar("R")


def parse_rational(text: Any) -> Fraction:
    """
    Parse a rational number from "a/b", an integer, or a Fraction.

    Args:
        text: Value to parse

    Returns:
        Reduced Fraction

    Raises:
        ValueError: If the value is not an exact rational (floats are refused)
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool):
        raise ValueError(f"Not a rational number: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, str):
        cleaned = text.strip()
        if not cleaned or any(ch in cleaned for ch in ".eE"):
            raise ValueError(f"Not an exact rational: {text!r}")
        return Fraction(cleaned)
    raise ValueError(f"Not a rational number: {text!r}")


def format_rational(value: Fraction) -> str:
    """
    Render a rational as "a" or "a/b".

    Args:
        value: Rational to render

    Returns:
        Canonical string
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def primitive_vector(vector: Sequence[int]) -> tuple:
    """Divide an integer vector by the gcd of its entries."""
    g = 0
    for entry in vector:
        g = math.gcd(g, int(entry))
    if g == 0:
        return tuple(int(entry) for entry in vector)
    return tuple(int(entry) // g for entry in vector)


def parallel_map(fn: Callable[[T], R], items: Iterable[T]) -> List[R]:
    """
    Map a function over items, optionally on a thread pool.

    Order of results always matches the order of items. With
    settings.threads == 1 the work runs sequentially in the caller.

    Args:
        fn: Function to apply
        items: Inputs

    Returns:
        List of results in input order
    """
    items = list(items)
    if not settings.is_parallel or len(items) < 2:
        return [fn(item) for item in items]

    with ThreadPoolExecutor(max_workers=settings.threads) as executor:
        return list(executor.map(fn, items))


def render_table(headers: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    """
    Render an aligned text table.

    Args:
        headers: Column titles
        rows: Row values (converted with str)

    Returns:
        Table text, one line per row
    """
    cells = [[str(h) for h in headers]] + [[str(v) for v in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]

    lines = []
    for index, row in enumerate(cells):
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
        if index == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines)


def dump_report(report: BaseModel, fmt: str = "json") -> str:
    """
    Serialize a report model for standard output.

    Args:
        report: Pydantic report
        fmt: "json" or "text"

    Returns:
        Serialized report
    """
    if fmt == "text" and hasattr(report, "to_text"):
        return report.to_text()
    return report.model_dump_json(indent=2)

