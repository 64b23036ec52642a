# src/shared/application/dto/grid.py
"""Parsing of grid flags such as `2..9`, `1..2.5:0.05` and `10,15,...,45`."""

from decimal import Decimal, InvalidOperation


def _num(text: str) -> Decimal:
    try:
        return Decimal(text.strip())
    except InvalidOperation:
        raise ValueError(f"not a number: {text!r}")


def _progression(start: Decimal, stop: Decimal, step: Decimal) -> list[Decimal]:
    if step <= 0:
        raise ValueError(f"grid step must be positive, got {step}")
    if stop < start:
        raise ValueError(f"grid end {stop} is below its start {start}")
    values = []
    v = start
    while v <= stop:
        values.append(v)
        v += step
    return values


def parse_grid(text: str | float | int | list) -> list[float]:
    """Expand a grid flag into its values, in the order given.

    ``a..b`` steps by one, ``a..b:s`` by ``s``; ``a,b,...,z`` continues the
    progression set by its first two entries up to ``z``. Decimal
    arithmetic keeps `1..2.5:0.05` free of accumulated rounding.
    """
    if isinstance(text, (int, float)):
        return [float(text)]
    if isinstance(text, list):
        return [v for item in text for v in parse_grid(item)]
    
    text = text.strip()
    if not text:
        raise ValueError("empty grid")
    
    if ".." in text and "..." not in text:
        span, _, step = text.partition(":")
        start, _, stop = span.partition("..")
        return [float(v) for v in _progression(_num(start), _num(stop), _num(step or "1"))]
    
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if "..." in parts:
        i = parts.index("...")
        if i < 2 or i != len(parts) - 2:
            raise ValueError(f"'...' needs two leading values and one final value: {text!r}")
        head = [_num(p) for p in parts[:i]]
        stop = _num(parts[-1])
        tail = _progression(head[-1], stop, head[1] - head[0])
        values = head[:-1] + tail
        if values[-1] != stop:
            values.append(stop)
        return [float(v) for v in values]
    return [float(_num(p)) for p in parts]


def parse_int_grid(text: str | float | int | list) -> list[int]:
    values = parse_grid(text)
    if any(v != int(v) for v in values):
        raise ValueError(f"expected integers, got {text!r}")
    return [int(v) for v in values]
