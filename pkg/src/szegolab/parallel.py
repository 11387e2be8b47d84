import os


def max_workers(default: int = 4) -> int:
    """Thread cap from ``SZEGO_LAB_THREADS`` (minimum 1)."""
    raw = os.environ.get("SZEGO_LAB_THREADS")
    if not raw:
        return default
    try:
        return max(1, int(raw))
    except ValueError:
        return default
