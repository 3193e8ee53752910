"""Collects one pass/fail line per acceptance criterion for the terminal summary."""

from contextlib import contextmanager

RESULTS: list[str] = []


@contextmanager
def criterion(label: str):
    """Record PASS/FAIL for ``label``; the body may append detail to the yielded list."""
    detail: list[str] = []
    try:
        yield detail
    except AssertionError as exc:
        msg = str(exc).splitlines()[0] if str(exc) else "assertion failed"
        line = f"FAIL  {label}: {msg}"
        RESULTS.append(line)
        print(line)
        raise
    line = f"PASS  {label}" + (f": {'; '.join(detail)}" if detail else "")
    RESULTS.append(line)
    print(line)
