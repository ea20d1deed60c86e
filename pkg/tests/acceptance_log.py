"""Shared record of acceptance outcomes, printed at the end of the session."""
from __future__ import annotations

RESULTS: dict[str, tuple[bool, str]] = {}


def record(key: str, ok: bool, detail: str = "") -> bool:
    RESULTS[key] = (bool(ok), detail)
    print(f"{'PASS' if ok else 'FAIL'}  {key}: {detail}")
    return bool(ok)
