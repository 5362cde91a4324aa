"""Shared record of acceptance outcomes, printed at the end of the session."""

RESULTS: dict[str, tuple[bool, str]] = {}


def record(key: str, ok: bool, detail: str = "") -> None:
    RESULTS[key] = (ok, detail)
    print(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {detail}")
