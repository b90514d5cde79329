"""Deterministic seed fan-out: one root seed derives every stage and record seed."""

import hashlib

_MASK63 = (1 << 63) - 1


def derive_seed(root: int, *scope: object) -> int:
    """Derive a child seed from ``root`` and a scope path (stage name, record id, ...).

    Hash-based so sibling scopes are statistically independent and the result does
    not depend on call order; parallel generation therefore equals serial generation.
    Masked to 63 bits so the value is valid for both numpy and torch seeding.
    """
    h = hashlib.sha256()
    h.update(str(int(root)).encode())
    for part in scope:
        h.update(b"/")
        h.update(str(part).encode())
    return int.from_bytes(h.digest()[:8], "little") & _MASK63
