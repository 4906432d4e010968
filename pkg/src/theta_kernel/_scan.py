"""Select the box-scan backend: compiled if available, pure Python otherwise."""

from __future__ import annotations

from . import _boxscan_py

try:  # pragma: no cover - exercised only when the extension is absent
    from . import _boxscan as _impl  # type: ignore[attr-defined]
except ImportError:
    _impl = _boxscan_py

BACKEND_NAME: str = _impl.BACKEND_NAME
LEMMA_CODES: dict[str, int] = dict(_impl.LEMMA_CODES)
scan_lemma = _impl.scan_lemma


def backend_name() -> str:
    """"cython" when the compiled scan core is in use, else "python"."""
    return BACKEND_NAME
