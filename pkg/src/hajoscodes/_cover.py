"""Search-kernel backend selection.

Prefers the compiled extension; falls back to the pure-Python twin.  Set
HAJOS_FORCE_PURE=1 to skip the extension (useful for benchmarking and as an
escape hatch for build problems).
"""

from __future__ import annotations

import os

from . import _purecover

if os.environ.get("HAJOS_FORCE_PURE"):
    _impl = _purecover
else:
    try:
        from . import _fastcover as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _purecover

BACKEND = _impl.BACKEND
exact_cover = _impl.exact_cover
factor_pairs = _impl.factor_pairs
pair_walk = _impl.pair_walk
coverage_counts = _impl.coverage_counts


def backends() -> dict[str, object]:
    """All importable kernel modules, keyed by backend name."""
    out: dict[str, object] = {_purecover.BACKEND: _purecover}
    try:
        from . import _fastcover

        out[_fastcover.BACKEND] = _fastcover
    except ImportError:
        pass
    return out
