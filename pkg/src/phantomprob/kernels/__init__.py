"""Uniform-sample kernels with a compiled core and a numpy fallback.

The compiled extension is preferred when importable; set the environment
variable PHANTOMPROB_PURE_PYTHON=1 to force the numpy implementation.
Both produce bit-identical output for the same (seed, stream, counter).
"""

from __future__ import annotations

import os

from ._fallback import GOLDEN, STREAM_SALT

if os.environ.get("PHANTOMPROB_PURE_PYTHON"):
    from ._fallback import BACKEND_NAME, stream_key, uniforms
else:
    try:
        from ._kernels import BACKEND_NAME, stream_key, uniforms
    except ImportError:  # pragma: no cover - build-environment dependent
        from ._fallback import BACKEND_NAME, stream_key, uniforms

__all__ = ["BACKEND_NAME", "GOLDEN", "STREAM_SALT", "stream_key", "uniforms"]
