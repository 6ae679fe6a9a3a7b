"""Kernel selection: compiled extension if available, numpy fallback otherwise.

Set ``BRANDTKIT_PURE=1`` to force the fallback (used by the benchmark and
for debugging).
"""

import os

if os.environ.get("BRANDTKIT_PURE", "") not in ("", "0"):
    from . import _check_py as _impl
else:
    try:
        from . import _check_c as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _check_py as _impl

BACKEND = "compiled" if _impl.__name__.endswith("_check_c") else "pure-python"

check_words_equal = _impl.check_words_equal
check_word_constant = _impl.check_word_constant
