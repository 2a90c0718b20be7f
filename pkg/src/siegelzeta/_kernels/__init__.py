"""Hot-kernel backend selection.

The compiled Cython extension is preferred; the pure-numpy fallback is
selected automatically when the extension is unavailable.  Both expose the
same ``weighted_exp_sum`` contract; ``benchmarks/bench_backends.py`` compares
them.
"""

try:
    from ._corecy import BACKEND, weighted_exp_sum
except ImportError:  # pragma: no cover - depends on build environment
    from .fallback import BACKEND, weighted_exp_sum

__all__ = ["BACKEND", "weighted_exp_sum"]
