"""Optionale JIT-Kompilierung der Gitter-Kernel über numba.

Ohne numba laufen dieselben Funktionen als normales Python (langsamer,
identische Ergebnisse).
"""

try:
    from numba import njit
except ImportError:
    def njit(*args, **kwargs):
        # Unterstützt @njit und @njit(cache=True)
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]

        def decorator(fn):
            return fn

        return decorator


__all__ = ["njit"]
