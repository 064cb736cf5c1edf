"""Polynomial kernels: the compiled extension when it was built, else pure Python."""

from . import _pykernels

try:
    from . import _ckernels as _impl
    BACKEND = "cython"
except ImportError:  # extension not built
    _impl = _pykernels
    BACKEND = "python"

FIELD = _pykernels.FIELD
HALF = _pykernels.HALF
unpack = _pykernels.unpack

mul = _impl.mul
add = _impl.add
sub = _impl.sub
scale = _impl.scale
divexact = _impl.divexact

__all__ = ["BACKEND", "FIELD", "HALF", "unpack", "mul", "add", "sub", "scale", "divexact"]
