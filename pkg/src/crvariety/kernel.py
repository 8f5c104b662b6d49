"""Kernel selection: compiled extension when available, pure Python otherwise.

Set ``CRVARIETY_PURE_KERNEL=1`` to force the pure-Python twin (used by the
benchmark and by CI to exercise the fallback path).
"""

import os

if os.environ.get("CRVARIETY_PURE_KERNEL"):
    from . import _kernel_py as _impl
else:
    try:
        from . import _kernel_c as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _kernel_py as _impl  # type: ignore[no-redef]

IMPL_NAME = _impl.IMPL_NAME

ZERO = _impl.ZERO
ONE = _impl.ONE

qnorm = _impl.qnorm
qis0 = _impl.qis0
qadd = _impl.qadd
qsub = _impl.qsub
qneg = _impl.qneg
qconj = _impl.qconj
qmul = _impl.qmul
qinv = _impl.qinv
qdiv = _impl.qdiv
rref = _impl.rref
nullspace = _impl.nullspace
det = _impl.det
mat_mul = _impl.mat_mul
mat_inv = _impl.mat_inv
