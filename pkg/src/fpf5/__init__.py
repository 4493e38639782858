"""Exact linear algebra and matrix-group certificates around order-5 fixed-point-free actions."""

from .ring import CoeffRing, gf, gf_quadratic, zmod
from .matrix import Mat, HowellForm, howell, right_kernel, linsolve, nullspace, rref

__version__ = "0.1.0"

__all__ = [
    "CoeffRing",
    "gf",
    "gf_quadratic",
    "zmod",
    "Mat",
    "HowellForm",
    "howell",
    "right_kernel",
    "linsolve",
    "nullspace",
    "rref",
    "__version__",
]
