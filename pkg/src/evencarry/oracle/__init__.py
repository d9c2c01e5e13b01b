"""Ground-truth computations over F_p."""

from .blocks import (KernelBasis, WeightBlock, cokernel_char, kappa_oracle, kernel_basis,
                     kernel_dims, weight_block)
from .prim import (check_in_kernel, frobenius_cycle, monomial_mult, prim_char, prim_poly,
                   vanishing_scan)

__all__ = [
    "KernelBasis", "WeightBlock", "check_in_kernel", "cokernel_char", "frobenius_cycle",
    "kappa_oracle", "kernel_basis", "kernel_dims", "monomial_mult", "prim_char", "prim_poly",
    "vanishing_scan", "weight_block",
]
