"""Exact weight-module computations for Weyl and Clifford superalgebras."""

from .weights import (
    INFINITE,
    AlgebraKind,
    AlgebraSignature,
    ClassicalWeight,
    Hom,
    RootVector,
    Weight,
    approx_equiv,
    approx_equiv_zero,
    clifford,
    f_correspondence,
    f_linear,
    is_in_h_vee,
    same_block,
    weight_difference,
    weight_parity,
    weyl,
)
from .algebra import (
    AlgebraElement,
    GeneratorSymbol,
    GenKind,
    Subalgebra,
    SuperMonomial,
    cl_weyl_iso,
    dagger_transport,
    gradings,
    multiply,
    normal_form,
    split_tensor,
    subalgebra_member,
    super_bracket,
    u_element,
)

__all__ = [name for name in dir() if not name.startswith("_")]
