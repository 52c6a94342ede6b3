"""Symbolic polynomial algebra and polynomial van der Waerden search."""

from ._core import (
    Coloring,
    IntPoly,
    MultiIntPoly,
    MultiSymPoly,
    PolyVdwError,
    SymPoly,
    Witness,
    analyze_truncated_s,
    ap_polys,
    encode_multi,
    encode_poly,
    eval_pmulti,
    eval_px,
    find_ap,
    find_ip_vdw,
    find_multivar_vdw,
    find_poly_vdw,
    in_ir,
    ip_sum,
    pi,
    shift,
    shift_multi,
    verify_symbolic_chain,
    verify_witness,
)

__all__ = [name for name in dir() if not name.startswith("_")]
