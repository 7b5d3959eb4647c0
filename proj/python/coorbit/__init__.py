"""Numerical toolkit for frames, dual frames, and weighted co-orbit norms."""

from ._coorbit import (  # noqa: F401
    CrossGram,
    DualPair,
    Frame,
    FrameBounds,
    Weight,
    analysis,
    canonical_dual,
    canonical_pair,
    coorbit_norm,
    fixed_point_residual,
    frame_bounds,
    frame_operator,
    gram_opnorm_linf_w,
    inner,
    l1_inv_w_norm,
    linf_w_norm,
    localization_profile,
    materialize_frame,
    mercedes_frame,
    onb_counterexample,
    range_basis,
    seminorm,
    synthesis,
    verify_dual,
    verify_projection_identity,
    __version__,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
