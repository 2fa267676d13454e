"""Exact q-expansion arithmetic for level-1 modular forms.

The heavy lifting lives in the `_core` extension module; this package adds
thin conveniences (JSON decoding for the verification reports).
"""

import json as _json

from ._core import (
    ConstantTermNonzero,
    DenominatorNotInvertible,
    ExprSyntaxError,
    InvalidParams,
    ModularExpansion,
    NotInSpan,
    OutOfPrecision,
    PoleTooDeep,
    QExpansion,
    UnknownGenerator,
    WeightMismatch,
    WholoError,
    ZeroLeadingCoefficient,
    __version__,
    bernoulli,
    delta,
    delta_eta,
    delta_nonordinary_residue,
    eisenstein,
    eisenstein_mod_24_ok,
    eisenstein_mod_p_ok,
    evaluate,
    g_power_congruence,
    infer_weight,
    j_invariant,
    miller_basis,
    reduce_mod,
    render_parsed,
    sigma,
    wh_basis,
)
from ._core import theta_decompose_json as _theta_decompose_json
from ._core import verify_jmo_json as _verify_jmo_json
from ._core import verify_main_json as _verify_main_json


def verify_main(p, t, r=None, m=None, prec=None):
    """Run one main-theorem verification; returns the report as a dict."""
    return _json.loads(_verify_main_json(p, t, r, m, prec))


def verify_jmo(p, r, s, t, u=1, prec=None):
    """Run one s != 2 companion-congruence verification; returns a dict."""
    return _json.loads(_verify_jmo_json(p, r, s, t, u, prec))


def theta_decompose(expression, prec=20):
    """Certificate {Q, constant_term} for a weight-2 expression."""
    return _json.loads(_theta_decompose_json(expression, prec))


__all__ = [
    "ConstantTermNonzero",
    "DenominatorNotInvertible",
    "ExprSyntaxError",
    "InvalidParams",
    "ModularExpansion",
    "NotInSpan",
    "OutOfPrecision",
    "PoleTooDeep",
    "QExpansion",
    "UnknownGenerator",
    "WeightMismatch",
    "WholoError",
    "ZeroLeadingCoefficient",
    "__version__",
    "bernoulli",
    "delta",
    "delta_eta",
    "delta_nonordinary_residue",
    "eisenstein",
    "eisenstein_mod_24_ok",
    "eisenstein_mod_p_ok",
    "evaluate",
    "g_power_congruence",
    "infer_weight",
    "j_invariant",
    "miller_basis",
    "reduce_mod",
    "render_parsed",
    "sigma",
    "theta_decompose",
    "verify_jmo",
    "verify_main",
    "wh_basis",
]
