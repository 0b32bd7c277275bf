"""Riemann zeta at integer arguments: exact cotangent route, polygamma route, oracles."""
from .bigfloat import BigFloat
from .exact import CotChain, CotPoly, PiPower, diff_cot_poly, eval_at_one, factorial, zeta_even_exact
from .numeric import (
    PolygammaOrder,
    hurwitz_zeta,
    polygamma,
    reflection_residual,
    render_pi_power,
    zeta_via_polygamma,
)
from .oracle import BernoulliTable, bernoulli, zeta_dirichlet, zeta_even_bernoulli

__all__ = [
    "BigFloat",
    "BernoulliTable",
    "CotChain",
    "CotPoly",
    "PiPower",
    "PolygammaOrder",
    "bernoulli",
    "diff_cot_poly",
    "eval_at_one",
    "factorial",
    "hurwitz_zeta",
    "polygamma",
    "reflection_residual",
    "render_pi_power",
    "zeta_dirichlet",
    "zeta_even_bernoulli",
    "zeta_even_exact",
    "zeta_via_polygamma",
]
