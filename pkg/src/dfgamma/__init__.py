"""Generalized Dumont-Foata polynomials computed five ways and cross-checked."""

from .ansatz import gamma_by_M, gamma_by_N
from .cfrac import b_coeff, gamma_by_cfrac, gamma_by_motzkin, lambda_coeff
from .escaliers import gamma_by_escaliers
from .polyring import ONE, ZERO, MultiPoly, TruncSeries, x, xb, y, yb, z, zb
from .recurrences import dumont_foata, gamma, genocchi
from .tableaux import gamma_by_tableaux

__version__ = "0.1.0"
