"""Exact computations for orbit Dirichlet series of products of maps whose
orbit counts follow subgroup growth of free abelian groups."""

from .combinatorics import (
    Partition,
    MultisetWord,
    DescentData,
    make_partition,
    dual,
    is_rectangle,
    enumerate_words,
    descent_data,
    circ,
    max_des_word,
)
from .polyalg import BivarPoly, RationalSeries, q_binomial, series_coeffs, hadamard_truncated
from .carlitz import (
    cpoly_enum,
    cpoly_macmahon,
    descent_poly,
    funeq_check,
    charney_davis,
    unitary_factor,
    conjecture_scan,
)
from .orbit import (
    subgroup_count,
    fixed_points,
    orbit_count_prime_power,
    orbit_count,
    euler_factor,
    euler_funeq_check,
    dirichlet_coeffs,
    asymptotic_fit,
)
from .analysis import (
    w_poly,
    newton_data,
    ghost_factor,
    b_polynomials,
    natural_boundary_report,
    nu_coefficients,
    igusa_check,
    reduced_series,
    hilbert_sd_simplex,
)

__version__ = "0.1.0"
