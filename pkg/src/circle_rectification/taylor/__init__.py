"""
Taylor coefficients of bundle members: exact polynomials in the tangent
parameters, closed forms and identities, numeric extraction and the
rectifiability diagnostic.
"""

from .diagnostics import DiagnosticReport, Verdict, fit_bivariate, rectifiability_diagnostic
from .expansions import (
    DEGREE_BOUNDS,
    DegreeReport,
    TaylorSextet,
    closed_taylor,
    closed_taylor_values,
    degree_report,
    divisibility_chain,
    identity_check_fourth_order,
    identity_check_mixed,
    identity_check_third_order,
    numeric_taylor,
    symmetry_check,
    symmetry_violations,
)
from .polynomials import BivarPoly, divides, fundamental_factor, monomials_up_to, poly_divrem, to_text

__all__ = [
    'DiagnosticReport', 'Verdict', 'fit_bivariate', 'rectifiability_diagnostic',
    'DEGREE_BOUNDS', 'DegreeReport', 'TaylorSextet', 'closed_taylor', 'closed_taylor_values',
    'degree_report', 'divisibility_chain', 'identity_check_fourth_order', 'identity_check_mixed',
    'identity_check_third_order', 'numeric_taylor', 'symmetry_check', 'symmetry_violations',
    'BivarPoly', 'divides', 'fundamental_factor', 'monomials_up_to', 'poly_divrem', 'to_text',
]
