"""
Report models and deterministic JSON/CSV writers.
"""

from .models import (
    BeltramiReportModel,
    BundleModel,
    ClassificationModel,
    CurvatureReportModel,
    DiagnosticModel,
    DirsModel,
    GenericityReportModel,
    NetModel,
    PolynomialModel,
    RectificationReportModel,
    ReportEnvelope,
    SphereModel,
    TaylorReportModel,
    curve_from_domain,
)
from .writers import dump_json, read_model, write_csv, write_json

__all__ = [
    'BeltramiReportModel', 'BundleModel', 'ClassificationModel', 'CurvatureReportModel',
    'DiagnosticModel', 'DirsModel', 'GenericityReportModel', 'NetModel', 'PolynomialModel',
    'RectificationReportModel', 'ReportEnvelope', 'SphereModel', 'TaylorReportModel',
    'curve_from_domain', 'dump_json', 'read_model', 'write_csv', 'write_json',
]
