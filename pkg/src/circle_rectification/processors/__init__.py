"""
Orchestrators that chain library steps into checked end-to-end runs.
"""

from .beltrami_checker import BeltramiChecker, BeltramiReport
from .rectification_pipeline import RectificationPipeline

__all__ = [
    'BeltramiChecker',
    'BeltramiReport',
    'RectificationPipeline'
]
