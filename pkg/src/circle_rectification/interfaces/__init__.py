"""
Abstract interfaces for the circle rectification toolkit.

This module provides the abstraction that lets metrics be pulled back and
point sets be rectified by interchangeable maps of space.
"""

from .space_map import SpaceMap

__all__ = ['SpaceMap']
