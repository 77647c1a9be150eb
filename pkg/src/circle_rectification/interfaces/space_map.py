"""
Abstract interface for smooth maps of regions of R^3.

This module defines the SpaceMap interface implemented by the affine
characteristic maps, inversions and the identity.
"""

from abc import ABC, abstractmethod
from typing import Sequence

import numpy as np


class SpaceMap(ABC):
    """Abstract interface for a smooth map of R^3 with a closed-form Jacobian."""

    @property
    @abstractmethod
    def name(self) -> str:
        """
        Short identifier used in reports.

        Returns:
            str: Map name, e.g. 'affine-char(+1)'
        """
        pass

    @abstractmethod
    def apply(self, x: Sequence[float]) -> np.ndarray:
        """
        Image of a point.

        Args:
            x: Point of shape (3,)

        Returns:
            np.ndarray: Image point of shape (3,)

        Raises:
            MapSingularError: If the map is undefined at x
        """
        pass

    @abstractmethod
    def jacobian(self, x: Sequence[float]) -> np.ndarray:
        """
        Jacobian matrix of the map at a point.

        Args:
            x: Point of shape (3,)

        Returns:
            np.ndarray: 3x3 matrix of partial derivatives

        Raises:
            MapSingularError: If the map is undefined or singular at x
        """
        pass

    def apply_all(self, points: Sequence[Sequence[float]]) -> np.ndarray:
        """Images of a sequence of points as an (n, 3) array."""
        return np.array([self.apply(p) for p in points])
