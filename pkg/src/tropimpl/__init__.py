"""Tropical implicitization of parametric surfaces."""

__version__ = "0.1.0"
