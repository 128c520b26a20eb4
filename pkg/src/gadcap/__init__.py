"""Capacity bounds for the generalized amplitude damping channel."""

from .gadc import GadcParams, ThermalParams, gadc_channel, gadc_choi

__all__ = ["GadcParams", "ThermalParams", "gadc_channel", "gadc_choi"]
__version__ = "0.1.0"
