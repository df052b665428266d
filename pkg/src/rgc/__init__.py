"""Reductive group compactifications: orbits, colored fans, normality, smoothness."""

from .lie import LieType, RootSystem, build_root_system, parse_lie_type, parse_weight, parse_weights
from .model import CompactificationInput, build_model
from .criteria import normality_at, smoothness_at, torus_closure_normal, known_normal_shortcuts

__all__ = [
    "LieType", "RootSystem", "build_root_system",
    "parse_lie_type", "parse_weight", "parse_weights",
    "CompactificationInput", "build_model",
    "normality_at", "smoothness_at", "torus_closure_normal", "known_normal_shortcuts",
]

__version__ = "0.1.0"
