"""Congruence families; importing this package registers every builder"""

from . import depth2, depth3, harmonic, higher, homogeneous, structural, weight4

__all__ = (
    "depth2",
    "depth3",
    "harmonic",
    "higher",
    "homogeneous",
    "structural",
    "weight4",
)
