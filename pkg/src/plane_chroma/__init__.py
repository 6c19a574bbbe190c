"""Unit distance graphs in the plane: placements, colourings and distance bounds."""
from .errors import PlaneChromaError
from .precision import mp

__version__ = "0.1.0"
__all__ = ["PlaneChromaError", "mp", "__version__"]
