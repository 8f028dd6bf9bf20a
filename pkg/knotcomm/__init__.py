from .polynomial import IntPoly
from .certified import CertifiedReal
from .knots import KnotRecord, SeifertMatrix
from .catalog import Catalog
from .settings import Settings


__all__ = ("IntPoly", "CertifiedReal", "KnotRecord", "SeifertMatrix", "Catalog", "Settings")
