"""splitwitness: exact splitting-field computations and machine-verified
witnesses of algebraic numbers whose positive powers all avoid a given
splitting field."""

__version__ = "0.1.0"

from .polynomials import Poly, BiPoly  # noqa: F401
from .numberfield import NumberField, NFElement  # noqa: F401
