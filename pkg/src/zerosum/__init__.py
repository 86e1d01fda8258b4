"""Zero-sum free sequences and subset sums in Z_p."""

from zerosum.core import ResidueSequence, dilate, translate
from zerosum.sumset import SumsetMask, sigma, sigma_l

__all__ = ["ResidueSequence", "SumsetMask", "dilate", "sigma", "sigma_l", "translate"]
__version__ = "0.1.0"
