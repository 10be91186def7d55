"""
sgdigit: digit lengths, numerical monoids and b-digital semigroups.

sgdigit expands integers in positive and negative bases, computes with
finitely generated submonoids of the nonnegative integers, and relates the
two through the semigroups of integers whose digit length lies in a given
monoid.
"""

__version__ = "0.1.0"

# Import core components
from sgdigit.core.digits import Base, DigitString, LengthBand, to_digits, from_digits, length, delta_band, delta_count
from sgdigit.core.monoid import Submonoid
from sgdigit.core.ldsg import LDClass, ClosureTrace, is_ld, ld_closure, enumerate_by_genus
from sgdigit.core.digital import DigitalSemigroup, theta, complement, smallest_digital_containing, verify_closure

# Import utility functions
from sgdigit.utils.config import Settings, load_settings, get_settings, set_settings

# Define what's available for import with "from sgdigit import *"
__all__ = [
    'Base',
    'DigitString',
    'LengthBand',
    'to_digits',
    'from_digits',
    'length',
    'delta_band',
    'delta_count',
    'Submonoid',
    'LDClass',
    'ClosureTrace',
    'is_ld',
    'ld_closure',
    'enumerate_by_genus',
    'DigitalSemigroup',
    'theta',
    'complement',
    'smallest_digital_containing',
    'verify_closure',
    'Settings',
    'load_settings',
    'get_settings',
    'set_settings',
]
