"""
Core package for sgdigit.

This package contains the digit expansions, the submonoid machinery, the
length-set classes and the digital semigroups built on them.
"""

from sgdigit.core.digits import Base, DigitString, LengthBand
from sgdigit.core.monoid import Submonoid
from sgdigit.core.ldsg import LDClass, ClosureTrace
from sgdigit.core.digital import DigitalSemigroup, PredicateSet, Verdict

__all__ = [
    'Base',
    'DigitString',
    'LengthBand',
    'Submonoid',
    'LDClass',
    'ClosureTrace',
    'DigitalSemigroup',
    'PredicateSet',
    'Verdict',
]
