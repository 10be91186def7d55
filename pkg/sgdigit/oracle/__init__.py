"""
Brute-force references and agreement sweeps.
"""

from sgdigit.oracle.reference import brute_length, brute_delta, brute_ld_closure
from sgdigit.oracle.sweep import SweepReport, sweep, sweep_offsets

__all__ = [
    'brute_length',
    'brute_delta',
    'brute_ld_closure',
    'SweepReport',
    'sweep',
    'sweep_offsets',
]
