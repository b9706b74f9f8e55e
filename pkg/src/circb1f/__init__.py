"""Balanced 1-factorisations of 3- and 4-regular circulant graphs."""

from .balance import BalanceReport, classify_balance, pair_profile, pair_types
from .errors import B1FError
from .graph import (
    CirculantGraph,
    CycleType,
    OneFactor,
    OneFactorisation,
    connection_sets_isomorphic,
    cycle_type,
    is_connected,
    make_circulant,
    union_cycles,
    validate_factorisation,
)

__version__ = "0.1.0"
