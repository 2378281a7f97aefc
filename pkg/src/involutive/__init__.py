"""Involutive completion of monomial sets under eight involutive divisions."""

from .completion import (
    CapExceeded,
    CompletionResult,
    CompletionStats,
    DegreeCapExceeded,
    ElementCapExceeded,
    Limits,
    complete,
    find_involutive_divisor,
    is_involutive,
    is_involutively_autoreduced,
    longest_common_prefix_class,
    update_separations,
)
from .division import DivisionKind, axiom_check, cone_member, separation, separation_table
from .monomial import MonomialSet, Ordering, autoreduce, compare, divides, lcm, multiply

__version__ = "0.1.0"
