"""Numerical semigroups, hook sets of partitions, and the anti-atom problem.

The hook set of an integer partition is always the complement of a numerical
semigroup S, and the partitions with hook set N \\ S correspond to the
numerical sets whose atom monoid is S.  This package computes that finite
family for any semigroup, decides whether the semigroup's own partition is
the smallest one (lambda-minimality), and exhaustively scans semigroups by
genus or Frobenius number.
"""

from .core import NumericalSemigroup, NumericalSet, from_json
from .partitions import (Partition, enumeration, hook_length, numerical_set_of,
                         render_young, sections, size_via_gap_count, walk_string)
from .voidposet import IdealTriangle, VoidPoset
from .solver import (AntiAtomSolution, AssociatedSetReport, durfee_gap_condition,
                     is_lambda_minimal, set_counting_decomposition, solve,
                     type3_profile)
from .enumerate import (BoundExceeded, EnumerationQuery, ScanResult,
                        genus_counts, scan_minimality, semigroups_by_frobenius,
                        semigroups_by_genus)
from .families import (FamilyInstance, asymptotic_ratio, interval_k,
                       interval_m, staircase, validate)

__version__ = "0.1.0"

__all__ = [
    "NumericalSet", "NumericalSemigroup", "from_json",
    "Partition", "enumeration", "numerical_set_of", "size_via_gap_count",
    "hook_length", "sections", "render_young", "walk_string",
    "VoidPoset", "IdealTriangle",
    "AntiAtomSolution", "AssociatedSetReport", "solve", "is_lambda_minimal",
    "set_counting_decomposition", "type3_profile", "durfee_gap_condition",
    "EnumerationQuery", "ScanResult", "BoundExceeded", "genus_counts",
    "semigroups_by_genus", "semigroups_by_frobenius", "scan_minimality",
    "FamilyInstance", "staircase", "interval_m", "interval_k", "validate",
    "asymptotic_ratio",
    "__version__",
]
