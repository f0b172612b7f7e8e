"""Irreducible characters of the symmetric group by two recursive rules.

``mn_char`` follows rim-hook removal on partition sequences with a memo table;
``roi_char`` sums descent-dependent factors over standard tableaux, pruning
prefixes whose factor is zero.  Both have instrumented variants that report
how many recursive calls they made.
"""
from .analysis import (
    GrowthFit,
    Report,
    ScanRow,
    VerificationError,
    bounds_suite,
    character_table,
    cross_check_all,
    fit_growth,
    hook_scan,
    orthogonality_check,
    reproduce_tables,
)
from .murnaghan_nakayama import (
    InstrumentedResult,
    mn_char,
    mn_char_instrumented,
    mn_char_plain,
    r_lambda_determinant,
)
from .partitions import (
    BorderIndicator,
    Partition,
    PartitionError,
    border_set,
    class_size,
    conjugate,
    enumerate_hook,
    enumerate_partitions,
    hook_number_11,
    parse_partition,
    validate,
)
from .roichman import (
    QPolynomial,
    d_lambda,
    descent_set,
    enumerate_standard_tableaux,
    f1,
    hecke_char_poly,
    roi_char,
    roi_char_instrumented,
    roi_char_naive,
    roi_invocation_count,
)
from .sequence import RimHookRef, find_rim_hooks, from_sequence, normalize, remove_rim_hook, to_sequence

__version__ = "0.1.0"
