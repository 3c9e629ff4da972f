"""Göllnitz-Gordon partitions, signed Göllnitz-Gordon partitions, and the
weight- and length-preserving bijection between them."""

from .bijection import (
    BijectionReport,
    ConsistencyError,
    MembershipError,
    forward_g,
    forward_raw,
    inverse_h,
    verify_bijection,
)
from .families import (
    FamilyId,
    count_A,
    count_B,
    count_C,
    count_G,
    count_S,
    enumerate_G,
    enumerate_S,
    is_gollnitz_gordon,
    is_signed_gg,
)
from .partitions import (
    Partition,
    PartitionError,
    SignedPartition,
    from_frequencies,
    length,
    parity,
    signed_weight,
    to_frequencies,
    weight,
)
from .qseries import (
    IdentityReport,
    TruncatedSeries,
    geometric_inverse_factor,
    lhs_rewritten,
    lhs_slater,
    rhs_product,
    series_add,
    series_mul,
    verify_identity,
)

__version__ = "0.1.0"
