"""Exact-arithmetic toolkit for overpartition marking combinatorics.

Overpartitions, their two greedy markings and the cluster decomposition,
the four weight-changing local moves, the structural bijections on top of
them, the difference-condition counting families with their congruence
counterparts, truncated Laurent q-series over Q[x], and the Bailey-pair
chains that prove the counting identities analytically.
"""

from .errors import (
    ChainBroken,
    DivergentProduct,
    DuplicateOverline,
    FractionalExponent,
    GGMarkError,
    InvalidInput,
    InvalidMove,
    NotApplicable,
    NotInvertible,
    ParseError,
)
from .overpartitions import (
    Overpartition,
    Part,
    PartitionStats,
    enumerate_overpartitions,
    enumerate_partitions,
)
from .series import PochSpec, Series, XPoly, poch, pochhammer, triple_product
from .identities import identity_lhs_multisum, identity_rhs, overpartition_gf
from .marking import (
    ClusterDecomposition,
    MarkedOverpartition,
    alpha_set,
    clusters,
    gg_mark,
    gollnitz_gordon_mark,
    gordon_mark,
)
from .moves import (
    MoveReceipt,
    apply_move,
    first_dilation,
    first_reduction,
    second_dilation,
    second_reduction,
)
from .bijections import (
    NegativeDistinctPartition,
    double_parts,
    halve_parts,
    odd_merge,
    odd_split,
    overline_merge,
    overline_split,
    shift_overline,
    switch_smallest,
)
from .families import (
    ClassId,
    bivariate_class_gf,
    count_class,
    count_congruence,
    is_member,
    profile_class_closed_form,
    profile_class_gf,
    profile_gf_check,
    profile_of,
    satisfies_congruence,
)
from .bailey import (
    BaileyPair,
    ChainReport,
    EVEN_MODULUS,
    ODD_MODULUS,
    bailey_lift,
    bailey_lift_negated,
    change_base,
    combine,
    gap0_seed,
    run_chain,
    slater_E4,
    template_shift,
    verify_pair,
)

__version__ = "0.1.0"
