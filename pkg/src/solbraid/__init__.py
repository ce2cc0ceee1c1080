"""
solbraid: solvability and entropy analysis for subgroups of braid groups.

The library decides, for a finitely generated subgroup of the braid group
given by generator words, how the algebra of its induced puncture
permutations interacts with its dynamics: it computes the permutation
image and its derived series exactly, solves the braid word problem
through the integer coordinate action on curves, estimates and certifies
topological entropy (iterative Dynnikov growth plus Burau spectral lower
bounds, exact on three strands), and searches for positive-entropy
elements whenever the permutation image is not solvable.
"""

from .analysis import (
    EXHAUSTED,
    AnalysisConfig,
    EntropyCertificate,
    GroupAnalysisReport,
    StructureContradiction,
    SubgroupSpec,
    analyze,
    check_dlen_sandwich,
    find_positive_entropy,
    kernel_words,
    verify_kernel_abelian,
)
from .braids import (
    BraidWord,
    Permutation,
    compose,
    exponent_sum,
    inverse,
    linking_matrix,
    permutation_of,
)
from .burau import (
    B3Class,
    B3Kind,
    LaurentMatrix,
    LaurentPoly,
    b3_exact_classify,
    entropy_lower_bound,
    evaluate_on_circle,
    reduced_burau,
)
from .dynnikov import (
    Classification,
    ClassifiedWord,
    DynnikovCoords,
    EntropyConfig,
    EntropyEstimate,
    EstimateVerdict,
    apply_braid,
    apply_generator,
    canonical_loop,
    canonical_loops,
    classify,
    entropy_estimate,
    equal,
    is_trivial,
)
from .permgroups import (
    UNSOLVABLE,
    ClosureBoundExceeded,
    DerivedSeries,
    PermGroup,
    derived_length,
    derived_series,
    generate_closure,
    is_solvable,
    orbits,
)
from .reporting import emit_report, write_report_files
from .treecenter import (
    CenterKind,
    CenterPoint,
    Tree,
    canonical_center,
    orient_majority,
    verify_fixed,
)
from .twists import (
    Twist,
    TwistLattice,
    boundary_behavior,
    lattice_embed,
    twist_compose,
    twist_inverse,
)

__version__ = "0.1.0"
