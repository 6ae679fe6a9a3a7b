"""brandtkit: finite semigroup computation around Brandt semigroups.

Multiplication-table semigroups with congruences and quotients, builders
for Brandt and power-set semigroups, exhaustive identity checking over a
compiled kernel, rewriting of words into cell form, and classification of
inverse completely zero-simple semigroups.
"""

from . import errors
from ._kernel import BACKEND
from .constructions import (
    BrandtCoords,
    PowersetCoords,
    adjoin_identity,
    adjoin_zero,
    brandt,
    build_named,
    cyclic_group,
    exponent,
    group_product,
    phi_homomorphism,
    powerset_semigroup,
    restrict_brandt_to,
    symmetric_group_3,
    trivial_group,
)
from .core import (
    Congruence,
    ElementSet,
    FiniteSemigroup,
    GroupTable,
    Homomorphism,
    as_group,
    direct_product,
    find_isomorphism,
    from_table,
    idempotents,
    inverses_of,
    is_completely_zero_simple,
    is_inverse_semigroup,
    is_regular,
    is_zero_simple,
    principal_ideal,
    quotient_by_congruence,
    rees_quotient,
    subsemigroup,
)
from .rewrite import (
    CellForm,
    RewriteStep,
    RewriteTrace,
    apply_rule_at,
    cell_decompose,
    derive_bounded,
    eliminate_single_occurrences,
    exp_n_red_rule,
    exp_n_rule,
    format_trace,
    replay,
    star_word,
)
from .structure import (
    SeparationResult,
    StructureClass,
    classification_report,
    classify,
    excluded_set,
    minimal_ideal_report,
    rho_z,
    separate_regular_pair,
    separation_quotient,
    zero_minimal_ideals,
)
from .words import (
    Identity,
    PositiveBasis,
    Verdict,
    Word,
    abelian_brandt_basis,
    abelian_positive_basis,
    brandt_basis,
    evaluate,
    group_satisfies_w_eq_1,
    identity_holds,
    is_repeated,
    ln_identity,
    mirror,
    parse_identity,
    parse_positive_basis,
    parse_word,
    split_identity,
    trahtman_basis,
)

__version__ = "0.1.0"
