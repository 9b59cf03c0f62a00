"""Exact Specht module homomorphisms for Hecke algebras of symmetric groups."""

from .carter_payne import (
    CPInstance,
    CPVerification,
    OutsideProvenScope,
    adjacent_map,
    cp_eligible,
    one_node_map,
    predicted_hom_dim,
    trivial_hom_exists,
    verify_cp,
)
from .hecke import (
    HeckeElement,
    ModuleVector,
    SpechtModule,
    act_element,
    act_gen,
    act_word,
    basis_vector,
    specht_generator,
    spin_specht,
)
from .homs import (
    HomSpec,
    compose_psi_theta,
    hom_space_dim,
    one_node_conditions_check,
    psi_dt,
    restriction_into_specht,
    restriction_is_zero,
    specht_membership,
    theta_on_generator,
    transfer_column_removal,
    transfer_row_removal,
)
from .partitions import (
    conjugate,
    dominates,
    hook_length,
    is_2regular,
    nu_composition,
    partitions_of,
    trim_first_column,
    trim_first_row,
)
from .qfield import (
    Cyclotomic,
    FieldSpec,
    PrimeExtension,
    PrimeField,
    QuantumProfile,
    Scalar,
    bstar,
    ell_p,
    nu_ep,
    parse_field,
    prime_extension_auto,
    qbinom,
    qbinom_sum_oracle,
    qfact,
    qint,
    quantum_char,
    spec_for_profile,
    vanish_run,
    vanish_run_direct,
)
from .reducibility import (
    ReducibilityReport,
    classify_range,
    hook_divisibility_witness,
    is_ep_reducible,
)
from .tableaux import (
    OneNodeCode,
    Tableau,
    coset_reps,
    enumerate_row_standard,
    enumerate_semistandard,
    enumerate_standard,
    one_node_codes,
    perm_of_tableau,
    row_equiv_class,
    standard_count,
    t_col,
    t_row,
    w_lambda,
)

__version__ = "0.1.0"
