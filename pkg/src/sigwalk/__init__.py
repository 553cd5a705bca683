"""Exact-arithmetic Markov kernels on signatures, their quantum-walk
restrictions, and Monte Carlo simulation of the induced particle systems."""

from .sigcore import (
    DomainError,
    ResourceLimitError,
    Signature,
    Weight,
    check_signature,
    dimension,
    dominant,
    format_signature,
    interlaces,
    is_signature,
    parse_signature,
    parse_weight,
    shift,
    signatures_in_box,
    signatures_with_sum,
    weyl_act,
)
from .symfunc import (
    kostka,
    lr_coeff,
    lr_support,
    pieri_column,
    pieri_row,
    schur_bialternant,
    schur_eval,
    triple_coeff,
    weight_expansion,
    weight_multiplicity,
)
from .kernels import (
    KernelRow,
    SpectralFunction,
    alpha_minus,
    alpha_plus,
    beta_minus,
    beta_plus,
    eval_F,
    fourier_coeff,
    fourier_support,
    gamma_minus,
    gamma_plus,
    identity_spectral,
    invert,
    laurent,
    parse_spectral,
    product,
    tn_entry,
    tn_row,
)
from .quantum import (
    ClassFunction,
    character,
    kappa_of,
    normalized_character,
    pn_entry,
    qn_entry,
    torus_step,
)
from .chains import (
    StepSampler,
    Trajectory,
    make_rng,
    particle_positions,
    sample_step,
    simulate,
)

__version__ = "0.1.0"
