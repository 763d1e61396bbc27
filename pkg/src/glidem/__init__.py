"""glidem: exact idempotent geometry in matrix algebras through GL.

An exact-arithmetic workbench over Q and prime fields F_p (p >= 5) for the
geometry of idempotents, involutions, and their right-ideal classes in M_n,
together with the general linear group machinery that characterizes them:
class-2 elements and their conjugation witnesses, centralizer and
double-centralizer structure, sign-tagged involution families with their
four closure properties and maximality, and the transport of idempotent
classes along catalog isomorphisms of GL.

Everything is verified two ways: exhaustively over small finite fields and
on seeded samples over the rationals.  No floating point exists anywhere.
"""

from .scalars import GF, QQ, PrimeFieldDomain, RationalDomain
from .matrices import (
    BlockFrame,
    Mat,
    RightIdeal,
    block_decompose,
    enumerate_idempotents,
    enumerate_invertibles,
    enumerate_involutions,
    enumerate_matrices,
    enumerate_square_zero,
    fixed_space,
    joint_kernel,
    make_rng,
    sample_idempotent,
    sample_invertible,
    sample_involution,
    sample_matrix,
    sample_nilpotent_square_zero,
    similarity_to_projection,
)
from .idempotents import (
    class_members,
    involution_rigidity,
    iota,
    iota_inv,
    plus_minus_space,
    same_right_ideal,
)
from .classtwo import (
    NilpotentFrame,
    centralizer_form_check,
    double_centralizer_structure,
    is_class_two,
    nilpotent_frame,
    sample_class_two,
    witness_u_r,
)
from .centralizers import (
    CommutantBasis,
    commutant_basis,
    condition_one,
    double_commutant_basis,
    theorem_c_decide,
)
from .deltasets import (
    DeltaSet,
    PhiSample,
    all_delta_sets,
    annihilator_invariance_check,
    contains,
    delta_minus,
    delta_plus,
    enumerate_delta,
    fixed_space_of_square,
    maximality_check,
    property_a,
    property_b_solve,
    property_c_normalizer,
    property_d_square,
)
from .transport import (
    IsoSpec,
    apply_iso,
    check_minus_one,
    iso_identity,
    iso_inner,
    iso_transpose_inverse,
    orientation,
    theta,
    theta_tilde,
    verify_orientation_propagation,
    verify_theorem_d,
)

__version__ = "0.1.0"
