"""Exact computation of Johnson homomorphisms and Casson-core values
for products of Dehn twists along bounding simple closed curves."""

from .tensor import (
    DegreeMismatchError,
    DomainError,
    Tensor,
    bracket,
    cyclicize,
    dynkin_defect,
    exp_series,
    extract,
    log_series,
    product,
    render,
    top_degree,
    truncate,
)
from .surface import (
    BarcodeError,
    HVector,
    barcode_homology,
    barcode_to_word,
    boundary_barcode,
    commutator_barcode,
    conjugate_barcode,
    free_reduce,
    omega,
)
from .expansion import SymplecticExpansion, default_expansion, log_theta, symplectic_defect, theta
from .johnson import (
    Derivation,
    L_k,
    TwistEntry,
    apply_derivation,
    as_derivation,
    derivation_bracket,
    tau2,
    tau3,
)
from .diagrams import DiagramSum, OdotSymbol, TreeDiagram, eta, kappa, morita_tau2, odot, tree
from .casson import (
    CassonReport,
    CertificateError,
    d_core,
    d_prime,
    dbar_prime,
    lambda_J3,
    twist_audit,
)
from .psi_data import load_psi, psi_twist_entries
