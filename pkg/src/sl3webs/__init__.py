"""Exact integer coordinates for non-elliptic SL3-web basis elements on closed surfaces.

Local coordinate systems for webs in the annulus (`annulus`) and the pair of
pants (`pants`), oriented pants decompositions (`decomposition`), the global
coordinate map with exact membership tests and inverse reconstruction
(`surface`), and exhaustive desk-scale verification sweeps (`oracle`).
"""

from .annulus import (
    AnnulusDescriptor,
    TwistTuple,
    WebKind,
    canonical_descriptor,
    twist_coords,
    validate,
)
from .decomposition import (
    CCW,
    CW,
    DecompositionGraph,
    Pants,
    Slot,
    standard_graph,
    validate_graph,
)
from .errors import (
    BadGenus,
    BoxTooLarge,
    CounterexampleFound,
    CountMismatch,
    DanglingSide,
    Disconnected,
    ImageViolation,
    InvalidDescriptor,
    LengthMismatch,
    NonIntegral,
    NotInLambda,
    NotInTheta,
    SL3WebsError,
    WordMismatch,
)
from .oracle import BoxSpec, Report, verify_genus2, verify_pants_image, verify_torus_image
from .pants import (
    PantsTuple,
    ShearVector,
    boundary_counts,
    forward,
    forward_unchecked,
    image_check,
    invert,
    lambda_check,
    rotate,
)
from .surface import (
    GlobalCoordinate,
    SurfaceWebDescriptor,
    TorusCoordinate,
    kappa,
    reconstruct,
    theta_check,
    theta_violation,
    torus_coords,
    torus_kappa,
    torus_reconstruct,
    validate_descriptor,
)

__version__ = "0.1.0"
