"""arithring: exact truncated Dirichlet-convolution rings and divisor lattices.

Arithmetic functions with exact rational (Q) or integer (Z) values on
1..N, convolution/inverse/division with triangular solves, sieve-built
classical functions, irreducibility certificates, and finite divisor-poset
analysis (minimum chain partitions, complements, distributivity).
"""

from .classical import IdentityReport, build, identity_suite
from .factorization import (
    Certificate,
    FactorizationClaim,
    FactorizationReport,
    RankSplit,
    Verdict,
    certify,
    rank_screen,
    verify_factorization,
    witness_reducible,
)
from .kernels import active_backend, set_backend, use_backend
from .lattice import (
    ChainCover,
    DivisorPoset,
    chain_cover,
    co_ideal,
    complements_of,
    euclid_factorization,
    gcd_lcm_identity_check,
    is_boolean,
    is_complemented,
    is_distributive,
    is_uniquely_complemented,
    join,
    lattice_report,
    meet,
    prime_property_check,
    to_dot,
    width,
)
from .ring import (
    ArithFunc,
    Coefficient,
    DivisionResult,
    Domain,
    DomainMismatch,
    NoVisibleRank,
    NotAUnit,
    NotInDomain,
    Rank,
    RingError,
    add,
    are_associates,
    convolve,
    divide,
    epsilon,
    inverse,
    is_unit,
    make,
    monic,
    nu,
    omega,
    rank,
    restrict,
    scale,
    with_domain,
)
from .serialize import ParseError, dump_path, from_csv, load_path, to_csv, to_json_obj

__version__ = "0.1.0"

__all__ = [
    "ArithFunc",
    "Certificate",
    "ChainCover",
    "Coefficient",
    "DivisionResult",
    "DivisorPoset",
    "Domain",
    "DomainMismatch",
    "FactorizationClaim",
    "FactorizationReport",
    "IdentityReport",
    "NoVisibleRank",
    "NotAUnit",
    "NotInDomain",
    "ParseError",
    "Rank",
    "RankSplit",
    "RingError",
    "Verdict",
    "active_backend",
    "add",
    "are_associates",
    "build",
    "certify",
    "chain_cover",
    "co_ideal",
    "complements_of",
    "convolve",
    "divide",
    "dump_path",
    "epsilon",
    "euclid_factorization",
    "from_csv",
    "gcd_lcm_identity_check",
    "identity_suite",
    "inverse",
    "is_boolean",
    "is_complemented",
    "is_distributive",
    "is_uniquely_complemented",
    "is_unit",
    "join",
    "lattice_report",
    "load_path",
    "make",
    "meet",
    "monic",
    "nu",
    "omega",
    "prime_property_check",
    "rank",
    "rank_screen",
    "restrict",
    "scale",
    "set_backend",
    "to_csv",
    "to_dot",
    "to_json_obj",
    "use_backend",
    "verify_factorization",
    "width",
    "with_domain",
    "witness_reducible",
]
