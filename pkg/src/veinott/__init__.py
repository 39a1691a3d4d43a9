"""Finite lattices, Heyting operations, the Veinott order on sublattices and
supermodular games on lattice strategy spaces."""

from .catalog import CatalogSpec, all_lattices, build, d_family, d_lattice, parse_spec, standard_catalog
from .games import (
    EquilibriumReport,
    SupermodularGame,
    best_response,
    check_supermodular,
    random_supermodular_game,
    solve,
)
from .heyting import ResiduationReport, check_residuation, implication, subtraction
from .lattice import (
    ElementSet,
    ForbiddenSublattice,
    Lattice,
    LatticeError,
    PosetReport,
    atoms,
    check_poset,
    down_set,
    dual,
    find_forbidden_sublattice,
    from_covers,
    is_atomic,
    is_distributive,
    is_isomorphic,
    join,
    join_set,
    leq,
    lower_bounds,
    meet,
    meet_set,
    moore_closure,
)
from .sublattices import (
    CapExceeded,
    NotDistributiveError,
    SLPoset,
    VeinottFailure,
    VeinottVerdict,
    analyze,
    bottom_shift,
    enumerate_sl,
    is_sublattice,
    sublattice_closure,
    veinott_glb_bruteforce,
    veinott_glb_formula,
    veinott_leq,
    veinott_lower_bounds,
    veinott_lub_bruteforce,
    veinott_lub_formula,
)

__all__ = [
    "all_lattices",
    "analyze",
    "atoms",
    "best_response",
    "bottom_shift",
    "build",
    "CapExceeded",
    "CatalogSpec",
    "check_poset",
    "check_residuation",
    "check_supermodular",
    "d_family",
    "d_lattice",
    "down_set",
    "dual",
    "ElementSet",
    "enumerate_sl",
    "EquilibriumReport",
    "find_forbidden_sublattice",
    "ForbiddenSublattice",
    "from_covers",
    "implication",
    "is_atomic",
    "is_distributive",
    "is_isomorphic",
    "is_sublattice",
    "join",
    "join_set",
    "Lattice",
    "LatticeError",
    "leq",
    "lower_bounds",
    "meet",
    "meet_set",
    "moore_closure",
    "NotDistributiveError",
    "parse_spec",
    "PosetReport",
    "random_supermodular_game",
    "ResiduationReport",
    "SLPoset",
    "solve",
    "standard_catalog",
    "sublattice_closure",
    "subtraction",
    "SupermodularGame",
    "veinott_glb_bruteforce",
    "veinott_glb_formula",
    "veinott_leq",
    "veinott_lower_bounds",
    "veinott_lub_bruteforce",
    "veinott_lub_formula",
    "VeinottFailure",
    "VeinottVerdict",
]

__version__ = "0.1.0"
