"""Exact toolkit for Wiener-index extremality of sphere quadrangulations."""

from .analyze import (
    Degree3Profile,
    SeparatingCycle,
    degree3_profile,
    glue_at_cycle,
    is_three_connected,
    min_degree,
    minimum_separating_cycle,
    separating_four_cycles,
    split_at_cycle,
)
from .bounds import (
    conjectured_max,
    dec_bound,
    level_bound_second_three,
    level_bound_three,
    level_bound_two,
)
from .construct import build_qn, fixture, from_faces
from .embed import (
    EmbeddedGraph,
    Quadrangulation,
    build_embedded,
    canonical_code,
    canonical_form,
    faces,
    maps_isomorphic,
    read_planar_code,
    validate_quadrangulation,
    write_planar_code,
)
from .enumeration import EnumerationRun, brute_force_codes, enumerate_quadrangulations
from .metrics import LevelStructure, level_structure, status, wiener_index
from .surgery import (
    SurgeryCertificate,
    contract_to_x,
    dec,
    delete_degree2,
    good_vertex_surgery,
    min_dec,
)

__version__ = "0.1.0"

__all__ = [
    "Degree3Profile",
    "EmbeddedGraph",
    "EnumerationRun",
    "LevelStructure",
    "Quadrangulation",
    "SeparatingCycle",
    "SurgeryCertificate",
    "build_embedded",
    "build_qn",
    "brute_force_codes",
    "canonical_code",
    "canonical_form",
    "conjectured_max",
    "contract_to_x",
    "dec",
    "dec_bound",
    "degree3_profile",
    "delete_degree2",
    "enumerate_quadrangulations",
    "faces",
    "fixture",
    "from_faces",
    "glue_at_cycle",
    "good_vertex_surgery",
    "is_three_connected",
    "level_bound_second_three",
    "level_bound_three",
    "level_bound_two",
    "level_structure",
    "maps_isomorphic",
    "min_dec",
    "min_degree",
    "minimum_separating_cycle",
    "read_planar_code",
    "separating_four_cycles",
    "split_at_cycle",
    "status",
    "validate_quadrangulation",
    "wiener_index",
    "write_planar_code",
]
