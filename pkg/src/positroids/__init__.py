"""Positroids: combinatorial encodings, polytopes, and non-crossing
decompositions."""

from .bijections import (
    DecoratedPermutation,
    GrassmannNecklace,
    LeDiagram,
    decorated_perm,
    envelope,
    gale_leq,
    is_positroid,
    le_diagram,
    le_diagrams,
    le_of_perm,
    necklace_of,
    necklace_of_perm,
    perm_direct_sum,
    perm_of_le,
    perm_of_necklace,
    positroid_of_necklace,
    weak_excedance_count,
)
from .counting import (
    CountSequence,
    count_connected_bruteforce,
    decorated_permutations,
    enumerate_positroids,
    free_cumulants_from_moments,
    lagrange_check,
    nc_transform,
    p_count,
    pc_count,
    shifted_exp_moment,
)
from .errors import PositroidError
from .matroid import (
    Matroid,
    SetPartition,
    connected_components,
    contract,
    cyclic_shift,
    direct_sum,
    dual,
    is_connected,
    make_matroid,
    make_partition,
    matroid_on,
    rank,
    restrict,
    standardize,
    uniform,
)
from .noncrossing import (
    NonCrossingPartition,
    WeightedNCPartition,
    finest_nc_of_perm,
    is_noncrossing,
    is_sif,
    kreweras,
    make_nc,
    nc_of_positroid,
    ncd_covers,
    ncd_leq,
    noncrossing_partitions,
    positroid_from_nc,
    weighted_nc,
)
from .plabic import (
    PerfectOrientation,
    PlabicGraph,
    bases_via_flows,
    canonical_orientation,
    enumerate_perfect_orientations,
    exchange_via_path,
    matroid_of_plabic,
    plabic_of_le,
    trip_perm,
)
from .polytope import (
    FacePoset,
    FacePosetNode,
    HDescription,
    cyclic_interval,
    cyclic_rank_description,
    dimension,
    face_for_flag,
    face_poset,
    h_description,
    pi_star,
    rank_h_description,
    vertices_01,
    weighted_nc_of_face,
)
from .serialize import dumps, from_document, loads, to_document

__version__ = "0.1.0"
