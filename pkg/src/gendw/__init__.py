"""Generalized Dijkgraaf-Witten invariants of (ideal) triangulated 3-manifolds.

Typical use::

    from gendw import cyclic_group, cyclic_generator_cocycle, invariant, load_triangulation

    z = invariant(load_triangulation("m004"), cyclic_group(5), cyclic_generator_cocycle(5, 1))
"""
from __future__ import annotations

from .branching import (
    DEFAULT_MAX_MOVES,
    Branching,
    SearchExhausted,
    find_branching,
    make_orderable,
    tet_signs,
)
from .census import CENSUS, load_formula, load_triangulation
from .cohomology import (
    Cochain2,
    Cochain3,
    FiniteGroup,
    NotACocycle,
    coboundary2,
    cochain_product,
    cyclic_generator_cocycle,
    cyclic_group,
    is_cocycle,
    load_cocycle,
    random_cochain2,
    symmetric_group,
)
from .cyclotomic import CyclotomicNumber, cyclotomic_polynomial, root_of_unity
from .isosig import from_isosig
from .pachner import (
    EdgeNotTrivalent,
    FaceSelfAdjacent,
    PachnerError,
    TetrahedraNotDistinct,
    pachner_14,
    pachner_23,
    pachner_32,
    random_moves,
)
from .statesum import (
    InvariantResult,
    ReducedFormula,
    compute,
    derive_formula,
    enumerate_colorings,
    invariant,
    reduced_sum_oracle,
    state_sum,
    symbol,
)
from .triangulation import (
    EdgeClass,
    NonOrientable,
    ParseError,
    Triangulation,
    TriangulationError,
    VertexClass,
    canonical_form,
    edge_classes,
    euler_characteristic,
    face_classes,
    is_isomorphic,
    mirror,
    parse_triangulation,
    validate_orientation,
    vertex_classes,
)

__version__ = "0.1.0"
