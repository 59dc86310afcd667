"""Finite quandles, displacement groups and the quandle Euler characteristic.

The Euler characteristic of a finite quandle X is the smallest number of
points fixed by an element of the displacement group Dis(X), the group
generated by all s_x s_y^{-1}.

>>> from quandle_euler import discrete_sphere, euler_characteristic
>>> euler_characteristic(discrete_sphere(2)).value
2
"""

from .closure import DEFAULT_CAP, ClosureResult, ClosureStream, close, group_order
from .constructors import (
    WeightedGraphSpec,
    core,
    cycle_graph_spec,
    cycle_quandle,
    dihedral,
    discrete_sphere,
    discrete_torus,
    galex,
    graph_quandle,
    path_graph_spec,
    path_quandle,
    trivial,
)
from .errors import *  # noqa: F401,F403
from .euler import EulerReport, euler_characteristic, euler_graph_fast, euler_with_search, zero_witness_search
from .groups import (
    FiniteGroup,
    cyclic,
    direct_product_group,
    from_table,
    is_abelian,
    is_elementary_abelian_2,
    symmetric_group,
    validate_automorphism,
)
from .jsonspec import parse_spec, quandle_to_json, resolve, resolve_graph_spec
from .permutation import Permutation, compose, fixed_point_count, fixed_points, identity, inverse, parse_cycles
from .quandle import (
    FiniteQuandle,
    direct_product,
    displacement_generators,
    find_automorphism,
    free_union,
    inner_generators,
    is_connected,
    is_homogeneous,
    is_trivial,
    orbits,
    point_symmetry,
    relabel,
    validate,
)

__version__ = "0.1.0"
