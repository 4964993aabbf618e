"""Rough-set approximations and rough graphs built from categorical decision tables."""

from importlib import resources

from .approximation import (
    ApproximationResult,
    MembershipMap,
    approximate,
    boundary,
    lower_approximation,
    membership,
    membership_map,
    upper_approximation,
)
from .errors import RoughSetError
from .graph_ops import (
    ProductVertex,
    cartesian_product,
    generate_grid,
    generate_ladder,
    matches_grid,
    matches_ladder,
    product_degree,
    rough_join,
    rough_union,
)
from .information_system import (
    InformationSystem,
    ObjectSet,
    Partition,
    parse_decision_table,
    partition,
    read_decision_table,
    target_set,
)
from .rough_graph import (
    RoughGraph,
    degree,
    edge_count,
    from_information_system,
    from_membership,
    generate_complete,
    generate_cycle,
    generate_path,
    is_complete,
    is_connected,
    is_pendant_free,
    is_regular,
    max_degree,
    min_degree,
    vertex_count,
)
from .traversal import (
    extract_rough_path,
    find_rough_path,
    is_rough_cycle,
    is_rough_path,
    is_rough_trail,
    is_rough_walk,
)


def sample_table(name: str) -> InformationSystem:
    """Load a bundled table: ``"table1"`` (diabetes), ``"table2"`` (grades) or ``"table3"`` (churn)."""
    text = resources.files(__package__).joinpath("data", f"{name}.csv").read_text(encoding="utf-8")
    return parse_decision_table(text)
