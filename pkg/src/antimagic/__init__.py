"""Local antimagic labelings of graphs: generators, block constructions,
verified certificates, exact search and bounds."""

from .bounds import (
    BoundReport,
    SearchResult,
    chi_la_exact,
    chromatic_number,
    lexi_lower_bound,
    odd_girth,
    search_local_antimagic,
)
from .constructions import (
    ConstructionCertificate,
    compose_lexi,
    expand_copies,
    expand_null_fiber,
    label_join_cycle_null,
)
from .graphs import (
    Graph,
    complete_bipartite,
    cycle,
    disjoint_copies,
    generate,
    join,
    lexicographic,
    null,
    octahedron,
    one_point_union,
    prism,
)
from .labelings import (
    EdgeLabeling,
    VerificationReport,
    check_copy_conditions,
    check_product_conditions,
    guide_of,
    induced_sums,
    to_matrix,
    verify,
)
from .magic import MagicRectangle, magic_rectangle, magic_square, offset_block

__all__ = [name for name in dir() if not name.startswith("_")]
