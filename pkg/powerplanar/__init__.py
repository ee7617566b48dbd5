from powerplanar.catalog import Budgets, default_catalog, read_catalog, write_catalog
from powerplanar.coloring import ColoringResult, SolverLimitError, coloring
from powerplanar.descriptors import DescriptorError, build_group, parse_descriptor
from powerplanar.graphs import (
    Graph,
    GraphFormatError,
    SearchBudgetExceeded,
    blocks,
    build_power_graph,
    graph_from_named,
    read_graph,
)
from powerplanar.groups import (
    CatalogFormatError,
    Group,
    GroupError,
    GroupValidationError,
    cyclic_subgroups,
    element_order,
    ingest_cayley_table,
    omega,
)
from powerplanar.oneplanar import OnePlanarDrawing, is_1_planar, validate_1planar_drawing
from powerplanar.planarity import (
    Embedding,
    RingAnalysis,
    is_almost_planar,
    is_maximal_planar,
    is_outerplanar,
    is_planar,
    ring_analysis,
)
from powerplanar.subdivisions import PatternHit, contains_induced, contains_subdivision, contains_subgraph
from powerplanar.surfaces import SurfaceResult, crosscap, genus, is_projective, is_toroidal
from powerplanar.verifier import CLAIMS, Sweep, TheoremReport, UnknownClaimError, verify
