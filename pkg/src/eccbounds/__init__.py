"""Modified eccentric connectivity index: invariants, closed forms and bound checks."""

from .bounds import (
    CATALOGUE,
    BoundCheck,
    BoundId,
    BoundPreconditionError,
    InapplicableBoundError,
    Pred,
    check,
    check_all,
    check_nordhaus_gaddum,
)
from .families import ClosedFormResult, FamilyError, FamilySpec, Status, build, closed_form_xi_c, family_report
from .graph import (
    DisconnectedGraphError,
    Graph,
    Graph6Error,
    GraphError,
    complement,
    emit_edge_list,
    emit_graph6,
    from_edge_list,
    is_connected,
    parse_edge_list,
    parse_graph6,
)
from .invariants import InvariantSet, compute_all, modified_eccentric_connectivity
from .sweep import SweepConfig, SweepError, VerificationReport, connected_labeled_graphs, read_graph6_stream, sweep

__version__ = "0.1.0"

__all__ = [
    "CATALOGUE", "BoundCheck", "BoundId", "BoundPreconditionError", "InapplicableBoundError", "Pred",
    "check", "check_all", "check_nordhaus_gaddum",
    "ClosedFormResult", "FamilyError", "FamilySpec", "Status", "build", "closed_form_xi_c", "family_report",
    "DisconnectedGraphError", "Graph", "Graph6Error", "GraphError", "complement", "emit_edge_list",
    "emit_graph6", "from_edge_list", "is_connected", "parse_edge_list", "parse_graph6",
    "InvariantSet", "compute_all", "modified_eccentric_connectivity",
    "SweepConfig", "SweepError", "VerificationReport", "connected_labeled_graphs", "read_graph6_stream", "sweep",
]
