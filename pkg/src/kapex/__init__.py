"""Exact AZI / ABC indices, apex numbers and extremal-graph verification."""

__version__ = "0.1.0"

from .graph import Graph, GraphError  # noqa: E402
from .indices import abc_alpha, azi, psi  # noqa: E402
from .apex import apex_number  # noqa: E402
from .canon import canonical_form  # noqa: E402
from .graph6 import from_graph6, to_graph6  # noqa: E402

__all__ = ["Graph", "GraphError", "abc_alpha", "azi", "psi", "apex_number", "canonical_form",
           "from_graph6", "to_graph6", "__version__"]
