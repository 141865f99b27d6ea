"""Figure rendering for dirichlet-hardy scan CSVs."""

from .render import KINDS, PlotJob, least_squares_line, render
from .schemas import SCHEMAS, SchemaError, read_rows

__all__ = ["KINDS", "PlotJob", "SCHEMAS", "SchemaError",
           "least_squares_line", "read_rows", "render"]

__version__ = "0.1.0"
