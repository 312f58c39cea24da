"""CSV tables and the artifact store."""

from jja_bath.io.artifacts import ArtifactStore, json_ready
from jja_bath.io.tables import UNITS_LINE, header_line, parse_csv, render_csv

__all__ = ["ArtifactStore", "json_ready", "UNITS_LINE", "header_line", "parse_csv", "render_csv"]
