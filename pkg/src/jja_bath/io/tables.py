"""CSV rendering with the parameter-echo and units header lines."""

import io
from typing import Any, Mapping

import pandas as pd

UNITS_LINE = "# units: hbar=k_B=e=1"


def _format_value(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value).replace(" ", "_")


def _parse_value(text: str) -> Any:
    if text in ("true", "false"):
        return text == "true"
    for cast in (int, float):
        try:
            return cast(text)
        except ValueError:
            continue
    return text


def header_line(source: str, params: Mapping[str, Any]) -> str:
    """`# source=<tag> key=value ...` in insertion order."""
    fields = [f"source={source}"]
    fields.extend(f"{key}={_format_value(value)}" for key, value in params.items())
    return "# " + " ".join(fields)


def render_csv(frame: pd.DataFrame, source: str, params: Mapping[str, Any]) -> str:
    """Serialize a table behind the two comment lines every artifact carries."""
    body = frame.to_csv(index=False, lineterminator="\n")
    return f"{header_line(source, params)}\n{UNITS_LINE}\n{body}"


def parse_csv(text: str) -> tuple[str, dict[str, Any], pd.DataFrame]:
    """
    Inverse of render_csv.

    Returns:
        (source tag, echoed parameters, table).

    Raises:
        ValueError: If the parameter echo line is missing.
    """
    lines = text.splitlines()
    if not lines or not lines[0].startswith("# source="):
        raise ValueError("CSV artifact is missing its '# source=' header line")
    params: dict[str, Any] = {}
    for token in lines[0][2:].split():
        key, _, value = token.partition("=")
        params[key] = _parse_value(value)
    source = str(params.pop("source"))
    body = "\n".join(line for line in lines[1:] if not line.startswith("#"))
    frame = pd.read_csv(io.StringIO(body))
    return source, params, frame
