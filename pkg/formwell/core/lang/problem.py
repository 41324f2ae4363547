"""
Problem files: one `key = value` pair per line, '#' starts a comment.

    metric = euclidean        # required: euclidean | minkowski
    f1 = (1/2)*zb1            # f1, f2, fb1, fb2 default to 0
    gauge = z1*zb1            # optional gauge function
"""

from typing import Dict, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict

from formwell.core.errors import DuplicateKey, MissingMetric, ParseError, UnknownKey, UnknownValue
from formwell.core.lang.parser import parse_expr
from formwell.core.maxwell.potential import Potential
from formwell.core.models.models import MetricKind
from formwell.core.poly.poly import Poly
from formwell.utils.logger import logger

FUNCTION_KEYS = ("f1", "f2", "fb1", "fb2")
KEYS = ("metric",) + FUNCTION_KEYS + ("gauge",)


class ProblemSpec(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    metric: MetricKind
    potential: Potential
    gauge: Optional[Poly] = None


def _split_line(raw: str, line_no: int) -> Optional[Tuple[str, int, str, int]]:
    """Returns (key, key column, value, value column) or None for a blank line."""
    text = raw.split("#", 1)[0]
    if not text.strip():
        return None
    if "=" not in text:
        col = len(text) - len(text.lstrip()) + 1
        raise ParseError("expected 'key = value'", line_no, col, ["'='"])
    key_part, value_part = text.split("=", 1)
    key = key_part.strip()
    key_col = len(key_part) - len(key_part.lstrip()) + 1
    value_col = len(key_part) + 2 + len(value_part) - len(value_part.lstrip())
    return key, key_col, value_part.strip(), value_col


def parse_problem(text: Union[str, bytes]) -> ProblemSpec:
    """
    Parse and validate a problem file.

    Raises:
        ParseError: for malformed lines or expressions, positioned in the file.
        MissingMetric, DuplicateKey, UnknownKey, UnknownValue: on invalid content.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"file is not valid UTF-8: {exc.reason}") from exc

    seen: Dict[str, int] = {}
    metric: Optional[MetricKind] = None
    functions: Dict[str, Poly] = {}
    gauge: Optional[Poly] = None

    for line_no, raw in enumerate(text.splitlines(), start=1):
        parts = _split_line(raw, line_no)
        if parts is None:
            continue
        key, key_col, value, value_col = parts
        if key not in KEYS:
            raise UnknownKey(f"unknown key {key!r}", line_no, key_col, [repr(k) for k in KEYS])
        if key in seen:
            raise DuplicateKey(f"duplicate key {key!r} (first set on line {seen[key]})", line_no, key_col)
        seen[key] = line_no

        if key == "metric":
            try:
                metric = MetricKind(value)
            except ValueError:
                valid = [m.value for m in MetricKind]
                raise UnknownValue(
                    f"unknown metric {value!r}; expected one of {', '.join(valid)}", line_no, value_col, valid
                ) from None
            continue
        try:
            poly = parse_expr(value)
        except ParseError as exc:
            raise exc.relocate(line_no, value_col - 1) from exc
        if key == "gauge":
            gauge = poly
        else:
            functions[key] = poly

    if metric is None:
        raise MissingMetric("missing required key 'metric'", 1, 1, ["'metric'"])
    spec = ProblemSpec(metric=metric, potential=Potential(**functions), gauge=gauge)
    logger.debug("parsed problem: metric=%s keys=%s", metric.value, sorted(seen))
    return spec


def read_problem(path: str) -> ProblemSpec:
    with open(path, "rb") as f:
        return parse_problem(f.read())
