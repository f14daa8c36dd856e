"""Line-oriented text formats for set systems, matrices, slide traces,
and graphs.

Every format is one directive per line (`name: payload`), `#` starts a
comment line, blank lines are ignored, and serialization output parses
back to an equal value."""

from __future__ import annotations

from typing import Iterator

from .errors import DeltaMatroidError
from .gf2 import SymmetricBitMatrix
from .setsystem import GroundSet, SetSystem
from .slides import SlideTrace


class ParseError(DeltaMatroidError):
    """Malformed input text; the message names the offending line."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _content_lines(text: str) -> Iterator[tuple[int, str, str]]:
    """Yield (line number, directive, payload) for each non-comment line."""
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, colon, payload = line.partition(":")
        if not colon or head != head.strip() or " " in head:
            raise ParseError(no, f"expected a `name: ...` directive, got {line!r}")
        yield no, head, payload.strip()


def parse_system(text: str) -> SetSystem:
    """Read a set system: a `ground:` line, then `feasible:` lines.

    A bare `feasible:` denotes the empty set.  Feasible lines may come in
    any order and may repeat; the family is deduplicated.
    """
    ground: GroundSet | None = None
    family: list[int] = []
    last = 0
    for no, head, payload in _content_lines(text):
        last = no
        if head == "ground":
            if ground is not None:
                raise ParseError(no, "second ground line")
            try:
                ground = GroundSet(payload.split())
            except ValueError as err:
                raise ParseError(no, str(err)) from None
        elif head == "feasible":
            if ground is None:
                raise ParseError(no, "feasible line before ground line")
            try:
                family.append(ground.mask_of(payload.split()))
            except ValueError as err:
                raise ParseError(no, str(err)) from None
        else:
            raise ParseError(no, f"unrecognized directive {head!r}")
    if ground is None:
        raise ParseError(last + 1, "missing ground line")
    return SetSystem(ground, family)


def serialize_system(system: SetSystem) -> str:
    lines = ["ground: " + " ".join(system.ground.labels)]
    for member in system.family:
        lines.append(("feasible: " + " ".join(system.ground.labels_of(member))).rstrip())
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> SymmetricBitMatrix:
    """Read a symmetric 0/1 matrix: a `dim:` line, then one `row:` line
    per row with space-separated entries."""
    dim: int | None = None
    bits: list[list[int]] = []
    row_lines: list[int] = []
    last = 0
    for no, head, payload in _content_lines(text):
        last = no
        if head == "dim":
            if dim is not None:
                raise ParseError(no, "second dim line")
            try:
                dim = int(payload)
            except ValueError:
                raise ParseError(no, f"bad dimension {payload!r}") from None
            if dim < 0:
                raise ParseError(no, "negative dimension")
        elif head == "row":
            if dim is None:
                raise ParseError(no, "row line before dim line")
            entries = payload.split()
            if len(entries) != dim:
                raise ParseError(no, f"expected {dim} entries, got {len(entries)}")
            if any(e not in ("0", "1") for e in entries):
                raise ParseError(no, "matrix entries must be 0 or 1")
            bits.append([int(e) for e in entries])
            row_lines.append(no)
        else:
            raise ParseError(no, f"unrecognized directive {head!r}")
    if dim is None:
        raise ParseError(last + 1, "missing dim line")
    if len(bits) != dim:
        raise ParseError(last + 1, f"expected {dim} rows, got {len(bits)}")
    for i in range(dim):
        for j in range(i):
            if bits[i][j] != bits[j][i]:
                raise ParseError(row_lines[i], "matrix is not symmetric")
    return SymmetricBitMatrix.from_bits(bits)


def serialize_matrix(matrix: SymmetricBitMatrix) -> str:
    lines = [f"dim: {matrix.n}"]
    for row in matrix.to_bits():
        lines.append(("row: " + " ".join(str(e) for e in row)).rstrip())
    return "\n".join(lines) + "\n"


def parse_trace(text: str) -> SlideTrace:
    """Read a slide trace: one `slide: a b` line per step.

    Element validity against a particular ground set is checked when the
    trace is applied, not here.
    """
    steps: list[tuple[str, str]] = []
    for no, head, payload in _content_lines(text):
        if head != "slide":
            raise ParseError(no, f"unrecognized directive {head!r}")
        parts = payload.split()
        if len(parts) != 2:
            raise ParseError(no, f"expected two elements, got {len(parts)}")
        if parts[0] == parts[1]:
            raise ParseError(no, f"slide with equal elements {parts[0]!r}")
        steps.append((parts[0], parts[1]))
    return SlideTrace(tuple(steps))


def serialize_trace(trace: SlideTrace) -> str:
    return "".join(f"slide: {a} {b}\n" for a, b in trace)


def parse_graph(text: str) -> tuple[int, list[tuple[str, int, int]]]:
    """Read a graph: a `vertices:` line, then `edge: label u v` lines
    with endpoints numbered 1..vertices."""
    vertices: int | None = None
    edges: list[tuple[str, int, int]] = []
    labels: set[str] = set()
    last = 0
    for no, head, payload in _content_lines(text):
        last = no
        if head == "vertices":
            if vertices is not None:
                raise ParseError(no, "second vertices line")
            try:
                vertices = int(payload)
            except ValueError:
                raise ParseError(no, f"bad vertex count {payload!r}") from None
            if vertices < 1:
                raise ParseError(no, "need at least one vertex")
        elif head == "edge":
            if vertices is None:
                raise ParseError(no, "edge line before vertices line")
            parts = payload.split()
            if len(parts) != 3:
                raise ParseError(no, "expected `edge: label u v`")
            label = parts[0]
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(no, f"bad endpoints {parts[1]!r} {parts[2]!r}") from None
            if not (1 <= u <= vertices and 1 <= v <= vertices):
                raise ParseError(no, f"endpoint outside 1..{vertices}")
            if label in labels:
                raise ParseError(no, f"duplicate edge label {label!r}")
            labels.add(label)
            edges.append((label, u, v))
        else:
            raise ParseError(no, f"unrecognized directive {head!r}")
    if vertices is None:
        raise ParseError(last + 1, "missing vertices line")
    return vertices, edges
