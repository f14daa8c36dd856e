"""HTTP facade over the library: one JSON endpoint per CLI command.

Inputs and outputs reuse the text formats of textio, so any client that
can read the files can talk to the service.  Parse problems map to 422,
domain errors (unknown element, non-binary input, no spanning tree) to
400; negative verdicts such as `not binary` are ordinary 200 responses."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .canon import reduce
from .census import report_dump, report_lines, verify_small
from .errors import DeltaMatroidError
from .gf2 import recognize_binary
from .matroid import graphic_matroid, minor
from .setsystem import check_ea, check_sea, dual, profile, twist
from .slides import apply_trace
from .textio import (
    ParseError,
    parse_graph,
    parse_system,
    parse_trace,
    serialize_matrix,
    serialize_system,
    serialize_trace,
)

app = FastAPI(title="deltamat", version="0.1.0")


class SystemRequest(BaseModel):
    system: str


class SystemResponse(BaseModel):
    system: str


class CheckResponse(BaseModel):
    delta_matroid: bool
    matroid: bool


class ProfileResponse(BaseModel):
    min_size: int
    max_size: int
    parity: str
    loops: list[str]
    everywhere: list[str]


class TwistRequest(SystemRequest):
    elements: list[str] = []


class MinorRequest(SystemRequest):
    delete: list[str] = []
    contract: list[str] = []


class SlideRequest(SystemRequest):
    trace: str


class BinaryResponse(BaseModel):
    binary: bool
    base: list[str] | None = None
    matrix: str | None = None


class CanonResponse(BaseModel):
    i: int
    j: int
    k: int
    l: int
    trace: str
    system: str


class CensusRequest(BaseModel):
    n: int
    depth: int = 12


class CensusResponse(BaseModel):
    n: int
    total_families: int
    delta_matroids: int
    binaries: int
    even: int
    odd: int
    failures: int
    text: str
    dump: str


class GraphRequest(BaseModel):
    graph: str


@app.exception_handler(ParseError)
async def _on_parse_error(_: Request, exc: ParseError) -> JSONResponse:
    return JSONResponse(status_code=422, content={"error": str(exc)})


@app.exception_handler(DeltaMatroidError)
async def _on_domain_error(_: Request, exc: DeltaMatroidError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"error": str(exc)})


@app.exception_handler(ValueError)
async def _on_value_error(_: Request, exc: ValueError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"error": str(exc)})


@app.get("/health")
def health() -> dict[str, str]:
    return {"status": "ok"}


@app.post("/check", response_model=CheckResponse)
def check(req: SystemRequest) -> CheckResponse:
    system = parse_system(req.system)
    return CheckResponse(
        delta_matroid=check_sea(system), matroid=check_ea(system)
    )


@app.post("/profile", response_model=ProfileResponse)
def profile_endpoint(req: SystemRequest) -> ProfileResponse:
    system = parse_system(req.system)
    prof = profile(system)
    return ProfileResponse(
        min_size=prof.min_size,
        max_size=prof.max_size,
        parity=prof.parity.value,
        loops=list(system.ground.labels_of(prof.loops)),
        everywhere=list(system.ground.labels_of(prof.everywhere)),
    )


@app.post("/twist", response_model=SystemResponse)
def twist_endpoint(req: TwistRequest) -> SystemResponse:
    system = parse_system(req.system)
    mask = system.ground.mask_of(req.elements)
    return SystemResponse(system=serialize_system(twist(system, mask)))


@app.post("/dual", response_model=SystemResponse)
def dual_endpoint(req: SystemRequest) -> SystemResponse:
    system = parse_system(req.system)
    return SystemResponse(system=serialize_system(dual(system)))


@app.post("/minor", response_model=SystemResponse)
def minor_endpoint(req: MinorRequest) -> SystemResponse:
    system = parse_system(req.system)
    delete_mask = system.ground.mask_of(req.delete)
    contract_mask = system.ground.mask_of(req.contract)
    return SystemResponse(
        system=serialize_system(minor(system, delete_mask, contract_mask))
    )


@app.post("/slide", response_model=SystemResponse)
def slide_endpoint(req: SlideRequest) -> SystemResponse:
    system = parse_system(req.system)
    trace = parse_trace(req.trace)
    return SystemResponse(system=serialize_system(apply_trace(system, trace)))


@app.post("/binary", response_model=BinaryResponse)
def binary_endpoint(req: SystemRequest) -> BinaryResponse:
    system = parse_system(req.system)
    certificate = recognize_binary(system)
    if certificate is None:
        return BinaryResponse(binary=False)
    return BinaryResponse(
        binary=True,
        base=list(system.ground.labels_of(certificate.base_feasible)),
        matrix=serialize_matrix(certificate.matrix),
    )


@app.post("/canon", response_model=CanonResponse)
def canon_endpoint(req: SystemRequest) -> CanonResponse:
    system = parse_system(req.system)
    result = reduce(system)
    final = apply_trace(system, result.trace)
    return CanonResponse(
        i=result.params.i,
        j=result.params.j,
        k=result.params.k,
        l=result.params.l,
        trace=serialize_trace(result.trace),
        system=serialize_system(final),
    )


@app.post("/census", response_model=CensusResponse)
def census_endpoint(req: CensusRequest) -> CensusResponse:
    report = verify_small(req.n, depth_budget=req.depth)
    return CensusResponse(
        n=report.n,
        total_families=report.total_families,
        delta_matroids=report.delta_matroids,
        binaries=report.binaries,
        even=report.even_count,
        odd=report.odd_count,
        failures=len(report.failures),
        text="\n".join(report_lines(report)) + "\n",
        dump="\n".join(report_dump(report)) + "\n",
    )


@app.post("/from-graph", response_model=SystemResponse)
def from_graph_endpoint(req: GraphRequest) -> SystemResponse:
    vertices, edges = parse_graph(req.graph)
    matroid = graphic_matroid(vertices, edges)
    return SystemResponse(system=serialize_system(matroid.carrier))
