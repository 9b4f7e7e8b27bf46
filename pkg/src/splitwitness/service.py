"""HTTP service wrapping the engine.

Every operation is a plain handler taking and returning pydantic models; the
FastAPI app and the command-line client both dispatch through these, so the
wire responses and the CLI output are produced by the same code paths.

Run with: uvicorn splitwitness.service:app
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import __version__
from .errors import (
    DegreeCapExceeded,
    NotInQsolvError,
    PolySyntaxError,
    SplitwitnessError,
    UndecidableError,
)
from .exactarith import format_rational
from .factorq import factor_q
from .galois import galois_group, is_solvable_by_radicals
from .numberfield import NumberField
from .parsing import format_poly, parse_bipoly, parse_poly
from .polynomials import cyclotomic, sturm_real_roots
from .serialize import certificate_from_doc, certificate_to_doc, emit_certificate
from .towers import DEFAULT_SPLITTING_CAP, is_member, splitting_degree
from .witness import (
    member_qab,
    member_qsolv,
    parse_family_spec,
    radical_tower_analysis,
    specialize_and_classify,
    verify_certificate_safe,
    witness_for_family,
)


# ---------------------------------------------------------------------------
# models


class PolyRequest(BaseModel):
    poly: str


class FactorEntry(BaseModel):
    poly: str
    multiplicity: int


class FactorResponse(BaseModel):
    unit: str
    factors: list[FactorEntry]
    irreducible: bool


class GaloisResponse(BaseModel):
    degree: int
    group: str
    order: int
    solvable: bool
    evidence: list


class SplittingRequest(BaseModel):
    poly: str
    cap: int = DEFAULT_SPLITTING_CAP


class SplittingResponse(BaseModel):
    steps: list[int]
    total_degree: int


class SturmResponse(BaseModel):
    count: int


class CyclotomicRequest(BaseModel):
    n: int


class CyclotomicResponse(BaseModel):
    poly: str
    degree: int


class MemberRequest(BaseModel):
    poly: str
    field_poly: str = Field(description="defining polynomial of the ambient field")


class MemberResponse(BaseModel):
    member: bool
    witness_coords: list[str] | None


class WitnessRequest(BaseModel):
    family: str
    cap: int = DEFAULT_SPLITTING_CAP


class WitnessResponse(BaseModel):
    family: str
    prime: int
    witness: str
    witness_min_poly: str
    obstruction: str
    degree_total: int | None
    degree_steps: list[int] | None
    checks: list[str]
    verified: bool
    certificate: dict


class RadicalTowerResponse(BaseModel):
    n_max: int
    tower_steps: list[int]
    field_degree: int
    sqrt_is_member: bool
    measured_relative_degree: int
    claimed_relative_degree: int
    contradicts_claim: bool


class VerifyRequest(BaseModel):
    certificate: dict


class VerifyResponse(BaseModel):
    verified: bool
    failing_check: str | None
    log: list[str]


class SpecializeRequest(BaseModel):
    poly: str
    lo: int
    hi: int
    jobs: int = 1


class SpecializeOutcome(BaseModel):
    b: int
    outcome: str
    group: str | None


class SpecializeResponse(BaseModel):
    bivariate: str
    outcomes: list[SpecializeOutcome]
    counts: dict
    irreducible_fraction: str


class ClosureResponse(BaseModel):
    member: bool
    reason: str


# ---------------------------------------------------------------------------
# handlers (shared by the HTTP app and the CLI)


def _parse(text: str):
    try:
        return parse_poly(text)
    except PolySyntaxError as exc:
        raise HTTPException(status_code=400, detail=str(exc))


def handle_factor(req: PolyRequest) -> FactorResponse:
    fac = factor_q(_parse(req.poly))
    return FactorResponse(
        unit=format_rational(fac.unit),
        factors=[
            FactorEntry(poly=format_poly(f), multiplicity=m) for f, m in fac.factors
        ],
        irreducible=fac.is_irreducible,
    )


def handle_galois(req: PolyRequest) -> GaloisResponse:
    gc = galois_group(_parse(req.poly))
    return GaloisResponse(
        degree=gc.degree,
        group=gc.group_tag,
        order=gc.order,
        solvable=gc.solvable,
        evidence=[[k, v] for k, v in gc.evidence],
    )


def handle_splitting(req: SplittingRequest) -> SplittingResponse:
    summary = splitting_degree(_parse(req.poly), req.cap)
    return SplittingResponse(steps=list(summary.steps), total_degree=summary.total_degree)


def handle_sturm(req: PolyRequest) -> SturmResponse:
    return SturmResponse(count=sturm_real_roots(_parse(req.poly)))


def handle_cyclotomic(req: CyclotomicRequest) -> CyclotomicResponse:
    p = cyclotomic(req.n)
    return CyclotomicResponse(poly=format_poly(p), degree=p.degree)


def handle_member(req: MemberRequest) -> MemberResponse:
    field = NumberField(_parse(req.field_poly).monic())
    result = is_member(_parse(req.poly), field)
    coords = None
    if result.member:
        coords = [format_rational(c) for c in result.witness.coords]
    return MemberResponse(member=result.member, witness_coords=coords)


def handle_witness(req: WitnessRequest) -> WitnessResponse | RadicalTowerResponse:
    spec = parse_family_spec(req.family)
    if spec.kind == "RADICAL_TOWER":
        report = radical_tower_analysis(spec.n_max, spec.base, req.cap)
        return RadicalTowerResponse(
            n_max=report.n_max,
            tower_steps=list(report.tower_steps),
            field_degree=report.field_degree,
            sqrt_is_member=report.sqrt_is_member,
            measured_relative_degree=report.measured_relative_degree,
            claimed_relative_degree=report.claimed_relative_degree,
            contradicts_claim=report.contradicts_claim,
        )
    cert = witness_for_family(spec, req.cap)
    verified, log, _failing = verify_certificate_safe(cert)
    dd = cert.degree_data
    return WitnessResponse(
        family=req.family,
        prime=cert.prime_p,
        witness=cert.witness_description,
        witness_min_poly=format_poly(cert.witness_min_poly),
        obstruction=cert.obstruction,
        degree_total=dd.total,
        degree_steps=list(dd.steps) if dd.steps is not None else None,
        checks=[c.op for c in cert.checks],
        verified=verified,
        certificate=certificate_to_doc(cert),
    )


def handle_verify(req: VerifyRequest) -> VerifyResponse:
    cert = certificate_from_doc(req.certificate)
    ok, log, failing = verify_certificate_safe(cert)
    return VerifyResponse(verified=ok, failing_check=failing, log=log)


def handle_specialize(req: SpecializeRequest) -> SpecializeResponse:
    try:
        f = parse_bipoly(req.poly)
    except PolySyntaxError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    report = specialize_and_classify(f, req.lo, req.hi, jobs=req.jobs)
    return SpecializeResponse(
        bivariate=report.bivariate,
        outcomes=[
            SpecializeOutcome(b=b, outcome=kind, group=tag)
            for b, kind, tag in report.outcomes
        ],
        counts=report.counts,
        irreducible_fraction=format_rational(report.irreducible_fraction),
    )


def handle_qab(req: PolyRequest) -> ClosureResponse:
    m = _parse(req.poly)
    member = member_qab(m)
    reason = "Galois over Q with abelian group" if member else "not a normal abelian field"
    return ClosureResponse(member=member, reason=reason)


def handle_qsolv(req: PolyRequest) -> ClosureResponse:
    m = _parse(req.poly)
    verdict = is_solvable_by_radicals(m)
    if verdict.solvable:
        reason = f"solvable Galois group ({verdict.group.group_tag})" if verdict.group else verdict.method
    else:
        tag = verdict.group.group_tag if verdict.group else verdict.method
        reason = f"non-solvable Galois group {tag}"
    return ClosureResponse(member=verdict.solvable, reason=reason)


# ---------------------------------------------------------------------------
# FastAPI app


app = FastAPI(title="splitwitness", version=__version__)


def _wrap(handler, req):
    try:
        return handler(req)
    except HTTPException:
        raise
    except PolySyntaxError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    except DegreeCapExceeded as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    except (UndecidableError, NotInQsolvError) as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    except SplitwitnessError as exc:
        raise HTTPException(status_code=422, detail=str(exc))


@app.get("/health")
def health():
    return {"status": "ok", "version": __version__}


@app.post("/factor", response_model=FactorResponse)
def factor_endpoint(req: PolyRequest):
    return _wrap(handle_factor, req)


@app.post("/galois", response_model=GaloisResponse)
def galois_endpoint(req: PolyRequest):
    return _wrap(handle_galois, req)


@app.post("/splitting-degree", response_model=SplittingResponse)
def splitting_endpoint(req: SplittingRequest):
    return _wrap(handle_splitting, req)


@app.post("/sturm", response_model=SturmResponse)
def sturm_endpoint(req: PolyRequest):
    return _wrap(handle_sturm, req)


@app.post("/cyclotomic", response_model=CyclotomicResponse)
def cyclotomic_endpoint(req: CyclotomicRequest):
    return _wrap(handle_cyclotomic, req)


@app.post("/member", response_model=MemberResponse)
def member_endpoint(req: MemberRequest):
    return _wrap(handle_member, req)


@app.post("/witness")
def witness_endpoint(req: WitnessRequest):
    return _wrap(handle_witness, req)


@app.post("/verify", response_model=VerifyResponse)
def verify_endpoint(req: VerifyRequest):
    return _wrap(handle_verify, req)


@app.post("/specialize", response_model=SpecializeResponse)
def specialize_endpoint(req: SpecializeRequest):
    return _wrap(handle_specialize, req)


@app.post("/qab", response_model=ClosureResponse)
def qab_endpoint(req: PolyRequest):
    return _wrap(handle_qab, req)


@app.post("/qsolv", response_model=ClosureResponse)
def qsolv_endpoint(req: PolyRequest):
    return _wrap(handle_qsolv, req)


__all__ = ["app", "emit_certificate"]
