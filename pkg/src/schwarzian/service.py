"""HTTP service wrapping the solver: classify, solve, verify, eval,
periods, generate, selftest.

Semantic outcomes (no solution exists, pattern unresolved) are ordinary
200 responses with a status field; malformed documents yield 422 (model
validation) or 400 (semantic document errors); a structural
family/equation mismatch in verify yields 409.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import documents as docs
from .certify import certify_solution
from .equations import NotCanonical, classify
from .errors import (
    DegenerateLatticeError,
    DocumentError,
    NoTranscendentalSolutionError,
    PoleProximityError,
)
from . import schemas
from .selftest import run_selftest
from .solver import NoSolution, Unresolved, generate_type1, solve_equation
from .weierstrass import half_periods

app = FastAPI(
    title="schwarzian",
    description="Exact meromorphic solutions of autonomous Schwarzian "
                "differential equations, numerically certified.",
    version="0.1.0",
)

FAMILY_FOR_KIND = {
    "I": "elliptic-fractional",
    "II": "wp-rational-II",
    "III": "wp-rational-III",
    "IV": "wp-rational-IV",
    "V": "trig",
    "VI": "exp",
}


def _equation(model: schemas.EquationModel):
    try:
        return docs.equation_from_dict(model.document())
    except DocumentError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


def _solution(model):
    try:
        return docs.solution_from_dict(model.model_dump(exclude_none=True))
    except DocumentError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


def _classification_payload(result) -> schemas.ClassifyResponse:
    if isinstance(result, NotCanonical):
        return schemas.ClassifyResponse(
            canonical=False,
            p=result.p,
            numerator_pattern=list(result.numerator_pattern),
            denominator_pattern=list(result.denominator_pattern),
            reason=result.reason,
        )
    payload = docs.canonical_form_to_dict(result)
    return schemas.ClassifyResponse(canonical=True, **payload)


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/classify", response_model=schemas.ClassifyResponse)
def classify_endpoint(request: schemas.ClassifyRequest) -> schemas.ClassifyResponse:
    return _classification_payload(classify(_equation(request.equation)))


@app.post("/solve", response_model=schemas.SolveResponse,
          response_model_exclude_none=True)
def solve_endpoint(request: schemas.SolveRequest) -> schemas.SolveResponse:
    eq = _equation(request.equation)
    try:
        form, outcome = solve_equation(
            eq,
            z0=complex(*request.z0),
            beta=complex(*request.beta),
            branch=request.branch,
            anchor=None if request.anchor is None else complex(*request.anchor),
        )
    except NoTranscendentalSolutionError as exc:
        return schemas.SolveResponse(status="no-solution", reason=str(exc))
    classification = _classification_payload(form)
    if isinstance(outcome, NoSolution):
        return schemas.SolveResponse(
            status="no-solution", classification=classification,
            reason=outcome.reason,
        )
    if isinstance(outcome, Unresolved):
        return schemas.SolveResponse(
            status="unresolved", classification=classification,
            reason=outcome.reason,
        )
    return schemas.SolveResponse(
        status="solved",
        classification=classification,
        solution=docs.solution_to_dict(outcome),
    )


@app.post("/verify", response_model=schemas.ReportModel,
          response_model_by_alias=True)
def verify_endpoint(request: schemas.VerifyRequest) -> schemas.ReportModel:
    eq = _equation(request.equation)
    solution = _solution(request.solution)
    form = classify(eq)
    if not isinstance(form, NotCanonical):
        expected = FAMILY_FOR_KIND[form.kind]
        if solution.family != expected:
            raise HTTPException(
                status_code=409,
                detail=f"equation is kind {form.kind} (expects {expected}), "
                       f"solution is {solution.family}",
            )
    report = certify_solution(
        solution, eq.p, eq.rational,
        samples=request.options.samples,
        tolerance=request.options.tolerance,
        seed=request.options.seed,
    )
    return schemas.ReportModel(**docs.report_to_dict(report) | {"passed": report.passed})


@app.post("/eval", response_model=schemas.EvalResponse,
          response_model_exclude_none=True)
def eval_endpoint(request: schemas.EvalRequest) -> schemas.EvalResponse:
    solution = _solution(request.solution)
    rows = []
    for pair in request.points:
        z = complex(*pair)
        status = "ok"
        try:
            jet = solution.jet(z)
        except PoleProximityError as exc:
            jet = exc.limit_value
            status = "pole" if jet is None else "pole-proximity"
        except ZeroDivisionError:
            jet = None
            status = "pole"
        row = schemas.EvalRow(z=pair, status=status)
        if jet is not None:
            row.u = tuple(docs.complex_to_pair(jet.f))
            row.u1 = tuple(docs.complex_to_pair(jet.f1))
            row.u2 = tuple(docs.complex_to_pair(jet.f2))
            row.u3 = tuple(docs.complex_to_pair(jet.f3))
        rows.append(row)
    return schemas.EvalResponse(values=rows)


@app.post("/periods", response_model=schemas.PeriodsResponse)
def periods_endpoint(request: schemas.InvariantsModel) -> schemas.PeriodsResponse:
    inv = docs.invariants_from_dict(request.model_dump())
    try:
        lattice = half_periods(inv)
    except DegenerateLatticeError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    payload = docs.lattice_to_dict(lattice)
    return schemas.PeriodsResponse(**payload)


@app.post("/generate", response_model=schemas.GenerateResponse)
def generate_endpoint(request: schemas.GenerateRequest) -> schemas.GenerateResponse:
    tau = [complex(*pair) for pair in request.tau]
    try:
        coeffs, solution = generate_type1(
            tau, request.i, complex(*request.b), z0=complex(*request.z0)
        )
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return schemas.GenerateResponse(
        equation=schemas.EquationModel(**docs.equation_to_dict(coeffs.equation())),
        coefficients={
            "r": [docs.complex_to_pair(v) for v in coeffs.r],
            "tau": [docs.complex_to_pair(v) for v in coeffs.tau],
        },
        solution=docs.solution_to_dict(solution),
    )


@app.post("/selftest", response_model=schemas.SelftestResponse)
def selftest_endpoint(request: schemas.SelftestRequest) -> schemas.SelftestResponse:
    results = run_selftest(samples=request.samples, seed=request.seed)
    return schemas.SelftestResponse(
        all_passed=all(r.passed for r in results),
        criteria=[
            schemas.CriterionModel(
                index=r.index, name=r.name, passed=r.passed, detail=r.detail
            )
            for r in results
        ],
    )
