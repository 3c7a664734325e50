from fastapi import APIRouter, Depends

from api.dependencies import get_oracle_limits
from api.schemas.algebra import AlgebraPayload, AnalyzeRequest, AnalyzeResponse
from core.oracle import OracleLimits
from core.pipeline import analyze_algebra, recognition_report, validation_report
from core.reports import Report

router = APIRouter()


@router.post("/validate", response_model=Report)
def validate_algebra(payload: AlgebraPayload):
    return validation_report(payload.to_algebra())


@router.post("/recognize", response_model=Report)
def recognize_algebra(payload: AlgebraPayload):
    return recognition_report(payload.to_algebra())


@router.post("/analyze", response_model=AnalyzeResponse)
def analyze(payload: AnalyzeRequest, limits: OracleLimits = Depends(get_oracle_limits)):
    results = analyze_algebra(payload.algebra.to_algebra(), payload.oracle, payload.class_bound, limits)
    return AnalyzeResponse(results=results)
