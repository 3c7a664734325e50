from fastapi import APIRouter, Depends, Query

from api.dependencies import get_oracle_limits
from core.catalog import construct, parse_tag
from core.oracle import OracleLimits
from core.pipeline import corank_report, exterior_square_report, multiplier_report
from core.reports import Report

router = APIRouter()


@router.get("/multiplier", response_model=Report)
def multiplier(
    tag: str = Query(..., description="catalog tag, e.g. H_1"),
    oracle: bool = False,
    limits: OracleLimits = Depends(get_oracle_limits),
):
    return multiplier_report(construct(parse_tag(tag)), oracle=oracle, limits=limits)


@router.get("/extsq", response_model=Report)
def exterior_square(tag: str, oracle: bool = False, limits: OracleLimits = Depends(get_oracle_limits)):
    return exterior_square_report(construct(parse_tag(tag)), oracle=oracle, limits=limits)


@router.get("/corank", response_model=Report)
def corank(tag: str, oracle: bool = False, limits: OracleLimits = Depends(get_oracle_limits)):
    return corank_report(construct(parse_tag(tag)), oracle=oracle, limits=limits)
