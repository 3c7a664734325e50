from fastapi import APIRouter

from core.pipeline import table_report
from core.reports import Report

router = APIRouter()


@router.get("/corank/{k}", response_model=Report)
def corank_table(k: int):
    return table_report(k)
