from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from api.routes import algebra, catalog, formulas, health, tables
from core.errors import (
    InputError,
    InvalidAlgebraError,
    NotAnIdealError,
    OracleLimitError,
    PreconditionError,
    SupercapError,
)
from utils.logging import get_logger

logger = get_logger("api")
get_logger("core")


app = FastAPI(title="supercap API", version="1.0")

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


@app.exception_handler(RequestValidationError)
async def validation_exception_handler(request: Request, exc: RequestValidationError):
    return JSONResponse(status_code=422, content={"detail": exc.errors(), "body": exc.body})


@app.exception_handler(SupercapError)
async def supercap_exception_handler(request: Request, exc: SupercapError):
    if isinstance(exc, OracleLimitError):
        status = 413
    elif isinstance(exc, (InputError, PreconditionError, NotAnIdealError, InvalidAlgebraError)):
        status = 422
    else:
        status = 500
        logger.exception("%s failed: %s", request.url.path, exc)
    return JSONResponse(status_code=status, content={"detail": str(exc), "error": type(exc).__name__})


app.include_router(health.router, prefix="/health")
app.include_router(algebra.router, prefix="/algebra")
app.include_router(formulas.router, prefix="/formulas")
app.include_router(tables.router, prefix="/tables")
app.include_router(catalog.router, prefix="/catalog")
