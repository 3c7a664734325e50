"""
core.pipeline
-------------

Orchestration shared by the command line and the HTTP API: load an algebra,
run recognition, formulas, the capability decision and optionally the
Hopf-formula oracle, and package everything as a ``Report``.
"""

from __future__ import annotations

import logging
import os
from typing import Any, Dict, Optional, Tuple

from core import citations
from core.algebra import LieSuperalgebra, loads_algebra, validate
from core.algebra.structure import derived_subalgebra, is_nilpotent, nilpotency_class
from core.capability import (
    Unrecognized,
    corank_table,
    is_capable,
    is_capable_checked,
    noncapability_by_central_quotient,
    predicted_corank,
    predicted_exterior_square,
    predicted_multiplier,
    recognize,
)
from core.catalog import construct, parse_tag
from core.errors import InputError
from core.formulas import corank, multiplier_bound
from core.oracle import (
    FreePresentation,
    OracleLimits,
    OracleResult,
    epicenter_oracle,
    exterior_square_oracle,
    hopf_multiplier,
    loads_presentation,
    presentation_of,
)
from core.reports import Report, digest

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

ORACLE_QUANTITIES = {
    "multiplier": hopf_multiplier,
    "extsq": exterior_square_oracle,
    "epicenter": epicenter_oracle,
}


def load_algebra(source: str) -> Tuple[LieSuperalgebra, str]:
    """An interchange file path, or a catalog tag such as ``H(1,0)+A(1|0)``."""
    if os.path.isfile(source):
        with open(source, "rb") as fh:
            raw = fh.read()
        try:
            text = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise InputError(f"{source} is not UTF-8 text") from exc
        return loads_algebra(text), digest(raw)
    return construct(parse_tag(source)), digest(source)


def load_presentation(path: str) -> Tuple[FreePresentation, str]:
    with open(path, "rb") as fh:
        raw = fh.read()
    return loads_presentation(raw.decode("utf-8")), digest(raw)


def _oracle_on(
    L: LieSuperalgebra, quantity: str, class_bound: Optional[int], limits: OracleLimits
) -> OracleResult:
    limits.check_dim(L.dim)
    presentation = presentation_of(L, class_bound, minimal=True, limits=limits)
    return ORACLE_QUANTITIES[quantity](presentation, limits=limits)


def _comparison(formula: Optional[Dict[str, Any]], oracle: OracleResult) -> Dict[str, Any]:
    return {
        "formula": None if formula is None else formula["value"],
        "oracle": str(oracle.superdim),
        "match": None if formula is None else formula["value"] == str(oracle.superdim),
    }


def validation_report(L: LieSuperalgebra, source_digest: Optional[str] = None) -> Report:
    report = validate(L)
    results: Dict[str, Any] = {"algebra": L.name, "superdim": str(L.superdim), "validation": report.to_dict()}
    if report.ok:
        results["nilpotency_class"] = nilpotency_class(L)
    return Report(command="validate", input_digest=source_digest, results=results)


def recognition_report(L: LieSuperalgebra, source_digest: Optional[str] = None) -> Report:
    descriptor = recognize(L)
    return Report(
        command="recognize",
        input_digest=source_digest,
        results={"algebra": L.name, "superdim": str(L.superdim), "descriptor": descriptor.to_dict()},
    )


def _formula(L: LieSuperalgebra, predict) -> Optional[Dict[str, Any]]:
    descriptor = recognize(L)
    if isinstance(descriptor, Unrecognized):
        return None
    return predict(descriptor).to_dict()


def multiplier_report(
    L: LieSuperalgebra,
    oracle: bool = False,
    class_bound: Optional[int] = None,
    limits: Optional[OracleLimits] = None,
    source_digest: Optional[str] = None,
) -> Report:
    formula = _formula(L, predicted_multiplier)
    results: Dict[str, Any] = {
        "algebra": L.name,
        "superdim": str(L.superdim),
        "bound": {"value": multiplier_bound(L.superdim.even, L.superdim.odd), "source": citations.MULTIPLIER_BOUND},
        "formula": formula,
    }
    comparison = None
    if oracle:
        result = _oracle_on(L, "multiplier", class_bound, limits or OracleLimits.from_config())
        results["oracle"] = result.to_dict()
        comparison = _comparison(formula, result)
    return Report(command="multiplier", input_digest=source_digest, results=results, comparison=comparison)


def exterior_square_report(
    L: LieSuperalgebra,
    oracle: bool = False,
    class_bound: Optional[int] = None,
    limits: Optional[OracleLimits] = None,
    source_digest: Optional[str] = None,
) -> Report:
    formula = _formula(L, predicted_exterior_square)
    results: Dict[str, Any] = {
        "algebra": L.name,
        "derived_superdim": str(derived_subalgebra(L).superdim),
        "formula": formula,
    }
    comparison = None
    if oracle:
        result = _oracle_on(L, "extsq", class_bound, limits or OracleLimits.from_config())
        results["oracle"] = result.to_dict()
        comparison = _comparison(formula, result)
    return Report(command="extsq", input_digest=source_digest, results=results, comparison=comparison)


def corank_report(
    L: LieSuperalgebra,
    oracle: bool = False,
    class_bound: Optional[int] = None,
    limits: Optional[OracleLimits] = None,
    source_digest: Optional[str] = None,
) -> Report:
    descriptor = recognize(L)
    formula = None
    if not isinstance(descriptor, Unrecognized):
        formula = {"value": predicted_corank(descriptor).value, "source": citations.CORANK_DEFINITION}
    results: Dict[str, Any] = {"algebra": L.name, "superdim": str(L.superdim), "formula": formula}
    comparison = None
    if oracle:
        result = _oracle_on(L, "multiplier", class_bound, limits or OracleLimits.from_config())
        value = corank(L.superdim, result.superdim).value
        results["oracle"] = {"value": value, "multiplier": str(result.superdim), "class_bound": result.class_bound}
        comparison = {
            "formula": None if formula is None else formula["value"],
            "oracle": value,
            "match": None if formula is None else formula["value"] == value,
        }
    return Report(command="corank", input_digest=source_digest, results=results, comparison=comparison)


def capability_report(
    L: LieSuperalgebra,
    oracle: bool = False,
    class_bound: Optional[int] = None,
    limits: Optional[OracleLimits] = None,
    source_digest: Optional[str] = None,
) -> Tuple[Report, Any]:
    """The report and the verdict the exit code is taken from (the oracle's when it ran)."""
    verdict = is_capable(L)
    results: Dict[str, Any] = {"algebra": L.name, "verdict": verdict.to_dict()}
    if is_nilpotent(L) and derived_subalgebra(L).dim == 1:
        criterion = noncapability_by_central_quotient(L)
        results["central_quotient"] = None if criterion is None else criterion.to_dict()
    comparison = None
    final = verdict
    if oracle:
        checked = is_capable_checked(L, class_bound=class_bound, limits=limits)
        results["oracle"] = checked.to_dict()
        comparison = {
            "table": verdict.status.value,
            "oracle": checked.status.value,
            "agrees": checked.agrees,
        }
        final = checked
    logger.info("%s: %s (%s)", L.name, final.status.value, final.justification)
    return Report(command="capable", input_digest=source_digest, results=results, comparison=comparison), final


def table_report(k: int) -> Report:
    entries = []
    for entry in corank_table(k):
        item = entry.to_dict()
        if entry.tag is not None:
            L = construct(entry.tag)
            item["superdim"] = str(L.superdim)
            item["corank"] = predicted_corank(recognize(L)).value
        entries.append(item)
    return Report(
        command="table",
        input_digest=digest(str(k)),
        results={"corank": k, "source": citations.CORANK_CLASSIFICATION, "entries": entries},
    )


def oracle_report(
    quantity: str, presentation: FreePresentation, limits: Optional[OracleLimits] = None, source_digest: Optional[str] = None
) -> Report:
    if quantity not in ORACLE_QUANTITIES:
        raise InputError(f"unknown oracle quantity {quantity!r}; expected one of {sorted(ORACLE_QUANTITIES)}")
    result = ORACLE_QUANTITIES[quantity](presentation, limits=limits or OracleLimits.from_config())
    results = result.to_dict()
    results["generators"] = [{"name": name, "parity": str(parity)} for name, parity in presentation.generators]
    return Report(command=f"oracle {quantity}", input_digest=source_digest, results=results)


def analyze_algebra(
    L: LieSuperalgebra, oracle: bool = False, class_bound: Optional[int] = None, limits: Optional[OracleLimits] = None
) -> Dict[str, Any]:
    """Validation, recognition, formula values and capability in one result."""
    report = validate(L)
    out: Dict[str, Any] = {"algebra": L.name, "superdim": str(L.superdim), "validation": report.to_dict()}
    if not report.ok:
        return out
    out["descriptor"] = recognize(L).to_dict()
    out["multiplier"] = _formula(L, predicted_multiplier)
    out["exterior_square"] = _formula(L, predicted_exterior_square)
    capability, _ = capability_report(L, oracle=oracle, class_bound=class_bound, limits=limits)
    out["capability"] = capability.results
    if capability.comparison is not None:
        out["capability_comparison"] = capability.comparison
    return out


__all__ = [
    "ORACLE_QUANTITIES",
    "load_algebra",
    "load_presentation",
    "validation_report",
    "recognition_report",
    "multiplier_report",
    "exterior_square_report",
    "corank_report",
    "capability_report",
    "table_report",
    "oracle_report",
    "analyze_algebra",
]
