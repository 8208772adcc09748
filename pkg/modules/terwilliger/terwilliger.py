from typing import List
import streamlit as st
from core.algebra import fmt
from core.errors import DRGError
from core.types import AnalysisInput, ResultItem
from core.utils import color_box, rational_input
from .polynomial import Admissibility, admissible_check, analyze_orderings

id = "terwilliger"
title = "Terwilliger polynomial T(λ) per Q-polynomial ordering"

_SEVERITY = {
    Admissibility.ADMISSIBLE: "pass",
    Admissibility.BOUNDARY: "boundary",
    Admissibility.VIOLATED: "fail",
}


def _interval(lo, hi) -> str:
    return f"({fmt(lo) if lo != float('-inf') else '-∞'}, {fmt(hi) if hi != float('inf') else '∞'})"


def inputs(data: AnalysisInput) -> AnalysisInput:
    if st.checkbox("Test a local eigenvalue η", value="eta" in data.params, key="terw_use_eta"):
        eta = rational_input("η", "terw_eta", fmt(data.params.get("eta", -2)))
        if eta is not None:
            data.params["eta"] = eta
    else:
        data.params.pop("eta", None)
    return data


def compute(data: AnalysisInput) -> List[ResultItem]:
    r: List[ResultItem] = []
    ia = data.array
    if ia is None:
        return [ResultItem("", None, "No valid intersection array entered.", "info")]
    if ia.D < 3:
        return [ResultItem("", None, f"D = {ia.D}: the Terwilliger polynomial requires D ≥ 3.", "info")]
    try:
        analyses = analyze_orderings(
            ia,
            tolerance=data.settings.get("tolerance", 1e-9),
            root_tolerance=data.settings.get("root_tolerance", 1e-12),
        )
    except DRGError as exc:
        return [ResultItem("Feasibility", None, str(exc), "fail")]
    if not analyses:
        return [ResultItem("Q-polynomial orderings", 0, "Not Q-polynomial: no Terwilliger polynomial.", "info")]

    eta = data.params.get("eta")
    for a in analyses:
        tag = f"ordering {a.ordering}"
        if a.data is None:
            r.append(ResultItem(tag, None, a.error or "degenerate dual eigenvalues", "boundary"))
            continue
        roots = ", ".join(fmt(x) for x in a.data.roots.values())
        note = " (approximate)" if a.data.approximate else ""
        r.append(ResultItem(f"T(λ), {tag}", str(a.data.T), f"Roots: {roots}{note}", "info"))
        if a.region is not None:
            region = " ∪ ".join(_interval(lo, hi) for lo, hi in a.region.forbidden_intervals) or "none"
            r.append(ResultItem(f"Forbidden η, {tag}", region, "Local non-principal eigenvalues cannot lie here.", "info"))
        if eta is not None:
            verdict = admissible_check(a.data.T, eta)
            r.append(ResultItem(f"T({fmt(eta)}), {tag}", fmt(a.data.T(eta)), verdict.value, _SEVERITY[verdict]))
    return r


def render(results: List[ResultItem]) -> None:
    st.subheader("Terwilliger polynomial")
    for x in results:
        if x.metric:
            color_box(f"{x.metric}: {x.value} • {x.interpretation}", level=x.severity)
        else:
            color_box(x.interpretation, level=x.severity)


def to_pdf(results: List[ResultItem]) -> List[list[str]]:
    return [[x.metric, "—" if x.value is None else str(x.value), x.interpretation] for x in results if x.metric]
