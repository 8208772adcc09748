from typing import List
import streamlit as st
from core.algebra import fmt
from core.drg import dual_eigenvalues, q_polynomial_orderings, spectrum
from core.errors import DRGError
from core.types import AnalysisInput, ResultItem
from core.utils import color_box
from .laws import triple_laws

id = "triples"
title = "Triple intersection numbers [i,i+1,i+1]"


def inputs(data: AnalysisInput) -> AnalysisInput:
    data.params["triples_delta"] = st.radio("Distance d(y,z)", [1, 2], horizontal=True, key="triples_delta")
    return data


def compute(data: AnalysisInput) -> List[ResultItem]:
    ia = data.array
    if ia is None:
        return [ResultItem("", None, "No valid intersection array entered.", "info")]
    if ia.D < 2:
        return [ResultItem("", None, "The triple law needs D ≥ 2.", "info")]
    delta = data.params.get("triples_delta", 1)
    tol = data.settings.get("tolerance", 1e-9)
    r: List[ResultItem] = []
    try:
        spec = spectrum(ia, data.settings.get("root_tolerance", 1e-12))
        orderings = q_polynomial_orderings(ia, spec, tolerance=tol)
        for ordering in orderings:
            duals = dual_eigenvalues(ia, spec, ordering, tolerance=tol)
            for (i, d), law in sorted(triple_laws(ia, duals).items()):
                if d != delta:
                    continue
                r.append(ResultItem(
                    f"[{i},{i + 1},{i + 1}], ordering {ordering}",
                    f"{fmt(law.sigma)}·[1,2,2] + {fmt(law.rho)}",
                    f"y,z at distance {d}",
                    "info",
                ))
    except DRGError as exc:
        return [ResultItem("Triple law", None, str(exc), "fail")]
    if not r:
        r.append(ResultItem("Q-polynomial orderings", 0, "Not Q-polynomial: no triple law.", "info"))
    return r


def render(results: List[ResultItem]) -> None:
    st.subheader("Triple law")
    for x in results:
        color_box(f"{x.metric}: {x.value} • {x.interpretation}" if x.metric else x.interpretation, level=x.severity)


def to_pdf(results: List[ResultItem]) -> List[list[str]]:
    return [[x.metric, "—" if x.value is None else str(x.value), x.interpretation] for x in results if x.metric]
