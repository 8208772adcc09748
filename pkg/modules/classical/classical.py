from typing import List
import streamlit as st
from core.algebra import fmt, same_multiset
from core.drg import spectrum
from core.errors import DRGError
from core.types import AnalysisInput, ResultItem
from core.utils import color_box, rational_input
from modules.terwilliger.polynomial import terwilliger_polynomial
from .parameters import (
    ClassicalParameters,
    classical_array,
    classical_ordering,
    classical_terwilliger_polynomial,
    classical_triple_root_list,
    imprimitivity,
)

id = "classical"
title = "Classical parameters (D, b, α, β)"


def inputs(data: AnalysisInput) -> AnalysisInput:
    c1, c2, c3, c4 = st.columns(4)
    with c1:
        D = st.number_input("D", min_value=3, max_value=20, value=int(data.params.get("D", 3)), step=1, key="cl_D")
    with c2:
        b = rational_input("b", "cl_b", fmt(data.params.get("b", 1)))
    with c3:
        alpha = rational_input("α", "cl_alpha", fmt(data.params.get("alpha", 2)))
    with c4:
        beta = rational_input("β", "cl_beta", fmt(data.params.get("beta", 7)))
    data.params.update({"D": int(D)})
    for name, value in (("b", b), ("alpha", alpha), ("beta", beta)):
        if value is not None:
            data.params[name] = value
    return data


def compute(data: AnalysisInput) -> List[ResultItem]:
    p = data.params
    if not all(k in p for k in ("D", "b", "alpha", "beta")):
        return [ResultItem("", None, "Enter D, b, α and β.", "info")]
    r: List[ResultItem] = []
    try:
        cp = ClassicalParameters(p["D"], p["b"], p["alpha"], p["beta"])
        ia = classical_array(cp)
        r.append(ResultItem("Intersection array", str(ia), f"generated from {cp}", "info"))
        if data.array is not None:
            same = data.array == ia
            r.append(ResultItem("Matches entered array", "yes" if same else "no",
                                "entered array has these classical parameters" if same else "different array",
                                "pass" if same else "info"))
        r.append(ResultItem("Imprimitivity", imprimitivity(cp).kind, "bipartite: α=0, β=1; antipodal: b=1, β=1+α(D−1)", "info"))
        spec = spectrum(ia, data.settings.get("root_tolerance", 1e-12))
        ordering, duals = classical_ordering(cp, ia, spec, tolerance=data.settings.get("tolerance", 1e-9))
        r.append(ResultItem("Classical ordering", str(ordering), "dual eigenvalues satisfy the classical relation", "pass"))
        closed = classical_triple_root_list(cp)
        assembled = terwilliger_polynomial(ia, duals)
        agree = same_multiset(closed, assembled.roots.values())
        r.append(ResultItem("Closed-form roots", ", ".join(fmt(x) for x in sorted(closed)),
                            "agree with assembled T(λ)" if agree else "DISAGREE with assembled T(λ)",
                            "pass" if agree else "fail"))
        same_T = classical_terwilliger_polynomial(cp) == assembled.T
        r.append(ResultItem("Closed-form T(λ)", str(assembled.T), "identical" if same_T else "differs from assembled T(λ)",
                            "pass" if same_T else "fail"))
    except DRGError as exc:
        r.append(ResultItem("Classical parameters", None, str(exc), "fail"))
    return r


def render(results: List[ResultItem]) -> None:
    st.subheader("Results")
    for x in results:
        if x.metric:
            color_box(f"{x.metric}: {x.value} • {x.interpretation}", level=x.severity)
        else:
            color_box(x.interpretation, level=x.severity)


def to_pdf(results: List[ResultItem]) -> List[list[str]]:
    rows = []
    for x in results:
        if x.metric:
            rows.append([x.metric, "—" if x.value is None else str(x.value), x.interpretation])
    return rows
