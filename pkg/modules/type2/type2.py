from typing import List
import streamlit as st
from core.algebra import fmt
from core.errors import DRGError
from core.types import AnalysisInput, ResultItem
from core.utils import color_box, rational_input
from .parameters import Type2Parameters, gamma_r, type2_array
from .screening import FOLDED_HALVED_CUBE, FOLDED_JOHNSON, HALVED_ODD_CUBE, INCONCLUSIVE, screen

id = "type2"
title = "Type-2 parameters (t, x, y, D) and screening"

_KNOWN = {FOLDED_JOHNSON, FOLDED_HALVED_CUBE, HALVED_ODD_CUBE}


def inputs(data: AnalysisInput) -> AnalysisInput:
    c1, c2, c3, c4 = st.columns(4)
    with c1:
        t = rational_input("t", "t2_t", fmt(data.params.get("t", 7)))
    with c2:
        x = rational_input("x", "t2_x", fmt(data.params.get("x", "7/2")))
    with c3:
        y = rational_input("y", "t2_y", fmt(data.params.get("y", "13/2")))
    with c4:
        D = st.number_input("D", min_value=3, max_value=20, value=int(data.params.get("t2_D", 3)), step=1, key="t2_D")
    for name, value in (("t", t), ("x", x), ("y", y)):
        if value is not None:
            data.params[name] = value
    data.params["t2_D"] = int(D)
    return data


def compute(data: AnalysisInput) -> List[ResultItem]:
    p = data.params
    if not all(k in p for k in ("t", "x", "y", "t2_D")):
        return [ResultItem("", None, "Enter t, x, y and D.", "info")]
    r: List[ResultItem] = []
    try:
        params = Type2Parameters(p["t"], p["x"], p["y"], p["t2_D"])
        ia = type2_array(params)
        r.append(ResultItem("Intersection array", str(ia), f"h = {fmt(params.h)}, t* = {fmt(params.t_star)}", "info"))
        r.append(ResultItem("γ2", fmt(gamma_r(ia, 2)), "c2 - 2c1", "info"))
        rep = screen(params, data.settings.get("tolerance", 1e-9), data.settings.get("root_tolerance", 1e-12))
    except DRGError as exc:
        return r + [ResultItem("Type-2 parameters", None, str(exc), "fail")]
    r.append(ResultItem("Condition c3-3c2+3 = b2-2b1+k-c2+2 = 0", "holds" if rep.condition else "fails", "", "info"))
    if rep.roots:
        r.append(ResultItem("Roots of T(λ)", ", ".join(fmt(x) for x in rep.roots), f"ordering {rep.ordering}", "info"))
    if rep.srg is not None:
        r.append(ResultItem("Local SRG", str(tuple(fmt(x) for x in rep.srg.as_tuple())),
                            "Seidel: " + (", ".join(rep.seidel_matches) or "no match"), "info"))
    severity = "pass" if rep.verdict in _KNOWN else ("boundary" if rep.verdict == INCONCLUSIVE else "fail")
    r.append(ResultItem("Verdict", rep.verdict, rep.reason, severity))
    return r


def render(results: List[ResultItem]) -> None:
    st.subheader("Screening")
    for x in results:
        if x.metric:
            color_box(f"{x.metric}: {x.value} • {x.interpretation}", level=x.severity)
        else:
            color_box(x.interpretation, level=x.severity)


def to_pdf(results: List[ResultItem]) -> List[list[str]]:
    return [[x.metric, "—" if x.value is None else str(x.value), x.interpretation] for x in results if x.metric]
