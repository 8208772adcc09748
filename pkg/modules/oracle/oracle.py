from typing import List
import streamlit as st
from core.algebra import fmt
from core.drg import q_polynomial_orderings, spectrum
from core.errors import DRGError
from core.types import AnalysisInput, ResultItem
from core.utils import color_box
from .checks import check_distance_regular, verify_spear, verify_terwilliger
from .graphs import FAMILIES, _ARITY, build

id = "oracle"
title = "Graph oracle: build a graph and verify the formulas by brute force"


def inputs(data: AnalysisInput) -> AnalysisInput:
    c1, c2 = st.columns(2)
    with c1:
        family = st.selectbox("Family", FAMILIES, index=FAMILIES.index(data.params.get("family", "halved-cube")), key="or_family")
    with c2:
        raw = st.text_input("Parameters (space separated)", value=data.params.get("graph_params", "7"), key="or_params")
    data.params["family"] = family
    data.params["graph_params"] = raw
    data.params["run_oracle"] = st.checkbox("Run oracle", value=False, key="or_run")
    return data


def compute(data: AnalysisInput) -> List[ResultItem]:
    if not data.params.get("run_oracle"):
        return [ResultItem("", None, "Tick 'Run oracle' to build the graph.", "info")]
    family = data.params.get("family", "halved-cube")
    try:
        params = [int(x) for x in str(data.params.get("graph_params", "")).split()][: _ARITY[family]]
    except ValueError:
        return [ResultItem("Parameters", data.params.get("graph_params"), "expected integers", "fail")]
    r: List[ResultItem] = []
    tol = data.settings.get("tolerance", 1e-9)
    try:
        g = build(family, params, data.settings.get("max_vertices", 20000))
        ia = check_distance_regular(g)
        r.append(ResultItem("Graph", g.name, f"{g.n} vertices, distance-regular with array {ia}", "pass"))
        if ia.D < 3:
            r.append(ResultItem("", None, "Diameter below 3: no Terwilliger polynomial to verify.", "info"))
            return r
        spec = spectrum(ia)
        for ordering in q_polynomial_orderings(ia, spec, tolerance=tol):
            spear = verify_spear(g, ordering, ia, tolerance=tol)
            r.append(ResultItem(f"Triple law, ordering {ordering}", "PASS" if spear.passed else "FAIL",
                                f"{spear.total} local pairs checked" if spear.passed else str(spear.witness),
                                "pass" if spear.passed else "fail"))
            terw = verify_terwilliger(g, ordering, ia, tolerance=tol)
            r.append(ResultItem(f"T(η) ≥ 0, ordering {ordering}", "PASS" if terw.passed else "FAIL",
                                f"zeros at {', '.join(fmt(z) for z in terw.zeros) or 'none'}" if terw.passed else str(terw.witness),
                                "pass" if terw.passed else "fail"))
    except (DRGError, ValueError) as exc:
        r.append(ResultItem("Oracle", None, str(exc), "fail"))
    return r


def render(results: List[ResultItem]) -> None:
    st.subheader("Oracle")
    for x in results:
        if x.metric:
            color_box(f"{x.metric}: {x.value} • {x.interpretation}", level=x.severity)
        else:
            color_box(x.interpretation, level=x.severity)


def to_pdf(results: List[ResultItem]) -> List[list[str]]:
    return [[x.metric, "—" if x.value is None else str(x.value), x.interpretation] for x in results if x.metric]
