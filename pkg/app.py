import streamlit as st
from dataclasses import asdict
from core.registry import load_enabled_modules, load_settings
from core.types import AnalysisInput
from core.utils import array_input
from core.report import build_pdf, results_frame

st.set_page_config(page_title="Intersection Array Analyzer", layout="wide")
st.title("Intersection Array Analyzer")

# 1) Parse the array once
text, ia = array_input()

# 2) Shared input for every module
base = AnalysisInput(
    label=None,
    array_text=text,
    array=ia,
    settings=asdict(load_settings()),
)

# 3) Load enabled modules
modules = load_enabled_modules()

all_rows = []
for mod in modules:
    with st.expander(mod.title, expanded=True):
        base = mod.inputs(base)
        results = mod.compute(base)
        mod.render(results)
        if results:
            st.dataframe(results_frame(results), hide_index=True)
        all_rows += mod.to_pdf(results)

# 4) Consolidated PDF
pdf_bytes = build_pdf(subject=str(ia) if ia is not None else text, rows=all_rows)
st.download_button("Download PDF Report", data=pdf_bytes, file_name="array_report.pdf", mime="application/pdf")

st.caption("Exact rational arithmetic throughout; approximate values are marked as such.")
