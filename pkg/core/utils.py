import streamlit as st
from fractions import Fraction
from typing import Optional, Tuple

from core.algebra import to_rational
from core.drg import IntersectionArray
from core.errors import ArrayParseError, InfeasibleArray
from core.parser import parse_array

PALETTE = {
    "pass": "#2e7d32",
    "boundary": "#f9a825",
    "fail": "#c62828",
    "info": "#455a64",
}


def color_box(text: str, level: str = "info"):
    col = PALETTE.get(level, "#455a64")
    st.markdown(
        f"""
        <div style=\"background:{col};padding:12px;border-radius:8px;color:white;font-weight:600;\">{text}</div>
        """,
        unsafe_allow_html=True,
    )


def rational_input(label: str, key: str, default: str) -> Optional[Fraction]:
    raw = st.text_input(label, value=default, key=key)
    try:
        return to_rational(raw)
    except (ValueError, TypeError):
        st.error(f"{label}: '{raw}' is not an integer or p/q")
        return None


def array_input(default: str = "21,10,3;1,6,15") -> Tuple[str, Optional[IntersectionArray]]:
    """Text box for the shared intersection array; parse and feasibility errors are shown, not raised."""
    with st.expander("Intersection array", expanded=True):
        text = st.text_input("b0,...,b(D-1); c1,...,cD  (braces and p/q allowed)", value=default, key="array_text")
        try:
            ia = parse_array(text)
        except ArrayParseError as exc:
            st.error(f"Parse error: {exc}")
            return text, None
        except InfeasibleArray as exc:
            st.error("Infeasible array: " + "; ".join(exc.violations))
            return text, None
        for w in ia.warnings:
            st.warning(w)
        st.success(f"Parsed {ia} (D = {ia.D})")
        return text, ia
