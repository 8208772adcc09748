import io
import json
import math
from fractions import Fraction
from typing import Any, Iterable, List

import pandas as pd
from reportlab.lib import colors
from reportlab.lib.pagesizes import A4
from reportlab.lib.styles import getSampleStyleSheet
from reportlab.platypus import SimpleDocTemplate, Paragraph, Spacer, Table, TableStyle

from core.algebra import RationalPolynomial, fmt
from core.types import ResultItem


def to_jsonable(obj: Any) -> Any:
    """Rationals become "p/q" strings; infinities become "inf"/"-inf"."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, Fraction):
        return fmt(obj)
    if isinstance(obj, int):
        return obj
    if isinstance(obj, float):
        if math.isinf(obj):
            return "inf" if obj > 0 else "-inf"
        return obj
    if isinstance(obj, RationalPolynomial):
        return [fmt(c) for c in obj.coefficients]
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj, key=str) if isinstance(obj, (set, frozenset)) else obj
        return [to_jsonable(v) for v in items]
    if hasattr(obj, "to_dict"):
        return to_jsonable(obj.to_dict())
    return str(obj)


def dump_json(report: dict) -> str:
    return json.dumps(to_jsonable(report), sort_keys=True, indent=2)


def flatten(report: Any, prefix: str = "") -> List[List[str]]:
    """[path, value] rows for text and PDF rendering of a nested report."""
    data = to_jsonable(report)
    rows: List[List[str]] = []
    if isinstance(data, dict):
        for key in sorted(data):
            rows += flatten(data[key], f"{prefix}.{key}" if prefix else key)
    elif isinstance(data, list) and any(isinstance(v, (dict, list)) for v in data):
        for i, v in enumerate(data):
            rows += flatten(v, f"{prefix}[{i}]")
    else:
        value = ", ".join(str(v) for v in data) if isinstance(data, list) else str(data)
        rows.append([prefix, value])
    return rows


def results_frame(results: Iterable[ResultItem]) -> pd.DataFrame:
    return pd.DataFrame(
        [{"metric": r.metric, "value": "—" if r.value is None else str(r.value),
          "interpretation": r.interpretation, "severity": r.severity} for r in results],
        columns=["metric", "value", "interpretation", "severity"],
    )


def report_frame(report: dict) -> pd.DataFrame:
    return pd.DataFrame(flatten(report), columns=["field", "value"])


def build_pdf(subject: str, rows: list[list[str]], title: str = "Intersection Array Report") -> bytes:
    buf = io.BytesIO()
    doc = SimpleDocTemplate(buf, pagesize=A4, title=title)
    styles = getSampleStyleSheet()
    story = []

    story.append(Paragraph(f"<b>{title}</b>", styles["Title"]))
    story.append(Paragraph(f"<b>Input:</b> {subject or '—'}", styles["Normal"]))
    story.append(Spacer(1, 8))

    if rows:
        body = [[Paragraph(str(cell), styles["BodyText"]) for cell in row] for row in rows]
        header = ["Metric", "Value", "Interpretation"][: len(rows[0])]
        tbl = Table([header] + body, hAlign='LEFT', colWidths=[150, 150, 190][: len(rows[0])])
        tbl.setStyle(TableStyle([
            ('BACKGROUND', (0,0), (-1,0), colors.HexColor('#eeeeee')),
            ('GRID', (0,0), (-1,-1), 0.25, colors.grey),
            ('FONTNAME', (0,0), (-1,0), 'Helvetica-Bold'),
            ('ROWBACKGROUNDS', (0,1), (-1,-1), [colors.white, colors.HexColor('#fafafa')]),
        ]))
        story.append(tbl)
    story.append(Spacer(1, 10))
    story.append(Paragraph("Exact values are rationals; entries marked approximate come from floating-point roots.", styles['Italic']))

    doc.build(story)
    return buf.getvalue()
