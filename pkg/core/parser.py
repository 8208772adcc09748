import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from core.drg import IntersectionArray, validate
from core.errors import ArrayParseError

# --------- patterns ---------
PATTERNS = {
    # integer or p/q, optional sign, whitespace allowed around the slash
    "token": r"\s*([+-]?\d+(?:\s*/\s*\d+)?)\s*",
    "braces": r"^\s*\{(.*)\}\s*$",
}


@dataclass
class Parsed:
    b: List[Fraction]
    c: List[Fraction]
    text: str


def _tokens(chunk: str, offset: int) -> List[Fraction]:
    values: List[Fraction] = []
    pos = 0
    for piece in chunk.split(","):
        m = re.fullmatch(PATTERNS["token"], piece)
        if not m:
            lead = len(piece) - len(piece.lstrip())
            raise ArrayParseError(f"expected an integer or p/q, got {piece.strip()!r}", offset + pos + lead)
        raw = re.sub(r"\s+", "", m.group(1))
        num, _, den = raw.partition("/")
        if den and int(den) == 0:
            raise ArrayParseError("zero denominator", offset + pos + m.start(1))
        values.append(Fraction(int(num), int(den or 1)))
        pos += len(piece) + 1
    return values


def split_array(text: str) -> Parsed:
    body, offset = text, 0
    m = re.match(PATTERNS["braces"], text, flags=re.S)
    if m:
        body, offset = m.group(1), m.start(1)
    parts = body.split(";")
    if len(parts) != 2:
        pos = offset + (body.find(";", body.find(";") + 1) if len(parts) > 2 else len(body))
        raise ArrayParseError("expected exactly one ';' between the b- and c-values", pos)
    b = _tokens(parts[0], offset)
    c = _tokens(parts[1], offset + len(parts[0]) + 1)
    if len(b) != len(c):
        raise ArrayParseError(f"{len(b)} b-values but {len(c)} c-values", offset + len(parts[0]), diameter=len(b))
    return Parsed(b, c, text)


def parse_array(text: str) -> IntersectionArray:
    """Parse ``b0,...,b_{D-1};c1,...,cD`` (braces optional) and validate it."""
    parsed = split_array(text)
    return validate(parsed.b + parsed.c, len(parsed.b))


def parse_rationals(text: str) -> Tuple[Fraction, ...]:
    return tuple(_tokens(text, 0))
