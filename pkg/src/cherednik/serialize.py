"""Lossless string and JSON encodings shared by the CLI and the tests.

Rationals cross the boundary as strings like "5/7" (plain integers stay
undivided), partitions as JSON integer arrays or compact "[3,1]" keys, and
polynomials as exponent/coefficient records.
"""

from __future__ import annotations

from fractions import Fraction

from .characters import GradedCharacter
from .dunkl import SparsePolynomial
from .partitions import Partition, check_partition


def fraction_str(x) -> str:
    return str(Fraction(x))


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def parse_partition(text: str) -> Partition:
    """Comma-separated parts; the empty string is the empty partition."""
    text = text.strip()
    if not text:
        return ()
    try:
        parts = [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError as exc:
        raise ValueError(f"not a partition: {text!r}") from exc
    return check_partition(parts)


def partition_key(lam: Partition) -> str:
    return "[" + ",".join(str(p) for p in lam) + "]"


def partition_json(lam: Partition) -> list[int]:
    return list(lam)


def character_vector_json(cv: dict[Partition, int]) -> dict[str, int]:
    return {partition_key(lam): cv[lam] for lam in sorted(cv, reverse=True)}


def graded_character_json(gc: GradedCharacter) -> dict:
    return {
        "base_weight": fraction_str(gc.base_weight),
        "truncation_degree": gc.truncation_degree,
        "layers": {
            str(d): character_vector_json(gc.layers[d]) for d in sorted(gc.layers)
        },
    }


def poly_json(f: SparsePolynomial) -> list[dict]:
    return [
        {"exponents": list(exp), "coeff": fraction_str(f.terms[exp])}
        for exp in sorted(f.terms, reverse=True)
    ]
