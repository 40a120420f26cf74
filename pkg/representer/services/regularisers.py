"""
Builders for regulariser specifications: monotone norm compositions and
parsed expressions.
"""
import logging

import numpy as np

from representer.constants import ErrorMessages
from representer.enums import MonotoneKind
from representer.errors import PreconditionError
from representer.models.regulariser import MonotoneFn, RegulariserSpec
from representer.models.spaces import Element, PNormSpace
from representer.services.duality import duality_map, norm
from representer.services.expression import (
    evaluate_tree,
    format_tree,
    parse_expression,
    shape_of,
    uses_norm,
)

logger = logging.getLogger(__name__)


def make_admissible(h: MonotoneFn, space: PNormSpace = None) -> RegulariserSpec:
    """
    Omega(f) = h(||f||).

    Args:
        h: nondecreasing profile (tables are checked on construction)
        space: optional; when given, evaluation rejects elements of other spaces

    Returns:
        RegulariserSpec with an analytic gradient h'(t) w J(f) / t for real spaces
    """
    if not isinstance(h, MonotoneFn):
        h = MonotoneFn(MonotoneKind(h))

    def _space_of(f: Element) -> PNormSpace:
        return f.space if space is None else space

    def compiled(f: Element) -> float:
        return float(h(norm(_space_of(f), f)))

    def gradient(f: Element) -> np.ndarray:
        sp = _space_of(f)
        t = norm(sp, f)
        if t == 0.0:
            return np.zeros(sp.dim)
        J = duality_map(sp, f)
        return float(h.derivative(t)) * sp.weights * np.real(J.coords) / t

    if h.kind == MonotoneKind.table:
        source = f"h=table[{h.mode.value}]"
    else:
        source = f"h={h.kind.value}"
    return RegulariserSpec(
        source=source,
        compiled=compiled,
        claims_admissible=True,
        strictly_increasing=h.strictly_increasing,
        h=h,
        gradient=gradient,
    )


def parse_regulariser(text: str) -> RegulariserSpec:
    """
    Compiles an expression over `norm` and `coord(i)`.

    Admissibility is claimed only when the expression is provably a
    nondecreasing function of `norm` alone.

    Raises:
        ParseError: with the offending position and the accepted tokens
    """
    tree = parse_expression(text)
    shape = shape_of(tree)
    admissible = shape.trend is not None and shape.trend >= 0
    needs_norm = uses_norm(tree)

    def compiled(f: Element) -> float:
        size = norm(f.space, f) if needs_norm else 0.0
        return float(evaluate_tree(tree, f.coords, size))

    logger.debug("Parsed %r: trend=%s admissible=%s", text, shape.trend, admissible)
    return RegulariserSpec(
        source=text,
        compiled=compiled,
        claims_admissible=admissible,
        strictly_increasing=shape.trend == 2,
        tree=tree,
    )


def format_regulariser(spec: RegulariserSpec) -> str:
    """
    Fully parenthesised source for parsed regularisers; the named form otherwise.
    """
    if spec.tree is None:
        return spec.source
    return format_tree(spec.tree)


def require_strictly_admissible(spec: RegulariserSpec) -> RegulariserSpec:
    if not (spec.claims_admissible and spec.strictly_increasing):
        raise PreconditionError(f"{ErrorMessages.NOT_ADMISSIBLE}: {spec.source!r}")
    return spec
