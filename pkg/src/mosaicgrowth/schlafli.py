"""Schläfli symbols: parsing, geometry classification, and flag/face counts
for the finite regular polytopes that occur as cells and vertex figures of
regular mosaics.

All arithmetic is exact; group orders and face counts are plain integers.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Sequence, Union

from .errors import (
    InternalConsistencyError,
    SymbolDomainError,
    SymbolSyntaxError,
    UnsupportedSymbolError,
)

Entries = tuple[int, ...]
SymbolLike = Union["SchlafliSymbol", Sequence[int]]


@dataclass(frozen=True)
class SchlafliSymbol:
    """A regular mosaic symbol {n1,...,nd}.

    ``d = len(entries)`` is the dimension of the tiled space.  The cell of
    the mosaic is {n1,...,n(d-1)} and the vertex figure is {n2,...,nd}.
    """

    entries: Entries

    def __post_init__(self) -> None:
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) < 1:
            raise SymbolDomainError("a Schläfli symbol needs at least one entry")
        for n in entries:
            if not isinstance(n, int) or isinstance(n, bool):
                raise SymbolDomainError(f"symbol entries must be integers, got {n!r}")
            if n < 3:
                raise SymbolDomainError(f"symbol entries must be >= 3, got {n}")

    @property
    def dimension(self) -> int:
        return len(self.entries)

    def dual(self) -> "SchlafliSymbol":
        """The symbol read backwards; cells and vertex figures swap roles."""
        return SchlafliSymbol(self.entries[::-1])

    def cell(self) -> Entries:
        return self.entries[:-1]

    def vertex_figure(self) -> Entries:
        return self.entries[1:]

    def __str__(self) -> str:
        return "{" + ",".join(str(n) for n in self.entries) + "}"

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]


class GeometryClass(Enum):
    SPHERICAL_POLYTOPE = "spherical-polytope"
    EUCLIDEAN_MOSAIC = "euclidean-mosaic"
    HYPERBOLIC_BOUNDED_CELLS = "hyperbolic-bounded-cells"
    HYPERBOLIC_UNBOUNDED_CELLS = "hyperbolic-unbounded-cells"
    INVALID = "invalid"


# The compact hyperbolic mosaics of dimensions 3 and 4; there are no others,
# and none exist in dimension 5 or higher.
BOUNDED_CELL_CATALOG: frozenset[Entries] = frozenset(
    {
        (3, 5, 3),
        (4, 3, 5),
        (5, 3, 4),
        (5, 3, 5),
        (3, 3, 3, 5),
        (4, 3, 3, 5),
        (5, 3, 3, 5),
        (5, 3, 3, 4),
        (5, 3, 3, 3),
    }
)

_SPHERICAL_LEN3 = frozenset(
    {(3, 3, 3), (4, 3, 3), (3, 3, 4), (3, 4, 3), (5, 3, 3), (3, 3, 5)}
)
_EUCLIDEAN_LEN3 = frozenset({(4, 3, 4)})
_EUCLIDEAN_LEN4 = frozenset({(4, 3, 3, 4), (3, 3, 4, 3), (3, 4, 3, 3)})

# Flag counts of the six finite regular 4-polytopes.  Only these can occur as
# cells or vertex figures of the supported mosaics, so a table beats general
# reflection-group machinery here.
_ORDER_LEN3: dict[Entries, int] = {
    (3, 3, 3): 120,
    (4, 3, 3): 384,
    (3, 3, 4): 384,
    (3, 4, 3): 1152,
    (5, 3, 3): 14400,
    (3, 3, 5): 14400,
}

_INT_TOKEN = re.compile(r"[+-]?\d+")
_NUMERIC_TOKEN = re.compile(r"[+-]?(\d+\.\d*|\.\d+|\d+[eE][+-]?\d+)")


def parse_symbol(text: str) -> SchlafliSymbol:
    """Parse ``"{4,3,5}"`` or ``"4, 3, 5"`` into a validated symbol."""
    if not isinstance(text, str):
        raise SymbolSyntaxError(f"expected a string, got {type(text).__name__}")
    body = text.strip()
    if body.startswith("{"):
        if not body.endswith("}"):
            raise SymbolSyntaxError(f"unbalanced braces in {text!r}")
        body = body[1:-1]
    elif body.endswith("}"):
        raise SymbolSyntaxError(f"unbalanced braces in {text!r}")
    body = body.strip()
    if not body:
        raise SymbolSyntaxError("empty symbol")
    entries = []
    for token in body.split(","):
        token = token.strip()
        if _INT_TOKEN.fullmatch(token):
            entries.append(int(token))
        elif _NUMERIC_TOKEN.fullmatch(token):
            raise SymbolDomainError(f"symbol entries must be integers, got {token!r}")
        else:
            raise SymbolSyntaxError(f"cannot read {token!r} as a symbol entry")
    return SchlafliSymbol(tuple(entries))


def _entries(symbol: SymbolLike) -> Entries:
    if isinstance(symbol, SchlafliSymbol):
        return symbol.entries
    return tuple(symbol)


def _is_spherical(entries: Entries) -> bool:
    """Whether the symbol names a finite regular polytope (of dim len+1)."""
    d = len(entries)
    if d <= 1:
        return True  # segment or polygon
    if d == 2:
        p, q = entries
        return (p - 2) * (q - 2) < 4
    if d == 3:
        return entries in _SPHERICAL_LEN3
    # Dimension 5 and up: simplex, hypercube and cross-polytope families only.
    if all(n == 3 for n in entries):
        return True
    if entries[0] == 4 and all(n == 3 for n in entries[1:]):
        return True
    if entries[-1] == 4 and all(n == 3 for n in entries[:-1]):
        return True
    return False


def _is_euclidean(entries: Entries) -> bool:
    """Whether the symbol names a Euclidean mosaic of dimension len."""
    d = len(entries)
    if d == 2:
        p, q = entries
        return (p - 2) * (q - 2) == 4
    if d == 3:
        return entries in _EUCLIDEAN_LEN3
    if d == 4:
        return entries in _EUCLIDEAN_LEN4
    if d >= 5:
        return (
            entries[0] == 4
            and entries[-1] == 4
            and all(n == 3 for n in entries[1:-1])
        )
    return False


def classify(symbol: SymbolLike) -> GeometryClass:
    """Total classification of a valid symbol interpreted as a mosaic.

    Bounded-cell hyperbolic mosaics exist only in dimensions 2-4 and are
    matched against explicit lists in dimensions 3 and 4.  Everything else
    is sorted by whether cell and vertex figure are each spherical or
    Euclidean; symbols failing that constraint name no mosaic at all.
    """
    entries = _entries(symbol)
    d = len(entries)
    if d == 1:
        return GeometryClass.SPHERICAL_POLYTOPE
    if d == 2:
        p, q = entries
        excess = (p - 2) * (q - 2)
        if excess < 4:
            return GeometryClass.SPHERICAL_POLYTOPE
        if excess == 4:
            return GeometryClass.EUCLIDEAN_MOSAIC
        return GeometryClass.HYPERBOLIC_BOUNDED_CELLS
    if entries in BOUNDED_CELL_CATALOG:
        return GeometryClass.HYPERBOLIC_BOUNDED_CELLS
    if _is_spherical(entries):
        return GeometryClass.SPHERICAL_POLYTOPE
    if _is_euclidean(entries):
        return GeometryClass.EUCLIDEAN_MOSAIC
    cell, figure = entries[:-1], entries[1:]
    cell_ok = _is_spherical(cell) or _is_euclidean(cell)
    figure_ok = _is_spherical(figure) or _is_euclidean(figure)
    if cell_ok and figure_ok:
        return GeometryClass.HYPERBOLIC_UNBOUNDED_CELLS
    return GeometryClass.INVALID


def in_bounded_catalog(symbol: SymbolLike) -> bool:
    """Whether the symbol is one of the nine compact mosaics of dim 3 or 4."""
    return _entries(symbol) in BOUNDED_CELL_CATALOG


def coxeter_order(symbol: SymbolLike) -> int:
    """Flag count of the finite regular polytope with this symbol.

    The empty symbol stands for a segment (2 flags); a point (1 flag) never
    has a symbol and is handled positionally by the callers.
    """
    entries = _entries(symbol)
    if len(entries) == 0:
        return 2
    for n in entries:
        if n < 3:
            raise SymbolDomainError(f"symbol entries must be >= 3, got {n}")
    if len(entries) == 1:
        return 2 * entries[0]
    if len(entries) == 2:
        p, q = entries
        den = 4 - (p - 2) * (q - 2)
        if den <= 0:
            raise UnsupportedSymbolError(f"{{{p},{q}}} is not spherical")
        num = 8 * p * q
        if num % den:
            raise InternalConsistencyError(f"non-integer flag count for {{{p},{q}}}")
        return num // den
    if len(entries) == 3:
        try:
            return _ORDER_LEN3[entries]
        except KeyError:
            raise UnsupportedSymbolError(
                f"{SchlafliSymbol(entries)} is not a finite 4-polytope"
            ) from None
    raise UnsupportedSymbolError(
        "group orders are only needed (and provided) up to 4-polytopes"
    )


def face_count(symbol: SymbolLike, l: int) -> int:
    """Number of l-dimensional faces of the regular polytope with this symbol.

    The polytope has dimension ``len(symbol) + 1``.  Orbit counting: total
    flags divided by the flags of the l-face times the flags of the figure
    around it, with a point (order 1) below l = 0 and above the facets.
    """
    entries = _entries(symbol)
    dim = len(entries) + 1
    if l < 0 or l > dim:
        raise SymbolDomainError(f"face dimension {l} out of range 0..{dim}")
    if l == dim:
        return 1
    lower = 1 if l == 0 else coxeter_order(entries[: l - 1])
    upper = 1 if l == dim - 1 else coxeter_order(entries[l + 1 :])
    total = coxeter_order(entries)
    if total % (lower * upper):
        raise InternalConsistencyError(
            f"face count of {entries} at l={l} is not an integer"
        )
    return total // (lower * upper)
