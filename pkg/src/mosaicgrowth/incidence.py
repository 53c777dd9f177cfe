"""Incidence matrices of regular mosaics.

Entry ``k[x][y]`` counts the y-dimensional faces incident to an x-dimensional
face of the mosaic.  Rows below the diagonal describe the x-face itself, rows
above it describe the figure around the x-face.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import UnsupportedSymbolError
from .schlafli import (
    GeometryClass,
    SchlafliSymbol,
    SymbolLike,
    classify,
    coxeter_order,
    face_count,
)

IntMatrix = tuple[tuple[int, ...], ...]

_SUPPORTED = (
    GeometryClass.SPHERICAL_POLYTOPE,
    GeometryClass.EUCLIDEAN_MOSAIC,
    GeometryClass.HYPERBOLIC_BOUNDED_CELLS,
)


@dataclass(frozen=True)
class IncidenceMatrix:
    symbol: SchlafliSymbol
    entries: IntMatrix

    @property
    def dimension(self) -> int:
        return self.symbol.dimension

    def k(self, x: int, y: int) -> int:
        return self.entries[x][y]

    def row(self, x: int) -> tuple[int, ...]:
        return self.entries[x]


def incidence_matrix(mosaic: SymbolLike) -> IncidenceMatrix:
    """Build the (d+1) x (d+1) incidence matrix of a mosaic.

    Supported classes are spherical, Euclidean and bounded-cell hyperbolic;
    mosaics with unbounded cells would need infinite entries.
    """
    symbol = mosaic if isinstance(mosaic, SchlafliSymbol) else SchlafliSymbol(tuple(mosaic))
    cls = classify(symbol)
    if cls not in _SUPPORTED:
        raise UnsupportedSymbolError(
            f"{symbol} ({cls.value}): incidence counts are finite only for "
            "spherical, Euclidean and bounded-cell hyperbolic mosaics"
        )
    s = symbol.entries
    d = len(s)
    rows = []
    for x in range(d + 1):
        row = []
        for y in range(d + 1):
            if x == y:
                row.append(1)
            elif y < x:
                # y-faces of the x-face, an x-dimensional polytope
                row.append(face_count(s[: x - 1], y))
            else:
                # y-faces around the x-face, counted in its figure
                row.append(face_count(s[x + 1 :], y - x - 1))
        rows.append(tuple(row))
    return IncidenceMatrix(symbol, tuple(rows))


def dual(K: IncidenceMatrix) -> IncidenceMatrix:
    """Incidence matrix of the reversed symbol.

    Entrywise this is the 180-degree rotation: dual.k(x, y) == K.k(d-x, d-y).
    """
    return incidence_matrix(K.symbol.dual())


def cell_flag_count(K: IncidenceMatrix) -> int:
    """Number of characteristic simplices of one cell: the product of the
    first subdiagonal, k[d][d-1] * k[d-1][d-2] * ... * k[1][0]."""
    out = 1
    for x in range(K.dimension, 0, -1):
        out *= K.k(x, x - 1)
    return out


def simplex_count_at(mosaic: SymbolLike, x: int) -> int:
    """Number of characteristic simplices sharing the centre of an x-face.

    This is the order of the stabilizer of that centre: flags of the x-face
    itself times flags of the figure around it.
    """
    symbol = mosaic if isinstance(mosaic, SchlafliSymbol) else SchlafliSymbol(tuple(mosaic))
    cls = classify(symbol)
    if cls not in _SUPPORTED:
        raise UnsupportedSymbolError(
            f"{symbol} ({cls.value}): simplex counts are finite only for "
            "spherical, Euclidean and bounded-cell hyperbolic mosaics"
        )
    s = symbol.entries
    d = len(s)
    if x < 0 or x > d:
        raise ValueError(f"face dimension {x} out of range 0..{d}")
    lower = 1 if x == 0 else coxeter_order(s[: x - 1])
    upper = 1 if x == d else coxeter_order(s[x + 1 :])
    return lower * upper


@dataclass(frozen=True)
class RowIdentityReport:
    """Outcome of the four alternating-sum identities on each row of K.

    Identity 1: sum_{j<=l} (-1)^j k[l][j] == 1              (Euler, below the diagonal)
    Identity 2: sum_{j>=l} (-1)^j k[l][j] == (-1)^d         (Euler, above the diagonal)
    Identity 3: sum_{j>=l} (-1)^(d-j) k[l][j] == 1
    Identity 4: full row alternating sum == 1 - (-1)^l + (-1)^d
    """

    results: tuple[tuple[bool, bool, bool, bool], ...]

    @property
    def ok(self) -> bool:
        return all(all(row) for row in self.results)

    def failures(self) -> list[tuple[int, int]]:
        """(row, identity-number) pairs that failed."""
        return [
            (l, i + 1)
            for l, row in enumerate(self.results)
            for i, passed in enumerate(row)
            if not passed
        ]


def check_row_identities(K: IncidenceMatrix) -> RowIdentityReport:
    """Evaluate the four row identities on every row; report, never raise."""
    d = K.dimension
    results = []
    for l in range(d + 1):
        row = K.row(l)
        s1 = sum((-1) ** j * row[j] for j in range(0, l + 1))
        s2 = sum((-1) ** j * row[j] for j in range(l, d + 1))
        s3 = sum((-1) ** (d - j) * row[j] for j in range(l, d + 1))
        s4 = sum((-1) ** j * row[j] for j in range(0, d + 1))
        results.append(
            (
                s1 == 1,
                s2 == (-1) ** d,
                s3 == 1,
                s4 == 1 - (-1) ** l + (-1) ** d,
            )
        )
    return RowIdentityReport(tuple(results))
