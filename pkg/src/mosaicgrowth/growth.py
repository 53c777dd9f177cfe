"""Sieve and growth matrices, and the exact belt recurrence.

The sieve matrix G counts, by inclusion-exclusion over the incidence matrix,
the y-points in the union of cells sharing an x-point.  Its signed transpose
M drives the recurrence w(i+1) = M w(i), where w(i) stacks the cumulative
point counts of belts 0..i by dimension.  Everything is exact integer
arithmetic; belt counts grow geometrically and would overflow any fixed
width.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import SymbolDomainError
from .incidence import IncidenceMatrix, IntMatrix
from .schlafli import SchlafliSymbol

IntVector = tuple[int, ...]


@dataclass(frozen=True)
class GrowthMatrix:
    """The pair (G, M) with M = G^T * diag(1, -1, 1, ...)."""

    g: IntMatrix
    m: IntMatrix
    sign_diag: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.m)


@dataclass(frozen=True)
class BeltSeries:
    """Exact belt point counts: w[i] cumulative through belt i, v[i] = belt i only."""

    w: tuple[IntVector, ...]
    v: tuple[IntVector, ...]
    mosaic: Optional[SchlafliSymbol] = None
    start: Optional[str] = None

    @property
    def belts(self) -> int:
        return len(self.w) - 1


@dataclass(frozen=True)
class ScalarSeries:
    """One coordinate of a belt series with its exact ratio diagnostics.

    ``ratios[i] = r[i] / r[i-1]`` (None at i = 0 or on a zero denominator)
    and ``densities[i] = r[i] / s[i]``.
    """

    coordinate: int
    r: tuple[int, ...]
    s: tuple[int, ...]
    ratios: tuple[Optional[Fraction], ...]
    densities: tuple[Optional[Fraction], ...]


def sieve_matrix(K: IncidenceMatrix) -> IntMatrix:
    """G[x][y] = alternating sum over j >= max(x,y) of k[x][j] * k[j][y]."""
    d = K.dimension
    rows = []
    for x in range(d + 1):
        row = []
        for y in range(d + 1):
            total = 0
            for j in range(max(x, y), d + 1):
                total += (-1) ** (d - j) * K.k(x, j) * K.k(j, y)
            row.append(total)
        rows.append(tuple(row))
    return tuple(rows)


def growth_matrix(g: IntMatrix) -> GrowthMatrix:
    """Package G with its signed transpose M, M[i][j] = (-1)^j * G[j][i]."""
    n = len(g)
    m = tuple(
        tuple((-1) ** j * g[j][i] for j in range(n)) for i in range(n)
    )
    sign_diag = tuple((-1) ** j for j in range(n))
    return GrowthMatrix(g=tuple(tuple(row) for row in g), m=m, sign_diag=sign_diag)


def parse_start(start: str, dimension: int) -> tuple[str, int]:
    """Normalize a start spec to ("cell"|"vertex"|"face", l)."""
    text = start.strip().lower()
    if text == "cell":
        return ("cell", dimension)
    if text == "vertex":
        return ("vertex", 0)
    if text.startswith("face:"):
        try:
            l = int(text.split(":", 1)[1])
        except ValueError:
            raise SymbolDomainError(f"bad face dimension in start spec {start!r}") from None
        if l < 0 or l > dimension:
            raise SymbolDomainError(
                f"face dimension {l} out of range 0..{dimension}"
            )
        return ("face", l)
    raise SymbolDomainError(
        f"unknown start {start!r}; expected 'cell', 'vertex' or 'face:L'"
    )


def initial_state(K: IncidenceMatrix, start: str = "cell") -> IntVector:
    """Belt-0 point counts.

    A cell contributes row d of K; a vertex is (1, 0, ..., 0); an l-face
    contributes its own face counts (row l up to the diagonal, zeros above).
    """
    d = K.dimension
    kind, l = parse_start(start, d)
    if kind == "cell":
        return K.row(d)
    if kind == "vertex":
        return (1,) + (0,) * d
    row = K.row(l)
    return tuple(row[y] if y < l else (1 if y == l else 0) for y in range(d + 1))


def mat_vec(m: IntMatrix, v: IntVector) -> IntVector:
    return tuple(sum(m[i][j] * v[j] for j in range(len(v))) for i in range(len(m)))


def iterate(gm: GrowthMatrix, w0: IntVector, n: int,
            mosaic: Optional[SchlafliSymbol] = None,
            start: Optional[str] = None) -> BeltSeries:
    """Apply the belt recurrence n times, keeping every exact w and v vector.

    v[0] = w[0] by convention; v[i] = w[i] - w[i-1] for i >= 1.
    """
    if n < 1:
        raise ValueError("need at least one belt step")
    if len(w0) != gm.size:
        raise ValueError(f"start vector has length {len(w0)}, expected {gm.size}")
    w = [tuple(w0)]
    for _ in range(n):
        w.append(mat_vec(gm.m, w[-1]))
    v = [w[0]] + [
        tuple(a - b for a, b in zip(w[i], w[i - 1])) for i in range(1, n + 1)
    ]
    return BeltSeries(w=tuple(w), v=tuple(v), mosaic=mosaic, start=start)


def belt_counts(series: BeltSeries, coordinate: int) -> ScalarSeries:
    """Scalar view of one coordinate: per-belt counts, cumulative counts,
    successive ratios and densities, all as exact rationals."""
    size = len(series.w[0])
    if coordinate < 0 or coordinate >= size:
        raise ValueError(f"coordinate {coordinate} out of range 0..{size - 1}")
    r = tuple(vec[coordinate] for vec in series.v)
    s = tuple(vec[coordinate] for vec in series.w)
    ratios: list[Optional[Fraction]] = [None]
    for i in range(1, len(r)):
        ratios.append(Fraction(r[i], r[i - 1]) if r[i - 1] else None)
    densities = tuple(Fraction(r[i], s[i]) if s[i] else None for i in range(len(r)))
    return ScalarSeries(
        coordinate=coordinate,
        r=r,
        s=s,
        ratios=tuple(ratios),
        densities=densities,
    )


def alternating_row_sums_ok(g: IntMatrix) -> bool:
    """Every row of G has alternating sum 1; the sieve would otherwise
    miscount point multiplicities."""
    n = len(g)
    return all(
        sum((-1) ** j * g[x][j] for j in range(n)) == 1 for x in range(n)
    )
