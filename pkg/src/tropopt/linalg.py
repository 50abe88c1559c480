"""Dense tropical vectors and matrices.

Containers are immutable and every operation returns a fresh value.  Row
and column orientation is tracked explicitly: conjugation flips a column
into a row, and products such as a conjugated vector times a matrix mix
the two, so silent transposition would hide modeling mistakes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

from .semifield import MAX_PLUS, Semifield, TropicalError


class ShapeMismatchError(TropicalError):
    """Operand shapes or orientations do not conform."""


class NotRegularError(TropicalError):
    """A vector with zero elements (or a matrix with an all-zero line) was
    passed where a regular one is required."""


class NotColumnRegularError(NotRegularError):
    """Matrix has a column consisting entirely of zero elements."""


class ZeroVectorError(TropicalError):
    """The all-zero vector cannot be conjugated."""


@dataclass(frozen=True)
class TropVector:
    """Dense vector of semifield scalars with a column/row orientation."""

    elements: tuple[float, ...]
    orientation: str = "col"
    sf: Semifield = MAX_PLUS

    def __post_init__(self) -> None:
        if self.orientation not in ("col", "row"):
            raise ShapeMismatchError(f"unknown orientation {self.orientation!r}")
        elems = tuple(self.sf.check(v) for v in self.elements)
        if not elems:
            raise ShapeMismatchError("vectors must be nonempty")
        object.__setattr__(self, "elements", elems)

    @classmethod
    def zeros(cls, n: int, orientation: str = "col", sf: Semifield = MAX_PLUS) -> "TropVector":
        return cls((sf.zero,) * n, orientation, sf)

    @property
    def dim(self) -> int:
        return len(self.elements)

    @property
    def is_regular(self) -> bool:
        """True when no element is the zero element."""
        return not any(self.sf.is_zero(v) for v in self.elements)

    @property
    def is_zero(self) -> bool:
        return all(self.sf.is_zero(v) for v in self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[float]:
        return iter(self.elements)

    def __getitem__(self, i: int) -> float:
        return self.elements[i]


@dataclass(frozen=True)
class TropMatrix:
    """Dense row-major matrix of semifield scalars."""

    entries: tuple[tuple[float, ...], ...]
    sf: Semifield = MAX_PLUS

    def __post_init__(self) -> None:
        rows = tuple(tuple(self.sf.check(v) for v in row) for row in self.entries)
        if not rows or not rows[0]:
            raise ShapeMismatchError("matrices must be nonempty")
        if any(len(row) != len(rows[0]) for row in rows):
            raise ShapeMismatchError("matrix rows have unequal lengths")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def identity(cls, n: int, sf: Semifield = MAX_PLUS) -> "TropMatrix":
        return cls(
            tuple(tuple(sf.one if i == j else sf.zero for j in range(n)) for i in range(n)),
            sf,
        )

    @classmethod
    def zeros(cls, m: int, n: int, sf: Semifield = MAX_PLUS) -> "TropMatrix":
        return cls(((sf.zero,) * n,) * m, sf)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def row(self, i: int) -> TropVector:
        return TropVector(self.entries[i], "row", self.sf)

    def col(self, j: int) -> TropVector:
        return TropVector(tuple(r[j] for r in self.entries), "col", self.sf)

    @property
    def is_row_regular(self) -> bool:
        return all(any(not self.sf.is_zero(v) for v in row) for row in self.entries)

    @property
    def is_column_regular(self) -> bool:
        return all(
            any(not self.sf.is_zero(row[j]) for row in self.entries) for j in range(self.cols)
        )

    @property
    def is_regular(self) -> bool:
        return self.is_row_regular and self.is_column_regular


MatLike = Union[TropVector, TropMatrix]


def _require_same_sf(a: MatLike, b: MatLike) -> Semifield:
    if a.sf is not b.sf:
        raise TropicalError("operands belong to different semifields")
    return a.sf


def _grid(v: MatLike) -> tuple[tuple[float, ...], ...]:
    if isinstance(v, TropVector):
        if v.orientation == "col":
            return tuple((e,) for e in v.elements)
        return (v.elements,)
    return v.entries


def mat_add(a: MatLike, b: MatLike) -> MatLike:
    """Entrywise tropical sum of two vectors or two matrices."""
    sf = _require_same_sf(a, b)
    if isinstance(a, TropVector) and isinstance(b, TropVector):
        if a.orientation != b.orientation or a.dim != b.dim:
            raise ShapeMismatchError("vector sum needs equal length and orientation")
        return TropVector(tuple(sf.add(x, y) for x, y in zip(a, b)), a.orientation, sf)
    if isinstance(a, TropMatrix) and isinstance(b, TropMatrix):
        if (a.rows, a.cols) != (b.rows, b.cols):
            raise ShapeMismatchError(
                f"matrix sum needs equal shapes, got {a.rows}x{a.cols} and {b.rows}x{b.cols}"
            )
        return TropMatrix(
            tuple(tuple(sf.add(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a.entries, b.entries)),
            sf,
        )
    raise ShapeMismatchError("cannot add a vector to a matrix")


def mat_mul(a: MatLike, b: MatLike):
    """Tropical product; returns a scalar, vector, or matrix as shapes dictate.

    Allowed combinations: row x col (scalar), col x row (matrix), row x
    matrix (row), matrix x col (col), matrix x matrix (matrix).
    """
    sf = _require_same_sf(a, b)
    if isinstance(a, TropVector) and isinstance(b, TropVector) and a.orientation == b.orientation:
        raise ShapeMismatchError(f"cannot multiply two {a.orientation} vectors")
    if isinstance(a, TropVector) and isinstance(b, TropMatrix) and a.orientation != "row":
        raise ShapeMismatchError("left vector operand of a product must be a row")
    if isinstance(a, TropMatrix) and isinstance(b, TropVector) and b.orientation != "col":
        raise ShapeMismatchError("right vector operand of a product must be a column")

    ga, gb = _grid(a), _grid(b)
    m, k = len(ga), len(ga[0])
    k2, n = len(gb), len(gb[0])
    if k != k2:
        raise ShapeMismatchError(f"cannot multiply {m}x{k} by {k2}x{n}")
    out = []
    for i in range(m):
        row = []
        for j in range(n):
            acc = sf.zero
            for t in range(k):
                acc = sf.add(acc, sf.mul(ga[i][t], gb[t][j]))
            row.append(acc)
        out.append(tuple(row))

    if isinstance(a, TropVector) and isinstance(b, TropVector):
        if a.orientation == "row":
            return out[0][0]
        return TropMatrix(tuple(out), sf)
    if isinstance(a, TropVector):
        return TropVector(out[0], "row", sf)
    if isinstance(b, TropVector):
        return TropVector(tuple(r[0] for r in out), "col", sf)
    return TropMatrix(tuple(out), sf)


def scalar_mul(c: float, a: MatLike) -> MatLike:
    """Entrywise tropical scaling by the scalar ``c``."""
    sf = a.sf
    c = sf.check(c)
    if isinstance(a, TropVector):
        return TropVector(tuple(sf.mul(c, v) for v in a), a.orientation, sf)
    return TropMatrix(tuple(tuple(sf.mul(c, v) for v in row) for row in a.entries), sf)


def conjugate(x: TropVector) -> TropVector:
    """Multiplicative conjugate transpose: elementwise inverse, flipped
    orientation, with zero elements mapped to zero.  Undefined for the
    all-zero vector."""
    if x.is_zero:
        raise ZeroVectorError("the zero vector has no conjugate")
    sf = x.sf
    flipped = "row" if x.orientation == "col" else "col"
    return TropVector(
        tuple(sf.zero if sf.is_zero(v) else sf.inv(v) for v in x), flipped, sf
    )


def distance(x: TropVector, y: TropVector) -> float:
    """Tropical distance between regular column vectors.

    In max-plus this is the Chebyshev distance max_i |y_i - x_i|.
    """
    sf = _require_same_sf(x, y)
    if x.orientation != "col" or y.orientation != "col":
        raise ShapeMismatchError("distance is defined on column vectors")
    if x.dim != y.dim:
        raise ShapeMismatchError(f"dimension mismatch: {x.dim} vs {y.dim}")
    if not (x.is_regular and y.is_regular):
        raise NotRegularError("distance requires regular vectors")
    return sf.add(mat_mul(conjugate(y), x), mat_mul(conjugate(x), y))


def max_solution_leq(A: TropMatrix, p: TropVector) -> TropVector:
    """Greatest regular vector x with A x <= p (residuation).

    Every regular solution of the inequality is dominated componentwise by
    the returned vector.
    """
    _require_same_sf(A, p)
    if p.orientation != "col":
        raise ShapeMismatchError("bound must be a column vector")
    if A.rows != p.dim:
        raise ShapeMismatchError(f"matrix has {A.rows} rows but bound has {p.dim}")
    if not p.is_regular:
        raise NotRegularError("bound vector must be regular")
    if not A.is_column_regular:
        raise NotColumnRegularError("matrix must be column-regular")
    return conjugate(mat_mul(conjugate(p), A))


def vec_leq(x: TropVector, y: TropVector) -> bool:
    """Componentwise order between vectors of equal shape."""
    sf = _require_same_sf(x, y)
    if x.orientation != y.orientation or x.dim != y.dim:
        raise ShapeMismatchError("comparison needs equal length and orientation")
    return all(sf.leq(a, b) for a, b in zip(x, y))


def mat_leq(a: TropMatrix, b: TropMatrix) -> bool:
    """Componentwise order between matrices of equal shape."""
    sf = _require_same_sf(a, b)
    if (a.rows, a.cols) != (b.rows, b.cols):
        raise ShapeMismatchError("comparison needs equal shapes")
    return all(
        sf.leq(x, y) for ra, rb in zip(a.entries, b.entries) for x, y in zip(ra, rb)
    )
