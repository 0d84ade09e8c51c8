"""Exact unitriangular matrix algebra over arbitrary-precision rationals.

Every matrix here is square, upper triangular, has units on the main
diagonal and `fractions.Fraction` entries.  These matrices form a group
under multiplication (determinant 1, so the inverse is again of the same
shape) and carry all Parikh data computed elsewhere in the package.  No
floating point is used anywhere.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

# All rational values in this package are stdlib Fractions: normalized on
# construction, sign on the numerator, arbitrary-precision integers.
Rational = Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse "p" or "p/q" into a Fraction; rejects decimals and floats."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    return Fraction(text)


def format_rational(value) -> str:
    """Lowest-terms text form: "p/q", or just "p" when the denominator is 1."""
    return str(Fraction(value))


class UnitriangularMatrix:
    """Immutable upper-triangular rational matrix with unit diagonal."""

    __slots__ = ("dim", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(Fraction(entry) for entry in row) for row in rows)
        dim = len(rows)
        if dim < 2:
            raise ValueError(f"matrix dimension must be at least 2, got {dim}")
        for i, row in enumerate(rows):
            if len(row) != dim:
                raise ValueError(f"row {i} has length {len(row)}, expected {dim}")
            if row[i] != 1:
                raise ValueError(f"diagonal entry ({i + 1},{i + 1}) is {row[i]}, not 1")
            for j in range(i):
                if row[j] != 0:
                    raise ValueError(
                        f"entry ({i + 1},{j + 1}) below the diagonal is {row[j]}, not 0"
                    )
        self.dim = dim
        self.rows = rows

    @classmethod
    def identity(cls, dim: int) -> "UnitriangularMatrix":
        return cls([[1 if i == j else 0 for j in range(dim)] for i in range(dim)])

    def __mul__(self, other):
        if not isinstance(other, UnitriangularMatrix):
            return NotImplemented
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        d = self.dim
        a, b = self.rows, other.rows
        # Only k in [i, j] contributes for triangular factors.
        return UnitriangularMatrix(
            [
                [
                    sum(a[i][k] * b[k][j] for k in range(i, j + 1)) if j >= i else 0
                    for j in range(d)
                ]
                for i in range(d)
            ]
        )

    def __pow__(self, exponent: int) -> "UnitriangularMatrix":
        """Exact power by repeated squaring; exponent must be >= 0."""
        if not isinstance(exponent, int):
            raise ValueError(f"exponent must be an integer, got {exponent!r}")
        if exponent < 0:
            raise ValueError("negative powers are not defined here; use inverse()")
        result = UnitriangularMatrix.identity(self.dim)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "UnitriangularMatrix":
        """Exact inverse; always exists and is again unitriangular."""
        d = self.dim
        a = self.rows
        inv = [[Fraction(1) if i == j else Fraction(0) for j in range(d)] for i in range(d)]
        for i in range(d):
            for j in range(i + 1, d):
                inv[i][j] = -sum(inv[i][k] * a[k][j] for k in range(i, j))
        return UnitriangularMatrix(inv)

    def alternate(self) -> "UnitriangularMatrix":
        """Checkerboard sign flip: entry (i,j) becomes (-1)^(i+j) times itself."""
        return UnitriangularMatrix(
            [
                [entry if (i + j) % 2 == 0 else -entry for j, entry in enumerate(row)]
                for i, row in enumerate(self.rows)
            ]
        )

    def key(self) -> str:
        """Canonical text key: strictly-upper entries, row-major, comma-joined.

        Two matrices have the same key exactly when they are equal.
        """
        d = self.dim
        return ",".join(str(self.rows[i][j]) for i in range(d) for j in range(i + 1, d))

    def to_json(self) -> str:
        return json.dumps(
            {"dim": self.dim, "entries": [[str(e) for e in row] for row in self.rows]},
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "UnitriangularMatrix":
        data = json.loads(text)
        if not isinstance(data, dict) or "dim" not in data or "entries" not in data:
            raise ValueError('matrix JSON must be {"dim": n, "entries": [[...]]}')
        dim = data["dim"]
        entries = data["entries"]
        if not isinstance(entries, list) or len(entries) != dim:
            raise ValueError(f"expected {dim} rows, got {len(entries)}")
        rows = []
        for row in entries:
            if not isinstance(row, list) or len(row) != dim:
                raise ValueError(f"expected rows of length {dim}")
            rows.append([e if isinstance(e, int) else parse_rational(e) for e in row])
        return cls(rows)

    def pretty(self) -> str:
        """Aligned text grid, one matrix row per line."""
        cells = [[str(e) for e in row] for row in self.rows]
        widths = [max(len(cells[i][j]) for i in range(self.dim)) for j in range(self.dim)]
        return "\n".join(
            " ".join(cell.rjust(widths[j]) for j, cell in enumerate(row)) for row in cells
        )

    def __eq__(self, other):
        if not isinstance(other, UnitriangularMatrix):
            return NotImplemented
        return self.dim == other.dim and self.rows == other.rows

    def __hash__(self):
        return hash((self.dim, self.rows))

    def __repr__(self):
        return f"UnitriangularMatrix({[[str(e) for e in row] for row in self.rows]})"
