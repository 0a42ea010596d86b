"""Exact matrices over Q or a prime field, with block windows, powers, rank,
and Jordan type of nilpotent matrices.

The field of the original problem is algebraically closed; computationally we
use two exact proxies: rationals for certified ranks and F_p (default
p = 32003) for high-volume sampling.  All defining conditions are integer
polynomials, so ranks certified over Q transfer, and mod-p ranks never exceed
rational ones.

Rank over Q uses fraction-free (Bareiss) elimination on integer rows to avoid
coefficient blow-up; rational entries are cleared row-wise first (row scaling
preserves rank).  Rank over F_p delegates to the mod-p kernels.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import lcm

import numpy as np

from . import _kernels
from .compositions import Composition, as_composition, conjugate

DEFAULT_PRIME = 32003

Scalar = int | Fraction


def _normalize_field(field: str) -> tuple[str, int | None]:
    if field == "Q":
        return "Q", None
    if field.startswith("Fp:"):
        p = int(field[3:])
        if p < 2:
            raise ValueError(f"modulus must be at least 2, got {p}")
        if not _is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        return field, p
    raise ValueError(f"unknown field {field!r}; expected 'Q' or 'Fp:<p>'")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class ExactMatrix:
    """Immutable matrix with exact scalars and an optional block structure.

    Entries are ints or Fractions over "Q", or ints in [0, p) over "Fp:<p>".
    ``blocks`` attaches the composition inducing the block pattern.
    """

    __slots__ = ("nrows", "ncols", "rows", "field", "p", "blocks")

    def __init__(self, rows, field: str = "Q", blocks: Composition | None = None):
        field, p = _normalize_field(field)
        rows = tuple(tuple(r) for r in rows)
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("rows must be non-empty and of equal length")
        if p is not None:
            rows = tuple(tuple(int(v) % p for v in r) for r in rows)
        else:
            rows = tuple(
                tuple(v if isinstance(v, (int, Fraction)) else Fraction(v) for v in r)
                for r in rows
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", len(rows[0]))
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "p", p)
        if blocks is not None:
            blocks = as_composition(blocks)
            if self.nrows != self.ncols or blocks.n != self.nrows:
                raise ValueError("block structure does not match matrix size")
        object.__setattr__(self, "blocks", blocks)

    def __setattr__(self, *_):
        raise AttributeError("ExactMatrix is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None, field: str = "Q",
              blocks=None) -> "ExactMatrix":
        ncols = nrows if ncols is None else ncols
        return cls([[0] * ncols for _ in range(nrows)], field, blocks)

    @classmethod
    def identity(cls, n: int, field: str = "Q") -> "ExactMatrix":
        return cls([[1 if r == c else 0 for c in range(n)] for r in range(n)], field)

    @classmethod
    def from_triples(cls, n: int, triples, field: str = "Q",
                     blocks=None) -> "ExactMatrix":
        """Square matrix from (row, col, value) triples, indices 0-based."""
        rows = [[0] * n for _ in range(n)]
        for r, c, v in triples:
            rows[r][c] = v
        return cls(rows, field, blocks)

    # -- basics --------------------------------------------------------------

    @property
    def n(self) -> int:
        if self.nrows != self.ncols:
            raise ValueError("matrix is not square")
        return self.nrows

    def entry(self, r: int, c: int) -> Scalar:
        return self.rows[r][c]

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.rows for v in row)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def with_blocks(self, blocks) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.field, blocks)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExactMatrix)
            and self.field == other.field
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.rows))

    def __repr__(self) -> str:
        return f"ExactMatrix({self.nrows}x{self.ncols}, {self.field})"

    def pretty(self) -> str:
        cells = [[str(v) for v in row] for row in self.rows]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)

    # -- arithmetic ----------------------------------------------------------

    def mul(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.field != other.field:
            raise ValueError("field mismatch")
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        if self.p is not None:
            a = self.to_numpy()
            b = other.to_numpy()
            return ExactMatrix(_kernels.matmul_mod(a, b, self.p).tolist(), self.field)
        rows = []
        for r in range(self.nrows):
            row = []
            for c in range(other.ncols):
                row.append(sum(self.rows[r][k] * other.rows[k][c]
                               for k in range(self.ncols)))
            rows.append(row)
        return ExactMatrix(rows, self.field)

    def power(self, k: int) -> "ExactMatrix":
        if k < 0:
            raise ValueError("negative power")
        n = self.n
        out = ExactMatrix.identity(n, self.field)
        for _ in range(k):
            out = out.mul(self)
        return out

    def rank(self) -> int:
        if self.p is not None:
            return int(_kernels.rank_mod(self.to_numpy(), self.p))
        return _rank_bareiss(self._integer_rows())

    def jordan_type(self) -> tuple[int, ...]:
        """Jordan block sizes of a nilpotent matrix, from ranks of its powers.

        The number of parts >= k equals rank(A^(k-1)) - rank(A^k).  Raises on
        non-nilpotent input.
        """
        n = self.n
        ranks = [n]
        m = self
        while ranks[-1] > 0:
            r = m.rank()
            if r == ranks[-1]:
                raise ValueError("matrix is not nilpotent")
            ranks.append(r)
            if r:
                m = m.mul(self)
        mults = tuple(ranks[k] - ranks[k + 1] for k in range(len(ranks) - 1))
        return conjugate(mults)

    def _integer_rows(self) -> list[list[int]]:
        out = []
        for row in self.rows:
            if any(isinstance(v, Fraction) for v in row):
                scale = lcm(*(v.denominator if isinstance(v, Fraction) else 1
                              for v in row))
                out.append([int(v * scale) for v in row])
            else:
                out.append(list(row))
        return out

    def to_numpy(self) -> np.ndarray:
        return np.array([[int(v) for v in row] for row in self.rows], dtype=np.int64)

    # -- block structure -----------------------------------------------------

    def block(self, d, i: int, j: int) -> "ExactMatrix":
        """Rectangular block in block-row i, block-column j (1-based)."""
        d = as_composition(d)
        if d.n != self.n:
            raise ValueError("block structure does not match matrix size")
        if not (1 <= i <= d.t and 1 <= j <= d.t):
            raise ValueError(f"block ({i},{j}) out of range for t={d.t}")
        o = d.offsets
        rows = [row[o[j - 1]: o[j]] for row in self.rows[o[i - 1]: o[i]]]
        return ExactMatrix(rows, self.field)

    def window(self, d, i: int, j: int) -> "ExactMatrix":
        """Square principal submatrix spanning blocks i..j (1-based, inclusive)."""
        d = as_composition(d)
        if d.n != self.n:
            raise ValueError("block structure does not match matrix size")
        d.check_window(i, j)
        o = d.offsets
        lo, hi = o[i - 1], o[j]
        rows = [row[lo:hi] for row in self.rows[lo:hi]]
        return ExactMatrix(rows, self.field, blocks=d.window(i, j))

    # -- serialization -------------------------------------------------------

    def to_json_dict(self) -> dict:
        def enc(v):
            if isinstance(v, Fraction):
                return int(v) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
            return int(v)

        out = {
            "n": self.nrows,
            "field": self.field,
            "entries": [[enc(v) for v in row] for row in self.rows],
        }
        if self.blocks is not None:
            out["d"] = list(self.blocks.parts)
        return out

    @classmethod
    def from_json_dict(cls, data: dict) -> "ExactMatrix":
        field = data.get("field", "Q")
        blocks = Composition(tuple(data["d"])) if data.get("d") else None
        n = data["n"]

        def dec(v):
            return Fraction(v) if isinstance(v, str) else v

        if "entries" in data:
            rows = [[dec(v) for v in row] for row in data["entries"]]
        elif "triples" in data:
            rows = [[0] * n for _ in range(n)]
            for r, c, v in data["triples"]:
                rows[r][c] = dec(v)
        else:
            raise ValueError("matrix JSON needs 'entries' or 'triples'")
        return cls(rows, field, blocks)

    @classmethod
    def from_json(cls, text: str) -> "ExactMatrix":
        return cls.from_json_dict(json.loads(text))


def _rank_bareiss(rows: list[list[int]]) -> int:
    """Rank by one-step fraction-free elimination with column pivoting.

    After k pivots every entry is a (k+1)x(k+1) minor of the input, so the
    division by the previous pivot is exact (Sylvester's identity).
    """
    m = [row[:] for row in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    rank = 0
    prev = 1
    for col in range(nc):
        piv = next((r for r in range(rank, nr) if m[r][col] != 0), None)
        if piv is None:
            continue
        if piv != rank:
            m[rank], m[piv] = m[piv], m[rank]
        pv = m[rank][col]
        for r in range(rank + 1, nr):
            f = m[r][col]
            for c in range(col + 1, nc):
                m[r][c] = (m[r][c] * pv - m[rank][c] * f) // prev
            m[r][col] = 0
        prev = pv
        rank += 1
        if rank == nr:
            break
    return rank


# -- functional aliases matching the operation vocabulary ---------------------

def exact_rank(a: ExactMatrix) -> int:
    return a.rank()


def power(a: ExactMatrix, k: int) -> ExactMatrix:
    return a.power(k)


def jordan_type(a: ExactMatrix) -> tuple[int, ...]:
    return a.jordan_type()


def block(a: ExactMatrix, d, i: int, j: int) -> ExactMatrix:
    return a.block(d, i, j)


def window(a: ExactMatrix, d, i: int, j: int) -> ExactMatrix:
    return a.window(d, i, j)
