"""Exact matrices over the Laurent ring: arithmetic, blocks and determinants."""

from __future__ import annotations

from typing import Sequence

from .laurent import LaurentPoly, VariableRegistry, exact_divide, format_poly

COFACTOR_LIMIT = 8


class RingMatrix:
    """An immutable ``rows x cols`` grid of :class:`LaurentPoly` entries."""

    __slots__ = ("rows", "ncols", "registry")

    def __init__(self, rows: Sequence[Sequence[LaurentPoly | int]], registry: VariableRegistry,
                 ncols: int | None = None):
        grid = []
        for row in rows:
            grid.append(tuple(
                LaurentPoly.constant(registry, x) if isinstance(x, int) else x for x in row
            ))
        widths = {len(r) for r in grid}
        if len(widths) > 1:
            raise ValueError("ragged matrix rows")
        self.rows: tuple[tuple[LaurentPoly, ...], ...] = tuple(grid)
        self.ncols = widths.pop() if widths else (ncols or 0)
        self.registry = registry
        for row in self.rows:
            for x in row:
                if x.registry is not registry and x.registry != registry:
                    raise ValueError("matrix entry over a different registry")

    @classmethod
    def identity(cls, n: int, reg: VariableRegistry) -> RingMatrix:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], reg, n)

    @classmethod
    def zero(cls, nrows: int, ncols: int, reg: VariableRegistry) -> RingMatrix:
        return cls([[0] * ncols for _ in range(nrows)], reg, ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> LaurentPoly:
        i, j = ij
        return self.rows[i][j]

    def _same_shape(self, other: RingMatrix) -> None:
        if self.shape != other.shape:
            raise ValueError(f"dimension mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other: RingMatrix) -> RingMatrix:
        self._same_shape(other)
        return RingMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                          self.registry, self.ncols)

    def __sub__(self, other: RingMatrix) -> RingMatrix:
        self._same_shape(other)
        return RingMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                          self.registry, self.ncols)

    def __neg__(self) -> RingMatrix:
        return RingMatrix([[-a for a in r] for r in self.rows], self.registry, self.ncols)

    def __mul__(self, other) -> RingMatrix:
        if isinstance(other, (int, LaurentPoly)):
            return RingMatrix([[a * other for a in r] for r in self.rows], self.registry, self.ncols)
        if self.ncols != other.nrows:
            raise ValueError(f"dimension mismatch: {self.shape} times {other.shape}")
        cols = list(zip(*other.rows)) if other.rows else []
        zero = LaurentPoly(self.registry)
        out = []
        for r in self.rows:
            row = []
            for col in cols:
                acc = zero
                for a, b in zip(r, col):
                    if a.terms and b.terms:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return RingMatrix(out, self.registry, other.ncols)

    def __rmul__(self, other) -> RingMatrix:
        if isinstance(other, (int, LaurentPoly)):
            return self * other
        return NotImplemented

    def shift(self, exponents: Sequence[int], coeff: int = 1) -> RingMatrix:
        """Multiply every entry by the monomial ``coeff * x^exponents``."""
        if coeff == 1 and not any(exponents):
            return self
        return RingMatrix([[a.shift(exponents, coeff) for a in r] for r in self.rows],
                          self.registry, self.ncols)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    __hash__ = None  # type: ignore[assignment]

    def transpose(self) -> RingMatrix:
        return RingMatrix([list(c) for c in zip(*self.rows)], self.registry, self.nrows)

    T = property(transpose)

    def embed(self, reg: VariableRegistry) -> RingMatrix:
        if reg is self.registry:
            return self
        return RingMatrix([[a.embed(reg) for a in r] for r in self.rows], reg, self.ncols)

    def is_zero(self) -> bool:
        return all(a.is_zero() for r in self.rows for a in r)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> RingMatrix:
        return RingMatrix([[self.rows[i][j] for j in cols] for i in rows], self.registry, len(cols))

    def extract_block(self, i: int, j: int, k: int) -> RingMatrix:
        """Block ``(i, j)`` (0-based) of size ``k x k``."""
        return self.submatrix(range(i * k, (i + 1) * k), range(j * k, (j + 1) * k))

    def delete_block(self, i: int, j: int, k: int) -> RingMatrix:
        """Remove block row ``i`` and block column ``j`` (0-based)."""
        rows = [r for r in range(self.nrows) if not i * k <= r < (i + 1) * k]
        cols = [c for c in range(self.ncols) if not j * k <= c < (j + 1) * k]
        return self.submatrix(rows, cols)

    def determinant(self) -> LaurentPoly:
        return determinant(self)

    def inverse(self) -> RingMatrix:
        return inverse(self)

    def to_lists(self) -> list[list[str]]:
        return [[format_poly(a) for a in r] for r in self.rows]

    def __str__(self) -> str:
        return format_matrix(self)

    __repr__ = __str__


def format_matrix(m: RingMatrix) -> str:
    cells = m.to_lists()
    if not cells:
        return "[]"
    width = [max(len(cells[i][j]) for i in range(m.nrows)) for j in range(m.ncols)]
    lines = ["[ " + "  ".join(c.rjust(w) for c, w in zip(row, width)) + " ]" for row in cells]
    return "\n".join(lines)


def assemble_blocks(grid: Sequence[Sequence[RingMatrix]]) -> RingMatrix:
    """Place a square grid of equally sized square blocks row-major."""
    if not grid:
        raise ValueError("empty block grid")
    k = grid[0][0].nrows
    reg = grid[0][0].registry
    for row in grid:
        if len(row) != len(grid):
            raise ValueError("block grid is not square")
        for b in row:
            if b.shape != (k, k):
                raise ValueError(f"inconsistent block size {b.shape}, expected {(k, k)}")
    out = []
    for row in grid:
        for r in range(k):
            line = []
            for b in row:
                line.extend(b.rows[r])
            out.append(line)
    return RingMatrix(out, reg, k * len(grid))


def direct_sum(*blocks: RingMatrix) -> RingMatrix:
    blocks = tuple(b for b in blocks if b.nrows or b.ncols)
    if not blocks:
        raise ValueError("direct sum of nothing")
    reg = blocks[0].registry
    total = sum(b.ncols for b in blocks)
    out = []
    offset = 0
    for b in blocks:
        for row in b.rows:
            out.append([0] * offset + list(row) + [0] * (total - offset - b.ncols))
        offset += b.ncols
    return RingMatrix(out, reg, total)


def _cofactor_det(m: RingMatrix) -> LaurentPoly:
    n = m.nrows
    rows = m.rows
    memo: dict[int, LaurentPoly] = {0: LaurentPoly.one(m.registry)}

    def minor(mask: int) -> LaurentPoly:
        # determinant of the last popcount(mask) rows restricted to columns in mask
        if mask in memo:
            return memo[mask]
        r = n - bin(mask).count("1")
        acc = LaurentPoly(m.registry)
        sign = 1
        for j in range(n):
            bit = 1 << j
            if mask & bit:
                a = rows[r][j]
                if a.terms:
                    sub = minor(mask ^ bit)
                    if sub.terms:
                        acc = acc + a * sub if sign > 0 else acc - a * sub
                sign = -sign
        memo[mask] = acc
        return acc

    return minor((1 << n) - 1)


def _bareiss_det(m: RingMatrix) -> LaurentPoly:
    n = m.nrows
    reg = m.registry
    # clear each row to non-negative exponents; remember the monomial factors
    cleared = []
    shift = [0] * len(reg)
    for row in m.rows:
        nonzero = [a for a in row if a.terms]
        if not nonzero:
            return LaurentPoly(reg)
        low = [min(col) for col in zip(*(a.min_exponents() for a in nonzero))]
        neg = [-x for x in low]
        cleared.append([a.shift(neg) for a in row])
        shift = [s + x for s, x in zip(shift, low)]
    a = cleared
    sign = 1
    prev = LaurentPoly.one(reg)
    for k in range(n - 1):
        if not a[k][k].terms:
            swap = next((i for i in range(k + 1, n) if a[i][k].terms), None)
            if swap is None:
                return LaurentPoly(reg)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                q = exact_divide(num, prev)
                if q is None:
                    raise ArithmeticError("Bareiss step was not exact")
                a[i][j] = q
            a[i][k] = LaurentPoly(reg)
        prev = a[k][k]
    return a[n - 1][n - 1].shift(shift, sign)


def determinant(m: RingMatrix, method: str = "auto") -> LaurentPoly:
    """Exact determinant.

    Cofactor expansion memoized over column subsets up to size
    ``COFACTOR_LIMIT``; fraction-free Bareiss elimination beyond that.
    """
    if m.nrows != m.ncols:
        raise ValueError(f"determinant of non-square {m.shape} matrix")
    if m.nrows == 0:
        return LaurentPoly.one(m.registry)
    if method == "auto":
        method = "cofactor" if m.nrows <= COFACTOR_LIMIT else "bareiss"
    if method == "cofactor":
        return _cofactor_det(m)
    if method == "bareiss":
        return _bareiss_det(m)
    raise ValueError(f"unknown determinant method {method!r}")


def adjugate(m: RingMatrix) -> RingMatrix:
    n = m.nrows
    if n == 1:
        return RingMatrix([[1]], m.registry, 1)
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = m.submatrix([r for r in range(n) if r != j], [c for c in range(n) if c != i])
            d = determinant(minor)
            out[i][j] = d if (i + j) % 2 == 0 else -d
    return RingMatrix(out, m.registry, n)


def inverse(m: RingMatrix) -> RingMatrix:
    """Inverse of a matrix whose determinant is a unit (a signed monomial)."""
    d = determinant(m)
    if not d.is_unit():
        raise ValueError(f"matrix is not invertible over the Laurent ring: det = {format_poly(d)}")
    (e, c), = d.terms.items()
    return adjugate(m).shift(tuple(-x for x in e), c)
