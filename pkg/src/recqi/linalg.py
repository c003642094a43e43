"""Dense exact linear algebra over Q(i).

Row reduction, rank, kernels, and two independent determinant routes: generic
field elimination (any Gaussian-rational matrix) and fraction-free Bareiss
elimination (Gaussian-integer matrices, big-int kernel, no rational blowup).
Pivoting always takes the first nonzero candidate, so every result is
bit-reproducible.
"""

from __future__ import annotations

from .errors import DegeneracyError, ParseError
from .gaussian import (
    ZERO,
    ONE,
    GaussianRational,
    as_gaussian,
    format_gaussian,
    parse_gaussian,
)


class DenseMatrix:
    """Immutable dense matrix with GaussianRational entries, row-major."""

    __slots__ = ("_rows", "_cols", "_e")

    def __init__(self, rows: int, cols: int, entries):
        if rows < 0 or cols < 0:
            raise ValueError("negative dimension")
        e = tuple(as_gaussian(x) for x in entries)
        if len(e) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(e)}")
        self._rows = rows
        self._cols = cols
        self._e = e

    @classmethod
    def from_rows(cls, rows) -> "DenseMatrix":
        rows = [list(r) for r in rows]
        if not rows:
            return cls(0, 0, ())
        cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, [x for r in rows for x in r])

    @classmethod
    def identity(cls, n: int) -> "DenseMatrix":
        return cls(n, n, [ONE if r == c else ZERO for r in range(n) for c in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "DenseMatrix":
        return cls(rows, cols, [ZERO] * (rows * cols))

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def entries(self) -> tuple:
        return self._e

    @property
    def is_square(self) -> bool:
        return self._rows == self._cols

    def __getitem__(self, key) -> GaussianRational:
        r, c = key
        if not (0 <= r < self._rows and 0 <= c < self._cols):
            raise IndexError(f"({r}, {c}) out of range for {self._rows}x{self._cols}")
        return self._e[r * self._cols + c]

    def row_list(self, r: int) -> list:
        if not 0 <= r < self._rows:
            raise IndexError(f"row {r} out of range")
        return list(self._e[r * self._cols : (r + 1) * self._cols])

    def to_lists(self) -> list:
        return [self.row_list(r) for r in range(self._rows)]

    def diagonal(self) -> list:
        return [self[k, k] for k in range(min(self._rows, self._cols))]

    def transpose(self) -> "DenseMatrix":
        e = self._e
        c = self._cols
        return DenseMatrix(
            c, self._rows, [e[r * c + j] for j in range(c) for r in range(self._rows)]
        )

    def scale(self, factor) -> "DenseMatrix":
        f = as_gaussian(factor)
        return DenseMatrix(self._rows, self._cols, [f * x for x in self._e])

    def __add__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        if (self._rows, self._cols) != (other._rows, other._cols):
            raise ValueError("shape mismatch")
        return DenseMatrix(
            self._rows, self._cols, [a + b for a, b in zip(self._e, other._e)]
        )

    def __sub__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return self + other.scale(-1)

    def entrywise_product(self, other: "DenseMatrix") -> "DenseMatrix":
        if (self._rows, self._cols) != (other._rows, other._cols):
            raise ValueError("shape mismatch")
        return DenseMatrix(
            self._rows, self._cols, [a * b for a, b in zip(self._e, other._e)]
        )

    def __matmul__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return mat_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return (
            self._rows == other._rows
            and self._cols == other._cols
            and self._e == other._e
        )

    def __hash__(self):
        return hash((self._rows, self._cols, self._e))

    def __repr__(self):
        return f"DenseMatrix({self._rows}x{self._cols})"

    def is_diagonal(self) -> bool:
        return all(
            not self._e[r * self._cols + c]
            for r in range(self._rows)
            for c in range(self._cols)
            if r != c
        )

    def is_upper_triangular(self) -> bool:
        return all(
            not self._e[r * self._cols + c]
            for r in range(self._rows)
            for c in range(min(r, self._cols))
        )

    def is_unit_lower_triangular(self) -> bool:
        if not self.is_square:
            return False
        for r in range(self._rows):
            if self._e[r * self._cols + r] != ONE:
                return False
            for c in range(r + 1, self._cols):
                if self._e[r * self._cols + c]:
                    return False
        return True

    def to_csv(self) -> str:
        """One line per row, cells in canonical Gaussian form."""
        lines = []
        for r in range(self._rows):
            base = r * self._cols
            lines.append(
                ",".join(format_gaussian(self._e[base + c]) for c in range(self._cols))
            )
        return "\n".join(lines)

    @classmethod
    def from_csv(cls, text: str) -> "DenseMatrix":
        stripped = text.strip("\n")
        if stripped == "":
            return cls(0, 0, ())
        rows = []
        for line in stripped.split("\n"):
            rows.append([parse_gaussian(cell) for cell in line.split(",")])
        if len({len(r) for r in rows}) != 1:
            raise ParseError("ragged CSV rows")
        return cls.from_rows(rows)


def mat_transpose(m: DenseMatrix) -> DenseMatrix:
    return m.transpose()


def mat_mul(a: DenseMatrix, b: DenseMatrix) -> DenseMatrix:
    if a.cols != b.rows:
        raise ValueError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    n, k, m = a.rows, a.cols, b.cols
    ae, be = a.entries, b.entries
    out = [ZERO] * (n * m)
    for r in range(n):
        abase = r * k
        obase = r * m
        for t in range(k):
            x = ae[abase + t]
            if not x:
                continue
            bbase = t * m
            for c in range(m):
                y = be[bbase + c]
                if y:
                    out[obase + c] = out[obase + c] + x * y
    return DenseMatrix(n, m, out)


def rref(m: DenseMatrix) -> tuple[DenseMatrix, int, tuple[int, ...]]:
    """Reduced row echelon form.

    Returns (R, rank, pivot_columns). Pivots are the first nonzero entry in
    each column scan, normalized to 1, and eliminated above and below.
    """
    rows, cols = m.rows, m.cols
    a = m.to_lists()
    pivots = []
    pr = 0
    for c in range(cols):
        pivot_row = None
        for r in range(pr, rows):
            if a[r][c]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        a[pr], a[pivot_row] = a[pivot_row], a[pr]
        pivot = a[pr][c]
        if pivot != ONE:
            inv = ONE / pivot
            a[pr] = [x * inv for x in a[pr]]
        prow = a[pr]
        for r in range(rows):
            if r != pr and a[r][c]:
                f = a[r][c]
                arow = a[r]
                a[r] = [x - f * y for x, y in zip(arow, prow)]
        pivots.append(c)
        pr += 1
        if pr == rows:
            break
    return DenseMatrix.from_rows(a) if a else DenseMatrix(0, cols, ()), pr, tuple(pivots)


def rank(m: DenseMatrix) -> int:
    return rref(m)[1]


def kernel_basis(m: DenseMatrix) -> list[list[GaussianRational]]:
    """Basis of {x : m @ x = 0}, one vector per free column, deterministic order."""
    r, rk, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [ZERO] * m.cols
        v[free] = ONE
        for k, p in enumerate(pivots):
            v[p] = -r[k, free]
        basis.append(v)
    return basis


def solve(a: DenseMatrix, b: list) -> list[GaussianRational] | None:
    """One exact solution of a @ x = b, or None if inconsistent.

    Free variables (if any) are set to zero.
    """
    b = [as_gaussian(x) for x in b]
    if len(b) != a.rows:
        raise ValueError("right-hand side length mismatch")
    aug = DenseMatrix.from_rows(
        [a.row_list(r) + [b[r]] for r in range(a.rows)]
        if a.rows
        else []
    )
    if a.rows == 0:
        return [ZERO] * a.cols
    r, rk, pivots = rref(aug)
    if pivots and pivots[-1] == a.cols:
        return None
    x = [ZERO] * a.cols
    for k, p in enumerate(pivots):
        x[p] = r[k, a.cols]
    return x


def inverse(m: DenseMatrix) -> DenseMatrix:
    """Exact inverse via row reduction of [m | I]; ValueError if singular."""
    if not m.is_square:
        raise ValueError("inverse of a non-square matrix")
    n = m.rows
    ident = DenseMatrix.identity(n)
    aug = DenseMatrix.from_rows(
        [m.row_list(r) + ident.row_list(r) for r in range(n)] if n else []
    )
    r, rk, pivots = rref(aug)
    if rk < n or any(p >= n for p in pivots[:n]):
        raise ValueError("matrix is singular")
    return DenseMatrix.from_rows([r.row_list(k)[n:] for k in range(n)] if n else [])


def det_field(m: DenseMatrix) -> GaussianRational:
    """Determinant by plain field elimination with row swaps."""
    if not m.is_square:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return ONE
    a = m.to_lists()
    sign = 1
    for k in range(n):
        pivot_row = None
        for r in range(k, n):
            if a[r][k]:
                pivot_row = r
                break
        if pivot_row is None:
            return ZERO
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        pivot = a[k][k]
        prow = a[k]
        for r in range(k + 1, n):
            if a[r][k]:
                f = a[r][k] / pivot
                arow = a[r]
                for c in range(k + 1, n):
                    arow[c] = arow[c] - f * prow[c]
                arow[k] = ZERO
    det = ONE
    for k in range(n):
        det = det * a[k][k]
    return det if sign == 1 else -det


def _as_int_pairs(m: DenseMatrix) -> tuple[list[list[int]], list[list[int]]]:
    re = []
    im = []
    for r in range(m.rows):
        rrow = []
        irow = []
        for x in m.row_list(r):
            if not x.is_gaussian_integer:
                raise ValueError(
                    "fraction-free elimination requires Gaussian-integer entries"
                )
            rrow.append(x.re.numerator)
            irow.append(x.im.numerator)
        re.append(rrow)
        im.append(irow)
    return re, im


def _bareiss_step(re, im, k, n, dr, di, pr, pi):
    # one elimination step: rows/cols beyond k updated in place, exact division
    # by the previous pivot (pr, pi) through its conjugate
    nrm = pr * pr + pi * pi
    # skipping the division is only sound for a previous pivot of exactly 1;
    # the other units (-1, i, -i) still need the conjugate rotation
    unit_prev = pr == 1 and pi == 0
    rk_re = re[k]
    rk_im = im[k]
    for r in range(k + 1, n):
        rr_re = re[r]
        rr_im = im[r]
        ar = rr_re[k]
        ai = rr_im[k]
        if unit_prev:
            for c in range(k + 1, n):
                br = rk_re[c]
                bi = rk_im[c]
                xr = rr_re[c]
                xi = rr_im[c]
                rr_re[c] = dr * xr - di * xi - ar * br + ai * bi
                rr_im[c] = dr * xi + di * xr - ar * bi - ai * br
        else:
            for c in range(k + 1, n):
                br = rk_re[c]
                bi = rk_im[c]
                xr = rr_re[c]
                xi = rr_im[c]
                tr = dr * xr - di * xi - ar * br + ai * bi
                ti = dr * xi + di * xr - ar * bi - ai * br
                rr_re[c] = (tr * pr + ti * pi) // nrm
                rr_im[c] = (ti * pr - tr * pi) // nrm
        rr_re[k] = 0
        rr_im[k] = 0


def det_bareiss(m: DenseMatrix) -> GaussianRational:
    """Fraction-free determinant for Gaussian-integer matrices.

    Row swaps are allowed (with sign tracking) so singular and generic inputs
    are both fine; intermediate values stay in Z[i].
    """
    if not m.is_square:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return ONE
    re, im = _as_int_pairs(m)
    sign = 1
    pr, pi = 1, 0
    for k in range(n - 1):
        if re[k][k] == 0 and im[k][k] == 0:
            for r in range(k + 1, n):
                if re[r][k] or im[r][k]:
                    re[k], re[r] = re[r], re[k]
                    im[k], im[r] = im[r], im[k]
                    sign = -sign
                    break
            else:
                return ZERO
        dr, di = re[k][k], im[k][k]
        _bareiss_step(re, im, k, n, dr, di, pr, pi)
        pr, pi = dr, di
    return GaussianRational(sign * re[n - 1][n - 1], sign * im[n - 1][n - 1])


def bareiss_leading_minors(m: DenseMatrix) -> list[GaussianRational]:
    """All leading principal minors from one fraction-free elimination.

    Returns [det of 0x0, det of 1x1, ..., det of nxn]; with no row swaps the
    pivot after step k is exactly the order-(k+1) leading minor. Raises
    :class:`DegeneracyError` naming the order of the first vanishing minor,
    since the elimination cannot continue past it.
    """
    if not m.is_square:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    re, im = _as_int_pairs(m)
    minors = [ONE]
    pr, pi = 1, 0
    for k in range(n):
        dr, di = re[k][k], im[k][k]
        if dr == 0 and di == 0:
            raise DegeneracyError(
                f"leading principal minor of order {k + 1} vanishes", level=k + 1
            )
        minors.append(GaussianRational(dr, di))
        if k < n - 1:
            _bareiss_step(re, im, k, n, dr, di, pr, pi)
        pr, pi = dr, di
    return minors


class SpanBasis:
    """Incrementally built echelon basis for exact span membership.

    Rows are kept in echelon form ordered by pivot position; adding a vector
    reduces it against the stored rows first, so `add` doubles as a
    membership test.
    """

    __slots__ = ("length", "_rows")

    def __init__(self, length: int):
        self.length = length
        self._rows = []  # (pivot_index, normalized vector), sorted by pivot

    @property
    def dim(self) -> int:
        return len(self._rows)

    def reduce(self, vec) -> list:
        v = [as_gaussian(x) for x in vec]
        if len(v) != self.length:
            raise ValueError("vector length mismatch")
        for pivot, row in self._rows:
            f = v[pivot]
            if f:
                v = [x - f * y for x, y in zip(v, row)]
        return v

    def contains(self, vec) -> bool:
        return not any(self.reduce(vec))

    def add(self, vec):
        """Insert vec's residual; returns the stored vector, or None if dependent."""
        v = self.reduce(vec)
        pivot = None
        for idx, x in enumerate(v):
            if x:
                pivot = idx
                break
        if pivot is None:
            return None
        lead = v[pivot]
        if lead != ONE:
            inv = ONE / lead
            v = [x * inv for x in v]
        pos = 0
        while pos < len(self._rows) and self._rows[pos][0] < pivot:
            pos += 1
        self._rows.insert(pos, (pivot, v))
        return v

    def vectors(self) -> list:
        return [list(row) for _, row in self._rows]
