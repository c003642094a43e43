"""Jacobi-type continued fractions from moment sequences.

A series c(x) = sum c_n x^n with nonvanishing Hankel determinants expands as

    c(x) = c_0 / (1 - u_0 x - v_1 x^2 / (1 - u_1 x - v_2 x^2 / ...))

The coefficients come out of a quotient-difference style table built from
mixed moments; a vanishing table pivot corresponds exactly to a vanishing
Hankel determinant and raises :class:`DegeneracyError` naming its order.

For the digit-sum moments i^tau(n) the coefficients follow closed forms:
u_n = (-1)^n * i, and v_n obeys a base-2 self-similar recursion starting
from the table v_1..v_7 = 1+i, 1, -i, i, 1, -i, 1 (see :func:`v_formula`).
"""

from __future__ import annotations

from .errors import DegeneracyError
from .gaussian import ZERO, ONE, I, GaussianRational, as_gaussian, pow_i
from .thuemorse import SeriesTruncation


class JFraction:
    """Continued-fraction coefficients u_0..u_(depth-1) and v_1..v_depth."""

    __slots__ = ("_u", "_v")

    def __init__(self, u, v):
        self._u = tuple(as_gaussian(x) for x in u)
        self._v = tuple(as_gaussian(x) for x in v)
        if len(self._u) != len(self._v):
            raise ValueError("expected as many u as v coefficients")

    @property
    def depth(self) -> int:
        return len(self._v)

    @property
    def u(self) -> tuple:
        return self._u

    @property
    def v(self) -> tuple:
        return self._v

    def u_coeff(self, n: int) -> GaussianRational:
        if not 0 <= n < len(self._u):
            raise IndexError(f"u index {n} outside 0..{len(self._u) - 1}")
        return self._u[n]

    def v_coeff(self, n: int) -> GaussianRational:
        if not 1 <= n <= len(self._v):
            raise IndexError(f"v index {n} outside 1..{len(self._v)}")
        return self._v[n - 1]

    def __eq__(self, other):
        if not isinstance(other, JFraction):
            return NotImplemented
        return self._u == other._u and self._v == other._v

    def __repr__(self):
        return f"JFraction(depth={self.depth})"


def jfraction_from_moments(moments, depth: int, check: bool = True) -> JFraction:
    """Extract u_0..u_(depth-1), v_1..v_depth from 2*depth + 1 moments.

    The table: row 0 holds the moments, and

        s[k][l] = s[k-1][l+1] - u_(k-1) s[k-1][l] - v_(k-1) s[k-2][l]

    with u_k = s[k][k+1]/s[k][k] - s[k-1][k]/s[k-1][k-1] and
    v_k = s[k][k]/s[k-1][k-1]. A zero pivot s[k][k] means the order-(k+1)
    Hankel determinant vanishes: DegeneracyError(level=k+1).

    With check=True the result is re-expanded and compared against every
    supplied moment through index 2*depth.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    c = [as_gaussian(x) for x in moments]
    if len(c) < 2 * depth + 1:
        raise ValueError(f"need {2 * depth + 1} moments for depth {depth}")
    c = c[: 2 * depth + 1]
    if depth == 0:
        return JFraction((), ())
    if not c[0]:
        raise DegeneracyError("leading moment vanishes", level=1)
    m = depth
    u: list[GaussianRational] = [c[1] / c[0]]
    v: list[GaussianRational] = []
    rows = [c]  # rows[k][l] is s[k][l]; dead slots stay at whatever they held
    for k in range(1, m + 1):
        prev = rows[k - 1]
        row = [ZERO] * (2 * m + 1)
        vk_prev = v[k - 2] if k >= 2 else None
        for l in range(k, 2 * m - k + 1):
            val = prev[l + 1] - u[k - 1] * prev[l]
            if vk_prev is not None:
                val = val - vk_prev * rows[k - 2][l]
            row[l] = val
        rows.append(row)
        pivot = row[k]
        if not pivot:
            raise DegeneracyError(
                f"Hankel determinant of order {k + 1} vanishes", level=k + 1
            )
        v.append(pivot / prev[k - 1])
        if k <= m - 1:
            u.append(row[k + 1] / pivot - prev[k] / prev[k - 1])
    jf = JFraction(u, v)
    if check:
        expansion = jfraction_to_series(jf, c[0], 2 * m)
        for n in range(2 * m + 1):
            if expansion.coefficient(n) != c[n]:
                raise ArithmeticError(
                    f"re-expansion disagrees with moment {n}; extraction is broken"
                )
    return jf


def _poly_mul(a: list, b: list, cap: int) -> list:
    out = [ZERO] * min(len(a) + len(b) - 1, cap + 1)
    for i, x in enumerate(a):
        if not x or i > cap:
            continue
        for j, y in enumerate(b):
            if i + j > cap:
                break
            if y:
                out[i + j] = out[i + j] + x * y
    return out


def _poly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    out = []
    for k in range(n):
        x = a[k] if k < len(a) else ZERO
        y = b[k] if k < len(b) else ZERO
        out.append(x - y)
    return out


def jfraction_to_series(jf: JFraction, c0, order: int) -> SeriesTruncation:
    """Taylor coefficients 0..order of the continued fraction times c0.

    The unknown tail below level `depth` is replaced by the constant 1,
    which leaves every coefficient through x^(2*depth) untouched. Computed
    through numerator/denominator convergent polynomials and one series
    inversion, all exact.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    c0 = as_gaussian(c0)
    m = jf.depth
    num = [ONE]
    den = [ONE]
    for k in range(m - 1, -1, -1):
        # T_k = den_next / (den_next (1 - u_k x) - v_(k+1) x^2 num_next)
        shifted = _poly_mul(den, [ZERO, jf.u_coeff(k)], order)
        tail = _poly_mul(num, [ZERO, ZERO, jf.v_coeff(k + 1)], order)
        new_den = _poly_sub(_poly_sub(den, shifted), tail)
        num = den
        den = new_den
    # invert den (constant term 1) to the requested order
    inv = [ONE] + [ZERO] * order
    for n in range(1, order + 1):
        acc = ZERO
        for j in range(1, min(n, len(den) - 1) + 1):
            dj = den[j]
            if dj:
                acc = acc + dj * inv[n - j]
        inv[n] = -acc
    series = _poly_mul(num, inv, order)
    series.extend([ZERO] * (order + 1 - len(series)))
    return SeriesTruncation([c0 * x for x in series[: order + 1]])


def u_formula(n: int) -> GaussianRational:
    """Closed form for the digit-sum moments: u_n = (-1)^n * i."""
    if n < 0:
        raise ValueError("u is indexed from 0")
    return I if n % 2 == 0 else -I


_V_TABLE = {
    1: ONE + I,
    2: ONE,
    3: -I,
    4: I,
    5: ONE,
    6: -I,
    7: ONE,
}


def v_formula(n: int) -> GaussianRational:
    """Self-similar closed form for v_n, n >= 1.

    Base table for n <= 7; for n = 2^l + a with 0 <= a < 2^l and l >= 3:
    a in {0, 2^(l-1) + 1} gives i, a in {1, 2^(l-1)} gives 1, and anything
    else recurses to v_a.
    """
    if n < 1:
        raise ValueError("v is indexed from 1")
    while n >= 8:
        l = n.bit_length() - 1
        a = n - (1 << l)
        half = 1 << (l - 1)
        if a == 0 or a == half + 1:
            return I
        if a == 1 or a == half:
            return ONE
        n = a
    return _V_TABLE[n]


def hankel_ratio_check(dets, jf: JFraction):
    """Pairs (v_n, det ratio) for n = 1..depth, from a determinant table.

    ``dets[k]`` must be the order-k Hankel determinant (``dets[0]`` = 1).
    The identity: v_n = dets[n-1] * dets[n+1] / dets[n]^2. A zero
    determinant inside the checked range raises DegeneracyError naming its
    order.
    """
    dets = [as_gaussian(x) for x in dets]
    limit = min(jf.depth, len(dets) - 2)
    for k in range(1, limit + 2):
        if not dets[k]:
            raise DegeneracyError(
                f"Hankel determinant of order {k} vanishes", level=k
            )
    out = []
    for n in range(1, limit + 1):
        ratio = dets[n - 1] * dets[n + 1] / (dets[n] * dets[n])
        out.append((jf.v_coeff(n), ratio))
    return out


def moment_sequence(count: int) -> list[GaussianRational]:
    """The first ``count`` digit-sum moments i^tau(n)."""
    return [pow_i(n.bit_count()) for n in range(count)]
