"""Linear presentations of finite-complexity functions on word pairs.

A function A maps pairs of equal-length words (U, W) over alphabets of size
p and q to Q(i). A presentation lists dim generator functions (A is the
first), their values at the empty pair (init), and for each letter pair
(s, t) a dim x dim shift matrix expressing every shifted generator
(U, W) -> A_j(Us, Wt) back in the generator basis. Shift matrices act by
columns: entry (k, j) of shift(s, t) is the weight of generator k in the
shift of generator j.

Words are written letter 1 first. When word pairs are laid out as matrix
indices (unfold), letter 1 is the least significant base-p / base-q digit,
so unfolding the Hankel builtin at depth n gives the top-left 2^n block of
the full Hankel array.
"""

from __future__ import annotations

import json

from .errors import ParseError
from .gaussian import (
    ZERO,
    ONE,
    I,
    GaussianRational,
    as_gaussian,
    format_gaussian,
    parse_gaussian,
)
from .linalg import DenseMatrix, SpanBasis, kernel_basis, rref


def index_to_word(index: int, base: int, length: int) -> tuple[int, ...]:
    """Digits of index in the given base, least significant first."""
    if index < 0 or index >= base**length:
        raise ValueError(f"index {index} out of range for length {length}")
    word = []
    for _ in range(length):
        word.append(index % base)
        index //= base
    return tuple(word)


def word_to_index(word, base: int) -> int:
    index = 0
    for pos, letter in enumerate(word):
        index += letter * base**pos
    return index


class WordPair:
    """Two equal-length words over alphabets {0..p-1} and {0..q-1}."""

    __slots__ = ("p", "q", "row_word", "col_word")

    def __init__(self, p: int, q: int, row_word, col_word):
        rw = tuple(row_word)
        cw = tuple(col_word)
        if len(rw) != len(cw):
            raise ValueError("the two words must have equal length")
        if any(not 0 <= s < p for s in rw):
            raise ValueError(f"row letters must lie in 0..{p - 1}")
        if any(not 0 <= t < q for t in cw):
            raise ValueError(f"column letters must lie in 0..{q - 1}")
        self.p = p
        self.q = q
        self.row_word = rw
        self.col_word = cw

    @classmethod
    def from_strings(cls, p: int, q: int, row_text: str, col_text: str) -> "WordPair":
        """Words as digit strings, letter 1 leftmost; empty strings allowed."""

        def decode(text, bound, name):
            letters = []
            for pos, ch in enumerate(text):
                if not ch.isdigit():
                    raise ParseError(f"{name} word letter must be a digit", pos)
                d = int(ch)
                if d >= bound:
                    raise ParseError(f"{name} word letter {d} out of range", pos)
                letters.append(d)
            return letters

        return cls(p, q, decode(row_text, p, "row"), decode(col_text, q, "column"))

    def __len__(self):
        return len(self.row_word)

    def letters(self):
        return zip(self.row_word, self.col_word)

    def __eq__(self, other):
        if not isinstance(other, WordPair):
            return NotImplemented
        return (self.p, self.q, self.row_word, self.col_word) == (
            other.p,
            other.q,
            other.row_word,
            other.col_word,
        )

    def __hash__(self):
        return hash((self.p, self.q, self.row_word, self.col_word))

    def __repr__(self):
        rw = "".join(map(str, self.row_word))
        cw = "".join(map(str, self.col_word))
        return f"WordPair({rw!r}, {cw!r})"


def word_pairs(p: int, q: int, length: int):
    """All pairs of the given length, ordered by (row index, column index)."""
    for r in range(p**length):
        rw = index_to_word(r, p, length)
        for c in range(q**length):
            yield WordPair(p, q, rw, index_to_word(c, q, length))


class Presentation:
    """A finite presentation; the represented function is generator 0.

    Equality is structural on (p, q, dim, init, shifts); labels are
    bookkeeping only and never influence the represented function.
    """

    __slots__ = ("_p", "_q", "_dim", "_labels", "_init", "_shifts")

    def __init__(self, p: int, q: int, init, shifts, labels=None):
        if p < 1 or q < 1:
            raise ValueError("alphabet sizes must be at least 1")
        init = tuple(as_gaussian(x) for x in init)
        dim = len(init)
        if labels is None:
            labels = tuple(f"g{k}" for k in range(dim))
        else:
            labels = tuple(str(x) for x in labels)
            if len(labels) != dim:
                raise ValueError("one label per generator")
        shifts = dict(shifts)
        expected = {(s, t) for s in range(p) for t in range(q)}
        if set(shifts) != expected:
            raise ValueError("need exactly one shift matrix per letter pair")
        for key, m in shifts.items():
            if not isinstance(m, DenseMatrix) or m.rows != dim or m.cols != dim:
                raise ValueError(f"shift {key} must be a {dim}x{dim} matrix")
        self._p = p
        self._q = q
        self._dim = dim
        self._labels = labels
        self._init = init
        self._shifts = shifts

    @property
    def p(self) -> int:
        return self._p

    @property
    def q(self) -> int:
        return self._q

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def labels(self) -> tuple:
        return self._labels

    @property
    def init(self) -> tuple:
        return self._init

    def shift(self, s: int, t: int) -> DenseMatrix:
        return self._shifts[(s, t)]

    def shift_items(self):
        return sorted(self._shifts.items())

    def __eq__(self, other):
        if not isinstance(other, Presentation):
            return NotImplemented
        return (
            self._p == other._p
            and self._q == other._q
            and self._dim == other._dim
            and self._init == other._init
            and self._shifts == other._shifts
        )

    def __repr__(self):
        return f"Presentation(p={self._p}, q={self._q}, dim={self._dim})"

    # -- JSON interchange ---------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "p": self._p,
            "q": self._q,
            "dim": self._dim,
            "labels": list(self._labels),
            "init": [format_gaussian(x) for x in self._init],
            "shifts": {
                f"{s},{t}": [
                    [format_gaussian(m[r, c]) for c in range(self._dim)]
                    for r in range(self._dim)
                ]
                for (s, t), m in self._shifts.items()
            },
        }

    def to_json_text(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json_dict(cls, data) -> "Presentation":
        if not isinstance(data, dict):
            raise ParseError("presentation must be a JSON object")
        required = {"p", "q", "dim", "labels", "init", "shifts"}
        extra = set(data) - required
        if extra:
            raise ParseError(f"unknown presentation fields: {sorted(extra)}")
        missing = required - set(data)
        if missing:
            raise ParseError(f"missing presentation fields: {sorted(missing)}")
        p, q, dim = data["p"], data["q"], data["dim"]
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in (p, q, dim)):
            raise ParseError("p, q, dim must be integers")
        labels = data["labels"]
        init = data["init"]
        if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
            raise ParseError("labels must be a list of strings")
        if not isinstance(init, list) or len(init) != dim:
            raise ParseError("init must list one value per generator")
        if len(labels) != dim:
            raise ParseError("labels must list one name per generator")
        shifts_raw = data["shifts"]
        if not isinstance(shifts_raw, dict):
            raise ParseError("shifts must be an object keyed by 's,t'")
        shifts = {}
        for key, rows in shifts_raw.items():
            parts = key.split(",")
            if len(parts) != 2:
                raise ParseError(f"bad shift key {key!r}")
            try:
                s, t = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError(f"bad shift key {key!r}") from None
            if not isinstance(rows, list) or len(rows) != dim:
                raise ParseError(f"shift {key!r} must have {dim} rows")
            entries = []
            for row in rows:
                if not isinstance(row, list) or len(row) != dim:
                    raise ParseError(f"shift {key!r} rows must have {dim} entries")
                for cell in row:
                    if not isinstance(cell, str):
                        raise ParseError(f"shift {key!r} entries must be strings")
                    entries.append(parse_gaussian(cell))
            shifts[(s, t)] = DenseMatrix(dim, dim, entries)
        if p < 1 or q < 1:
            raise ParseError("alphabet sizes must be at least 1")
        if set(shifts) != {(s, t) for s in range(p) for t in range(q)}:
            raise ParseError("shifts must cover exactly the letter pairs")
        return cls(p, q, [parse_gaussian(x) for x in init], shifts, labels)

    @classmethod
    def from_json_text(cls, text: str) -> "Presentation":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
        return cls.from_json_dict(data)


def zero_presentation(p: int = 2, q: int = 2) -> Presentation:
    """The zero function: no generators at all."""
    shifts = {(s, t): DenseMatrix(0, 0, ()) for s in range(p) for t in range(q)}
    return Presentation(p, q, (), shifts, ())


# -- evaluation and unfolding ---------------------------------------------


def _column_actions(pres: Presentation) -> dict:
    """shift (s,t) -> per-column nonzero entries [(k, value), ...].

    Applying a shift to a coordinate vector v yields
    out[j] = sum_k shift[k, j] * v[k]; precomputing columns skips zeros.
    """
    actions = {}
    d = pres.dim
    for (s, t), m in pres.shift_items():
        e = m.entries
        cols = []
        for j in range(d):
            col = [(k, e[k * d + j]) for k in range(d) if e[k * d + j]]
            cols.append(col)
        actions[(s, t)] = cols
    return actions


def _apply_action(cols, vec):
    out = []
    for col in cols:
        acc = ZERO
        for k, w in col:
            x = vec[k]
            if x:
                acc = acc + w * x
        out.append(acc)
    return out


def evaluate(pres: Presentation, pair: WordPair) -> GaussianRational:
    """Value of the represented function at a word pair."""
    if pair.p != pres.p or pair.q != pres.q:
        raise ValueError("word pair alphabets do not match the presentation")
    if pres.dim == 0:
        return ZERO
    actions = _column_actions(pres)
    vec = list(pres.init)
    for s, t in pair.letters():
        vec = _apply_action(actions[(s, t)], vec)
    return vec[0]


def _coordinate_grids(pres: Presentation, depth: int) -> list:
    """Level-by-level coordinate vectors for every pair up to the depth.

    Level L is a p^L x q^L grid; cell (r, c) holds the vector of all
    generator values at the pair whose words are the digits of r and c.
    """
    actions = _column_actions(pres)
    levels = [[[list(pres.init)]]]
    pr, qc = 1, 1
    for _ in range(depth):
        cur = levels[-1]
        nxt = [[None] * (qc * pres.q) for _ in range(pr * pres.p)]
        for r in range(pr):
            for c in range(qc):
                vec = cur[r][c]
                for (s, t), cols in actions.items():
                    nxt[r + s * pr][c + t * qc] = _apply_action(cols, vec)
        levels.append(nxt)
        pr *= pres.p
        qc *= pres.q
    return levels


def unfold(pres: Presentation, depth: int) -> DenseMatrix:
    """p^depth x q^depth matrix of values, words encoded as digit indices."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    rows, cols = pres.p**depth, pres.q**depth
    if pres.dim == 0:
        return DenseMatrix.zeros(rows, cols)
    grid = _coordinate_grids(pres, depth)[depth]
    return DenseMatrix(rows, cols, [grid[r][c][0] for r in range(rows) for c in range(cols)])


# -- the four products and transpose ----------------------------------------


def rec_product(pa: Presentation, pb: Presentation) -> Presentation:
    """Matrix product: C[U, W] = sum_V A[U, V] * B[V, W] over the inner words.

    Shift rule: shift_C(s, t) = sum_v shift_A(s, v) (x) shift_B(v, t), acting
    on generators A_i.B_j indexed row-major.
    """
    if pa.q != pb.p:
        raise ValueError("inner alphabets do not match")
    a, b = pa.dim, pb.dim
    dim = a * b
    init = [pa.init[i] * pb.init[j] for i in range(a) for j in range(b)]
    labels = [f"{x}.{y}" for x in pa.labels for y in pb.labels]
    shifts = {}
    for s in range(pa.p):
        for t in range(pb.q):
            out = [ZERO] * (dim * dim)
            for v in range(pa.q):
                ma = pa.shift(s, v)
                mb = pb.shift(v, t)
                for k in range(a):
                    for i in range(a):
                        x = ma[k, i]
                        if not x:
                            continue
                        for l in range(b):
                            for j in range(b):
                                y = mb[l, j]
                                if y:
                                    idx = (k * b + l) * dim + (i * b + j)
                                    out[idx] = out[idx] + x * y
            shifts[(s, t)] = DenseMatrix(dim, dim, out)
    return Presentation(pa.p, pb.q, init, shifts, labels)


def rec_hadamard(pa: Presentation, pb: Presentation) -> Presentation:
    """Entrywise product: generators A_i.B_j, shifts the Kronecker squares."""
    if pa.p != pb.p or pa.q != pb.q:
        raise ValueError("alphabets do not match")
    a, b = pa.dim, pb.dim
    dim = a * b
    init = [pa.init[i] * pb.init[j] for i in range(a) for j in range(b)]
    labels = [f"{x}*{y}" for x in pa.labels for y in pb.labels]
    shifts = {}
    for (s, t), ma in pa.shift_items():
        mb = pb.shift(s, t)
        out = [ZERO] * (dim * dim)
        for k in range(a):
            for i in range(a):
                x = ma[k, i]
                if not x:
                    continue
                for l in range(b):
                    for j in range(b):
                        y = mb[l, j]
                        if y:
                            out[(k * b + l) * dim + (i * b + j)] = x * y
        shifts[(s, t)] = DenseMatrix(dim, dim, out)
    return Presentation(pa.p, pa.q, init, shifts, labels)


def rec_scale(factor, pres: Presentation) -> Presentation:
    """Scalar multiple: same shifts, scaled initial values."""
    f = as_gaussian(factor)
    return Presentation(
        pres.p,
        pres.q,
        [f * x for x in pres.init],
        dict(pres.shift_items()),
        pres.labels,
    )


def rec_sum(pa: Presentation, pb: Presentation) -> Presentation:
    """Pointwise sum with the sum itself as generator 0.

    Built as the direct sum conjugated by the basis change that replaces the
    first A generator with A_0 + B_0, so the represented function is again
    generator 0.
    """
    if pa.p != pb.p or pa.q != pb.q:
        raise ValueError("alphabets do not match")
    a, b = pa.dim, pb.dim
    if a == 0:
        return pb
    if b == 0:
        return pa
    dim = a + b
    init = [pa.init[0] + pb.init[0]]
    init.extend(pa.init[1:])
    init.extend(pb.init)
    labels = [f"{pa.labels[0]}+{pb.labels[0]}"]
    labels.extend(pa.labels[1:])
    labels.extend(pb.labels)
    shifts = {}
    for (s, t), ma in pa.shift_items():
        mb = pb.shift(s, t)
        rows = [[ZERO] * dim for _ in range(dim)]
        for k in range(a):
            for j in range(a):
                rows[k][j] = ma[k, j]
        for k in range(b):
            for j in range(b):
                rows[a + k][a + j] = mb[k, j]
        # column 0 of the conjugated matrix: image of A_0 + B_0
        for k in range(b):
            rows[a + k][0] = mb[k, 0]
        # row a absorbs the change of basis B_0 = C_a, A_0 = C_0 - C_a
        for j in range(dim):
            rows[a][j] = rows[a][j] - rows[0][j]
        shifts[(s, t)] = DenseMatrix.from_rows(rows)
    return Presentation(pa.p, pa.q, init, shifts, labels)


def rec_transpose(pres: Presentation) -> Presentation:
    """Swap the word roles: T[U, W] = A[W, U]; shift(s, t) becomes shift(t, s)."""
    shifts = {(t, s): m for (s, t), m in pres.shift_items()}
    return Presentation(pres.q, pres.p, pres.init, shifts, pres.labels)


def rec_convolution(pa: Presentation, pb: Presentation) -> Presentation:
    """Convolution over splittings:

        (A * B)[U, W] = sum over U = U1 U2, W = W1 W2 with |U1| = |W1|
                        of A[U1, W1] * B[U2, W2].

    Shifting by one letter either extends B's block (term (shift B)) or
    closes it at length zero and starts shifting A (term (shift A) * B[empty]),
    so the generator space is {A_i * B_j} plus a copy of {A_i}.
    """
    if pa.p != pb.p or pa.q != pb.q:
        raise ValueError("alphabets do not match")
    a, b = pa.dim, pb.dim
    if a == 0 or b == 0:
        return zero_presentation(pa.p, pa.q)
    dim = a * b + a
    init = [pa.init[i] * pb.init[j] for i in range(a) for j in range(b)]
    init.extend(pa.init)
    labels = [f"{x}~{y}" for x in pa.labels for y in pb.labels]
    labels.extend(pa.labels)
    shifts = {}
    for (s, t), ma in pa.shift_items():
        mb = pb.shift(s, t)
        rows = [[ZERO] * dim for _ in range(dim)]
        for i in range(a):
            for j in range(b):
                col = i * b + j
                for l in range(b):
                    rows[i * b + l][col] = mb[l, j]
                bj = pb.init[j]
                if bj:
                    for k in range(a):
                        x = ma[k, i]
                        if x:
                            rows[a * b + k][col] = rows[a * b + k][col] + x * bj
        for i in range(a):
            col = a * b + i
            for k in range(a):
                rows[a * b + k][col] = ma[k, i]
        shifts[(s, t)] = DenseMatrix.from_rows(rows)
    return Presentation(pa.p, pa.q, init, shifts, labels)


# -- minimization and saturation --------------------------------------------


def _orbit_span(dim, seeds, step) -> SpanBasis:
    """Closure of the seeds under the step maps, as an echelon span."""
    span = SpanBasis(dim)
    work = []
    for seed in seeds:
        added = span.add(seed)
        if added is not None:
            work.append(added)
    while work:
        vec = work.pop()
        for apply_one in step:
            added = span.add(apply_one(vec))
            if added is not None:
                work.append(added)
    return span


def _forward_span(pres: Presentation) -> SpanBasis:
    # orbit of the first coordinate vector under left multiplication
    d = pres.dim
    mats = [m for _, m in pres.shift_items()]

    def make_step(m):
        e = m.entries

        def step(v):
            return [
                sum((e[r * d + c] * v[c] for c in range(d) if v[c]), ZERO)
                for r in range(d)
            ]

        return step

    e0 = [ONE] + [ZERO] * (d - 1)
    return _orbit_span(d, [e0], [make_step(m) for m in mats])


def _observation_span(pres: Presentation) -> SpanBasis:
    # orbit of the init row under right multiplication
    d = pres.dim
    mats = [m for _, m in pres.shift_items()]

    def make_step(m):
        e = m.entries

        def step(v):
            return [
                sum((e[k * d + c] * v[k] for k in range(d) if v[k]), ZERO)
                for c in range(d)
            ]

        return step

    return _orbit_span(d, [list(pres.init)], [make_step(m) for m in mats])


def observation_kernel(pres: Presentation) -> list:
    """Vectors x with (init row) . (any shift word) . x = 0.

    A generator combination lies here exactly when the combined function
    vanishes identically; computed from the observation orbit.
    """
    if pres.dim == 0:
        return []
    obs = _observation_span(pres)
    if obs.dim == 0:
        return [list(row) for row in DenseMatrix.identity(pres.dim).to_lists()]
    return kernel_basis(DenseMatrix.from_rows(obs.vectors()))


def restriction_kernel(pres: Presentation, depth: int) -> list:
    """Generator combinations vanishing on every pair of length <= depth.

    Brute enumeration; agrees with :func:`observation_kernel` once the
    restriction dimensions saturate.
    """
    if pres.dim == 0:
        return []
    levels = _coordinate_grids(pres, depth)
    rows = []
    for grid in levels:
        for row in grid:
            rows.extend(row)
    return kernel_basis(DenseMatrix.from_rows(rows))


def minimize(pres: Presentation) -> Presentation:
    """Smallest presentation of the same function.

    Restrict to the forward orbit of the represented coordinate, then quotient
    by the subspace the observation orbit cannot see. The first generator of
    the result is the function itself.
    """
    d = pres.dim
    if d == 0:
        return zero_presentation(pres.p, pres.q)
    forward = _forward_span(pres)
    fwd = forward.vectors()
    obs = _observation_span(pres)
    # N = vectors of the forward span annihilated by every observation row
    if obs.dim == 0:
        null_coords = [list(row) for row in DenseMatrix.identity(len(fwd)).to_lists()]
    else:
        ov = DenseMatrix.from_rows(
            [
                [
                    sum((o[k] * v[k] for k in range(d) if v[k]), ZERO)
                    for v in fwd
                ]
                for o in obs.vectors()
            ]
        )
        null_coords = kernel_basis(ov)
    null_vectors = []
    for coords in null_coords:
        vec = [ZERO] * d
        for c, v in zip(coords, fwd):
            if c:
                for k in range(d):
                    if v[k]:
                        vec[k] = vec[k] + c * v[k]
        null_vectors.append(vec)
    m = len(fwd) - len(null_vectors)
    if m == 0:
        return zero_presentation(pres.p, pres.q)
    # complete the null space to a basis of the forward span, first candidate
    # the represented coordinate itself so generator 0 survives as the function
    completion = SpanBasis(d)
    for vec in null_vectors:
        completion.add(vec)
    e0 = [ONE] + [ZERO] * (d - 1)
    chosen = []
    for cand in [e0] + fwd:
        if len(chosen) == m:
            break
        if completion.add(cand) is not None:
            chosen.append(cand)
    if len(chosen) != m:
        raise AssertionError("forward span completion failed")
    basis = chosen + null_vectors
    cols = len(basis)
    # solve for all induced shift columns at once against the basis matrix
    mats = pres.shift_items()
    rhs = []
    for _, mat in mats:
        for u in chosen:
            rhs.append(
                [
                    sum((mat[r, c] * u[c] for c in range(d) if u[c]), ZERO)
                    for r in range(d)
                ]
            )
    aug_rows = []
    for r in range(d):
        row = [basis[j][r] for j in range(cols)]
        row.extend(w[r] for w in rhs)
        aug_rows.append(row)
    reduced, rk, pivots = rref(DenseMatrix.from_rows(aug_rows))
    if pivots[:cols] != tuple(range(cols)) or rk != cols:
        raise AssertionError("quotient basis is not independent")
    new_shifts = {}
    idx = 0
    for (s, t), _ in mats:
        entries = []
        for k in range(m):
            for j in range(m):
                entries.append(reduced[k, cols + idx + j])
        new_shifts[(s, t)] = DenseMatrix(m, m, entries)
        idx += m
    new_init = [
        sum((pres.init[k] * u[k] for k in range(d) if u[k]), ZERO) for u in chosen
    ]
    labels = [f"m{k}" for k in range(m)]
    return Presentation(pres.p, pres.q, new_init, new_shifts, labels)


def complexity(pres: Presentation) -> int:
    """Dimension of a minimal presentation of the represented function."""
    return minimize(pres).dim


def same_function(pa: Presentation, pb: Presentation) -> bool:
    """Exact equality of represented functions (minimize the difference)."""
    if pa.p != pb.p or pa.q != pb.q:
        return False
    return minimize(rec_sum(pa, rec_scale(-1, pb))).dim == 0


def saturation_level(pres: Presentation, cap: int) -> int | None:
    """Smallest N with equal generator-restriction dimension at N and N + 1.

    The dimension is the rank of the matrix whose rows are generators and
    whose columns are all word pairs of length <= N. Returns None when no
    level at or below the cap qualifies.
    """
    if cap < 0:
        raise ValueError("cap must be nonnegative")
    if pres.dim == 0:
        return 0
    levels = _coordinate_grids(pres, cap + 1)
    ranks = []
    cols = []  # accumulated value vectors, one per pair
    for grid in levels:
        for row in grid:
            cols.extend(row)
        ranks.append(rref(DenseMatrix.from_rows(cols))[1])
    for n in range(cap + 1):
        if ranks[n] == ranks[n + 1]:
            return n
    return None


# -- builtin presentations ---------------------------------------------------


def _mat(dim, rows):
    return DenseMatrix(dim, dim, [as_gaussian(x) for row in rows for x in row])


def _builtin_hankel() -> Presentation:
    i = I
    shifts = {
        (0, 0): _mat(2, [[1, i], [0, 0]]),
        (0, 1): _mat(2, [[0, -i], [1, ONE + i]]),
        (1, 0): _mat(2, [[0, -i], [1, ONE + i]]),
        (1, 1): _mat(2, [[i, i], [0, 0]]),
    }
    return Presentation(2, 2, [ONE, i], shifts, ["H0", "H1"])


def _builtin_lower() -> Presentation:
    i = I
    shifts = {
        (0, 0): _mat(4, [[1, i, 1, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]),
        (0, 1): _mat(4, [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 1, 0, 1]]),
        (1, 0): _mat(
            4,
            [
                [0, -i, -ONE + i, -i],
                [1, ONE + i, -i, 1],
                [0, 0, 0, 0],
                [0, 0, 0, 0],
            ],
        ),
        (1, 1): _mat(
            4,
            [[0, 0, 0, 0], [0, 0, 0, 0], [1, ONE + i, 1, i], [0, i, 0, i]],
        ),
    }
    return Presentation(2, 2, [ONE, i, ONE, ZERO], shifts, ["L0", "L1", "L2", "L3"])


def _builtin_diag() -> Presentation:
    shifts = {
        (0, 0): _mat(3, [[1, 0, 0], [0, 0, 0], [0, 1, 1]]),
        (0, 1): DenseMatrix.zeros(3, 3),
        (1, 0): DenseMatrix.zeros(3, 3),
        (1, 1): _mat(3, [[0, 2, 0], [1, 1, 1], [0, -2, 0]]),
    }
    one_plus_i = ONE + I
    return Presentation(2, 2, [ONE, one_plus_i, one_plus_i], shifts, ["D0", "D1", "D2"])


def _builtin_identity() -> Presentation:
    shifts = {
        (s, t): (_mat(1, [[1]]) if s == t else _mat(1, [[0]]))
        for s in range(2)
        for t in range(2)
    }
    return Presentation(2, 2, [ONE], shifts, ["I0"])


def _builtin_empty_delta() -> Presentation:
    shifts = {(s, t): _mat(1, [[0]]) for s in range(2) for t in range(2)}
    return Presentation(2, 2, [ONE], shifts, ["E0"])


def _builtin_ones() -> Presentation:
    shifts = {(s, t): _mat(1, [[1]]) for s in range(2) for t in range(2)}
    return Presentation(2, 2, [ONE], shifts, ["J0"])


def _builtin_diag_one_plus_n() -> Presentation:
    """Diagonal function 1 + |U| on (U, U), zero elsewhere.

    Second generator is the diagonal indicator; shifting along a diagonal
    letter adds the indicator, any off-diagonal letter kills both.
    """
    grow = _mat(2, [[1, 0], [1, 1]])
    shifts = {
        (0, 0): grow,
        (1, 1): grow,
        (0, 1): DenseMatrix.zeros(2, 2),
        (1, 0): DenseMatrix.zeros(2, 2),
    }
    return Presentation(2, 2, [ONE, ONE], shifts, ["N0", "N1"])


_BUILTIN_FACTORIES = {
    "H": _builtin_hankel,
    "L": _builtin_lower,
    "D": _builtin_diag,
    "I": _builtin_identity,
    "E": _builtin_empty_delta,
    "ones": _builtin_ones,
    "zero": zero_presentation,
    "diag1plusn": _builtin_diag_one_plus_n,
}


def builtin(name: str) -> Presentation:
    """Named example presentations; "U" is the diagonal times transposed lower."""
    if name == "U":
        return rec_product(_builtin_diag(), rec_transpose(_builtin_lower()))
    try:
        factory = _BUILTIN_FACTORIES[name]
    except KeyError:
        known = sorted([*_BUILTIN_FACTORIES, "U"])
        raise ValueError(f"unknown builtin {name!r}; known: {', '.join(known)}") from None
    return factory()
