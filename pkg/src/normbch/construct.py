"""Locator tables and parity check matrices over GF(q).

Positions are 1-based: position j < n carries the locator e^j (e the
primitive element of GF(q^m)), position n carries the locator 0, so the
locators enumerate the whole field exactly once.  A matrix is a dense
numpy array over GF(q) with one column per position plus row-block
metadata; the base construction stacks an all-ones row with the
h-coordinates of the locator powers e_j^t for t = 1..d-3, and the
augmented construction appends s rows holding the leading g-coordinates
of the norm of each embedded locator.

Row and coordinate order is fixed (all-ones first, then t ascending,
then basis coordinate ascending) so that two builds with equal
parameters serialize to identical bytes.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass

import numpy as np

from .field import (
    DEFAULT_MAX_FIELD_SIZE,
    BasisPair,
    FieldElement,
    FieldMismatchError,
    embed_hat,
    is_prime,
    make_basis_pair,
    make_field,
    norm,
)
from . import linalg


@dataclass(frozen=True)
class CodeParams:
    """Parameters (q, m, d) with derived sizes and recorded rule violations.

    Violations are data rather than exceptions so a caller can report
    every failed hypothesis at once; valid is simply "no violations".
    """

    q: int
    m: int
    d: int
    relaxed: bool
    s: int
    mu: int
    n: int
    violations: tuple[str, ...]

    @property
    def valid(self) -> bool:
        return not self.violations


def validate_params(
    q: int, m: int, d: int, relaxed: bool = False, max_size: int = DEFAULT_MAX_FIELD_SIZE
) -> CodeParams:
    """Check every construction hypothesis for (q, m, d).

    Strict mode demands a prime extension degree m > (d-3)!; relaxed
    mode only demands that every divisor of m other than 1 exceeds
    (d-3)!.
    """
    violations: list[str] = []
    if d < 3:
        violations.append(f"d={d} is below the minimum supported distance 3")
    if m < 1:
        violations.append(f"m={m} must be a positive extension degree")
    if not is_prime(q):
        violations.append(f"q={q} is not prime (this implementation supports prime alphabets)")
    s = mu = n = 0
    if q >= 2 and m >= 1:
        n = q**m
    if d >= 3:
        if m >= 1:
            s = -(-m // (d - 2))
            mu = s * (d - 2)
        if q >= 2:
            if q <= d - 3:
                violations.append(f"characteristic q={q} must exceed d-3 = {d - 3}")
            if (d - 2) % q == 0:
                violations.append(f"q={q} divides d-2 = {d - 2}")
            if q < d - 1:
                violations.append(f"q={q} is below d-1 = {d - 1}")
        fact = math.factorial(d - 3)
        if m >= 1:
            if relaxed:
                bad = [t for t in range(2, m + 1) if m % t == 0 and t <= fact]
                if bad:
                    violations.append(
                        f"m={m} has divisors {bad} not exceeding (d-3)! = {fact} (relaxed rule)"
                    )
            else:
                if not is_prime(m):
                    violations.append(f"m={m} is not prime (strict rule; relaxed mode uses divisors)")
                if m <= fact:
                    violations.append(f"m={m} does not exceed (d-3)! = {fact}")
    if n and n > max_size:
        violations.append(f"n={n} exceeds the field size budget {max_size}")
    return CodeParams(q, m, d, relaxed, s, mu, n, tuple(violations))


@dataclass(frozen=True)
class Codeword:
    """Sparse codeword: sorted 1-based support with aligned nonzero coefficients."""

    support: tuple[int, ...]
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.support) != len(self.coeffs):
            raise ValueError("support and coefficients differ in length")
        if any(j < 1 for j in self.support):
            raise ValueError("positions are 1-based")
        if any(a >= b for a, b in zip(self.support, self.support[1:])):
            raise ValueError("support must be strictly increasing")
        if any(c == 0 for c in self.coeffs):
            raise ValueError("coefficients must be nonzero")

    @property
    def weight(self) -> int:
        return len(self.support)


class LocatorTable:
    """Position-to-locator map for one field: e^1, ..., e^(n-1), then 0."""

    def __init__(self, field):
        n = field.size
        values = []
        cur = field.e
        for _ in range(1, n):
            values.append(cur)
            cur = cur * field.e
        values.append(field.zero)
        self.field = field
        self.n = n
        self.values = tuple(values)
        self._position = {el.val: j + 1 for j, el in enumerate(values)}

    def locator(self, position: int) -> FieldElement:
        if not 1 <= position <= self.n:
            raise ValueError(f"position {position} out of range [1, {self.n}]")
        return self.values[position - 1]

    def position_of(self, x: FieldElement) -> int:
        if x.field != self.field:
            raise FieldMismatchError("locator from a different field")
        return self._position[x.val]

    def __len__(self) -> int:
        return self.n


def build_locators(params: CodeParams) -> LocatorTable:
    """Locator table of GF(q^m); needs a buildable field, not full validity."""
    return LocatorTable(make_field(params.q, params.m))


class ParityCheckMatrix:
    """Dense GF(q) parity check matrix with block metadata and locators.

    Immutable by convention; rank is computed lazily and cached.
    """

    def __init__(self, q, rows, blocks, locators=None, params=None):
        self.q = q
        self.rows = np.ascontiguousarray(np.asarray(rows, dtype=np.int16) % q)
        self.blocks = tuple((str(name), int(count)) for name, count in blocks)
        if sum(c for _, c in self.blocks) != self.rows.shape[0]:
            raise ValueError("block row counts do not sum to the row count")
        self.locators = locators
        self.params = params
        self._rank: int | None = None

    @property
    def n(self) -> int:
        return self.rows.shape[1]

    @property
    def row_count(self) -> int:
        return self.rows.shape[0]

    def rank(self) -> int:
        if self._rank is None:
            self._rank = linalg.rank(self.rows, self.q)
        return self._rank

    def dimension(self) -> int:
        return self.n - self.rank()

    def column(self, position: int) -> np.ndarray:
        if not 1 <= position <= self.n:
            raise ValueError(f"position {position} out of range [1, {self.n}]")
        return self.rows[:, position - 1].copy()

    def to_text(self) -> str:
        blocks = ",".join(f"{name}:{count}" for name, count in self.blocks)
        lines = [f"q={self.q} n={self.n} r={self.row_count} blocks={blocks}"]
        for row in self.rows:
            lines.append(" ".join(str(int(v)) for v in row))
        return "\n".join(lines) + "\n"

    def sha256(self) -> str:
        return hashlib.sha256(self.to_text().encode()).hexdigest()

    def __repr__(self):
        return f"ParityCheckMatrix(q={self.q}, {self.row_count}x{self.n}, blocks={self.blocks})"


def _require_buildable(params: CodeParams) -> None:
    # Matrices can be built for experiments even when the distance
    # hypotheses fail, but the field itself must exist.
    if params.d < 3:
        raise ValueError(f"d={params.d} is below 3; no matrix is defined")
    if params.m < 1 or not is_prime(params.q):
        raise ValueError("matrix construction needs a prime q and positive m: " + "; ".join(params.violations))


def bch_matrix(params: CodeParams, locators: LocatorTable | None = None) -> ParityCheckMatrix:
    """Base matrix: all-ones row, then h-coordinates of e_j^t for t = 1..d-3.

    The extended position n has locator 0, so its column is 1 in the
    all-ones row and 0 elsewhere.  Row count is (d-3)m + 1.
    """
    _require_buildable(params)
    loc = locators if locators is not None else build_locators(params)
    q, m, d, n = params.q, params.m, params.d, params.n
    rows = np.zeros((1 + (d - 3) * m, n), dtype=np.int16)
    rows[0, :] = 1
    for j0, x in enumerate(loc.values):
        if x.val == 0:
            continue
        y = x
        for t in range(1, d - 2):
            base = 1 + (t - 1) * m
            rows[base : base + m, j0] = y.coords
            y = y * x
    blocks = [("ones", 1)] + [(f"pow{t}", m) for t in range(1, d - 2)]
    return ParityCheckMatrix(q, rows, blocks, locators=loc, params=params)


def augmented_matrix(
    params: CodeParams,
    basis: BasisPair | None = None,
    locators: LocatorTable | None = None,
) -> ParityCheckMatrix:
    """Base matrix plus s norm rows (leading g-coordinates of norm(embed(e_j))).

    Every norm value provably lies in the GF(q^s) subfield spanned by
    g_1..g_s; the build checks that the trailing coordinates vanish and
    treats a nonzero one as a basis construction bug.  Row count is
    (d-3)m + s + 1.
    """
    if params.d == 3:
        raise ValueError("d=3 needs no norm rows; use bch_matrix, whose code already has distance 3")
    _require_buildable(params)
    base = bch_matrix(params, locators)
    bp = basis if basis is not None else make_basis_pair(params.q, params.m, params.d)
    if bp.field_m != base.locators.field or bp.field_mu.degree != params.mu or bp.s != params.s:
        raise ValueError("basis pair does not match the code parameters")
    s, n = params.s, params.n
    norm_rows = np.zeros((s, n), dtype=np.int16)
    for j0, x in enumerate(base.locators.values):
        value = norm(embed_hat(x, bp), params.d)
        coords = bp.g_coords(value)
        if any(coords[s:]):
            raise RuntimeError("norm value has coordinates outside the g-prefix; basis construction bug")
        norm_rows[:, j0] = coords[:s]
    rows = np.vstack([base.rows, norm_rows])
    blocks = list(base.blocks) + [("norm", s)]
    return ParityCheckMatrix(params.q, rows, blocks, locators=base.locators, params=params)


def syndrome(matrix: ParityCheckMatrix, word: Codeword) -> np.ndarray:
    """matrix times the sparse word, as a length-r vector over GF(q)."""
    if word.support and word.support[-1] > matrix.n:
        raise ValueError(f"support position {word.support[-1]} exceeds n={matrix.n}")
    if not word.support:
        return np.zeros(matrix.row_count, dtype=np.int64)
    cols = matrix.rows[:, [j - 1 for j in word.support]].astype(np.int64)
    return (cols @ np.array(word.coeffs, dtype=np.int64)) % matrix.q


def apply_affine_permutation(
    word: Codeword, a: FieldElement, b: FieldElement, loc: LocatorTable
) -> Codeword:
    """Remap each support locator x to the position of a + b*x; b must be nonzero.

    The coefficient attached to each locator is unchanged; only the
    support order is refreshed.
    """
    if not b:
        raise ValueError("affine permutations need a nonzero multiplier")
    pairs = sorted(
        (loc.position_of(a + b * loc.locator(j)), c) for j, c in zip(word.support, word.coeffs)
    )
    return Codeword(tuple(j for j, _ in pairs), tuple(c for _, c in pairs))


def write_matrix_file(matrix: ParityCheckMatrix, path) -> None:
    with open(path, "w") as fh:
        fh.write(matrix.to_text())


def read_matrix_file(path) -> ParityCheckMatrix:
    """Parse a matrix file; locators and params are not reconstructed."""
    with open(path) as fh:
        header = fh.readline().strip()
        fields = dict(part.split("=", 1) for part in header.split())
        q = int(fields["q"])
        n = int(fields["n"])
        r = int(fields["r"])
        blocks = [
            (name, int(count))
            for name, count in (item.split(":") for item in fields["blocks"].split(","))
        ]
        rows = np.zeros((r, n), dtype=np.int16)
        for i in range(r):
            line = fh.readline().split()
            if len(line) != n:
                raise ValueError(f"row {i} has {len(line)} entries, expected {n}")
            rows[i] = [int(v) for v in line]
    return ParityCheckMatrix(q, rows, blocks)


def write_codeword_file(word: Codeword, n: int, path) -> None:
    with open(path, "w") as fh:
        fh.write(f"n={n}\n")
        for j, c in zip(word.support, word.coeffs):
            fh.write(f"{j} {c}\n")


def read_codeword_file(path) -> tuple[Codeword, int]:
    with open(path) as fh:
        header = fh.readline().strip()
        n = int(header.split("=", 1)[1])
        support = []
        coeffs = []
        for line in fh:
            if not line.strip():
                continue
            j, c = line.split()
            support.append(int(j))
            coeffs.append(int(c))
    return Codeword(tuple(support), tuple(coeffs)), n
