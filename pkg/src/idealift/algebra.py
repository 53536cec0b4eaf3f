"""Exact arithmetic over prime fields F_p and matrices with entries in them.

Field elements are machine integers kept reduced to [0, p); the modulus is
capped at ``P_LIMIT`` so every product in the elimination kernels fits an
int64 with room to spare. Matrices are immutable numpy int64 arrays tagged
with their field, compared entrywise, hashable, and ordered by their
row-major entry tuple wherever a deterministic order is needed.

This module also owns the plain-text matrix format used by every code
file: a header line ``"k l p"`` followed by k lines of l space-separated
integers in [0, p).
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from . import kernels

P_LIMIT = 2 ** 15

DEFAULT_ENUM_BUDGET = 10 ** 6


def enum_budget() -> int:
    """Enumeration budget (number of objects), overridable via IDEALIFT_ENUM_BUDGET."""
    raw = os.environ.get("IDEALIFT_ENUM_BUDGET", "").strip()
    if raw:
        budget = int(raw)
        if budget < 1:
            raise ValueError("IDEALIFT_ENUM_BUDGET must be positive")
        return budget
    return DEFAULT_ENUM_BUDGET


def is_prime(n: int) -> bool:
    """Trial division; moduli here are tiny by construction."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Factor q as p**r with p prime, r >= 1. Raises ValueError otherwise."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1
    else:
        return q, 1
    m, r = q, 0
    while m % p == 0:
        m //= p
        r += 1
    if m != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, r


class PrimeField:
    """The prime field F_p."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        if p >= P_LIMIT:
            raise ValueError(f"modulus {p} exceeds the supported bound {P_LIMIT}")
        self.p = p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __iter__(self):
        return (FieldElement(v, self) for v in range(self.p))

    def element(self, value: int) -> "FieldElement":
        return FieldElement(value, self)

    def zero(self) -> "FieldElement":
        return FieldElement(0, self)

    def one(self) -> "FieldElement":
        return FieldElement(1, self)

    def matrix(self, rows) -> "MatrixFp":
        return MatrixFp(rows, self)

    def zeros(self, k: int, l: int) -> "MatrixFp":
        return MatrixFp(np.zeros((k, l), dtype=np.int64), self)

    def identity(self, k: int) -> "MatrixFp":
        return MatrixFp(np.eye(k, dtype=np.int64), self)


class FieldElement:
    """An element of F_p, always stored reduced to [0, p)."""

    __slots__ = ("value", "field")

    def __init__(self, value: int, field: PrimeField):
        self.value = int(value) % field.p
        self.field = field

    def __repr__(self):
        return f"{self.value} (mod {self.field.p})"

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and other.field == self.field
            and other.value == self.value
        )

    def __hash__(self):
        return hash((self.value, self.field.p))

    def __add__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return field_add(self, other)

    def __sub__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return field_add(self, field_neg(other))

    def __mul__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return field_mul(self, other)

    def __neg__(self):
        return field_neg(self)

    def inverse(self) -> "FieldElement":
        return field_inv(self)


def _same_field(a: FieldElement, b: FieldElement) -> PrimeField:
    if a.field != b.field:
        raise ValueError(f"modulus mismatch: {a.field.p} vs {b.field.p}")
    return a.field


def field_add(a: FieldElement, b: FieldElement) -> FieldElement:
    field = _same_field(a, b)
    return FieldElement(a.value + b.value, field)


def field_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    field = _same_field(a, b)
    return FieldElement(a.value * b.value, field)


def field_neg(a: FieldElement) -> FieldElement:
    return FieldElement(-a.value, a.field)


def field_inv(a: FieldElement) -> FieldElement:
    if a.value == 0:
        raise ZeroDivisionError("zero has no inverse in a field")
    return FieldElement(pow(a.value, -1, a.field.p), a.field)


class MatrixFp:
    """An immutable k x l matrix over F_p with entrywise equality."""

    __slots__ = ("array", "field")

    def __init__(self, array, field: PrimeField):
        arr = np.asarray(array, dtype=np.int64)
        if arr.ndim != 2:
            raise ValueError("matrix data must be two-dimensional")
        arr = arr % field.p
        arr.setflags(write=False)
        self.array = arr
        self.field = field

    @property
    def rows(self) -> int:
        return self.array.shape[0]

    @property
    def cols(self) -> int:
        return self.array.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.array.shape

    def entries(self) -> tuple[int, ...]:
        """Row-major entry tuple; doubles as the canonical sort key."""
        return tuple(int(v) for v in self.array.ravel())

    def rank(self) -> int:
        return kernels.rank_mod(self.array, self.field.p)

    def transpose(self) -> "MatrixFp":
        return MatrixFp(self.array.T, self.field)

    def is_zero(self) -> bool:
        return not self.array.any()

    def __eq__(self, other):
        return (
            isinstance(other, MatrixFp)
            and other.field == self.field
            and other.shape == self.shape
            and bool(np.array_equal(other.array, self.array))
        )

    def __hash__(self):
        return hash((self.shape, self.field.p, self.array.tobytes()))

    def __repr__(self):
        body = "; ".join(" ".join(str(int(v)) for v in row) for row in self.array)
        return f"MatrixFp([{body}] mod {self.field.p})"

    def __add__(self, other):
        return mat_add(self, other)

    def __sub__(self, other):
        return mat_add(self, mat_neg(other))

    def __neg__(self):
        return mat_neg(self)

    def __mul__(self, other):
        if isinstance(other, MatrixFp):
            return mat_mul(self, other)
        return self._scale(other)

    def __rmul__(self, other):
        return self._scale(other)

    def __matmul__(self, other):
        return mat_mul(self, other)

    def _scale(self, scalar) -> "MatrixFp":
        if isinstance(scalar, FieldElement):
            if scalar.field != self.field:
                raise ValueError(
                    f"modulus mismatch: {scalar.field.p} vs {self.field.p}"
                )
            scalar = scalar.value
        return MatrixFp(self.array * int(scalar), self.field)


def _same_shape(a: MatrixFp, b: MatrixFp) -> None:
    if a.field != b.field:
        raise ValueError(f"modulus mismatch: {a.field.p} vs {b.field.p}")
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")


def mat_add(a: MatrixFp, b: MatrixFp) -> MatrixFp:
    _same_shape(a, b)
    return MatrixFp(a.array + b.array, a.field)


def mat_neg(a: MatrixFp) -> MatrixFp:
    return MatrixFp(-a.array, a.field)


def mat_mul(a: MatrixFp, b: MatrixFp) -> MatrixFp:
    if a.field != b.field:
        raise ValueError(f"modulus mismatch: {a.field.p} vs {b.field.p}")
    if a.cols != b.rows:
        raise ValueError(f"shape mismatch for product: {a.shape} times {b.shape}")
    return MatrixFp(a.array @ b.array, a.field)


def rank(a: MatrixFp) -> int:
    """Rank over F_p by exact Gaussian elimination."""
    return a.rank()


@dataclass(frozen=True)
class GLOrderQuery:
    """Parameters (q, n) for the order of GL(n, q); q any prime power."""

    q: int
    n: int = 2

    def __post_init__(self):
        prime_power(self.q)
        if self.n < 1:
            raise ValueError("matrix size n must be at least 1")


def gl_order(q, n: int = 2) -> int:
    """|GL(n, q)| = prod_{i=0}^{n-1} (q^n - q^i), exact integer."""
    query = q if isinstance(q, GLOrderQuery) else GLOrderQuery(q, n)
    qn = query.q ** query.n
    order = 1
    for i in range(query.n):
        order *= qn - query.q ** i
    return order


# ---------------------------------------------------------------------------
# batch helpers
# ---------------------------------------------------------------------------

def entry_codes(mats: np.ndarray, p: int) -> np.ndarray:
    """Base-p integer code per matrix in a (N, k, l) batch.

    Codes are big-endian on the row-major entries, so numeric order on
    codes is lexicographic order on entry tuples. Only valid while
    p**(k*l) fits comfortably in int64 (always true at desk scale).
    """
    n_digits = mats.shape[1] * mats.shape[2]
    if p ** n_digits >= 2 ** 62:
        raise ValueError("matrix too large to encode in an int64 code")
    powers = (p ** np.arange(n_digits - 1, -1, -1)).astype(np.int64)
    return mats.reshape(mats.shape[0], -1).astype(np.int64) @ powers


def matrices_from_codes(codes: np.ndarray, k: int, l: int, p: int) -> np.ndarray:
    """Inverse of :func:`entry_codes`, returning a (N, k, l) batch."""
    codes = np.asarray(codes, dtype=np.int64)
    n_digits = k * l
    out = np.empty((codes.size, n_digits), dtype=np.int64)
    rem = codes.copy()
    for i in range(n_digits - 1, -1, -1):
        out[:, i] = rem % p
        rem //= p
    return out.reshape(codes.size, k, l)


# ---------------------------------------------------------------------------
# matrix text format
# ---------------------------------------------------------------------------

def format_matrix(a: MatrixFp) -> str:
    """Render one matrix block: header "k l p" then k rows of l entries."""
    lines = [f"{a.rows} {a.cols} {a.field.p}"]
    for row in a.array:
        lines.append(" ".join(str(int(v)) for v in row))
    return "\n".join(lines)


def parse_matrix_block(lines: list[str], start: int = 0) -> tuple[MatrixFp, int]:
    """Parse one matrix block from ``lines[start:]``; returns (matrix, next index)."""
    if start >= len(lines):
        raise ValueError("unexpected end of input while reading a matrix header")
    header = lines[start].split()
    if len(header) != 3:
        raise ValueError(f"bad matrix header at line {start + 1}: {lines[start]!r}")
    try:
        k, l, p = (int(tok) for tok in header)
    except ValueError as exc:
        raise ValueError(f"bad matrix header at line {start + 1}: {lines[start]!r}") from exc
    field = PrimeField(p)
    if start + 1 + k > len(lines):
        raise ValueError(f"matrix at line {start + 1} is missing rows")
    entries = np.zeros((k, l), dtype=np.int64)
    for i in range(k):
        row = lines[start + 1 + i].split()
        if len(row) != l:
            raise ValueError(f"row at line {start + 2 + i} has {len(row)} entries, expected {l}")
        values = [int(tok) for tok in row]
        if any(v < 0 or v >= p for v in values):
            raise ValueError(f"entry out of range [0, {p}) at line {start + 2 + i}")
        entries[i] = values
    return MatrixFp(entries, field), start + 1 + k


def parse_matrix(text: str) -> MatrixFp:
    """Parse a single matrix block (ignoring blank lines)."""
    lines = [line for line in text.splitlines() if line.strip()]
    matrix, pos = parse_matrix_block(lines, 0)
    if pos != len(lines):
        raise ValueError("trailing content after matrix block")
    return matrix
