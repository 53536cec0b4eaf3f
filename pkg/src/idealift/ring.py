"""The matrix ring M2(F_p): enumeration, idempotents, one-sided ideals.

Everything here is exhaustive by design. The ring has p**4 elements,
enumerated once per modulus in lexicographic entry order and cached as a
single (p**4, 2, 2) array; idempotent scans and ideal generation are
batch operations on that array.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from . import kernels
from .algebra import (
    MatrixFp,
    PrimeField,
    entry_codes,
    enum_budget,
    format_matrix,
    matrices_from_codes,
    parse_matrix_block,
)
from .errors import BudgetExceeded

SIDES = ("left", "right")

ZERO = "zero"
ZERO_DIVISOR = "zero divisor"
UNIT = "unit"


@dataclass(frozen=True)
class MatrixRing:
    """Descriptor for M_n(F_p); this artifact exercises n = 2 only."""

    field: PrimeField
    n: int = 2

    def __post_init__(self):
        if self.n != 2:
            raise ValueError("only the 2x2 matrix ring is supported")

    def __len__(self):
        return self.field.p ** 4

    def __iter__(self):
        return enumerate_ring(self)

    def element_array(self) -> np.ndarray:
        """All p**4 elements as a read-only (p**4, 2, 2) array, lex order."""
        return _ring_element_array(self.field.p)


@functools.lru_cache(maxsize=None)
def _ring_element_array(p: int) -> np.ndarray:
    size = p ** 4
    budget = enum_budget()
    if size > budget:
        raise BudgetExceeded(
            f"enumerating M2(F_{p}) needs p^4 = {size} elements, over the "
            f"budget of {budget} (override with IDEALIFT_ENUM_BUDGET)"
        )
    arr = matrices_from_codes(np.arange(size, dtype=np.int64), 2, 2, p)
    arr.setflags(write=False)
    return arr


def enumerate_ring(ring: MatrixRing):
    """Yield every element of M2(F_p) exactly once, lexicographic entry order."""
    field = ring.field
    for mat in ring.element_array():
        yield MatrixFp(mat, field)


def is_idempotent(a: MatrixFp) -> bool:
    """True iff a*a = a."""
    if a.shape != (2, 2):
        raise ValueError("idempotency is checked on 2x2 ring elements")
    square = (a.array @ a.array) % a.field.p
    return bool(np.array_equal(square, a.array))


def enumerate_nontrivial_idempotents(ring: MatrixRing) -> list[MatrixFp]:
    """All nonzero, noninvertible idempotents, found by exhaustive scan.

    The scan is the ground truth; the closed-form list
    (:func:`canonical_idempotent_forms`) is a cross-check, not the source.
    """
    arr = ring.element_array()
    p = ring.field.p
    squares = np.matmul(arr, arr) % p
    idem = (squares == arr).all(axis=(1, 2))
    nonzero = arr.any(axis=(1, 2))
    ranks = kernels.rank_mod_many(arr, p)
    keep = idem & nonzero & (ranks < 2)
    return [MatrixFp(mat, ring.field) for mat in arr[keep]]


def canonical_idempotent_forms(field: PrimeField) -> list[MatrixFp]:
    """The p+1 closed-form generators [[0,0],[0,1]] and [[1,r],[0,0]], r in F_p."""
    forms = [field.matrix([[0, 0], [0, 1]])]
    for r in range(field.p):
        forms.append(field.matrix([[1, r], [0, 0]]))
    return forms


@dataclass(frozen=True)
class PrincipalIdeal:
    """A one-sided principal ideal of M2(F_p), elements in canonical order."""

    generator: MatrixFp
    side: str
    elements: tuple[MatrixFp, ...]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, item):
        return item in set(self.elements)

    def element_array(self) -> np.ndarray:
        return np.stack([m.array for m in self.elements])


def principal_ideal(a: MatrixFp, side: str) -> PrincipalIdeal:
    """Generate {r a | r in M2(F_p)} (left) or {a r | r in M2(F_p)} (right).

    Built by exhaustive multiplication over the whole ring, deduplicated,
    and sorted lexicographically on entries so that set equality is
    representation equality.
    """
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}, got {side!r}")
    if a.shape != (2, 2):
        raise ValueError("ideal generators must be 2x2")
    ring = MatrixRing(a.field)
    arr = ring.element_array()
    p = a.field.p
    if side == "left":
        products = np.matmul(arr, a.array) % p
    else:
        products = np.matmul(a.array, arr) % p
    codes = np.unique(entry_codes(products, p))
    members = matrices_from_codes(codes, 2, 2, p)
    elements = tuple(MatrixFp(mat, a.field) for mat in members)
    return PrincipalIdeal(generator=a, side=side, elements=elements)


def classify_element(a: MatrixFp) -> str:
    """Partition of M2(F_q): zero, zero divisor (rank 1) or unit (rank 2)."""
    if a.shape != (2, 2):
        raise ValueError("classification applies to 2x2 ring elements")
    r = a.rank()
    if r == 0:
        return ZERO
    if r == 2:
        return UNIT
    return ZERO_DIVISOR


def minimal_ideals(ring: MatrixRing, side: str) -> list[PrincipalIdeal]:
    """Distinct ideals generated by nontrivial idempotents, one per ideal.

    The generator kept for each ideal is the first idempotent in scan
    order that produces it.
    """
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}, got {side!r}")
    seen: set[frozenset] = set()
    out = []
    for idem in enumerate_nontrivial_idempotents(ring):
        ideal = principal_ideal(idem, side)
        key = frozenset(m.entries() for m in ideal.elements)
        if key not in seen:
            seen.add(key)
            out.append(ideal)
    return out


# ---------------------------------------------------------------------------
# ideal file format
# ---------------------------------------------------------------------------

def format_ideal(ideal: PrincipalIdeal) -> str:
    """Header "ideal side=<side> generator=<entries>" then one matrix block per member."""
    gen = ",".join(str(v) for v in ideal.generator.entries())
    parts = [f"ideal side={ideal.side} generator={gen}"]
    for member in ideal.elements:
        parts.append(format_matrix(member))
    return "\n".join(parts)


def parse_ideal(text: str) -> PrincipalIdeal:
    """Parse an ideal file and verify it by exhaustive regeneration."""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines or not lines[0].startswith("ideal "):
        raise ValueError("not an ideal file: missing 'ideal' header")
    fields = dict(
        tok.split("=", 1) for tok in lines[0].split()[1:] if "=" in tok
    )
    if "side" not in fields or "generator" not in fields:
        raise ValueError("ideal header must carry side= and generator=")
    side = fields["side"]
    if side not in SIDES:
        raise ValueError(f"bad side {side!r} in ideal header")
    gen_entries = [int(tok) for tok in fields["generator"].split(",")]
    if len(gen_entries) != 4:
        raise ValueError("generator must have 4 row-major entries")
    members = []
    pos = 1
    while pos < len(lines):
        matrix, pos = parse_matrix_block(lines, pos)
        members.append(matrix)
    if not members:
        raise ValueError("ideal file lists no elements")
    field = members[0].field
    generator = field.matrix([gen_entries[:2], gen_entries[2:]])
    regenerated = principal_ideal(generator, side)
    if set(regenerated.elements) != set(members):
        raise ValueError("ideal file does not match regeneration from its generator")
    return regenerated
