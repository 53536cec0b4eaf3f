"""The projective space P_q(n) and the Grassmannian G_q(n, k).

Subspaces are stored only through their canonical reduced-row-echelon
bases, so equality and deduplication are representation equality; vector
sets are materialized on demand (budget-guarded) for display and for the
desk-scale oracles in the tests. Distances go through ranks of stacked
bases: dim(A+B) is the rank of the two bases stacked, and

    d_S(A, B) = dim A + dim B - 2 dim(A n B) = 2 dim(A+B) - dim A - dim B
    d_I(A, B) = max(dim A, dim B) - dim(A n B)

Grassmannian enumeration walks RREF pivot patterns directly (each
subspace is produced exactly once by construction), which keeps the count
check against the Gaussian coefficient a genuinely independent one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import kernels
from .algebra import (
    MatrixFp,
    PrimeField,
    enum_budget,
    format_matrix,
    parse_matrix_block,
    prime_power,
)
from .errors import BudgetExceeded, TheoremViolation

VECTOR_BUDGET = 2 ** 16


def _as_field(field_or_p) -> PrimeField:
    if isinstance(field_or_p, PrimeField):
        return field_or_p
    return PrimeField(field_or_p)


def _is_canonical_rref(basis: np.ndarray) -> bool:
    k, n = basis.shape
    pivots = []
    for i in range(k):
        nz = np.nonzero(basis[i])[0]
        if nz.size == 0 or basis[i, nz[0]] != 1:
            return False
        if pivots and nz[0] <= pivots[-1]:
            return False
        pivots.append(int(nz[0]))
    for i, j in enumerate(pivots):
        column = basis[:, j]
        if column[i] != 1 or column.sum() != 1:
            return False
    return True


class Subspace:
    """A subspace of F_p^n, held as its canonical RREF basis.

    The basis has dim rows and n columns; the zero subspace has an empty
    basis. Two subspaces are equal iff their basis arrays are identical.
    """

    __slots__ = ("field", "ambient_n", "basis")

    def __init__(self, basis, field: PrimeField, ambient_n: int | None = None):
        arr = np.asarray(basis, dtype=np.int64)
        if arr.ndim != 2:
            raise ValueError("a basis must be a two-dimensional array")
        if ambient_n is not None and arr.shape[1] != ambient_n:
            raise ValueError(
                f"basis has {arr.shape[1]} columns, expected ambient {ambient_n}"
            )
        arr = arr % field.p
        if not _is_canonical_rref(arr):
            raise ValueError("basis is not in canonical reduced row echelon form")
        arr.setflags(write=False)
        self.field = field
        self.ambient_n = int(arr.shape[1])
        self.basis = arr

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def weight(self) -> int:
        """Subspace weight w_S = dim."""
        return self.dim

    def is_zero(self) -> bool:
        return self.dim == 0

    def sort_key(self):
        return (self.dim, tuple(int(v) for v in self.basis.ravel()))

    def vectors(self, limit: int = VECTOR_BUDGET) -> list[tuple[int, ...]]:
        """Every vector of the subspace (p**dim of them, budget-guarded)."""
        p = self.field.p
        count = p ** self.dim
        if count > limit:
            raise BudgetExceeded(
                f"materializing {count} vectors exceeds the budget of {limit}"
            )
        out = []
        for coeffs in itertools.product(range(p), repeat=self.dim):
            vec = (np.asarray(coeffs, dtype=np.int64) @ self.basis) % p
            out.append(tuple(int(v) for v in vec))
        return out

    def contains(self, vector) -> bool:
        vec = np.asarray(vector, dtype=np.int64) % self.field.p
        if vec.shape != (self.ambient_n,):
            raise ValueError("vector length does not match the ambient space")
        stacked = np.vstack([self.basis, vec[None, :]])
        return kernels.rank_mod(stacked, self.field.p) == self.dim

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and other.field == self.field
            and other.ambient_n == self.ambient_n
            and other.basis.shape == self.basis.shape
            and bool(np.array_equal(other.basis, self.basis))
        )

    def __hash__(self):
        return hash((self.ambient_n, self.field.p, self.basis.tobytes()))

    def __repr__(self):
        rows = "; ".join(
            " ".join(str(int(v)) for v in row) for row in self.basis
        )
        return f"Subspace(dim={self.dim}, n={self.ambient_n}, p={self.field.p}, [{rows}])"

    @classmethod
    def zero(cls, field: PrimeField, n: int) -> "Subspace":
        return cls(np.zeros((0, n), dtype=np.int64), field)

    @classmethod
    def full(cls, field: PrimeField, n: int) -> "Subspace":
        return cls(np.eye(n, dtype=np.int64), field)


def rowspace(m: MatrixFp) -> Subspace:
    """The subspace generated by the rows of m, in canonical form."""
    reduced, r = kernels.rref_mod(m.array, m.field.p)
    return Subspace(reduced[:r], m.field)


def _require_same_ambient(a: Subspace, b: Subspace) -> None:
    if a.field != b.field or a.ambient_n != b.ambient_n:
        raise ValueError("subspaces live in different ambient spaces")


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    """A + B, again a subspace (rowspace of the stacked bases)."""
    _require_same_ambient(a, b)
    stacked = np.vstack([a.basis, b.basis])
    reduced, r = kernels.rref_mod(stacked, a.field.p)
    return Subspace(reduced[:r], a.field)


def _sum_dim(a: Subspace, b: Subspace) -> int:
    stacked = np.vstack([a.basis, b.basis])
    return kernels.rank_mod(stacked, a.field.p)


def intersection_dim(a: Subspace, b: Subspace) -> int:
    """dim(A n B) = dim A + dim B - dim(A + B)."""
    _require_same_ambient(a, b)
    return a.dim + b.dim - _sum_dim(a, b)


def subspace_distance(a: Subspace, b: Subspace) -> int:
    """d_S(A, B) = dim A + dim B - 2 dim(A n B)."""
    _require_same_ambient(a, b)
    return 2 * _sum_dim(a, b) - a.dim - b.dim


def injection_distance(a: Subspace, b: Subspace) -> int:
    """d_I(A, B) = max(dim A, dim B) - dim(A n B)."""
    _require_same_ambient(a, b)
    return max(a.dim, b.dim) - intersection_dim(a, b)


def gaussian_coefficient(n: int, k: int, q: int) -> int:
    """The q-ary Gaussian coefficient, by the exact product formula."""
    if k < 0 or n < 0:
        raise ValueError("n and k must be nonnegative")
    if k > n:
        raise ValueError(f"k = {k} exceeds n = {n}")
    prime_power(q)
    numerator = 1
    denominator = 1
    for i in range(k):
        numerator *= q ** n - q ** i
        denominator *= q ** k - q ** i
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise AssertionError("Gaussian coefficient division must be exact")
    return quotient


def enumerate_grassmannian(n: int, k: int, field_or_p, budget: int | None = None):
    """Yield every k-dim subspace of F_p^n exactly once, canonical order.

    Walks pivot-column patterns (k-subsets of the n columns, lexicographic)
    and fills the free entries with all field values, so each subspace
    appears once by construction.
    """
    field = _as_field(field_or_p)
    p = field.p
    count = gaussian_coefficient(n, k, p)
    limit = enum_budget() if budget is None else budget
    if count > limit:
        raise BudgetExceeded(
            f"G_{p}({n},{k}) has {count} subspaces, over the budget of {limit} "
            "(override with IDEALIFT_ENUM_BUDGET)"
        )
    for pivots in itertools.combinations(range(n), k):
        pivot_set = set(pivots)
        free = [
            (i, j)
            for i in range(k)
            for j in range(pivots[i] + 1, n)
            if j not in pivot_set
        ]
        template = np.zeros((k, n), dtype=np.int64)
        for i, j in enumerate(pivots):
            template[i, j] = 1
        for values in itertools.product(range(p), repeat=len(free)):
            basis = template.copy()
            for (i, j), v in zip(free, values):
                basis[i, j] = v
            yield Subspace(basis, field)


def enumerate_projective_space(n: int, field_or_p, budget: int | None = None):
    """Yield every subspace of F_p^n, dimension 0 through n."""
    field = _as_field(field_or_p)
    limit = enum_budget() if budget is None else budget
    total = sum(gaussian_coefficient(n, k, field.p) for k in range(n + 1))
    if total > limit:
        raise BudgetExceeded(
            f"P_{field.p}({n}) has {total} subspaces, over the budget of {limit} "
            "(override with IDEALIFT_ENUM_BUDGET)"
        )
    for k in range(n + 1):
        yield from enumerate_grassmannian(n, k, field, budget=limit)


@dataclass(frozen=True)
class SubspaceCode:
    """A set of subspaces with measured parameters.

    d is the minimum pairwise subspace distance (None for one codeword);
    min_weight is the minimum nonzero dimension (Delta, None if the only
    codeword is the zero subspace); constant_k is the common dimension of
    a constant-dimension code, else None.
    """

    ambient_n: int
    field: PrimeField
    codewords: tuple[Subspace, ...]
    d: int | None
    min_weight: int | None
    constant_k: int | None

    @property
    def size(self) -> int:
        return len(self.codewords)

    def __iter__(self):
        return iter(self.codewords)


def _padded_bases(codewords, n: int) -> np.ndarray:
    out = np.zeros((len(codewords), n, n), dtype=np.int64)
    for i, s in enumerate(codewords):
        if s.dim:
            out[i, : s.dim] = s.basis
    return out


def _pairwise_sum_dims(codewords, n: int, p: int):
    """dim(A_i + A_j) for all i < j, via one batched stacked-rank call."""
    m = len(codewords)
    ii, jj = np.triu_indices(m, k=1)
    padded = _padded_bases(codewords, n)
    stacked = np.concatenate([padded[ii], padded[jj]], axis=1)
    return ii, jj, kernels.rank_mod_many(stacked, p)


def code_from_subspaces(subspaces) -> SubspaceCode:
    """Measure a family of subspaces: M, d, min weight, constant dimension."""
    members = list(subspaces)
    if not members:
        raise ValueError("a subspace code must be nonempty")
    field = members[0].field
    n = members[0].ambient_n
    for s in members[1:]:
        if s.field != field or s.ambient_n != n:
            raise ValueError("all codewords must share one ambient space")
    members = sorted(set(members), key=Subspace.sort_key)
    dims = np.array([s.dim for s in members])

    nonzero = dims[dims > 0]
    min_weight = int(nonzero.min()) if nonzero.size else None
    constant_k = int(dims[0]) if (dims == dims[0]).all() else None

    d = None
    if len(members) > 1:
        ii, jj, sums = _pairwise_sum_dims(members, n, field.p)
        distances = 2 * sums - dims[ii] - dims[jj]
        d = int(distances.min())

    return SubspaceCode(
        ambient_n=n,
        field=field,
        codewords=tuple(members),
        d=d,
        min_weight=min_weight,
        constant_k=constant_k,
    )


def distance_histogram(code: SubspaceCode) -> dict[int, int]:
    """Counts of pairwise subspace distances."""
    if code.size < 2:
        return {}
    dims = np.array([s.dim for s in code.codewords])
    ii, jj, sums = _pairwise_sum_dims(code.codewords, code.ambient_n, code.field.p)
    distances = 2 * sums - dims[ii] - dims[jj]
    values, counts = np.unique(distances, return_counts=True)
    return {int(v): int(c) for v, c in zip(values, counts)}


@dataclass(frozen=True)
class TrivialIntersectionReport:
    """Distance prediction for pairwise-trivially-intersecting codes.

    applicable is False when some pair of codewords meets nontrivially.
    When applicable, predicted_d = weight_e + weight_f, the two smallest
    codeword weights over distinct codewords; ambiguous_tie flags codes
    where more codewords share the second-smallest weight than the
    designation of E and F can distinguish.
    """

    applicable: bool
    predicted_d: int | None
    weight_e: int | None
    weight_f: int | None
    witness_e: Subspace | None
    witness_f: Subspace | None
    ambiguous_tie: bool


def trivial_intersection_distance(code: SubspaceCode) -> TrivialIntersectionReport:
    """Predict d = Delta_E + Delta_F under pairwise trivial intersections.

    The prediction is always validated against the exhaustively measured
    distance; disagreement raises TheoremViolation (it must never happen).
    """
    if code.size < 2:
        raise ValueError("the prediction needs at least two codewords")
    dims = np.array([s.dim for s in code.codewords])
    ii, jj, sums = _pairwise_sum_dims(code.codewords, code.ambient_n, code.field.p)
    intersections = dims[ii] + dims[jj] - sums
    if intersections.any():
        return TrivialIntersectionReport(False, None, None, None, None, None, False)
    order = sorted(range(code.size), key=lambda i: code.codewords[i].sort_key())
    e, f = order[0], order[1]
    weight_e = int(dims[e])
    weight_f = int(dims[f])
    predicted = weight_e + weight_f
    ambiguous = code.size > 2 and int(dims[order[2]]) == weight_f
    if code.d != predicted:
        raise TheoremViolation(
            f"trivial-intersection code measured d={code.d} but the weight "
            f"formula predicts {predicted}"
        )
    return TrivialIntersectionReport(
        True, predicted, weight_e, weight_f,
        code.codewords[e], code.codewords[f], ambiguous,
    )


def find_partial_spread(
    n: int, k: int, field_or_p, target: int | None = None
) -> list[Subspace]:
    """A pairwise-trivially-intersecting family in G_q(n, k).

    Greedy over the canonical enumeration order; if a target size is given
    and greedy stalls short of it, a lexicographic depth-first search
    completes the job or raises ValueError when no family of that size
    exists.
    """
    field = _as_field(field_or_p)
    all_subs = list(enumerate_grassmannian(n, k, field))
    chosen: list[Subspace] = []
    for s in all_subs:
        if all(intersection_dim(s, t) == 0 for t in chosen):
            chosen.append(s)
    if target is None or len(chosen) >= target:
        return chosen

    def extend(prefix: list[int], start: int):
        if len(prefix) == target:
            return prefix
        for idx in range(start, len(all_subs)):
            if all(
                intersection_dim(all_subs[idx], all_subs[j]) == 0 for j in prefix
            ):
                found = extend(prefix + [idx], idx + 1)
                if found:
                    return found
        return None

    found = extend([], 0)
    if found is None:
        raise ValueError(f"no pairwise-trivial family of size {target} in G({n},{k})")
    return [all_subs[i] for i in found]


def maximal_trivial_intersection_codes(
    n: int, k: int, field_or_p, limit: int = 100
):
    """Yield maximal pairwise-trivially-intersecting subsets of G_q(n, k).

    Depth-first in canonical order; a subset is emitted only when no
    subspace of the whole Grassmannian extends it. Yields at most
    ``limit`` subsets.
    """
    field = _as_field(field_or_p)
    all_subs = list(enumerate_grassmannian(n, k, field))
    m = len(all_subs)
    compatible = np.zeros((m, m), dtype=bool)
    for i in range(m):
        for j in range(i + 1, m):
            ok = intersection_dim(all_subs[i], all_subs[j]) == 0
            compatible[i, j] = compatible[j, i] = ok

    emitted = 0

    def dfs(prefix: list[int], start: int):
        nonlocal emitted
        if emitted >= limit:
            return
        mask = np.ones(m, dtype=bool)
        for j in prefix:
            mask &= compatible[j]
        if prefix and not mask.any():
            emitted += 1
            yield tuple(all_subs[j] for j in prefix)
            return
        # a prefix extendable only by earlier-indexed subspaces is not
        # maximal and not ours to emit; the earlier branch finds that family
        for idx in range(start, m):
            if mask[idx]:
                yield from dfs(prefix + [idx], idx + 1)
                if emitted >= limit:
                    return

    yield from dfs([], 0)


@dataclass(frozen=True)
class SubspaceEgalitarianReport:
    """Egalitarian analysis of w_S = dim on a family of subspaces."""

    egalitarian: bool
    gamma: Fraction | None
    witnesses: tuple[Subspace, Subspace] | None


def subspace_weight_egalitarian_check(family) -> SubspaceEgalitarianReport:
    """Condition (E) over all nonempty subsets of the family.

    Singleton subsets force Gamma = dim of each member, so the weight is
    egalitarian on the family iff the dimension is constant there; the
    common dimension is then the average value.
    """
    members = list(family)
    if not members:
        raise ValueError("the family must be nonempty")
    first = members[0]
    for s in members[1:]:
        if s.dim != first.dim:
            return SubspaceEgalitarianReport(False, None, (first, s))
    return SubspaceEgalitarianReport(True, Fraction(first.dim), None)


def is_subspace_weight(n: int, field_or_p, budget: int | None = None) -> bool:
    """Check the weight axioms for w_S = dim on all of P_q(n).

    Addition is the subspace sum; -A = A because subspaces are additive
    groups (verified on the materialized vector sets, not assumed).
    """
    field = _as_field(field_or_p)
    spaces = list(enumerate_projective_space(n, field, budget=budget))
    zero = Subspace.zero(field, n)
    p = field.p
    for s in spaces:
        if (s.dim == 0) != (s == zero):
            return False
        vecs = set(s.vectors())
        negated = {tuple((-np.asarray(v)) % p) for v in vecs}
        if negated != vecs:
            return False
    for a in spaces:
        for b in spaces:
            if _sum_dim(a, b) > a.dim + b.dim:
                return False
    return True


# ---------------------------------------------------------------------------
# subspace code file format
# ---------------------------------------------------------------------------

def format_subspace_code(code: SubspaceCode) -> str:
    """Header "subspacecode n p M" then one RREF basis block per codeword."""
    parts = [f"subspacecode {code.ambient_n} {code.field.p} {code.size}"]
    for s in code.codewords:
        parts.append(format_matrix(MatrixFp(s.basis, s.field)))
    return "\n".join(parts)


def parse_subspace_code(text: str) -> SubspaceCode:
    """Parse a subspace code file; bases are re-canonicalized, parameters remeasured."""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines or not lines[0].startswith("subspacecode "):
        raise ValueError("not a subspace code file: missing 'subspacecode' header")
    header = lines[0].split()
    if len(header) != 4:
        raise ValueError(f"bad subspacecode header: {lines[0]!r}")
    n, p, m = (int(tok) for tok in header[1:])
    members = []
    pos = 1
    while pos < len(lines):
        matrix, pos = parse_matrix_block(lines, pos)
        if matrix.cols != n or matrix.field.p != p:
            raise ValueError("basis block disagrees with subspacecode header")
        members.append(rowspace(matrix))
    if len(members) != m:
        raise ValueError(f"file lists {len(members)} codewords, header says {m}")
    return code_from_subspaces(members)
