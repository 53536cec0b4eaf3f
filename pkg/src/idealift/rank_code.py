"""Rank-metric codes: minimum rank distance, minimum rank weight, and the
rank distribution of the full 2x2 matrix ring.

A code is any nonempty set of equal-shape matrices over one F_p. Linear
codes additionally contain 0 and are closed under addition and scalar
multiplication; their dimension rho is read off as log_p of the
cardinality once closure has been verified exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .algebra import (
    MatrixFp,
    PrimeField,
    entry_codes,
    format_matrix,
    gl_order,
    parse_matrix_block,
    prime_power,
    rank,
)
from .errors import TheoremViolation
from .ring import MatrixRing


def rank_distance(a: MatrixFp, b: MatrixFp) -> int:
    """d_R(A, B) = rank(A - B)."""
    return rank(a - b)


@dataclass(frozen=True)
class RankMetricCode:
    """A [k x l] matrix code with its measured parameters.

    delta is None for one-element codes (a distinct pair is required);
    omega is None when the code has no nonzero element; rho is None for
    non-linear codes.
    """

    k: int
    l: int
    field: PrimeField
    elements: tuple[MatrixFp, ...]
    linear: bool
    rho: int | None
    delta: int | None
    omega: int | None

    @property
    def size(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def element_array(self) -> np.ndarray:
        return np.stack([m.array for m in self.elements])

    def basis(self) -> tuple[MatrixFp, ...]:
        """A linear basis (rho elements), greedy in canonical order."""
        if not self.linear:
            raise ValueError("only linear codes have a basis")
        p = self.field.p
        chosen: list[MatrixFp] = []
        stacked = np.zeros((0, self.k * self.l), dtype=np.int64)
        for m in self.elements:
            candidate = np.vstack([stacked, m.array.reshape(1, -1)])
            if kernels.rank_mod(candidate, p) > stacked.shape[0]:
                stacked = candidate
                chosen.append(m)
        assert len(chosen) == self.rho
        return tuple(chosen)


def _pairwise_min_rank(arr: np.ndarray, p: int):
    """Minimum rank(A_i - A_j) over i < j plus the minimizing (i, j)."""
    m = arr.shape[0]
    ii, jj = np.triu_indices(m, k=1)
    diffs = (arr[ii] - arr[jj]) % p
    ranks = kernels.rank_mod_many(diffs, p)
    best = int(ranks.argmin())  # first minimum = lexicographic witness
    return int(ranks[best]), (int(ii[best]), int(jj[best]))


def pairwise_rank_distances(elements) -> np.ndarray:
    """Full distance matrix d_R between the given matrices."""
    mats = list(elements)
    p = mats[0].field.p
    arr = np.stack([m.array for m in mats])
    m = arr.shape[0]
    diffs = (arr[:, None, :, :] - arr[None, :, :, :]) % p
    ranks = kernels.rank_mod_many(diffs.reshape(m * m, *arr.shape[1:]), p)
    return ranks.reshape(m, m)


def code_from_matrix_set(matrices) -> RankMetricCode:
    """Measure a matrix set: delta, omega, linearity and rho, exhaustively."""
    mats = list(matrices)
    if not mats:
        raise ValueError("a matrix code must be nonempty")
    field = mats[0].field
    shape = mats[0].shape
    for m in mats[1:]:
        if m.field != field or m.shape != shape:
            raise ValueError("all code elements must share one shape and field")
    mats = sorted(set(mats), key=lambda m: m.entries())
    k, l = shape
    p = field.p
    arr = np.stack([m.array for m in mats])
    n = arr.shape[0]

    ranks = kernels.rank_mod_many(arr, p)
    nonzero = ranks > 0
    omega = int(ranks[nonzero].min()) if nonzero.any() else None

    delta = None
    if n > 1:
        delta, _ = _pairwise_min_rank(arr, p)

    codes = np.sort(entry_codes(arr, p))
    has_zero = bool(codes[0] == 0)
    linear = has_zero
    if linear:
        sums = (arr[:, None, :, :] + arr[None, :, :, :]) % p
        sum_codes = entry_codes(sums.reshape(n * n, k, l), p)
        linear = bool(np.isin(sum_codes, codes).all())
    if linear:
        for c in range(2, p):
            scaled_codes = entry_codes((arr * c) % p, p)
            if not np.isin(scaled_codes, codes).all():
                linear = False
                break

    rho = None
    if linear:
        rho = 0
        while p ** rho < n:
            rho += 1
        if p ** rho != n:
            raise AssertionError(
                "closed nonempty subspace must have p-power cardinality"
            )

    return RankMetricCode(
        k=k, l=l, field=field, elements=tuple(mats),
        linear=linear, rho=rho, delta=delta, omega=omega,
    )


@dataclass(frozen=True)
class RankDistribution:
    """Counts (A0, A1, A2) of elements of M2(F_q) by rank."""

    q: int
    counts: tuple[int, int, int]

    @property
    def a0(self) -> int:
        return self.counts[0]

    @property
    def a1(self) -> int:
        return self.counts[1]

    @property
    def a2(self) -> int:
        return self.counts[2]


def rank_distribution_scan(p: int) -> tuple[int, int, int]:
    """Rank counts by exhaustive scan of all p**4 elements."""
    ring = MatrixRing(PrimeField(p))
    ranks = kernels.rank_mod_many(ring.element_array(), p)
    hist = np.bincount(ranks, minlength=3)
    return int(hist[0]), int(hist[1]), int(hist[2])


def rank_distribution(q: int) -> RankDistribution:
    """Closed-form rank distribution of M2(F_q): (1, q^4-|GL|-1, |GL(2,q)|).

    For small prime q the closed forms are additionally cross-checked
    against an exhaustive scan; a mismatch raises TheoremViolation.
    """
    p, r = prime_power(q)
    gl = gl_order(q, 2)
    counts = (1, q ** 4 - gl - 1, gl)
    if r == 1 and p <= 7:
        scanned = rank_distribution_scan(p)
        if scanned != counts:
            raise TheoremViolation(
                f"rank distribution scan {scanned} disagrees with closed form {counts}"
            )
    return RankDistribution(q=q, counts=counts)


@dataclass(frozen=True)
class DeltaOmegaReport:
    """Outcome of checking delta = omega on a code.

    applicable is False for non-linear codes (the identity needs A - B and
    0 to stay in the code); equal is None whenever delta or omega is
    undefined.
    """

    applicable: bool
    delta: int | None
    omega: int | None
    equal: bool | None
    min_pair: tuple[MatrixFp, MatrixFp] | None
    min_element: MatrixFp | None


def verify_delta_equals_omega(code: RankMetricCode) -> DeltaOmegaReport:
    """Check min rank distance = min rank weight, with minimizing witnesses."""
    if not code.linear:
        return DeltaOmegaReport(False, code.delta, code.omega, None, None, None)
    arr = code.element_array()
    p = code.field.p
    min_pair = None
    delta = None
    if code.size > 1:
        delta, (i, j) = _pairwise_min_rank(arr, p)
        min_pair = (code.elements[i], code.elements[j])
    ranks = kernels.rank_mod_many(arr, p)
    nonzero = np.nonzero(ranks > 0)[0]
    omega = None
    min_element = None
    if nonzero.size:
        best = nonzero[int(ranks[nonzero].argmin())]
        omega = int(ranks[best])
        min_element = code.elements[int(best)]
    equal = (delta == omega) if (delta is not None and omega is not None) else None
    return DeltaOmegaReport(True, delta, omega, equal, min_pair, min_element)


def code_report(code: RankMetricCode) -> dict:
    """JSON-able summary: {delta, omega, rho, linear, witnesses}."""
    check = verify_delta_equals_omega(code)
    witnesses = {}
    if check.min_pair is not None:
        witnesses["min_distance_pair"] = [
            list(check.min_pair[0].entries()),
            list(check.min_pair[1].entries()),
        ]
    if check.min_element is not None:
        witnesses["min_weight_element"] = list(check.min_element.entries())
    return {
        "delta": code.delta,
        "omega": code.omega,
        "rho": code.rho,
        "linear": code.linear,
        "witnesses": witnesses,
    }


# ---------------------------------------------------------------------------
# rank code file format
# ---------------------------------------------------------------------------

def format_rank_code(code: RankMetricCode) -> str:
    """Header "rankcode k l p" then one matrix block per element."""
    parts = [f"rankcode {code.k} {code.l} {code.field.p}"]
    for member in code.elements:
        parts.append(format_matrix(member))
    return "\n".join(parts)


def parse_rank_code(text: str) -> RankMetricCode:
    """Parse a rank code file; parameters are recomputed, never trusted."""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines or not lines[0].startswith("rankcode "):
        raise ValueError("not a rank code file: missing 'rankcode' header")
    header = lines[0].split()
    if len(header) != 4:
        raise ValueError(f"bad rankcode header: {lines[0]!r}")
    k, l, p = (int(tok) for tok in header[1:])
    members = []
    pos = 1
    while pos < len(lines):
        matrix, pos = parse_matrix_block(lines, pos)
        if matrix.shape != (k, l) or matrix.field.p != p:
            raise ValueError("matrix block disagrees with rankcode header")
        members.append(matrix)
    return code_from_matrix_set(members)
