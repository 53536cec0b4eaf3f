"""Lifting rank-metric codes into the Grassmannian.

L(A) is the standard matrix (I_k A); the lift of a code is the set of row
spaces of its lifted elements. For a linear [k x l, rho, delta] source
the lifted code must come out as a (k+l, q^rho, 2 delta, k)_q Grassmannian
code; every one of those parameters is recomputed from scratch through
the subspace machinery, and a mismatch raises TheoremViolation rather
than trusting the formula.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import MatrixFp
from .errors import TheoremViolation
from .rank_code import RankMetricCode, code_from_matrix_set
from .ring import PrincipalIdeal, is_idempotent, principal_ideal
from .subspace import SubspaceCode, code_from_subspaces, rowspace


def lift(a: MatrixFp) -> MatrixFp:
    """L(A): the k x (k+l) matrix (I_k A)."""
    k = a.rows
    block = np.hstack([np.eye(k, dtype=np.int64), a.array])
    return MatrixFp(block, a.field)


@dataclass(frozen=True)
class LiftedCode:
    """A lifted rank-metric code together with its claimed parameters.

    claimed is the (n, M, d, k, q) tuple promised for a linear source and
    None for non-linear sources (where q^rho and 2 delta do not apply);
    theorem_ok records that the claim was checked against remeasurement.
    """

    source: RankMetricCode
    code: SubspaceCode
    claimed: tuple | None
    theorem_ok: bool | None


def lift_code(source: RankMetricCode) -> LiftedCode:
    """Lift every codeword and measure the resulting subspace code."""
    codewords = [rowspace(lift(a)) for a in source.elements]
    code = code_from_subspaces(codewords)
    if code.size != source.size:
        raise TheoremViolation(
            f"lifting must be injective: {source.size} matrices gave "
            f"{code.size} subspaces"
        )
    if not source.linear:
        return LiftedCode(source=source, code=code, claimed=None, theorem_ok=None)

    p = source.field.p
    claimed = (
        source.k + source.l,
        p ** source.rho,
        None if source.delta is None else 2 * source.delta,
        source.k,
        p,
    )
    measured = (code.ambient_n, code.size, code.d, code.constant_k, p)
    if measured != claimed:
        raise TheoremViolation(
            f"lifted parameters {measured} disagree with the claimed {claimed}"
        )
    return LiftedCode(source=source, code=code, claimed=claimed, theorem_ok=True)


@dataclass(frozen=True)
class IdealLiftReport:
    """Parameters of the lift of one idempotent-generated ideal."""

    p: int
    side: str
    generator: MatrixFp
    ideal: PrincipalIdeal
    source: RankMetricCode
    lifted: LiftedCode
    params: tuple  # (n, M, d, k) with q = p
    ok: bool


def verify_idempotent_ideal_lift(a: MatrixFp, side: str) -> IdealLiftReport:
    """Build the ideal of a nontrivial idempotent, lift it, check (4, p^2, 2, 2)_p."""
    if not is_idempotent(a) or a.is_zero() or a.rank() == 2:
        raise ValueError("generator must be a nonzero nonunit idempotent")
    p = a.field.p
    ideal = principal_ideal(a, side)
    source = code_from_matrix_set(ideal.elements)
    lifted = lift_code(source)
    code = lifted.code
    params = (code.ambient_n, code.size, code.d, code.constant_k)
    expected = (4, p ** 2, 2, 2)
    if params != expected:
        raise TheoremViolation(
            f"ideal lift came out as {params}_{p}, expected {expected}_{p}"
        )
    return IdealLiftReport(
        p=p, side=side, generator=a, ideal=ideal, source=source,
        lifted=lifted, params=params, ok=True,
    )


def lift_report(lifted: LiftedCode) -> dict:
    """JSON-able parameter report for a lifted code."""
    source = lifted.source
    code = lifted.code
    return {
        "source": {
            "k": source.k,
            "l": source.l,
            "rho": source.rho,
            "delta": source.delta,
        },
        "lifted": {
            "n": code.ambient_n,
            "M": code.size,
            "d": code.d,
            "k": code.constant_k,
            "q": code.field.p,
        },
        "theorem_ok": lifted.theorem_ok,
    }
