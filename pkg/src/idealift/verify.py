"""The executable theorem suite behind ``idealift verify``.

Each check recomputes one structural claim of the construction from
scratch and reports a pass/fail line: the worked ideal examples and their
lifted codes
(verbatim, as canonical vector sets), the minimum-distance = minimum-weight
identity, the (4, p^2, 2, 2)_p parameters of every idempotent ideal lift,
the distance-doubling mechanism of lifting, the exact average-weight
fractions and the non-egalitarian witness pair, unit invariance of the
rank weight, and the rank distribution closed forms.

Checks deliberately call through module attributes (``rank_code.gl_order``
and friends) so a fault injected into any core formula flips the suite to
failure; the test suite exercises exactly that.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from . import lifting, rank_code, ring, subspace, weights
from .algebra import PrimeField
from .errors import TheoremViolation

# Worked examples, frozen as canonical entry/vector sets.

EXAMPLE1_GENERATOR = ((0, 0), (0, 1))
EXAMPLE1_IDEAL = frozenset(
    [(0, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, 1), (0, 1, 0, 1)]
)
EXAMPLE1_SUBSPACES = frozenset(
    [
        frozenset([(1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 0, 0), (0, 0, 0, 0)]),
        frozenset([(1, 0, 0, 1), (0, 1, 0, 0), (1, 1, 0, 1), (0, 0, 0, 0)]),
        frozenset([(1, 0, 0, 0), (0, 1, 0, 1), (1, 1, 0, 1), (0, 0, 0, 0)]),
        frozenset([(1, 0, 0, 1), (0, 1, 0, 1), (1, 1, 0, 0), (0, 0, 0, 0)]),
    ]
)
EXAMPLE2_IDEAL = frozenset(
    [(0, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (0, 0, 1, 1)]
)
EXAMPLE2_SUBSPACES = frozenset(
    [
        frozenset([(1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 0, 0), (0, 0, 0, 0)]),
        frozenset([(1, 0, 0, 0), (0, 1, 1, 0), (1, 1, 1, 0), (0, 0, 0, 0)]),
        frozenset([(1, 0, 0, 0), (0, 1, 0, 1), (1, 1, 0, 1), (0, 0, 0, 0)]),
        frozenset([(1, 0, 0, 0), (0, 1, 1, 1), (1, 1, 1, 1), (0, 0, 0, 0)]),
    ]
)
EXAMPLE3_GENERATOR = ((0, 2), (0, 1))
EXAMPLE3_IDEAL = frozenset(
    [
        (0, 0, 0, 0), (0, 1, 0, 0), (0, 2, 0, 0),
        (0, 0, 0, 1), (0, 0, 0, 2), (0, 1, 0, 1),
        (0, 2, 0, 2), (0, 2, 0, 1), (0, 1, 0, 2),
    ]
)
EXAMPLE5_A = frozenset([(0, 0, 0), (1, 0, 1), (0, 1, 0), (1, 1, 1)])
EXAMPLE5_B = frozenset([(0, 0, 0), (0, 1, 1), (1, 0, 0), (1, 1, 1)])


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


def _lift_vector_sets(ideal_code) -> frozenset:
    lifted = lifting.lift_code(ideal_code)
    return frozenset(frozenset(s.vectors()) for s in lifted.code.codewords)


def check_examples(p: int) -> list[CheckResult]:
    """Reproduce the worked examples for this modulus, verbatim."""
    results = []
    field = PrimeField(p)
    if p == 2:
        ideal = ring.principal_ideal(field.matrix(EXAMPLE1_GENERATOR), "left")
        code = rank_code.code_from_matrix_set(ideal.elements)
        lifted = lifting.lift_code(code)
        ok = (
            frozenset(m.entries() for m in ideal) == EXAMPLE1_IDEAL
            and (code.rho, code.delta, code.omega) == (2, 1, 1)
            and _lift_vector_sets(code) == EXAMPLE1_SUBSPACES
            and lifted.claimed == (4, 4, 2, 2, 2)
        )
        results.append(
            CheckResult(
                "example-1 left ideal",
                ok,
                "listing, [2x2,2,1], lift = {C1..C4}, (4,4,2,2)_2",
            )
        )

        ideal_r = ring.principal_ideal(field.matrix(EXAMPLE1_GENERATOR), "right")
        code_r = rank_code.code_from_matrix_set(ideal_r.elements)
        sets_r = _lift_vector_sets(code_r)
        ok = (
            frozenset(m.entries() for m in ideal_r) == EXAMPLE2_IDEAL
            and sets_r == EXAMPLE2_SUBSPACES
            and sets_r != EXAMPLE1_SUBSPACES
            and lifting.lift_code(code_r).claimed == (4, 4, 2, 2, 2)
        )
        results.append(
            CheckResult(
                "example-2 right ideal",
                ok,
                "listing, lift distinct from example 1, (4,4,2,2)_2",
            )
        )

        a = subspace.rowspace(field.matrix([[1, 0, 1], [0, 1, 0]]))
        b = subspace.rowspace(field.matrix([[1, 0, 0], [0, 1, 1]]))
        total = subspace.subspace_sum(a, b)
        code5 = subspace.code_from_subspaces([a, b, total])
        ok = (
            frozenset(a.vectors()) == EXAMPLE5_A
            and frozenset(b.vectors()) == EXAMPLE5_B
            and total.dim == 3
            and len(total.vectors()) == 8
            and code5.min_weight == 2
            and code5.d == 1
            and code5.d != code5.min_weight
        )
        results.append(
            CheckResult(
                "example-5 mixed dimensions",
                ok,
                "A+B = F_2^3, Delta = 2, d = 1, d != Delta",
            )
        )
    if p == 3:
        ideal = ring.principal_ideal(field.matrix(EXAMPLE3_GENERATOR), "left")
        code = rank_code.code_from_matrix_set(ideal.elements)
        lifted = lifting.lift_code(code)
        ok = (
            frozenset(m.entries() for m in ideal) == EXAMPLE3_IDEAL
            and (code.rho, code.delta) == (2, 1)
            and lifted.claimed == (4, 9, 2, 2, 3)
        )
        results.append(
            CheckResult(
                "example-3 left ideal over F_3",
                ok,
                "listing X1..X9, [2x2,2,1], (4,9,2,2)_3",
            )
        )
    return results


def _random_linear_subcode(field: PrimeField, rng: random.Random):
    """Span of up to rho random 2x2 matrices; never just {0}."""
    p = field.p
    while True:
        rho = rng.randint(1, 4)
        basis = [
            field.matrix(
                [[rng.randrange(p), rng.randrange(p)], [rng.randrange(p), rng.randrange(p)]]
            )
            for _ in range(rho)
        ]
        span = set()
        for coeffs in product(range(p), repeat=rho):
            total = field.zeros(2, 2)
            for c, m in zip(coeffs, basis):
                total = total + c * m
            span.add(total)
        if len(span) > 1:
            return rank_code.code_from_matrix_set(span)


def check_delta_omega(p: int, seed: int, trials: int) -> CheckResult:
    """delta = Omega on every idempotent ideal, plus random linear subcodes."""
    field = PrimeField(p)
    descriptor = ring.MatrixRing(field)
    swept = 0
    for idem in ring.enumerate_nontrivial_idempotents(descriptor):
        for side in ring.SIDES:
            ideal = ring.principal_ideal(idem, side)
            code = rank_code.code_from_matrix_set(ideal.elements)
            report = rank_code.verify_delta_equals_omega(code)
            if not (report.applicable and report.equal):
                return CheckResult(
                    "delta = omega",
                    False,
                    f"failed on {side} ideal of {idem.entries()}",
                )
            swept += 1
    sampled = 0
    if p <= 3 and trials > 0:
        rng = random.Random(seed)
        for _ in range(trials):
            code = _random_linear_subcode(field, rng)
            report = rank_code.verify_delta_equals_omega(code)
            if not (report.applicable and report.equal):
                return CheckResult(
                    "delta = omega",
                    False,
                    f"failed on a random subcode of size {code.size}",
                )
            sampled += 1
    return CheckResult(
        "delta = omega",
        True,
        f"{swept} ideal codes and {sampled} random linear subcodes",
    )


def check_theorem3(p: int) -> CheckResult:
    """Every idempotent ideal lifts to a (4, p^2, 2, 2)_p code, both sides."""
    field = PrimeField(p)
    descriptor = ring.MatrixRing(field)
    idempotents = ring.enumerate_nontrivial_idempotents(descriptor)
    for idem in idempotents:
        for side in ring.SIDES:
            report = lifting.verify_idempotent_ideal_lift(idem, side)
            if not report.ok:
                return CheckResult(
                    "idempotent ideal lifts",
                    False,
                    f"{side} ideal of {idem.entries()} gave {report.params}",
                )
    return CheckResult(
        "idempotent ideal lifts",
        True,
        f"(4,{p ** 2},2,2)_{p} OK for all {len(idempotents)} idempotents, both sides",
    )


def check_transport(p: int, seed: int, samples: int) -> CheckResult:
    """d_S between lifted row spaces is exactly twice d_R, pair by pair."""
    field = PrimeField(p)
    descriptor = ring.MatrixRing(field)
    elements = list(descriptor)
    if p == 2:
        pairs = [(a, b) for a in elements for b in elements]
    else:
        rng = random.Random(seed)
        pairs = [
            (rng.choice(elements), rng.choice(elements)) for _ in range(samples)
        ]
    for a, b in pairs:
        lifted_distance = subspace.subspace_distance(
            subspace.rowspace(lifting.lift(a)), subspace.rowspace(lifting.lift(b))
        )
        if lifted_distance != 2 * rank_code.rank_distance(a, b):
            return CheckResult(
                "lift doubles rank distance",
                False,
                f"failed on {a.entries()} vs {b.entries()}",
            )
    return CheckResult(
        "lift doubles rank distance", True, f"{len(pairs)} pairs checked"
    )


def check_gammas(p: int) -> CheckResult:
    """Exact average values, their closed forms, and the egalitarian failure."""
    field = PrimeField(p)
    w = weights.rank_weight(ring.MatrixRing(field))
    gamma1 = weights.average_value(w, field.identity(2), "left").gamma
    gamma2 = weights.average_value(w, field.matrix([[0, 0], [0, 1]]), "left").gamma
    expected1 = weights.gamma_full_ring(p)
    expected2 = weights.gamma_minimal_ideal(p)
    if gamma1 != expected1 or gamma2 != expected2:
        return CheckResult(
            "average values",
            False,
            f"got {gamma1} and {gamma2}, expected {expected1} and {expected2}",
        )
    if gamma1 == gamma2:
        return CheckResult(
            "average values", False, "Gamma1 = Gamma2: egalitarian obstruction lost"
        )
    report = weights.egalitarian_check(w, "left")
    if report.egalitarian or report.witnesses is None:
        return CheckResult(
            "average values", False, "rank weight reported egalitarian"
        )
    x, gx, y, gy = report.witnesses
    if gx == gy:
        return CheckResult("average values", False, "witness averages coincide")
    return CheckResult(
        "average values",
        True,
        f"Gamma1 = {gamma1}, Gamma2 = {gamma2}, not egalitarian",
    )


def check_unit_invariance(p: int) -> CheckResult:
    ok = weights.unit_invariance_check(p)
    return CheckResult(
        "unit invariance of rank",
        ok,
        f"rank(UA) = rank(A) over all of GL(2,{p}) x M2(F_{p})",
    )


def check_distribution(p: int) -> CheckResult:
    dist = rank_code.rank_distribution(p)  # scan cross-check built in
    scanned = rank_code.rank_distribution_scan(p)
    ok = scanned == dist.counts
    return CheckResult(
        "rank distribution",
        ok,
        f"(A0, A1, A2) = {dist.counts} by scan and closed form",
    )


def check_subspace_weight(p: int) -> CheckResult:
    """Dimension-weight axioms on P_p(3); egalitarian exactly on the Grassmannian."""
    field = PrimeField(p)
    if not subspace.is_subspace_weight(3, field):
        return CheckResult("subspace weight", False, "axiom check failed on P(3)")
    grassmannian = list(subspace.enumerate_grassmannian(4, 2, field))
    on_constant = subspace.subspace_weight_egalitarian_check(grassmannian)
    if not (on_constant.egalitarian and on_constant.gamma == 2):
        return CheckResult(
            "subspace weight", False, "not egalitarian with Gamma = 2 on G(4,2)"
        )
    mixed = subspace.subspace_weight_egalitarian_check(
        [subspace.Subspace.full(field, 3), subspace.Subspace.zero(field, 3)]
    )
    if mixed.egalitarian:
        return CheckResult(
            "subspace weight", False, "egalitarian on a mixed-dimension family"
        )
    return CheckResult(
        "subspace weight",
        True,
        f"a weight on P_{p}(3); Gamma = 2 on G_{p}(4,2); mixed dims fail (E)",
    )


def run_suite(
    p: int,
    seed: int = 0,
    subcode_trials: int = 200,
    transport_samples: int = 10 ** 4,
) -> list[CheckResult]:
    """Run every check for one modulus; failures never abort the suite."""
    results: list[CheckResult] = []

    def guarded(fn, *args):
        try:
            outcome = fn(*args)
        except (TheoremViolation, AssertionError) as exc:
            outcome = CheckResult(fn.__name__.replace("check_", ""), False, str(exc))
        if isinstance(outcome, CheckResult):
            results.append(outcome)
        else:
            results.extend(outcome)

    guarded(check_examples, p)
    guarded(check_delta_omega, p, seed, subcode_trials)
    guarded(check_theorem3, p)
    guarded(check_transport, p, seed, transport_samples)
    guarded(check_gammas, p)
    if p <= 5:
        guarded(check_unit_invariance, p)
    guarded(check_distribution, p)
    guarded(check_subspace_weight, p)
    return results
