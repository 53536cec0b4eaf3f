"""Weight functions on finite rings and their egalitarian / homogeneous
analysis.

A weight is represented extensionally: the whole (small) ring is listed
and the weight is tabulated once, which makes every axiom and condition
checkable by exhaustion. All average values are exact fractions; no
floating point enters this module, since the non-egalitarian argument is
an exact divisibility statement.

The functions are generic over the element type: anything hashable with
``+``, ``*`` and unary ``-`` works, so the same code handles M2(F_p) and
a prime field viewed as a ring over itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from . import kernels
from .algebra import MatrixFp, PrimeField, entry_codes
from .ring import SIDES, MatrixRing


class WeightFunction:
    """A candidate weight, tabulated over every element of its ring."""

    def __init__(self, name: str, elements, evaluate: Callable):
        self.name = name
        self.elements = tuple(elements)
        if not self.elements:
            raise ValueError("weight domain must be a nonempty ring")
        self.table = {x: Fraction(evaluate(x)) for x in self.elements}
        first = self.elements[0]
        self.zero = first + (-first)  # additive identity of the ring

    def __call__(self, x) -> Fraction:
        return self.table[x]

    def __repr__(self):
        return f"WeightFunction({self.name!r}, |R|={len(self.elements)})"


def rank_weight(ring: MatrixRing) -> WeightFunction:
    """w_R(A) = rank(A) on M2(F_p)."""
    elements = list(ring)
    ranks = kernels.rank_mod_many(ring.element_array(), ring.field.p)
    table = dict(zip(elements, (int(r) for r in ranks)))
    return WeightFunction("rank", elements, table.__getitem__)


def hamming_weight(field: PrimeField) -> WeightFunction:
    """w(0) = 0, w(x) = 1 otherwise, on F_p viewed as a ring."""
    return WeightFunction(
        "hamming", list(field), lambda x: 0 if x.value == 0 else 1
    )


@dataclass(frozen=True)
class AxiomReport:
    """Result of the four weight axioms; witness pins the first failure."""

    ok: bool
    failed_axiom: str | None
    witness: tuple | None


def is_weight(w: WeightFunction) -> AxiomReport:
    """Exhaustively check the weight axioms.

    i. w(x) = 0 iff x = 0; ii. w(x) >= 0; iii. w(x) = w(-x);
    iv. w(x + y) <= w(x) + w(y) over all pairs.
    """
    if len(w.elements) ** 2 > 10 ** 8:
        raise ValueError("ring too large for the exhaustive axiom check")
    for x in w.elements:
        value = w(x)
        if (value == 0) != (x == w.zero):
            return AxiomReport(False, "i", (x,))
        if value < 0:
            return AxiomReport(False, "ii", (x,))
        if w(-x) != value:
            return AxiomReport(False, "iii", (x,))
    violation = _first_subadditivity_violation(w)
    if violation is not None:
        return AxiomReport(False, "iv", violation)
    return AxiomReport(True, None, None)


def _first_subadditivity_violation(w: WeightFunction):
    """First (x, y) with w(x+y) > w(x) + w(y), or None.

    Matrix rings with integer weights get a batched path: all pair sums
    in one modular addition, weights gathered through the entry codes.
    The witness order matches the elementwise scan (x outer, y inner).
    """
    first = w.elements[0]
    integral = isinstance(first, MatrixFp) and first.shape == (2, 2) and all(
        v.denominator == 1 for v in w.table.values()
    )
    if integral:
        p = first.field.p
        arr = np.stack([e.array for e in w.elements])
        codes = entry_codes(arr, p)
        weight_of_code = np.zeros(p ** 4, dtype=np.int64)
        weight_of_code[codes] = [int(w.table[e]) for e in w.elements]
        n = len(w.elements)
        sums = (arr[:, None, :, :] + arr[None, :, :, :]) % p
        sum_codes = entry_codes(sums.reshape(n * n, 2, 2), p)
        pair_weights = weight_of_code[sum_codes].reshape(n, n)
        values = weight_of_code[codes]
        bad = pair_weights > values[:, None] + values[None, :]
        if bad.any():
            i, j = np.argwhere(bad)[0]
            return (w.elements[int(i)], w.elements[int(j)])
        return None
    for x in w.elements:
        wx = w(x)
        for y in w.elements:
            if w(x + y) > wx + w(y):
                return (x, y)
    return None


def cyclic_submodule(elements, x, side: str) -> tuple:
    """Rx = {r x} or xR = {x r}, deduplicated in first-occurrence order."""
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}, got {side!r}")
    seen = set()
    out = []
    for r in elements:
        y = r * x if side == "left" else x * r
        if y not in seen:
            seen.add(y)
            out.append(y)
    return tuple(out)


@dataclass(frozen=True)
class AverageValueReport:
    """Exact average weight over one cyclic submodule."""

    generator: object
    side: str
    size: int
    total: Fraction
    gamma: Fraction


def average_value(w: WeightFunction, x, side: str = "left") -> AverageValueReport:
    """Gamma for the submodule generated by x: sum of weights / cardinality."""
    if x == w.zero:
        raise ValueError("the average value is defined for nonzero generators")
    submodule = cyclic_submodule(w.elements, x, side)
    total = sum((w(y) for y in submodule), Fraction(0))
    return AverageValueReport(
        generator=x,
        side=side,
        size=len(submodule),
        total=total,
        gamma=total / len(submodule),
    )


def _submodule_analysis(w: WeightFunction, side: str):
    """Yield (generator, submodule key, exact Gamma) per nonzero element.

    Runs in ring order and lazily, so callers that stop at the first
    disagreement pay for only a few submodules. Keys are canonical per
    submodule (equal submodules get equal keys), so the egalitarian and
    the value-condition checks both read off this one stream. Matrix
    rings take a batched path: one modular product of the stacked ring
    against the generator replaces the elementwise loop.
    """
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}, got {side!r}")
    first = w.elements[0]
    if isinstance(first, MatrixFp) and first.shape == (2, 2):
        p = first.field.p
        arr = np.stack([e.array for e in w.elements])
        weight_by_code = {
            int(c): w.table[e]
            for c, e in zip(entry_codes(arr, p), w.elements)
        }
        for x in w.elements:
            if x == w.zero:
                continue
            if side == "left":
                products = np.matmul(arr, x.array) % p
            else:
                products = np.matmul(x.array, arr) % p
            sub_codes = np.unique(entry_codes(products, p))
            total = sum(
                (weight_by_code[int(c)] for c in sub_codes), Fraction(0)
            )
            yield x, sub_codes.tobytes(), Fraction(total, len(sub_codes))
    else:
        for x in w.elements:
            if x == w.zero:
                continue
            submodule = cyclic_submodule(w.elements, x, side)
            total = sum((w(y) for y in submodule), Fraction(0))
            yield x, frozenset(submodule), Fraction(total, len(submodule))


@dataclass(frozen=True)
class EgalitarianReport:
    """Condition (E): one Gamma shared by every cyclic submodule."""

    egalitarian: bool
    gamma: Fraction | None
    witnesses: tuple | None  # (x, gamma_x, y, gamma_y) on failure

    @property
    def normalized(self) -> bool | None:
        """Whether the shared average value is 1; None when not egalitarian."""
        if not self.egalitarian or self.gamma is None:
            return None
        return self.gamma == 1


def egalitarian_check(w: WeightFunction, side: str = "left") -> EgalitarianReport:
    first = None
    for x, _, gamma in _submodule_analysis(w, side):
        if first is None:
            first = (x, gamma)
        elif gamma != first[1]:
            return EgalitarianReport(False, None, (first[0], first[1], x, gamma))
    return EgalitarianReport(True, first[1] if first else None, None)


@dataclass(frozen=True)
class HomogeneityReport:
    """Condition (E), condition (H), and their conjunction."""

    egalitarian: bool
    value_condition: bool  # (H): equal submodules force equal weights
    homogeneous: bool
    e_witnesses: tuple | None
    h_witnesses: tuple | None  # (x, y) with Rx = Ry but w(x) != w(y)


def homogeneous_check(w: WeightFunction, side: str = "left") -> HomogeneityReport:
    analysis = list(_submodule_analysis(w, side))
    e_ok = True
    e_witnesses = None
    first = None
    for x, _, gamma in analysis:
        if first is None:
            first = (x, gamma)
        elif gamma != first[1]:
            e_ok = False
            e_witnesses = (first[0], first[1], x, gamma)
            break
    groups: dict = {}
    for x, key, _ in analysis:
        groups.setdefault(key, []).append(x)
    h_ok = True
    h_witnesses = None
    for members in groups.values():
        w0 = w(members[0])
        for y in members[1:]:
            if w(y) != w0:
                h_ok = False
                h_witnesses = (members[0], y)
                break
        if not h_ok:
            break
    return HomogeneityReport(
        egalitarian=e_ok,
        value_condition=h_ok,
        homogeneous=e_ok and h_ok,
        e_witnesses=e_witnesses,
        h_witnesses=h_witnesses,
    )


def unit_invariance_check(p: int) -> bool:
    """rank(U A) = rank(A) for every U in GL(2, p) and A in M2(F_p)."""
    if p > 5:
        raise ValueError("exhaustive unit-invariance sweep is limited to p <= 5")
    ring = MatrixRing(PrimeField(p))
    arr = ring.element_array()
    ranks = kernels.rank_mod_many(arr, p)
    units = arr[ranks == 2]
    products = np.einsum("uij,ajk->uaik", units, arr) % p
    prod_ranks = kernels.rank_mod_many(
        products.reshape(-1, 2, 2), p
    ).reshape(len(units), len(arr))
    return bool((prod_ranks == ranks[None, :]).all())


def gamma_full_ring(p: int) -> Fraction:
    """Closed form (2p^4 - p^3 - p^2 + p - 1) / p^4 for the whole ring."""
    return Fraction(2 * p ** 4 - p ** 3 - p ** 2 + p - 1, p ** 4)


def gamma_minimal_ideal(p: int) -> Fraction:
    """Closed form (p^2 - 1) / p^2 for an idempotent-generated minimal ideal."""
    return Fraction(p ** 2 - 1, p ** 2)


def weights_report(p: int, side: str = "left") -> dict:
    """JSON-able egalitarian/homogeneous analysis of the rank weight."""
    ring = MatrixRing(PrimeField(p))
    w = rank_weight(ring)
    axioms = is_weight(w)
    report = homogeneous_check(w, side)
    distinct: dict[Fraction, MatrixFp] = {}
    for x, _, gamma in _submodule_analysis(w, side):
        if gamma not in distinct:
            distinct[gamma] = x
    gamma_values = [
        {
            "generator": list(gen.entries()),
            "gamma_num": gamma.numerator,
            "gamma_den": gamma.denominator,
        }
        for gamma, gen in sorted(distinct.items())
    ]
    witnesses = {}
    if report.e_witnesses is not None:
        x, gx, y, gy = report.e_witnesses
        witnesses["egalitarian"] = {
            "generator_a": list(x.entries()),
            "gamma_a": [gx.numerator, gx.denominator],
            "generator_b": list(y.entries()),
            "gamma_b": [gy.numerator, gy.denominator],
        }
    if report.h_witnesses is not None:
        x, y = report.h_witnesses
        witnesses["value_condition"] = {
            "element_a": list(x.entries()),
            "element_b": list(y.entries()),
        }
    return {
        "weight_name": w.name,
        "ring": f"M2(F_{p})",
        "side": side,
        "is_weight": axioms.ok,
        "E": report.egalitarian,
        "H": report.value_condition,
        "homogeneous": report.homogeneous,
        "gamma_values": gamma_values,
        "witnesses": witnesses,
    }
