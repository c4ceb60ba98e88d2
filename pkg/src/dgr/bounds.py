"""Exact rational evaluation of the closed-form remoteness bounds.

Every bound returns a ``BoundResult`` with an exact ``Fraction`` value.
Applicability gates only the hypotheses without which the bound value is
meaningless; the sharpness clauses (congruence and size ranges) are
evaluated separately and reported, never silently enforced. One stated
range is internally inconsistent with direct size counts of the digraph
family (its upper end reads n^2-2n-1 where counting gives (n-1)^2); the
evaluator gates on the counted maximum and flags the literal clause in
the notes, and the audit pathway in the verifier records both numbers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

BOUND_IDS = (
    "order",
    "digraph_order",
    "order_size",
    "kappa_graph",
    "lambda_graph",
    "kappa_digraph",
    "size_digraph",
    "eulerian_kappa",
    "eulerian_size",
    "eulerian_lambda",
)

_NEEDS_M = set(BOUND_IDS) - {"order", "digraph_order"}
_NEEDS_KAPPA = {"kappa_graph", "kappa_digraph", "eulerian_kappa"}
_NEEDS_LAMBDA = {"lambda_graph", "eulerian_lambda"}


@dataclass(frozen=True)
class BoundQuery:
    """One bound evaluation request. m doubles as m_0 for Eulerian bounds."""

    bound_id: str
    n: int
    m: int | Fraction | None = None
    kappa: int | None = None
    lam: int | None = None

    def __post_init__(self) -> None:
        if self.bound_id not in BOUND_IDS:
            raise ValueError(f"unknown bound id {self.bound_id!r}")
        if self.bound_id in _NEEDS_M and self.m is None:
            raise ValueError(f"{self.bound_id} requires m")
        if self.bound_id in _NEEDS_KAPPA and self.kappa is None:
            raise ValueError(f"{self.bound_id} requires kappa")
        if self.bound_id in _NEEDS_LAMBDA and self.lam is None:
            raise ValueError(f"{self.bound_id} requires lambda")


@dataclass(frozen=True)
class BoundResult:
    """Exact bound value plus applicability and sharpness bookkeeping."""

    value: Fraction | None
    applicable: bool
    sharpness_conditions_met: bool
    m_star: int | None = None
    notes: tuple[str, ...] = field(default=())


class GuardCheck(NamedTuple):
    met: bool
    reasons: tuple[str, ...]


def m_star(n: int, m: int, kappa: int) -> int:
    """Smallest integer >= m congruent to n^2 - 2n - 1 modulo kappa."""
    if kappa < 1:
        raise ValueError("kappa must be positive")
    anchor = (n * n - 2 * n - 1) % kappa
    return m + (anchor - m) % kappa


def m_star_counted(n: int, m: int, kappa: int) -> int:
    """Variant anchored at the counted family maximum (n-1)^2.

    Family sizes counted directly are congruent to (n-1)^2 mod kappa; for
    kappa <= 2 this coincides with ``m_star``, for kappa >= 3 the two
    anchors differ by 2. Kept for audits; the bound evaluator uses the
    literal ``m_star``.
    """
    if kappa < 1:
        raise ValueError("kappa must be positive")
    anchor = ((n - 1) * (n - 1)) % kappa
    return m + (anchor - m) % kappa


def _congruent_b(target: int, kappa: int) -> int:
    """The unique b in {1..kappa} with b = target (mod kappa)."""
    r = target % kappa
    return r if r != 0 else kappa


def _kappa_graph_value(n: int, m, kappa: int) -> Fraction:
    return (
        Fraction(n, 2 * kappa)
        + 2
        - Fraction(1, kappa)
        - Fraction(kappa - 1, n - 1)
        - Fraction(m, 1) / (kappa * (n - 1))
    )


def _kappa_graph_sharpness(n: int, m, kappa: int) -> GuardCheck:
    """Equality clauses of the kappa-connected graph bound."""
    reasons = []
    target = math.comb(n - 1, 2)
    if not (isinstance(m, int) and (m - target) % kappa == 0):
        reasons.append(f"congruence fails: m = {m} != C(n-1,2) = {target} (mod {kappa})")
    b = _congruent_b(target, kappa)
    low = Fraction(n * (3 * kappa - 1) - 2 * kappa * kappa - kappa + 1 - b * (kappa - b), 2)
    if not (low <= m <= target):
        reasons.append(f"size range fails: need {low} <= m <= {target}, got m = {m}")
    return GuardCheck(not reasons, tuple(reasons))


def _kappa_digraph_sharpness(n: int, m, kappa: int) -> GuardCheck:
    """Literal equality clauses of the kappa-connected digraph bound.

    The stated upper end n^2-2n-1 disagrees with direct counting ((n-1)^2);
    both are reported so the failure mode is visible.
    """
    reasons = []
    anchor = n * n - 2 * n - 1
    if not (isinstance(m, int) and (m - anchor) % kappa == 0):
        reasons.append(f"congruence fails: m = {m} != {anchor} (mod {kappa})")
    b = _congruent_b(n - 1, kappa)
    low = Fraction(n, 2) * (3 * kappa + n) - n - kappa * kappa - b * (kappa - b)
    if not (low <= m <= anchor):
        reasons.append(
            f"literal size range fails: need {low} <= m <= {anchor}, got m = {m}"
            f" (counted family range tops out at {(n - 1) ** 2}, not {anchor})"
        )
    return GuardCheck(not reasons, tuple(reasons))


def _size_digraph_sharpness(n: int, m) -> GuardCheck:
    reasons = []
    low = Fraction((n - 1) * (n + 2), 2)
    high = n * n - 2 * n - 1
    if not (low <= m <= high):
        reasons.append(
            f"stated size range fails: need {low} <= m <= {high}, got m = {m}"
            " (below the range the bound stays sharp but the extremal digraph"
            " is not unique)"
        )
    return GuardCheck(not reasons, tuple(reasons))


def sharpness_guard(bound_id: str, n: int, m, kappa_or_lambda: int | None = None) -> GuardCheck:
    """Evaluate the literal equality/sharpness clauses of one bound.

    Returns whether every stated clause holds, plus one reason per failed
    clause. Bounds that are sharp only up to an additive constant report
    False with that reason.
    """
    if bound_id in ("order", "digraph_order", "order_size", "eulerian_size"):
        return GuardCheck(True, ())
    if bound_id in ("kappa_graph", "eulerian_kappa"):
        if kappa_or_lambda is None:
            raise ValueError("kappa required")
        return _kappa_graph_sharpness(n, m, kappa_or_lambda)
    if bound_id == "kappa_digraph":
        if kappa_or_lambda is None:
            raise ValueError("kappa required")
        return _kappa_digraph_sharpness(n, m, kappa_or_lambda)
    if bound_id == "size_digraph":
        return _size_digraph_sharpness(n, m)
    if bound_id in ("lambda_graph", "eulerian_lambda"):
        return GuardCheck(False, ("sharp only up to an additive constant",))
    raise ValueError(f"unknown bound id {bound_id!r}")


def evaluate(q: BoundQuery) -> BoundResult:
    """Evaluate one closed-form bound exactly.

    Raises on malformed queries (missing parameters, order below the
    bound's minimum); returns applicable=False with a named guard when a
    hypothesis range fails.
    """
    bid, n, m, kappa, lam = q.bound_id, q.n, q.m, q.kappa, q.lam
    if isinstance(m, Fraction) and m.denominator == 1:
        m = int(m)
    n_min = 3 if bid == "digraph_order" else 2
    if n < n_min:
        raise ValueError(f"{bid} requires n >= {n_min}")
    if m is not None and m < 0:
        raise ValueError("m must be nonnegative")
    if kappa is not None and kappa < 1:
        raise ValueError("kappa must be positive")

    notes: list[str] = []

    if bid in ("order", "digraph_order"):
        return BoundResult(Fraction(n, 2), True, True)

    if bid in ("order_size", "eulerian_size"):
        cap = math.comb(n, 2)
        if m > cap:
            return BoundResult(None, False, False, notes=(f"m exceeds C(n,2) = {cap}",))
        value = Fraction(n + 2, 2) - Fraction(m, 1) / (n - 1)
        return BoundResult(value, True, True)

    if bid in ("kappa_graph", "eulerian_kappa"):
        cap = math.comb(n - 1, 2)
        if m > cap:
            return BoundResult(None, False, False, notes=(f"m exceeds C(n-1,2) = {cap}",))
        sharp = _kappa_graph_sharpness(n, m, kappa)
        return BoundResult(
            _kappa_graph_value(n, m, kappa), True, sharp.met, notes=sharp.reasons
        )

    if bid in ("lambda_graph", "eulerian_lambda"):
        if lam not in (2, 3):
            raise ValueError("lambda must be 2 or 3")
        if bid == "lambda_graph":
            threshold = math.ceil(Fraction(5 * n, 3)) - 2 if lam == 2 else math.ceil(Fraction(9 * n, 4)) - 2
        else:
            threshold = math.ceil(Fraction(5 * n, 6)) - 1 if lam == 2 else math.ceil(Fraction(9 * n, 8)) - 1
        if lam == 2:
            value = (
                Fraction(n, 3)
                if m < threshold
                else Fraction(n, 3) - Fraction(2 * m, 1) / (3 * (n - 1)) + Fraction(5, 3)
            )
        else:
            value = (
                Fraction(n, 4)
                if m < threshold
                else Fraction(n, 4) - Fraction(m, 1) / (2 * (n - 1)) + Fraction(3, 2)
            )
        return BoundResult(value, True, False, notes=("sharp only up to an additive constant",))

    if bid == "size_digraph":
        if m > n * (n - 1):
            return BoundResult(None, False, False, notes=(f"m exceeds n(n-1) = {n * (n - 1)}",))
        sharp = _size_digraph_sharpness(n, m)
        value = n + 1 - Fraction(m, 1) / (n - 1)
        return BoundResult(value, True, sharp.met, notes=sharp.reasons)

    assert bid == "kappa_digraph"
    if not isinstance(m, int):
        raise ValueError("kappa_digraph requires an integer m")
    counted_max = (n - 1) * (n - 1)
    if m > counted_max:
        return BoundResult(
            None, False, False, notes=(f"m exceeds the counted family maximum {counted_max}",)
        )
    if m > n * n - 2 * n - 1:
        notes.append(
            f"m exceeds the literal stated maximum {n * n - 2 * n - 1}; gated on the"
            f" counted maximum {counted_max} instead"
        )
    star = m_star(n, m, kappa)
    value = (
        Fraction(n, kappa)
        + 2
        - Fraction(1, kappa)
        - Fraction(kappa - 1, n - 1)
        - Fraction(star, kappa * (n - 1))
    )
    sharp = _kappa_digraph_sharpness(n, m, kappa)
    notes.extend(sharp.reasons)
    return BoundResult(value, True, sharp.met, m_star=star, notes=tuple(notes))


def evaluate_bound(
    bound_id: str,
    n: int,
    m: int | Fraction | None = None,
    kappa: int | None = None,
    lam: int | None = None,
) -> BoundResult:
    """Convenience wrapper around ``evaluate``."""
    return evaluate(BoundQuery(bound_id, n, m, kappa, lam))
