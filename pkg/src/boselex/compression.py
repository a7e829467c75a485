"""Vocabulary compression by information cost N_i * eps_i.

Whole descriptor classes are dropped; their tokens become uncovered.
Cost totals are accumulated exactly (as fractions of the float costs) so the
kept and dropped parts always add up to the total.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .combinatorics import stirling_entropy
from .equilibrium import Gauge, InformatibilityAssignment
from .errors import DomainError, IncompleteAssignmentError
from .lexicon import ClassStat, DescriptorPartition, make_map_document

RULE_KINDS = ("threshold", "top", "budget")


class Rule(NamedTuple):
    kind: str
    value: float

    def __str__(self):
        value = int(self.value) if self.kind == "top" else self.value
        return f"{self.kind}:{value}"


def parse_rule(text: str) -> Rule:
    """Parse ``threshold:t``, ``top:m`` or ``budget:f``."""
    kind, _, raw = text.partition(":")
    if kind not in RULE_KINDS or not raw:
        raise DomainError(f"rule must be one of threshold:t, top:m, budget:f; got {text!r}")
    try:
        value = int(raw) if kind == "top" else float(raw)
    except ValueError:
        raise DomainError(f"bad rule parameter in {text!r}") from None
    return Rule(kind, value)


@dataclass(frozen=True)
class CompressionLosses:
    dropped_cost: float
    kept_cost: float
    total_cost: float
    dropped_tokens: int
    entropy_before: float
    entropy_after: float
    coverage_after: float


@dataclass(frozen=True)
class CompressionPlan:
    ordering: tuple[str, ...]
    kept: tuple[str, ...]
    dropped: tuple[str, ...]
    rule: Rule
    gauge: Gauge
    costs: tuple[tuple[str, float], ...]
    losses: CompressionLosses

    def exact_costs(self) -> tuple[Fraction, Fraction, Fraction]:
        """(kept, dropped, total) cost sums with no rounding."""
        costs = dict(self.costs)
        kept = sum((Fraction(costs[i]) for i in self.kept), Fraction(0))
        dropped = sum((Fraction(costs[i]) for i in self.dropped), Fraction(0))
        total = sum((Fraction(c) for c in costs.values()), Fraction(0))
        return kept, dropped, total

    def as_dict(self) -> dict:
        losses = self.losses
        return {
            "rule": str(self.rule),
            "gauge": {"theta": self.gauge.theta, "alpha": self.gauge.alpha},
            "ordering": list(self.ordering),
            "kept": list(self.kept),
            "dropped": list(self.dropped),
            "losses": {
                "dropped_cost": losses.dropped_cost,
                "kept_cost": losses.kept_cost,
                "total_cost": losses.total_cost,
                "dropped_tokens": losses.dropped_tokens,
                "entropy_before": losses.entropy_before,
                "entropy_after": losses.entropy_after,
                "coverage_after": losses.coverage_after,
            },
        }


def information_cost(assignment: InformatibilityAssignment, stats: Sequence[ClassStat]) -> list[tuple[str, float]]:
    eps = assignment.epsilon_by_id()
    out = []
    for s in stats:
        if s.usage == 0:
            out.append((s.id, 0.0))
            continue
        e = eps.get(s.id)
        if e is None or not math.isfinite(e):
            raise IncompleteAssignmentError(f"class {s.id!r} is occupied but has no finite informatibility")
        out.append((s.id, s.usage * e))
    return out


def _select(costs: list[tuple[str, float]], rule: Rule) -> set[str]:
    k = len(costs)
    descending = sorted(costs, key=lambda ic: (-ic[1], ic[0]))
    if rule.kind == "threshold":
        if not rule.value >= 0:
            raise DomainError("threshold must be nonnegative")
        return {i for i, c in costs if c >= rule.value}
    if rule.kind == "top":
        m = int(rule.value)
        if not 1 <= m <= k:
            raise DomainError(f"top:m needs 1 <= m <= {k}")
        return {i for i, _ in descending[:m]}
    if not 0 < rule.value <= 1:
        raise DomainError("budget fraction must lie in (0, 1]")
    total = sum((Fraction(c) for _, c in costs), Fraction(0))
    # decimal reading of the fraction, so budget:0.8 means exactly 4/5
    goal = Fraction(repr(float(rule.value))) * total
    kept, running = set(), Fraction(0)
    for i, c in descending:
        if kept and running >= goal:
            break
        kept.add(i)
        running += Fraction(c)
    return kept


def compress(stats: Sequence[ClassStat], assignment: InformatibilityAssignment, rule: Rule,
             total_tokens: int | None = None) -> CompressionPlan:
    """Plan which classes to keep under ``rule``.

    ``total_tokens`` (corpus size including unassigned words) is the
    denominator of ``coverage_after``; it defaults to the covered tokens.
    """
    stats = list(stats)
    costs = information_cost(assignment, stats)
    kept = _select(costs, rule) if costs else set()
    cost_of = dict(costs)
    ordering = tuple(i for i, _ in sorted(costs, key=lambda ic: (ic[1], ic[0])))
    kept_ids = tuple(sorted(kept))
    dropped_ids = tuple(sorted(set(cost_of) - kept))

    covered = sum(s.usage for s in stats)
    total_tokens = covered if total_tokens is None else total_tokens
    kept_stats = [(s.usage, s.size) for s in stats if s.id in kept]
    kept_tokens = sum(n for n, _ in kept_stats)
    exact = {i: Fraction(c) for i, c in costs}
    kept_cost = sum((exact[i] for i in kept_ids), Fraction(0))
    dropped_cost = sum((exact[i] for i in dropped_ids), Fraction(0))
    losses = CompressionLosses(
        dropped_cost=float(dropped_cost),
        kept_cost=float(kept_cost),
        total_cost=float(kept_cost + dropped_cost),
        dropped_tokens=covered - kept_tokens,
        entropy_before=stirling_entropy([(s.usage, s.size) for s in stats]),
        entropy_after=stirling_entropy(kept_stats),
        coverage_after=kept_tokens / total_tokens if total_tokens else 0.0,
    )
    return CompressionPlan(ordering, kept_ids, dropped_ids, rule, assignment.gauge,
                           tuple(costs), losses)


def emit_compressed_dictionary(plan: CompressionPlan, partition: DescriptorPartition) -> dict:
    keep = set(plan.kept)
    return make_map_document((c.id, c.members) for c in partition.classes if c.id in keep)
