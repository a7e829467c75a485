import math
from fractions import Fraction

import numpy as np
import pytest

from boselex.compression import (
    Rule,
    compress,
    emit_compressed_dictionary,
    information_cost,
    parse_rule,
)
from boselex.equilibrium import InformatibilityAssignment, informatibility
from boselex.errors import DomainError, IncompleteAssignmentError
from boselex.lexicon import ClassStat, FrequencyDictionary, build_partition, class_statistics, make_map_document

from oracles import min_dropped_cost


def manual(costs):
    """Stats and an assignment whose costs are exactly ``costs`` (N_i = 1)."""
    ids = [f"c{i:02d}" for i in range(len(costs))]
    stats = [ClassStat(i, 1, 1, 1.0) for i in ids]
    assignment = InformatibilityAssignment(tuple(ids), tuple(costs), tuple(costs), (1.0, 0.0))
    return stats, assignment


def test_information_cost_examples():
    stats = [ClassStat("a", 5, 2, 2.5), ClassStat("b", 0, 4, 0.0)]
    a = InformatibilityAssignment(("a", "b"), (0.2, math.inf), (1.0, 0.0), (1.0, 0.0), ("b",))
    assert information_cost(a, stats) == [("a", 1.0), ("b", 0.0)]


def test_information_cost_fractional_identity():
    g, n = 100.0, 0.7384943496189921
    a = informatibility([n], 1.0, 0.0, degeneracies=[g])
    assert a.costs[0] == pytest.approx(g * n * a.epsilon[0], rel=1e-12)


def test_missing_epsilon_is_an_error():
    stats = [ClassStat("a", 5, 2, 2.5)]
    a = InformatibilityAssignment(("other",), (1.0,), (1.0,), (1.0, 0.0))
    with pytest.raises(IncompleteAssignmentError):
        information_cost(a, stats)


def test_keep_top_drops_cheapest():
    stats, a = manual([1.0, 0.1, 3.0])
    plan = compress(stats, a, Rule("top", 2))
    assert plan.dropped == ("c01",)
    assert plan.ordering == ("c01", "c00", "c02")


def test_threshold_zero_is_identity():
    stats, a = manual([1.0, 0.0, 3.0])
    plan = compress(stats, a, Rule("threshold", 0.0))
    assert plan.dropped == () and plan.kept == ("c00", "c01", "c02")


def test_budget_keeps_smallest_prefix():
    stats, a = manual([5.0, 3.0, 1.0, 1.0])
    assert compress(stats, a, Rule("budget", 0.5)).kept == ("c00",)
    assert compress(stats, a, Rule("budget", 0.8)).kept == ("c00", "c01")
    assert compress(stats, a, Rule("budget", 1.0)).kept == ("c00", "c01", "c02", "c03")


@pytest.mark.parametrize("rule", [Rule("top", 0), Rule("top", 4), Rule("budget", 0.0), Rule("threshold", -1.0)])
def test_invalid_rules(rule):
    stats, a = manual([1.0, 2.0, 3.0])
    with pytest.raises(DomainError):
        compress(stats, a, rule)


def test_parse_rule():
    assert parse_rule("top:3") == Rule("top", 3)
    assert parse_rule("budget:0.9") == Rule("budget", 0.9)
    assert str(parse_rule("threshold:1.5")) == "threshold:1.5"
    with pytest.raises(DomainError):
        parse_rule("keep:2")


def test_keep_top_is_optimal_and_conserving():
    rng = np.random.default_rng(11)
    for k in range(1, 13):
        costs = list(rng.uniform(0, 10, k))
        stats, a = manual(costs)
        for m in range(1, k + 1):
            plan = compress(stats, a, Rule("top", m))
            assert plan.losses.dropped_cost == pytest.approx(min_dropped_cost(costs, m), rel=1e-12, abs=1e-12)
            kept, dropped, total = plan.exact_costs()
            assert kept + dropped == total


def test_threshold_monotonicity():
    rng = np.random.default_rng(3)
    costs = list(rng.exponential(2.0, 9))
    stats, a = manual(costs)
    previous = None
    for t in np.linspace(0, 10, 40):
        plan = compress(stats, a, Rule("threshold", float(t)))
        assert plan.losses.entropy_after <= plan.losses.entropy_before
        if previous is not None:
            assert len(plan.kept) <= previous
        previous = len(plan.kept)


def test_losses_on_real_partition():
    freq = FrequencyDictionary({"a": 5, "b": 1, "c": 2, "d": 9, "e": 4})
    doc = make_map_document([("x", ["a", "b"]), ("y", ["c"]), ("z", ["d", "f", "g"])])
    partition = build_partition(freq, doc)
    stats = class_statistics(partition)
    a = informatibility([s.occupancy for s in stats], degeneracies=[s.size for s in stats],
                        ids=[s.id for s in stats])
    plan = compress(stats, a, Rule("top", 2), total_tokens=partition.total_tokens)
    dropped = set(plan.dropped)
    assert plan.losses.dropped_tokens == sum(s.usage for s in stats if s.id in dropped)
    kept_tokens = sum(s.usage for s in stats if s.id not in dropped)
    assert plan.losses.coverage_after == kept_tokens / 21

    emitted = emit_compressed_dictionary(plan, partition)
    rebuilt = build_partition(freq, emitted)
    assert [c.id for c in rebuilt.classes] == list(plan.kept)
    assert abs(rebuilt.covered_tokens / rebuilt.total_tokens - plan.losses.coverage_after) < 1e-12
    original = {s.id: s for s in stats}
    for s in class_statistics(rebuilt):
        assert s == original[s.id]


def test_emit_identity_and_single():
    freq = FrequencyDictionary({"a": 3, "b": 1, "c": 2})
    doc = make_map_document([("y", ["c", "b"]), ("x", ["a"])])
    partition = build_partition(freq, doc)
    stats = class_statistics(partition)
    a = informatibility([s.occupancy for s in stats], degeneracies=[s.size for s in stats],
                        ids=[s.id for s in stats])
    assert emit_compressed_dictionary(compress(stats, a, Rule("threshold", 0.0)), partition) == doc
    single = emit_compressed_dictionary(compress(stats, a, Rule("top", 1)), partition)
    assert len(single["classes"]) == 1


def test_exact_accounting_uses_fractions():
    stats, a = manual([0.1, 0.2, 0.3])
    plan = compress(stats, a, Rule("top", 1))
    kept, dropped, total = plan.exact_costs()
    assert isinstance(total, Fraction) and kept + dropped == total
