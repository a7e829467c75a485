"""Assembly and rendering of the analysis report document."""

from __future__ import annotations

import json
import math
from typing import Any, Sequence

from . import __version__
from .combinatorics import EXACT_LOG_LIMIT, count_configurations_exact, ln_count_total
from .compression import CompressionPlan
from .entropy import SpecificEntropyInput, compare_entropies, specific_entropy
from .equilibrium import (
    DEFAULT_GAUGE,
    EnergyLevels,
    EquilibriumSolution,
    Gauge,
    InformatibilityAssignment,
    calibrate_gauge,
    fit_equilibrium,
    informatibility,
)
from .ingest import coverage_curve, default_ranks
from .lexicon import DescriptorPartition, FrequencyDictionary, class_statistics

REPORT_VERSION = "bose-lex/1"
SIGNIFICANT_DIGITS = 12
COVERAGE_PROBE_RANK = 1000


def render_number(x: float) -> float | None:
    if not math.isfinite(x):
        return None
    y = float(f"{x:.{SIGNIFICANT_DIGITS}g}")
    return 0.0 if y == 0 else y


def normalize(obj: Any) -> Any:
    """Round every float to 12 significant digits; inf/nan become null."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        return render_number(obj)
    if isinstance(obj, dict):
        return {k: normalize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [normalize(v) for v in obj]
    raise TypeError(f"cannot render {type(obj).__name__}")


def dumps(document: dict) -> str:
    return json.dumps(normalize(document), indent=2, ensure_ascii=False) + "\n"


def resolve_gauge(partition: DescriptorPartition, theta: float | None = None,
                  alpha: float | None = None, e0: float | None = None) -> Gauge:
    if e0 is not None:
        occupied = [c for c in partition.classes if c.usage > 0]
        return calibrate_gauge([float(c.occupancy) for c in occupied], [c.size for c in occupied], e0)
    return Gauge(DEFAULT_GAUGE.theta if theta is None else theta,
                 DEFAULT_GAUGE.alpha if alpha is None else alpha)


def assign(partition: DescriptorPartition, gauge: Gauge) -> InformatibilityAssignment:
    stats = class_statistics(partition)
    return informatibility(
        [s.occupancy for s in stats], gauge.theta, gauge.alpha,
        degeneracies=[s.size for s in stats], ids=[s.id for s in stats],
    )


def class_table(partition: DescriptorPartition, assignment: InformatibilityAssignment) -> list[dict]:
    rows = []
    for s, eps, cost in zip(class_statistics(partition), assignment.epsilon, assignment.costs):
        small = s.usage + s.size <= EXACT_LOG_LIMIT
        rows.append({
            "id": s.id,
            "N": s.usage,
            "G": s.size,
            "occupancy": s.occupancy,
            "epsilon": eps,
            "cost": cost,
            "configurations": count_configurations_exact(s.usage, s.size) if small else None,
            "ln_configurations": ln_count_total([(s.usage, s.size)]),
        })
    return rows


def equilibrium_block(partition: DescriptorPartition, assignment: InformatibilityAssignment,
                      n_target: float, e_target: float) -> tuple[dict, EquilibriumSolution]:
    """Fit (beta, alpha) on the finite-informatibility classes."""
    finite = [(c, e) for c, e in zip(partition.classes, assignment.epsilon) if math.isfinite(e)]
    levels = EnergyLevels([e for _, e in finite], [c.size for c, _ in finite])
    solution = fit_equilibrium(levels, n_target, e_target)
    block = solution.as_dict()
    block["targets"] = {"N": n_target, "E": e_target}
    block["classes"] = [
        {"id": c.id, "occupancy": occ, "epsilon": e}
        for (c, e), occ in zip(finite, solution.occupations)
    ]
    return block, solution


def entropy_block(partition: DescriptorPartition) -> dict:
    stats = [(c.usage, c.size) for c in partition.classes]
    block = compare_entropies(stats).as_dict()
    block["ln_count_total_nats"] = ln_count_total(stats) if stats else 0.0
    occupied = [s for s in stats if s[0] > 0]
    block["specific_entropy_nats"] = (
        specific_entropy(SpecificEntropyInput.from_stats(stats)) if occupied else 0.0
    )
    return block


def coverage_block(freq: FrequencyDictionary, ranks: Sequence[int] | None = None) -> dict:
    ranks = default_ranks(len(freq)) if ranks is None else list(ranks)
    probe = coverage_curve(freq, [COVERAGE_PROBE_RANK])
    return {
        "vocabulary_size": len(freq),
        "total_tokens": freq.total_tokens,
        "coverage_at_1000": probe[0].cumulative_fraction if probe else None,
        "points": [[p.rank, p.cumulative_fraction] for p in coverage_curve(freq, ranks)],
    }


def analysis_report(freq: FrequencyDictionary, partition: DescriptorPartition, gauge: Gauge,
                    config: dict, fit: tuple[float, float] | None = None,
                    ranks: Sequence[int] | None = None) -> dict:
    assignment = assign(partition, gauge)
    report = {
        "version": REPORT_VERSION,
        "tool": {"name": "boselex", "version": __version__},
        "config": config,
        "gauge": {"theta": gauge.theta, "alpha": gauge.alpha},
        "totals": {
            "total_tokens": partition.total_tokens,
            "covered_tokens": partition.covered_tokens,
            "unassigned_tokens": partition.unassigned_tokens,
            "unassigned_words": len(partition.unassigned),
            "classes": len(partition),
        },
        "classes": class_table(partition, assignment),
        "infinite_informatibility": list(assignment.infinite),
        "entropy": entropy_block(partition),
    }
    if fit is not None:
        report["equilibrium"], _ = equilibrium_block(partition, assignment, *fit)
    report["coverage"] = coverage_block(freq, ranks)
    return report


def compression_report(plan: CompressionPlan, config: dict) -> dict:
    return {
        "version": REPORT_VERSION,
        "tool": {"name": "boselex", "version": __version__},
        "config": config,
        "compression": plan.as_dict(),
    }
