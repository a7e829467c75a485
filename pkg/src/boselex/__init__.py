"""Bose-Einstein statistics of descriptor vocabularies.

Models a compressed vocabulary as descriptor classes over a word-frequency
dictionary, measures its configuration entropy, assigns each class an
informatibility by inverting the Bose-Einstein occupation law, and drops
classes whose information cost is small.
"""

__version__ = "0.1.0"

from .combinatorics import (  # noqa: E402
    count_configurations_exact,
    enumerate_configurations,
    ln_count_total,
    stirling_entropy,
)
from .compression import (  # noqa: E402
    CompressionPlan,
    Rule,
    compress,
    emit_compressed_dictionary,
    information_cost,
    parse_rule,
)
from .entropy import (  # noqa: E402
    EntropyComparison,
    SpecificEntropyInput,
    boltzmann_limit_entropy,
    compare_entropies,
    shannon_entropy,
    specific_entropy,
)
from .equilibrium import (  # noqa: E402
    EnergyLevels,
    EquilibriumSolution,
    Gauge,
    InformatibilityAssignment,
    calibrate_gauge,
    fit_equilibrium,
    informatibility,
    lagrange_value,
    occupation,
    theta_sensitivity,
)
from .ingest import (  # noqa: E402
    TokenizerConfig,
    band_by_frequency,
    count_frequencies,
    coverage_curve,
    tokenize,
)
from .lexicon import (  # noqa: E402
    DescriptorClass,
    DescriptorPartition,
    FrequencyDictionary,
    build_partition,
    class_statistics,
)
