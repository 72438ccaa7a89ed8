"""
Lab package for Dedekind Lab.

This package contains the theorem checks, identity sweeps, level sets,
census, benchmarks and their serialization.
"""

from dedekind_lab.lab.models import (
    Verdict,
    Method,
    OutputFormat,
    Subcommand,
    VerifyTarget,
    TheoremReport,
    LevelSetTable,
    CensusRow,
    BenchRecord,
    CommandRequest
)

from dedekind_lab.lab.theorems import (
    thm1_divisibility,
    thm3_divisibility,
    check_pair,
    scan_theorem1,
    scan_theorem3,
    violations,
    verify_corollary1,
    verify_corollary2,
    corollary2_converse_failures,
    counterexample_fixtures
)

from dedekind_lab.lab.identities import (
    verify_dedekind_reciprocity,
    verify_rademacher_reciprocity,
    verify_integrality,
    verify_reciprocity_integrality
)

from dedekind_lab.lab.levels import level_sets, count_solutions, census_row, census

from dedekind_lab.lab.bench import bench, checksums_agree, naive_scaling_ratio, random_coprime_pairs

__all__ = [
    'Verdict',
    'Method',
    'OutputFormat',
    'Subcommand',
    'VerifyTarget',
    'TheoremReport',
    'LevelSetTable',
    'CensusRow',
    'BenchRecord',
    'CommandRequest',
    'thm1_divisibility',
    'thm3_divisibility',
    'check_pair',
    'scan_theorem1',
    'scan_theorem3',
    'violations',
    'verify_corollary1',
    'verify_corollary2',
    'corollary2_converse_failures',
    'counterexample_fixtures',
    'verify_dedekind_reciprocity',
    'verify_rademacher_reciprocity',
    'verify_integrality',
    'verify_reciprocity_integrality',
    'level_sets',
    'count_solutions',
    'census_row',
    'census',
    'bench',
    'checksums_agree',
    'naive_scaling_ratio',
    'random_coprime_pairs'
]
