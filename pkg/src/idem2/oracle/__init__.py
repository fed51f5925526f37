from idem2.oracle.brute import SearchSpace, brute_force_idempotents, brute_force_series_idempotents
from idem2.oracle.report import OracleReport, compare_sets

__all__ = [
    'SearchSpace', 'brute_force_idempotents', 'brute_force_series_idempotents',
    'OracleReport', 'compare_sets',
]
