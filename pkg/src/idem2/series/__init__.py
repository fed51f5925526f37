from idem2.series.tseries import (
    Monomial, TruncationContext, Series, window_size, graded_monomials, monomial_index, product_table,
    series_add, series_sub, series_neg, series_scale, series_mul, constant_term,
    homogeneous_component, series_is_idempotent, idempotent_defect_degree, series_inverse,
)

__all__ = [
    'Monomial', 'TruncationContext', 'Series', 'window_size', 'graded_monomials', 'monomial_index', 'product_table',
    'series_add', 'series_sub', 'series_neg', 'series_scale', 'series_mul', 'constant_term',
    'homogeneous_component', 'series_is_idempotent', 'idempotent_defect_degree', 'series_inverse',
]
