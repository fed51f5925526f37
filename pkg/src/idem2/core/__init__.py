from idem2.core.spec import IdempotentSpec, ClassifiedIdempotent, validate_spec, solve_gamma
from idem2.core.construct import construct_case, construct_crt, lift_components
from idem2.core.classify import classify
from idem2.core.enumerate import enumerate_all, census, count_by_factor

__all__ = [
    'IdempotentSpec', 'ClassifiedIdempotent', 'validate_spec', 'solve_gamma',
    'construct_case', 'construct_crt', 'lift_components', 'classify',
    'enumerate_all', 'census', 'count_by_factor',
]
