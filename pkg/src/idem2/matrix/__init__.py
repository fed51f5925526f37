from idem2.matrix.mat2 import (
    Mat2, Shape, mat_add, mat_mul, mat_scale, trace, det, cayley_hamilton_residual,
    mat_is_idempotent, local_shape,
)

__all__ = [
    'Mat2', 'Shape', 'mat_add', 'mat_mul', 'mat_scale', 'trace', 'det',
    'cayley_hamilton_residual', 'mat_is_idempotent', 'local_shape',
]
