from idem2.arith.zn import (
    Modulus, Residue, factorize, totient, mod_pow, crt_combine, idempotents_of_zn, is_prime,
)
from idem2.arith.split import Role, CoprimeSplit, all_splits

__all__ = [
    'Modulus', 'Residue', 'factorize', 'totient', 'mod_pow', 'crt_combine',
    'idempotents_of_zn', 'is_prime', 'Role', 'CoprimeSplit', 'all_splits',
]
