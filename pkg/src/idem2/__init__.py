from idem2.arith.zn import Modulus, Residue, factorize, totient, mod_pow, crt_combine, idempotents_of_zn
from idem2.arith.split import CoprimeSplit, Role, all_splits
from idem2.series.tseries import Series, TruncationContext, series_inverse
from idem2.matrix.mat2 import Mat2, mat_is_idempotent, cayley_hamilton_residual
from idem2.core.spec import IdempotentSpec, ClassifiedIdempotent, validate_spec, solve_gamma
from idem2.core.construct import construct_case, construct_crt
from idem2.core.classify import classify
from idem2.core.enumerate import enumerate_all
from idem2.errors import Idem2Error
import sys


def console_main():
    from idem2.cli.main import main
    sys.exit(main())
