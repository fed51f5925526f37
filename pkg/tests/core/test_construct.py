"""Tests for idempotent parameters and the two construction paths."""
import numpy as np
import pytest

from idem2.arith.split import Role, all_splits
from idem2.arith.zn import factorize
from idem2.core.construct import construct_case, construct_crt, lift_components
from idem2.core.enumerate import specs_for_split
from idem2.core.sampling import random_context, random_spec
from idem2.core.spec import IdempotentSpec, solve_gamma, validate_spec
from idem2.errors import InvalidSpec, NonUnitError
from idem2.matrix.mat2 import Mat2, mat_is_idempotent
from idem2.series.tseries import Series, TruncationContext
from tests.core.helpers import spec_of

P, Q, R = Role.P, Role.Q, Role.R


@pytest.fixture
def z6():
    return TruncationContext.of(6)


class TestValidateSpec:

    @pytest.mark.parametrize("alpha, beta, gamma, valid", [
        (0, 0, 0, True),
        (2, 1, 1, True),
        (1, 1, 1, False),
    ])
    def test_examples_mod_three(self, alpha, beta, gamma, valid):
        spec = spec_of(TruncationContext.of(3), {3: P}, alpha, beta, gamma)
        assert validate_spec(spec) is valid

    def test_vacuous_without_p(self, z6):
        assert validate_spec(spec_of(z6, {2: Q, 3: R}))

    def test_parameters_must_match_p(self, z6):
        spec = spec_of(z6, {2: Q, 3: P}, 2, 1, 1)
        with pytest.raises(InvalidSpec):
            # alpha over Z_6 instead of Z_3
            IdempotentSpec(split=spec.split, context=z6, alpha=Series.constant(z6, 2), beta=spec.beta, gamma=spec.gamma)
        with pytest.raises(InvalidSpec):
            IdempotentSpec(split=spec.split, context=z6)

    def test_no_parameters_when_p_is_one(self, z6):
        spec = spec_of(z6, {2: Q, 3: R})
        with pytest.raises(InvalidSpec):
            IdempotentSpec(split=spec.split, context=z6, alpha=Series.zero(z6), beta=Series.zero(z6), gamma=Series.zero(z6))


class TestSolveGamma:

    def test_examples(self):
        z3 = TruncationContext.of(3)
        assert solve_gamma(Series.zero(z3), Series.one(z3)).is_zero()
        assert solve_gamma(Series.constant(z3, 2), Series.one(z3)) == 1

    def test_series_example(self):
        ctx = TruncationContext.of(2, 1, 2)
        x = Series.variable(ctx, 0)
        assert solve_gamma(x, Series.one(ctx)) == x + x * x

    def test_non_unit_beta(self):
        ctx = TruncationContext.of(9, 1, 1)
        with pytest.raises(NonUnitError):
            solve_gamma(Series.one(ctx), Series.constant(ctx, 3))


class TestConstructCase:

    def test_case_iv(self, z6):
        A = construct_case(spec_of(z6, {2: Q, 3: R}))
        assert A == Mat2.from_ints(z6, ((3, 0), (0, 3)))
        assert mat_is_idempotent(A)

    def test_case_ii(self, z6):
        A = construct_case(spec_of(z6, {2: Q, 3: P}, 2, 1, 1))
        assert A == Mat2.from_ints(z6, ((5, 4), (4, 5)))
        assert mat_is_idempotent(A)

    def test_case_vi_vii(self, z6):
        assert construct_case(spec_of(z6, {2: Q, 3: Q})).is_identity()
        assert construct_case(spec_of(z6, {2: R, 3: R})).is_zero()

    def test_case_v_is_parameter_matrix(self):
        ctx = TruncationContext.of(2, 1, 4)
        x = Series.variable(ctx, 0)
        spec = spec_of(ctx, {2: P}, x, Series.one(ctx), x + x * x)
        assert construct_case(spec) == Mat2(x, Series.one(ctx), x + x * x, 1 + x)

    def test_rejects_constraint_violation(self):
        spec = spec_of(TruncationContext.of(3), {3: P}, 1, 1, 1)
        with pytest.raises(InvalidSpec):
            construct_case(spec)
        with pytest.raises(InvalidSpec):
            construct_crt(spec)

    def test_residue_conditions(self):
        ctx = TruncationContext.of(60, 1, 1)
        rng = np.random.default_rng(11)
        for split in all_splits(ctx.modulus):
            P_modulus = split.part_modulus(P)
            if P_modulus is None:
                spec = spec_of(ctx, split.role_map())
            else:
                p_ctx = ctx.with_modulus(P_modulus)
                alpha = Series.from_coefficients(p_ctx, rng.integers(0, P_modulus.n, size=p_ctx.size).tolist())
                # constant term 1 keeps beta a unit
                beta = Series.from_coefficients(p_ctx, [1] + rng.integers(0, P_modulus.n, size=p_ctx.size - 1).tolist())
                spec = spec_of(ctx, split.role_map(), alpha, beta, solve_gamma(alpha, beta))
            A = construct_case(spec)
            for q, role in split.role_map().items():
                local = A.reduce(factorize(q))
                if role == Q:
                    assert local.is_identity()
                elif role == R:
                    assert local.is_zero()
                else:
                    q_modulus = factorize(q)
                    assert local.a22 == 1 - local.a11
                    assert local.a11 == spec.alpha.reduce(q_modulus)
                    assert local.a12 == spec.beta.reduce(q_modulus)
                    assert local.a21 == spec.gamma.reduce(q_modulus)


class TestConstructCRT:

    def test_case_iv(self, z6):
        assert construct_crt(spec_of(z6, {2: Q, 3: R})) == Mat2.from_ints(z6, ((3, 0), (0, 3)))

    def test_p_equals_n(self):
        ctx = TruncationContext.of(6, 1, 1)
        x = Series.variable(ctx, 0)
        # alpha = 3 + x, beta = 1: gamma follows
        alpha, beta = 3 + x, Series.one(ctx)
        spec = spec_of(ctx, {2: P, 3: P}, alpha, beta, solve_gamma(alpha, beta))
        assert construct_crt(spec) == Mat2(alpha, beta, spec.gamma, 1 - alpha)

    def test_thirty(self):
        ctx = TruncationContext.of(30)
        spec = spec_of(ctx, {2: P, 3: Q, 5: R}, 1, 1, 0)
        assert construct_crt(spec) == construct_case(spec)
        assert mat_is_idempotent(construct_case(spec))

    @pytest.mark.parametrize("n", [6, 30])
    def test_paths_agree_exhaustively(self, n):
        ctx = TruncationContext.of(n)
        for split in all_splits(ctx.modulus):
            for spec in specs_for_split(split, ctx):
                assert construct_case(spec) == construct_crt(spec)


class TestLiftComponents:

    def test_fuses_per_factor_parameters(self, z6):
        split = spec_of(z6, {2: P, 3: P}, 0, 0, 0).split
        z2, z3 = z6.with_modulus(factorize(2)), z6.with_modulus(factorize(3))
        components = {
            2: (Series.one(z2), Series.one(z2), Series.zero(z2)),
            3: (Series.constant(z3, 2), Series.one(z3), Series.one(z3)),
        }
        spec = lift_components(split, z6, components)
        assert spec.alpha == 5 and spec.beta == 1 and spec.gamma == 4
        assert mat_is_idempotent(construct_case(spec))

    def test_rejects_missing_or_invalid_components(self, z6):
        split = spec_of(z6, {2: P, 3: Q}, 0, 0, 0).split
        z2 = z6.with_modulus(factorize(2))
        with pytest.raises(InvalidSpec):
            lift_components(split, z6, {})
        with pytest.raises(InvalidSpec):
            lift_components(split, z6, {2: (Series.one(z2), Series.one(z2), Series.one(z2))})

    def test_no_p_part(self, z6):
        split = spec_of(z6, {2: Q, 3: R}).split
        assert lift_components(split, z6, {}).alpha is None


class TestRandomizedSpecs:

    def _sweep(self, trials: int, seed: int):
        rng = np.random.default_rng(seed)
        for _ in range(trials):
            ctx = random_context(rng)
            spec = random_spec(rng, ctx)
            assert validate_spec(spec)
            A = construct_case(spec)
            assert mat_is_idempotent(A), f"{spec} gave {A}"
            assert construct_crt(spec) == A

    def test_soundness_sample(self):
        self._sweep(300, seed=1)

    @pytest.mark.slow
    def test_soundness_full(self):
        self._sweep(10_000, seed=2)
