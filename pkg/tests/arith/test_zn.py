"""Tests for exact arithmetic in Z_n and coprime splits."""
import math

import numpy as np
import pytest

from idem2.arith.split import CoprimeSplit, Role, all_splits
from idem2.arith.zn import (
    Modulus, Residue, crt_combine, factorize, idempotents_of_zn, is_prime, mod_pow, totient,
)
from idem2.errors import ModulusError, ModulusMismatch, NonUnitError


class TestFactorize:

    @pytest.mark.parametrize("n, factors", [
        (12, ((2, 2), (3, 1))),
        (2, ((2, 1),)),
        (30, ((2, 1), (3, 1), (5, 1))),
        (1000, ((2, 3), (5, 3))),
        (997, ((997, 1),)),
    ])
    def test_examples(self, n, factors):
        assert factorize(n).factors == factors

    def test_product_of_factors_is_n(self):
        for n in range(2, 2000):
            m = factorize(n)
            assert math.prod(p**d for p, d in m.factors) == n
            assert all(is_prime(p) for p, _ in m.factors)
            assert [p for p, _ in m.factors] == sorted({p for p, _ in m.factors})

    @pytest.mark.parametrize("n", [1, 0, -5])
    def test_rejects_small(self, n):
        with pytest.raises(ModulusError):
            factorize(n)

    def test_rejects_bad_factor_list(self):
        with pytest.raises(ModulusError):
            Modulus(n=12, factors=((3, 1), (2, 2)))
        with pytest.raises(ModulusError):
            Modulus(n=12, factors=((2, 1), (3, 1)))
        with pytest.raises(ModulusError):
            Modulus(n=16, factors=((4, 2),))

    def test_json_form(self):
        assert factorize(12).to_json() == [[2, 2], [3, 1]]
        assert factorize(12).prime_powers == (4, 3)


class TestTotient:

    @pytest.mark.parametrize("m, phi", [(1, 1), (9, 6), (12, 4), (7, 6), (30, 8)])
    def test_examples(self, m, phi):
        assert totient(m) == phi

    def test_matches_unit_count(self):
        for m in range(2, 300):
            assert totient(m) == sum(1 for k in range(m) if math.gcd(k, m) == 1)

    def test_accepts_modulus(self):
        assert totient(factorize(12)) == 4


class TestModPow:

    @pytest.mark.parametrize("base, n, exp, expected", [
        (3, 6, 1, 3),
        (2, 6, 2, 4),
        (5, 7, 6, 1),
        (4, 9, 0, 1),
    ])
    def test_examples(self, base, n, exp, expected):
        assert mod_pow(Residue(base, factorize(n)), exp) == expected

    def test_agrees_with_builtin(self):
        m = factorize(360)
        for b in range(0, 360, 7):
            for e in range(0, 40):
                assert mod_pow(Residue(b, m), e).value == pow(b, e, 360)

    def test_negative_exponent(self):
        with pytest.raises(ValueError):
            mod_pow(Residue(2, factorize(5)), -1)


class TestResidue:

    def test_arithmetic(self):
        m = factorize(6)
        a, b = Residue(5, m), Residue(4, m)
        assert a + b == 3
        assert a - b == 1
        assert b - a == 5
        assert a * b == 2
        assert -a == 1
        assert 1 - a == 2
        assert a ** 2 == 1

    def test_mismatch(self):
        with pytest.raises(ModulusMismatch):
            Residue(1, factorize(6)) + Residue(1, factorize(4))

    def test_inverse(self):
        m = factorize(9)
        assert Residue(2, m).inverse() == 5
        with pytest.raises(NonUnitError):
            Residue(3, m).inverse()

    def test_reduce(self):
        assert Residue(5, factorize(6)).reduce(factorize(3)) == 2
        with pytest.raises(ModulusMismatch):
            Residue(5, factorize(6)).reduce(factorize(4))

    def test_random_sweep_against_integers(self):
        check_residue_ops(np.random.default_rng(7), trials=500)

    @pytest.mark.slow
    def test_random_sweep_against_integers_large(self):
        check_residue_ops(np.random.default_rng(8), trials=10_000)


def check_residue_ops(rng, trials):
    for _ in range(trials):
        n = int(rng.integers(2, 10**6, endpoint=True))
        a, b = (int(x) for x in rng.integers(-10**9, 10**9, size=2))
        e = int(rng.integers(0, 64))
        m = factorize(n)
        ra, rb = m.residue(a), m.residue(b)
        assert (ra + rb).value == (a + b) % n
        assert (ra - rb).value == (a - b) % n
        assert (ra * rb).value == (a * b) % n
        assert (-ra).value == -a % n
        assert mod_pow(ra, e).value == pow(a, e, n)
        if math.gcd(a, n) == 1:
            assert (ra * ra.inverse()).value == 1


def check_crt_roundtrip(rng, trials):
    for _ in range(trials):
        n = int(rng.integers(2, 10**6, endpoint=True))
        x = int(rng.integers(0, n))
        m = factorize(n)
        assert crt_combine(m, [x % q for q in m.prime_powers]).value == x


class TestCRT:

    @pytest.mark.parametrize("n, residues, expected", [
        (6, [0, 1], 4),
        (12, [1, 1], 1),
        (30, [1, 0, 0], 15),
    ])
    def test_examples(self, n, residues, expected):
        assert crt_combine(factorize(n), residues) == expected

    def test_roundtrip(self):
        for n in range(2, 400):
            m = factorize(n)
            for x in range(0, n, max(1, n // 17)):
                assert crt_combine(m, [x % q for q in m.prime_powers]).value == x

    def test_random_roundtrip(self):
        check_crt_roundtrip(np.random.default_rng(5), trials=500)

    @pytest.mark.slow
    def test_random_roundtrip_large(self):
        check_crt_roundtrip(np.random.default_rng(6), trials=10_000)

    def test_length_mismatch(self):
        with pytest.raises(ModulusError):
            crt_combine(factorize(6), [1])


class TestIdempotentsOfZn:

    @pytest.mark.parametrize("n, expected", [(8, [0, 1]), (6, [0, 1, 3, 4])])
    def test_examples(self, n, expected):
        assert [r.value for r in idempotents_of_zn(factorize(n))] == expected

    def test_count_thirty(self):
        assert len(idempotents_of_zn(factorize(30))) == 8

    def test_matches_brute_force(self):
        for n in range(2, 501):
            m = factorize(n)
            brute = [x for x in range(n) if x * x % n == x]
            found = [r.value for r in idempotents_of_zn(m)]
            assert found == brute
            assert len(found) == 2 ** m.omega


class TestCoprimeSplit:

    def test_all_splits_count_and_order(self):
        splits = all_splits(factorize(30))
        assert len(splits) == 27
        assert splits[0].roles == (Role.P, Role.P, Role.P)
        assert splits[1].roles == (Role.P, Role.P, Role.Q)
        assert splits[-1].roles == (Role.R, Role.R, Role.R)
        assert len({s for s in splits}) == 27

    def test_parts(self):
        split = CoprimeSplit.from_roles(factorize(60), {4: Role.Q, 3: Role.P, 5: Role.R})
        assert (split.P, split.Q, split.R) == (3, 4, 5)
        assert split.case == "i"
        assert split.part_modulus(Role.Q).n == 4
        assert split.role_map() == {4: Role.Q, 3: Role.P, 5: Role.R}

    @pytest.mark.parametrize("roles, case", [
        ({2: Role.P, 3: Role.Q}, "ii"),
        ({2: Role.P, 3: Role.R}, "iii"),
        ({2: Role.Q, 3: Role.R}, "iv"),
        ({2: Role.P, 3: Role.P}, "v"),
        ({2: Role.Q, 3: Role.Q}, "vi"),
        ({2: Role.R, 3: Role.R}, "vii"),
    ])
    def test_cases(self, roles, case):
        assert CoprimeSplit.from_roles(factorize(6), roles).case == case

    def test_missing_role(self):
        with pytest.raises(ModulusError):
            CoprimeSplit.from_roles(factorize(6), {2: Role.P})
        with pytest.raises(ModulusError):
            CoprimeSplit(modulus=factorize(6), roles=(Role.P,))

    def test_euler_fermat_on_every_split(self):
        """P^phi(Q) = 1 mod Q for every split of every n <= 200 with P, Q > 1"""
        for n in range(2, 201):
            for split in all_splits(factorize(n)):
                P, Q = split.P, split.Q
                if P > 1 and Q > 1:
                    assert mod_pow(factorize(n).residue(P), totient(Q)).value % Q == 1
                    assert math.gcd(P, Q) == 1
