import random
from fractions import Fraction

import pytest

from prationality.errors import SplittingUndetermined
from prationality.numberfield import (
    FieldElement,
    dedekind_p_maximal,
    ideal_contains,
    ideal_from_two_generators,
    ideal_multiply,
    ideal_pow,
    identity_ideal,
    make_field,
    principal_ideal,
    split_prime,
)
from prationality.ring import ModPoly, discriminant, poly

EX62 = (27, -4, 0, 1)  # x^3 - 4x + 27
EX63 = (3, 0, -2, 0, 1)  # x^4 - 2x^2 + 3


def test_make_field_signatures():
    K = make_field(EX62)
    assert K.n == 3 and K.signature == (1, 1) and K.criterion_eligible
    L = make_field(EX63)
    assert L.n == 4 and L.signature == (0, 2) and L.criterion_eligible
    M = make_field((-2, 0, 1))  # x^2 - 2: data carrier only
    assert M.n == 2 and not M.criterion_eligible


def test_make_field_rejects_reducible():
    with pytest.raises(ValueError):
        make_field((-1, 0, 0, 1))  # x^3 - 1 has root 1
    with pytest.raises(ValueError):
        make_field((1, 2, 3, 2, 1))  # (x^2+x+1)^2
    with pytest.raises(ValueError):
        make_field((1, 0, 2, 0, 1))  # (x^2+1)^2 ... not squarefree
    with pytest.raises(ValueError):
        make_field((4, 0, 5, 0, 1))  # (x^2+1)(x^2+4)


def test_make_field_basis_validation():
    with pytest.raises(ValueError):
        make_field(EX62, basis=[[0, 1, 0], [1, 0, 0], [0, 0, 1]])  # 1 not first
    with pytest.raises(ValueError):
        make_field(EX62, basis=[[1, 0, 0], [0, 1, 0], [0, 2, 2]])  # det 2, not order


def test_mul_reduction_by_defining_relation():
    K = make_field(EX62)
    alpha = FieldElement((0, 1, 0))
    alpha2 = FieldElement((0, 0, 1))
    prod = K.mul(alpha, alpha2)
    assert prod.coords == (-27, 4, 0) and prod.den == 1
    assert K.equals(K.mul(K.one(), alpha), alpha)


def test_mul_paper_g_squared():
    # g = -835 + 265a - 77(a^2-3) = -604 + 265a - 77a^2
    K = make_field(EX62)
    g = FieldElement((-604, 265, -77))
    g2 = K.mul(g, g)
    # 2027557 - 643443a + 186957(a^2-3) = 1466686 - 643443a + 186957a^2
    assert g2.coords == (2027557 - 3 * 186957, -643443, 186957)


def test_norm_examples():
    K = make_field(EX62)
    eps = FieldElement((-3280, -3462, -729))
    assert abs(K.norm(eps)) == 1
    for p in (5, 7, 11):
        Kp = make_field((1 - p**3, 0, 0, 1))
        assert Kp.norm(FieldElement((0, 1, 0, 0)[: Kp.n])) == p**3 - 1
        assert Kp.norm(Kp.from_int(p)) == p**3


def test_norm_is_multiplicative():
    rng = random.Random(5150)
    K = make_field(EX63)
    for _ in range(500):
        a = FieldElement(tuple(rng.randint(-9, 9) for _ in range(4)))
        b = FieldElement(tuple(rng.randint(-9, 9) for _ in range(4)))
        assert K.norm(K.mul(a, b)) == K.norm(a) * K.norm(b)


def test_dedekind_examples():
    assert dedekind_p_maximal(make_field(EX62), 3) is True
    assert dedekind_p_maximal(make_field(EX63), 5) is True
    for p in (3, 5, 7, 11):
        assert dedekind_p_maximal((0, 0, 1) if False else (-(p**2), 0, 1), p) is False


def test_split_prime_examples():
    K = make_field(EX62)
    facs = split_prime(K, 3)
    assert sorted((pf.e, pf.f) for pf in facs) == [(1, 1), (1, 1), (1, 1)]
    assert {pf.generator.coeffs for pf in facs} == {(0, 1), (1, 1), (2, 1)}
    facs2 = split_prime(K, 2)
    assert sorted((pf.e, pf.f) for pf in facs2) == [(1, 1), (1, 2)]
    gens = {pf.f: pf.generator.coeffs for pf in facs2}
    assert gens[1] == (1, 1)  # alpha + 1
    assert gens[2] == (1, 1, 1)  # alpha^2 + alpha + 1 = alpha^2 - alpha + 1 mod 2
    L = make_field(EX63)
    facs3 = split_prime(L, 5)
    assert [(pf.e, pf.f) for pf in facs3] == [(1, 4)]


def test_split_prime_totally_ramified_via_dedekind():
    # x^4-x^3+x^2-x+1: disc(f) = 125, Z[alpha] maximal, 5 totally ramified
    K = make_field((1, -1, 1, -1, 1))
    assert discriminant(K.poly) % 5 == 0
    facs = split_prime(K, 5)
    assert [(pf.e, pf.f) for pf in facs] == [(4, 1)]


def test_split_prime_refuses_without_certificate():
    # x^2 - p^2 is reducible so use a genuine index-divisible case:
    # f = x^3 - x^2 - 2x - 8 has index 2 at p = 2 (classical Dedekind example)
    K = make_field((-8, -2, -1, 1))
    assert K.poly_disc % 2 == 0
    assert dedekind_p_maximal(K, 2) is False
    with pytest.raises(SplittingUndetermined):
        split_prime(K, 2)


def test_ef_sum_fuzz():
    rng = random.Random(314159)
    checked = 0
    while checked < 1000:
        n = rng.choice([3, 4])
        f = tuple(rng.randint(-30, 30) for _ in range(n)) + (1,)
        try:
            K = make_field(f)
        except ValueError:
            continue
        p = rng.choice([2, 3, 5, 7, 11, 13, 17, 101, 499])
        if K.poly_disc % p == 0:
            continue
        facs = split_prime(K, p)
        assert sum(pf.e * pf.f for pf in facs) == K.n
        checked += 1


def test_ideal_hnf_examples():
    K = make_field(EX62)
    P1 = ideal_from_two_generators(K, 3, ModPoly((0, 1), 3))
    assert P1.norm == 3
    Q = ideal_from_two_generators(K, 2, ModPoly((1, 1, 1), 2))
    assert Q.norm == 4
    L = make_field(EX63)
    inert = split_prime(L, 5)[0]
    P5 = ideal_from_two_generators(L, 5, inert.generator)
    assert P5.norm == 5**4
    assert P5.rows == tuple(
        tuple(5 * int(i == j) for j in range(4)) for i in range(4)
    )


def test_ideal_multiply_examples():
    K = make_field(EX62)
    facs = split_prime(K, 3)
    ideals = [ideal_from_two_generators(K, 3, pf.generator) for pf in facs]
    prod = ideals[0]
    for I in ideals[1:]:
        prod = ideal_multiply(K, prod, I)
    assert prod.rows == tuple(
        tuple(3 * int(i == j) for j in range(3)) for i in range(3)
    )
    # norm multiplicativity on a degree-1 prime
    sq = ideal_multiply(K, ideals[0], ideals[0])
    assert sq.norm == 9
    # A * O_K = A
    assert ideal_multiply(K, ideals[0], identity_ideal(K)).rows == ideals[0].rows


def test_ideal_pow_norm():
    K = make_field(EX62)
    pf = split_prime(K, 2)[1]  # the f = 2 factor
    A = ideal_from_two_generators(K, 2, pf.generator)
    for k in range(4):
        assert ideal_pow(K, A, k).norm == 4**k


def test_ideal_contains_examples():
    K = make_field(EX62)
    pf = split_prime(K, 3)[0]
    P = ideal_from_two_generators(K, 3, pf.generator)
    assert ideal_contains(K, P, K.from_int(3))
    assert not ideal_contains(K, P, K.one())
    three_ok = principal_ideal(K, K.from_int(3))
    # alpha + 2 is not in 3 O_k
    assert not ideal_contains(K, three_ok, FieldElement((2, 1, 0)))


def test_pow_mod_examples():
    L = make_field(EX63)
    eps = FieldElement((-2, -1, 1, 1))
    r = L.pow_mod(eps, 5**4 - 1, 25)
    assert r.coords == (1, 5, 0, 15)
    K = make_field(EX62)
    eps62 = FieldElement((-3280, -3462, -729))
    r2 = K.pow_mod(eps62, 2, 9)
    assert r2.coords == (7, 3, 0)  # 1 + 3(alpha + 2)
    a = FieldElement((2, 5, 1))
    assert K.pow_mod(a, 1, 49).coords == (2, 5, 1)


def test_pow_mod_agrees_with_repeated_mul():
    rng = random.Random(2718)
    K = make_field(EX62)
    L = make_field(EX63)
    for _ in range(200):
        F = rng.choice([K, L])
        a = FieldElement(tuple(rng.randint(-6, 6) for _ in range(F.n)))
        e = rng.randint(1, 9)
        m = rng.choice([9, 25, 49, 121])
        acc = F.one()
        for _ in range(e):
            acc = F.mul(acc, a)
        expected = tuple(c % m for c in acc.coords)
        assert F.pow_mod(a, e, m).coords == expected


def test_element_from_power_coords_roundtrip():
    K = make_field(EX63)
    x = K.element_from_power_coords((1, 2, 3, 4), 1)
    assert x.coords == (1, 2, 3, 4)
    back = K.to_power_coords(x)
    assert back == (Fraction(1), Fraction(2), Fraction(3), Fraction(4))


def test_nonpower_basis_order():
    # Z[alpha] for x^3 - x^2 - 2x - 8 is not 2-maximal; the maximal order
    # contains (alpha^2 + alpha)/2 (Dedekind's classical example).
    f = (-8, -2, -1, 1)
    basis = [
        [1, 0, 0],
        [0, 1, 0],
        [0, Fraction(1, 2), Fraction(1, 2)],
    ]
    K = make_field(f, basis=basis)
    assert K.index == 2
    assert K.field_disc == discriminant(poly(f)) // 4
    # arithmetic over the larger order stays exact:
    # N((a^2+a)/2) = N(a)N(a+1)/8 = 8*8/8 = 8
    theta = FieldElement((0, 0, 1))
    assert K.norm(theta) == 8
    # p = 2 divides both disc(f) and the basis denominator: refuse
    with pytest.raises(SplittingUndetermined):
        split_prime(K, 2)
    # odd primes coprime to disc(f) still split fine over this basis
    facs = split_prime(K, 5)
    assert sum(pf.e * pf.f for pf in facs) == 3
