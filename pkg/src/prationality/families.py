"""Built-in families: the pure cubic fields Q(cbrt(p^3-1)) scanned at their
own prime, and the biquadratic GGC checker driven by square divisors of
p -+ 1, reduced-form class numbers of imaginary quadratic fields, the
analytic class number bound, and Kuroda's unit-index relation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvariantViolation
from .numberfield import FieldElement, NumberField, make_field, split_prime
from . import torsion as torsion_mod

EULER_GAMMA = 0.5772156649015329

R1 = "split-completely"
R2 = "1+2"

TRIAL_DIVISION_CAP = 10**7


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(math.isqrt(n)) + 1):
        if sieve[i]:
            sieve[i * i :: i] = b"\x00" * len(range(i * i, n + 1, i))
    return [i for i in range(2, n + 1) if sieve[i]]


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization; refuses beyond the desk-scale cap."""
    if n <= 0:
        raise ValueError("positive integer required")
    if n > TRIAL_DIVISION_CAP**2:
        raise ValueError("input exceeds the trial-division cap")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def squarefree_part(n: int) -> int:
    """Largest squarefree divisor with the sign of n."""
    if n == 0:
        raise ValueError("zero has no squarefree part")
    sign = -1 if n < 0 else 1
    out = 1
    for q, e in factorize(abs(n)).items():
        if e % 2:
            out *= q
    return sign * out


# ---------------------------------------------------------------------------
# pure cubic family


@dataclass(frozen=True)
class PureCubicInstance:
    p: int
    field: NumberField
    unit: FieldElement  # eps = p^2 + p*alpha + alpha^2 = 1/(p - alpha)

    @classmethod
    def build(cls, p: int) -> "PureCubicInstance":
        if p < 5:
            raise ValueError("family starts at p = 5")
        K = make_field((1 - p**3, 0, 0, 1))
        eps = FieldElement((p * p, p, 1))
        # validate eps * (p - alpha) = 1
        pm = FieldElement((p, -1, 0))
        if not K.equals(K.mul(eps, pm), K.one()):
            raise InvariantViolation("unit identity eps*(p-alpha) = 1 failed")
        return cls(p, K, eps)


@dataclass(frozen=True)
class PureCubicResult:
    p: int
    splitting: str
    condition2_holds: bool
    h_flag: str  # "h-unknown" | "p|h" | "p coprime to h"


def pure_cubic_scan(pmin: int, pmax: int,
                    h_data: dict[int, int] | None = None) -> list[PureCubicResult]:
    """Evaluate condition (2) for Q(cbrt(p^3-1)) at p over a prime range.

    Class numbers are only reported when ingested through h_data.
    """
    if not (5 <= pmin <= pmax):
        raise ValueError("range must satisfy 5 <= pmin <= pmax")
    results = []
    for p in primes_up_to(pmax):
        if p < pmin:
            continue
        inst = PureCubicInstance.build(p)
        factors = split_prime(inst.field, p)
        shapes = sorted((pf.e, pf.f) for pf in factors)
        if shapes == [(1, 1), (1, 1), (1, 1)]:
            splitting = R1
            expected = 1
        elif shapes == [(1, 1), (1, 2)]:
            splitting = R2
            expected = 2
        else:
            raise InvariantViolation(f"unexpected splitting {shapes} at p={p}")
        if p % 3 != expected:
            raise InvariantViolation("splitting does not match p mod 3 law")
        rep = torsion_mod.condition2(inst.field, p, inst.unit, factors)
        if h_data and p in h_data:
            flag = "p|h" if h_data[p] % p == 0 else "p coprime to h"
        else:
            flag = "h-unknown"
        results.append(PureCubicResult(p, splitting, rep.holds, flag))
    return results


# ---------------------------------------------------------------------------
# GGC scanner


@dataclass(frozen=True)
class GgcCandidate:
    p: int
    n: int
    m: int
    threshold: float
    radicand: int | None = None
    hK2: int | None = None
    lemma_b_bound: float | None = None
    verdict: str | None = None  # "GgcHolds" | "Unknown"


def _largest_square_divisor_root(n: int) -> int:
    out = 1
    for q, e in factorize(n).items():
        out *= q ** (e // 2)
    return out


def lemma_a_scan(xmax: int, T: float) -> list[GgcCandidate]:
    """Primes p = 1 mod 4 up to xmax with square divisors n^2 | p-1,
    m^2 | p+1 and n, m beyond (log p)^T."""
    if xmax < 13:
        raise ValueError("xmax must be at least 13")
    out = []
    for p in primes_up_to(xmax):
        if p % 4 != 1:
            continue
        n = _largest_square_divisor_root(p - 1)
        m = _largest_square_divisor_root(p + 1)
        threshold = math.log(p) ** T
        if n > threshold and m > threshold:
            out.append(GgcCandidate(p, n, m, threshold))
    return out


def kronecker_symbol(a: int, n: int) -> int:
    """Kronecker symbol (a|n)."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    sign = 1
    if n < 0:
        n = -n
        if a < 0:
            sign = -sign
    t = 0
    while n % 2 == 0:
        n //= 2
        t += 1
    if t:
        if a % 2 == 0:
            return 0
        if t % 2 and a % 8 in (3, 5):
            sign = -sign
    a %= n
    # Jacobi symbol on odd n
    result = sign
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def fundamental_discriminant(radicand: int) -> int:
    """Discriminant of Q(sqrt(radicand)) for squarefree radicand."""
    if radicand in (0, 1):
        raise ValueError("radicand must define a quadratic field")
    if squarefree_part(radicand) != radicand:
        raise ValueError("radicand must be squarefree")
    return radicand if radicand % 4 == 1 else 4 * radicand


def imag_quadratic_class_number(radicand: int) -> int:
    """Class number of Q(sqrt(radicand)), radicand squarefree negative, by
    counting reduced primitive forms (a, b, c) of the field discriminant."""
    if radicand >= 0:
        raise ValueError("radicand must be negative")
    D = fundamental_discriminant(radicand)
    count = 0
    # enumeration bound: the reduction conditions force 3a^2 <= |D|
    amax = math.isqrt(-D // 3) + 1
    for a in range(1, amax + 1):
        for b in range(-a, a + 1):
            if (b - D) % 2 != 0:
                continue
            num = b * b - D
            if num % (4 * a) != 0:
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if math.gcd(math.gcd(a, abs(b)), c) != 1:
                continue
            if (abs(b) == a or a == c) and b < 0:
                continue
            count += 1
    return count


def dirichlet_class_number(D: int) -> int:
    """Independent oracle: h(D) = -(w / 2|D|) sum chi_D(k) k for D < -4."""
    if D >= 0:
        raise ValueError("negative discriminant required")
    if D == -3:
        return 1
    if D == -4:
        return 1
    s = sum(kronecker_symbol(D, k) * k for k in range(1, abs(D)))
    h = Fraction(-2 * s, 2 * abs(D))
    if h.denominator != 1 or h <= 0:
        raise InvariantViolation(f"Dirichlet sum failed for D={D}")
    return int(h)


def lemma_b_bound(dK: int, omega: int) -> float:
    """(omega sqrt(dK) / 4 pi) (log dK + 2 + gamma - log pi), dK = |disc|."""
    if dK < 3:
        raise ValueError("dK must be at least 3")
    return (
        omega
        * math.sqrt(dK)
        / (4 * math.pi)
        * (math.log(dK) + 2 + EULER_GAMMA - math.log(math.pi))
    )


@dataclass(frozen=True)
class KurodaResult:
    q: Fraction
    valid: bool


def kuroda_check(h1: int, h2: int, h3: int, hL: int) -> KurodaResult:
    """Unit index q = 2 hL / (h1 h2 h3); flags violation unless q in {1, 2}."""
    if min(h1, h2, h3, hL) <= 0:
        raise ValueError("class numbers must be positive")
    q = Fraction(2 * hL, h1 * h2 * h3)
    return KurodaResult(q, q in (1, 2))


def _roots_of_unity_count(radicand: int) -> int:
    if radicand == -1:
        return 4
    if radicand == -3:
        return 6
    return 2


def ggc_scan(xmax: int, T: float) -> list[GgcCandidate]:
    """Lemma-A primes decorated with h(K2) = h(Q(sqrt(1-p^2))) and the
    resulting GGC verdict: GgcHolds iff p does not divide h(K2)."""
    out = []
    for cand in lemma_a_scan(xmax, T):
        p = cand.p
        radicand = squarefree_part(1 - p * p)
        h = imag_quadratic_class_number(radicand)
        D = fundamental_discriminant(radicand)
        bound = lemma_b_bound(abs(D), _roots_of_unity_count(radicand))
        if h > bound:
            raise InvariantViolation(f"class number exceeds the Lemma B bound at p={p}")
        verdict = "GgcHolds" if h % p != 0 else "Unknown"
        out.append(
            GgcCandidate(p, cand.n, cand.m, cand.threshold, radicand, h, bound, verdict)
        )
    return out
