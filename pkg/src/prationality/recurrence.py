"""Third-order recurrence screen for unit congruences.

From the minimal polynomial x^3 - a2 x^2 - a1 x - a0 of a cubic fundamental
unit, the sequence F_{n+3} = a2 F_{n+2} + a1 F_{n+1} + a0 F_n with
F0 = F1 = 0, F2 = 1 is evaluated at the index matching the splitting type of
p (p-1, p^2-1 or p^3-1) modulo p^2.  A nonzero value implies the existence
of a witness prime for the unit-congruence test; the implication is one
directional and cross-checked against the direct evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import InvariantViolation
from .numberfield import FieldElement, NumberField, split_prime
from .ring import discriminant, poly
from . import torsion as torsion_mod

SPLIT_COMPLETELY = "split-completely"
MIXED_1_2 = "1+2"
INERT = "inert"


@dataclass(frozen=True)
class RecurrenceSpec:
    """Coefficients of x^3 - a2 x^2 - a1 x - a0; initial terms are fixed."""

    a2: int
    a1: int
    a0: int

    @property
    def companion_poly(self) -> tuple[int, ...]:
        return poly((-self.a0, -self.a1, -self.a2, 1))


@dataclass(frozen=True)
class ScreenResult:
    index: int
    value: int
    nonzero: bool
    implied_witness: bool


@dataclass(frozen=True)
class ConsistencyReport:
    p: int
    splitting: str
    screen_nonzero: bool
    witness_exists: bool
    violation: bool


def _mat_mul(A, B, m):
    return tuple(
        tuple(
            sum(A[i][k] * B[k][j] for k in range(3)) % m for j in range(3)
        )
        for i in range(3)
    )


def f_index_mod(spec: RecurrenceSpec, n: int, modulus: int) -> int:
    """F_n mod modulus by companion-matrix exponentiation."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    if modulus <= 1:
        raise ValueError("modulus must exceed 1")
    if n < 3:
        return (0, 0, 1)[n] % modulus
    M = (
        (0, 1, 0),
        (0, 0, 1),
        (spec.a0 % modulus, spec.a1 % modulus, spec.a2 % modulus),
    )
    R = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    e = n
    while e:
        if e & 1:
            R = _mat_mul(R, M, modulus)
        M = _mat_mul(M, M, modulus)
        e >>= 1
    # (F_n, F_{n+1}, F_{n+2}) = M^n (F_0, F_1, F_2)
    return R[0][2] % modulus


def splitting_type(factors) -> str:
    shapes = sorted((pf.e, pf.f) for pf in factors)
    if shapes == [(1, 1), (1, 1), (1, 1)]:
        return SPLIT_COMPLETELY
    if shapes == [(1, 1), (1, 2)]:
        return MIXED_1_2
    if shapes == [(1, 3)]:
        return INERT
    raise ValueError(f"unramified cubic splitting expected, got {shapes}")


def screen(spec: RecurrenceSpec, p: int, splitting: str) -> ScreenResult:
    """Evaluate the case-appropriate F index mod p^2."""
    if p == 2:
        raise ValueError("p must be odd")
    d = discriminant(spec.companion_poly)
    if d % p == 0:
        raise ValueError("p divides the discriminant of the companion polynomial")
    index = {
        SPLIT_COMPLETELY: p - 1,
        MIXED_1_2: p * p - 1,
        INERT: p**3 - 1,
    }[splitting]
    value = f_index_mod(spec, index, p * p)
    return ScreenResult(index, value, value != 0, value != 0)


def minimal_poly_spec(K: NumberField, unit: FieldElement) -> RecurrenceSpec:
    """RecurrenceSpec from the characteristic polynomial of multiplication by
    the unit; rejects units generating a proper subfield."""
    if K.n != 3:
        raise ValueError("recurrence screen is for cubic fields")
    cols = K.mul_matrix(unit)
    den = unit.den
    a = [[Fraction(cols[j][i], den) for j in range(3)] for i in range(3)]
    # char poly of 3x3: t^3 - tr t^2 + s2 t - det
    tr = a[0][0] + a[1][1] + a[2][2]
    s2 = (
        a[0][0] * a[1][1] - a[0][1] * a[1][0]
        + a[0][0] * a[2][2] - a[0][2] * a[2][0]
        + a[1][1] * a[2][2] - a[1][2] * a[2][1]
    )
    det = (
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    )
    if any(x.denominator != 1 for x in (tr, s2, det)):
        raise ValueError("unit is not integral")
    spec = RecurrenceSpec(a2=int(tr), a1=-int(s2), a0=int(det))
    f = spec.companion_poly
    if discriminant(f) == 0:
        raise ValueError("unit generates a proper subfield (degree drop)")
    # sanity: the unit satisfies its characteristic polynomial
    acc = K.zero()
    powv = K.one()
    for c in f:
        if c:
            acc = K.add(acc, FieldElement(tuple(c * x for x in powv.coords), powv.den))
        powv = K.mul(powv, unit)
    if not K.equals(acc, K.zero()):
        raise InvariantViolation("unit does not satisfy its characteristic polynomial")
    return spec


def cross_check(K: NumberField, unit: FieldElement, spec: RecurrenceSpec,
                p: int) -> ConsistencyReport:
    """Assert the screen's implication against the direct congruence test."""
    expected = minimal_poly_spec(K, unit)
    if expected != spec:
        raise ValueError("spec does not match the minimal polynomial of the unit")
    factors = split_prime(K, p)
    stype = splitting_type(factors)
    sres = screen(spec, p, stype)
    rep = torsion_mod.condition2(K, p, unit, factors)
    violation = sres.nonzero and not rep.holds
    return ConsistencyReport(p, stype, sres.nonzero, rep.holds, violation)
