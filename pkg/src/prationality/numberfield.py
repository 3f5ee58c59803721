"""Number-field structure over an integral basis.

A field K = Q[x]/(f) is described by its monic defining polynomial and a basis
of an order given as rational rows over the power basis (identity rows for
Z[alpha]).  Elements carry integer coordinates over that basis plus an optional
denominator.  The module provides exact multiplication through precomputed
integer structure constants, norms, Dedekind's p-maximality criterion, prime
splitting read off from factoring f mod p, and ideal arithmetic in Hermite
normal form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import SplittingUndetermined
from . import ring
from .ring import ModPoly


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def _mat_inv(rows):
    """Inverse of a square Fraction matrix by Gauss-Jordan."""
    n = len(rows)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ValueError("basis matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def _det_bareiss(rows) -> int:
    """Exact integer determinant by fraction-free elimination."""
    n = len(rows)
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _det_fraction(rows) -> Fraction:
    n = len(rows)
    a = [[Fraction(x) for x in row] for row in rows]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            if a[r][col] != 0:
                factor = a[r][col] * inv
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return det


@dataclass(frozen=True)
class FieldElement:
    """coords over the field basis divided by a positive denominator."""

    coords: tuple[int, ...]
    den: int = 1

    def __post_init__(self):
        if self.den <= 0:
            raise ValueError("denominator must be positive")

    @property
    def is_integral(self) -> bool:
        return self.den == 1

    def normalized(self) -> "FieldElement":
        g = gcd(ring.content(self.coords), self.den)
        if g <= 1:
            return self
        return FieldElement(tuple(c // g for c in self.coords), self.den // g)


@dataclass(frozen=True)
class PrimeFactor:
    """A prime ideal (p, g(alpha)) with ramification index e and residue
    degree f; label is its 1-based position in the deterministic ordering."""

    p: int
    generator: ModPoly
    e: int
    f: int
    label: int


@dataclass(frozen=True)
class IdealHNF:
    """Upper-triangular column basis of an ideal lattice over the field basis;
    the norm is the product of the diagonal."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def norm(self) -> int:
        return _prod(self.rows[i][i] for i in range(self.n))

    def columns(self):
        return [tuple(self.rows[i][j] for i in range(self.n)) for j in range(self.n)]


def _prod(it):
    out = 1
    for x in it:
        out *= x
    return out


class NumberField:
    """Immutable field/order data; construct via make_field."""

    def __init__(self, poly_coeffs, basis_rows):
        f = ring.poly(poly_coeffs)
        n = ring.degree(f)
        self.poly = f
        self.n = n
        self.poly_disc = ring.discriminant(f)
        r1 = ring.count_real_roots(f)
        self.signature = (r1, (n - r1) // 2)
        self.criterion_eligible = (n, *self.signature) in ((3, 1, 1), (4, 0, 2))
        self.basis = tuple(tuple(Fraction(x) for x in row) for row in basis_rows)
        if list(self.basis[0]) != [Fraction(1)] + [Fraction(0)] * (n - 1):
            raise ValueError("first basis element must be 1")
        self.basis_den = lcm(*[x.denominator for row in self.basis for x in row], 1)
        det = _det_fraction(self.basis)
        if det == 0:
            raise ValueError("basis matrix is singular")
        inv_det = 1 / abs(det)
        if inv_det.denominator != 1:
            raise ValueError("basis does not contain the power basis lattice")
        self.index = int(inv_det)
        if self.poly_disc % (self.index**2) != 0:
            raise ValueError("basis determinant incompatible with disc(f)")
        self.field_disc = self.poly_disc // self.index**2
        self._basis_inv = _mat_inv(self.basis)
        self._alpha_powers = self._power_table()
        self._structure = self._structure_constants()
        self.is_power_basis = all(
            self.basis[i][j] == (1 if i == j else 0)
            for i in range(n)
            for j in range(n)
        )

    # -- construction helpers -------------------------------------------------

    def _power_table(self):
        """alpha^m mod f for m < 2n-1, as integer power-basis vectors."""
        n = self.n
        table = []
        cur = [0] * n
        cur[0] = 1
        for _ in range(2 * n - 1):
            table.append(tuple(cur))
            cur = [0] + cur[:-1] if cur[-1] == 0 else self._shift_reduce(cur)
        return table

    def _shift_reduce(self, cur):
        top = cur[-1]
        shifted = [0] + cur[:-1]
        return [shifted[i] - top * self.poly[i] for i in range(self.n)]

    def _structure_constants(self):
        """T[i][j] = integer coords of b_i * b_j over the basis."""
        n = self.n
        table = []
        for i in range(n):
            row = []
            for j in range(n):
                prodpow = [Fraction(0)] * (2 * n - 1)
                for a in range(n):
                    if self.basis[i][a] == 0:
                        continue
                    for b in range(n):
                        if self.basis[j][b] == 0:
                            continue
                        prodpow[a + b] += self.basis[i][a] * self.basis[j][b]
                vec = [Fraction(0)] * n
                for m, c in enumerate(prodpow):
                    if c:
                        for t in range(n):
                            vec[t] += c * self._alpha_powers[m][t]
                coords = self._power_vec_to_coords(vec)
                if any(c.denominator != 1 for c in coords):
                    raise ValueError("basis rows do not span an order")
                row.append(tuple(int(c) for c in coords))
            table.append(row)
        return table

    def _power_vec_to_coords(self, vec):
        n = self.n
        return [
            sum(Fraction(vec[i]) * self._basis_inv[i][j] for i in range(n))
            for j in range(n)
        ]

    # -- elements -------------------------------------------------------------

    def zero(self) -> FieldElement:
        return FieldElement((0,) * self.n)

    def one(self) -> FieldElement:
        return FieldElement((1,) + (0,) * (self.n - 1))

    def from_int(self, c: int) -> FieldElement:
        return FieldElement((c,) + (0,) * (self.n - 1))

    def element_from_power_coords(self, coeffs, den: int = 1) -> FieldElement:
        """Element given by power-basis coordinates / den, as basis coords."""
        vec = list(coeffs) + [0] * (self.n - len(list(coeffs)))
        if len(vec) > self.n:
            raise ValueError("too many coordinates")
        coords = self._power_vec_to_coords([Fraction(v, den) for v in vec])
        d = lcm(*[c.denominator for c in coords], 1)
        return FieldElement(tuple(int(c * d) for c in coords), d).normalized()

    def to_power_coords(self, x: FieldElement) -> tuple[Fraction, ...]:
        n = self.n
        return tuple(
            sum(Fraction(x.coords[i], x.den) * self.basis[i][j] for i in range(n))
            for j in range(n)
        )

    def add(self, a: FieldElement, b: FieldElement) -> FieldElement:
        d = lcm(a.den, b.den)
        sa, sb = d // a.den, d // b.den
        return FieldElement(
            tuple(x * sa + y * sb for x, y in zip(a.coords, b.coords)), d
        ).normalized()

    def sub(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return self.add(a, FieldElement(tuple(-c for c in b.coords), b.den))

    def mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        n = self.n
        out = [0] * n
        T = self._structure
        for i, x in enumerate(a.coords):
            if x == 0:
                continue
            for j, y in enumerate(b.coords):
                if y == 0:
                    continue
                tij = T[i][j]
                c = x * y
                for k in range(n):
                    if tij[k]:
                        out[k] += c * tij[k]
        return FieldElement(tuple(out), a.den * b.den).normalized()

    def mul_mod(self, a, b, m: int):
        """Product of integral coordinate tuples reduced mod m."""
        n = self.n
        out = [0] * n
        T = self._structure
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                if y == 0:
                    continue
                tij = T[i][j]
                c = x * y
                for k in range(n):
                    if tij[k]:
                        out[k] = (out[k] + c * tij[k]) % m
        return tuple(out)

    def pow_mod(self, a: FieldElement, exponent: int, modulus: int) -> FieldElement:
        """a^exponent with coordinates reduced mod modulus after every step.

        The element may carry a denominator coprime to the modulus; it is
        folded in by modular inversion.
        """
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        if exponent == 0:
            if all(c == 0 for c in a.coords):
                raise ValueError("0^0 is undefined")
            return self.one()
        if gcd(a.den, modulus) != 1:
            raise ValueError("denominator not invertible modulo the modulus")
        dinv = pow(a.den, -1, modulus)
        base = tuple(c * dinv % modulus for c in a.coords)
        result = None
        e = exponent
        while e:
            if e & 1:
                result = base if result is None else self.mul_mod(result, base, modulus)
            e >>= 1
            if e:
                base = self.mul_mod(base, base, modulus)
        return FieldElement(result)

    def mul_matrix(self, a: FieldElement):
        """Columns are the coords of a * b_j (denominator kept aside)."""
        n = self.n
        T = self._structure
        cols = []
        for j in range(n):
            col = [0] * n
            for i, x in enumerate(a.coords):
                if x == 0:
                    continue
                tij = T[i][j]
                for k in range(n):
                    col[k] += x * tij[k]
            cols.append(col)
        return cols

    def norm(self, a: FieldElement) -> Fraction:
        cols = self.mul_matrix(a)
        if a.den == 1:
            return Fraction(_det_bareiss([[cols[j][i] for j in range(self.n)]
                                          for i in range(self.n)]))
        rows = [[Fraction(cols[j][i]) for j in range(self.n)] for i in range(self.n)]
        return _det_fraction(rows) / Fraction(a.den) ** self.n

    def equals(self, a: FieldElement, b: FieldElement) -> bool:
        a, b = a.normalized(), b.normalized()
        return a.coords == b.coords and a.den == b.den


def make_field(poly_coeffs, basis=None) -> NumberField:
    """Build a NumberField; degree-3/4 monic irreducible polynomials are
    criterion-eligible, other shapes are accepted as data carriers but
    flagged via criterion_eligible = False."""
    f = ring.poly(poly_coeffs)
    n = ring.degree(f)
    if n < 2:
        raise ValueError("defining polynomial must have degree >= 2")
    if not ring.is_monic(f):
        raise ValueError("defining polynomial must be monic")
    if ring.discriminant(f) == 0:
        raise ValueError("defining polynomial must be squarefree")
    if _has_rational_root(f):
        raise ValueError("defining polynomial is reducible (rational root)")
    if n == 4 and _has_quadratic_factor(f):
        raise ValueError("defining polynomial is reducible (quadratic factor)")
    if basis is None:
        basis = [[int(i == j) for j in range(n)] for i in range(n)]
    return NumberField(f, basis)


def _has_rational_root(f) -> bool:
    # monic integer polynomial: rational roots are integer divisors of f(0)
    c0 = f[0]
    if c0 == 0:
        return True
    divs = set()
    d = 1
    while d * d <= abs(c0):
        if c0 % d == 0:
            divs.update({d, -d, abs(c0) // d, -(abs(c0) // d)})
        d += 1
    return any(ring.poly_eval(f, r) == 0 for r in divs)


def _has_quadratic_factor(f) -> bool:
    # monic quartic: f = (x^2+ax+b)(x^2+cx+d) over Z by Gauss's lemma
    c0, c1, c2, c3 = f[0], f[1], f[2], f[3]
    if c0 == 0:
        return True
    bs = set()
    d = 1
    while d * d <= abs(c0):
        if c0 % d == 0:
            bs.update({d, -d, c0 // d, -(c0 // d)})
        d += 1
    for b in bs:
        if b == 0 or c0 % b != 0:
            continue
        dd = c0 // b
        # a + c = c3, ac = c2 - b - d, ad + bc = c1
        s = c3
        prod = c2 - b - dd
        disc = s * s - 4 * prod
        if disc < 0:
            continue
        r = _isqrt(disc)
        if r * r != disc:
            continue
        for a in {(s + r) // 2, (s - r) // 2}:
            c = s - a
            if a * c == prod and a * dd + b * c == c1:
                return True
    return False


def _isqrt(x: int) -> int:
    from math import isqrt

    return isqrt(x)


# ---------------------------------------------------------------------------
# Dedekind's criterion and prime splitting


def dedekind_p_maximal(field_or_poly, p: int) -> bool:
    """Dedekind's criterion: is Z[alpha] maximal at p?

    Accepts a NumberField over the power basis or a raw monic coefficient
    sequence (the latter is used for unit tests of the gcd formula itself).
    """
    if isinstance(field_or_poly, NumberField):
        if not field_or_poly.is_power_basis:
            raise ValueError("Dedekind criterion requires the power basis")
        f = field_or_poly.poly
    else:
        f = ring.poly(field_or_poly)
        if not ring.is_monic(f):
            raise ValueError("Dedekind criterion requires a monic polynomial")
    factors = ring.factor_mod_p(f, p)
    gbar = (1,)
    hbar = (1,)
    for fac, mult in factors:
        gbar = ring._mp_mul(gbar, fac.coeffs, p)
        for _ in range(mult - 1):
            hbar = ring._mp_mul(hbar, fac.coeffs, p)
    glift = ring.poly(gbar)
    hlift = ring.poly(hbar)
    diff = ring.poly_sub(f, ring.poly_mul(glift, hlift))
    tbar = ring.poly((c // p) % p for c in diff)
    assert all(c % p == 0 for c in diff), "f - g*h must vanish mod p"
    g1 = ring._mp_gcd(tbar, gbar, p)
    g2 = ring._mp_gcd(g1, hbar, p)
    return ring.degree(g2) == 0


def split_prime(K: NumberField, p: int) -> list[PrimeFactor]:
    """Prime ideals over p with (e, f), read off from factoring f mod p.

    Requires a certificate that p does not divide the index: p coprime to
    disc(f), or Dedekind p-maximality of the power basis, or an ingested
    basis whose common denominator is coprime to p.
    """
    if K.poly_disc % p != 0:
        certified = True
    elif K.is_power_basis:
        certified = dedekind_p_maximal(K, p)
    else:
        certified = K.basis_den % p != 0
    if not certified:
        raise SplittingUndetermined(
            f"p = {p} may divide the index; splitting undetermined"
        )
    factors = ring.factor_mod_p(K.poly, p)
    out = [
        PrimeFactor(p, fac, mult, fac.degree, i + 1)
        for i, (fac, mult) in enumerate(factors)
    ]
    assert sum(pf.e * pf.f for pf in out) == K.n
    return out


# ---------------------------------------------------------------------------
# ideals in Hermite normal form


def _hnf_from_columns(cols, n) -> IdealHNF:
    work = [list(c) for c in cols]
    out_cols = [None] * n
    for i in reversed(range(n)):
        pivot = None
        rest = []
        for c in work:
            if c[i] == 0:
                rest.append(c)
                continue
            if pivot is None:
                pivot = c
            else:
                a, b = pivot[i], c[i]
                g, s, t = _xgcd(a, b)
                u, v = a // g, b // g
                newp = [s * pivot[r] + t * c[r] for r in range(n)]
                newc = [u * c[r] - v * pivot[r] for r in range(n)]
                pivot = newp
                if any(newc):
                    rest.append(newc)
        if pivot is None:
            raise ValueError("columns do not span a full-rank lattice")
        if pivot[i] < 0:
            pivot = [-x for x in pivot]
        out_cols[i] = pivot
        work = rest
    # reduce off-diagonal entries of each row mod the diagonal; descending i
    # keeps already-reduced lower rows intact (column i only touches rows <= i)
    for i in reversed(range(n)):
        di = out_cols[i][i]
        for j in range(i + 1, n):
            q = out_cols[j][i] // di
            if q:
                out_cols[j] = [x - q * y for x, y in zip(out_cols[j], out_cols[i])]
    rows = tuple(tuple(out_cols[j][i] for j in range(n)) for i in range(n))
    return IdealHNF(rows)


def identity_ideal(K: NumberField) -> IdealHNF:
    return IdealHNF(tuple(tuple(int(i == j) for j in range(K.n)) for i in range(K.n)))


def ideal_from_two_elements(K: NumberField, a: FieldElement, b: FieldElement) -> IdealHNF:
    """HNF of the lattice spanned by {a*b_i} and {b*b_i}."""
    if not (a.is_integral and b.is_integral):
        raise ValueError("ideal generators must be integral")
    cols = [tuple(c) for c in K.mul_matrix(a)] + [tuple(c) for c in K.mul_matrix(b)]
    return _hnf_from_columns(cols, K.n)


def ideal_from_two_generators(K: NumberField, p: int, g: ModPoly) -> IdealHNF:
    """HNF of (p, g(alpha)) over the integral basis."""
    lifted = ring.poly(g.coeffs)
    if ring.degree(lifted) >= K.n:
        # reduce modulo the (monic) defining polynomial: f(alpha) = 0
        _, rem = ring.poly_divmod_exact(lifted, K.poly)
        lifted = ring.poly(int(c) for c in rem)
    gelt = K.element_from_power_coords(lifted)
    if not gelt.is_integral:
        raise ValueError("generator is not integral over the basis")
    return ideal_from_two_elements(K, K.from_int(p), gelt)


def principal_ideal(K: NumberField, x: FieldElement) -> IdealHNF:
    if not x.is_integral:
        raise ValueError("principal ideal requires an integral generator")
    cols = [tuple(c) for c in K.mul_matrix(x)]
    return _hnf_from_columns(cols, K.n)


def ideal_multiply(K: NumberField, A: IdealHNF, B: IdealHNF) -> IdealHNF:
    cols = [_mul_cols(K, u, v) for u in A.columns() for v in B.columns()]
    return _hnf_from_columns(cols, K.n)


def _mul_cols(K, u, v):
    n = K.n
    out = [0] * n
    T = K._structure
    for i, x in enumerate(u):
        if x == 0:
            continue
        for j, y in enumerate(v):
            if y == 0:
                continue
            tij = T[i][j]
            for k in range(n):
                if tij[k]:
                    out[k] += x * y * tij[k]
    return tuple(out)


def ideal_pow(K: NumberField, A: IdealHNF, e: int) -> IdealHNF:
    if e < 0:
        raise ValueError("negative ideal power")
    result = identity_ideal(K)
    for _ in range(e):
        result = ideal_multiply(K, result, A)
    return result


def ideal_contains(K: NumberField, A: IdealHNF, x: FieldElement) -> bool:
    """Membership by back-substitution against the HNF columns."""
    if not x.is_integral:
        raise ValueError("membership test requires an integral element")
    n = K.n
    rem = list(x.coords)
    cols = A.columns()
    for i in reversed(range(n)):
        d = A.rows[i][i]
        if rem[i] % d != 0:
            return False
        q = rem[i] // d
        if q:
            rem = [r - q * c for r, c in zip(rem, cols[i])]
    return True
