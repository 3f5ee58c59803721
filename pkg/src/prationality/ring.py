"""Exact integer and modular polynomial arithmetic.

Polynomials are tuples of arbitrary-precision integers, low degree first;
the zero polynomial is the empty tuple and has degree -1.  On top of that
convention this module provides resultant-based discriminants, deterministic
factorization over prime fields, Sturm real-root counting, Hensel lifting of
simple roots, and truncated p-adic logarithms of principal units.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


# ---------------------------------------------------------------------------
# integer polynomials


def poly(coeffs) -> tuple[int, ...]:
    """Normalize a coefficient sequence (low degree first) to a poly tuple."""
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(f) -> int:
    return len(f) - 1


def leading(f):
    if not f:
        raise ValueError("zero polynomial has no leading coefficient")
    return f[-1]


def is_monic(f) -> bool:
    return bool(f) and f[-1] == 1


def poly_add(f, g):
    n = max(len(f), len(g))
    return poly(
        (f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)
    )


def poly_neg(f):
    return tuple(-a for a in f)


def poly_sub(f, g):
    return poly_add(f, poly_neg(g))


def poly_mul(f, g):
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] += a * b
    return poly(out)


def poly_scale(f, c):
    return poly(a * c for a in f)


def poly_eval(f, x):
    acc = 0
    for a in reversed(f):
        acc = acc * x + a
    return acc


def derivative(f):
    return poly(i * a for i, a in enumerate(f) if i > 0)


def poly_divmod_exact(f, g):
    """Division in Q[x] returning Fraction polys; g must be nonzero."""
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    rem = [Fraction(a) for a in f]
    quo = [Fraction(0)] * max(len(f) - len(g) + 1, 1)
    lg = Fraction(g[-1])
    while len(rem) >= len(g) and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) < len(g):
            break
        c = rem[-1] / lg
        shift = len(rem) - len(g)
        quo[shift] = c
        for i, b in enumerate(g):
            rem[shift + i] -= c * b
        rem.pop()
    return poly(quo), poly(rem)


def resultant(f, g) -> int:
    """Resultant of integer polynomials via fraction-free Gaussian elimination
    on the Sylvester matrix (Bareiss)."""
    n, m = degree(f), degree(g)
    if n < 0 or m < 0:
        return 0
    if n == 0:
        return f[0] ** m
    if m == 0:
        return g[0] ** n
    size = n + m
    rows = []
    fr = list(reversed(f))
    gr = list(reversed(g))
    for i in range(m):
        rows.append([0] * i + fr + [0] * (m - 1 - i))
    for i in range(n):
        rows.append([0] * i + gr + [0] * (n - 1 - i))
    # Bareiss: exact integer determinant
    sign = 1
    prev = 1
    for k in range(size - 1):
        if rows[k][k] == 0:
            for r in range(k + 1, size):
                if rows[r][k] != 0:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                rows[i][j] = (rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j]) // prev
            rows[i][k] = 0
        prev = rows[k][k]
    return sign * rows[size - 1][size - 1]


def discriminant(f) -> int:
    """disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f) for monic f of degree >= 2."""
    n = degree(f)
    if n < 2:
        raise ValueError("discriminant requires degree >= 2")
    if not is_monic(f):
        raise ValueError("discriminant requires a monic polynomial")
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(f, derivative(f))


def content(f) -> int:
    c = 0
    for a in f:
        c = gcd(c, abs(a))
    return c


# ---------------------------------------------------------------------------
# polynomials over Z/m (ModPoly): tuple of residues in [0, m) plus the modulus


@dataclass(frozen=True)
class ModPoly:
    coeffs: tuple[int, ...]
    modulus: int

    def __post_init__(self):
        if self.modulus <= 1:
            raise ValueError("modulus must exceed 1")
        if any(not (0 <= a < self.modulus) for a in self.coeffs):
            raise ValueError("coefficients out of range")
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("unnormalized ModPoly")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


def mod_poly(coeffs, m) -> ModPoly:
    return ModPoly(poly(a % m for a in coeffs), m)


def _mp(coeffs, m):
    # internal: normalized residue tuple without the wrapper
    return poly(a % m for a in coeffs)


def _mp_add(f, g, m):
    n = max(len(f), len(g))
    return poly(
        ((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)) % m
        for i in range(n)
    )


def _mp_sub(f, g, m):
    n = max(len(f), len(g))
    return poly(
        ((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)) % m
        for i in range(n)
    )


def _mp_mul(f, g, m):
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] = (out[i + j] + a * b) % m
    return poly(out)


def _mp_monic(f, p):
    if not f:
        return f
    inv = pow(f[-1], -1, p)
    return poly(a * inv % p for a in f)


def _mp_divmod(f, g, p):
    # p prime, g nonzero
    if not g:
        raise ZeroDivisionError
    inv = pow(g[-1], -1, p)
    rem = list(f)
    quo = [0] * max(len(f) - len(g) + 1, 1)
    while len(rem) >= len(g):
        while rem and rem[-1] % p == 0:
            rem.pop()
        if len(rem) < len(g):
            break
        c = rem[-1] * inv % p
        shift = len(rem) - len(g)
        quo[shift] = c
        for i, b in enumerate(g):
            rem[shift + i] = (rem[shift + i] - c * b) % p
        rem.pop()
    return poly(q % p for q in quo), poly(r % p for r in rem)


def _mp_gcd(f, g, p):
    a, b = poly(x % p for x in f), poly(x % p for x in g)
    while b:
        a, b = b, _mp_divmod(a, b, p)[1]
    return _mp_monic(a, p)


def _mp_pow_mod(base, e, mod, p):
    # base^e in F_p[x]/(mod)
    result = (1,)
    base = _mp_divmod(base, mod, p)[1]
    while e > 0:
        if e & 1:
            result = _mp_divmod(_mp_mul(result, base, p), mod, p)[1]
        base = _mp_divmod(_mp_mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def _mp_pth_root(f, p):
    # f = g(x^p) over F_p  ->  g (Frobenius fixes F_p coefficients)
    return poly(f[i] for i in range(0, len(f), p))


def _sqf_decomposition(f, p):
    """Squarefree decomposition of monic f over F_p: list of (g_i, m_i) with
    f = prod g_i^{m_i}, the g_i squarefree and pairwise coprime."""
    result = []
    if degree(f) <= 0:
        return result
    fp = _mp(derivative(f), p)
    if not fp:
        g = _mp_pth_root(f, p)
        for h, m in _sqf_decomposition(g, p):
            result.append((h, m * p))
        return result
    t = _mp_gcd(f, fp, p)
    v = _mp_divmod(f, t, p)[0]
    k = 0
    while degree(v) > 0:
        k += 1
        w = _mp_gcd(t, v, p)
        z = _mp_divmod(v, w, p)[0]
        if degree(z) > 0:
            result.append((z, k))
        v = w
        t = _mp_divmod(t, w, p)[0]
    if degree(t) > 0:
        # leftover is a p-th power carrying its full multiplicity already
        result.extend(_sqf_decomposition(t, p))
    return result


def _distinct_degree(f, p):
    """Split squarefree monic f over F_p into products of equal-degree factors:
    list of (product, factor degree)."""
    result = []
    rest = f
    x = (0, 1)
    frob = x  # x^(p^d) mod rest, recomputed as rest shrinks
    d = 0
    while degree(rest) > 0:
        d += 1
        if degree(rest) < 2 * d:
            result.append((rest, degree(rest)))
            break
        frob = _mp_pow_mod(frob, p, rest, p)
        g = _mp_gcd(_mp_sub(frob, x, p), rest, p)
        if degree(g) > 0:
            result.append((g, d))
            rest = _mp_divmod(rest, g, p)[0]
            frob = _mp_divmod(frob, rest, p)[1]
    return result


def _candidate_polys(p, max_deg):
    """Deterministic enumeration of splitting candidates: the shifts
    x+0, x+1, ..., x+(p-1) first, then all monic polynomials by degree."""
    for s in range(p):
        yield (s, 1)
    for d in range(2, max_deg + 1):
        idx = [0] * d
        while True:
            yield tuple(idx) + (1,)
            i = 0
            while i < d:
                idx[i] += 1
                if idx[i] < p:
                    break
                idx[i] = 0
                i += 1
            if i == d:
                break


def _equal_degree_split(f, d, p):
    """Factor monic squarefree f (product of irreducibles of degree d) over F_p,
    deterministically."""
    if degree(f) == d:
        return [f]
    for t in _candidate_polys(p, 2 * d):
        if p == 2:
            # trace map to F_2
            acc = ()
            term = _mp_divmod(t, f, p)[1]
            for _ in range(d):
                acc = _mp_add(acc, term, p)
                term = _mp_divmod(_mp_mul(term, term, p), f, p)[1]
            g = _mp_gcd(acc, f, p)
        else:
            e = (p**d - 1) // 2
            h = _mp_pow_mod(t, e, f, p)
            g = _mp_gcd(_mp_sub(h, (1,), p), f, p)
        if 0 < degree(g) < degree(f):
            left = _equal_degree_split(g, d, p)
            right = _equal_degree_split(_mp_divmod(f, g, p)[0], d, p)
            return left + right
    raise AssertionError("equal-degree split exhausted candidates")


def factor_mod_p(f, p: int) -> list[tuple[ModPoly, int]]:
    """Monic irreducible factors of f over F_p with multiplicities.

    Output is sorted by (degree, coefficient tuple) so prime-ideal labels are
    stable across runs.  Raises ValueError when f vanishes mod p.
    """
    fbar = _mp(f, p)
    if not fbar:
        raise ValueError("polynomial is zero modulo p")
    fbar = _mp_monic(fbar, p)
    factors: list[tuple[tuple[int, ...], int]] = []
    for g, mult in _sqf_decomposition(fbar, p):
        for part, d in _distinct_degree(g, p):
            for irr in _equal_degree_split(part, d, p):
                factors.append((irr, mult))
    factors.sort(key=lambda fm: (len(fm[0]), fm[0]))
    return [(ModPoly(g, p), m) for g, m in factors]


# ---------------------------------------------------------------------------
# real root counting (Sturm)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def count_real_roots(f) -> int:
    """Number of distinct real roots of a squarefree integer polynomial."""
    if degree(f) < 1:
        raise ValueError("degree must be at least 1")
    fq = tuple(Fraction(a) for a in f)
    dq = tuple(Fraction(a) for a in derivative(f))
    g = _poly_gcd_q(fq, dq)
    if degree(g) > 0:
        raise ValueError("polynomial is not squarefree")
    chain = [fq, dq]
    while degree(chain[-1]) > 0:
        rem = poly_divmod_exact(chain[-2], chain[-1])[1]
        if not rem:
            break
        chain.append(poly_neg(rem))
    def changes(signs):
        signs = [s for s in signs if s != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)
    at_pos = [_sign(c[-1]) for c in chain if c]
    at_neg = [_sign(c[-1]) * (-1 if degree(c) % 2 else 1) for c in chain if c]
    return changes(at_neg) - changes(at_pos)


def _poly_gcd_q(f, g):
    a, b = poly(f), poly(g)
    while b:
        a, b = b, poly_divmod_exact(a, b)[1]
    return a


# ---------------------------------------------------------------------------
# p-adic approximations


@dataclass(frozen=True)
class PadicApprox:
    """An integer residue determining a p-adic number mod p^precision."""

    value: int
    precision: int
    prime: int

    def __post_init__(self):
        if self.precision < 1:
            raise ValueError("precision must be positive")
        if not (0 <= self.value < self.prime**self.precision):
            raise ValueError("value out of range for stated precision")

    def valuation(self) -> int | None:
        """v_p(value), or None when the residue is 0 (valuation >= precision)."""
        if self.value == 0:
            return None
        v, x = 0, self.value
        while x % self.prime == 0:
            x //= self.prime
            v += 1
        return v


def hensel_lift_root(f, p: int, r0: int, k: int) -> PadicApprox:
    """Lift a simple root of f mod p to precision p^k by Newton iteration."""
    if poly_eval(f, r0) % p != 0:
        raise ValueError("r0 is not a root of f modulo p")
    fp = derivative(f)
    if poly_eval(fp, r0) % p == 0:
        raise ValueError("root is not simple: f'(r0) = 0 mod p")
    prec = 1
    r = r0 % p
    while prec < k:
        prec = min(2 * prec, k)
        m = p**prec
        d = poly_eval(fp, r) % m
        r = (r - poly_eval(f, r) * pow(d, -1, m)) % m
    assert poly_eval(f, r) % p**k == 0
    return PadicApprox(r % p**k, k, p)


def padic_log(u: PadicApprox) -> PadicApprox:
    """log(u) = sum (-1)^(m+1) (u-1)^m / m truncated so every discarded term
    has valuation >= the working precision.  Requires u = 1 mod p, p odd."""
    p, k = u.prime, u.precision
    if p == 2:
        raise ValueError("p = 2 is unsupported")
    if k < 1 or u.value % p != 1:
        raise ValueError("argument must be a principal unit (1 mod p)")
    pk = p**k
    x = (u.value - 1) % pk
    if x == 0:
        return PadicApprox(0, k, p)
    # v(term m) >= m - log_p(m); this many terms is always enough for v(u-1)>=1
    mmax = (k * p) // (p - 1) + p
    total = 0
    for m in range(1, mmax + 1):
        a = 0
        mm = m
        while mm % p == 0:
            mm //= p
            a += 1
        # x^m is exactly divisible by p^a (since v(x^m) >= m > a), so the
        # residue mod p^(k+a) determines x^m / p^a mod p^k.
        xm = pow(x, m, p ** (k + a))
        q = xm // p**a
        term = q * pow(mm, -1, pk) % pk
        if m % 2 == 0:
            total = (total - term) % pk
        else:
            total = (total + term) % pk
    return PadicApprox(total, k, p)
