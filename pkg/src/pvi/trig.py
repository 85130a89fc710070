"""Exact values and recognition of 2cos(pi * p/q).

Traces of finite-order SL2 elements are twice cosines of rational angles; this
module builds the real cyclotomic fields Q(2cos(pi/L)), expresses any
2cos(pi p/q) with q | L through the Chebyshev-type recurrence
V_k(2cos x) = 2cos(kx), and recognises field elements as such values exactly
(minimal-polynomial test plus embedding match).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import sympy

from .nfield import QQ, NumberField, nf_create, frac


@lru_cache(maxsize=None)
def cos2pi_minpoly(n: int) -> tuple[int, ...]:
    """Minimal polynomial over Q of 2cos(2*pi/n), dense low-first."""
    if n == 1:
        return (-2, 1)
    if n == 2:
        return (2, 1)
    x = sympy.Symbol("x")
    phi = sympy.cyclotomic_poly(n, x)
    # Phi_n(z) = z^(phi(n)/2) * psi(z + 1/z); since V_j(z + 1/z) = z^j + z^-j,
    # the palindromic coefficients of Phi_n read off psi in the V-basis
    coeffs = [Fraction(int(c)) for c in reversed(sympy.Poly(phi, x).all_coeffs())]
    half = (len(coeffs) - 1) // 2
    vcoeffs = [Fraction(0)] * (half + 1)
    work = list(coeffs)
    for j in range(half, 0, -1):
        c = work[half + j]
        vcoeffs[j] = c
        if c:
            work[half + j] -= c
            work[half - j] -= c
    vcoeffs[0] = work[half] / 2
    # convert from the V-basis to the power basis
    power = [Fraction(0)] * (half + 1)
    for j, c in enumerate(vcoeffs):
        if c:
            for i, vc in enumerate(_v_poly(j)):
                power[i] += c * vc
    return _clear(power)


def _v_poly(j: int) -> list[Fraction]:
    # coefficients of V_j as polynomial in x (V_0=2, V_1=x, V_k = x V_{k-1} - V_{k-2})
    v0, v1 = [Fraction(2)], [Fraction(0), Fraction(1)]
    if j == 0:
        return v0
    if j == 1:
        return v1
    for _ in range(j - 1):
        nxt = [Fraction(0)] + v1
        for i, c in enumerate(v0):
            nxt[i] -= c
        v0, v1 = v1, nxt
    return v1


def _clear(fracs) -> tuple[int, ...]:
    from math import gcd, lcm

    den = 1
    for c in fracs:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in fracs]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    g = g or 1
    if ints[-1] < 0:
        g = -g
    return tuple(c // g for c in ints)


@lru_cache(maxsize=None)
def cos_pi_minpoly(p: int, q: int) -> tuple[int, ...]:
    """Minimal polynomial of 2cos(pi*p/q)."""
    g = math.gcd(p, 2 * q)
    n = 2 * q // g
    return cos2pi_minpoly(n)


@lru_cache(maxsize=None)
def cos_field(L: int) -> NumberField:
    """Q(2cos(pi/L)) with the real embedding at 2cos(pi/L)."""
    mp = cos_pi_minpoly(1, L)
    if len(mp) == 2:
        return QQ
    return nf_create(mp, 2 * math.cos(math.pi / L), name=f"c{L}")


def two_cos(field_L: int, r: Fraction):
    """2cos(pi*r) as an exact element of cos_field(field_L); needs den(r) | L."""
    r = frac(r)
    if field_L % r.denominator:
        raise ValueError(f"denominator of {r} does not divide {field_L}")
    K = cos_field(field_L)
    k = int(r * field_L)
    if K is QQ:
        val = 2 * math.cos(math.pi * float(r))
        return QQ.coerce(round(val))
    gen = K.gen
    # V_k via the recurrence
    v0, v1 = K.coerce(2), gen
    k = abs(k)
    if k == 0:
        return v0
    for _ in range(k - 1):
        v0, v1 = v1, gen * v1 - v0
    return v1


def angle_tuple_field(angles) -> tuple[NumberField, dict]:
    """Field containing 2cos(pi*r) for every r in ``angles``; returns it with
    a map r -> element."""
    dens = [frac(r).denominator for r in angles]
    L = 1
    for d in dens:
        L = L * d // math.gcd(L, d)
    K = cos_field(L)
    table = {}
    for r in angles:
        r = frac(r)
        table[r] = two_cos(L, r)
    return K, table


def recognize_angle(elt, max_den: int = 120) -> Fraction | None:
    """r in [0,1] with elt == 2cos(pi*r) exactly, or None.

    Numeric embedding proposes r; the minimal polynomial of 2cos(pi*r) is then
    required to vanish at elt exactly.
    """
    z = _embed(elt)
    if abs(z.imag) > 1e-9 or abs(z.real) > 2 + 1e-9:
        return None
    x = min(1.0, max(-1.0, z.real / 2.0))
    r = Fraction(math.acos(x) / math.pi).limit_denominator(max_den)
    if not (0 <= r <= 1):
        return None
    mp = cos_pi_minpoly(r.numerator, r.denominator) if r != 0 and r != 1 else None
    if r == 0:
        return Fraction(0) if elt == 2 else None
    if r == 1:
        return Fraction(1) if elt == -2 else None
    acc = None
    for c in reversed(mp):
        acc = elt * 0 + c if acc is None else acc * elt + c
    if acc != elt * 0:
        return None
    if abs(2 * math.cos(math.pi * float(r)) - z.real) > 1e-6:
        return None
    return r


def _embed(elt) -> complex:
    if isinstance(elt, (int, float)):
        return complex(elt)
    if isinstance(elt, Fraction):
        return complex(elt)
    return complex(elt.embed())
