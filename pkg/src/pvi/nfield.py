"""Exact arithmetic in algebraic number fields.

A field is presented by an irreducible integer polynomial together with a
complex hint isolating one of its roots; elements are rational vectors in the
power basis of that root.  Composita are built by explicit primitive-element
search (resultant + rational factorisation + gcd descent), so a single
absolute field backs every computation.  Relative extensions K0[x]/(f) are
also provided for branch-local work where an absolute model would be wasteful.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import mpmath
import sympy


class FieldError(ValueError):
    pass


def frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational")


# ---------------------------------------------------------------------------
# dense univariate polynomial helpers over an arbitrary coefficient field
# (coefficients only need +, -, *, / and truthiness; used for Fraction and
# FieldElement coefficients alike)

def poly_trim(p):
    while p and not p[-1]:
        p.pop()
    return p


def poly_add(p, q):
    n = max(len(p), len(q))
    out = []
    for i in range(n):
        a = p[i] if i < len(p) else 0
        b = q[i] if i < len(q) else 0
        out.append(a + b)
    return poly_trim(out)


def poly_neg(p):
    return [-a for a in p]


def poly_sub(p, q):
    return poly_add(p, poly_neg(q))


def poly_mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            if b:
                out[i + j] = out[i + j] + a * b
    return poly_trim(out)


def poly_divmod(p, q):
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    p = list(p)
    lead = q[-1]
    dq = len(q) - 1
    quot = [0] * max(0, len(p) - dq)
    while len(p) - 1 >= dq and p:
        c = p[-1] / lead
        k = len(p) - 1 - dq
        quot[k] = c
        for i in range(len(q)):
            p[k + i] = p[k + i] - c * q[i]
        poly_trim(p)
        if not p:
            break
    return poly_trim(quot), p


def poly_eval(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_gcd_monic(p, q):
    """Monic gcd via the Euclidean algorithm over a field."""
    a, b = list(p), list(q)
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if not a:
        return a
    lead = a[-1]
    return [c / lead for c in a]


def poly_deriv(p):
    return poly_trim([p[i] * i for i in range(1, len(p))])


# ---------------------------------------------------------------------------
# integer polynomial utilities (sympy-backed factorisation)

_X = sympy.Symbol("x")


def _int_poly_to_sympy(coeffs: Sequence[int]):
    return sympy.Poly(list(reversed([sympy.Integer(c) for c in coeffs])), _X)


def _sympy_to_int_poly(p) -> tuple[int, ...]:
    cs = [int(c) for c in reversed(p.all_coeffs())]
    return tuple(cs)


def int_poly_factor(coeffs: Sequence[int]) -> list[tuple[tuple[int, ...], int]]:
    """Irreducible factorisation over Q of an integer polynomial.

    Returns (factor, multiplicity) pairs with primitive integer factors.
    """
    p = _int_poly_to_sympy(coeffs)
    _, factors = p.factor_list()
    return [(_sympy_to_int_poly(f), m) for f, m in factors]


def int_poly_is_irreducible(coeffs: Sequence[int]) -> bool:
    facs = int_poly_factor(coeffs)
    return len(facs) == 1 and facs[0][1] == 1 and len(facs[0][0]) == len(coeffs)


def clear_denominators(coeffs: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a rational polynomial to a primitive integer polynomial."""
    from math import gcd, lcm

    coeffs = [frac(c) for c in coeffs]
    den = 1
    for c in coeffs:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    if g > 1:
        ints = [c // g for c in ints]
    if ints and ints[-1] < 0:
        ints = [-c for c in ints]
    return tuple(ints)


def poly_roots_mp(coeffs, prec_digits: int = 50):
    """All complex roots of a polynomial with rational/float coefficients."""
    with mpmath.workdps(prec_digits):
        cs = [mpmath.mpf(c.numerator) / c.denominator if isinstance(c, Fraction)
              else mpmath.mpmathify(c) for c in coeffs]
        roots = mpmath.polyroots(list(reversed(cs)), maxsteps=200, extraprec=200)
        return [complex(r) for r in roots]


# ---------------------------------------------------------------------------

_FIELD_CACHE: dict[tuple, "NumberField"] = {}


class NumberField:
    """Q(alpha) for alpha a fixed root of an irreducible integer polynomial.

    ``minimal_polynomial`` is stored dense, low degree first, primitive with
    positive leading coefficient.  ``embedding_hint`` isolates the chosen
    complex root; all numerical output is routed through it.
    """

    def __init__(self, minimal_polynomial: Sequence[int], embedding_hint: complex,
                 _root: complex | None = None, name: str = "a"):
        self.minimal_polynomial = tuple(int(c) for c in minimal_polynomial)
        self.degree = len(self.minimal_polynomial) - 1
        if self.degree < 1:
            raise FieldError("minimal polynomial must have positive degree")
        self.name = name
        self.embedding_hint = complex(embedding_hint)
        self.root = complex(_root) if _root is not None else self.embedding_hint
        self._reduction = self._build_reduction()
        self.zero = FieldElement(self, (Fraction(0),) * self.degree)
        self.one = FieldElement(self, tuple([Fraction(1)] + [Fraction(0)] * (self.degree - 1)))
        if self.degree > 1:
            gen = [Fraction(0)] * self.degree
            gen[1] = Fraction(1)
            self.gen = FieldElement(self, tuple(gen))
        else:
            # degree-1 field: the generator is the rational root itself
            c0, c1 = self.minimal_polynomial
            self.gen = FieldElement(self, (Fraction(-c0, c1),))

    def _build_reduction(self):
        # power-basis reduction table: alpha^k for k = deg .. 2*deg-2
        n = self.degree
        m = self.minimal_polynomial
        lead = Fraction(m[n])
        base = [Fraction(-m[i]) / lead for i in range(n)]  # alpha^n
        table = [base]
        for _ in range(n - 2):
            prev = table[-1]
            nxt = [Fraction(0)] * n
            carry = prev[n - 1]
            for i in range(n - 1):
                nxt[i + 1] = prev[i]
            if carry:
                for i in range(n):
                    nxt[i] += carry * base[i]
            table.append(nxt)
        return table

    # -- element constructors ------------------------------------------------
    def coerce(self, x) -> "FieldElement":
        if isinstance(x, FieldElement):
            if x.field is self:
                return x
            if x.is_rational():
                return self.from_rational(x.to_rational())
            raise FieldError("cannot coerce element from a different field")
        if isinstance(x, (int, Fraction)):
            return self.from_rational(frac(x))
        if isinstance(x, str):
            return self.from_rational(frac(x))
        raise TypeError(f"cannot coerce {x!r} into {self}")

    def from_rational(self, r) -> "FieldElement":
        r = frac(r)
        coords = [Fraction(0)] * self.degree
        coords[0] = r
        return FieldElement(self, tuple(coords))

    def element(self, coords: Iterable) -> "FieldElement":
        coords = [frac(c) for c in coords]
        if len(coords) != self.degree:
            raise FieldError("coordinate vector length must equal the field degree")
        return FieldElement(self, tuple(coords))

    # -- numerics -------------------------------------------------------------
    def embed(self, elt: "FieldElement") -> complex:
        acc = 0j
        for c in reversed(elt.coords):
            acc = acc * self.root + complex(c)
        return acc

    def embed_mp(self, elt: "FieldElement", dps: int = 50):
        with mpmath.workdps(dps):
            roots = poly_roots_mp([Fraction(c) for c in self.minimal_polynomial], dps)
            root = min(roots, key=lambda r: abs(r - self.root))
            acc = mpmath.mpc(0)
            for c in reversed(elt.coords):
                acc = acc * root + mpmath.mpf(c.numerator) / c.denominator
            return complex(acc)

    # -- misc -----------------------------------------------------------------
    def __repr__(self):
        return f"NumberField({list(self.minimal_polynomial)}, root~{self.root:.6g})"

    def is_rational_field(self):
        return self.degree == 1

    def key(self):
        return (self.minimal_polynomial, round(self.root.real, 9), round(self.root.imag, 9))


class FieldElement:
    __slots__ = ("field", "coords", "_hash")

    def __init__(self, field: NumberField, coords: tuple):
        self.field = field
        self.coords = coords
        self._hash = None

    # -- ring ops -------------------------------------------------------------
    def _co(self, other):
        if isinstance(other, FieldElement):
            if other.field is self.field:
                return other
            if other.field.degree == 1:
                return self.field.from_rational(other.to_rational())
            if self.field.degree == 1:
                return NotImplemented
            raise FieldError("mixed-field arithmetic requires an explicit compositum")
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return NotImplemented

    def __add__(self, other):
        o = self._co(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other):
        o = self._co(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._co(other)
        if o is NotImplemented:
            return NotImplemented
        n = self.field.degree
        if n == 1:
            return FieldElement(self.field, (self.coords[0] * o.coords[0],))
        prod = [Fraction(0)] * (2 * n - 1)
        a, b = self.coords, o.coords
        for i in range(n):
            ai = a[i]
            if not ai:
                continue
            for j in range(n):
                if b[j]:
                    prod[i + j] += ai * b[j]
        out = list(prod[:n])
        table = self.field._reduction
        for k in range(n, 2 * n - 1):
            c = prod[k]
            if c:
                row = table[k - n]
                for i in range(n):
                    if row[i]:
                        out[i] += c * row[i]
        return FieldElement(self.field, tuple(out))

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero field element")
        n = self.field.degree
        if n == 1:
            return FieldElement(self.field, (1 / self.coords[0],))
        # extended Euclid in Q[x] modulo the minimal polynomial
        m = [Fraction(c) for c in self.field.minimal_polynomial]
        a = poly_trim(list(self.coords))
        r0, r1 = m, a
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, poly_sub(s0, poly_mul(q, s1))
        if not r1:
            raise ZeroDivisionError("element not invertible (reducible modulus?)")
        inv_lead = 1 / r1[0]
        s1 = [c * inv_lead for c in s1]
        coords = [Fraction(0)] * n
        for i, c in enumerate(s1[:n]):
            coords[i] = c
        return FieldElement(self.field, tuple(coords))

    def __truediv__(self, other):
        o = self._co(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.field.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- predicates -----------------------------------------------------------
    def __bool__(self):
        return any(self.coords)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            if other.field is self.field:
                return self.coords == other.coords
            if self.field.key() == other.field.key():
                return self.coords == other.coords
            if other.field.degree == 1 and self.is_rational():
                return self.to_rational() == other.to_rational()
            if self.field.degree == 1 and other.is_rational():
                return self.to_rational() == other.to_rational()
            return False
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.coords[0])
            else:
                self._hash = hash((self.field.minimal_polynomial, self.coords))
        return self._hash

    def is_rational(self):
        return all(not c for c in self.coords[1:])

    def to_rational(self) -> Fraction:
        if self.field.degree == 1:
            c0, c1 = self.field.minimal_polynomial
            # coords are in the basis {1}; the generator is rational
            return self.coords[0]
        if not self.is_rational():
            raise FieldError(f"{self} is not rational")
        return self.coords[0]

    def conjugate_by_root(self, new_field: "NumberField"):
        """Reinterpret the coordinate vector in a field with the same modulus."""
        if new_field.minimal_polynomial != self.field.minimal_polynomial:
            raise FieldError("conjugation target must share the minimal polynomial")
        return FieldElement(new_field, self.coords)

    def embed(self) -> complex:
        return self.field.embed(self)

    def __repr__(self):
        if self.is_rational():
            return str(self.coords[0])
        name = self.field.name
        terms = []
        for i, c in enumerate(self.coords):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*{name}")
            else:
                terms.append(f"{c}*{name}^{i}")
        return " + ".join(terms) if terms else "0"


QQ = NumberField((0, 1), 0.0, name="r")


def nf_create(minimal_polynomial: Sequence[int], embedding_hint: complex,
              name: str = "a") -> NumberField:
    """Create a number field, rejecting reducible moduli and ambiguous hints.

    A reducible polynomial is rejected with a factor witness; a hint not
    isolating a unique root (within 1e-6) is rejected as ambiguous.
    """
    coeffs = tuple(int(c) for c in minimal_polynomial)
    if len(coeffs) < 2 or coeffs[-1] == 0:
        raise FieldError("minimal polynomial must be nonconstant with nonzero lead")
    facs = int_poly_factor(coeffs)
    if len(facs) > 1 or facs[0][1] > 1:
        witness = [list(f) for f, _ in facs]
        raise FieldError(f"reducible modulus; factors {witness}")
    key = (coeffs, round(complex(embedding_hint).real, 9), round(complex(embedding_hint).imag, 9))
    if key in _FIELD_CACHE:
        return _FIELD_CACHE[key]
    roots = poly_roots_mp([Fraction(c) for c in coeffs])
    ranked = sorted(roots, key=lambda r: abs(r - complex(embedding_hint)))
    d1 = abs(ranked[0] - complex(embedding_hint))
    d2 = abs(ranked[1] - complex(embedding_hint)) if len(ranked) > 1 else float("inf")
    # the hint must isolate one root: either essentially exact, or clearly
    # nearer to one root than to every other
    if not (d1 < 1e-6 or (d1 < 1e-3 and 4 * d1 < d2)):
        raise FieldError(f"embedding hint {embedding_hint} is ambiguous "
                         f"(nearest {d1:.2e}, next {d2:.2e})")
    field = NumberField(coeffs, embedding_hint, _root=ranked[0], name=name)
    _FIELD_CACHE[key] = field
    _FIELD_CACHE[field.key()] = field
    return field


# ---------------------------------------------------------------------------
# resultants over Q by evaluation/interpolation (used for composita)

def _resultant_q(p, q):
    """Resultant of two Fraction polynomials via a subresultant-free PRS.

    Small degrees only; uses the classical relation res(p,q) =
    lc(q)^(deg p - deg r) * (-1)^(deg p * deg q) * res(q, r).
    """
    p = poly_trim([frac(c) for c in p])
    q = poly_trim([frac(c) for c in q])
    if not p or not q:
        return Fraction(0)
    res = Fraction(1)
    while True:
        dp, dq = len(p) - 1, len(q) - 1
        if dq == 0:
            return res * q[0] ** dp
        _, r = poly_divmod(p, q)
        dr = len(r) - 1 if r else -1
        if not r:
            return Fraction(0)
        res *= Fraction((-1) ** (dp * dq)) * q[-1] ** (dp - dr)
        p, q = q, r


def _lagrange_interpolate(points):
    """Exact Lagrange interpolation through (x_i, y_i) with Fraction data."""
    n = len(points)
    poly = []
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if i == j:
                continue
            basis = poly_mul(basis, [-xj, Fraction(1)])
            denom *= xi - xj
        scale = yi / denom
        poly = poly_add(poly, [c * scale for c in basis])
    return poly


def _resultant_in_second_var(mpoly, gcoeffs, degree_bound):
    """Res_Y(m(Y), sum_i g_i(Y) X^i) as a Fraction polynomial in X.

    ``gcoeffs`` lists the lifts of the X-coefficients as Fraction polynomials
    in Y.  Evaluation-interpolation keeps all arithmetic over Q; when the
    Y-degree drops at a sample point the classical lc(m)^drop correction
    restores the specialised value.
    """
    ydeg = max((len(c) for c in gcoeffs if c), default=0) - 1
    lead_m = mpoly[-1]
    pts = []
    x = 0
    while len(pts) < degree_bound + 1:
        xv = Fraction(x)
        g_at = []
        for k in range(ydeg + 1):
            acc = Fraction(0)
            for i, ci in enumerate(gcoeffs):
                if k < len(ci) and ci[k]:
                    acc += ci[k] * xv ** i
            g_at.append(acc)
        g_at = poly_trim(g_at)
        drop = ydeg - (len(g_at) - 1 if g_at else -1)
        val = _resultant_q(mpoly, g_at) * lead_m ** drop if g_at else Fraction(0)
        pts.append((xv, val))
        x = -x if x > 0 else -x + 1
    return _lagrange_interpolate(pts)


def adjoin_root(K: NumberField, gcoeffs: Sequence[FieldElement], root_hint: complex,
                name: str = "g"):
    """Field L = K(beta) for beta the root of g near ``root_hint``.

    ``gcoeffs`` is a polynomial over K (dense, low degree first).  Returns
    (L, alpha_in_L, beta_in_L) with alpha the image of K's generator.
    """
    gcoeffs = [K.coerce(c) for c in gcoeffs]
    glift = [[Fraction(c) for c in e.coords] for e in gcoeffs]
    dg = len(gcoeffs) - 1
    if dg < 1:
        raise FieldError("cannot adjoin a root of a constant")
    mq = [Fraction(c) for c in K.minimal_polynomial]

    # minimal polynomial of beta over Q: hint-matched factor of Res_Y(m, g)
    res = _resultant_in_second_var(mq, glift, dg * K.degree)
    res_int = clear_denominators(res)
    beta_poly = _match_factor_by_root(res_int, root_hint)
    if beta_poly is None:
        raise FieldError("no factor of the norm polynomial vanishes at the hint")
    beta_minpoly, beta_root = beta_poly

    if K.degree == 1:
        if len(beta_minpoly) == 2:
            beta = K.from_rational(Fraction(-beta_minpoly[0], beta_minpoly[1]))
            return K, K.gen, beta
        L = nf_create(beta_minpoly, beta_root, name=name)
        return L, L.from_rational(K.gen.to_rational()), L.gen

    if len(beta_minpoly) == 2:
        # beta is rational; nothing to adjoin
        beta = K.from_rational(Fraction(-beta_minpoly[0], beta_minpoly[1]))
        return K, K.gen, beta

    alpha_root = K.root
    for k in range(0, 24):
        gamma_hint = beta_root + k * alpha_root
        # m_gamma | Res_Y(m(Y), m_beta(Z - kY))
        shifted = _compose_shift(beta_minpoly, k)
        res2 = _resultant_in_second_var(mq, shifted, (len(beta_minpoly) - 1) * K.degree)
        cand = _match_factor_by_root(clear_denominators(res2), gamma_hint)
        if cand is None:
            continue
        m_gamma, gamma_root = cand
        L = nf_create(m_gamma, gamma_root, name=name)
        # alpha = the unique common root of m_K(x) and m_beta(gamma - kx) in L
        mx = [L.from_rational(frac(c)) for c in K.minimal_polynomial]
        comp = _poly_compose_over(L, [L.from_rational(frac(c)) for c in beta_minpoly],
                                  [L.gen, L.coerce(-k)])
        g = poly_gcd_monic(mx, comp)
        if len(g) != 2:
            continue
        alpha = -g[0] / g[1]
        beta = L.gen - alpha * k
        # exact verification that g(beta) = 0 with K mapped through alpha
        acc = L.zero
        for i in reversed(range(len(gcoeffs))):
            ci = gcoeffs[i]
            lifted = sum((L.coerce(c) * alpha ** j for j, c in enumerate(ci.coords)), L.zero)
            acc = acc * beta + lifted
        if acc:
            continue
        if abs(L.embed(alpha) - alpha_root) > 1e-5:
            continue
        return L, alpha, beta
    raise FieldError("primitive element search failed")


def _compose_shift(beta_minpoly, k):
    """Lifts of the Z-coefficients of m_beta(Z - kY) as polynomials in Y."""
    n = len(beta_minpoly) - 1
    # m_beta(Z - kY) = sum_j c_j (Z - kY)^j; collect as poly in Z with Y-poly coeffs
    out = [[] for _ in range(n + 1)]
    for j, cj in enumerate(beta_minpoly):
        if not cj:
            continue
        # (Z - kY)^j expanded: sum_i C(j,i) Z^i (-kY)^(j-i)
        from math import comb
        for i in range(j + 1):
            coeff = Fraction(cj * comb(j, i) * (-k) ** (j - i))
            ypow = j - i
            row = out[i]
            while len(row) <= ypow:
                row.append(Fraction(0))
            row[ypow] += coeff
    return [poly_trim(row) for row in out]


def _poly_compose_over(L: NumberField, pcoeffs, lin):
    """p(lin(x)) for p over L and lin = [b, a] meaning b + a*x, as poly in x."""
    out = [L.zero]
    for c in reversed(pcoeffs):
        out = poly_add(poly_mul(out, [lin[0], lin[1]]), [c])
    return poly_trim(out)


def _match_factor_by_root(int_poly, hint, tol=1e-5):
    """(factor, precise_root) for the irreducible rational factor with a root
    near ``hint``; None when nothing matches."""
    best = None
    for f, _mult in int_poly_factor(int_poly):
        if len(f) < 2:
            continue
        roots = poly_roots_mp([Fraction(c) for c in f])
        for r in roots:
            d = abs(r - complex(hint))
            if d < tol and (best is None or d < best[2]):
                best = (f, r, d)
    if best is None:
        return None
    return best[0], best[1]


def compositum(K1: NumberField, K2: NumberField, name: str = "c"):
    """Smallest field containing both; returns (L, gen1_in_L, gen2_in_L)."""
    if K1.degree == 1:
        return K2, K2.from_rational(K1.gen.to_rational()), K2.gen
    if K2.degree == 1:
        return K1, K1.gen, K1.from_rational(K2.gen.to_rational())
    g2 = [K1.from_rational(frac(c)) for c in K2.minimal_polynomial]
    L, a1, b2 = adjoin_root(K1, g2, K2.root, name=name)
    return L, a1, b2


# ---------------------------------------------------------------------------


class RelativeExtension:
    """K0[x]/(f) for f irreducible over the base number field K0.

    Elements are coordinate vectors over K0 in the power basis of the class of
    x; supports the relative trace down to K0 (via Newton power sums of f).
    """

    def __init__(self, base: NumberField, modulus, root_hint: complex, name: str = "s0"):
        self.base = base
        self.modulus = [base.coerce(c) for c in modulus]
        self.degree = len(self.modulus) - 1
        if self.degree < 1:
            raise FieldError("relative modulus must be nonconstant")
        self.name = name
        lead = self.modulus[-1]
        self._monic = [c / lead for c in self.modulus]
        self.zero = RelElement(self, (base.zero,) * self.degree)
        one = [base.zero] * self.degree
        one[0] = base.one
        self.one = RelElement(self, tuple(one))
        if self.degree > 1:
            g = [base.zero] * self.degree
            g[1] = base.one
            self.gen = RelElement(self, tuple(g))
        else:
            self.gen = RelElement(self, (-self._monic[0],))
        self.root = complex(root_hint)
        self._trace_powers = self._newton_traces()
        self._red = self._reduction_rows()

    def _reduction_rows(self):
        n = self.degree
        base_row = [-c for c in self._monic[:n]]
        rows = [base_row]
        for _ in range(n - 2):
            prev = rows[-1]
            nxt = [self.base.zero] * n
            carry = prev[n - 1]
            for i in range(n - 1):
                nxt[i + 1] = prev[i]
            if carry:
                for i in range(n):
                    nxt[i] = nxt[i] + carry * base_row[i]
            rows.append(nxt)
        return rows

    def _newton_traces(self):
        # power sums of the roots of the monic modulus, p_0 .. p_{2n-2};
        # for monic f = x^n + a_{n-1}x^{n-1} + ...: e_i = (-1)^i a_{n-i}
        n = self.degree
        p = [self.base.coerce(n)]
        for k in range(1, 2 * n - 1):
            acc = self.base.zero
            for i in range(1, min(k, n) + 1):
                ei = (-1) ** (i + 1) * self._monic[n - i]
                if i == k:
                    acc = acc + ei * k
                else:
                    acc = acc + ei * p[k - i]
            p.append(acc)
        return p

    def coerce(self, x):
        if isinstance(x, RelElement) and x.parent is self:
            return x
        if isinstance(x, FieldElement) or isinstance(x, (int, Fraction, str)):
            c = self.base.coerce(x)
            coords = [self.base.zero] * self.degree
            coords[0] = c
            return RelElement(self, tuple(coords))
        raise TypeError(f"cannot coerce {x!r}")

    def element(self, coords):
        coords = [self.base.coerce(c) for c in coords]
        if len(coords) != self.degree:
            raise FieldError("bad coordinate length")
        return RelElement(self, tuple(coords))

    def trace(self, x: "RelElement") -> FieldElement:
        acc = self.base.zero
        for j, c in enumerate(x.coords):
            if c:
                acc = acc + c * self._trace_powers[j]
        return acc

    def embed(self, x: "RelElement") -> complex:
        acc = 0j
        for c in reversed(x.coords):
            acc = acc * self.root + self.base.embed(c)
        return acc

    def __repr__(self):
        return f"RelativeExtension(deg {self.degree} over {self.base!r})"


class RelElement:
    __slots__ = ("parent", "coords")

    def __init__(self, parent: RelativeExtension, coords: tuple):
        self.parent = parent
        self.coords = coords

    def _co(self, other):
        if isinstance(other, RelElement):
            if other.parent is self.parent:
                return other
            raise FieldError("mixed relative extensions")
        try:
            return self.parent.coerce(other)
        except TypeError:
            return NotImplemented

    def __add__(self, other):
        o = self._co(other)
        if o is NotImplemented:
            return NotImplemented
        return RelElement(self.parent, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self):
        return RelElement(self.parent, tuple(-a for a in self.coords))

    def __sub__(self, other):
        o = self._co(other)
        if o is NotImplemented:
            return NotImplemented
        return RelElement(self.parent, tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._co(other)
        if o is NotImplemented:
            return NotImplemented
        n = self.parent.degree
        if n == 1:
            return RelElement(self.parent, (self.coords[0] * o.coords[0],))
        zero = self.parent.base.zero
        prod = [zero] * (2 * n - 1)
        for i, a in enumerate(self.coords):
            if not a:
                continue
            for j, b in enumerate(o.coords):
                if b:
                    prod[i + j] = prod[i + j] + a * b
        out = list(prod[:n])
        for k in range(n, 2 * n - 1):
            c = prod[k]
            if c:
                row = self.parent._red[k - n]
                for i in range(n):
                    if row[i]:
                        out[i] = out[i] + c * row[i]
        return RelElement(self.parent, tuple(out))

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError
        par = self.parent
        m = list(par._monic)
        a = poly_trim(list(self.coords))
        r0, r1 = m, a
        s0, s1 = [], [par.base.one]
        while len(r1) > 1:
            q, r = poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, poly_sub(s0, poly_mul(q, s1))
        if not r1:
            raise ZeroDivisionError("non-invertible element (reducible modulus?)")
        s1 = [c / r1[0] for c in s1]
        coords = [par.base.zero] * par.degree
        for i, c in enumerate(s1[:par.degree]):
            coords[i] = c
        return RelElement(par, tuple(coords))

    def __truediv__(self, other):
        o = self._co(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.parent.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self):
        return any(bool(c) for c in self.coords)

    def __eq__(self, other):
        o = self._co(other)
        if o is NotImplemented:
            return NotImplemented
        return all(a == b for a, b in zip(self.coords, o.coords))

    def __hash__(self):
        return hash(tuple(self.coords))

    def embed(self):
        return self.parent.embed(self)

    def __repr__(self):
        return f"Rel({list(self.coords)})"
